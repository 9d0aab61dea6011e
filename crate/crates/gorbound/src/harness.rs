//! Exhaustive desk-scale certifier.
//!
//! Sweeps the enumerated Gorenstein universe up to a socle-degree cap,
//! runs every structural property, bound family, equivalence and
//! cancellation check on each instance, and aggregates a machine-readable
//! run. Violations are data, not panics: each one carries the offending
//! Hilbert function as a self-contained single-line reproducer.
//!
//! Instances are independent, so the sweep is an order-preserving map
//! (optionally on a rayon pool); the aggregation is a deterministic fold
//! over the ordered outcomes, which keeps `report_json` byte-identical
//! across parallelism widths.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::betti::{BettiDiagram, BettiError};
use crate::bounds::{self, check_all, format_rational, improved_gorenstein_bounds, refined_bounds};
use crate::hilbert::{enumerate_gorenstein, EnumFilter, HilbertFunction};
use crate::pairing::{GorensteinPairing, Side, StepOutcome};

/// What to sweep. Width is deliberately not part of the config: the run
/// must not depend on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub max_socle_degree: usize,
    pub max_entry: Option<u64>,
    pub filter: EnumFilter,
    /// Optional hard cap on the number of instances; a capped run is
    /// flagged incomplete.
    pub instance_cap: Option<usize>,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            max_socle_degree: 12,
            max_entry: None,
            filter: EnumFilter::SiSequences,
            instance_cap: None,
        }
    }
}

/// A failed check with its minimal reproducer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub hilbert: String,
    pub check: String,
    pub detail: String,
}

/// Aggregated census counters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub instances: usize,
    pub pure: usize,
    pub quasi_pure: usize,
    pub refined_sharp: usize,
    pub improved_sharp: usize,
    pub diagonal_terminations: usize,
    pub diagonal_stripped_pure: usize,
    pub parity_unrepairable: usize,
    /// Total cancellation steps exercised, including the ghost-augmented
    /// traces; keeps the step-invariance check non-vacuous.
    pub cancellation_steps: usize,
}

/// Which family gives the tighter bound on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tightness {
    Refined,
    Improved,
    Tie,
}

/// Per-instance tightness comparison between the improved and refined
/// families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub hilbert: String,
    pub e: u64,
    pub classic_lower: String,
    pub classic_upper: String,
    pub improved_lower: String,
    pub improved_upper: String,
    pub refined_lower: String,
    pub refined_upper: String,
    pub lower_tighter: Tightness,
    pub upper_tighter: Tightness,
    pub pure: bool,
    pub refined_sharp: bool,
}

/// Wall-clock per phase; excluded from serialization so reports stay
/// byte-comparable across runs.
#[derive(Debug, Clone, Default)]
pub struct PhaseTimings {
    pub enumerate: Duration,
    pub check: Duration,
    pub aggregate: Duration,
}

/// A complete certification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificationRun {
    pub config: CertifyConfig,
    pub complete: bool,
    pub counts: Counts,
    pub violations: Vec<Violation>,
    pub census: Vec<CensusRow>,
    #[serde(skip)]
    pub timing: PhaseTimings,
}

impl CertificationRun {
    pub fn success(&self) -> bool {
        self.violations.is_empty()
    }

    /// Canonical pretty JSON; byte-identical for identical configs at any
    /// parallelism width.
    pub fn report_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("run serializes");
        s.push('\n');
        s
    }

    /// Census table as CSV with a header row.
    pub fn census_csv(&self) -> String {
        let mut out = String::from(
            "hilbert,e,classic_lower,classic_upper,improved_lower,improved_upper,\
             refined_lower,refined_upper,lower_tighter,upper_tighter,pure,refined_sharp\n",
        );
        for row in &self.census {
            let t = |t: Tightness| match t {
                Tightness::Refined => "refined",
                Tightness::Improved => "improved",
                Tightness::Tie => "tie",
            };
            out.push_str(&format!(
                "\"{}\",{},{},{},{},{},{},{},{},{},{},{}\n",
                row.hilbert,
                row.e,
                row.classic_lower,
                row.classic_upper,
                row.improved_lower,
                row.improved_upper,
                row.refined_lower,
                row.refined_upper,
                t(row.lower_tighter),
                t(row.upper_tighter),
                row.pure,
                row.refined_sharp,
            ));
        }
        out
    }

    /// How often each family is strictly tighter, per side.
    pub fn dominance_counts(&self) -> DominanceCounts {
        let mut d = DominanceCounts::default();
        for row in &self.census {
            match row.lower_tighter {
                Tightness::Refined => d.refined_tighter_lower += 1,
                Tightness::Improved => d.improved_tighter_lower += 1,
                Tightness::Tie => {}
            }
            match row.upper_tighter {
                Tightness::Refined => d.refined_tighter_upper += 1,
                Tightness::Improved => d.improved_tighter_upper += 1,
                Tightness::Tie => {}
            }
        }
        d
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceCounts {
    pub refined_tighter_lower: usize,
    pub refined_tighter_upper: usize,
    pub improved_tighter_lower: usize,
    pub improved_tighter_upper: usize,
}

struct InstanceOutcome {
    violations: Vec<Violation>,
    census: Option<CensusRow>,
    pure: bool,
    quasi_pure: bool,
    refined_sharp: bool,
    improved_sharp: bool,
    diagonal_termination: bool,
    diagonal_stripped_pure: bool,
    parity_unrepairable: bool,
    cancellation_steps: usize,
}

/// Sweeps the configured universe with the requested parallelism width
/// (1 = sequential) and aggregates the outcomes in enumeration order.
pub fn certify(config: &CertifyConfig, parallelism: usize) -> CertificationRun {
    let t0 = Instant::now();
    let mut instances =
        enumerate_gorenstein(config.max_socle_degree, config.max_entry, config.filter);
    let mut complete = true;
    if let Some(cap) = config.instance_cap {
        if instances.len() > cap {
            instances.truncate(cap);
            complete = false;
        }
    }
    let enumerate_time = t0.elapsed();

    let t1 = Instant::now();
    let outcomes: Vec<InstanceOutcome> = if parallelism > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(parallelism)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            instances.par_iter().map(check_instance).collect()
        })
    } else {
        instances.iter().map(check_instance).collect()
    };
    let check_time = t1.elapsed();

    let t2 = Instant::now();
    let mut counts = Counts::default();
    let mut violations = Vec::new();
    let mut census = Vec::new();
    for outcome in outcomes {
        counts.instances += 1;
        counts.pure += outcome.pure as usize;
        counts.quasi_pure += outcome.quasi_pure as usize;
        counts.refined_sharp += outcome.refined_sharp as usize;
        counts.improved_sharp += outcome.improved_sharp as usize;
        counts.diagonal_terminations += outcome.diagonal_termination as usize;
        counts.diagonal_stripped_pure += outcome.diagonal_stripped_pure as usize;
        counts.parity_unrepairable += outcome.parity_unrepairable as usize;
        counts.cancellation_steps += outcome.cancellation_steps;
        violations.extend(outcome.violations);
        census.extend(outcome.census);
    }
    let aggregate_time = t2.elapsed();

    CertificationRun {
        config: config.clone(),
        complete,
        counts,
        violations,
        census,
        timing: PhaseTimings {
            enumerate: enumerate_time,
            check: check_time,
            aggregate: aggregate_time,
        },
    }
}

/// Cross-checks one instance along independent computation paths: entry
/// sum vs cubic-moment formal multiplicity, Hilbert/diagram round trip,
/// and trace extremes vs the third-difference scan.
pub fn oracle_crosscheck(h: &HilbertFunction) -> bool {
    check_instance(h).violations.is_empty()
}

fn big(e: u64) -> BigRational {
    BigRational::from(BigInt::from(e))
}

fn check_instance(h: &HilbertFunction) -> InstanceOutcome {
    let mut out = InstanceOutcome {
        violations: Vec::new(),
        census: None,
        pure: false,
        quasi_pure: false,
        refined_sharp: false,
        improved_sharp: false,
        diagonal_termination: false,
        diagonal_stripped_pure: false,
        parity_unrepairable: false,
        cancellation_steps: 0,
    };
    let fail = |out: &mut InstanceOutcome, check: &str, detail: String| {
        out.violations.push(Violation {
            hilbert: h.to_string(),
            check: check.to_string(),
            detail,
        });
    };

    let td = h.third_difference();
    let c = h.socle_degree() as i64;

    // Moment vanishing of the third difference (0^0 = 1).
    for order in 0..=2u32 {
        let sum: i128 = td
            .deltas()
            .iter()
            .enumerate()
            .map(|(t, &d)| (t as i128).pow(order) * d as i128)
            .sum();
        if sum != 0 {
            fail(
                &mut out,
                "moment_vanishing",
                format!("order {order} residual {sum}"),
            );
        }
    }

    // Antisymmetry around s for symmetric input.
    if h.is_symmetric() {
        for t in 0..=c + 3 {
            if td.at(t) != -td.at(c + 3 - t) {
                fail(&mut out, "antisymmetry", format!("degree {t}"));
                break;
            }
        }
    }

    // Socle identity and the two first-degree scans.
    if td.at(c + 3) != -(h.value_at(c) as i64) {
        fail(
            &mut out,
            "socle_delta",
            format!("D3h(c+3) = {}", td.at(c + 3)),
        );
    }
    let refined = match h.refined_invariants() {
        Ok(z) => z,
        Err(e) => {
            fail(&mut out, "refined_invariants", e.to_string());
            return out;
        }
    };
    if refined.min_negative != h.initial_degree() {
        fail(
            &mut out,
            "initial_degree_scan",
            format!(
                "n1 = {} vs m1 = {}",
                refined.min_negative,
                h.initial_degree()
            ),
        );
    }

    // Round trip through the third difference.
    match td.reconstruct() {
        Ok(back) if &back == h => {}
        Ok(back) => fail(&mut out, "difference_roundtrip", back.to_string()),
        Err(e) => fail(&mut out, "difference_roundtrip", e.to_string()),
    }

    let e = h.multiplicity();

    // Generic diagram; parity failures are logged, not violations.
    let diagram = match BettiDiagram::generic_from_hilbert(h) {
        Ok(d) => d,
        Err(BettiError::ParityUnrepairable { .. }) => {
            out.parity_unrepairable = true;
            return out;
        }
        Err(err) => {
            fail(&mut out, "generic_diagram", err.to_string());
            return out;
        }
    };

    out.pure = diagram.is_pure();
    out.quasi_pure = diagram.is_quasi_pure();

    // Diagram round trip and formal multiplicity.
    match diagram.hilbert_function() {
        Ok(back) if &back == h => {}
        Ok(back) => fail(&mut out, "diagram_roundtrip", back.to_string()),
        Err(err) => fail(&mut out, "diagram_roundtrip", err.to_string()),
    }
    match diagram.formal_multiplicity() {
        Ok(fm) if fm == big(e) => {}
        Ok(fm) => fail(&mut out, "formal_multiplicity", format_rational(&fm)),
        Err(err) => fail(&mut out, "formal_multiplicity", err.to_string()),
    }

    // Degree-extreme remarks: n1 = m1, n2 >= m2, N1 <= M1, N2 = M2.
    let extremes = match diagram.extremes() {
        Ok(x) => x,
        Err(err) => {
            fail(&mut out, "extremes", err.to_string());
            return out;
        }
    };
    if refined.min_negative != extremes.min[0]
        || refined.min_positive < extremes.min[1]
        || refined.max_negative > extremes.max[0]
        || refined.max_positive != extremes.max[1]
    {
        fail(
            &mut out,
            "extreme_remarks",
            format!(
                "refined {refined} vs m = {:?}, M = {:?}",
                extremes.min, extremes.max
            ),
        );
    }

    // Pairing invariants and the dual-zero property of the degree matrix.
    let pairing = match GorensteinPairing::from_diagram(&diagram) {
        Ok(p) => p,
        Err(err) => {
            fail(&mut out, "pairing_invariants", err.to_string());
            return out;
        }
    };
    {
        let s = pairing.socle_shift();
        let qs = pairing.generators();
        let ps = pairing.syzygies();
        let dual_ok = qs.iter().zip(&ps).all(|(&q, &p)| p + q == s);
        let minimal_ok = match (qs.first(), ps.last()) {
            (Some(&q1), Some(&pn)) => q1 >= 1 && pn > q1,
            _ => false,
        };
        if !dual_ok || !minimal_ok || qs.len() % 2 == 0 {
            fail(&mut out, "pairing_invariants", format!("{pairing}"));
        }
        let zeros = pairing.degree_matrix().nondiagonal_zeros();
        if zeros.len() % 2 != 0 || !zeros.iter().all(|&(i, j)| zeros.contains(&(j, i))) {
            fail(&mut out, "dual_zeros", format!("{zeros:?}"));
        }
    }

    // Cancellation traces on both sides, on the generic pairing and on a
    // deterministically ghost-augmented copy (when one fits); every step
    // must preserve the formal multiplicity and the Hilbert function, and
    // the terminal extreme must equal the scan invariant.
    let mut variants = vec![pairing.clone()];
    let ghost_degree = refined.min_negative + 1;
    if ghost_degree <= pairing.socle_shift() - ghost_degree {
        if let Ok(augmented) = pairing.with_ghost_pair(ghost_degree) {
            variants.push(augmented);
        }
    }
    for (variant_idx, gp) in variants.iter().enumerate() {
        for side in [Side::Min, Side::Max] {
            let expected = match side {
                Side::Min => refined.min_positive,
                Side::Max => refined.max_negative,
            };
            let mut current = gp.clone();
            loop {
                match current.cancel_step(side) {
                    Ok(StepOutcome::Cancelled { next, .. }) => {
                        out.cancellation_steps += 1;
                        let before = current.to_diagram();
                        let after = next.to_diagram();
                        match (before.formal_multiplicity(), after.formal_multiplicity()) {
                            (Ok(a), Ok(b)) if a == b && a == big(e) => {}
                            (a, b) => fail(
                                &mut out,
                                "cancellation_invariance",
                                format!("side {side}: {a:?} vs {b:?}"),
                            ),
                        }
                        if after.hilbert_function().ok().as_ref() != Some(h) {
                            fail(
                                &mut out,
                                "cancellation_invariance",
                                format!("side {side}: Hilbert function changed"),
                            );
                        }
                        current = next;
                    }
                    Ok(StepOutcome::NoMatch { extreme }) => {
                        if extreme != expected {
                            fail(
                                &mut out,
                                "trace_extremes",
                                format!("side {side}: {extreme} vs scan {expected}"),
                            );
                        }
                        break;
                    }
                    Ok(StepOutcome::DiagonalOnly { central }) => {
                        if variant_idx == 0 && side == Side::Min {
                            out.diagonal_termination = true;
                        }
                        let trace = gp.cancel_to_extreme(side).expect("nonempty pairing");
                        if trace.extreme() != Some(expected) {
                            fail(
                                &mut out,
                                "trace_extremes",
                                format!("side {side}: {:?} vs scan {expected}", trace.extreme()),
                            );
                        }
                        if 2 * central != gp.socle_shift() {
                            fail(
                                &mut out,
                                "trace_extremes",
                                format!("central {central} off-center"),
                            );
                        }
                        if !trace.final_pairing.to_diagram().is_quasi_pure() {
                            fail(
                                &mut out,
                                "diagonal_quasi_pure",
                                format!("side {side}: {}", trace.final_pairing),
                            );
                        }
                        if variant_idx == 0 && side == Side::Min {
                            out.diagonal_stripped_pure = trace
                                .central_stripped_diagram()
                                .map(|d| d.is_pure())
                                .unwrap_or(false);
                        }
                        break;
                    }
                    Err(err) => {
                        fail(&mut out, "trace_extremes", format!("side {side}: {err}"));
                        break;
                    }
                }
            }
        }
    }

    // Bound families, nesting chain, and both equivalence corollaries.
    match check_all(h, None) {
        Ok(report) => {
            if !report.classic_lower.holds || !report.classic_upper.holds {
                fail(&mut out, "classic_holds", report.csv_row());
            }
            match (&report.improved_lower, &report.improved_upper) {
                (Some(lo), Some(hi)) => {
                    if !lo.holds || !hi.holds {
                        fail(&mut out, "improved_holds", report.csv_row());
                    }
                    out.improved_sharp = lo.sharp && hi.sharp;
                }
                _ => fail(
                    &mut out,
                    "improved_holds",
                    "not applicable on Gorenstein input".into(),
                ),
            }
            if !report.refined_lower.holds || !report.refined_upper.holds {
                fail(&mut out, "refined_holds", report.csv_row());
            }

            let classic = bounds::classic_bounds(extremes.min, extremes.max);
            let improved = improved_gorenstein_bounds(extremes.min, extremes.max);
            let refined_pair = refined_bounds(&refined);
            let e_rat = big(e);
            let nesting_ok = classic.lower <= refined_pair.lower
                && refined_pair.lower <= e_rat
                && e_rat <= refined_pair.upper
                && refined_pair.upper <= classic.upper;
            if !nesting_ok {
                fail(
                    &mut out,
                    "nesting",
                    format!("{classic} vs {refined_pair} vs e = {e}"),
                );
            }
            let improved_nested = classic.lower <= improved.lower
                && improved.lower <= e_rat
                && e_rat <= improved.upper
                && improved.upper <= classic.upper;
            if !improved_nested {
                fail(
                    &mut out,
                    "improved_holds",
                    format!("{improved} not nested at e = {e}"),
                );
            }

            out.census = Some(CensusRow {
                hilbert: h.to_string(),
                e,
                classic_lower: format_rational(&classic.lower),
                classic_upper: format_rational(&classic.upper),
                improved_lower: format_rational(&improved.lower),
                improved_upper: format_rational(&improved.upper),
                refined_lower: format_rational(&refined_pair.lower),
                refined_upper: format_rational(&refined_pair.upper),
                lower_tighter: match refined_pair.lower.cmp(&improved.lower) {
                    std::cmp::Ordering::Greater => Tightness::Refined,
                    std::cmp::Ordering::Less => Tightness::Improved,
                    std::cmp::Ordering::Equal => Tightness::Tie,
                },
                upper_tighter: match refined_pair.upper.cmp(&improved.upper) {
                    std::cmp::Ordering::Less => Tightness::Refined,
                    std::cmp::Ordering::Greater => Tightness::Improved,
                    std::cmp::Ordering::Equal => Tightness::Tie,
                },
                pure: out.pure,
                refined_sharp: false, // filled below
            });
        }
        Err(err) => fail(&mut out, "bounds_report", err.to_string()),
    }

    match bounds::purity_sharpness(&diagram, e) {
        Ok(v) => {
            if v.pure && (!v.lower_sharp || !v.upper_sharp) {
                fail(&mut out, "purity_equivalence", format!("{v:?}"));
            }
        }
        Err(err) => fail(&mut out, "purity_equivalence", err.to_string()),
    }
    match bounds::sharpness_classify(h) {
        Ok(v) => {
            out.refined_sharp = v.all();
            if let Some(row) = out.census.as_mut() {
                row.refined_sharp = v.all();
            }
        }
        Err(err) => fail(&mut out, "sharpness_equivalence", err.to_string()),
    }

    out
}
