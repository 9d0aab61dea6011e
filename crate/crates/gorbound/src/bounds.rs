//! The three multiplicity-bound families and the sharpness
//! characterizations, all in exact rational arithmetic.
//!
//! Every family maps the degree data of an instance to a lower and an
//! upper bound on the multiplicity `e`:
//!
//! * `classic`  — `m1*m2*m3/6 <= e <= M1*M2*M3/6`, the original
//!   codimension-three multiplicity bounds from the resolution extremes;
//! * `improved` — the Gorenstein strengthening with correction terms
//!   `+(M3-M2)^2 (M2-m2+M1-m1)/6` below and `-M3 (M2-m2+M1-m1)/12`
//!   above; it needs `m3 = M3` (Gorenstein/level shape);
//! * `refined`  — `n1*n2*(c+3)/6 <= e <= N1*N2*(c+3)/6`, the bounds from
//!   the cancellation-refined invariants read off the Hilbert function.
//!
//! The families are interchangeable strategies: each implements
//! [`BoundFamily`] and is registered by name, so callers can evaluate one
//! or all of them uniformly. Sharpness is an exact equality test, which
//! is why nothing here ever touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::{BettiDiagram, BettiError, DegreeExtremes};
use crate::hilbert::{HilbertError, HilbertFunction, RefinedInvariants};
use crate::pairing::PairingError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error("diagram reconstructs Hilbert function {found}, expected {expected}")]
    DiagramMismatch { expected: String, found: String },
    #[error("generic diagram construction needs a symmetric Hilbert function; supply a diagram for level input")]
    LevelInputNeedsDiagram,
    #[error("equivalence of {context} conditions violated: {flags:?}")]
    EquivalenceViolation {
        context: &'static str,
        flags: Vec<bool>,
    },
}

/// Renders an exact rational as `a/b` in lowest terms, or plain `a` when
/// integral. The canonical form for every serialized bound value.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ratio(numer: BigInt, denom: i64) -> BigRational {
    BigRational::new(numer, BigInt::from(denom))
}

/// Exact lower/upper pair produced by a bound family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: BigRational,
    pub upper: BigRational,
}

/// Degree data every family reads: the resolution extremes and the
/// refined invariants of the Hilbert function.
#[derive(Debug, Clone)]
pub struct BoundInputs {
    pub extremes: DegreeExtremes,
    pub refined: RefinedInvariants,
}

/// A multiplicity-bound strategy, selectable by name at runtime.
pub trait BoundFamily: Sync {
    fn name(&self) -> &'static str;
    /// Whether the family is defined on this instance.
    fn applies(&self, inputs: &BoundInputs) -> bool {
        let _ = inputs;
        true
    }
    fn evaluate(&self, inputs: &BoundInputs) -> BoundPair;
}

/// Classic multiplicity bounds from the resolution degree extremes.
pub fn classic_bounds(min: [i64; 3], max: [i64; 3]) -> BoundPair {
    let prod = |d: [i64; 3]| BigInt::from(d[0]) * BigInt::from(d[1]) * BigInt::from(d[2]);
    BoundPair {
        lower: ratio(prod(min), 6),
        upper: ratio(prod(max), 6),
    }
}

/// The strengthened Gorenstein bounds with the degree-spread correction
/// terms. Assumes `m3 = M3`.
pub fn improved_gorenstein_bounds(min: [i64; 3], max: [i64; 3]) -> BoundPair {
    let classic = classic_bounds(min, max);
    let spread = BigInt::from(max[1] - min[1] + max[0] - min[0]);
    let gap = BigInt::from(max[2] - max[1]);
    BoundPair {
        lower: classic.lower + ratio(gap.clone() * gap * spread.clone(), 6),
        upper: classic.upper - ratio(BigInt::from(max[2]) * spread, 12),
    }
}

/// Refined bounds from the Hilbert-function invariants.
pub fn refined_bounds(z: &RefinedInvariants) -> BoundPair {
    let s = z.socle_shift;
    BoundPair {
        lower: ratio(
            BigInt::from(z.min_negative) * BigInt::from(z.min_positive) * BigInt::from(s),
            6,
        ),
        upper: ratio(
            BigInt::from(z.max_negative) * BigInt::from(z.max_positive) * BigInt::from(s),
            6,
        ),
    }
}

pub struct ClassicFamily;
pub struct ImprovedFamily;
pub struct RefinedFamily;

impl BoundFamily for ClassicFamily {
    fn name(&self) -> &'static str {
        "classic"
    }
    fn evaluate(&self, inputs: &BoundInputs) -> BoundPair {
        classic_bounds(inputs.extremes.min, inputs.extremes.max)
    }
}

impl BoundFamily for ImprovedFamily {
    fn name(&self) -> &'static str {
        "improved"
    }
    fn applies(&self, inputs: &BoundInputs) -> bool {
        inputs.extremes.min[2] == inputs.extremes.max[2]
    }
    fn evaluate(&self, inputs: &BoundInputs) -> BoundPair {
        improved_gorenstein_bounds(inputs.extremes.min, inputs.extremes.max)
    }
}

impl BoundFamily for RefinedFamily {
    fn name(&self) -> &'static str {
        "refined"
    }
    fn evaluate(&self, inputs: &BoundInputs) -> BoundPair {
        refined_bounds(&inputs.refined)
    }
}

/// The registered bound families, in report order.
pub fn families() -> &'static [&'static dyn BoundFamily] {
    static FAMILIES: [&dyn BoundFamily; 3] = [&ClassicFamily, &ImprovedFamily, &RefinedFamily];
    &FAMILIES
}

pub fn family_by_name(name: &str) -> Option<&'static dyn BoundFamily> {
    families().iter().copied().find(|f| f.name() == name)
}

/// Verdict on a single bound: its exact value, whether it brackets the
/// multiplicity, and whether it attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub value: String,
    pub holds: bool,
    pub sharp: bool,
}

impl BoundVerdict {
    fn lower(value: &BigRational, e: &BigRational) -> Self {
        BoundVerdict {
            value: format_rational(value),
            holds: value <= e,
            sharp: value == e,
        }
    }

    fn upper(value: &BigRational, e: &BigRational) -> Self {
        BoundVerdict {
            value: format_rational(value),
            holds: value >= e,
            sharp: value == e,
        }
    }

    /// Three-state flag for CSV rows.
    pub fn flag(&self) -> &'static str {
        match (self.holds, self.sharp) {
            (_, true) => "sharp",
            (true, false) => "holds",
            (false, _) => "violated",
        }
    }
}

/// Echo of the degree data a report was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInputsEcho {
    pub m: [i64; 3],
    #[serde(rename = "M")]
    pub max: [i64; 3],
    pub n1: i64,
    pub n2: i64,
    #[serde(rename = "N1")]
    pub big_n1: i64,
    #[serde(rename = "N2")]
    pub big_n2: i64,
    pub c: usize,
}

/// All six bound values with their verdicts for one instance. The
/// improved family is absent when the instance is not of Gorenstein/level
/// shape (`m3 != M3`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub hilbert: String,
    pub e: u64,
    pub inputs: BoundInputsEcho,
    pub classic_lower: BoundVerdict,
    pub classic_upper: BoundVerdict,
    pub improved_lower: Option<BoundVerdict>,
    pub improved_upper: Option<BoundVerdict>,
    pub refined_lower: BoundVerdict,
    pub refined_upper: BoundVerdict,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        [
            Some(&self.classic_lower),
            Some(&self.classic_upper),
            self.improved_lower.as_ref(),
            self.improved_upper.as_ref(),
            Some(&self.refined_lower),
            Some(&self.refined_upper),
        ]
        .into_iter()
        .flatten()
        .all(|v| v.holds)
    }

    /// One CSV row: quoted Hilbert function, multiplicity, the six bound
    /// values as exact fractions, then the six three-state flags. Absent
    /// improved bounds render as `n/a`.
    pub fn csv_row(&self) -> String {
        let opt_value = |v: &Option<BoundVerdict>| {
            v.as_ref()
                .map(|v| v.value.clone())
                .unwrap_or_else(|| "n/a".into())
        };
        let opt_flag = |v: &Option<BoundVerdict>| v.as_ref().map(|v| v.flag()).unwrap_or("n/a");
        format!(
            "\"{}\",{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.hilbert,
            self.e,
            self.classic_lower.value,
            self.classic_upper.value,
            opt_value(&self.improved_lower),
            opt_value(&self.improved_upper),
            self.refined_lower.value,
            self.refined_upper.value,
            self.classic_lower.flag(),
            self.classic_upper.flag(),
            opt_flag(&self.improved_lower),
            opt_flag(&self.improved_upper),
            self.refined_lower.flag(),
            self.refined_upper.flag(),
        )
    }
}

/// Evaluates every registered bound family against the multiplicity.
///
/// Without a diagram the generic Gorenstein diagram of `h` is used (so
/// `h` must be symmetric). With a diagram — the route for level input —
/// the diagram's Hilbert function must reconstruct to `h`, and the
/// verdicts are reported, not asserted: the refined bounds are a
/// conjecture outside the Gorenstein case.
pub fn check_all(
    h: &HilbertFunction,
    diagram: Option<&BettiDiagram>,
) -> Result<BoundsReport, BoundsError> {
    let owned;
    let d = match diagram {
        Some(d) => {
            let found = d.hilbert_function()?;
            if &found != h {
                return Err(BoundsError::DiagramMismatch {
                    expected: h.to_string(),
                    found: found.to_string(),
                });
            }
            d
        }
        None => {
            if !h.is_symmetric() {
                return Err(BoundsError::LevelInputNeedsDiagram);
            }
            owned = BettiDiagram::generic_from_hilbert(h)?;
            &owned
        }
    };
    let extremes = d.extremes()?;
    let refined = h.refined_invariants()?;
    let inputs = BoundInputs { extremes, refined };
    let e = BigRational::from(BigInt::from(h.multiplicity()));

    let classic = ClassicFamily.evaluate(&inputs);
    let improved = ImprovedFamily
        .applies(&inputs)
        .then(|| ImprovedFamily.evaluate(&inputs));
    let refined_pair = RefinedFamily.evaluate(&inputs);

    Ok(BoundsReport {
        hilbert: h.to_string(),
        e: h.multiplicity(),
        inputs: BoundInputsEcho {
            m: extremes.min,
            max: extremes.max,
            n1: refined.min_negative,
            n2: refined.min_positive,
            big_n1: refined.max_negative,
            big_n2: refined.max_positive,
            c: h.socle_degree(),
        },
        classic_lower: BoundVerdict::lower(&classic.lower, &e),
        classic_upper: BoundVerdict::upper(&classic.upper, &e),
        improved_lower: improved.as_ref().map(|p| BoundVerdict::lower(&p.lower, &e)),
        improved_upper: improved.as_ref().map(|p| BoundVerdict::upper(&p.upper, &e)),
        refined_lower: BoundVerdict::lower(&refined_pair.lower, &e),
        refined_upper: BoundVerdict::upper(&refined_pair.upper, &e),
    })
}

/// The three equivalent sharpness conditions tied to purity: the classic
/// lower bound attains `e`, the classic upper bound attains `e`, the
/// resolution is pure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityVerdict {
    pub lower_sharp: bool,
    pub upper_sharp: bool,
    pub pure: bool,
}

/// Evaluates the three purity-sharpness conditions independently and
/// insists on their equivalence; a mixed outcome would falsify the
/// characterization and surfaces as an error.
pub fn purity_sharpness(d: &BettiDiagram, e: u64) -> Result<PurityVerdict, BoundsError> {
    let extremes = d.extremes()?;
    let classic = classic_bounds(extremes.min, extremes.max);
    let e = BigRational::from(BigInt::from(e));
    let verdict = PurityVerdict {
        lower_sharp: classic.lower == e,
        upper_sharp: classic.upper == e,
        pure: d.is_pure(),
    };
    if verdict.lower_sharp != verdict.pure || verdict.upper_sharp != verdict.pure {
        return Err(BoundsError::EquivalenceViolation {
            context: "purity-sharpness",
            flags: vec![verdict.lower_sharp, verdict.upper_sharp, verdict.pure],
        });
    }
    Ok(verdict)
}

/// The four equivalent characterizations of refined-bound sharpness for a
/// symmetric (Gorenstein-shaped) Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessVerdict {
    /// `e = n1*n2*(c+3)/6`.
    pub lower_sharp: bool,
    /// `e = N1*N2*(c+3)/6`.
    pub upper_sharp: bool,
    /// `n1 = N1` and `n2 = N2`: the diagram cancels to a pure one.
    pub extremes_coincide: bool,
    /// Exactly one negative and one positive third-difference degree in
    /// `1..=c+2`, with opposite values and degrees summing to `c+3`.
    pub single_dual_pair: bool,
    pub equivalence_ok: bool,
}

impl SharpnessVerdict {
    pub fn all(&self) -> bool {
        self.lower_sharp && self.upper_sharp && self.extremes_coincide && self.single_dual_pair
    }
}

/// Classifies refined-bound sharpness through all four characterizations
/// and insists on their equivalence.
pub fn sharpness_classify(h: &HilbertFunction) -> Result<SharpnessVerdict, BoundsError> {
    let z = h.refined_invariants()?;
    let pair = refined_bounds(&z);
    let e = BigRational::from(BigInt::from(h.multiplicity()));
    let lower_sharp = pair.lower == e;
    let upper_sharp = pair.upper == e;
    let extremes_coincide = z.min_negative == z.max_negative && z.min_positive == z.max_positive;

    let td = h.third_difference();
    let c = h.socle_degree() as i64;
    let negatives: Vec<i64> = (1..=c + 2).filter(|&t| td.at(t) < 0).collect();
    let positives: Vec<i64> = (1..=c + 2).filter(|&t| td.at(t) > 0).collect();
    let single_dual_pair = match (negatives.as_slice(), positives.as_slice()) {
        ([t1], [t2]) => -td.at(*t1) == td.at(*t2) && t1 + t2 == c + 3,
        _ => false,
    };

    let flags = [
        lower_sharp,
        upper_sharp,
        extremes_coincide,
        single_dual_pair,
    ];
    let equivalence_ok = flags.iter().all(|&f| f) || flags.iter().all(|&f| !f);
    let verdict = SharpnessVerdict {
        lower_sharp,
        upper_sharp,
        extremes_coincide,
        single_dual_pair,
        equivalence_ok,
    };
    if !equivalence_ok {
        return Err(BoundsError::EquivalenceViolation {
            context: "refined-sharpness",
            flags: flags.to_vec(),
        });
    }
    Ok(verdict)
}

impl fmt::Display for BoundPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_rational(&self.lower),
            format_rational(&self.upper)
        )
    }
}

/// True when the rational is a nonnegative integer; every formally
/// computed multiplicity of a consistent diagram must be.
pub fn is_nonnegative_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_negative()
}
