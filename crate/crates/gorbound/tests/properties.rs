//! Standalone property suites over randomized and exhaustive instance
//! sets: moment vanishing, third-difference antisymmetry, agreement of
//! the two initial-degree scans, the dual-zero pairing of the degree
//! matrix, and the Hilbert/diagram round trips. Randomized suites draw
//! 10,000 cases each; the exhaustive suites sweep every enumerated
//! Gorenstein Hilbert function up to socle degree 10.

use std::sync::OnceLock;

use proptest::prelude::*;

use gorbound::betti::BettiDiagram;
use gorbound::bounds;
use gorbound::hilbert::{
    enumerate_gorenstein, macaulay_bound, polynomial_ring_dimension, EnumFilter, HilbertFunction,
};
use gorbound::pairing::{GorensteinPairing, Side, StepOutcome};

fn universe() -> &'static [HilbertFunction] {
    static UNIVERSE: OnceLock<Vec<HilbertFunction>> = OnceLock::new();
    UNIVERSE.get_or_init(|| enumerate_gorenstein(12, None, EnumFilter::SiSequences))
}

/// Any valid Hilbert function, symmetric or not: each value is drawn as a
/// fraction of the room the caps leave, so construction never fails and
/// shrinking stays meaningful.
fn arb_valid_hilbert() -> impl Strategy<Value = HilbertFunction> {
    (0usize..=12, proptest::collection::vec(0u64..=100, 12)).prop_map(|(c, ratios)| {
        let mut values: Vec<u64> = vec![1];
        for t in 1..=c {
            let mut cap = polynomial_ring_dimension(t);
            if t >= 2 {
                cap = cap.min(macaulay_bound(values[t - 1], t as u64 - 1));
            }
            let v = 1 + ratios[t - 1] * (cap - 1) / 100;
            values.push(v);
        }
        HilbertFunction::from_values(values).expect("capped construction is always valid")
    })
}

/// A Gorenstein Hilbert function sampled from the enumerated universe.
fn arb_gorenstein() -> impl Strategy<Value = HilbertFunction> {
    (0..universe().len()).prop_map(|i| universe()[i].clone())
}

fn moments_vanish(h: &HilbertFunction) -> bool {
    let td = h.third_difference();
    (0..=2u32).all(|order| {
        td.deltas()
            .iter()
            .enumerate()
            .map(|(t, &d)| (t as i128).pow(order) * d as i128)
            .sum::<i128>()
            == 0
    })
}

fn antisymmetric(h: &HilbertFunction) -> bool {
    let td = h.third_difference();
    let s = h.socle_shift();
    (0..=s).all(|t| td.at(t) == -td.at(s - t))
}

fn dual_zeros_paired(gp: &GorensteinPairing) -> bool {
    let zeros = gp.degree_matrix().nondiagonal_zeros();
    zeros.len().is_multiple_of(2) && zeros.iter().all(|&(i, j)| zeros.contains(&(j, i)))
}

/// Largest-possible deterministic ghost for `ratio` in 0..=100, or None
/// when the pairing has no room for one.
fn ghost_degree(gp: &GorensteinPairing, ratio: u64) -> Option<i64> {
    let q1 = *gp.generators().first()?;
    let s = gp.socle_shift();
    let span = s - 2 * q1;
    if span < 0 {
        return None;
    }
    Some(q1 + (ratio as i64 * span) / 100)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn moment_vanishing_randomized(h in arb_valid_hilbert()) {
        prop_assert!(moments_vanish(&h), "moments fail for {h}");
    }

    #[test]
    fn antisymmetry_randomized(h in arb_gorenstein()) {
        prop_assert!(antisymmetric(&h), "antisymmetry fails for {h}");
    }

    #[test]
    fn initial_degree_scans_agree_randomized(h in arb_valid_hilbert()) {
        let z = h.refined_invariants().unwrap();
        prop_assert_eq!(z.min_negative, h.initial_degree(), "scan mismatch for {}", h);
        // Socle identity along the way.
        let td = h.third_difference();
        let c = h.socle_degree() as i64;
        prop_assert_eq!(td.at(c + 3), -(h.value_at(c) as i64));
    }

    #[test]
    fn dual_zero_pairing_randomized(h in arb_gorenstein(), ratio in 0u64..=100, ghosts in 0usize..3) {
        let d = BettiDiagram::generic_from_hilbert(&h).unwrap();
        let mut gp = GorensteinPairing::from_diagram(&d).unwrap();
        for _ in 0..ghosts {
            match ghost_degree(&gp, ratio).and_then(|g| gp.with_ghost_pair(g).ok()) {
                Some(augmented) => gp = augmented,
                None => break,
            }
        }
        prop_assert!(dual_zeros_paired(&gp), "dual zeros unpaired for {}", gp);
        // The matrix is symmetric and weakly increases up and left.
        let dm = gp.degree_matrix();
        for i in 0..dm.size() {
            for j in 0..dm.size() {
                prop_assert_eq!(dm.entry(i, j), dm.entry(j, i));
                if i > 0 {
                    prop_assert!(dm.entry(i - 1, j) >= dm.entry(i, j));
                }
                if j > 0 {
                    prop_assert!(dm.entry(i, j - 1) >= dm.entry(i, j));
                }
            }
        }
    }

    #[test]
    fn roundtrips_randomized(h in arb_gorenstein()) {
        prop_assert_eq!(&h.third_difference().reconstruct().unwrap(), &h);
        let d = BettiDiagram::generic_from_hilbert(&h).unwrap();
        prop_assert_eq!(&d.hilbert_function().unwrap(), &h);
        prop_assert_eq!(&GorensteinPairing::from_diagram(&d).unwrap().to_diagram(), &d);
    }

    #[test]
    fn cancellation_invariants_randomized(h in arb_gorenstein(), ratio in 0u64..=100, ghosts in 0usize..3) {
        let d = BettiDiagram::generic_from_hilbert(&h).unwrap();
        let e = d.formal_multiplicity().unwrap();
        let mut gp = GorensteinPairing::from_diagram(&d).unwrap();
        for _ in 0..ghosts {
            match ghost_degree(&gp, ratio).and_then(|g| gp.with_ghost_pair(g).ok()) {
                Some(augmented) => gp = augmented,
                None => break,
            }
        }
        let z = h.refined_invariants().unwrap();
        for side in [Side::Min, Side::Max] {
            // Every step preserves the formal multiplicity and the
            // Hilbert function; the terminal extreme equals the scan.
            let mut current = gp.clone();
            while let StepOutcome::Cancelled { next, .. } = current.cancel_step(side).unwrap() {
                let after = next.to_diagram();
                prop_assert_eq!(after.formal_multiplicity().unwrap(), e.clone());
                prop_assert_eq!(&after.hilbert_function().unwrap(), &h);
                current = next;
            }
            let trace = gp.cancel_to_extreme(side).unwrap();
            let expected = match side {
                Side::Min => z.min_positive,
                Side::Max => z.max_negative,
            };
            prop_assert_eq!(trace.extreme(), Some(expected), "side {} of {}", side, h);
        }
    }
}

#[test]
fn moment_vanishing_exhaustive() {
    for h in universe() {
        assert!(moments_vanish(h), "moments fail for {h}");
    }
}

#[test]
fn antisymmetry_exhaustive() {
    for h in universe() {
        assert!(antisymmetric(h), "antisymmetry fails for {h}");
    }
}

#[test]
fn initial_degree_scans_agree_exhaustive() {
    for h in universe() {
        assert_eq!(
            h.refined_invariants().unwrap().min_negative,
            h.initial_degree()
        );
    }
}

#[test]
fn dual_zero_pairing_exhaustive() {
    for h in universe() {
        let d = BettiDiagram::generic_from_hilbert(h).unwrap();
        let gp = GorensteinPairing::from_diagram(&d).unwrap();
        assert!(dual_zeros_paired(&gp), "dual zeros unpaired for {gp}");
        // Generic pairings satisfy the strict minimality inequality.
        let q1 = gp.generators()[0];
        let p_min = gp.socle_shift() - gp.generators().last().unwrap();
        assert!(p_min > q1, "strict minimality fails for {gp}");
        assert_eq!(gp.len() % 2, 1, "even generator count for {gp}");
    }
}

#[test]
fn roundtrips_exhaustive() {
    for h in universe() {
        assert_eq!(&h.third_difference().reconstruct().unwrap(), h);
        let d = BettiDiagram::generic_from_hilbert(h).unwrap();
        assert_eq!(&d.hilbert_function().unwrap(), h);
    }
}

#[test]
fn purity_implies_classic_sharpness_exhaustive() {
    for h in universe() {
        let d = BettiDiagram::generic_from_hilbert(h).unwrap();
        let verdict = bounds::purity_sharpness(&d, h.multiplicity())
            .unwrap_or_else(|e| panic!("equivalence violated for {h}: {e}"));
        if verdict.pure {
            assert!(verdict.lower_sharp && verdict.upper_sharp);
        }
    }
}
