//! The self-dual generator/syzygy pairing of a codimension-three
//! Gorenstein resolution and the formal-cancellation procedure on it.
//!
//! A Gorenstein diagram is determined by its socle shift `s` and the
//! multiset `Q = (q_1 <= ... <= q_n)` of generator degrees: the syzygy
//! degrees are `P = (p_1 >= ... >= p_n)` with `p_i = s - q_i`, so
//! `p_i + q_i = s` throughout. The degree matrix `dB[i][j] = p_j - q_i`
//! is the degree pattern of the skew-symmetric middle map; a vanishing
//! non-diagonal entry marks a numerically redundant generator/syzygy pair
//! whose dual partner also vanishes, and the four summands of degrees
//! `{d, s-d}` can be removed together, leaving the Betti data of a
//! Gorenstein algebra with two generators fewer.
//!
//! Repeating this on the extreme degree (smallest syzygy, or dually the
//! largest generator) terminates in one of two ways: no match for the
//! extreme degree, which is then the refined invariant itself; or a
//! diagonal-only match at the central degree `s/2` with multiplicity one
//! on each side, where one further purely numerical cancellation exposes
//! the refined invariant even though no algebra with an even generator
//! count exists.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::BettiDiagram;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairingError {
    #[error("generator degree {0} is smaller than 1")]
    GeneratorDegreeTooSmall(i64),
    #[error("minimal syzygy degree {min_syzygy} does not exceed the minimal generator degree {min_generator}")]
    MinimalityViolation { min_generator: i64, min_syzygy: i64 },
    #[error("pairing is empty")]
    EmptyPairing,
    #[error("third module is supported in more than one degree")]
    MultipleSocleDegrees,
    #[error("diagram is not of Gorenstein shape: {reason}")]
    NotGorensteinShape { reason: String },
}

/// Which extreme the cancellation procedure chases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Start from the smallest syzygy degree; the surviving extreme is
    /// the refined invariant `n_2`.
    Min,
    /// Start from the largest generator degree; the surviving extreme is
    /// the refined invariant `N_1`.
    Max,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Min => write!(f, "min"),
            Side::Max => write!(f, "max"),
        }
    }
}

/// Socle shift plus the matched generator/syzygy degree multisets. Only
/// the generators are stored; syzygies are derived through `p = s - q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinPairing {
    socle_shift: i64,
    /// Nondecreasing.
    generators: Vec<i64>,
}

impl GorensteinPairing {
    /// Validates and sorts the generator degrees. An empty pairing is a
    /// legal degenerate value (it arises after the final numerical
    /// cancellation); a nonempty one must have every generator degree at
    /// least 1 and no syzygy degree below the smallest generator degree.
    /// A minimal resolution satisfies the strict inequality `min P >
    /// min Q`; equality marks a redundant ghost configuration, which is
    /// exactly what the cancellation engine consumes, so ties are
    /// accepted here.
    pub fn new(socle_shift: i64, mut generators: Vec<i64>) -> Result<Self, PairingError> {
        generators.sort_unstable();
        if let (Some(&q_min), Some(&q_max)) = (generators.first(), generators.last()) {
            if q_min < 1 {
                return Err(PairingError::GeneratorDegreeTooSmall(q_min));
            }
            let p_min = socle_shift - q_max;
            if p_min < q_min {
                return Err(PairingError::MinimalityViolation {
                    min_generator: q_min,
                    min_syzygy: p_min,
                });
            }
        }
        Ok(GorensteinPairing {
            socle_shift,
            generators,
        })
    }

    /// Reads the pairing off a diagram whose third module is `R(-s)` with
    /// multiplicity one and whose first and second columns are dual:
    /// `b_{1,t} = b_{2,s-t}` for every degree.
    pub fn from_diagram(d: &BettiDiagram) -> Result<Self, PairingError> {
        let socle: Vec<(i64, u64)> = d.column(3).collect();
        if socle.len() > 1 {
            return Err(PairingError::MultipleSocleDegrees);
        }
        let (s, socle_mult) = *socle.first().ok_or(PairingError::NotGorensteinShape {
            reason: "no entry at homological index 3".into(),
        })?;
        if socle_mult != 1 {
            return Err(PairingError::NotGorensteinShape {
                reason: format!("multiplicity {socle_mult} at the last twist"),
            });
        }
        let mut degrees: Vec<i64> = d.column(1).map(|(t, _)| t).collect();
        degrees.extend(d.column(2).map(|(t, _)| s - t));
        degrees.sort_unstable();
        degrees.dedup();
        for t in degrees {
            if d.entry(1, t) != d.entry(2, s - t) {
                return Err(PairingError::NotGorensteinShape {
                    reason: format!(
                        "self-duality fails at degree {t}: b1 = {}, b2 at {} = {}",
                        d.entry(1, t),
                        s - t,
                        d.entry(2, s - t)
                    ),
                });
            }
        }
        let mut generators = Vec::new();
        for (t, m) in d.column(1) {
            for _ in 0..m {
                generators.push(t);
            }
        }
        Self::new(s, generators)
    }

    /// The induced Betti diagram: generators as `b_1`, syzygies as `b_2`,
    /// plus the last twist `R(-s)`.
    pub fn to_diagram(&self) -> BettiDiagram {
        let mut entries: Vec<(u8, i64, u64)> = Vec::new();
        let push = |entries: &mut Vec<(u8, i64, u64)>, i: u8, degrees: &[i64]| {
            let mut run: Option<(i64, u64)> = None;
            for &d in degrees {
                match run {
                    Some((deg, m)) if deg == d => run = Some((deg, m + 1)),
                    Some((deg, m)) => {
                        entries.push((i, deg, m));
                        run = Some((d, 1));
                    }
                    None => run = Some((d, 1)),
                }
            }
            if let Some((deg, m)) = run {
                entries.push((i, deg, m));
            }
        };
        push(&mut entries, 1, &self.generators);
        let mut syzygies = self.syzygies();
        syzygies.reverse(); // ascending for run-length grouping
        push(&mut entries, 2, &syzygies);
        entries.push((3, self.socle_shift, 1));
        BettiDiagram::from_entries(entries).expect("pairing always induces a wellformed diagram")
    }

    pub fn socle_shift(&self) -> i64 {
        self.socle_shift
    }

    /// Generator degrees, nondecreasing.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Syzygy degrees `p_i = s - q_i`, nonincreasing.
    pub fn syzygies(&self) -> Vec<i64> {
        self.generators
            .iter()
            .map(|&q| self.socle_shift - q)
            .collect()
    }

    /// Number of generators `n`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    fn multiplicity_of_generator(&self, degree: i64) -> usize {
        let lo = self.generators.partition_point(|&q| q < degree);
        let hi = self.generators.partition_point(|&q| q <= degree);
        hi - lo
    }

    /// The degree matrix `dB[i][j] = p_j - q_i` of the skew-symmetric
    /// middle map, rows indexed by generators in nondecreasing order and
    /// columns by syzygies in nonincreasing order.
    pub fn degree_matrix(&self) -> DegreeMatrix {
        let syzygies = self.syzygies();
        let rows = self
            .generators
            .iter()
            .map(|&q| syzygies.iter().map(|&p| p - q).collect())
            .collect();
        DegreeMatrix { rows }
    }

    /// Inserts a redundant pair: one generator and one syzygy at `degree`
    /// and, forced by self-duality, the dual pair at `s - degree`. The
    /// inverse of a cancellation step; useful for exercising traces.
    pub fn with_ghost_pair(&self, degree: i64) -> Result<Self, PairingError> {
        let mut generators = self.generators.clone();
        generators.push(degree);
        generators.push(self.socle_shift - degree);
        Self::new(self.socle_shift, generators)
    }

    /// One step of the cancellation procedure on the chosen side.
    ///
    /// On the min side the pivot is the smallest syzygy degree `d`: a
    /// generator of degree `d` at a non-diagonal position forces the dual
    /// coincidence, and the two generators and two syzygies of degrees
    /// `{d, s-d}` are removed. No generator of degree `d` at all ends the
    /// procedure with `d` as the surviving extreme. A match only at the
    /// diagonal position is the central configuration `d = s/2` with
    /// multiplicity one on each side. The max side mirrors this with the
    /// largest generator degree as pivot.
    pub fn cancel_step(&self, side: Side) -> Result<StepOutcome, PairingError> {
        if self.generators.is_empty() {
            return Err(PairingError::EmptyPairing);
        }
        let s = self.socle_shift;
        // Min pivot: d = min P = s - max Q. Max pivot: D = max Q. A match
        // for the pivot means a generator of degree d (equivalently a
        // syzygy of degree D = s - d), so both sides share the test and
        // the removal; only the reported extreme differs.
        let max_generator = *self.generators.last().unwrap();
        let min_syzygy = s - max_generator;
        let pivot = match side {
            Side::Min => min_syzygy,
            Side::Max => max_generator,
        };
        let matches = self.multiplicity_of_generator(min_syzygy);
        if matches == 0 {
            return Ok(StepOutcome::NoMatch { extreme: pivot });
        }
        let central = s % 2 == 0 && min_syzygy == s / 2;
        if central && matches == 1 {
            // The single match pairs the generator with its own syzygy on
            // the diagonal of the degree matrix; no legitimate
            // cancellation exists in this degree.
            return Ok(StepOutcome::DiagonalOnly { central: s / 2 });
        }
        let mut generators = self.generators.clone();
        remove_one(&mut generators, min_syzygy);
        remove_one(&mut generators, max_generator);
        let next = Self::new(s, generators)?;
        Ok(StepOutcome::Cancelled {
            next,
            step: CancelStep {
                low: min_syzygy.min(max_generator),
                high: min_syzygy.max(max_generator),
            },
        })
    }

    /// Runs the cancellation procedure to its terminal state, recording
    /// every removed degree pair. For a diagonal-only terminal the one
    /// extra numerical cancellation (dropping the central pair) is
    /// performed to read off the post-diagonal extreme.
    pub fn cancel_to_extreme(&self, side: Side) -> Result<CancellationTrace, PairingError> {
        let mut current = self.clone();
        let mut steps = Vec::new();
        loop {
            match current.cancel_step(side)? {
                StepOutcome::Cancelled { next, step } => {
                    steps.push(step);
                    current = next;
                }
                StepOutcome::NoMatch { extreme } => {
                    return Ok(CancellationTrace {
                        side,
                        steps,
                        terminal: Terminal::NoMatch { extreme },
                        final_pairing: current,
                    });
                }
                StepOutcome::DiagonalOnly { central } => {
                    let mut generators = current.generators.clone();
                    remove_one(&mut generators, central);
                    let stripped = GorensteinPairing {
                        socle_shift: current.socle_shift,
                        generators,
                    };
                    let post_extreme = match side {
                        Side::Min => stripped.generators.last().map(|&q| current.socle_shift - q),
                        Side::Max => stripped.generators.last().copied(),
                    };
                    return Ok(CancellationTrace {
                        side,
                        steps,
                        terminal: Terminal::DiagonalOnly {
                            central,
                            post_extreme,
                        },
                        final_pairing: current,
                    });
                }
            }
        }
    }
}

fn remove_one(sorted: &mut Vec<i64>, value: i64) {
    let pos = sorted.partition_point(|&q| q < value);
    debug_assert!(sorted.get(pos) == Some(&value));
    sorted.remove(pos);
}

impl fmt::Display for GorensteinPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_list = |xs: &[i64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "s = {}, Q = ({}), P = ({})",
            self.socle_shift,
            fmt_list(&self.generators),
            fmt_list(&self.syzygies())
        )
    }
}

/// Result of a single cancellation step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    /// A non-diagonal coincidence was removed together with its dual.
    Cancelled {
        next: GorensteinPairing,
        step: CancelStep,
    },
    /// The pivot degree has no matching generator; the pivot is the
    /// surviving extreme.
    NoMatch { extreme: i64 },
    /// The only match is the diagonal one at the central degree `s/2`
    /// with multiplicity one on each side.
    DiagonalOnly { central: i64 },
}

/// One removed quadruple: a generator and a syzygy at each of the two
/// dual degrees `low + high = s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancelStep {
    pub low: i64,
    pub high: i64,
}

/// Terminal state of the procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Terminal {
    /// The pivot degree had no match; it is the refined extreme itself.
    NoMatch { extreme: i64 },
    /// Central configuration reached: one generator and one syzygy of
    /// degree `s/2`. After the extra numerical cancellation the next
    /// extreme is exposed (`None` when nothing remains).
    DiagonalOnly {
        central: i64,
        post_extreme: Option<i64>,
    },
}

/// Complete log of a cancellation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationTrace {
    pub side: Side,
    pub steps: Vec<CancelStep>,
    pub terminal: Terminal,
    /// The pairing at the moment the procedure stopped; for a
    /// diagonal-only terminal it still contains the central pair.
    pub final_pairing: GorensteinPairing,
}

impl CancellationTrace {
    /// The refined extreme the run computed: `n_2` on the min side,
    /// `N_1` on the max side.
    pub fn extreme(&self) -> Option<i64> {
        match self.terminal {
            Terminal::NoMatch { extreme } => Some(extreme),
            Terminal::DiagonalOnly { post_extreme, .. } => post_extreme,
        }
    }

    /// True when the run ended in the central configuration.
    pub fn is_diagonal_terminal(&self) -> bool {
        matches!(self.terminal, Terminal::DiagonalOnly { .. })
    }

    /// The terminal diagram with the two central entries removed; only
    /// meaningful for diagonal terminals.
    pub fn central_stripped_diagram(&self) -> Option<BettiDiagram> {
        match self.terminal {
            Terminal::DiagonalOnly { central, .. } => {
                let mut generators = self.final_pairing.generators.clone();
                remove_one(&mut generators, central);
                let stripped = GorensteinPairing {
                    socle_shift: self.final_pairing.socle_shift,
                    generators,
                };
                Some(stripped.to_diagram())
            }
            Terminal::NoMatch { .. } => None,
        }
    }
}

/// The degree matrix `dB` of the middle map. Entries weakly increase
/// moving up and moving left, and the matrix is symmetric: `p_j - q_i =
/// s - q_j - q_i = p_i - q_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    rows: Vec<Vec<i64>>,
}

impl DegreeMatrix {
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// All off-diagonal zero positions, in row-major order. Symmetry of
    /// the matrix pairs every such zero with its transpose, so the count
    /// is always even.
    pub fn nondiagonal_zeros(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i != j && v == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
