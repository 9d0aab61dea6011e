//! Graded Betti diagrams of codimension-three resolutions.
//!
//! A diagram records the multiplicities `b_{i,t}` of the twists `R(-t)` in
//! a length-three free resolution over `k[x, y, z]`:
//!
//! ```text
//! 0 -> F_3 -> F_2 -> F_1 -> R -> R/I -> 0,   F_i = (+) R(-t)^{b_{i,t}}
//! ```
//!
//! Numerical consistency is the vanishing of the alternating degree
//! moments of order 0, 1, 2; the cubic moment then computes the
//! multiplicity exactly, whether or not the diagram is realized by an
//! actual algebra. The diagram determines its Hilbert function through
//! the third-difference identity `D3h(t) = b_{0,t} - b_{1,t} + b_{2,t} -
//! b_{3,t}`, inverted here by triple summation.
//!
//! Degrees in every rendering and in the JSON format are the internal
//! degrees `t` of the twists `R(-t)`, not the shifted row indices of the
//! common Betti-table display.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hilbert::{HilbertError, HilbertFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error("homological index {0} out of range (codimension is 3)")]
    IndexOutOfRange(u8),
    #[error("degree {degree} at homological index {index} is negative")]
    NegativeDegree { index: u8, degree: i64 },
    #[error("duplicate entry at (i = {index}, t = {degree})")]
    DuplicateEntry { index: u8, degree: i64 },
    #[error("zero multiplicity at (i = {index}, t = {degree})")]
    ZeroMultiplicity { index: u8, degree: i64 },
    #[error("the 0-th module must be exactly R, i.e. one entry (0, 0, 1)")]
    MalformedAugmentation,
    #[error("no entries at homological index {0}")]
    MissingHomologicalDegree(u8),
    #[error("alternating degree moment of order {order} does not vanish (residual {residual})")]
    MomentCheckFailed { order: u32, residual: String },
    #[error("diagram is not numerically consistent: {reason}")]
    InconsistentDiagram { reason: String },
    #[error("Hilbert function is not symmetric")]
    NotSymmetric,
    #[error("generator count {generators} is even but the socle shift {socle_shift} is odd; no central ghost pair exists")]
    ParityUnrepairable { generators: u64, socle_shift: i64 },
    #[error("unsupported codimension {0} in diagram file")]
    UnsupportedCodim(u8),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

/// Degree extremes `m_i = min` and `M_i = max` of the support of
/// `b_{i,.}` for `i = 1, 2, 3`. Index 0 of the arrays holds `i = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeExtremes {
    #[serde(rename = "m")]
    pub min: [i64; 3],
    #[serde(rename = "M")]
    pub max: [i64; 3],
}

/// A graded Betti diagram with homological indices 0..=3.
///
/// The 0-th column is always exactly `b_{0,0} = 1`. Entries store only
/// nonzero multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiDiagram {
    columns: [BTreeMap<i64, u64>; 4],
}

impl BettiDiagram {
    /// Builds a diagram from `(i, degree, multiplicity)` triples. The
    /// augmentation entry `(0, 0, 1)` may be omitted; anything else at
    /// homological index 0 is rejected.
    pub fn from_entries<I>(entries: I) -> Result<Self, BettiError>
    where
        I: IntoIterator<Item = (u8, i64, u64)>,
    {
        let mut columns: [BTreeMap<i64, u64>; 4] = Default::default();
        for (index, degree, mult) in entries {
            if index > 3 {
                return Err(BettiError::IndexOutOfRange(index));
            }
            if degree < 0 {
                return Err(BettiError::NegativeDegree { index, degree });
            }
            if mult == 0 {
                return Err(BettiError::ZeroMultiplicity { index, degree });
            }
            if columns[index as usize].insert(degree, mult).is_some() {
                return Err(BettiError::DuplicateEntry { index, degree });
            }
        }
        if columns[0].is_empty() {
            columns[0].insert(0, 1);
        }
        if columns[0].len() != 1 || columns[0].get(&0) != Some(&1) {
            return Err(BettiError::MalformedAugmentation);
        }
        Ok(BettiDiagram { columns })
    }

    /// `b_{i,t}`, zero when absent.
    pub fn entry(&self, index: u8, degree: i64) -> u64 {
        self.columns
            .get(index as usize)
            .and_then(|col| col.get(&degree))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero entries of column `i` in increasing degree.
    pub fn column(&self, index: u8) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.columns[index as usize].iter().map(|(&d, &m)| (d, m))
    }

    /// All nonzero entries sorted by `(i, degree)`.
    pub fn entries(&self) -> Vec<(u8, i64, u64)> {
        let mut out = Vec::new();
        for i in 0..4u8 {
            for (d, m) in self.column(i) {
                out.push((i, d, m));
            }
        }
        out
    }

    /// Total multiplicity of column `i`.
    pub fn rank(&self, index: u8) -> u64 {
        self.columns[index as usize].values().sum()
    }

    fn max_degree(&self) -> i64 {
        self.columns
            .iter()
            .filter_map(|col| col.keys().next_back().copied())
            .max()
            .unwrap_or(0)
    }

    /// Min/max degrees of the three resolution steps.
    pub fn extremes(&self) -> Result<DegreeExtremes, BettiError> {
        let mut min = [0i64; 3];
        let mut max = [0i64; 3];
        for i in 1..=3u8 {
            let col = &self.columns[i as usize];
            let lo = col.keys().next().copied();
            let hi = col.keys().next_back().copied();
            match (lo, hi) {
                (Some(lo), Some(hi)) => {
                    min[i as usize - 1] = lo;
                    max[i as usize - 1] = hi;
                }
                _ => return Err(BettiError::MissingHomologicalDegree(i)),
            }
        }
        Ok(DegreeExtremes { min, max })
    }

    /// Alternating degree moment `sum_t t^order (b_0 - b_1 + b_2 - b_3)`,
    /// with `0^0 = 1`.
    fn moment(&self, order: u32) -> BigInt {
        let mut acc = BigInt::from(0);
        for (i, col) in self.columns.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (&d, &m) in col {
                let weight = BigInt::from(d).pow(order);
                acc += sign * weight * BigInt::from(m);
            }
        }
        acc
    }

    /// The multiplicity computed formally from the diagram, as if it were
    /// the Betti table of an exact resolution:
    /// `(1/6) sum_t t^3 (b_{1,t} - b_{2,t} + b_{3,t})`.
    ///
    /// The moments of order 0, 1, 2 must vanish first; otherwise the
    /// diagram is numerically inconsistent and the cubic value would be
    /// meaningless.
    pub fn formal_multiplicity(&self) -> Result<BigRational, BettiError> {
        for order in 0..=2u32 {
            let residual = self.moment(order);
            if residual != BigInt::from(0) {
                return Err(BettiError::MomentCheckFailed {
                    order,
                    residual: residual.to_string(),
                });
            }
        }
        let cubic = -self.moment(3);
        Ok(BigRational::new(cubic, BigInt::from(6)))
    }

    /// Recovers the Hilbert function by triple summation of the
    /// alternating column sums. Errors when any reconstructed value is
    /// negative, the tail does not vanish, or the result fails Hilbert
    /// validation.
    pub fn hilbert_function(&self) -> Result<HilbertFunction, BettiError> {
        let top = self.max_degree();
        let mut values: Vec<i128> = Vec::new();
        let get = |values: &[i128], t: i64| -> i128 {
            if t < 0 {
                0
            } else {
                values[t as usize]
            }
        };
        for t in 0..=top {
            let delta = self.entry(0, t) as i128 - self.entry(1, t) as i128
                + self.entry(2, t) as i128
                - self.entry(3, t) as i128;
            let v = delta + 3 * get(&values, t - 1) - 3 * get(&values, t - 2) + get(&values, t - 3);
            if v < 0 {
                return Err(BettiError::InconsistentDiagram {
                    reason: format!("reconstructed value {v} at degree {t} is negative"),
                });
            }
            if v > crate::hilbert::MAX_ENTRY as i128 {
                return Err(BettiError::InconsistentDiagram {
                    reason: format!("reconstructed value at degree {t} out of range"),
                });
            }
            values.push(v);
        }
        // An Artinian quotient vanishes from degree c+1 on while the last
        // twist sits at c+3, so the top three values must be zero.
        let n = values.len();
        if n < 3 || values[n - 1] != 0 || values[n - 2] != 0 || values[n - 3] != 0 {
            return Err(BettiError::InconsistentDiagram {
                reason: "reconstructed sequence does not vanish below the last twist".into(),
            });
        }
        let raw: Vec<i64> = values.iter().map(|&v| v as i64).collect();
        crate::hilbert::validate_hilbert(&raw).map_err(|e| BettiError::InconsistentDiagram {
            reason: e.to_string(),
        })
    }

    /// The generic (numerically minimal self-dual) Gorenstein diagram of a
    /// symmetric Hilbert function: `b_{3,c+3} = 1`, and for `0 < t < c+3`
    /// the positive part of the third difference goes to `b_2`, the
    /// negative part to `b_1`. When the generator count comes out even, a
    /// single ghost pair is added at the central degree `s/2` to restore
    /// the odd generator count of a codimension-three Gorenstein ideal;
    /// an odd socle shift with even generator count is reported as
    /// unrepairable.
    pub fn generic_from_hilbert(h: &HilbertFunction) -> Result<Self, BettiError> {
        if !h.is_symmetric() {
            return Err(BettiError::NotSymmetric);
        }
        let s = h.socle_shift();
        let td = h.third_difference();
        let mut entries: Vec<(u8, i64, u64)> = Vec::new();
        let mut generators: u64 = 0;
        for t in 1..s {
            let d = td.at(t);
            if d > 0 {
                entries.push((2, t, d as u64));
            } else if d < 0 {
                entries.push((1, t, (-d) as u64));
                generators += -d as u64;
            }
        }
        entries.push((3, s, 1));
        if generators.is_multiple_of(2) {
            if s % 2 != 0 {
                return Err(BettiError::ParityUnrepairable {
                    generators,
                    socle_shift: s,
                });
            }
            // The third difference of a symmetric sequence vanishes at the
            // center, so s/2 never carries a minimal entry; the ghost pair
            // can be inserted directly.
            entries.push((1, s / 2, 1));
            entries.push((2, s / 2, 1));
        }
        Self::from_entries(entries)
    }

    /// Every resolution step concentrated in a single degree.
    pub fn is_pure(&self) -> bool {
        self.columns.iter().all(|col| col.len() <= 1)
    }

    /// `m_i >= M_{i-1}` for `i = 2, 3`: each step starts no lower than the
    /// previous one ends.
    pub fn is_quasi_pure(&self) -> bool {
        match self.extremes() {
            Ok(e) => e.min[1] >= e.max[0] && e.min[2] >= e.max[1],
            Err(_) => false,
        }
    }

    /// Text table in the paper-style layout: one row per internal degree,
    /// one column per homological index, `-` for zero.
    pub fn render_table(&self) -> String {
        let mut degrees: Vec<i64> = Vec::new();
        for col in &self.columns {
            degrees.extend(col.keys().copied());
        }
        degrees.sort_unstable();
        degrees.dedup();
        let width = degrees
            .iter()
            .map(|d| d.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut out = String::new();
        out.push_str(&format!("{:>w$} |", "t", w = width + 1));
        for i in 0..4 {
            out.push_str(&format!(" {i:>4}"));
        }
        out.push('\n');
        out.push_str(&format!("{:->w$}-+{}\n", "", "-".repeat(20), w = width + 1));
        for d in degrees {
            out.push_str(&format!("{d:>w$} |", w = width + 1));
            for i in 0..4u8 {
                let m = self.entry(i, d);
                if m == 0 {
                    out.push_str(&format!(" {:>4}", "-"));
                } else {
                    out.push_str(&format!(" {m:>4}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// On-disk JSON form: `{"codim": 3, "entries": [{"i", "degree", "mult"}]}`
/// with entries sorted by `(i, degree)`. This serialization is canonical;
/// byte-stable for golden tests and hashing.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct DiagramFile {
    codim: u8,
    entries: Vec<DiagramEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DiagramEntry {
    i: u8,
    degree: i64,
    mult: u64,
}

impl Serialize for BettiDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = self
            .entries()
            .into_iter()
            .map(|(i, degree, mult)| DiagramEntry { i, degree, mult })
            .collect();
        DiagramFile { codim: 3, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BettiDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = DiagramFile::deserialize(deserializer)?;
        if file.codim != 3 {
            return Err(serde::de::Error::custom(BettiError::UnsupportedCodim(
                file.codim,
            )));
        }
        BettiDiagram::from_entries(file.entries.into_iter().map(|e| (e.i, e.degree, e.mult)))
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_table())
    }
}

/// Koszul diagram of a regular sequence of three forms: the resolution of
/// a complete intersection. Handy as an independent oracle.
pub fn koszul_diagram(d1: i64, d2: i64, d3: i64) -> Result<BettiDiagram, BettiError> {
    let mut entries: BTreeMap<(u8, i64), u64> = BTreeMap::new();
    for d in [d1, d2, d3] {
        *entries.entry((1, d)).or_insert(0) += 1;
    }
    for d in [d1 + d2, d1 + d3, d2 + d3] {
        *entries.entry((2, d)).or_insert(0) += 1;
    }
    entries.insert((3, d1 + d2 + d3), 1);
    BettiDiagram::from_entries(entries.into_iter().map(|((i, d), m)| (i, d, m)))
}
