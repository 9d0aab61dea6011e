//! Exact-arithmetic analysis of multiplicity bounds for codimension-three
//! Gorenstein (and level) graded Artinian algebras: Hilbert-function
//! arithmetic, Betti diagrams and their self-dual pairings, the
//! formal-cancellation procedure, three interchangeable bound families,
//! and an exhaustive desk-scale certification harness.
//!
//! Everything is exact integer/rational arithmetic; sharpness of a bound
//! is an equality test, so no floating point appears anywhere.

pub mod betti;
pub mod bounds;
pub mod cli;
pub mod harness;
pub mod hilbert;
pub mod pairing;

pub use betti::{BettiDiagram, BettiError};
pub use bounds::{check_all, BoundFamily, BoundsReport};
pub use harness::{certify, CertificationRun, CertifyConfig};
pub use hilbert::{validate_hilbert, EnumFilter, HilbertFunction, RefinedInvariants};
pub use pairing::{CancellationTrace, GorensteinPairing, Side};
