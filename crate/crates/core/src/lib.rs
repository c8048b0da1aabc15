//! Skew Schur functions, stable and dual stable Grothendieck polynomials of
//! skew shapes, and tools for deciding when two shapes give the same one.
//!
//! The crate is organised bottom up:
//!
//! * [`shapes`]: partitions, skew shapes, rotation, transposition and the
//!   bottleneck and row-overlap invariants.
//! * [`tableaux`]: enumeration of semistandard tableaux, set-valued tableaux
//!   and reverse plane partitions, weights, and the lattice-path picture of
//!   plane partitions with entries 1 and 2.
//! * [`polynomials`]: truncated symmetric polynomials with exact integer
//!   coefficients and the constructors `s`, `G` and `g`.
//! * [`ribbons`]: the ribbon algebra and ribbon equivalence.
//! * [`equivalence`]: necessary conditions, closed-form coefficients, and
//!   exhaustive searches for coinciding shapes.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod equivalence;
pub mod error;
pub mod polynomials;
pub mod ribbons;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use polynomials::{
    coefficient, dual_grothendieck, grothendieck, schur, EqualityVerdict, Evidence, Family,
    TruncatedSymPoly,
};
pub use ribbons::{Factorization, Ribbon};
pub use shapes::{BottleneckProfile, Partition, SkewShape};
pub use tableaux::{ExponentVector, Filling, FillingKind, LatticePath};
