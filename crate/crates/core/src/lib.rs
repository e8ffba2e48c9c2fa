//! Structural invariants, Schur multipliers, nonabelian exterior and tensor
//! squares, corank and capability of finite-dimensional nilpotent Lie
//! algebras whose derived subalgebra has dimension at most two.
//!
//! Two independent routes are provided for every quantity:
//!
//! * [`functors`] evaluates closed-form dimension formulas on a
//!   [`decompose::Classification`];
//! * [`oracle`] computes the same numbers from the structure constants by
//!   exact linear algebra (Lie algebra cohomology, presentations of the
//!   tensor and exterior squares, and an epicenter sweep over finite fields).
//!
//! [`oracle::cross_check`] compares them.

pub mod decompose;
pub mod error;
pub mod exactla;
pub mod functors;
pub mod liealg;
pub mod oracle;
pub mod random;
pub mod suite;

pub use error::{Error, Result};
pub use exactla::{FieldSpec, Matrix, Scalar, Subspace};
pub use liealg::{LieAlgebra, SeriesReport};
