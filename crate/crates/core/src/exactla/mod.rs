//! Exact linear algebra over `Q` and `GF(p)`.

mod field;
mod matrix;
mod subspace;

pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;

#[allow(unused_imports)]
pub(crate) use matrix::dot;
