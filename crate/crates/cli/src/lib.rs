//! Library side of the `schurlie` command: the JSON algebra document,
//! report assembly and the check suites.

pub mod document;
pub mod error;
pub mod report;
pub mod suite;

use schurlie::decompose::classify;
use schurlie::oracle::{cross_check, epicenter, Check, Comparison, CrossCheck};
use schurlie::{FieldSpec, LieAlgebra};

pub use document::AlgebraDocument;
pub use error::CliError;

/// Where the epicenter sweep ran, or why it could not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EpicenterSource {
    /// The algebra is over this prime field already.
    Native(u64),
    /// A rational table reduced modulo `p` with unchanged series dimensions.
    Reduced(u64),
    Unavailable(String),
}

/// A rational algebra's image in `GF(p)`, if the reduction exists and keeps
/// the dimensions of the lower central series and of the center.
pub fn faithful_reduction(l: &LieAlgebra, p: u64) -> Result<LieAlgebra, String> {
    let r = l.reduce_mod(p).map_err(|e| e.to_string())?;
    let (a, b) = (l.series(), r.series());
    if a.lower_central_dims() != b.lower_central_dims() || a.center.dim() != b.center.dim() {
        return Err(format!("reduction mod {p} changes the structure"));
    }
    Ok(r)
}

/// [`cross_check`], plus a capability check through reduction mod `prime`
/// when `l` is rational.
pub fn check_algebra(l: &LieAlgebra, prime: u64) -> schurlie::Result<(CrossCheck, EpicenterSource)> {
    let mut report = cross_check(l)?;
    let source = match l.field() {
        FieldSpec::Prime(p) => EpicenterSource::Native(p),
        FieldSpec::Rationals => match faithful_reduction(l, prime) {
            Ok(r) => {
                let z = epicenter(&r)?;
                let capable = z.is_zero();
                report.oracle.capable = Some(capable);
                report.oracle.epicenter_dim = Some(z.dim());
                report.checks.push(Check {
                    quantity: "capable",
                    comparison: Comparison::Flag {
                        formula: report.formula.capable,
                        oracle: capable,
                    },
                });
                EpicenterSource::Reduced(prime)
            }
            Err(why) => EpicenterSource::Unavailable(why),
        },
    };
    Ok((report, source))
}

/// Whether `l` lies in the scope of the formula engine.
pub fn in_scope(l: &LieAlgebra) -> bool {
    classify(l).map(|c| c.in_scope()).unwrap_or(false)
}
