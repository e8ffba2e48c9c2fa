//! Brute-force values computed straight from structure constants, and the
//! comparison against the closed forms in [`crate::functors`].

mod cochain;
mod epicenter;
mod squares;

pub use cochain::{pairs, schur_dim_oracle, triples, CochainComplexSlice};
pub use epicenter::{capable_oracle, epicenter};
pub use squares::{exterior_dim_oracle, squares, tensor_dim_oracle, Squares};

use crate::decompose::{classify, Classification};
use crate::error::{Error, Result};
use crate::functors::{functor_report, FunctorReport, Value};
use crate::liealg::LieAlgebra;

/// Oracle-side values for one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub schur_dim: usize,
    pub exterior_dim: usize,
    pub tensor_dim: usize,
    pub exterior_abelian: bool,
    /// `None` over `Q`, where the sweep over central lines is infinite.
    pub epicenter_dim: Option<usize>,
    pub capable: Option<bool>,
    /// `d2 ∘ d1 = 0`
    pub complex_ok: bool,
    pub rank_d1: usize,
    pub derived_dim: usize,
}

impl OracleReport {
    /// `dim L ⊗ L − dim L ∧ L`
    pub fn square_dim(&self) -> usize {
        self.tensor_dim - self.exterior_dim
    }

    /// Both harness checks: `d2 ∘ d1 = 0` and `rank d1 = dim L²`.
    pub fn harness_ok(&self) -> bool {
        self.complex_ok && self.rank_d1 == self.derived_dim
    }
}

pub fn oracle_report(l: &LieAlgebra) -> Result<OracleReport> {
    let complex = CochainComplexSlice::new(l);
    let sq = squares(l);
    let epi = match epicenter(l) {
        Ok(z) => Some(z.dim()),
        Err(Error::InfiniteField(_) | Error::NotNilpotent) => None,
        Err(e) => return Err(e),
    };
    Ok(OracleReport {
        schur_dim: complex.second_cohomology_dim(),
        exterior_dim: sq.exterior_dim,
        tensor_dim: sq.tensor_dim,
        exterior_abelian: sq.exterior_abelian,
        epicenter_dim: epi,
        capable: epi.map(|d| d == 0),
        complex_ok: complex.is_complex(),
        rank_d1: complex.rank_d1(),
        derived_dim: l.derived().dim(),
    })
}

/// A formula value against the oracle value for one quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Dim { formula: Value, oracle: usize },
    Flag { formula: bool, oracle: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub quantity: &'static str,
    pub comparison: Comparison,
}

impl Check {
    pub fn pass(&self) -> bool {
        match &self.comparison {
            Comparison::Dim { formula, oracle } => formula.contains(*oracle),
            Comparison::Flag { formula, oracle } => formula == oracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub classification: Classification,
    pub formula: FunctorReport,
    pub oracle: OracleReport,
    pub checks: Vec<Check>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.oracle.harness_ok() && self.checks.iter().all(Check::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass())
    }
}

/// Classifies `l`, evaluates the formulas, runs the oracles and compares.
/// Capability is compared only over prime fields.
pub fn cross_check(l: &LieAlgebra) -> Result<CrossCheck> {
    let classification = classify(l)?;
    let formula = functor_report(&classification)?;
    let oracle = oracle_report(l)?;
    let n = classification.dim;
    let dim = |quantity, formula, oracle| Check {
        quantity,
        comparison: Comparison::Dim { formula, oracle },
    };
    let mut checks = vec![
        dim("schur", formula.schur_dim, oracle.schur_dim),
        dim("exterior", formula.exterior_dim, oracle.exterior_dim),
        dim("tensor", formula.tensor_dim, oracle.tensor_dim),
        dim("square", Value::Exact(formula.square_dim), oracle.square_dim()),
        dim("corank", formula.corank, n * n.saturating_sub(1) / 2 - oracle.schur_dim),
        Check {
            quantity: "exterior_abelian",
            comparison: Comparison::Flag {
                formula: formula.exterior_abelian,
                oracle: oracle.exterior_abelian,
            },
        },
    ];
    if let Some(capable) = oracle.capable {
        checks.push(Check {
            quantity: "capable",
            comparison: Comparison::Flag {
                formula: formula.capable,
                oracle: capable,
            },
        });
    }
    Ok(CrossCheck {
        classification,
        formula,
        oracle,
        checks,
    })
}
