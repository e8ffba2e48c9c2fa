//! Low-degree cochains of `L` with trivial coefficients.
//!
//! Pairs `(i, j)` with `i < j` and triples `(i, j, k)` with `i < j < k` are
//! ordered lexicographically; row and column indices of `d1`/`d2` follow that
//! order.

use crate::exactla::Matrix;
use crate::liealg::LieAlgebra;

/// `d1: C¹ → C²` and `d2: C² → C³` as matrices acting on column vectors of
/// cochain values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplexSlice {
    /// `C(n, 2) × n`, `(d1 f)(x, y) = −f([x, y])`
    pub d1: Matrix,
    /// `C(n, 3) × C(n, 2)`,
    /// `(d2 ω)(x, y, z) = −ω([x, y], z) + ω([x, z], y) − ω([y, z], x)`
    pub d2: Matrix,
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect()
}

impl CochainComplexSlice {
    pub fn new(l: &LieAlgebra) -> Self {
        let n = l.dim();
        let field = l.field();
        let pairs = pairs(n);
        let mut pair_index = vec![usize::MAX; n * n];
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            pair_index[i * n + j] = idx;
        }

        let mut d1 = Matrix::zeros(field, pairs.len(), n);
        for (row, &(i, j)) in pairs.iter().enumerate() {
            for (k, c) in l.basis_bracket(i, j).iter().enumerate() {
                if !c.is_zero() {
                    d1.set(row, k, c.neg());
                }
            }
        }

        let triples = triples(n);
        let mut d2 = Matrix::zeros(field, triples.len(), pairs.len());
        for (row, &(i, j, k)) in triples.iter().enumerate() {
            let mut acc = vec![field.zero(); pairs.len()];
            // sign · ω([x_a, x_b], x_c)
            let mut add = |a: usize, b: usize, c: usize, negate: bool| {
                for (m, coeff) in l.basis_bracket(a, b).iter().enumerate() {
                    if coeff.is_zero() || m == c {
                        continue;
                    }
                    // ω(x_m, x_c) = ±ω_{min,max}
                    let (lo, hi, flip) = if m < c { (m, c, false) } else { (c, m, true) };
                    let slot = &mut acc[pair_index[lo * n + hi]];
                    *slot = if negate ^ flip { slot.sub(coeff) } else { slot.add(coeff) };
                }
            };
            add(i, j, k, true);
            add(i, k, j, false);
            add(j, k, i, true);
            for (col, v) in acc.into_iter().enumerate() {
                d2.set(row, col, v);
            }
        }
        CochainComplexSlice { d1, d2 }
    }

    /// `d2 ∘ d1 = 0`.
    pub fn is_complex(&self) -> bool {
        self.d2.mul(&self.d1).map(|m| m.is_zero()).unwrap_or(false)
    }

    pub fn rank_d1(&self) -> usize {
        self.d1.rank()
    }

    pub fn rank_d2(&self) -> usize {
        self.d2.rank()
    }

    /// `dim H²(L) = dim ker d2 − rank d1`.
    pub fn second_cohomology_dim(&self) -> usize {
        self.d2.cols() - self.rank_d2() - self.rank_d1()
    }
}

/// `dim M(L)`, computed as the dimension of `H²(L)` with trivial
/// coefficients.
pub fn schur_dim_oracle(l: &LieAlgebra) -> usize {
    CochainComplexSlice::new(l).second_cohomology_dim()
}
