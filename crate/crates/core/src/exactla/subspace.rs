use super::field::{FieldSpec, Scalar};
use super::matrix::{Echelon, Matrix};
use crate::error::{Error, Result};

/// A subspace of `F^ambient_dim`, stored as the nonzero rows of a reduced
/// row-echelon basis. The representation is canonical, so `==` is equality
/// of subspaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace::from_matrix(&Matrix::identity(field, ambient_dim))
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_spanning(
        field: FieldSpec,
        ambient_dim: usize,
        vectors: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Self {
        let Echelon { rows, pivots } = Echelon::of_rows(field, ambient_dim, vectors);
        Subspace {
            field,
            ambient_dim,
            basis: rows,
            pivots,
        }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        Subspace::from_spanning(m.field(), m.cols(), m.row_vecs().map(<[Scalar]>::to_vec))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis_rows(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// The basis as a `dim × ambient_dim` matrix in reduced row-echelon form.
    pub fn basis(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone())
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; they index a canonical complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            used[p] = true;
        }
        (0..self.ambient_dim).filter(|&i| !used[i]).collect()
    }

    /// Clears the pivot coordinates of `v` using the basis. The result is
    /// zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis rows with coefficients `coeffs`.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![self.field.zero(); self.ambient_dim];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                *x = x.add(&c.mul(y));
            }
        }
        out
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect::<Vec<_>>();
        Ok(Subspace::from_spanning(self.field, self.ambient_dim, vectors))
    }

    /// `u ∩ v` via the kernel of the stacked bases: a relation
    /// `Σ aᵢuᵢ + Σ bⱼvⱼ = 0` yields the common vector `Σ aᵢuᵢ`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient_dim));
        }
        let stacked = self.basis().vstack(&other.basis())?;
        let relations = stacked.transpose().kernel();
        let du = self.dim();
        let vectors = relations
            .basis
            .iter()
            .map(|rel| self.combine(&rel[..du]))
            .collect::<Vec<_>>();
        Ok(Subspace::from_spanning(self.field, self.ambient_dim, vectors))
    }

    /// A subspace `W` with `inner ⊕ W = outer`, built from basis vectors of
    /// `outer` that are not already reachable (greedy basis extension).
    pub fn complement_within(inner: &Subspace, outer: &Subspace) -> Result<Subspace> {
        inner.check_compatible(outer)?;
        if !outer.contains_subspace(inner) {
            return Err(Error::NotContained);
        }
        let mut span = inner.clone();
        let mut chosen = Vec::new();
        for v in &outer.basis {
            if span.dim() == outer.dim() {
                break;
            }
            if !span.contains(v) {
                chosen.push(v.clone());
                let mut vectors = span.basis.clone();
                vectors.push(v.clone());
                span = Subspace::from_spanning(span.field, span.ambient_dim, vectors);
            }
        }
        Ok(Subspace::from_spanning(inner.field, inner.ambient_dim, chosen))
    }
}
