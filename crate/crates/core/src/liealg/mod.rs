//! Lie algebras given by structure constants on a fixed basis `x₁ … xₙ`.
//!
//! Indices in this API are 0-based; documents and display use `x1 … xn`.

mod series;

pub use series::SeriesReport;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar, Subspace};

/// A failed Jacobi identity on the basis triple `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[xᵢ,[xⱼ,xₖ]] + [xⱼ,[xₖ,xᵢ]] + [xₖ,[xᵢ,xⱼ]]`
    pub residual: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: FieldSpec,
    dim: usize,
    /// `table[i * dim + j] = [xᵢ, xⱼ]`, antisymmetric by construction.
    table: Vec<Vec<Scalar>>,
    labels: Option<Vec<String>>,
}

impl LieAlgebra {
    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        LieAlgebra {
            field,
            dim,
            table: vec![vec![field.zero(); dim]; dim * dim],
            labels: None,
        }
    }

    /// Builds the table from `[xᵢ, xⱼ] = coeffs` entries with `i < j`.
    /// Pairs not listed are zero. The Jacobi identity is not checked here;
    /// see [`LieAlgebra::validate`].
    pub fn from_brackets(
        field: FieldSpec,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    ) -> Result<Self> {
        let mut algebra = LieAlgebra::abelian(field, dim);
        let mut seen = BTreeSet::new();
        for (i, j, coeffs) in entries {
            for index in [i, j] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i >= j {
                return Err(Error::InvalidPair(i, j));
            }
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: coeffs.len(),
                });
            }
            if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
                return Err(Error::FieldMismatch(field, bad.field()));
            }
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateBracket(i, j));
            }
            algebra.set_bracket(i, j, coeffs);
        }
        Ok(algebra)
    }

    fn set_bracket(&mut self, i: usize, j: usize, coeffs: Vec<Scalar>) {
        let n = self.dim;
        self.table[j * n + i] = coeffs.iter().map(Scalar::neg).collect();
        self.table[i * n + j] = coeffs;
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// The same structure constants read in `GF(p)`.
    pub fn reduce_mod(&self, p: u64) -> Result<LieAlgebra> {
        let field = FieldSpec::prime(p)?;
        let table = self
            .table
            .iter()
            .map(|v| v.iter().map(|x| x.reduce_mod(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LieAlgebra {
            field,
            dim: self.dim,
            table,
            labels: self.labels.clone(),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `[xᵢ, xⱼ]` in basis coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    /// Nonzero brackets `[xᵢ, xⱼ]` with `i < j`, in lexicographic order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &[Scalar])> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.basis_bracket(i, j)))
            .filter(|(_, _, c)| c.iter().any(|x| !x.is_zero()))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets().next().is_none()
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a.mul(b);
                for (o, c) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !c.is_zero() {
                        *o = o.add(&ab.mul(c));
                    }
                }
            }
        }
        out
    }

    /// Jacobi identity on every basis triple `i < j < k`; empty when valid.
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket(&xi, self.basis_bracket(j, k));
                    let b = self.bracket(&xj, self.basis_bracket(k, i));
                    let c = self.bracket(&xk, self.basis_bracket(i, j));
                    let residual: Vec<Scalar> = a
                        .iter()
                        .zip(&b)
                        .zip(&c)
                        .map(|((a, b), c)| a.add(b).add(c))
                        .collect();
                    if residual.iter().any(|r| !r.is_zero()) {
                        violations.push(JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        violations
    }

    fn check_subspace(&self, u: &Subspace) -> Result<()> {
        if u.field() != self.field {
            return Err(Error::FieldMismatch(self.field, u.field()));
        }
        if u.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `[U, V]`: the span of brackets of basis vectors of `U` and `V`.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let vectors: Vec<_> = u
            .basis_rows()
            .iter()
            .flat_map(|a| v.basis_rows().iter().map(move |b| self.bracket(a, b)))
            .collect();
        Ok(Subspace::from_spanning(self.field, self.dim, vectors))
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// The derived subalgebra `L² = [L, L]`.
    pub fn derived(&self) -> Subspace {
        let vectors = self.brackets().map(|(_, _, c)| c.to_vec()).collect::<Vec<_>>();
        Subspace::from_spanning(self.field, self.dim, vectors)
    }

    /// `Z(L)` as the kernel of `z ↦ ([x₁,z], …, [xₙ,z])`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut stacked = Matrix::zeros(self.field, n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        stacked.set(i * n + k, j, c.clone());
                    }
                }
            }
        }
        stacked.kernel()
    }

    pub fn series(&self) -> SeriesReport {
        SeriesReport::compute(self)
    }

    /// `L / I` on the basis given by the non-pivot coordinates of `I`,
    /// together with the projection matrix from `L`-coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix)> {
        self.check_subspace(ideal)?;
        if !ideal.contains_subspace(&self.bracket_span(&self.full(), ideal)?) {
            return Err(Error::NotIdeal);
        }
        let keep = ideal.non_pivots();
        let m = keep.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            keep.iter().map(|&q| r[q].clone()).collect()
        };
        let mut projection = Matrix::zeros(self.field, m, self.dim);
        for j in 0..self.dim {
            for (i, x) in project(&self.unit(j)).into_iter().enumerate() {
                projection.set(i, j, x);
            }
        }
        let mut entries = Vec::new();
        for (a, &qa) in keep.iter().enumerate() {
            for (b, &qb) in keep.iter().enumerate().skip(a + 1) {
                let c = project(self.basis_bracket(qa, qb));
                if c.iter().any(|x| !x.is_zero()) {
                    entries.push((a, b, c));
                }
            }
        }
        let mut q = LieAlgebra::from_brackets(self.field, m, entries)?;
        if let Some(labels) = &self.labels {
            q.labels = Some(keep.iter().map(|&i| labels[i].clone()).collect());
        }
        Ok((q, projection))
    }

    /// The subalgebra spanned by `sub`, on its echelon basis.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<LieAlgebra> {
        self.check_subspace(sub)?;
        let basis = sub.basis_rows();
        let mut entries = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let c = self.bracket(&basis[a], &basis[b]);
                let coords = sub.coordinates(&c).ok_or(Error::NotSubalgebra)?;
                if coords.iter().any(|x| !x.is_zero()) {
                    entries.push((a, b, coords));
                }
            }
        }
        LieAlgebra::from_brackets(self.field, basis.len(), entries)
    }

    /// Block-diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (n1, n) = (self.dim, self.dim + other.dim);
        let zero = self.field.zero();
        let pad = |c: &[Scalar], offset: usize| {
            let mut v = vec![zero.clone(); n];
            v[offset..offset + c.len()].clone_from_slice(c);
            v
        };
        let entries = self
            .brackets()
            .map(|(i, j, c)| (i, j, pad(c, 0)))
            .chain(other.brackets().map(|(i, j, c)| (i + n1, j + n1, pad(c, n1))))
            .collect::<Vec<_>>();
        let mut sum = LieAlgebra::from_brackets(self.field, n, entries)?;
        if let (Some(a), Some(b)) = (&self.labels, &other.labels) {
            sum.labels = Some(a.iter().chain(b).cloned().collect());
        }
        Ok(sum)
    }

    /// Rewrites the table in the basis `yᵢ = Σₖ P[k][i] xₖ` (the columns of
    /// `P`). Labels are dropped.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch(self.field, p.field()));
        }
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows().max(p.cols()),
            });
        }
        let p_inv = p.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = p_inv.mul_vec(&self.bracket(&cols[i], &cols[j]));
                if c.iter().any(|x| !x.is_zero()) {
                    entries.push((i, j, c));
                }
            }
        }
        LieAlgebra::from_brackets(self.field, self.dim, entries)
    }

    /// Human-readable presentation, e.g. `[x1, x2] = x3`.
    pub fn presentation(&self) -> String {
        let name = |i: usize| match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("x{}", i + 1),
        };
        let parts: Vec<String> = self
            .brackets()
            .map(|(i, j, c)| {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| {
                        if x.is_one() {
                            name(k)
                        } else {
                            format!("{x}*{}", name(k))
                        }
                    })
                    .collect();
                format!("[{}, {}] = {}", name(i), name(j), terms.join(" + "))
            })
            .collect();
        if parts.is_empty() {
            format!("abelian of dimension {}", self.dim)
        } else {
            parts.join(", ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn e(n: usize, k: usize) -> Vec<Scalar> {
        let mut v = vec![Q.zero(); n];
        v[k] = Q.one();
        v
    }

    fn heisenberg1() -> LieAlgebra {
        LieAlgebra::from_brackets(Q, 3, [(0, 1, e(3, 2))]).unwrap()
    }

    /// [x1,x2]=x3, [x1,x3]=x4
    fn l43() -> LieAlgebra {
        LieAlgebra::from_brackets(Q, 4, [(0, 1, e(4, 2)), (0, 2, e(4, 3))]).unwrap()
    }

    #[test]
    fn valid_tables() {
        assert!(LieAlgebra::abelian(Q, 4).validate().is_empty());
        assert!(heisenberg1().validate().is_empty());
        assert!(l43().validate().is_empty());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [x1,x2]=x1 alone is a Lie algebra; adding [x1,x3]=x3 breaks Jacobi.
        let ok = LieAlgebra::from_brackets(Q, 3, [(0, 1, e(3, 0))]).unwrap();
        assert!(ok.validate().is_empty());
        let bad = LieAlgebra::from_brackets(Q, 3, [(0, 1, e(3, 0)), (0, 2, e(3, 2))]).unwrap();
        let v = bad.validate();
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].i, v[0].j, v[0].k), (0, 1, 2));
        assert!(v[0].residual.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert_eq!(
            LieAlgebra::from_brackets(Q, 3, [(1, 0, e(3, 2))]),
            Err(Error::InvalidPair(1, 0))
        );
        assert_eq!(
            LieAlgebra::from_brackets(Q, 3, [(0, 1, e(3, 2)), (0, 1, e(3, 2))]),
            Err(Error::DuplicateBracket(0, 1))
        );
        assert!(matches!(
            LieAlgebra::from_brackets(Q, 3, [(0, 3, e(3, 2))]),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        ));
        assert!(LieAlgebra::from_brackets(Q, 3, [(0, 1, e(2, 1))]).is_err());
    }

    #[test]
    fn bracket_spans() {
        let a = LieAlgebra::abelian(Q, 3);
        assert!(a.bracket_span(&a.full(), &a.full()).unwrap().is_zero());

        let h = heisenberg1();
        let d = h.bracket_span(&h.full(), &h.full()).unwrap();
        assert_eq!(d, Subspace::from_spanning(Q, 3, vec![e(3, 2)]));

        let l = l43();
        let l3 = l.bracket_span(&l.derived(), &l.full()).unwrap();
        assert_eq!(l3, Subspace::from_spanning(Q, 4, vec![e(4, 3)]));
    }

    #[test]
    fn quotients() {
        let h = heisenberg1();
        let (q, p) = h.quotient(&Subspace::zero(Q, 3)).unwrap();
        assert_eq!(q, h);
        assert_eq!(p, Matrix::identity(Q, 3));

        let (q, _) = h.quotient(&h.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());

        let l = l43();
        let (q, p) = l.quotient(&l.center()).unwrap();
        assert_eq!(q, heisenberg1());
        assert_eq!((p.rows(), p.cols()), (3, 4));

        let not_ideal = Subspace::from_spanning(Q, 3, vec![e(3, 0)]);
        assert_eq!(h.quotient(&not_ideal), Err(Error::NotIdeal));
    }

    #[test]
    fn direct_sums() {
        let s = LieAlgebra::abelian(Q, 2)
            .direct_sum(&LieAlgebra::abelian(Q, 3))
            .unwrap();
        assert_eq!(s, LieAlgebra::abelian(Q, 5));

        let s = heisenberg1().direct_sum(&LieAlgebra::abelian(Q, 2)).unwrap();
        assert_eq!(s.derived().dim(), 1);
        assert_eq!(s.center().dim(), 3);
        assert!(s.validate().is_empty());

        let other = LieAlgebra::abelian(FieldSpec::Prime(3), 1);
        assert!(heisenberg1().direct_sum(&other).is_err());
    }

    #[test]
    fn change_basis_preserves_structure() {
        let h = heisenberg1();
        let p = Matrix::from_i64(Q, &[&[1, 2, 0], &[0, 1, 1], &[1, 0, 3]]);
        let g = h.change_basis(&p).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.derived().dim(), 1);
        assert_eq!(g.center().dim(), 1);
        let back = g.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, h);

        let singular = Matrix::from_i64(Q, &[&[1, 2, 0], &[2, 4, 0], &[0, 0, 1]]);
        assert_eq!(h.change_basis(&singular), Err(Error::Singular));
    }

    #[test]
    fn subalgebra_extraction() {
        let l = l43();
        let sub = Subspace::from_spanning(Q, 4, vec![e(4, 0), e(4, 2), e(4, 3)]);
        let s = l.subalgebra(&sub).unwrap();
        assert_eq!(s, heisenberg1());
        let open = Subspace::from_spanning(Q, 4, vec![e(4, 0), e(4, 1)]);
        assert_eq!(l.subalgebra(&open), Err(Error::NotSubalgebra));
    }

    #[test]
    fn presentation_text() {
        assert_eq!(l43().presentation(), "[x1, x2] = x3, [x1, x3] = x4");
    }
}
