//! Dense matrices over a [`FieldSpec`] and the elimination routine behind
//! rank, row reduction, kernels and inverses.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{add_mod, inv_mod, mul_mod, FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        debug_assert!(entries.iter().all(|e| e.field() == field));
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row vectors, each of length `cols`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        Matrix::new(field, n, cols, entries)
    }

    /// Convenience for small integer matrices.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] = out.entries[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| dot(self.field, self.row(i), v))
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix::new(
            self.field,
            self.rows + other.rows,
            self.cols,
            entries,
        ))
    }

    /// Reduced row-echelon form (same shape, zero rows last) and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let ech = Echelon::of_rows(self.field, self.cols, self.row_vecs().map(<[Scalar]>::to_vec));
        let rank = ech.rank();
        let mut rows = ech.rows;
        rows.resize(self.rows.max(rank), vec![self.field.zero(); self.cols]);
        (Matrix::from_rows(self.field, self.cols, rows), rank)
    }

    pub fn rank(&self) -> usize {
        Echelon::of_rows(self.field, self.cols, self.row_vecs().map(<[Scalar]>::to_vec)).rank()
    }

    /// Null space `{ v : self · v = 0 }` inside `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let ech = Echelon::of_rows(self.field, self.cols, self.row_vecs().map(<[Scalar]>::to_vec));
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Scalar>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    v[p] = row[f].neg();
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.field, self.cols, basis)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let augmented = (0..n).map(|i| {
            let mut r = self.row(i).to_vec();
            r.extend((0..n).map(|j| {
                if i == j {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            }));
            r
        });
        let ech = Echelon::of_rows(self.field, 2 * n, augmented);
        if ech.rank() < n || ech.pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let rows = ech.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(Matrix::from_rows(self.field, n, rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(field.zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Nonzero rows of a reduced row-echelon form together with their pivots,
/// sorted by pivot column.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn of_rows(
        field: FieldSpec,
        cols: usize,
        rows: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Echelon {
        match field {
            FieldSpec::Prime(p) => {
                let it = rows.into_iter().map(|r| {
                    r.into_iter()
                        .map(|s| match s {
                            Scalar::Residue { value, .. } => value,
                            Scalar::Rational(_) => unreachable!("rational entry in GF({p}) matrix"),
                        })
                        .collect()
                });
                let (rows, pivots) = eliminate(&ModP(p), cols, it);
                Echelon {
                    rows: rows
                        .into_iter()
                        .map(|r| {
                            r.into_iter()
                                .map(|value| Scalar::Residue { value, modulus: p })
                                .collect()
                        })
                        .collect(),
                    pivots,
                }
            }
            FieldSpec::Rationals => {
                let it = rows.into_iter().map(|r| {
                    r.into_iter()
                        .map(|s| match s {
                            Scalar::Rational(q) => q,
                            Scalar::Residue { .. } => unreachable!("residue in rational matrix"),
                        })
                        .collect()
                });
                let (rows, pivots) = eliminate(&Rationals, cols, it);
                Echelon {
                    rows: rows
                        .into_iter()
                        .map(|r| r.into_iter().map(Scalar::Rational).collect())
                        .collect(),
                    pivots,
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Unboxed arithmetic used inside elimination.
trait Arith {
    type E: Clone;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a -= b * c`
    fn sub_mul(&self, a: &mut Self::E, b: &Self::E, c: &Self::E);
}

struct ModP(u64);

impl Arith for ModP {
    type E = u64;
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.0)
    }
    fn sub_mul(&self, a: &mut u64, b: &u64, c: &u64) {
        let p = self.0;
        *a = add_mod(*a, p - mul_mod(*b, *c, p), p);
    }
}

struct Rationals;

impl Arith for Rationals {
    type E = BigRational;
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_one() {
            return b.clone();
        }
        a * b
    }
    fn sub_mul(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        *a -= b * c;
    }
}

/// Incremental Gauss-Jordan elimination. Each incoming row is reduced
/// against the current basis; survivors are normalised and used to clear
/// their pivot column from the rows already kept, so the basis stays fully
/// reduced throughout.
fn eliminate<A: Arith>(
    a: &A,
    cols: usize,
    rows: impl Iterator<Item = Vec<A::E>>,
) -> (Vec<Vec<A::E>>, Vec<usize>) {
    let mut basis: Vec<(usize, Vec<A::E>)> = Vec::new();
    for mut row in rows {
        debug_assert_eq!(row.len(), cols);
        for (p, b) in &basis {
            if a.is_zero(&row[*p]) {
                continue;
            }
            let c = row[*p].clone();
            for (x, y) in row.iter_mut().zip(b) {
                if !a.is_zero(y) {
                    a.sub_mul(x, y, &c);
                }
            }
        }
        let Some(q) = row.iter().position(|x| !a.is_zero(x)) else {
            continue;
        };
        let s = a.inv(&row[q]);
        for x in row.iter_mut() {
            if !a.is_zero(x) {
                *x = a.mul(&s, x);
            }
        }
        for (_, b) in basis.iter_mut() {
            if a.is_zero(&b[q]) {
                continue;
            }
            let c = b[q].clone();
            for (x, y) in b.iter_mut().zip(&row) {
                if !a.is_zero(y) {
                    a.sub_mul(x, y, &c);
                }
            }
        }
        basis.push((q, row));
        if basis.len() == cols {
            break;
        }
    }
    basis.sort_by_key(|(p, _)| *p);
    basis.into_iter().map(|(p, r)| (r, p)).unzip()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_of_identity_and_zero() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let z = Matrix::zeros(Q, 2, 4);
        assert_eq!(z.rref(), (z.clone(), 0));
        let empty = Matrix::zeros(Q, 0, 0);
        assert_eq!(empty.rref().1, 0);
    }

    #[test]
    fn dependent_rows_have_rank_one() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_normalises_pivots() {
        let m = Matrix::from_i64(Q, &[&[0, 2, 4], &[3, 0, 3]]);
        let (r, _) = m.rref();
        assert_eq!(r, Matrix::from_i64(Q, &[&[1, 0, 1], &[0, 1, 2]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel().dim(), 3);
        // (1, -1) · v = 0  =>  v ∈ span{(1, 1)}
        let k = Matrix::from_i64(Q, &[&[1, -1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_rows()[0], vec![Q.one(), Q.one()]);
    }

    #[test]
    fn inverse_round_trips() {
        let f = FieldSpec::Prime(7);
        let m = Matrix::from_i64(f, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 3));
        let sing = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(Error::Singular));
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(Q, 2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.vstack(&Matrix::zeros(Q, 1, 2)).is_err());
        assert!(a.mul(&Matrix::zeros(FieldSpec::Prime(3), 3, 1)).is_err());
    }
}
