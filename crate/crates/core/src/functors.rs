//! Closed-form dimensions of the Schur multiplier, exterior, tensor and
//! symmetric squares, corank and capability, dispatched on a
//! [`Classification`]. Every formula takes `n`, the total dimension
//! including the abelian summand.

use std::fmt;

use crate::decompose::{Classification, Family};
use crate::error::{Error, Result};

/// A dimension known exactly, or pinned down only to two candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Value {
    Exact(usize),
    /// Ascending pair of admissible values.
    Admissible(usize, usize),
}

impl Value {
    pub fn contains(&self, v: usize) -> bool {
        match *self {
            Value::Exact(x) => x == v,
            Value::Admissible(a, b) => a == v || b == v,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            Value::Exact(x) => Some(x),
            Value::Admissible(..) => None,
        }
    }

    pub fn values(&self) -> Vec<usize> {
        match *self {
            Value::Exact(x) => vec![x],
            Value::Admissible(a, b) => vec![a, b],
        }
    }

    /// Applies `f` elementwise. `f` must be monotone so the pair stays sorted.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Value {
        match self {
            Value::Exact(x) => Value::Exact(f(x)),
            Value::Admissible(a, b) => {
                let (a, b) = (f(a), f(b));
                Value::Admissible(a.min(b), a.max(b))
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(x) => write!(f, "{x}"),
            Value::Admissible(a, b) => write!(f, "{{{a}, {b}}}"),
        }
    }
}

/// Formula-side values for one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorReport {
    pub schur_dim: Value,
    pub exterior_dim: Value,
    pub tensor_dim: Value,
    /// `dim L □ L`
    pub square_dim: usize,
    pub corank: Value,
    pub capable: bool,
    pub exterior_abelian: bool,
}

fn family(c: &Classification) -> Result<&Family> {
    c.family().ok_or(Error::OutOfScope(c.derived_dim))
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `dim M(L)`.
pub fn schur_dim_formula(c: &Classification) -> Result<Value> {
    let n = c.dim as i64;
    let half = |x: i64| -> usize {
        debug_assert!(x >= 0 && x % 2 == 0, "formula out of range at n = {n}");
        (x / 2) as usize
    };
    let v = match family(c)? {
        Family::Abelian(_) => Value::Exact(choose2(c.dim)),
        Family::Heisenberg(1) => Value::Exact(half((n - 1) * (n - 2)) + 1),
        Family::Heisenberg(_) => Value::Exact(half((n - 1) * (n - 2)) - 1),
        Family::L58 => Value::Exact(half(n * (n - 5)) + 6),
        Family::L622(_) | Family::L672(_) => Value::Exact(half((n + 1) * (n - 6) + 16)),
        Family::L1 => Value::Exact(half((n + 2) * (n - 7) + 18)),
        Family::L43 => Value::Exact(half((n - 1) * (n - 4)) + 2),
        Family::L55 => Value::Exact(half(n * (n - 5)) + 4),
        Family::GenHeisenbergRank2 { .. } => {
            let top = half((n - 2) * (n - 3));
            Value::Admissible(top - 2, top)
        }
        Family::StemClass3Dim2 { .. } => Value::Exact(half((n - 2) * (n - 3))),
    };
    Ok(v)
}

/// `dim L □ L = m(m + 1)/2` with `m = n − dim L²`.
pub fn square_dim(n: usize, derived_dim: usize) -> usize {
    let m = n - derived_dim;
    m * (m + 1) / 2
}

/// `dim L ∧ L = dim M(L) + dim L²`.
pub fn exterior_dim_formula(c: &Classification) -> Result<Value> {
    Ok(schur_dim_formula(c)?.map(|s| s + c.derived_dim))
}

/// `dim L ⊗ L = dim L ∧ L + dim L □ L`.
pub fn tensor_dim_formula(c: &Classification) -> Result<Value> {
    let sq = square_dim(c.dim, c.derived_dim);
    Ok(exterior_dim_formula(c)?.map(|e| e + sq))
}

/// `t(L) = n(n − 1)/2 − dim M(L)`.
pub fn corank(c: &Classification) -> Result<Value> {
    let top = choose2(c.dim);
    Ok(schur_dim_formula(c)?.map(|s| top - s))
}

pub fn is_capable_formula(c: &Classification) -> Result<bool> {
    Ok(family(c)?.is_capable())
}

/// Whether `L ∧ L` is abelian. Holds for every in-scope algebra: class 2
/// forces it, and for class 3 with `dim L² = 2` the derived subalgebra of
/// `L ∧ L` is spanned by `l ∧ l'` with `l, l' ∈ L²`, which vanishes here.
pub fn exterior_is_abelian(c: &Classification) -> Result<bool> {
    family(c)?;
    Ok(true)
}

pub fn functor_report(c: &Classification) -> Result<FunctorReport> {
    Ok(FunctorReport {
        schur_dim: schur_dim_formula(c)?,
        exterior_dim: exterior_dim_formula(c)?,
        tensor_dim: tensor_dim_formula(c)?,
        square_dim: square_dim(c.dim, c.derived_dim),
        corank: corank(c)?,
        capable: is_capable_formula(c)?,
        exterior_abelian: exterior_is_abelian(c)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{classify, make_catalog, CatalogId};
    use crate::exactla::FieldSpec;
    use crate::liealg::LieAlgebra;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn report(f: Family, k: usize) -> FunctorReport {
        let l = make_catalog(&CatalogId::new(f, k), Q).unwrap();
        functor_report(&classify(&l).unwrap()).unwrap()
    }

    #[test]
    fn small_catalog_values() {
        let cases = [
            (Family::L58, 6, 8, 14),
            (Family::L622(None), 8, 10, 20),
            (Family::L1, 9, 11, 26),
            (Family::L43, 2, 4, 7),
            (Family::L55, 4, 6, 12),
        ];
        for (f, m, e, t) in cases {
            let r = report(f.clone(), 0);
            assert_eq!(
                (r.schur_dim, r.exterior_dim, r.tensor_dim),
                (Value::Exact(m), Value::Exact(e), Value::Exact(t)),
                "{f}"
            );
            assert!(r.capable && r.exterior_abelian);
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(report(Family::L43, 2).schur_dim, Value::Exact(7));
        assert_eq!(report(Family::Abelian(1), 0).schur_dim, Value::Exact(0));
        assert!(!report(Family::Abelian(1), 0).capable);
        assert_eq!(report(Family::Heisenberg(2), 0).schur_dim, Value::Exact(5));
        assert_eq!(report(Family::Heisenberg(1), 1).corank, Value::Exact(2));
        assert!(!report(Family::Heisenberg(3), 2).capable);
        assert!(report(Family::L622(None), 1).capable);
    }

    #[test]
    fn abelian_family() {
        for n in 1..=8 {
            let r = report(Family::Abelian(n), 0);
            assert_eq!(r.schur_dim, Value::Exact(n * (n - 1) / 2));
            assert_eq!(r.tensor_dim, Value::Exact(n * n));
            assert_eq!(r.corank, Value::Exact(0));
        }
    }

    #[test]
    fn heisenberg_closed_form_matches_quadratic() {
        for m in 2..=6 {
            assert_eq!(report(Family::Heisenberg(m), 0).schur_dim, Value::Exact(2 * m * m - m - 1));
        }
    }

    #[test]
    fn coranks_along_capable_families() {
        type Corank = fn(usize) -> usize;
        let cases: [(Family, Corank); 6] = [
            (Family::Heisenberg(1), |n| n - 2),
            (Family::L58, |n| 2 * n - 6),
            (Family::L622(None), |n| 2 * n - 5),
            (Family::L1, |n| 2 * n - 2),
            (Family::L43, |n| 2 * n - 4),
            (Family::L55, |n| 2 * n - 4),
        ];
        for (f, t) in cases {
            for k in 0..=4 {
                let n = f.dim() + k;
                assert_eq!(report(f.clone(), k).corank, Value::Exact(t(n)), "{f} + A({k})");
            }
        }
    }

    #[test]
    fn direct_sum_additivity_on_formulas() {
        // M(A ⊕ B) = M(A) + M(B) + dim A/A² · dim B/B² whenever the sum stays in scope
        let pieces = [
            (Family::Heisenberg(1), 0),
            (Family::Heisenberg(2), 0),
            (Family::L43, 0),
            (Family::L58, 1),
            (Family::Abelian(3), 0),
        ];
        for (f, k) in &pieces {
            for n in 1..=3 {
                let a = make_catalog(&CatalogId::new(f.clone(), *k), Q).unwrap();
                let b = LieAlgebra::abelian(Q, n);
                let ca = classify(&a).unwrap();
                let sum = classify(&a.direct_sum(&b).unwrap()).unwrap();
                let lhs = schur_dim_formula(&sum).unwrap();
                let rhs = schur_dim_formula(&ca).unwrap().map(|s| s + choose2(n) + ca.abelianization_dim() * n);
                assert_eq!(lhs, rhs, "{f}");
            }
        }
    }

    #[test]
    fn class3_noncapable_stem() {
        let l = crate::decompose::class3_stem(Q, 6).unwrap();
        let r = functor_report(&classify(&l).unwrap()).unwrap();
        assert_eq!(r.schur_dim, Value::Exact(6));
        assert_eq!(r.exterior_dim, Value::Exact(8));
        assert_eq!(r.tensor_dim, Value::Exact(18));
        assert_eq!(r.corank, Value::Exact(9));
        assert!(!r.capable);
    }

    #[test]
    fn generalized_heisenberg_yields_admissible_pair() {
        let r = report(Family::Heisenberg(1), 0);
        assert!(r.schur_dim.exact().is_some());
        let h = crate::decompose::heisenberg(Q, 2);
        let l = h.direct_sum(&crate::decompose::heisenberg(Q, 1)).unwrap();
        let c = classify(&l).unwrap();
        assert_eq!(c.family(), Some(&Family::GenHeisenbergRank2 { stem_dim: 8 }));
        let s = schur_dim_formula(&c).unwrap();
        assert_eq!(s, Value::Admissible(13, 15));
        assert_eq!(corank(&c).unwrap(), Value::Admissible(13, 15));
        assert!(s.contains(15));
    }

    #[test]
    fn out_of_scope_is_an_error() {
        let h = crate::decompose::heisenberg(Q, 1);
        let l = h.direct_sum(&h).unwrap().direct_sum(&h).unwrap();
        let c = classify(&l).unwrap();
        assert_eq!(functor_report(&c), Err(Error::OutOfScope(3)));
    }
}
