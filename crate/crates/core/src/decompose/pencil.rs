//! The pencil of commutator forms of an algebra with `dim L² = 2`.
//!
//! Writing `[u, v] = ω₁(u, v) z₁ + ω₂(u, v) z₂` for a basis `z₁, z₂` of
//! `L²`, every member `s·ω₁ + t·ω₂` is an alternating form on a complement
//! of `L²`. A member has rank at most 2 exactly when all of its 4×4
//! principal Pfaffians vanish; those Pfaffians are binary quadratic forms in
//! `(s, t)`, so the question reduces to a common root of a family of
//! quadratics over the algebraic closure, decided by a polynomial gcd.

use crate::exactla::{Scalar, Subspace};
use crate::liealg::LieAlgebra;

/// True when some nonzero member of the commutator pencil has rank ≤ 2
/// over the algebraic closure of the base field. Requires `dim L² = 2`.
pub fn has_low_rank_member(l: &LieAlgebra) -> bool {
    let field = l.field();
    let derived = l.derived();
    assert_eq!(derived.dim(), 2, "pencil needs a two-dimensional derived subalgebra");
    let complement = Subspace::complement_within(&derived, &l.full()).expect("L² ⊆ L");
    let vs = complement.basis_rows();
    let r = vs.len();

    // forms[t][a][b]
    let mut forms = vec![vec![vec![field.zero(); r]; r]; 2];
    for a in 0..r {
        for b in a + 1..r {
            let c = derived
                .coordinates(&l.bracket(&vs[a], &vs[b]))
                .expect("brackets lie in L²");
            for t in 0..2 {
                forms[t][a][b] = c[t].clone();
                forms[t][b][a] = c[t].neg();
            }
        }
    }
    let entry = |a: usize, b: usize| (forms[0][a][b].clone(), forms[1][a][b].clone());

    // (s² coefficient, st coefficient, t² coefficient) of each Pfaffian
    let mut quadratics = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            for c in b + 1..r {
                for d in c + 1..r {
                    let terms = [
                        (entry(a, b), entry(c, d), false),
                        (entry(a, c), entry(b, d), true),
                        (entry(a, d), entry(b, c), false),
                    ];
                    let mut q = [field.zero(), field.zero(), field.zero()];
                    for ((x1, y1), (x2, y2), negate) in terms {
                        let parts = [x1.mul(&x2), x1.mul(&y2).add(&y1.mul(&x2)), y1.mul(&y2)];
                        for (acc, p) in q.iter_mut().zip(parts) {
                            *acc = if negate { acc.sub(&p) } else { acc.add(&p) };
                        }
                    }
                    quadratics.push(q);
                }
            }
        }
    }
    common_projective_root(&quadratics)
}

/// Whether the binary quadratics `α s² + β st + γ t²` share a root
/// `(s : t) ≠ (0 : 0)` over the algebraic closure.
fn common_projective_root(quadratics: &[[Scalar; 3]]) -> bool {
    if quadratics.iter().all(|q| q[0].is_zero()) {
        // (1 : 0), which also covers the all-zero family
        return true;
    }
    let g = quadratics
        .iter()
        .map(|[a, b, c]| vec![c.clone(), b.clone(), a.clone()])
        .fold(Vec::new(), poly_gcd);
    degree(&g).is_some_and(|d| d >= 1)
}

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Remainder of `a` modulo a nonzero `b`; coefficients are stored lowest first.
fn poly_rem(mut a: Vec<Scalar>, b: &[Scalar]) -> Vec<Scalar> {
    let db = degree(b).expect("nonzero divisor");
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    while let Some(da) = degree(&a) {
        if da < db {
            break;
        }
        let c = a[da].mul(&lead_inv);
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            a[da - db + i] = a[da - db + i].sub(&c.mul(bi));
        }
    }
    trim(a)
}

fn poly_gcd(a: Vec<Scalar>, b: Vec<Scalar>) -> Vec<Scalar> {
    let (mut a, mut b) = (trim(a), trim(b));
    while degree(&b).is_some() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::FieldSpec;
    use crate::decompose::catalog::{from_commutator_forms, make_catalog, CatalogId, Family};
    use crate::exactla::Matrix;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn alt(field: FieldSpec, r: usize, pairs: &[(usize, usize, i64)]) -> Matrix {
        let mut m = Matrix::zeros(field, r, r);
        for &(a, b, c) in pairs {
            m.set(a - 1, b - 1, field.from_i64(c));
            m.set(b - 1, a - 1, field.from_i64(-c));
        }
        m
    }

    #[test]
    fn l1_pencil_is_nondegenerate() {
        for field in [Q, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            let l = make_catalog(&CatalogId::new(Family::L1, 2), field).unwrap();
            assert!(!has_low_rank_member(&l), "{field}");
        }
    }

    #[test]
    fn split_pencil_has_degenerate_member() {
        // e12, e13 on <v1,v2,v3> plus e45 carrying λ = 2 against both
        for field in [Q, FieldSpec::Prime(3), FieldSpec::Prime(2)] {
            let a = alt(field, 5, &[(1, 2, 1), (4, 5, 1)]);
            let b = alt(field, 5, &[(1, 3, 1), (4, 5, 2)]);
            let l = from_commutator_forms(field, &[a, b]).unwrap();
            assert!(has_low_rank_member(&l), "{field}");
        }
    }

    #[test]
    fn l58_members_all_have_rank_two() {
        let l = make_catalog(&CatalogId::new(Family::L58, 0), Q).unwrap();
        assert!(has_low_rank_member(&l));
    }

    #[test]
    fn gcd_detects_shared_roots() {
        let q = |v: &[i64]| v.iter().map(|&x| Q.from_i64(x)).collect::<Vec<_>>();
        // (s-1)(s-2) and (s-1)(s+3)
        let g = poly_gcd(q(&[2, -3, 1]), q(&[-3, 2, 1]));
        assert_eq!(degree(&g), Some(1));
        // s² + 1 and s² + 2 share nothing
        let g = poly_gcd(q(&[1, 0, 1]), q(&[2, 0, 1]));
        assert_eq!(degree(&g), Some(0));
    }
}
