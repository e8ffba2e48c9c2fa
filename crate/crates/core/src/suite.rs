//! Ready-made test subjects: the small catalog algebras, non-capable
//! generalized Heisenberg stems, and seeded random sums inside the
//! `dim L² ≤ 2` regime.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decompose::{class3_stem, heisenberg, make_catalog, CatalogId, Family};
use crate::exactla::{FieldSpec, Matrix};
use crate::liealg::LieAlgebra;
use crate::random::invertible_matrix;

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub algebra: LieAlgebra,
}

impl Instance {
    fn new(name: impl Into<String>, algebra: LieAlgebra) -> Self {
        Instance {
            name: name.into(),
            algebra,
        }
    }
}

fn catalog(family: Family, k: usize, field: FieldSpec) -> Instance {
    let id = CatalogId::new(family, k);
    let algebra = make_catalog(&id, field).expect("catalog entry admits this field");
    Instance::new(format!("{id} over {field}"), algebra)
}

/// The capable stems with two-dimensional derived subalgebra, each over a
/// field it is defined over: `L5_8`, `L6_22(1)` over `GF(3)` and `Q`,
/// `L6_7_2(0)` and `L6_7_2(1)` over `GF(2)`, `L1`, `L4_3`, `L5_5`.
pub fn small_stems() -> Vec<Instance> {
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::Prime(2);
    let f3 = FieldSpec::Prime(3);
    vec![
        catalog(Family::L58, 0, q),
        catalog(Family::L622(Some(f3.one())), 0, f3),
        catalog(Family::L622(Some(q.one())), 0, q),
        catalog(Family::L672(Some(f2.zero())), 0, f2),
        catalog(Family::L672(Some(f2.one())), 0, f2),
        catalog(Family::L1, 0, q),
        catalog(Family::L43, 0, q),
        catalog(Family::L55, 0, q),
    ]
}

/// Alternating `r × r` matrix with `m[a][b] = c`, `m[b][a] = −c` for the
/// 1-based pairs given.
pub fn alternating(field: FieldSpec, r: usize, pairs: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zeros(field, r, r);
    for &(a, b, c) in pairs {
        m.set(a - 1, b - 1, field.from_i64(c));
        m.set(b - 1, a - 1, field.from_i64(-c));
    }
    m
}

/// A random pair of alternating forms on `F^r`, giving a class-2 algebra
/// of dimension `r + 2` (the forms may be dependent or share a radical;
/// callers filter with [`crate::decompose::classify`]).
pub fn random_pencil<R: Rng>(field: FieldSpec, r: usize, rng: &mut R) -> LieAlgebra {
    let forms: Vec<Matrix> = (0..2)
        .map(|_| {
            let mut m = Matrix::zeros(field, r, r);
            for a in 0..r {
                for b in a + 1..r {
                    let c = match field {
                        FieldSpec::Rationals => rng.gen_range(-2..=2),
                        FieldSpec::Prime(p) => rng.gen_range(0..p) as i64,
                    };
                    m.set(a, b, field.from_i64(c));
                    m.set(b, a, field.from_i64(-c));
                }
            }
            m
        })
        .collect();
    crate::decompose::from_commutator_forms(field, &forms).expect("forms are alternating")
}

/// Class-2 stems with `L² = Z(L)` of dimension 2 that are not on the
/// capable list: sums of two Heisenberg algebras of total rank ≥ 3, and a
/// 7-dimensional stem whose commutator pencil has a rank-2 member.
pub fn generalized_heisenberg_stems(field: FieldSpec) -> Vec<Instance> {
    let mut out = Vec::new();
    for (m1, m2) in [(2, 1), (3, 1), (2, 2)] {
        let l = heisenberg(field, m1).direct_sum(&heisenberg(field, m2)).unwrap();
        out.push(Instance::new(format!("H({m1}) + H({m2}) over {field}"), l));
    }
    let a = alternating(field, 5, &[(1, 2, 1), (4, 5, 1)]);
    let b = alternating(field, 5, &[(1, 3, 1), (4, 5, 2)]);
    let split = crate::decompose::from_commutator_forms(field, &[a, b]).unwrap();
    out.push(Instance::new(format!("split pencil [7] over {field}"), split));
    out
}

/// `class3_stem(n)` for the given dimensions.
pub fn class3_stems(field: FieldSpec, dims: impl IntoIterator<Item = usize>) -> Vec<Instance> {
    dims.into_iter()
        .map(|n| {
            let l = class3_stem(field, n).expect("n ≥ 4");
            Instance::new(format!("class-3 stem [{n}] over {field}"), l)
        })
        .collect()
}

/// Catalog summands that are defined over `field`, tagged with `dim L²`.
fn pieces(field: FieldSpec) -> Vec<(Family, usize)> {
    let mut out = vec![
        (Family::Abelian(1), 0),
        (Family::Abelian(2), 0),
        (Family::Heisenberg(1), 1),
        (Family::Heisenberg(2), 1),
        (Family::Heisenberg(3), 1),
        (Family::L43, 2),
        (Family::L55, 2),
        (Family::L58, 2),
        (Family::L1, 2),
    ];
    if field.characteristic() == 2 {
        out.push((Family::L672(Some(field.one())), 2));
    } else {
        out.push((Family::L622(Some(field.one())), 2));
    }
    out
}

/// A random direct sum of catalog pieces with total `dim L² ≤ 2` and
/// dimension at most `max_dim`, in a random basis.
pub fn random_in_scope_sum<R: Rng>(field: FieldSpec, max_dim: usize, rng: &mut R) -> Instance {
    let all = pieces(field);
    loop {
        let mut derived = 0;
        let mut names = Vec::new();
        let mut algebra = LieAlgebra::abelian(field, 0);
        let count = rng.gen_range(1..=3);
        for _ in 0..count {
            let (family, d) = all.choose(rng).unwrap().clone();
            if derived + d > 2 || algebra.dim() + family.dim() > max_dim {
                continue;
            }
            derived += d;
            let piece = make_catalog(&CatalogId::new(family.clone(), 0), field).unwrap();
            algebra = algebra.direct_sum(&piece).unwrap();
            names.push(family.to_string());
        }
        if algebra.dim() == 0 {
            continue;
        }
        let p = invertible_matrix(field, algebra.dim(), rng);
        let algebra = algebra.change_basis(&p).unwrap().without_labels();
        return Instance::new(format!("{} over {field}, random basis", names.join(" + ")), algebra);
    }
}

/// A random catalog algebra with abelian summand, of dimension at most
/// `max_dim`, not restricted to `dim L² ≤ 2` once summed with another.
pub fn random_catalog<R: Rng>(field: FieldSpec, max_dim: usize, rng: &mut R) -> Instance {
    let all = pieces(field);
    loop {
        let (family, _) = all.choose(rng).unwrap().clone();
        if family.dim() > max_dim {
            continue;
        }
        let k = rng.gen_range(0..=(max_dim - family.dim()).min(2));
        return catalog(family, k, field);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::classify;
    use crate::random::seeded;

    #[test]
    fn random_sums_stay_in_scope() {
        let mut rng = seeded(1);
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(7)] {
            for _ in 0..20 {
                let inst = random_in_scope_sum(field, 9, &mut rng);
                assert!(inst.algebra.dim() <= 9);
                assert!(inst.algebra.validate().is_empty(), "{}", inst.name);
                assert!(classify(&inst.algebra).unwrap().in_scope(), "{}", inst.name);
            }
        }
    }

    #[test]
    fn generalized_heisenberg_stems_classify() {
        for inst in generalized_heisenberg_stems(FieldSpec::Prime(5)) {
            let c = classify(&inst.algebra).unwrap();
            assert!(matches!(c.family(), Some(Family::GenHeisenbergRank2 { .. })), "{}", inst.name);
            assert_eq!(c.abelian_dim, 0);
        }
    }
}
