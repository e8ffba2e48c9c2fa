use proptest::prelude::*;

use schurlie::decompose::{classify, stem_decompose};
use schurlie::oracle::{schur_dim_oracle, squares};
use schurlie::random::{invertible_matrix, seeded};
use schurlie::suite::random_in_scope_sum;
use schurlie::{FieldSpec, Matrix, Subspace};

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::Prime(2)),
        Just(FieldSpec::Prime(3)),
        Just(FieldSpec::Prime(5)),
        Just(FieldSpec::Prime(101)),
    ]
}

fn matrix(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::new(
        field,
        rows,
        cols,
        entries.iter().map(|&x| field.from_i64(x)).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(field in field_strategy(), rows in 1usize..6, cols in 1usize..6,
                    entries in prop::collection::vec(-4i64..=4, 36)) {
        let m = matrix(field, rows, cols, &entries[..rows * cols]);
        prop_assert_eq!(m.rank() + m.kernel().dim(), cols);
        for v in m.kernel().basis_rows() {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let (r, rank) = m.rref();
        prop_assert_eq!(r.rref(), (r.clone(), rank));
        prop_assert_eq!(m.transpose().rank(), rank);
    }

    #[test]
    fn inverse_round_trip(field in field_strategy(), n in 1usize..6, seed in any::<u64>()) {
        let p = invertible_matrix(field, n, &mut seeded(seed));
        let q = p.inverse().unwrap();
        prop_assert_eq!(p.mul(&q).unwrap(), Matrix::identity(field, n));
    }

    #[test]
    fn subspace_dimension_formula(field in field_strategy(),
                                  a in prop::collection::vec(-2i64..=2, 20),
                                  b in prop::collection::vec(-2i64..=2, 15)) {
        let u = Subspace::from_matrix(&matrix(field, 4, 5, &a));
        let v = Subspace::from_matrix(&matrix(field, 3, 5, &b));
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(u.contains_subspace(&meet) && v.contains_subspace(&meet));
        let c = Subspace::complement_within(&u, &sum).unwrap();
        prop_assert_eq!(c.dim() + u.dim(), sum.dim());
        prop_assert!(c.intersect(&u).unwrap().is_zero());
    }

    #[test]
    fn invariants_survive_basis_change(field in field_strategy(), seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let inst = random_in_scope_sum(field, 8, &mut rng);
        let l = &inst.algebra;
        prop_assert!(l.validate().is_empty());
        let p = invertible_matrix(field, l.dim(), &mut rng);
        let l2 = l.change_basis(&p).unwrap();
        prop_assert!(l2.validate().is_empty());
        prop_assert_eq!(l.series().lower_central_dims(), l2.series().lower_central_dims());
        prop_assert_eq!(l.center().dim(), l2.center().dim());

        let (c1, c2) = (classify(l).unwrap(), classify(&l2).unwrap());
        prop_assert_eq!(&c1.catalog, &c2.catalog);
        prop_assert_eq!(c1.stem_dim + c1.abelian_dim, l.dim());
        prop_assert_eq!(schur_dim_oracle(l), schur_dim_oracle(&l2));
        prop_assert_eq!(squares(l), squares(&l2));
    }

    #[test]
    fn stem_decomposition_is_a_splitting(field in field_strategy(), seed in any::<u64>()) {
        let inst = random_in_scope_sum(field, 8, &mut seeded(seed));
        let l = &inst.algebra;
        prop_assume!(!l.is_abelian());
        let d = stem_decompose(l).unwrap();
        prop_assert!(d.basis_change.is_invertible());
        prop_assert!(d.stem.contains_subspace(&l.derived()));
        prop_assert!(l.center().contains_subspace(&d.abelian));
        prop_assert!(d.stem.intersect(&d.abelian).unwrap().is_zero());
        let t = d.stem_algebra(l);
        let s = l.series();
        prop_assert_eq!(t.center().dim(), s.center.intersect(&s.lower_central[1]).unwrap().dim());
    }
}
