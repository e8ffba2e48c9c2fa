use schurlie::decompose::{classify, make_catalog, CatalogId, Family};
use schurlie::oracle::{cross_check, epicenter, schur_dim_oracle};
use schurlie::random::{invertible_matrix, seeded};
use schurlie::suite::{class3_stems, generalized_heisenberg_stems, small_stems};
use schurlie::{FieldSpec, LieAlgebra};

const Q: FieldSpec = FieldSpec::Rationals;
const F5: FieldSpec = FieldSpec::Prime(5);

#[test]
fn small_stems_pass() {
    for inst in small_stems() {
        let r = cross_check(&inst.algebra).unwrap();
        assert!(r.passed(), "{}: {:?}", inst.name, r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn small_stems_over_gf5_compare_capability() {
    for f in [Family::L58, Family::L622(None), Family::L1, Family::L43, Family::L55] {
        let l = make_catalog(&CatalogId::new(f.clone(), 1), F5).unwrap();
        let r = cross_check(&l).unwrap();
        assert_eq!(r.oracle.capable, Some(true), "{f}");
        assert!(r.passed(), "{f}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn heisenberg_grid() {
    for m in 1..=4 {
        for k in 0..=3 {
            let l = make_catalog(&CatalogId::new(Family::Heisenberg(m), k), Q).unwrap();
            let r = cross_check(&l).unwrap();
            assert!(r.passed(), "H({m}) + A({k})");
        }
    }
}

#[test]
fn reports_are_basis_independent() {
    let mut rng = seeded(42);
    for inst in small_stems() {
        let l = &inst.algebra;
        let before = cross_check(l).unwrap();
        let p = invertible_matrix(l.field(), l.dim(), &mut rng);
        let after = cross_check(&l.change_basis(&p).unwrap()).unwrap();
        assert_eq!(before.oracle, after.oracle, "{}", inst.name);
        assert_eq!(before.formula, after.formula, "{}", inst.name);
        // recognition forgets ε/η, so compare families without parameters
        let fam = |c: &schurlie::oracle::CrossCheck| c.classification.family().map(Family::unparameterized);
        assert_eq!(fam(&before), fam(&after), "{}", inst.name);
    }
}

#[test]
fn schur_multiplier_is_field_stable() {
    let families = [
        Family::Heisenberg(1),
        Family::Heisenberg(2),
        Family::L43,
        Family::L55,
        Family::L58,
        Family::L622(None),
        Family::L1,
    ];
    for f in families {
        for k in 0..=2 {
            let id = CatalogId::new(f.clone(), k);
            let over_q = schur_dim_oracle(&make_catalog(&id, Q).unwrap());
            for p in [5, 7] {
                let over_p = schur_dim_oracle(&make_catalog(&id, FieldSpec::Prime(p)).unwrap());
                assert_eq!(over_q, over_p, "{id} over GF({p})");
            }
        }
    }
}

#[test]
fn reduction_mod_p_matches_construction() {
    let id = CatalogId::new(Family::L55, 2);
    let reduced = make_catalog(&id, Q).unwrap().reduce_mod(5).unwrap();
    assert_eq!(reduced, make_catalog(&id, F5).unwrap());
}

#[test]
fn epicenter_ignores_abelian_summands() {
    let stems = [
        make_catalog(&CatalogId::new(Family::Heisenberg(2), 0), F5).unwrap(),
        make_catalog(&CatalogId::new(Family::L43, 0), F5).unwrap(),
        make_catalog(&CatalogId::new(Family::L58, 0), F5).unwrap(),
    ];
    let extra = class3_stems(F5, [6]).remove(0).algebra;
    for t in stems.iter().chain([&extra]) {
        let base = epicenter(t).unwrap();
        assert!(t.center().contains_subspace(&base));
        for k in 1..=2 {
            let sum = t.direct_sum(&LieAlgebra::abelian(F5, k)).unwrap();
            let z = epicenter(&sum).unwrap();
            assert_eq!(z.dim(), base.dim());
            // an ideal inside the center
            assert!(sum.center().contains_subspace(&z));
        }
    }
}

#[test]
fn generalized_heisenberg_stems_are_not_capable() {
    for inst in generalized_heisenberg_stems(F5) {
        let r = cross_check(&inst.algebra).unwrap();
        assert_eq!(r.oracle.capable, Some(false), "{}", inst.name);
        assert!(r.passed(), "{}: {:?}", inst.name, r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn class3_stems_of_several_dimensions() {
    for inst in class3_stems(F5, 6..=8) {
        let n = inst.algebra.dim();
        let r = cross_check(&inst.algebra).unwrap();
        assert!(r.passed(), "{}: {:?}", inst.name, r.failures().collect::<Vec<_>>());
        assert_eq!(r.oracle.schur_dim, (n - 2) * (n - 3) / 2);
        assert_eq!(r.oracle.tensor_dim, n * n - 4 * n + 6);
        assert_eq!(r.oracle.epicenter_dim, Some(1));
        assert_eq!(r.classification.center_dim, 1);
    }
}

#[test]
fn out_of_scope_inputs_still_get_oracle_values() {
    let h = make_catalog(&CatalogId::new(Family::Heisenberg(1), 0), Q).unwrap();
    let l = h.direct_sum(&h).unwrap().direct_sum(&h).unwrap();
    assert!(!classify(&l).unwrap().in_scope());
    assert!(cross_check(&l).is_err());
    // Direct sums add multipliers plus the cross term.
    assert_eq!(schur_dim_oracle(&l), 3 * 2 + 3 * 4);
}
