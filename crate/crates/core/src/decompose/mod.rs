//! Stem ⊕ abelian splitting, Heisenberg recognition, catalog constructors
//! and invariant-based classification of nilpotent algebras with
//! `dim L² ≤ 2`.

pub mod catalog;
pub mod pencil;

pub use catalog::{class3_stem, from_commutator_forms, heisenberg, make_catalog, CatalogId, Family};

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Subspace};
use crate::liealg::{LieAlgebra, SeriesReport};

/// A splitting `L = T ⊕ A` with `A` central abelian, `T ⊇ L²` and
/// `Z(T) = Z(L) ∩ L²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemDecomposition {
    /// Columns are the new basis in old coordinates: first a basis of `T`,
    /// then a basis of `A`.
    pub basis_change: Matrix,
    pub stem_dim: usize,
    pub abelian_dim: usize,
    pub stem: Subspace,
    pub abelian: Subspace,
}

impl StemDecomposition {
    /// `T` as a Lie algebra on the first `stem_dim` new basis vectors.
    pub fn stem_algebra(&self, l: &LieAlgebra) -> LieAlgebra {
        let split = l
            .change_basis(&self.basis_change)
            .expect("basis change is invertible");
        let field = l.field();
        let n = l.dim();
        let first = (0..self.stem_dim)
            .map(|i| {
                let mut v = vec![field.zero(); n];
                v[i] = field.one();
                v
            })
            .collect::<Vec<_>>();
        split
            .subalgebra(&Subspace::from_spanning(field, n, first))
            .expect("stem is a subalgebra")
    }
}

/// Splits off the largest central abelian direct summand. `C = Z(L) ∩ L²`
/// is extended to a basis of `Z(L)`; the extension spans `A`. Any
/// complement of `A` containing `L²` is an ideal and serves as `T`.
pub fn stem_decompose(l: &LieAlgebra) -> Result<StemDecomposition> {
    let series = l.series();
    stem_decompose_with(l, &series)
}

fn stem_decompose_with(l: &LieAlgebra, series: &SeriesReport) -> Result<StemDecomposition> {
    if !series.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    if l.is_abelian() {
        return Err(Error::Abelian);
    }
    let derived = &series.lower_central[1];
    let center = &series.center;
    let core = center.intersect(derived)?;
    let abelian = Subspace::complement_within(&core, center)?;
    let derived_plus_a = derived.sum(&abelian)?;
    let rest = Subspace::complement_within(&derived_plus_a, &l.full())?;
    let stem = rest.sum(derived)?;

    let columns: Vec<_> = rest
        .basis_rows()
        .iter()
        .chain(derived.basis_rows())
        .chain(abelian.basis_rows())
        .cloned()
        .collect();
    let basis_change = Matrix::from_rows(l.field(), l.dim(), columns).transpose();
    Ok(StemDecomposition {
        basis_change,
        stem_dim: stem.dim(),
        abelian_dim: abelian.dim(),
        stem,
        abelian,
    })
}

/// `m` with `L ≅ H(m) ⊕ A(n − 2m − 1)`, for `dim L² = 1`.
pub fn heisenberg_rank(l: &LieAlgebra) -> Result<usize> {
    let derived = l.derived().dim();
    if derived != 1 {
        return Err(Error::DerivedDimension {
            expected: 1,
            found: derived,
        });
    }
    let codim = l.dim() - l.center().dim();
    if !codim.is_multiple_of(2) || codim == 0 {
        return Err(Error::ParityViolation(codim));
    }
    Ok(codim / 2)
}

/// Invariants and catalog verdict for one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub field: FieldSpec,
    pub dim: usize,
    pub derived_dim: usize,
    pub class: usize,
    pub center_dim: usize,
    /// `dim L³`
    pub cube_dim: usize,
    /// `dim Z(L) ∩ L²`
    pub center_derived_dim: usize,
    pub stem_dim: usize,
    pub abelian_dim: usize,
    /// `None` when `dim L² > 2`.
    pub catalog: Option<CatalogId>,
    /// From the list of capable algebras; `None` when out of scope.
    pub capable_by_catalog: Option<bool>,
}

impl Classification {
    pub fn in_scope(&self) -> bool {
        self.catalog.is_some()
    }

    pub fn family(&self) -> Option<&Family> {
        self.catalog.as_ref().map(|c| &c.family)
    }

    /// `dim L/L²`
    pub fn abelianization_dim(&self) -> usize {
        self.dim - self.derived_dim
    }
}

/// Dispatches on `(dim L², class, stem dimension)`:
///
/// * `dim L² = 0`: `A(n)`;
/// * `dim L² = 1`: `H(m) ⊕ A(k)`;
/// * `dim L² = 2`, class 2: stem of dimension 5, 6, 7 or more. Dimension 6
///   is `L6_22` (`L6_7_2` in characteristic 2). In dimension 7 the stem is
///   `L1` exactly when no nonzero member of the commutator pencil has rank
///   ≤ 2; every other class-2 stem is a non-capable generalized Heisenberg
///   algebra;
/// * `dim L² = 2`, class 3: `L4_3`, `L5_5`, or a non-capable stem of
///   dimension ≥ 6.
pub fn classify(l: &LieAlgebra) -> Result<Classification> {
    let series = l.series();
    let Some(class) = series.nilpotency_class else {
        return Err(Error::NotNilpotent);
    };
    let n = l.dim();
    let derived_dim = series.derived_dim();
    let center = &series.center;
    let center_derived_dim = center.intersect(&series.lower_central[1])?.dim();
    let (stem_dim, abelian_dim) = if l.is_abelian() {
        (0, n)
    } else {
        let d = stem_decompose_with(l, &series)?;
        (d.stem_dim, d.abelian_dim)
    };

    let catalog = match (derived_dim, class) {
        (0, _) => Some(CatalogId::new(Family::Abelian(n), 0)),
        (1, _) => {
            let m = heisenberg_rank(l)?;
            debug_assert_eq!(abelian_dim, n - 2 * m - 1);
            Some(CatalogId::new(Family::Heisenberg(m), n - 2 * m - 1))
        }
        (2, 2) => {
            let family = match stem_dim {
                5 => Family::L58,
                6 if l.field().characteristic() == 2 => Family::L672(None),
                6 => Family::L622(None),
                7 if !pencil::has_low_rank_member(l) => Family::L1,
                s => Family::GenHeisenbergRank2 { stem_dim: s },
            };
            Some(CatalogId::new(family, abelian_dim))
        }
        (2, 3) => {
            let family = match stem_dim {
                4 => Family::L43,
                5 => Family::L55,
                s => Family::StemClass3Dim2 { stem_dim: s },
            };
            Some(CatalogId::new(family, abelian_dim))
        }
        _ => None,
    };
    let capable_by_catalog = catalog.as_ref().map(|c| c.family.is_capable());
    Ok(Classification {
        field: l.field(),
        dim: n,
        derived_dim,
        class,
        center_dim: center.dim(),
        cube_dim: series.term_dim(3),
        center_derived_dim,
        stem_dim,
        abelian_dim,
        catalog,
        capable_by_catalog,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{invertible_matrix, seeded};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn cat(f: Family, k: usize) -> LieAlgebra {
        make_catalog(&CatalogId::new(f, k), Q).unwrap()
    }

    #[test]
    fn split_examples() {
        let d = stem_decompose(&cat(Family::Heisenberg(1), 2)).unwrap();
        assert_eq!((d.stem_dim, d.abelian_dim), (3, 2));

        let d = stem_decompose(&cat(Family::L43, 0)).unwrap();
        assert_eq!((d.stem_dim, d.abelian_dim), (4, 0));

        let l = cat(Family::Heisenberg(2), 1);
        let p = invertible_matrix(Q, 6, &mut seeded(3));
        let d = stem_decompose(&l.change_basis(&p).unwrap()).unwrap();
        assert_eq!((d.stem_dim, d.abelian_dim), (5, 1));
    }

    #[test]
    fn split_rejects_abelian() {
        assert_eq!(stem_decompose(&LieAlgebra::abelian(Q, 3)), Err(Error::Abelian));
    }

    #[test]
    fn stem_center_is_center_meet_derived() {
        let l = cat(Family::L55, 3);
        let p = invertible_matrix(Q, 8, &mut seeded(9));
        let l = l.change_basis(&p).unwrap();
        let d = stem_decompose(&l).unwrap();
        let t = d.stem_algebra(&l);
        let s = l.series();
        let core = s.center.intersect(&s.lower_central[1]).unwrap();
        assert_eq!(t.center().dim(), core.dim());
        // Z(T) inside L equals Z(L) ∩ L²
        let embed: Vec<_> = t
            .center()
            .basis_rows()
            .iter()
            .map(|z| {
                let mut full = z.clone();
                full.resize(l.dim(), Q.zero());
                d.basis_change.mul_vec(&full)
            })
            .collect();
        assert_eq!(Subspace::from_spanning(Q, l.dim(), embed), core);
    }

    #[test]
    fn heisenberg_ranks() {
        assert_eq!(heisenberg_rank(&cat(Family::Heisenberg(1), 0)), Ok(1));
        assert_eq!(heisenberg_rank(&cat(Family::Heisenberg(3), 4)), Ok(3));
        assert!(matches!(
            heisenberg_rank(&LieAlgebra::abelian(Q, 4)),
            Err(Error::DerivedDimension { expected: 1, found: 0 })
        ));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&cat(Family::Heisenberg(1), 4)).unwrap();
        assert_eq!(c.catalog, Some(CatalogId::new(Family::Heisenberg(1), 4)));
        assert_eq!(c.capable_by_catalog, Some(true));

        let c = classify(&cat(Family::Heisenberg(2), 0)).unwrap();
        assert_eq!(c.catalog, Some(CatalogId::new(Family::Heisenberg(2), 0)));
        assert_eq!(c.capable_by_catalog, Some(false));

        let l = cat(Family::L55, 3);
        let p = invertible_matrix(Q, 8, &mut seeded(21));
        let c = classify(&l.change_basis(&p).unwrap()).unwrap();
        assert_eq!(c.catalog, Some(CatalogId::new(Family::L55, 3)));
        assert_eq!((c.class, c.capable_by_catalog), (3, Some(true)));
    }

    #[test]
    fn classify_class3_stems() {
        let c = classify(&class3_stem(Q, 6).unwrap()).unwrap();
        assert_eq!(
            c.catalog,
            Some(CatalogId::new(Family::StemClass3Dim2 { stem_dim: 6 }, 0))
        );
        assert_eq!((c.cube_dim, c.center_dim), (1, 1));
        assert_eq!(c.capable_by_catalog, Some(false));
    }

    #[test]
    fn out_of_scope_and_non_nilpotent() {
        // H(1) ⊕ H(1) ⊕ H(1): dim L² = 3
        let h = heisenberg(Q, 1);
        let l = h.direct_sum(&h).unwrap().direct_sum(&h).unwrap();
        let c = classify(&l).unwrap();
        assert_eq!(c.derived_dim, 3);
        assert!(c.catalog.is_none());
        assert!(c.capable_by_catalog.is_none());

        let v = vec![Q.one(), Q.zero()];
        let solvable = LieAlgebra::from_brackets(Q, 2, [(0, 1, v)]).unwrap();
        assert_eq!(classify(&solvable), Err(Error::NotNilpotent));
    }
}
