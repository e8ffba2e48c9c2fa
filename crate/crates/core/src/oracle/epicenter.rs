//! The epicenter `Z*(L)` over a prime field, by sweeping central lines.
//!
//! A central ideal `I` lies in `Z*(L)` exactly when
//! `dim M(L) = dim M(L/I) − dim(L² ∩ I)`, so `z ≠ 0` is a member when the
//! line `⟨z⟩` passes that test.

use rayon::prelude::*;

use super::cochain::schur_dim_oracle;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Scalar, Subspace};
use crate::liealg::LieAlgebra;

/// Coordinate vectors of one representative per line of `GF(p)^d`,
/// normalised so the first nonzero entry is 1.
fn projective_points(p: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        let count = p.pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![0; d];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = code % p;
                code /= p;
            }
            out.push(v);
        }
    }
    out
}

fn line_count(p: u64, d: usize) -> usize {
    ((p.pow(d as u32) - 1) / (p - 1)) as usize
}

pub fn epicenter(l: &LieAlgebra) -> Result<Subspace> {
    let p = match l.field() {
        FieldSpec::Prime(p) => p,
        other => return Err(Error::InfiniteField(other)),
    };
    let series = l.series();
    if !series.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let field = l.field();
    let n = l.dim();
    let center = &series.center;
    let derived = &series.lower_central[1];
    let target = schur_dim_oracle(l);

    let members: Vec<Vec<Scalar>> = projective_points(p, center.dim())
        .into_par_iter()
        .filter_map(|coords| {
            let coeffs: Vec<Scalar> = coords.iter().map(|&c| field.from_i64(c as i64)).collect();
            let z = center.combine(&coeffs);
            let line = Subspace::from_spanning(field, n, [z.clone()]);
            let (quotient, _) = l.quotient(&line).expect("central lines are ideals");
            let meet = usize::from(derived.contains(&z));
            (schur_dim_oracle(&quotient) == target + meet).then_some(z)
        })
        .collect();

    let span = Subspace::from_spanning(field, n, members.iter().cloned());
    let expected = if span.is_zero() { 0 } else { line_count(p, span.dim()) };
    if members.len() != expected {
        return Err(Error::EpicenterNotClosed {
            members: members.len(),
            expected,
        });
    }
    Ok(span)
}

/// `L` is capable exactly when its epicenter vanishes.
pub fn capable_oracle(l: &LieAlgebra) -> Result<bool> {
    Ok(epicenter(l)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{class3_stem, heisenberg, make_catalog, CatalogId, Family};

    const F5: FieldSpec = FieldSpec::Prime(5);

    #[test]
    fn projective_point_counts() {
        for (p, d) in [(2, 3), (5, 2), (3, 4), (7, 0)] {
            let pts = projective_points(p, d);
            assert_eq!(pts.len(), if d == 0 { 0 } else { line_count(p, d) });
        }
    }

    #[test]
    fn heisenberg_epicenters() {
        assert!(epicenter(&heisenberg(F5, 1)).unwrap().is_zero());
        let h2 = heisenberg(F5, 2);
        assert_eq!(epicenter(&h2).unwrap(), h2.center());
    }

    #[test]
    fn class3_stem_is_unicentral() {
        let t = class3_stem(F5, 6).unwrap();
        let z = epicenter(&t).unwrap();
        assert_eq!(z.dim(), 1);
        assert_eq!(z, t.center());
    }

    #[test]
    fn capable_stems() {
        for f in [Family::L43, Family::L1] {
            let l = make_catalog(&CatalogId::new(f, 0), F5).unwrap();
            assert_eq!(capable_oracle(&l), Ok(true));
        }
    }

    #[test]
    fn abelian_summands_leave_epicenter_dimension() {
        let h2 = heisenberg(F5, 2);
        let bigger = h2.direct_sum(&LieAlgebra::abelian(F5, 2)).unwrap();
        assert_eq!(epicenter(&bigger).unwrap().dim(), 1);
    }

    #[test]
    fn rationals_are_rejected() {
        let l = heisenberg(FieldSpec::Rationals, 1);
        assert_eq!(capable_oracle(&l), Err(Error::InfiniteField(FieldSpec::Rationals)));
    }
}
