//! The nonabelian tensor and exterior squares as quotients of the ordinary
//! tensor square `L ⊗_F L`.
//!
//! `L ⊗ L` is generated by symbols `x ⊗ y`, bilinear, subject to
//!
//! ```text
//! [x, x'] ⊗ y = x ⊗ [x', y] − x' ⊗ [x, y]
//! x ⊗ [y, y'] = [y', x] ⊗ y − [y, x] ⊗ y'
//! [x ⊗ y, x' ⊗ y'] = [x, y] ⊗ [x', y']
//! ```
//!
//! The third relation expresses every bracket as a linear combination of
//! symbols, so `L ⊗ L` is a quotient of `L ⊗_F L`. The kernel is spanned by
//! the first two families together with the relations forced on the
//! bracket by the Lie axioms: `a ⊗ a` (needed in characteristic 2, where it
//! does not follow from `a ⊗ b + b ⊗ a`), `a ⊗ b + b ⊗ a` and
//! `[a, b] ⊗ c + [b, c] ⊗ a + [c, a] ⊗ b` for `a, b, c ∈ L²`. That span is
//! already an ideal, since the commutator map `x ⊗ y ↦ [x, y]` kills it.
//! `L ∧ L` is the further quotient by all `x ⊗ x`.

use crate::exactla::{FieldSpec, Scalar, Subspace};
use crate::liealg::LieAlgebra;

/// Dimensions of `L ⊗ L` and `L ∧ L`, computed from relations alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Squares {
    pub tensor_dim: usize,
    pub exterior_dim: usize,
    /// Whether every bracket `[u, v]` of `L ∧ L` vanishes.
    pub exterior_abelian: bool,
}

struct Builder {
    field: FieldSpec,
    n: usize,
}

impl Builder {
    fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.n * self.n]
    }

    /// `out += sign · (u ⊗ v)`
    fn add_outer(&self, out: &mut [Scalar], u: &[Scalar], v: &[Scalar], negate: bool) {
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                let t = ua.mul(vb);
                let slot = &mut out[a * self.n + b];
                *slot = if negate { slot.sub(&t) } else { slot.add(&t) };
            }
        }
    }

    fn outer(&self, terms: &[(&[Scalar], &[Scalar], bool)]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (u, v, negate) in terms {
            self.add_outer(&mut out, u, v, *negate);
        }
        out
    }
}

fn tensor_relations(l: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let n = l.dim();
    let b = Builder { field: l.field(), n };
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| l.unit(i)).collect();
    let br = |i: usize, j: usize| l.basis_bracket(i, j);
    let mut rels = Vec::new();
    for x in 0..n {
        for x2 in x + 1..n {
            for y in 0..n {
                // [x, x'] ⊗ y − x ⊗ [x', y] + x' ⊗ [x, y]
                rels.push(b.outer(&[
                    (br(x, x2), &e[y], false),
                    (&e[x], br(x2, y), true),
                    (&e[x2], br(x, y), false),
                ]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for y2 in y + 1..n {
                // x ⊗ [y, y'] − [y', x] ⊗ y + [y, x] ⊗ y'
                rels.push(b.outer(&[
                    (&e[x], br(y, y2), false),
                    (br(y2, x), &e[y], true),
                    (br(y, x), &e[y2], false),
                ]));
            }
        }
    }
    let derived = l.derived();
    let d = derived.basis_rows();
    for (i, a) in d.iter().enumerate() {
        rels.push(b.outer(&[(a, a, false)]));
        for c in &d[i + 1..] {
            rels.push(b.outer(&[(a, c, false), (c, a, false)]));
        }
    }
    for a in d {
        for c in d {
            for f in d {
                rels.push(b.outer(&[
                    (&l.bracket(a, c), f, false),
                    (&l.bracket(c, f), a, false),
                    (&l.bracket(f, a), c, false),
                ]));
            }
        }
    }
    rels.retain(|r| r.iter().any(|x| !x.is_zero()));
    rels
}

fn exterior_relations(l: &LieAlgebra) -> Vec<Vec<Scalar>> {
    let n = l.dim();
    let b = Builder { field: l.field(), n };
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| l.unit(i)).collect();
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push(b.outer(&[(&e[i], &e[i], false)]));
        for j in i + 1..n {
            rels.push(b.outer(&[(&e[i], &e[j], false), (&e[j], &e[i], false)]));
        }
    }
    rels
}

pub fn squares(l: &LieAlgebra) -> Squares {
    let n = l.dim();
    let field = l.field();
    let tensor_rels = tensor_relations(l);
    let tensor = Subspace::from_spanning(field, n * n, tensor_rels.iter().cloned());
    let exterior = Subspace::from_spanning(
        field,
        n * n,
        tensor_rels.into_iter().chain(exterior_relations(l)),
    );
    let b = Builder { field, n };
    let d = l.derived();
    let exterior_abelian = d.basis_rows().iter().all(|a| {
        d.basis_rows()
            .iter()
            .all(|c| exterior.contains(&b.outer(&[(a, c, false)])))
    });
    Squares {
        tensor_dim: n * n - tensor.dim(),
        exterior_dim: n * n - exterior.dim(),
        exterior_abelian,
    }
}

pub fn tensor_dim_oracle(l: &LieAlgebra) -> usize {
    squares(l).tensor_dim
}

pub fn exterior_dim_oracle(l: &LieAlgebra) -> usize {
    squares(l).exterior_dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{heisenberg, make_catalog, CatalogId, Family};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn abelian_squares() {
        for n in 1..=5 {
            let s = squares(&LieAlgebra::abelian(Q, n));
            assert_eq!((s.tensor_dim, s.exterior_dim), (n * n, n * (n - 1) / 2));
            assert!(s.exterior_abelian);
        }
    }

    #[test]
    fn heisenberg_one_squares() {
        let s = squares(&heisenberg(Q, 1));
        assert_eq!((s.exterior_dim, s.tensor_dim), (3, 6));
    }

    #[test]
    fn class_three_stems() {
        let l43 = make_catalog(&CatalogId::new(Family::L43, 0), Q).unwrap();
        let s = squares(&l43);
        assert_eq!((s.exterior_dim, s.tensor_dim), (4, 7));
        assert!(s.exterior_abelian);
        let l55 = make_catalog(&CatalogId::new(Family::L55, 0), Q).unwrap();
        let s = squares(&l55);
        assert_eq!((s.exterior_dim, s.tensor_dim), (6, 12));
    }

    #[test]
    fn characteristic_two_class_three() {
        for p in [2, 3] {
            let l = make_catalog(&CatalogId::new(Family::L43, 0), FieldSpec::Prime(p)).unwrap();
            let s = squares(&l);
            assert_eq!((s.exterior_dim, s.tensor_dim), (4, 7), "GF({p})");
        }
    }

    #[test]
    fn nonabelian_exterior_square_beyond_scope() {
        // The 5-dimensional filiform algebra of class 4: its exterior square
        // is not abelian.
        let one = |k: usize| {
            let mut v = vec![Q.zero(); 5];
            v[k] = Q.one();
            v
        };
        let l = LieAlgebra::from_brackets(Q, 5, [(0, 1, one(2)), (0, 2, one(3)), (0, 3, one(4))]).unwrap();
        assert!(l.validate().is_empty());
        assert!(!squares(&l).exterior_abelian);
    }
}
