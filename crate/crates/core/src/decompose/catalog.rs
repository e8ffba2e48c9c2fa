//! Named algebras: abelian, Heisenberg, the small capable stems with
//! two-dimensional derived subalgebra, and a few constructors for the
//! non-capable families used in tests and suites.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix, Scalar};
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `A(n)`
    Abelian(usize),
    /// `H(m)`, of dimension `2m + 1`
    Heisenberg(usize),
    /// Non-capable stem of class 2 with `T² = Z(T)` of dimension 2.
    GenHeisenbergRank2 { stem_dim: usize },
    /// Stem of class 3 with `dim T² = 2` and `dim T ≥ 6`.
    StemClass3Dim2 { stem_dim: usize },
    /// `[x1,x2]=x3, [x1,x3]=x4`
    L43,
    /// `[x1,x2]=x3, [x1,x3]=x5, [x2,x4]=x5`
    L55,
    /// `[x1,x2]=x4, [x1,x3]=x5`
    L58,
    /// `[x1,x2]=x5=[x3,x4], [x1,x3]=x6, [x2,x4]=ε x6`, characteristic ≠ 2.
    /// The parameter is `None` when the algebra was recognised rather than
    /// constructed; recognition does not recover ε.
    L622(Option<Scalar>),
    /// `[x1,x2]=x5, [x3,x4]=x5+x6, [x1,x3]=x6, [x2,x4]=η x6`, characteristic 2.
    L672(Option<Scalar>),
    /// `[x1,x2]=x6=[x3,x4], [x1,x5]=x7=[x2,x3]`
    L1,
}

impl Family {
    pub fn dim(&self) -> usize {
        match self {
            Family::Abelian(n) => *n,
            Family::Heisenberg(m) => 2 * m + 1,
            Family::GenHeisenbergRank2 { stem_dim } | Family::StemClass3Dim2 { stem_dim } => {
                *stem_dim
            }
            Family::L43 => 4,
            Family::L55 | Family::L58 => 5,
            Family::L622(_) | Family::L672(_) => 6,
            Family::L1 => 7,
        }
    }

    /// Name used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Abelian(_) => "A",
            Family::Heisenberg(_) => "H",
            Family::GenHeisenbergRank2 { .. } => "GenHeis2",
            Family::StemClass3Dim2 { .. } => "StemClass3",
            Family::L43 => "L4_3",
            Family::L55 => "L5_5",
            Family::L58 => "L5_8",
            Family::L622(_) => "L6_22",
            Family::L672(_) => "L6_7_2",
            Family::L1 => "L1",
        }
    }

    /// The same family with any ε/η parameter forgotten.
    pub fn unparameterized(&self) -> Family {
        match self {
            Family::L622(_) => Family::L622(None),
            Family::L672(_) => Family::L672(None),
            other => other.clone(),
        }
    }

    /// Membership in the list of capable algebras with `dim L² ≤ 2`.
    pub fn is_capable(&self) -> bool {
        match self {
            Family::Abelian(n) => *n > 1,
            Family::Heisenberg(m) => *m == 1,
            Family::GenHeisenbergRank2 { .. } | Family::StemClass3Dim2 { .. } => false,
            Family::L43
            | Family::L55
            | Family::L58
            | Family::L622(_)
            | Family::L672(_)
            | Family::L1 => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Abelian(n) => write!(f, "A({n})"),
            Family::Heisenberg(m) => write!(f, "H({m})"),
            Family::GenHeisenbergRank2 { stem_dim } => write!(f, "GenHeis2[{stem_dim}]"),
            Family::StemClass3Dim2 { stem_dim } => write!(f, "StemClass3[{stem_dim}]"),
            Family::L622(Some(e)) => write!(f, "L6_22({e})"),
            Family::L672(Some(e)) => write!(f, "L6_7_2({e})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

/// A family plus an abelian direct summand `A(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalogId {
    pub family: Family,
    pub abelian_summand: usize,
}

impl CatalogId {
    pub fn new(family: Family, abelian_summand: usize) -> Self {
        CatalogId {
            family,
            abelian_summand,
        }
    }

    pub fn dim(&self) -> usize {
        self.family.dim() + self.abelian_summand
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.abelian_summand == 0 {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{} + A({})", self.family, self.abelian_summand)
        }
    }
}

type Bracket = (usize, usize, &'static [(usize, i64)]);

/// Table from 1-based `[x_i, x_j] = Σ c·x_k` entries.
fn presented(field: FieldSpec, n: usize, entries: &[Bracket]) -> LieAlgebra {
    let rows = entries.iter().map(|&(i, j, terms)| {
        let mut v = vec![field.zero(); n];
        for &(k, c) in terms {
            v[k - 1] = v[k - 1].add(&field.from_i64(c));
        }
        (i - 1, j - 1, v)
    });
    LieAlgebra::from_brackets(field, n, rows).expect("static presentation is well formed")
}

fn unit(field: FieldSpec, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

fn basis_labels(n: usize, prefix: &str) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

pub fn heisenberg(field: FieldSpec, m: usize) -> LieAlgebra {
    let n = 2 * m + 1;
    let entries = (0..m).map(|i| (i, m + i, unit(field, n, 2 * m)));
    LieAlgebra::from_brackets(field, n, entries).expect("well formed")
}

fn parameter(field: FieldSpec, p: &Option<Scalar>) -> Result<Scalar> {
    match p {
        None => Ok(field.zero()),
        Some(s) if s.field() == field => Ok(s.clone()),
        Some(s) => Err(Error::FieldMismatch(field, s.field())),
    }
}

/// The presentation of `id.family` followed by `A(id.abelian_summand)`.
/// A missing ε/η parameter is taken to be zero.
pub fn make_catalog(id: &CatalogId, field: FieldSpec) -> Result<LieAlgebra> {
    let char2 = field.characteristic() == 2;
    let stem = match &id.family {
        Family::Abelian(n) => LieAlgebra::abelian(field, *n),
        Family::Heisenberg(m) => {
            if *m == 0 {
                return Err(Error::NoPresentation("H(0)"));
            }
            heisenberg(field, *m)
        }
        Family::GenHeisenbergRank2 { .. } => return Err(Error::NoPresentation("GenHeis2")),
        Family::StemClass3Dim2 { .. } => return Err(Error::NoPresentation("StemClass3")),
        Family::L43 => presented(field, 4, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)])]),
        Family::L55 => presented(
            field,
            5,
            &[(1, 2, &[(3, 1)]), (1, 3, &[(5, 1)]), (2, 4, &[(5, 1)])],
        ),
        Family::L58 => presented(field, 5, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])]),
        Family::L622(eps) => {
            if char2 {
                return Err(Error::CharacteristicMismatch {
                    name: "L6_22",
                    requirement: "characteristic other than 2",
                    field,
                });
            }
            let eps = parameter(field, eps)?;
            let base = presented(
                field,
                6,
                &[(1, 2, &[(5, 1)]), (3, 4, &[(5, 1)]), (1, 3, &[(6, 1)])],
            );
            with_scaled_bracket(&base, 1, 3, 5, &eps)
        }
        Family::L672(eta) => {
            if !char2 {
                return Err(Error::CharacteristicMismatch {
                    name: "L6_7_2",
                    requirement: "characteristic 2",
                    field,
                });
            }
            let eta = parameter(field, eta)?;
            let base = presented(
                field,
                6,
                &[
                    (1, 2, &[(5, 1)]),
                    (3, 4, &[(5, 1), (6, 1)]),
                    (1, 3, &[(6, 1)]),
                ],
            );
            with_scaled_bracket(&base, 1, 3, 5, &eta)
        }
        Family::L1 => presented(
            field,
            7,
            &[
                (1, 2, &[(6, 1)]),
                (3, 4, &[(6, 1)]),
                (1, 5, &[(7, 1)]),
                (2, 3, &[(7, 1)]),
            ],
        ),
    };
    let stem_dim = stem.dim();
    let prefix = if matches!(id.family, Family::Abelian(_)) { "a" } else { "x" };
    let labels = basis_labels(stem_dim, prefix)
        .chain(basis_labels(id.abelian_summand, "a").map(|l| {
            if prefix == "a" {
                format!("{l}'")
            } else {
                l
            }
        }))
        .collect();
    stem.direct_sum(&LieAlgebra::abelian(field, id.abelian_summand))?
        .with_labels(labels)
}

/// Adds `[x_i, x_j] = c·x_k` (0-based) to a table that has no `(i, j)` entry.
fn with_scaled_bracket(
    base: &LieAlgebra,
    i: usize,
    j: usize,
    k: usize,
    c: &Scalar,
) -> LieAlgebra {
    let n = base.dim();
    let mut entries: Vec<_> = base.brackets().map(|(a, b, v)| (a, b, v.to_vec())).collect();
    if !c.is_zero() {
        let mut v = vec![base.field().zero(); n];
        v[k] = c.clone();
        entries.push((i, j, v));
    }
    LieAlgebra::from_brackets(base.field(), n, entries).expect("well formed")
}

/// Class-2 algebra `V ⊕ Z` with `[v_a, v_b] = Σ_r forms[r][a][b] z_r`,
/// where each form is an alternating `dim V × dim V` matrix.
pub fn from_commutator_forms(field: FieldSpec, forms: &[Matrix]) -> Result<LieAlgebra> {
    let r = forms.first().map_or(0, Matrix::rows);
    let n = r + forms.len();
    for f in forms {
        if f.field() != field {
            return Err(Error::FieldMismatch(field, f.field()));
        }
        if f.rows() != r || f.cols() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: f.rows().max(f.cols()),
            });
        }
        for a in 0..r {
            if !f.get(a, a).is_zero() {
                return Err(Error::Parse("commutator form is not alternating".into()));
            }
            for b in a + 1..r {
                if f.get(a, b).add(f.get(b, a)) != field.zero() {
                    return Err(Error::Parse("commutator form is not alternating".into()));
                }
            }
        }
    }
    let mut entries = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let mut v = vec![field.zero(); n];
            for (t, f) in forms.iter().enumerate() {
                v[r + t] = f.get(a, b).clone();
            }
            if v.iter().any(|x| !x.is_zero()) {
                entries.push((a, b, v));
            }
        }
    }
    LieAlgebra::from_brackets(field, n, entries)
}

/// A stem of class 3 with two-dimensional derived subalgebra and the given
/// dimension (at least 4): `L4_3` for even `n`, `L5_5` for odd `n`, with
/// `(n - 4) / 2` resp. `(n - 5) / 2` extra pairs `[y, y'] = ` (generator of
/// the third term of the lower central series).
pub fn class3_stem(field: FieldSpec, n: usize) -> Result<LieAlgebra> {
    if n < 4 {
        return Err(Error::NoPresentation("class-3 stem of dimension < 4"));
    }
    let (base, top) = if n.is_multiple_of(2) {
        (make_catalog(&CatalogId::new(Family::L43, 0), field)?, 3)
    } else {
        (make_catalog(&CatalogId::new(Family::L55, 0), field)?, 4)
    };
    let b = base.dim();
    let mut entries: Vec<_> = base
        .brackets()
        .map(|(i, j, v)| {
            let mut w = v.to_vec();
            w.resize(n, field.zero());
            (i, j, w)
        })
        .collect();
    for pair in 0..(n - b) / 2 {
        entries.push((b + 2 * pair, b + 2 * pair + 1, unit(field, n, top)));
    }
    LieAlgebra::from_brackets(field, n, entries)
}
