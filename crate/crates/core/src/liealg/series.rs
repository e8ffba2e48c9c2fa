use super::LieAlgebra;
use crate::exactla::Subspace;

/// Characteristic series and center of a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    /// `L = L¹ ⊇ L² ⊇ L³ ⊇ …`, ending with the zero subspace when nilpotent
    /// or with the first repeated term otherwise.
    pub lower_central: Vec<Subspace>,
    /// `L ⊇ L⁽¹⁾ = L² ⊇ L⁽²⁾ ⊇ …`, ending at zero or at a repeated term.
    pub derived: Vec<Subspace>,
    pub center: Subspace,
    /// `c` with `Lᶜ ≠ 0 = Lᶜ⁺¹`; abelian algebras report 1, the zero
    /// algebra 0. `None` when the algebra is not nilpotent.
    pub nilpotency_class: Option<usize>,
}

impl SeriesReport {
    pub(super) fn compute(l: &LieAlgebra) -> SeriesReport {
        let full = l.full();
        let lower_central = descend(full.clone(), |s| {
            l.bracket_span(s, &full).expect("ambient dimensions agree")
        });
        let derived = descend(full, |s| l.bracket_span(s, s).expect("ambient dimensions agree"));
        let nilpotency_class = lower_central
            .last()
            .filter(|s| s.is_zero())
            .map(|_| lower_central.len() - 1);
        SeriesReport {
            lower_central,
            derived,
            center: l.center(),
            nilpotency_class,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }

    pub fn lower_central_dims(&self) -> Vec<usize> {
        self.lower_central.iter().map(Subspace::dim).collect()
    }

    pub fn derived_series_dims(&self) -> Vec<usize> {
        self.derived.iter().map(Subspace::dim).collect()
    }

    pub fn dim(&self) -> usize {
        self.lower_central[0].dim()
    }

    /// `dim L²`.
    pub fn derived_dim(&self) -> usize {
        self.lower_central.get(1).map_or(0, Subspace::dim)
    }

    /// `dim Lᵏ` (1-based, `k = 1` is `L`), zero past the end of the series
    /// for nilpotent algebras.
    pub fn term_dim(&self, k: usize) -> usize {
        assert!(k >= 1);
        match self.lower_central.get(k - 1) {
            Some(s) => s.dim(),
            None if self.is_nilpotent() => 0,
            None => self.lower_central.last().map_or(0, Subspace::dim),
        }
    }

    /// `dim L/L²`.
    pub fn abelianization_dim(&self) -> usize {
        self.dim() - self.derived_dim()
    }
}

fn descend(start: Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut out = vec![start];
    loop {
        let last = out.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = step(last);
        if next == *last {
            break;
        }
        out.push(next);
    }
    out
}
