//! The `report` command's output.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value as Json};

use schurlie::decompose::{classify, Classification};
use schurlie::functors::{functor_report, FunctorReport, Value};
use schurlie::oracle::{schur_dim_oracle, Comparison, CrossCheck};
use schurlie::random::{invertible_matrix, seeded};
use schurlie::{Error, FieldSpec};

use crate::document::AlgebraDocument;
use crate::error::CliError;
use crate::{check_algebra, EpicenterSource};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub oracle: bool,
    /// Prime for the epicenter sweep of rational inputs.
    pub prime: Option<u64>,
    pub seed: u64,
    pub randomize_basis: bool,
}

pub const DEFAULT_PRIME: u64 = 5;
const NOT_APPLICABLE: &str = "not applicable";
const UNAVAILABLE: &str = "unavailable over this field";

#[derive(Debug, Clone, Serialize)]
pub struct InputBlock {
    pub digest: String,
    pub field: String,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisBlock {
    pub randomized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesBlock {
    pub lower_central: Vec<usize>,
    pub derived_series: Vec<usize>,
    pub center_dim: usize,
    pub nilpotency_class: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationBlock {
    pub catalog: String,
    pub family: String,
    pub abelian_summand: usize,
    pub stem_dim: usize,
    pub derived_dim: usize,
    pub class: usize,
    pub center_dim: usize,
    pub center_derived_dim: usize,
    pub cube_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormulaBlock {
    pub schur: Json,
    pub exterior: Json,
    pub tensor: Json,
    pub square: usize,
    pub corank: Json,
    pub capable: bool,
    pub exterior_abelian: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleBlock {
    pub schur: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exterior: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub square: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exterior_abelian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epicenter_dim: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capable: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epicenter_field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cochain_complex_ok: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub quantity: String,
    pub formula: Json,
    pub oracle: Json,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub input: InputBlock,
    pub basis: BasisBlock,
    pub series: SeriesBlock,
    /// `null` for non-nilpotent input.
    pub classification: Option<ClassificationBlock>,
    /// A [`FormulaBlock`] or the string `"not applicable"`.
    pub formulas: Json,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
    pub checks: Vec<CheckLine>,
    /// `pass`, `fail`, `unchecked` (formulas only) or `partial` (out of scope).
    pub verdict: String,
}

impl ReportDocument {
    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

pub fn value_json(v: Value) -> Json {
    match v {
        Value::Exact(x) => json!(x),
        Value::Admissible(a, b) => json!([a, b]),
    }
}

fn classification_block(c: &Classification) -> Option<ClassificationBlock> {
    let id = c.catalog.as_ref()?;
    Some(ClassificationBlock {
        catalog: id.to_string(),
        family: id.family.name().to_string(),
        abelian_summand: id.abelian_summand,
        stem_dim: c.stem_dim,
        derived_dim: c.derived_dim,
        class: c.class,
        center_dim: c.center_dim,
        center_derived_dim: c.center_derived_dim,
        cube_dim: c.cube_dim,
    })
}

fn formula_block(f: &FunctorReport) -> FormulaBlock {
    FormulaBlock {
        schur: value_json(f.schur_dim),
        exterior: value_json(f.exterior_dim),
        tensor: value_json(f.tensor_dim),
        square: f.square_dim,
        corank: value_json(f.corank),
        capable: f.capable,
        exterior_abelian: f.exterior_abelian,
    }
}

fn oracle_block(r: &CrossCheck, source: &EpicenterSource) -> OracleBlock {
    let o = &r.oracle;
    let n = r.classification.dim;
    let (epi, capable, field) = match source {
        EpicenterSource::Native(p) | EpicenterSource::Reduced(p) => (
            o.epicenter_dim.map(|d| json!(d)),
            o.capable.map(|c| json!(c)),
            Some(format!("GF({p})")),
        ),
        EpicenterSource::Unavailable(_) => (Some(json!(UNAVAILABLE)), Some(json!(UNAVAILABLE)), None),
    };
    OracleBlock {
        schur: o.schur_dim,
        exterior: Some(o.exterior_dim),
        tensor: Some(o.tensor_dim),
        square: Some(o.square_dim()),
        corank: Some(n * n.saturating_sub(1) / 2 - o.schur_dim),
        exterior_abelian: Some(o.exterior_abelian),
        epicenter_dim: epi,
        capable,
        epicenter_field: field,
        cochain_complex_ok: Some(o.harness_ok()),
    }
}

pub fn check_lines(r: &CrossCheck) -> Vec<CheckLine> {
    r.checks
        .iter()
        .map(|c| {
            let (formula, oracle) = match &c.comparison {
                Comparison::Dim { formula, oracle } => (value_json(*formula), json!(oracle)),
                Comparison::Flag { formula, oracle } => (json!(formula), json!(oracle)),
            };
            CheckLine {
                quantity: c.quantity.to_string(),
                formula,
                oracle,
                pass: c.pass(),
            }
        })
        .chain((!r.oracle.harness_ok()).then(|| CheckLine {
            quantity: "cochain_complex".into(),
            formula: json!(true),
            oracle: json!(false),
            pass: false,
        }))
        .collect()
}

/// Validates, optionally rebases, classifies and evaluates `doc`.
pub fn build_report(doc: &AlgebraDocument, opts: &ReportOptions) -> Result<ReportDocument, CliError> {
    let mut l = doc.to_algebra()?;
    let violations = l.validate();
    if !violations.is_empty() {
        return Err(CliError::Validation(violations.len()));
    }
    let prime = match (l.field(), opts.prime) {
        (FieldSpec::Prime(q), Some(p)) if p != q => {
            return Err(CliError::Usage(format!("--prime {p} conflicts with the document field GF({q})")));
        }
        (_, Some(p)) => {
            FieldSpec::prime(p)?;
            p
        }
        (_, None) => DEFAULT_PRIME,
    };
    if opts.randomize_basis {
        let p = invertible_matrix(l.field(), l.dim(), &mut seeded(opts.seed));
        l = l.change_basis(&p)?.without_labels();
    }

    let s = l.series();
    let series = SeriesBlock {
        lower_central: s.lower_central_dims(),
        derived_series: s.derived_series_dims(),
        center_dim: s.center.dim(),
        nilpotency_class: s.nilpotency_class,
    };
    let input = InputBlock {
        digest: doc.digest(),
        field: l.field().to_string(),
        dim: l.dim(),
    };
    let basis = BasisBlock {
        randomized: opts.randomize_basis,
        seed: opts.randomize_basis.then_some(opts.seed),
    };

    let classification = match classify(&l) {
        Ok(c) => Some(c),
        Err(Error::NotNilpotent) => None,
        Err(e) => return Err(e.into()),
    };
    let in_scope = classification.as_ref().is_some_and(Classification::in_scope);
    let class_block = classification.as_ref().and_then(classification_block);

    if !in_scope {
        // Oracle multiplier only: the cohomology computation is valid for
        // any algebra, the closed forms are not.
        return Ok(ReportDocument {
            input,
            basis,
            series,
            classification: class_block,
            formulas: json!(NOT_APPLICABLE),
            oracle: Some(OracleBlock {
                schur: schur_dim_oracle(&l),
                exterior: None,
                tensor: None,
                square: None,
                corank: None,
                exterior_abelian: None,
                epicenter_dim: None,
                capable: None,
                epicenter_field: None,
                cochain_complex_ok: None,
            }),
            checks: Vec::new(),
            verdict: "partial".into(),
        });
    }

    let c = classification.expect("in scope");
    if !opts.oracle {
        let f = functor_report(&c)?;
        return Ok(ReportDocument {
            input,
            basis,
            series,
            classification: class_block,
            formulas: json!(formula_block(&f)),
            oracle: None,
            checks: Vec::new(),
            verdict: "unchecked".into(),
        });
    }

    let (r, source) = check_algebra(&l, prime)?;
    let checks = check_lines(&r);
    let verdict = if checks.iter().all(|c| c.pass) { "pass" } else { "fail" };
    Ok(ReportDocument {
        input,
        basis,
        series,
        classification: class_block,
        formulas: json!(formula_block(&r.formula)),
        oracle: Some(oracle_block(&r, &source)),
        checks,
        verdict: verdict.into(),
    })
}

fn show(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(show).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

/// Plain-text rendering for `--pretty`.
pub fn render_pretty(r: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input      {} (dim {} over {})", &r.input.digest[..16], r.input.dim, r.input.field);
    if let Some(seed) = r.basis.seed {
        let _ = writeln!(out, "basis      randomized, seed {seed}");
    }
    let lcs: Vec<String> = r.series.lower_central.iter().map(ToString::to_string).collect();
    let class = r.series.nilpotency_class.map_or("not nilpotent".to_string(), |c| format!("class {c}"));
    let _ = writeln!(out, "series     {} ({class}, center {})", lcs.join(" > "), r.series.center_dim);
    match &r.classification {
        Some(c) => {
            let _ = writeln!(out, "catalog    {} (stem {}, dim L² {})", c.catalog, c.stem_dim, c.derived_dim);
        }
        None => {
            let _ = writeln!(out, "catalog    {NOT_APPLICABLE}");
        }
    }
    if !r.checks.is_empty() {
        let _ = writeln!(out, "\n{:<18}{:<12}{:<12}verdict", "quantity", "formula", "oracle");
        for c in &r.checks {
            let v = if c.pass { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{:<18}{:<12}{:<12}{v}", c.quantity, show(&c.formula), show(&c.oracle));
        }
    } else if let Some(obj) = r.formulas.as_object() {
        let _ = writeln!(out, "\n{:<18}formula", "quantity");
        for (k, v) in obj {
            let _ = writeln!(out, "{k:<18}{}", show(v));
        }
    } else if let Some(o) = &r.oracle {
        let _ = writeln!(out, "\nformulas   {NOT_APPLICABLE}");
        let _ = writeln!(out, "schur      {} (oracle)", o.schur);
    }
    let _ = writeln!(out, "\nverdict    {}", r.verdict);
    out
}
