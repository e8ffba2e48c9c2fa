//! The `check` command: the builtin golden suite and directory runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use schurlie::decompose::{class3_stem, make_catalog, CatalogId, Family};
use schurlie::suite::{generalized_heisenberg_stems, small_stems};
use schurlie::{FieldSpec, LieAlgebra};

use crate::document::AlgebraDocument;
use crate::error::CliError;
use crate::report::{check_lines, CheckLine};
use crate::{check_algebra, in_scope};

/// Known values for one algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Golden {
    pub schur: usize,
    pub exterior: usize,
    pub tensor: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub capable: Option<bool>,
}

const fn golden(schur: usize, exterior: usize, tensor: usize, capable: bool) -> Golden {
    Golden {
        schur,
        exterior,
        tensor,
        capable: Some(capable),
    }
}

#[derive(Debug, Clone)]
pub struct SuiteCase {
    pub group: String,
    pub name: String,
    pub algebra: LieAlgebra,
    pub golden: Option<Golden>,
}

/// A file in a checked directory: a bare algebra document, or one wrapped
/// with golden values.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SuiteFile {
    Case {
        algebra: AlgebraDocument,
        golden: Golden,
    },
    Plain(AlgebraDocument),
}

fn case(group: &str, name: String, algebra: LieAlgebra, golden: Option<Golden>) -> SuiteCase {
    SuiteCase {
        group: group.into(),
        name,
        algebra,
        golden,
    }
}

fn catalog_case(group: &str, family: Family, k: usize, field: FieldSpec, g: Golden) -> SuiteCase {
    let id = CatalogId::new(family, k);
    let l = make_catalog(&id, field).expect("builtin entries are well formed");
    case(group, format!("{id} over {field}"), l, Some(g))
}

/// Golden data: the capable stems with two-dimensional derived
/// subalgebra, the Heisenberg and abelian base points, a few capable
/// families with abelian summands, class-3 stems, and the generalized
/// Heisenberg stems (admissible values only, no golden row).
pub fn builtin_suite() -> Vec<SuiteCase> {
    let q = FieldSpec::Rationals;
    let mut out = Vec::new();

    let stems = [
        golden(6, 8, 14, true),
        golden(8, 10, 20, true),
        golden(8, 10, 20, true),
        golden(8, 10, 20, true),
        golden(8, 10, 20, true),
        golden(9, 11, 26, true),
        golden(2, 4, 7, true),
        golden(4, 6, 12, true),
    ];
    for (inst, g) in small_stems().into_iter().zip(stems) {
        out.push(case("capable stems", inst.name, inst.algebra, Some(g)));
    }

    let heis = [
        golden(2, 3, 6, true),
        golden(5, 6, 16, false),
        golden(14, 15, 36, false),
        golden(27, 28, 64, false),
    ];
    for (m, g) in (1..).zip(heis) {
        out.push(catalog_case("heisenberg", Family::Heisenberg(m), 0, q, g));
    }

    for n in 1..=6 {
        let g = golden(n * (n - 1) / 2, n * (n - 1) / 2, n * n, n > 1);
        out.push(catalog_case("abelian", Family::Abelian(n), 0, q, g));
    }

    let families = [
        (Family::Heisenberg(1), 1, golden(4, 5, 11, true)),
        (Family::Heisenberg(1), 2, golden(7, 8, 18, true)),
        (Family::Heisenberg(2), 1, golden(9, 10, 25, false)),
        (Family::L43, 1, golden(4, 6, 12, true)),
        (Family::L43, 2, golden(7, 9, 19, true)),
        (Family::L58, 1, golden(9, 11, 21, true)),
        (Family::L1, 1, golden(14, 16, 37, true)),
    ];
    for (family, k, g) in families {
        out.push(catalog_case("abelian summands", family, k, q, g));
    }

    for (n, g) in [(6, golden(6, 8, 18, false)), (7, golden(10, 12, 27, false))] {
        let l = class3_stem(q, n).expect("n ≥ 4");
        out.push(case("class-3 stems", format!("class-3 stem [{n}] over {q}"), l, Some(g)));
    }

    for inst in generalized_heisenberg_stems(FieldSpec::Prime(5)) {
        out.push(case("generalized heisenberg", inst.name, inst.algebra, None));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub group: String,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checks: Vec<CheckLine>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub cases: usize,
    pub checks: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub cases: Vec<CaseResult>,
    pub groups: Vec<GroupSummary>,
    pub total_checks: usize,
    pub failed_checks: usize,
    pub verdict: Status,
}

impl SuiteSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summaries always serialize")
    }

    pub fn into_result(self) -> Result<SuiteSummary, (SuiteSummary, CliError)> {
        if self.verdict == Status::Pass {
            Ok(self)
        } else {
            let n = self.failed_checks.max(1);
            Err((self, CliError::Mismatch(n)))
        }
    }
}

fn golden_lines(g: &Golden, r: &schurlie::oracle::CrossCheck) -> Vec<CheckLine> {
    let line = |q: &str, expected: serde_json::Value, got: serde_json::Value| CheckLine {
        pass: expected == got,
        quantity: format!("golden {q}"),
        formula: expected,
        oracle: got,
    };
    let o = &r.oracle;
    let mut out = vec![
        line("schur", json!(g.schur), json!(o.schur_dim)),
        line("exterior", json!(g.exterior), json!(o.exterior_dim)),
        line("tensor", json!(g.tensor), json!(o.tensor_dim)),
    ];
    if let Some(c) = g.capable {
        // Golden capability is checked against the formula side, and against
        // the oracle when an epicenter was computed.
        out.push(line("capable", json!(c), json!(r.formula.capable)));
        if let Some(oc) = o.capable {
            out.push(line("capable (oracle)", json!(c), json!(oc)));
        }
    }
    out
}

fn run_case(c: &SuiteCase, prime: u64) -> CaseResult {
    let result = |status, note: Option<String>, checks| CaseResult {
        group: c.group.clone(),
        name: c.name.clone(),
        status,
        note,
        checks,
    };
    if !c.algebra.validate().is_empty() {
        return result(Status::Error, Some("Jacobi identity fails".into()), Vec::new());
    }
    if !in_scope(&c.algebra) {
        return result(Status::Skipped, Some("outside the formula regime".into()), Vec::new());
    }
    match check_algebra(&c.algebra, prime) {
        Ok((r, _)) => {
            let mut checks = check_lines(&r);
            if let Some(g) = &c.golden {
                checks.extend(golden_lines(g, &r));
            }
            let status = if checks.iter().all(|l| l.pass) { Status::Pass } else { Status::Fail };
            result(status, None, checks)
        }
        Err(e) => result(Status::Error, Some(e.to_string()), Vec::new()),
    }
}

/// Runs every case in parallel; results are sorted by name.
pub fn run_suite(cases: &[SuiteCase], prime: u64) -> SuiteSummary {
    let mut results: Vec<CaseResult> = cases.par_iter().map(|c| run_case(c, prime)).collect();
    results.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.group.cmp(&b.group)));

    let mut groups: BTreeMap<&str, GroupSummary> = BTreeMap::new();
    for r in &results {
        let g = groups.entry(&r.group).or_insert_with(|| GroupSummary {
            group: r.group.clone(),
            cases: 0,
            checks: 0,
            passed: 0,
        });
        g.cases += 1;
        g.checks += r.checks.len();
        g.passed += r.checks.iter().filter(|l| l.pass).count();
    }
    let groups: Vec<_> = groups.into_values().collect();
    let total_checks = groups.iter().map(|g| g.checks).sum();
    let failed_checks = total_checks - groups.iter().map(|g| g.passed).sum::<usize>();
    let broken = results.iter().any(|r| matches!(r.status, Status::Fail | Status::Error));
    SuiteSummary {
        verdict: if broken { Status::Fail } else { Status::Pass },
        cases: results,
        groups,
        total_checks,
        failed_checks,
    }
}

/// Loads every `*.json` file in `dir`, in file-name order. Each file is its
/// own group.
pub fn load_directory(dir: &Path) -> Result<Vec<SuiteCase>, CliError> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    paths.sort();

    let mut out = Vec::with_capacity(paths.len());
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        let name = path.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
        let file: SuiteFile = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        let (doc, golden) = match file {
            SuiteFile::Case { algebra, golden } => (algebra, Some(golden)),
            SuiteFile::Plain(doc) => (doc, None),
        };
        let algebra = doc
            .to_algebra()
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        out.push(case(&name, name.clone(), algebra, golden));
    }
    Ok(out)
}

pub fn render_pretty(s: &SuiteSummary) -> String {
    let mut out = String::new();
    for r in &s.cases {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
            Status::Error => "ERROR",
        };
        let passed = r.checks.iter().filter(|l| l.pass).count();
        let _ = write!(out, "{status:<6}{:<44}{passed:>3}/{}", r.name, r.checks.len());
        if let Some(note) = &r.note {
            let _ = write!(out, " {note}");
        }
        out.push('\n');
        for l in r.checks.iter().filter(|l| !l.pass) {
            let _ = writeln!(out, "      {}: expected {}, got {}", l.quantity, l.formula, l.oracle);
        }
    }
    out.push('\n');
    for g in &s.groups {
        let _ = writeln!(out, "{:<26}{:>3} cases {:>4}/{:<4} checks", g.group, g.cases, g.passed, g.checks);
    }
    let _ = writeln!(
        out,
        "\n{} checks, {} failed: {}",
        s.total_checks,
        s.failed_checks,
        if s.verdict == Status::Pass { "pass" } else { "FAIL" }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_suite_passes() {
        let s = run_suite(&builtin_suite(), 5);
        let failing: Vec<_> = s.cases.iter().filter(|c| c.status != Status::Pass).collect();
        assert!(failing.is_empty(), "{failing:#?}");
        assert!(s.total_checks >= 30);
    }

    #[test]
    fn corrupted_golden_fails() {
        let mut cases = builtin_suite();
        let c = cases.iter_mut().find(|c| c.golden.is_some()).unwrap();
        c.golden.as_mut().unwrap().tensor += 1;
        let s = run_suite(&cases, 5);
        assert_eq!(s.verdict, Status::Fail);
        assert_eq!(s.failed_checks, 1);
        assert!(s.into_result().is_err());
    }

    #[test]
    fn results_sorted_by_name() {
        let s = run_suite(&builtin_suite(), 5);
        assert!(s.cases.windows(2).all(|w| w[0].name <= w[1].name));
    }
}
