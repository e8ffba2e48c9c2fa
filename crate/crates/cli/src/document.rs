//! The JSON algebra document.
//!
//! ```json
//! {
//!   "field": "rationals",
//!   "dim": 3,
//!   "brackets": [ { "i": 1, "j": 2, "coeffs": ["0", "0", "1"] } ],
//!   "labels": ["x1", "x2", "x3"]
//! }
//! ```
//!
//! `field` is `"rationals"` or `{ "prime": p }`. Indices are 1-based with
//! `i < j`; `coeffs` has exactly `dim` entries, each an exact scalar written
//! as a string (`"3/4"`, `"-2"`). Unlisted pairs bracket to zero. `labels`
//! is optional.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use schurlie::{FieldSpec, LieAlgebra};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDoc {
    Rationals,
    Prime(u64),
}

impl FieldDoc {
    pub fn to_spec(self) -> Result<FieldSpec, CliError> {
        match self {
            FieldDoc::Rationals => Ok(FieldSpec::Rationals),
            FieldDoc::Prime(p) => FieldSpec::prime(p).map_err(|e| CliError::Parse(e.to_string())),
        }
    }
}

impl From<FieldSpec> for FieldDoc {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldDoc::Rationals,
            FieldSpec::Prime(p) => FieldDoc::Prime(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldDoc,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("documents always serialize");
        Sha256::digest(canonical.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Builds the algebra. Structural problems (bad indices, duplicate
    /// pairs, unparsable scalars) are parse errors; the Jacobi identity is
    /// not checked here.
    pub fn to_algebra(&self) -> Result<LieAlgebra, CliError> {
        let field = self.field.to_spec()?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.i > n || b.j > n {
                return Err(CliError::Parse(format!(
                    "bracket ({}, {}) has an index outside 1..={n}",
                    b.i, b.j
                )));
            }
            if b.i >= b.j {
                return Err(CliError::Parse(format!("bracket ({}, {}) needs i < j", b.i, b.j)));
            }
            if b.coeffs.len() != n {
                return Err(CliError::Parse(format!(
                    "bracket ({}, {}) has {} coefficients, expected {n}",
                    b.i,
                    b.j,
                    b.coeffs.len()
                )));
            }
            let coeffs = b
                .coeffs
                .iter()
                .map(|c| field.parse(c))
                .collect::<schurlie::Result<Vec<_>>>()
                .map_err(|e| CliError::Parse(format!("bracket ({}, {}): {e}", b.i, b.j)))?;
            entries.push((b.i - 1, b.j - 1, coeffs));
        }
        let l = LieAlgebra::from_brackets(field, n, entries).map_err(|e| match e {
            schurlie::Error::DuplicateBracket(i, j) => {
                CliError::Parse(format!("bracket ({}, {}) given twice", i + 1, j + 1))
            }
            other => CliError::Parse(other.to_string()),
        })?;
        match &self.labels {
            Some(labels) => l.with_labels(labels.clone()).map_err(|e| CliError::Parse(format!("labels: {e}"))),
            None => Ok(l),
        }
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .brackets()
            .map(|(i, j, c)| BracketDoc {
                i: i + 1,
                j: j + 1,
                coeffs: c.iter().map(ToString::to_string).collect(),
            })
            .collect();
        AlgebraDocument {
            field: l.field().into(),
            dim: l.dim(),
            brackets,
            labels: l.labels().map(<[String]>::to_vec),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H1: &str = r#"{
        "field": "rationals",
        "dim": 3,
        "brackets": [ { "i": 1, "j": 2, "coeffs": ["0", "0", "1"] } ]
    }"#;

    #[test]
    fn parses_heisenberg() {
        let doc = AlgebraDocument::parse(H1).unwrap();
        let l = doc.to_algebra().unwrap();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.derived().dim(), 1);
    }

    #[test]
    fn prime_field_syntax() {
        let doc = AlgebraDocument::parse(r#"{"field": {"prime": 7}, "dim": 2}"#).unwrap();
        assert_eq!(doc.field, FieldDoc::Prime(7));
        assert!(doc.to_algebra().unwrap().is_abelian());
        let bad = AlgebraDocument::parse(r#"{"field": {"prime": 8}, "dim": 2}"#).unwrap();
        assert!(matches!(bad.to_algebra(), Err(CliError::Parse(_))));
    }

    #[test]
    fn rejects_structural_problems() {
        let cases = [
            r#"{"field": "rationals", "dim": 2, "brackets": [{"i": 2, "j": 1, "coeffs": ["0","0"]}]}"#,
            r#"{"field": "rationals", "dim": 2, "brackets": [{"i": 1, "j": 3, "coeffs": ["0","0"]}]}"#,
            r#"{"field": "rationals", "dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": ["0"]}]}"#,
            r#"{"field": "rationals", "dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": ["0.5","0"]}]}"#,
            r#"{"field": "rationals", "dim": 3, "brackets": [
                {"i": 1, "j": 2, "coeffs": ["0","0","1"]}, {"i": 1, "j": 2, "coeffs": ["0","0","1"]}]}"#,
        ];
        for text in cases {
            let doc = AlgebraDocument::parse(text).unwrap();
            assert!(matches!(doc.to_algebra(), Err(CliError::Parse(_))), "{text}");
        }
        assert!(AlgebraDocument::parse(r#"{"field": "reals", "dim": 1}"#).is_err());
        assert!(AlgebraDocument::parse(r#"{"field": "rationals", "dim": 1, "extra": 0}"#).is_err());
    }

    #[test]
    fn round_trip_and_digest() {
        let doc = AlgebraDocument::parse(H1).unwrap();
        let again = AlgebraDocument::from_algebra(&doc.to_algebra().unwrap());
        assert_eq!(again, doc);
        assert_eq!(again.digest(), doc.digest());
        assert_eq!(doc.digest().len(), 64);
    }
}
