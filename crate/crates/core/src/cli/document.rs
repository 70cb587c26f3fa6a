//! JSON documents read and written by the command-line tool. Rationals are
//! always strings (`"p/q"` or `"p"`); floats appear only in `approx` fields.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::RankReport;
use crate::linop::Operator4;
use crate::scalarq::{Quaternion, Rational};

pub type QuatStrings = [String; 4];
pub type MatrixStrings = [[String; 4]; 4];

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub matrix: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_operator(op: &Operator4, label: Option<String>) -> Self {
        MatrixDocument { label, matrix: op.to_strings().iter().map(|r| r.to_vec()).collect() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix document: {e}")))
    }

    pub fn operator(&self) -> Result<Operator4> {
        if self.matrix.len() != 4 || self.matrix.iter().any(|r| r.len() != 4) {
            return Err(Error::Parse("matrix must have exactly 4 rows of 4 entries".to_string()));
        }
        let mut entries: [[Rational; 4]; 4] = Default::default();
        for (s, row) in self.matrix.iter().enumerate() {
            for (t, cell) in row.iter().enumerate() {
                entries[s][t] = cell.parse()?;
            }
        }
        Ok(Operator4::from_rows(entries))
    }
}

pub fn quat_strings(q: &Quaternion) -> QuatStrings {
    q.coords().map(ToString::to_string)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionDoc {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub frame: String,
    pub terms: Vec<String>,
    pub coefficients: Vec<QuatStrings>,
    pub vanishing: Vec<usize>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<Vec<[f64; 4]>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankDoc {
    pub command: &'static str,
    pub spec: String,
    pub terms: Vec<String>,
    pub unknowns: usize,
    pub rank: usize,
    pub nullity: usize,
    pub witness: Option<Vec<QuatStrings>>,
    pub witness_verified: bool,
}

impl RankDoc {
    pub fn new(command: &'static str, spec: String, terms: Vec<String>, report: &RankReport, verified: bool) -> Self {
        RankDoc {
            command,
            spec,
            terms,
            unknowns: report.unknowns,
            rank: report.rank,
            nullity: report.nullity,
            witness: report.witness.as_ref().map(|w| w.iter().map(quat_strings).collect()),
            witness_verified: verified,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckDoc {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub kind: &'static str,
    pub coordinate_conditions: bool,
    pub violation: Option<String>,
    pub reason: Option<String>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecoverDoc {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub conjugator: QuatStrings,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<[f64; 4]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryDoc {
    pub name: &'static str,
    pub description: &'static str,
    pub matrix: MatrixStrings,
    pub order: Option<usize>,
    pub kind: &'static str,
    pub conjugator: Option<QuatStrings>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogDoc {
    pub command: &'static str,
    pub entries: Vec<CatalogEntryDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DemoExpansionDoc {
    pub frame: String,
    pub coefficients: Vec<QuatStrings>,
    pub vanishing: Vec<usize>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<Vec<[f64; 4]>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DemoExampleDoc {
    pub name: &'static str,
    pub map: &'static str,
    pub matrix: MatrixStrings,
    pub expansions: Vec<DemoExpansionDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionDoc {
    /// Real dimension of the span of the sixteen maps `x ↦ e_s x e_t`.
    pub real_dimension: usize,
    /// Terms in every invertible frame.
    pub frame_terms: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DemoDoc {
    pub command: &'static str,
    pub a: QuatStrings,
    pub examples: Vec<DemoExampleDoc>,
    pub singular_attempt: RankDoc,
    pub dimension: DimensionDoc,
    pub note: &'static str,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_document_parsing() {
        let doc = MatrixDocument::parse(
            r#"{"label": "conj", "matrix": [["1","0","0","0"],["0","-1","0","0"],["0","0","-1","0"],["0","0","0","-1"]]}"#,
        )
        .unwrap();
        assert_eq!(doc.label.as_deref(), Some("conj"));
        assert_eq!(doc.operator().unwrap(), crate::autos::conj_op());
        let no_label = MatrixDocument::parse(r#"{"matrix": [["2/4","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}"#)
            .unwrap();
        assert_eq!(no_label.operator().unwrap().entry(0, 0).to_string(), "1/2");
    }

    #[test]
    fn malformed_documents() {
        assert!(MatrixDocument::parse("not json").is_err());
        assert!(MatrixDocument::parse(r#"{"matrix": [[1,0,0,0]]}"#).is_err());
        assert!(MatrixDocument::parse(r#"{"matrix": [], "extra": 1}"#).is_err());
        let short = MatrixDocument::parse(r#"{"matrix": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]]}"#).unwrap();
        assert!(short.operator().is_err());
        let bad = MatrixDocument::parse(r#"{"matrix": [["x","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}"#)
            .unwrap();
        assert!(bad.operator().is_err());
    }
}
