//! JSON file format for representations.
//!
//! ```json
//! {"field": {"kind": "prime", "modulus": 1009},
//!  "dim": [a, b, c],
//!  "a01": [[["1","0"], ...], ...], "a12": [...], "a02": [...]}
//! ```
//! Matrices are row-major arrays of rows; entries are strings so rationals
//! (`"n/d"`) and residues share one encoding.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::beilinson::BeilinsonRep;
use crate::error::{Error, Result};
use crate::exactlin::{ExactMat, FieldSpec};
use crate::quiver::DimVec3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
}

type TextMatrix = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepJson {
    pub field: FieldJson,
    pub dim: [u64; 3],
    pub a01: Vec<TextMatrix>,
    pub a12: Vec<TextMatrix>,
    pub a02: Vec<TextMatrix>,
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson {
                kind: "rational".into(),
                modulus: None,
            },
            FieldSpec::Prime(p) => FieldJson {
                kind: "prime".into(),
                modulus: Some(p.get()),
            },
        }
    }
}

impl TryFrom<&FieldJson> for FieldSpec {
    type Error = Error;

    fn try_from(f: &FieldJson) -> Result<FieldSpec> {
        match (f.kind.as_str(), f.modulus) {
            ("rational", None) => Ok(FieldSpec::Rationals),
            ("prime", Some(p)) => FieldSpec::prime(p),
            _ => Err(Error::Parse(format!(
                "field must be {{kind: rational}} or {{kind: prime, modulus}}, got {f:?}"
            ))),
        }
    }
}

impl From<&BeilinsonRep> for RepJson {
    fn from(r: &BeilinsonRep) -> Self {
        let text = |ms: &[ExactMat]| ms.iter().map(ExactMat::to_text_rows).collect();
        RepJson {
            field: r.field().into(),
            dim: r.dim().as_array(),
            a01: text(r.a01()),
            a12: text(r.a12()),
            a02: text(r.a02()),
        }
    }
}

impl RepJson {
    /// Parses every entry and re-validates the relation.
    pub fn to_rep(&self) -> Result<BeilinsonRep> {
        let field = FieldSpec::try_from(&self.field)?;
        let [a, b, c] = self.dim.map(|d| d as usize);
        let parse = |name: &str, ms: &[TextMatrix], rows: usize, cols: usize| {
            ms.iter()
                .map(|m| ExactMat::from_text_rows(field, rows, cols, m))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| match e {
                    Error::ShapeMismatch(s) => Error::ShapeMismatch(format!("{name}: {s}")),
                    other => other,
                })
        };
        BeilinsonRep::new(
            field,
            DimVec3::new(self.dim[0], self.dim[1], self.dim[2]),
            parse("a01", &self.a01, b, a)?,
            parse("a12", &self.a12, c, b)?,
            parse("a02", &self.a02, c, a)?,
        )
    }
}

pub fn rep_to_json(r: &BeilinsonRep) -> String {
    serde_json::to_string_pretty(&RepJson::from(r)).expect("plain data serializes")
}

pub fn rep_from_json(text: &str) -> Result<BeilinsonRep> {
    let parsed: RepJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parsed.to_rep()
}

pub fn write_rep(path: &Path, r: &BeilinsonRep) -> std::io::Result<()> {
    std::fs::write(path, rep_to_json(r) + "\n")
}

pub fn read_rep(path: &Path) -> Result<BeilinsonRep> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    rep_from_json(&text)
}
