//! JSON algebra files.
//!
//! ```json
//! {
//!   "name": "so3",
//!   "generators": ["j1", "j2", "j3"],
//!   "brackets": [
//!     { "left": "j1", "right": "j2", "terms": [{ "coeff": "1", "gen": "j3" }] }
//!   ]
//! }
//! ```
//!
//! Unknown fields are rejected. Saving writes every nonzero bracket once,
//! with `left` before `right` in generator order, so load/save round trips
//! are byte-identical.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, BracketSpec, LieAlgebra};
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<TermEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermEntry {
    #[serde(with = "coeff")]
    pub coeff: Rational,
    pub gen: String,
}

pub(crate) mod coeff {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::exact::rational::{format_rational, parse_rational};
    use crate::exact::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> AlgebraError {
    AlgebraError::Format {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let brackets = l
            .nonzero_brackets()
            .into_iter()
            .map(|(a, b)| {
                let mut terms: Vec<(usize, Rational)> = l.bracket_terms(a, b).to_vec();
                terms.sort_by_key(|(c, _)| *c);
                BracketEntry {
                    left: l.generator(a).to_string(),
                    right: l.generator(b).to_string(),
                    terms: terms
                        .into_iter()
                        .map(|(c, v)| TermEntry {
                            coeff: v,
                            gen: l.generator(c).to_string(),
                        })
                        .collect(),
                }
            })
            .collect();
        AlgebraFile {
            name: l.name().to_string(),
            generators: l.generators().to_vec(),
            brackets,
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra, AlgebraError> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        let specs: Vec<BracketSpec> = self
            .brackets
            .iter()
            .map(|b| BracketSpec {
                left: b.left.clone(),
                right: b.right.clone(),
                terms: b
                    .terms
                    .iter()
                    .map(|t| (t.gen.clone(), t.coeff.clone()))
                    .collect(),
            })
            .collect();
        LieAlgebra::new(&self.name, &gens, &specs)
    }
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, AlgebraError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(json_error)?;
    file.to_algebra()
}

/// Canonical JSON text, newline-terminated.
pub fn algebra_to_string(l: &LieAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(l))
        .expect("algebra files always serialize");
    s.push('\n');
    s
}

pub fn load_algebra(path: &Path) -> Result<LieAlgebra, AlgebraError> {
    let text = std::fs::read_to_string(path).map_err(|e| AlgebraError::Format {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_algebra(&text)
}

pub fn save_algebra(l: &LieAlgebra, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, algebra_to_string(l))
}
