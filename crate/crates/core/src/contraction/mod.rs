//! Graded Inönü–Wigner contractions.
//!
//! A scaling assigns an integer `n_a` to each generator and replaces `X_a`
//! by `ε^{n_a} X_a`. The structure constants pick up `ε^{n_a + n_b − n_c}`;
//! the limit ε → 0 exists iff no exponent is negative, and keeps exactly the
//! constants whose exponent is zero.

mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra};
use crate::exact::Rational;

pub use parse::{expand_group, parse_relabel, parse_scale};

/// A structure constant together with its ε exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledTriple {
    pub left: String,
    pub right: String,
    pub result: String,
    pub exponent: i64,
}

impl fmt::Display for ScaledTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] -> {} scales as eps^{}",
            self.left, self.right, self.result, self.exponent
        )
    }
}

fn list(triples: &[ScaledTriple]) -> String {
    triples
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("scaling leaves generators without an exponent: {}", .missing.join(", "))]
    IncompleteScaling { missing: Vec<String> },
    #[error("scaling names unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("contraction is ill-defined, negative exponents: {}", list(.triples))]
    IllDefinedContraction { triples: Vec<ScaledTriple> },
    #[error("scaling is for algebra `{found}`, not `{expected}`")]
    AlgebraMismatch { expected: String, found: String },
    #[error("contracted algebra violates the Jacobi identity at [{}]", .0.join(", "))]
    JacobiViolated([String; 3]),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Integer exponents per generator name.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedScaling {
    exponents: BTreeMap<String, i64>,
}

impl GradedScaling {
    pub fn new(exponents: &[(&str, i64)]) -> Self {
        GradedScaling {
            exponents: exponents.iter().map(|(g, n)| (g.to_string(), *n)).collect(),
        }
    }

    pub fn from_map(exponents: BTreeMap<String, i64>) -> Self {
        GradedScaling { exponents }
    }

    pub fn exponent(&self, generator: &str) -> Option<i64> {
        self.exponents.get(generator).copied()
    }

    pub fn exponents(&self) -> &BTreeMap<String, i64> {
        &self.exponents
    }

    /// The same scaling with every exponent raised by `k`.
    pub fn shifted(&self, k: i64) -> GradedScaling {
        GradedScaling {
            exponents: self
                .exponents
                .iter()
                .map(|(g, n)| (g.clone(), n + k))
                .collect(),
        }
    }

    /// Exponents in generator order; every generator must be covered and
    /// every named generator must exist.
    pub fn resolve(&self, algebra: &LieAlgebra) -> Result<Vec<i64>, ContractionError> {
        if let Some(g) = self
            .exponents
            .keys()
            .find(|g| algebra.index_of(g).is_none())
        {
            return Err(ContractionError::UnknownGenerator(g.clone()));
        }
        let missing: Vec<String> = algebra
            .generators()
            .iter()
            .filter(|g| !self.exponents.contains_key(*g))
            .cloned()
            .collect();
        if !missing.is_empty() {
            return Err(ContractionError::IncompleteScaling { missing });
        }
        Ok(algebra
            .generators()
            .iter()
            .map(|g| self.exponents[g])
            .collect())
    }
}

/// Scaling file: `{"algebra": "poincare", "exponents": {"j1": 0, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalingFile {
    pub algebra: String,
    pub exponents: BTreeMap<String, i64>,
}

impl ScalingFile {
    pub fn parse(text: &str) -> Result<Self, ContractionError> {
        serde_json::from_str(text).map_err(|e| ContractionError::Parse {
            input: format!("line {}, column {}", e.line(), e.column()),
            reason: e.to_string(),
        })
    }

    /// Scaling for `algebra`, checking the file targets it.
    pub fn scaling_for(&self, algebra: &LieAlgebra) -> Result<GradedScaling, ContractionError> {
        if self.algebra != algebra.name() {
            return Err(ContractionError::AlgebraMismatch {
                expected: algebra.name().to_string(),
                found: self.algebra.clone(),
            });
        }
        Ok(GradedScaling::from_map(self.exponents.clone()))
    }
}

/// An algebra whose structure constants carry ε exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledAlgebra {
    source: LieAlgebra,
    exponents: Vec<i64>,
}

/// Applies `scaling` to `algebra`.
pub fn rescale(
    algebra: &LieAlgebra,
    scaling: &GradedScaling,
) -> Result<ScaledAlgebra, ContractionError> {
    Ok(ScaledAlgebra {
        source: algebra.clone(),
        exponents: scaling.resolve(algebra)?,
    })
}

impl ScaledAlgebra {
    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    /// Generator exponents `n_a` in generator order.
    pub fn generator_exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Composes a further scaling: exponents add.
    pub fn rescale(&self, scaling: &GradedScaling) -> Result<ScaledAlgebra, ContractionError> {
        let more = scaling.resolve(&self.source)?;
        Ok(ScaledAlgebra {
            source: self.source.clone(),
            exponents: self
                .exponents
                .iter()
                .zip(more)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Every nonzero structure constant with its exponent `n_a + n_b − n_c`.
    pub fn triples(&self) -> Vec<(ScaledTriple, Rational)> {
        let l = &self.source;
        l.structure_constants()
            .iter()
            .map(|(&(a, b, c), v)| {
                let t = ScaledTriple {
                    left: l.generator(a).to_string(),
                    right: l.generator(b).to_string(),
                    result: l.generator(c).to_string(),
                    exponent: self.exponents[a] + self.exponents[b] - self.exponents[c],
                };
                (t, v.clone())
            })
            .collect()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.triples().iter().map(|(t, _)| t.exponent).min()
    }

    /// Triples that diverge as ε → 0.
    pub fn divergent(&self) -> Vec<ScaledTriple> {
        self.triples()
            .into_iter()
            .filter(|(t, _)| t.exponent < 0)
            .map(|(t, _)| t)
            .collect()
    }

    /// The ε → 0 limit; every divergent triple is reported on failure.
    pub fn limit(&self) -> Result<LieAlgebra, ContractionError> {
        let bad = self.divergent();
        if !bad.is_empty() {
            return Err(ContractionError::IllDefinedContraction { triples: bad });
        }
        let l = &self.source;
        let constants: BTreeMap<(usize, usize, usize), Rational> = l
            .structure_constants()
            .iter()
            .filter(|(&(a, b, c), _)| self.exponents[a] + self.exponents[b] == self.exponents[c])
            .map(|(k, v)| (*k, v.clone()))
            .collect();
        let out = LieAlgebra::from_constants(
            format!("{}.contracted", l.name()),
            l.generators().to_vec(),
            constants,
        )?;
        if let Some(v) = out.jacobi_check().into_iter().next() {
            return Err(ContractionError::JacobiViolated(v.triple));
        }
        Ok(out)
    }
}

/// `lim_{ε→0}` of `algebra` under `scaling`.
pub fn contraction_limit(
    algebra: &LieAlgebra,
    scaling: &GradedScaling,
) -> Result<LieAlgebra, ContractionError> {
    rescale(algebra, scaling)?.limit()
}

/// Outcome of comparing a contraction with a target algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub limit: LieAlgebra,
    pub matches: bool,
}

/// Contracts `algebra` and compares with `target` after renaming through
/// `relabel` (unlisted generators keep their names).
pub fn contract_and_compare(
    algebra: &LieAlgebra,
    scaling: &GradedScaling,
    target: &LieAlgebra,
    relabel: &HashMap<String, String>,
) -> Result<Comparison, ContractionError> {
    let limit = contraction_limit(algebra, scaling)?;
    let matches = limit.same_structure(target, relabel)?;
    Ok(Comparison { limit, matches })
}
