//! Exact arithmetic substrate: rationals, polynomials, ε-series and linear
//! algebra over the rationals.

pub mod matrix;
pub mod nullspace;
pub mod poly;
pub mod rational;
pub mod series;

use thiserror::Error;

pub use matrix::{generic_rank, RationalMatrix};
pub use nullspace::{nullspace, nullspace_with};
pub use poly::{Monomial, MultiPoly, VarSet};
pub use rational::{int, parse_rational, rat, Rational};
pub use series::{scaled_variable, EpsilonSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("variable `{0}` has no image in the substitution")]
    UnmappedVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("limit of an empty series")]
    EmptySeries,
    #[error("operands live over different variable sets")]
    VarSetMismatch,
    #[error("entry ({row}, {col}) is outside the matrix")]
    OutOfBounds { row: usize, col: usize },
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}
