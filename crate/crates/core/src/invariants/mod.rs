//! Polynomial Casimir invariants.
//!
//! A generator acts on functions of the dual coordinates through its
//! coadjoint operator; invariants are the polynomials every operator
//! annihilates. They are found degree by degree as an exact nullspace.

mod operator;
mod space;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::contraction::{rescale, ContractionError, GradedScaling};
use crate::exact::{generic_rank, EpsilonSeries, MathError, MultiPoly, Rational, RationalMatrix};

pub use operator::{coadjoint_operator, DiffOperator};
pub use space::{
    invariant_space, invariant_space_with, new_invariants, new_invariants_from, InvariantBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("polynomial is not over this algebra's coordinates (`{0}`)")]
    ForeignVariable(String),
    #[error("`{0}` is not an invariant")]
    NotInvariant(String),
    #[error("generic rank did not stabilize after {0} attempts")]
    RankUnstable(usize),
    #[error("contracted polynomial `{0}` is not an invariant of the contraction")]
    LimitNotInvariant(String),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error(transparent)]
    Math(#[from] MathError),
}

fn check_vars(algebra: &LieAlgebra, p: &MultiPoly) -> Result<(), InvariantError> {
    if p.vars() == algebra.coordinates() {
        Ok(())
    } else {
        Err(InvariantError::ForeignVariable(p.vars().names().join(",")))
    }
}

/// All coadjoint operators, in generator order.
pub fn coadjoint_operators(algebra: &LieAlgebra) -> Vec<DiffOperator> {
    (0..algebra.dim())
        .map(|a| operator::coadjoint_at(algebra, a))
        .collect()
}

/// True iff every coadjoint operator annihilates `p`.
pub fn is_invariant(algebra: &LieAlgebra, p: &MultiPoly) -> Result<bool, InvariantError> {
    check_vars(algebra, p)?;
    Ok(coadjoint_operators(algebra)
        .iter()
        .all(|op| op.apply(p).is_zero()))
}

/// Retry budget for [`invariant_count`].
pub const RANK_ATTEMPTS: usize = 8;

/// Number of functionally independent invariants, `dim − rank [Σ_c f^c_ab x_c]`
/// at a generic integer point. Two independent samples must agree.
pub fn invariant_count(algebra: &LieAlgebra, seed: u64) -> Result<usize, InvariantError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = algebra.dim();
    let sample = |rng: &mut ChaCha8Rng| {
        let x: Vec<Rational> = (0..n)
            .map(|_| Rational::from_integer(rng.gen_range(-1_000_000i64..=1_000_000).into()))
            .collect();
        let mut m = RationalMatrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let mut v = Rational::from_integer(0.into());
                for (c, f) in algebra.bracket_terms(a, b) {
                    v += f * &x[*c];
                }
                m.set(a, b, v).expect("square");
            }
        }
        generic_rank(&m)
    };
    for _ in 0..RANK_ATTEMPTS {
        let (r1, r2) = (sample(&mut rng), sample(&mut rng));
        if r1 == r2 {
            return Ok(n - r1);
        }
    }
    Err(InvariantError::RankUnstable(RANK_ATTEMPTS))
}

/// An invariant pushed through a contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedInvariant {
    /// Power of ε that makes the expansion finite and nonzero at ε = 0.
    pub shift: i64,
    pub limit: MultiPoly,
    /// Raw expansion after `x_a ↦ ε^{−n_a} x_a`.
    pub expansion: EpsilonSeries,
}

impl ContractedInvariant {
    /// `ε^shift` times the expansion; its ε⁰ coefficient is the limit.
    pub fn normalized(&self) -> EpsilonSeries {
        self.expansion.shift(self.shift)
    }
}

/// Substitutes `x_a ↦ ε^{−n_a} x_a` into the invariant `p` and takes the
/// leading order, which is checked to be invariant under the contraction.
pub fn contract_invariant(
    algebra: &LieAlgebra,
    scaling: &GradedScaling,
    p: &MultiPoly,
) -> Result<ContractedInvariant, InvariantError> {
    if !is_invariant(algebra, p)? {
        return Err(InvariantError::NotInvariant(p.to_string()));
    }
    let scaled = rescale(algebra, scaling)?;
    let target = scaled.limit()?;
    let vars = algebra.coordinates();
    let images: HashMap<String, EpsilonSeries> = algebra
        .generators()
        .iter()
        .zip(scaled.generator_exponents())
        .map(|(g, n)| {
            let x = MultiPoly::var(vars, g).expect("coordinate of a generator");
            (g.clone(), EpsilonSeries::term(-n, x))
        })
        .collect();
    let expansion = p.substitute(&images, vars)?;
    let (shift, limit) = expansion.limit()?;
    if !is_invariant(
        &target,
        &limit.rename(target.coordinates(), &HashMap::new())?,
    )? {
        return Err(InvariantError::LimitNotInvariant(limit.to_string()));
    }
    Ok(ContractedInvariant {
        shift,
        limit,
        expansion,
    })
}

/// Sets the momenta `p1, p2, p3` to zero.
pub fn evaluate_at_rest(p: &MultiPoly) -> Result<MultiPoly, InvariantError> {
    let vars = p.vars();
    let mut idx = Vec::with_capacity(3);
    for name in ["p1", "p2", "p3"] {
        idx.push(
            vars.index_of(name)
                .ok_or_else(|| InvariantError::ForeignVariable(name.to_string()))?,
        );
    }
    Ok(p.zero_out(&idx))
}

#[cfg(test)]
mod tests;
