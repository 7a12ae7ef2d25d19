use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::InvariantError;
use crate::algebra::LieAlgebra;
use crate::exact::{Monomial, MultiPoly, Rational, VarSet};

/// First-order operator `Σ_b q_b(x) ∂/∂x_b` with linear coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    vars: Arc<VarSet>,
    /// Coefficient per differentiation variable, no zero entries.
    terms: BTreeMap<usize, MultiPoly>,
}

impl DiffOperator {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        DiffOperator {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(coefficient, variable name)` pairs; repeated variables add.
    pub fn from_terms(
        vars: &Arc<VarSet>,
        terms: impl IntoIterator<Item = (MultiPoly, String)>,
    ) -> Result<Self, InvariantError> {
        let mut op = DiffOperator::zero(vars);
        for (q, name) in terms {
            let i = vars
                .index_of(&name)
                .ok_or_else(|| InvariantError::ForeignVariable(name.clone()))?;
            if q.vars() != vars {
                return Err(InvariantError::ForeignVariable(name));
            }
            op.add(i, &q);
        }
        Ok(op)
    }

    fn add(&mut self, i: usize, q: &MultiPoly) {
        let sum = match self.terms.remove(&i) {
            Some(p) => &p + q,
            None => q.clone(),
        };
        if !sum.is_zero() {
            self.terms.insert(i, sum);
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(variable index, coefficient)` in variable order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.terms.iter().map(|(i, q)| (*i, q))
    }

    /// Coefficient of `∂/∂x_i`.
    pub fn coefficient(&self, i: usize) -> MultiPoly {
        self.terms
            .get(&i)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(&self.vars))
    }

    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (&i, q) in &self.terms {
            let d = p.partial(i);
            if !d.is_zero() {
                out = &out + &(q * &d);
            }
        }
        out
    }

    /// Image of a monomial under the operator as `(monomial, coefficient)`
    /// pairs; used to assemble linear systems without building polynomials.
    pub(crate) fn apply_monomial(&self, m: &Monomial) -> Vec<(Monomial, Rational)> {
        let mut out = Vec::new();
        for (&b, q) in &self.terms {
            let e = m.exponent(b);
            if e == 0 {
                continue;
            }
            for (lin, c) in q.terms() {
                let c2 = c * Rational::from_integer(e.into());
                let target = m.exchange(b, lin_var(lin)).expect("exponent checked");
                out.push((target, c2));
            }
        }
        out
    }
}

fn lin_var(m: &Monomial) -> usize {
    m.exponents()
        .iter()
        .position(|&e| e == 1)
        .expect("coefficients are linear")
}

/// `X̂_a = Σ_{b,c} f^c_{ab} x_c ∂/∂x_b` over the algebra's dual coordinates.
pub fn coadjoint_operator(
    algebra: &LieAlgebra,
    generator: &str,
) -> Result<DiffOperator, InvariantError> {
    let a = algebra
        .index_of(generator)
        .ok_or_else(|| InvariantError::UnknownGenerator(generator.to_string()))?;
    Ok(coadjoint_at(algebra, a))
}

pub(crate) fn coadjoint_at(algebra: &LieAlgebra, a: usize) -> DiffOperator {
    let vars = algebra.coordinates();
    let mut op = DiffOperator::zero(vars);
    for b in 0..algebra.dim() {
        let mut q = MultiPoly::zero(vars);
        for (c, f) in algebra.bracket_terms(a, b) {
            q.add_term(
                Monomial::var(vars.len(), algebra.coordinate_of(*c)),
                f.clone(),
            );
        }
        if !q.is_zero() {
            op.add(algebra.coordinate_of(b), &q);
        }
    }
    op
}

/// `j3*d_j2 - j2*d_j3`; `0` for the zero operator.
impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&i, q)) in self.terms.iter().enumerate() {
            let text = q.to_string();
            let (neg, body) = if q.len() == 1 {
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            } else {
                (false, format!("({text})"))
            };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}{body}*d_{}", self.vars.name(i))?;
        }
        Ok(())
    }
}
