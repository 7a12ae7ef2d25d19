//! Finite Laurent series in a formal contraction parameter ε.
//!
//! ε never takes a numeric value; it exists only as the integer grading of
//! the coefficient map.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use super::poly::{MultiPoly, VarSet};
use super::MathError;

/// `Σ_k ε^k · coeffs[k]`, with no zero polynomial stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonSeries {
    vars: Arc<VarSet>,
    coeffs: BTreeMap<i64, MultiPoly>,
}

impl EpsilonSeries {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        EpsilonSeries {
            vars: vars.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The single-term series `ε^k · p`.
    pub fn term(k: i64, p: MultiPoly) -> Self {
        let mut s = EpsilonSeries::zero(p.vars());
        s.add_at(k, &p);
        s
    }

    fn add_at(&mut self, k: i64, p: &MultiPoly) {
        if p.is_zero() {
            return;
        }
        let merged = match self.coeffs.remove(&k) {
            Some(q) => &q + p,
            None => p.clone(),
        };
        if !merged.is_zero() {
            self.coeffs.insert(k, merged);
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &MultiPoly)> {
        self.coeffs.iter().map(|(k, p)| (*k, p))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of `ε^k`; zero when absent.
    pub fn coefficient(&self, k: i64) -> MultiPoly {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(&self.vars))
    }

    /// Multiplies by `ε^k`.
    pub fn shift(&self, k: i64) -> EpsilonSeries {
        EpsilonSeries {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, p)| (e + k, p.clone()))
                .collect(),
        }
    }

    /// Returns `(shift, limit)` with `ε^shift · self → limit` as ε → 0:
    /// the shift cancels the most singular order.
    pub fn limit(&self) -> Result<(i64, MultiPoly), MathError> {
        let (k, p) = self.coeffs.iter().next().ok_or(MathError::EmptySeries)?;
        Ok((-k, p.clone()))
    }
}

impl Add<&EpsilonSeries> for &EpsilonSeries {
    type Output = EpsilonSeries;

    fn add(self, rhs: &EpsilonSeries) -> EpsilonSeries {
        let mut out = self.clone();
        for (k, p) in &rhs.coeffs {
            out.add_at(*k, p);
        }
        out
    }
}

impl Mul<&EpsilonSeries> for &EpsilonSeries {
    type Output = EpsilonSeries;

    fn mul(self, rhs: &EpsilonSeries) -> EpsilonSeries {
        let mut out = EpsilonSeries::zero(&self.vars);
        for (a, p) in &self.coeffs {
            for (b, q) in &rhs.coeffs {
                out.add_at(a + b, &(p * q));
            }
        }
        out
    }
}

impl fmt::Display for EpsilonSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, p)| format!("eps^{k}*({p})"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl MultiPoly {
    /// Homomorphic substitution of every variable by a series over `target`.
    pub fn substitute(
        &self,
        images: &HashMap<String, EpsilonSeries>,
        target: &Arc<VarSet>,
    ) -> Result<EpsilonSeries, MathError> {
        let vars = self.vars().clone();
        let mut powers: Vec<Vec<EpsilonSeries>> = Vec::with_capacity(vars.len());
        for (i, name) in vars.names().iter().enumerate() {
            let max_e = self.terms().map(|(m, _)| m.exponent(i)).max().unwrap_or(0);
            if max_e == 0 {
                powers.push(Vec::new());
                continue;
            }
            let img = images
                .get(name)
                .ok_or_else(|| MathError::UnmappedVariable(name.clone()))?;
            if img.vars() != target {
                return Err(MathError::VarSetMismatch);
            }
            let mut pw = vec![EpsilonSeries::term(0, MultiPoly::one(target))];
            for e in 1..=max_e as usize {
                let next = &pw[e - 1] * img;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut out = EpsilonSeries::zero(target);
        for (m, c) in self.terms() {
            let mut acc = EpsilonSeries::term(0, MultiPoly::constant(target, c.clone()));
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    acc = &acc * &powers[i][e as usize];
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

/// Builds the image `ε^k · x` for a variable of `target`.
pub fn scaled_variable(
    target: &Arc<VarSet>,
    name: &str,
    k: i64,
) -> Result<EpsilonSeries, MathError> {
    Ok(EpsilonSeries::term(k, MultiPoly::var(target, name)?))
}
