//! Sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial lives over a [`VarSet`], an ordered list of variable names.
//! The position of a variable in its set is its priority in the monomial
//! order: monomials compare by total degree first, then lexicographically
//! on the exponent vector (a larger exponent on an earlier variable wins).
//! Canonical text lists terms in descending order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::MathError;

/// Ordered set of variable names shared by a family of polynomials.
#[derive(Debug, Clone)]
pub struct VarSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Arc<VarSet>, MathError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(MathError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarSet { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarSet {}

fn same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector over a [`VarSet`]; the derived order is graded lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self * x_to / x_from`, or `None` when `x_from` does not divide.
    pub fn exchange(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[from] -= 1;
        m.exps[to] += 1;
        Some(m)
    }

    /// All monomials of total degree `d` in `nvars` variables, descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur.clone()));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut vec![0; nvars], &mut out);
        out
    }

    fn render(&self, vars: &VarSet) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        parts.join("*")
    }
}

/// Polynomial with exact rational coefficients. No zero coefficient is ever
/// stored, so the zero polynomial has no terms.
///
/// Arithmetic operators panic when the operands live over different
/// variable sets.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        MultiPoly::constant(vars, Rational::one())
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self, MathError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| MathError::UnknownVariable(name.to_string()))?;
        Ok(MultiPoly::var_at(vars, i))
    }

    pub fn var_at(vars: &Arc<VarSet>, i: usize) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial::var(vars.len(), i), Rational::one());
        p
    }

    pub fn from_terms(
        vars: &Arc<VarSet>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Accumulates `c * m` into the polynomial.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.vars.len(), "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Indices of variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the variable at index `i`.
    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            out.add_term(
                Monomial::from_exponents(exps),
                c * Rational::from_integer(e.into()),
            );
        }
        out
    }

    pub fn partial_by_name(&self, name: &str) -> Result<MultiPoly, MathError> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| MathError::UnknownVariable(name.to_string()))?;
        Ok(self.partial(i))
    }

    /// Sets the listed variables to zero.
    pub fn zero_out(&self, vars: &[usize]) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&i| m.exponent(i) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Moves the polynomial onto `target`, renaming variables through
    /// `rename` (identity for names absent from the map).
    pub fn rename(
        &self,
        target: &Arc<VarSet>,
        rename: &HashMap<String, String>,
    ) -> Result<MultiPoly, MathError> {
        let mut idx = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let new = rename.get(name).unwrap_or(name);
            let used = self.terms.keys().any(|m| m.exponent(i) > 0);
            match target.index_of(new) {
                Some(j) => idx.push(Some(j)),
                None if used => return Err(MathError::UnknownVariable(new.clone())),
                None => idx.push(None),
            }
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    exps[idx[i].expect("checked above")] += e;
                }
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Parses canonical text such as `m*h - 1/2*p1^2`.
    pub fn parse(vars: &Arc<VarSet>, text: &str) -> Result<MultiPoly, MathError> {
        let err = |reason: &str| MathError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut cur = String::new();
        for (pos, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !cur.ends_with('^') {
                if pos != 0 {
                    if cur.is_empty() {
                        return Err(err("dangling sign"));
                    }
                    pieces.push((negative, std::mem::take(&mut cur)));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err("dangling sign"));
        }
        pieces.push((negative, cur));

        let mut out = MultiPoly::zero(vars);
        for (neg, body) in pieces {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= parse_rational(factor)?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let i = vars
                    .index_of(name)
                    .ok_or_else(|| MathError::UnknownVariable(name.to_string()))?;
                exps[i] += e;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_exponents(exps), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&m.render(&self.vars))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), m.render(&self.vars))?;
            }
        }
        Ok(())
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(same_vars(&self.vars, &rhs.vars), "variable sets differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(same_vars(&self.vars, &rhs.vars), "variable sets differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(same_vars(&self.vars, &rhs.vars), "variable sets differ");
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: self.vars.clone(),
            terms: acc,
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn vars() -> Arc<VarSet> {
        VarSet::new(["m", "h", "j1", "p1", "p2", "p3"]).unwrap()
    }

    fn p(text: &str) -> MultiPoly {
        MultiPoly::parse(&vars(), text).unwrap()
    }

    #[test]
    fn additive_inverse_and_cancellation() {
        assert!((p("p1") + p("-p1")).is_zero());
        assert_eq!(p("h^2 - p1^2") + p("p1^2"), p("h^2"));
        assert_eq!(p("1/2*m*h") + p("1/2*m*h"), p("m*h"));
    }

    #[test]
    fn products() {
        assert_eq!(p("m") * p("m"), p("m^2"));
        assert_eq!(p("h + m") * p("h - m"), p("h^2 - m^2"));
        assert!((MultiPoly::zero(&vars()) * p("h + p2")).is_zero());
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("j1^2").partial_by_name("j1").unwrap(), p("2*j1"));
        assert_eq!(p("h^2 - p1^2").partial_by_name("p1").unwrap(), p("-2*p1"));
        assert!(p("m").partial_by_name("h").unwrap().is_zero());
        assert!(p("m").partial_by_name("q").is_err());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(
            p("-p1^2 + h^2 - p3^2 - p2^2").to_string(),
            "h^2 - p1^2 - p2^2 - p3^2"
        );
        assert_eq!(
            p("h*m - 1/2*p1^2 - 1/2*p2^2 - 1/2*p3^2").to_string(),
            "m*h - 1/2*p1^2 - 1/2*p2^2 - 1/2*p3^2"
        );
        assert_eq!(MultiPoly::zero(&vars()).to_string(), "0");
        assert_eq!(p("-3/4").to_string(), "-3/4");
        assert_eq!(p("-m + 2*j1*p1").to_string(), "2*j1*p1 - m");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(MultiPoly::parse(&vars(), "").is_err());
        assert!(MultiPoly::parse(&vars(), "h +").is_err());
        assert!(MultiPoly::parse(&vars(), "x^2").is_err());
        assert!(MultiPoly::parse(&vars(), "h^a").is_err());
    }

    #[test]
    fn monomials_of_degree() {
        let all = Monomial::all_of_degree(11, 4);
        assert_eq!(all.len(), 1001);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(Monomial::all_of_degree(3, 0).len(), 1);
    }

    #[test]
    fn homogeneity_and_degree() {
        assert!(p("h^2 - p1*p2").is_homogeneous());
        assert!(!p("h^2 - p1").is_homogeneous());
        assert_eq!(p("h^2 - p1").degree(), Some(2));
        assert_eq!(MultiPoly::zero(&vars()).degree(), None);
        assert_eq!(p("h - 2/3").coefficient(&Monomial::one(6)), rat(-2, 3));
        assert_eq!(p("3*h").leading_term().unwrap().1, &int(3));
    }

    #[test]
    fn rename_between_sets() {
        let target = VarSet::new(["m", "hbar", "j1", "p1", "p2", "p3"]).unwrap();
        let map: HashMap<String, String> = [("h".to_string(), "hbar".to_string())].into();
        let q = p("m*h - p1^2").rename(&target, &map).unwrap();
        assert_eq!(q.to_string(), "m*hbar - p1^2");
    }
}
