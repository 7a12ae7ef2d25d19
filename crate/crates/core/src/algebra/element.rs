use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::exact::rational::format_rational;
use crate::exact::Rational;

/// Linear combination of generators, keyed by generator name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<String, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn generator(name: &str) -> Self {
        AlgebraElement::from_terms(&[(name, Rational::from_integer(1.into()))])
    }

    pub fn from_terms(terms: &[(&str, Rational)]) -> Self {
        AlgebraElement::from_pairs(terms.iter().map(|(g, c)| (g.to_string(), c.clone())))
    }

    pub(crate) fn from_pairs(pairs: impl IntoIterator<Item = (String, Rational)>) -> Self {
        let mut terms: BTreeMap<String, Rational> = BTreeMap::new();
        for (g, c) in pairs {
            *terms.entry(g).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, name: &str) -> Rational {
        self.terms.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(generator, coefficient)` pairs, sorted by name.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.terms.iter().map(|(g, c)| (g.as_str(), c))
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        AlgebraElement::from_pairs(self.terms.iter().map(|(g, v)| (g.clone(), v * c)))
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_pairs(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(g, v)| (g.clone(), v.clone())),
        )
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms()))
    }
}

/// `c1*g1 + c2*g2 - ...` with every coefficient written out; `0` when empty.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (&'a str, &'a Rational)>) -> String {
    let mut out = String::new();
    for (k, (g, c)) in terms.enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&format!("{}*{}", format_rational(&c.abs()), g));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
