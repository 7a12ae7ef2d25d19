use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::operator::coadjoint_at;
use crate::algebra::LieAlgebra;
use crate::exact::nullspace::{canonical_basis, integer_nullspace, SparseRow};
use crate::exact::rational::denominator_lcm;
use crate::exact::{Monomial, MultiPoly, Rational};
use crate::par::Parallelism;

/// Homogeneous invariants of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBasis {
    pub algebra: String,
    pub degree: u32,
    /// True when the list is taken modulo products of lower invariants.
    pub new_only: bool,
    pub polynomials: Vec<MultiPoly>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.polynomials.len()
    }
}

/// Basis of the degree-`d` invariants: the nullspace of the stacked system
/// with one row per (operator, image monomial) and one column per monomial.
pub fn invariant_space(algebra: &LieAlgebra, d: u32) -> InvariantBasis {
    invariant_space_with(algebra, d, Parallelism::default())
}

pub fn invariant_space_with(algebra: &LieAlgebra, d: u32, par: Parallelism) -> InvariantBasis {
    let n = algebra.dim();
    let columns = Monomial::all_of_degree(n, d);
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let per_op = par.map((0..n).collect(), |a| {
        let op = coadjoint_at(algebra, a);
        let mut rows: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
        for (col, m) in columns.iter().enumerate() {
            for (target, c) in op.apply_monomial(m) {
                let row = rows.entry(index[&target]).or_default();
                *row.entry(col).or_insert_with(Rational::zero) += c;
            }
        }
        rows.into_values()
            .filter_map(integer_row)
            .collect::<Vec<SparseRow>>()
    });
    let rows: Vec<SparseRow> = per_op.into_iter().flatten().collect();
    let polynomials = integer_nullspace(columns.len(), rows, par)
        .into_iter()
        .map(|v| to_poly(algebra, &columns, v))
        .collect();
    InvariantBasis {
        algebra: algebra.name().to_string(),
        degree: d,
        new_only: false,
        polynomials,
    }
}

fn integer_row(row: BTreeMap<usize, Rational>) -> Option<SparseRow> {
    let l = denominator_lcm(row.values());
    let l = Rational::from_integer(l);
    let out: SparseRow = row
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, (v * &l).to_integer()))
        .collect();
    (!out.is_empty()).then_some(out)
}

fn to_poly(algebra: &LieAlgebra, columns: &[Monomial], v: Vec<BigInt>) -> MultiPoly {
    MultiPoly::from_terms(
        algebra.coordinates(),
        v.into_iter()
            .zip(columns)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, m)| (m.clone(), Rational::from_integer(x))),
    )
}

/// Degree-`d` invariants modulo products of the invariants in `lower`.
///
/// Representatives are canonical: each is reduced against the product span
/// (so it has no weight on the span's pivot monomials) and the results are
/// brought to the usual integer echelon normalization.
pub fn new_invariants(algebra: &LieAlgebra, d: u32, lower: &[InvariantBasis]) -> InvariantBasis {
    new_invariants_from(&invariant_space(algebra, d), lower)
}

pub fn new_invariants_from(full: &InvariantBasis, lower: &[InvariantBasis]) -> InvariantBasis {
    let d = full.degree;
    let Some(vars) = full.polynomials.first().map(|p| p.vars().clone()) else {
        return InvariantBasis {
            new_only: true,
            ..full.clone()
        };
    };
    let nvars = vars.len();
    let columns = Monomial::all_of_degree(nvars, d);
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dense = |p: &MultiPoly| {
        let mut v = vec![Rational::zero(); columns.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };

    let products: Vec<MultiPoly> = products_of_degree(&vars, d, lower);
    let span = canonical_basis(products.iter().map(dense).collect());
    let pivots: Vec<(usize, Vec<Rational>)> = span
        .into_iter()
        .map(|row| {
            let row: Vec<Rational> = row.into_iter().map(Rational::from_integer).collect();
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let lead = row[p].clone();
            (p, row.into_iter().map(|x| x / &lead).collect())
        })
        .collect();

    let reduced: Vec<Vec<Rational>> = full
        .polynomials
        .iter()
        .map(|p| {
            let mut v = dense(p);
            for (col, row) in &pivots {
                if v[*col].is_zero() {
                    continue;
                }
                let f = v[*col].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &f * r;
                }
            }
            v
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let polynomials = if reduced.is_empty() {
        Vec::new()
    } else {
        canonical_basis(reduced)
            .into_iter()
            .map(|v| {
                MultiPoly::from_terms(
                    &vars,
                    v.into_iter()
                        .zip(&columns)
                        .map(|(x, m)| (m.clone(), Rational::from_integer(x))),
                )
            })
            .collect()
    };
    InvariantBasis {
        algebra: full.algebra.clone(),
        degree: d,
        new_only: true,
        polynomials,
    }
}

/// All products of lower-degree invariants with total degree `d`.
fn products_of_degree(
    vars: &std::sync::Arc<crate::exact::VarSet>,
    d: u32,
    lower: &[InvariantBasis],
) -> Vec<MultiPoly> {
    let factors: Vec<&MultiPoly> = lower
        .iter()
        .filter(|b| b.degree > 0 && b.degree < d)
        .flat_map(|b| b.polynomials.iter())
        .collect();
    let mut out = Vec::new();
    // multisets of factors, indices nondecreasing to avoid repeats
    fn rec(
        factors: &[&MultiPoly],
        start: usize,
        left: u32,
        acc: MultiPoly,
        out: &mut Vec<MultiPoly>,
    ) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..factors.len() {
            let deg = factors[i].degree().unwrap_or(0);
            if deg == 0 || deg > left {
                continue;
            }
            rec(factors, i, left - deg, &acc * factors[i], out);
        }
    }
    let one = MultiPoly::constant(vars, Rational::one());
    if d > 0 {
        rec(&factors, 0, d, one, &mut out);
    }
    out.retain(|p| p.degree() == Some(d));
    out
}
