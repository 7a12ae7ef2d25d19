//! Lie algebras given by rational structure constants.
//!
//! `[X_a, X_b] = Σ_c f^c_{ab} X_c`. Only pairs with `a < b` are stored;
//! the other half of the table follows from antisymmetry. Construction does
//! not enforce the Jacobi identity, [`LieAlgebra::jacobi_check`] does.

mod basis;
mod element;
pub mod io;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{Rational, VarSet};
use crate::par::Parallelism;

pub use basis::BasisChange;
pub use element::AlgebraElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("bracket [{0}, {1}] is given more than once")]
    DuplicateBracketPair(String, String),
    #[error("bracket refers to unknown generator `{0}`")]
    UnknownGeneratorInBracket(String),
    #[error("bracket [{0}, {0}] must vanish")]
    SelfBracket(String),
    #[error("generator `{0}` does not belong to this algebra")]
    ForeignGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("basis change is singular")]
    SingularBasisChange,
    #[error("basis change has shape {rows}x{cols} and {names} names, expected dimension {dim}")]
    BasisChangeShape {
        rows: usize,
        cols: usize,
        names: usize,
        dim: usize,
    },
    #[error("subset is not closed: [{left}, {right}] involves `{outside}`")]
    NotClosed {
        left: String,
        right: String,
        outside: String,
    },
    #[error("relabeling is not a bijection: {0}")]
    NotBijective(String),
    #[error("{message} (line {line}, column {column})")]
    Format {
        line: usize,
        column: usize,
        message: String,
    },
}

/// One input bracket: `[left, right] = Σ coeff · gen`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketSpec {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, Rational)>,
}

impl BracketSpec {
    pub fn new(left: &str, right: &str, terms: &[(&str, Rational)]) -> Self {
        BracketSpec {
            left: left.to_string(),
            right: right.to_string(),
            terms: terms
                .iter()
                .map(|(g, c)| (g.to_string(), c.clone()))
                .collect(),
        }
    }
}

/// A violated Jacobi identity: `[[a,b],c] + [[b,c],a] + [[c,a],b] ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: [String; 3],
    pub residual: AlgebraElement,
}

type Terms = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    generators: Vec<String>,
    index: HashMap<String, usize>,
    constants: BTreeMap<(usize, usize, usize), Rational>,
    /// Full antisymmetric bracket table, `table[a * n + b]`.
    table: Vec<Terms>,
    coords: Arc<VarSet>,
    coord_of: Vec<usize>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.generators == other.generators
            && self.constants == other.constants
    }
}

impl Eq for LieAlgebra {}

/// Priority of the catalog coordinate names in the polynomial monomial order.
const COORDINATE_RANK: &[&str] = &[
    "m", "h", "hbar", "j1", "j2", "j3", "p1", "p2", "p3", "k1", "k2", "k3", "kp1", "kp2", "kp3",
    "kg1", "kg2", "kg3",
];

fn coordinate_order(generators: &[String]) -> Vec<usize> {
    let rank = |g: &String| COORDINATE_RANK.iter().position(|r| r == g);
    let mut order: Vec<usize> = (0..generators.len()).collect();
    order.sort_by_key(|&i| match rank(&generators[i]) {
        Some(r) => (0, r, i),
        None => (1, 0, i),
    });
    order
}

impl LieAlgebra {
    /// Builds an algebra from a bracket table; unlisted pairs commute.
    pub fn new(
        name: &str,
        generators: &[&str],
        brackets: &[BracketSpec],
    ) -> Result<Self, AlgebraError> {
        let generators: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        let index = index_generators(&generators)?;
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut constants = BTreeMap::new();
        let lookup = |g: &str| {
            index
                .get(g)
                .copied()
                .ok_or_else(|| AlgebraError::UnknownGeneratorInBracket(g.to_string()))
        };
        for b in brackets {
            let (l, r) = (lookup(&b.left)?, lookup(&b.right)?);
            let mut sum: BTreeMap<usize, Rational> = BTreeMap::new();
            for (g, c) in &b.terms {
                *sum.entry(lookup(g)?).or_insert_with(Rational::zero) += c;
            }
            sum.retain(|_, c| !c.is_zero());
            if l == r {
                if sum.is_empty() {
                    continue;
                }
                return Err(AlgebraError::SelfBracket(b.left.clone()));
            }
            let (a, bb, sign) = if l < r { (l, r, 1) } else { (r, l, -1) };
            if !seen.insert((a, bb)) {
                return Err(AlgebraError::DuplicateBracketPair(
                    b.left.clone(),
                    b.right.clone(),
                ));
            }
            for (c, v) in sum {
                let v = if sign < 0 { -v } else { v };
                constants.insert((a, bb, c), v);
            }
        }
        Ok(Self::assemble(
            name.to_string(),
            generators,
            index,
            constants,
        ))
    }

    pub(crate) fn from_constants(
        name: String,
        generators: Vec<String>,
        constants: BTreeMap<(usize, usize, usize), Rational>,
    ) -> Result<Self, AlgebraError> {
        let index = index_generators(&generators)?;
        Ok(Self::assemble(name, generators, index, constants))
    }

    fn assemble(
        name: String,
        generators: Vec<String>,
        index: HashMap<String, usize>,
        mut constants: BTreeMap<(usize, usize, usize), Rational>,
    ) -> Self {
        constants.retain(|&(a, b, _), v| a < b && !v.is_zero());
        let n = generators.len();
        let mut table = vec![Vec::new(); n * n];
        for (&(a, b, c), v) in &constants {
            table[a * n + b].push((c, v.clone()));
            table[b * n + a].push((c, -v));
        }
        let order = coordinate_order(&generators);
        let coords = VarSet::new(order.iter().map(|&i| generators[i].clone()))
            .expect("generator names are unique");
        let mut coord_of = vec![0; n];
        for (pos, &g) in order.iter().enumerate() {
            coord_of[g] = pos;
        }
        LieAlgebra {
            name,
            generators,
            index,
            constants,
            table,
            coords,
            coord_of,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> LieAlgebra {
        let mut out = self.clone();
        out.name = name.to_string();
        out
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &str {
        &self.generators[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index_of(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    /// Dual coordinates, ordered for polynomial canonical forms.
    pub fn coordinates(&self) -> &Arc<VarSet> {
        &self.coords
    }

    /// Position of generator `g`'s dual coordinate in [`Self::coordinates`].
    pub fn coordinate_of(&self, g: usize) -> usize {
        self.coord_of[g]
    }

    /// `f^c_{ab}`, for any order of `a` and `b`.
    pub fn constant(&self, a: usize, b: usize, c: usize) -> Rational {
        self.table[a * self.dim() + b]
            .iter()
            .find(|(k, _)| *k == c)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms of `[X_a, X_b]`.
    pub fn bracket_terms(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.table[a * self.dim() + b]
    }

    /// Stored constants `(a, b, c) → f^c_{ab}` with `a < b`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize, usize), Rational> {
        &self.constants
    }

    /// Returns a copy with `[left, right]` replaced by `terms`.
    pub fn with_bracket(
        &self,
        left: &str,
        right: &str,
        terms: &[(&str, Rational)],
    ) -> Result<LieAlgebra, AlgebraError> {
        let (l, r) = (self.require(left)?, self.require(right)?);
        if l == r {
            return Err(AlgebraError::SelfBracket(left.to_string()));
        }
        let (a, b, neg) = if l < r { (l, r, false) } else { (r, l, true) };
        let mut constants = self.constants.clone();
        constants.retain(|&(x, y, _), _| (x, y) != (a, b));
        for (g, v) in terms {
            let c = self.require(g)?;
            let v = if neg { -v.clone() } else { v.clone() };
            *constants.entry((a, b, c)).or_insert_with(Rational::zero) += v;
        }
        LieAlgebra::from_constants(self.name.clone(), self.generators.clone(), constants)
    }

    fn bracket_dense(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (a, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (c, f) in &self.table[a * n + b] {
                    out[c.to_owned()] += x * y * f;
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub(crate) fn to_dense(&self, u: &AlgebraElement) -> Result<Vec<Rational>, AlgebraError> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (g, c) in u.terms() {
            let i = self
                .index_of(g)
                .ok_or_else(|| AlgebraError::ForeignGenerator(g.to_string()))?;
            out[i] += c;
        }
        Ok(out)
    }

    pub(crate) fn element_from(&self, v: Vec<Rational>) -> AlgebraElement {
        AlgebraElement::from_pairs(
            v.into_iter()
                .enumerate()
                .map(|(i, c)| (self.generators[i].clone(), c)),
        )
    }

    /// Bilinear bracket of two elements.
    pub fn bracket(
        &self,
        u: &AlgebraElement,
        v: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        let (u, v) = (self.to_dense(u)?, self.to_dense(v)?);
        Ok(self.element_from(self.bracket_dense(&u, &v)))
    }

    /// Bracket of two named generators.
    pub fn bracket_generators(&self, a: &str, b: &str) -> Result<AlgebraElement, AlgebraError> {
        let (a, b) = (self.require(a)?, self.require(b)?);
        Ok(AlgebraElement::from_pairs(
            self.bracket_terms(a, b)
                .iter()
                .map(|(c, v)| (self.generators[*c].clone(), v.clone())),
        ))
    }

    /// Every triple `a < b < c` whose Jacobi sum is nonzero.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        self.jacobi_check_with(Parallelism::default())
    }

    pub fn jacobi_check_with(&self, par: Parallelism) -> Vec<JacobiViolation> {
        let n = self.dim();
        let firsts: Vec<usize> = (0..n).collect();
        let per_first = par.map(firsts, |a| {
            let mut found = Vec::new();
            for b in a + 1..n {
                let ab = self.bracket_dense(&self.unit(a), &self.unit(b));
                for c in b + 1..n {
                    let (ua, ub, uc) = (self.unit(a), self.unit(b), self.unit(c));
                    let t1 = self.bracket_dense(&ab, &uc);
                    let t2 = self.bracket_dense(&self.bracket_dense(&ub, &uc), &ua);
                    let t3 = self.bracket_dense(&self.bracket_dense(&uc, &ua), &ub);
                    let sum: Vec<Rational> = (0..n).map(|i| &t1[i] + &t2[i] + &t3[i]).collect();
                    if sum.iter().any(|x| !x.is_zero()) {
                        found.push(JacobiViolation {
                            triple: [
                                self.generators[a].clone(),
                                self.generators[b].clone(),
                                self.generators[c].clone(),
                            ],
                            residual: self.element_from(sum),
                        });
                    }
                }
            }
            found
        });
        per_first.into_iter().flatten().collect()
    }

    /// Direct sum with a one-dimensional center spanned by `central`.
    pub fn trivial_central_extension(&self, central: &str) -> Result<LieAlgebra, AlgebraError> {
        if self.index.contains_key(central) {
            return Err(AlgebraError::DuplicateGenerator(central.to_string()));
        }
        let mut generators = self.generators.clone();
        generators.push(central.to_string());
        LieAlgebra::from_constants(
            format!("{}+{}", self.name, central),
            generators,
            self.constants.clone(),
        )
    }

    /// Re-expresses the algebra over the basis described by `bc`.
    pub fn change_basis(&self, bc: &BasisChange) -> Result<LieAlgebra, AlgebraError> {
        let n = self.dim();
        let m = bc.matrix();
        if m.rows() != n || m.cols() != n || bc.names().len() != n {
            return Err(AlgebraError::BasisChangeShape {
                rows: m.rows(),
                cols: m.cols(),
                names: bc.names().len(),
                dim: n,
            });
        }
        let inv = m.inverse().ok_or(AlgebraError::SingularBasisChange)?;
        let new_in_old = m.to_dense();
        let inv = inv.to_dense();
        let mut constants = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let old = self.bracket_dense(&new_in_old[i], &new_in_old[j]);
                // express Σ_c old_c X_c in the new basis: X_c = Σ_d inv[c][d] Y_d
                for d in 0..n {
                    let mut v = Rational::zero();
                    for (c, x) in old.iter().enumerate() {
                        if !x.is_zero() && !inv[c][d].is_zero() {
                            v += x * &inv[c][d];
                        }
                    }
                    if !v.is_zero() {
                        constants.insert((i, j, d), v);
                    }
                }
            }
        }
        LieAlgebra::from_constants(self.name.clone(), bc.names().to_vec(), constants)
    }

    /// Restriction to a bracket-closed subset of generators (kept in the
    /// algebra's generator order).
    pub fn subalgebra(&self, subset: &[&str]) -> Result<LieAlgebra, AlgebraError> {
        let mut keep: BTreeSet<usize> = BTreeSet::new();
        for g in subset {
            keep.insert(self.require(g)?);
        }
        let keep: Vec<usize> = keep.into_iter().collect();
        let new_index: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let mut constants = BTreeMap::new();
        for (x, &a) in keep.iter().enumerate() {
            for &b in &keep[x + 1..] {
                for (c, v) in self.bracket_terms(a, b) {
                    let Some(&nc) = new_index.get(c) else {
                        return Err(AlgebraError::NotClosed {
                            left: self.generators[a].clone(),
                            right: self.generators[b].clone(),
                            outside: self.generators[*c].clone(),
                        });
                    };
                    constants.insert((new_index[&a], new_index[&b], nc), v.clone());
                }
            }
        }
        let generators = keep.iter().map(|&g| self.generators[g].clone()).collect();
        LieAlgebra::from_constants(format!("{}|sub", self.name), generators, constants)
    }

    /// True iff every structure constant agrees after renaming this
    /// algebra's generators through `relabel` (names absent from the map
    /// keep their name). Not an isomorphism search.
    pub fn same_structure(
        &self,
        other: &LieAlgebra,
        relabel: &HashMap<String, String>,
    ) -> Result<bool, AlgebraError> {
        if let Some(k) = relabel.keys().find(|k| !self.index.contains_key(*k)) {
            return Err(AlgebraError::NotBijective(format!(
                "`{k}` is not a generator of {}",
                self.name
            )));
        }
        let mut image = Vec::with_capacity(self.dim());
        let mut hit = vec![false; other.dim()];
        for g in &self.generators {
            let target = relabel.get(g).unwrap_or(g);
            let Some(t) = other.index_of(target) else {
                return Err(AlgebraError::NotBijective(format!(
                    "`{g}` maps to `{target}`, which {} lacks",
                    other.name
                )));
            };
            if hit[t] {
                return Err(AlgebraError::NotBijective(format!(
                    "`{target}` is hit twice"
                )));
            }
            hit[t] = true;
            image.push(t);
        }
        if self.dim() != other.dim() {
            return Err(AlgebraError::NotBijective(format!(
                "dimensions {} and {} differ",
                self.dim(),
                other.dim()
            )));
        }
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let mut mine: Vec<(usize, Rational)> = self
                    .bracket_terms(a, b)
                    .iter()
                    .map(|(c, v)| (image[*c], v.clone()))
                    .collect();
                let mut theirs = other.bracket_terms(image[a], image[b]).to_vec();
                mine.sort();
                theirs.sort();
                if mine != theirs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Pairs `a < b` with a nonzero bracket, in canonical order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> =
            self.constants.keys().map(|&(a, b, _)| (a, b)).collect();
        pairs.dedup();
        pairs
    }

    /// Renders `Σ c·g` in generator order, e.g. `-1*hbar - 1*m`.
    pub fn format_terms(&self, terms: &[(usize, Rational)]) -> String {
        let mut sorted = terms.to_vec();
        sorted.sort_by_key(|(c, _)| *c);
        element::format_terms(
            sorted
                .iter()
                .map(|(c, v)| (self.generators[*c].as_str(), v)),
        )
    }
}

fn index_generators(generators: &[String]) -> Result<HashMap<String, usize>, AlgebraError> {
    let mut index = HashMap::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if index.insert(g.clone(), i).is_some() {
            return Err(AlgebraError::DuplicateGenerator(g.clone()));
        }
    }
    Ok(index)
}

/// Bracket table, one nonzero bracket per line.
impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} (dim {})", self.name, self.dim())?;
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        for (a, b) in self.nonzero_brackets() {
            writeln!(
                f,
                "[{}, {}] = {}",
                self.generators[a],
                self.generators[b],
                self.format_terms(self.bracket_terms(a, b))
            )?;
        }
        Ok(())
    }
}
