//! Sparse rational matrices, fraction-free rank and small dense inverses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{denominator_lcm, Rational};
use super::MathError;

/// Sparse `rows × cols` matrix; an absent entry means zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    /// Builds from dense rows; every row must have `cols` entries.
    pub fn from_dense(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, MathError> {
        let mut m = RationalMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MathError::OutOfBounds {
                    row: r,
                    col: row.len(),
                });
            }
            for (c, v) in row.into_iter().enumerate() {
                m.set(r, c, v)?;
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Rational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        RationalMatrix::from_dense(cols, dense).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) -> Result<(), MathError> {
        if r >= self.rows || c >= self.cols {
            return Err(MathError::OutOfBounds { row: r, col: c });
        }
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
        Ok(())
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            out[r][c] = v.clone();
        }
        out
    }

    /// Rows as sorted sparse lists.
    pub(crate) fn sparse_rows(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            out[r].push((c, v.clone()));
        }
        out
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), x) in &self.entries {
            out[r] += x * &v[c];
        }
        out
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows);
        let rhs_rows = rhs.sparse_rows();
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            for (c, b) in &rhs_rows[k] {
                *acc.entry((r, *c)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        out.entries = acc;
        out
    }

    /// Rank over the rationals via fraction-free elimination.
    pub fn rank(&self) -> usize {
        generic_rank(self)
    }

    /// Gauss–Jordan inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv = RationalMatrix::identity(n).to_dense();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
        Some(RationalMatrix::from_dense(n, inv).expect("square"))
    }
}

/// Scales each row by the lcm of its denominators, giving an integer matrix
/// with the same row space.
pub(crate) fn integer_rows(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    m.to_dense()
        .into_iter()
        .map(|row| {
            let l = denominator_lcm(&row);
            row.into_iter()
                .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Rank over the rationals by one-step Bareiss elimination on the integer
/// scaling of `m`. Every division below is exact.
pub fn generic_rank(m: &RationalMatrix) -> usize {
    let mut a = integer_rows(m);
    let rows = m.rows();
    let cols = m.cols();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
