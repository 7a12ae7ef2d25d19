//! Exact right nullspaces of large sparse systems.
//!
//! The system is first split into independent column blocks (connected
//! components of the row/column incidence graph). Each block is reduced by
//! fraction-free sparse elimination: rows stay integral and primitive, a row
//! is combined with a pivot as `p·row − r·pivot` and then divided by its
//! content. Blocks are independent, so they are the unit of parallel work.
//!
//! The returned basis is canonical: it is the reduced row echelon form of
//! the nullspace (as a row space), with each vector scaled to coprime
//! integers and a positive leading entry. It therefore does not depend on
//! the block split, on row order or on the execution policy.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RationalMatrix;
use super::rational::{content, denominator_lcm, Rational};
use crate::par::Parallelism;

/// Sparse integer row: `(column, value)` sorted by column, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Canonical basis of the right nullspace of `m`. Each vector has integer
/// entries; a full-rank matrix gives an empty list.
pub fn nullspace(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    nullspace_with(m, Parallelism::default())
}

pub fn nullspace_with(m: &RationalMatrix, par: Parallelism) -> Vec<Vec<Rational>> {
    let rows = m
        .sparse_rows()
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let l = denominator_lcm(r.iter().map(|(_, v)| v));
            r.into_iter()
                .map(|(c, v)| (c, (v * Rational::from_integer(l.clone())).to_integer()))
                .collect()
        })
        .collect();
    integer_nullspace(m.cols(), rows, par)
        .into_iter()
        .map(|v| v.into_iter().map(Rational::from_integer).collect())
        .collect()
}

/// Nullspace of an integer system given as sparse rows over `cols` columns.
pub fn integer_nullspace(cols: usize, rows: Vec<SparseRow>, par: Parallelism) -> Vec<Vec<BigInt>> {
    let blocks = split_blocks(cols, rows);
    let solved = par.map(blocks, solve_block);
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for (columns, vectors) in solved {
        for v in vectors {
            let mut dense = vec![BigInt::zero(); cols];
            for (local, x) in v.into_iter().enumerate() {
                dense[columns[local]] = x;
            }
            out.push(dense);
        }
    }
    out.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
    out
}

struct Block {
    columns: Vec<usize>,
    rows: Vec<SparseRow>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn split_blocks(cols: usize, rows: Vec<SparseRow>) -> Vec<Block> {
    let mut parent: Vec<usize> = (0..cols).collect();
    for row in &rows {
        if let Some(&(first, _)) = row.first() {
            for &(c, _) in &row[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut local_of = vec![0usize; cols];
    let mut block_of = vec![0usize; cols];
    for c in 0..cols {
        let root = find(&mut parent, c);
        let b = *by_root.entry(root).or_insert_with(|| {
            blocks.push(Block {
                columns: Vec::new(),
                rows: Vec::new(),
            });
            blocks.len() - 1
        });
        local_of[c] = blocks[b].columns.len();
        block_of[c] = b;
        blocks[b].columns.push(c);
    }
    for row in rows {
        let Some(&(first, _)) = row.first() else {
            continue;
        };
        let b = block_of[first];
        let local = row.into_iter().map(|(c, v)| (local_of[c], v)).collect();
        blocks[b].rows.push(local);
    }
    blocks
}

/// Divides out the content and makes the leading entry positive.
fn make_primitive(row: &mut SparseRow) {
    let g = content(row.iter().map(|(_, v)| v));
    let flip = row.first().is_some_and(|(_, v)| v.is_negative());
    if g.is_one() && !flip {
        return;
    }
    let g = if flip { -g } else { g };
    for (_, v) in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// `a·row − b·pivot` with `a, b` chosen to cancel `row` at `col`.
fn eliminate(row: &SparseRow, pivot: &SparseRow, col: usize) -> SparseRow {
    let pv = &pivot
        .iter()
        .find(|(c, _)| *c == col)
        .expect("pivot column")
        .1;
    let Some(rv) = row.iter().find(|(c, _)| *c == col).map(|(_, v)| v) else {
        return row.clone();
    };
    let g = pv.gcd(rv);
    let a = pv / &g;
    let b = rv / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = pivot.get(j).map_or(usize::MAX, |x| x.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, &a * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&b * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &a * &row[i - 1].1 - &b * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    make_primitive(&mut out);
    out
}

/// Returns the reduced echelon rows keyed by pivot column.
fn reduce(ncols: usize, rows: Vec<SparseRow>) -> BTreeMap<usize, SparseRow> {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        make_primitive(&mut row);
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p, lead),
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
        if pivots.len() == ncols {
            break;
        }
    }
    // back substitution, highest pivot first
    let keys: Vec<usize> = pivots.keys().copied().collect();
    for (k, &col) in keys.iter().enumerate().rev() {
        let p = pivots[&col].clone();
        for &other in &keys[..k] {
            let r = &pivots[&other];
            if r.iter().any(|(c, _)| *c == col) {
                let reduced = eliminate(r, &p, col);
                pivots.insert(other, reduced);
            }
        }
    }
    pivots
}

fn solve_block(block: Block) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let n = block.columns.len();
    let pivots = reduce(n, block.rows);
    if pivots.len() == n {
        return (block.columns, Vec::new());
    }
    // one solution per free column, as rationals over the block
    let mut sols: Vec<Vec<Rational>> = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains_key(c)) {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (&pc, row) in &pivots {
            let lead = &row[0].1;
            if let Some((_, x)) = row.iter().find(|(c, _)| *c == f) {
                v[pc] = -Rational::new(x.clone(), lead.clone());
            }
        }
        sols.push(v);
    }
    (block.columns, canonical_basis(sols))
}

/// Reduced row echelon form of a small dense rational system, each row
/// scaled to coprime integers with a positive leading entry.
pub(crate) fn canonical_basis(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x /= &pv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..ncols {
                let t = &f * &rows[rank][c];
                rows[r][c] -= t;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows.into_iter()
        .map(|row| {
            let l = denominator_lcm(&row);
            let ints: Vec<BigInt> = row
                .into_iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect();
            let g = content(&ints);
            ints.into_iter().map(|x| x / &g).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn ints(v: &[Rational]) -> Vec<i64> {
        v.iter()
            .map(|x| {
                assert!(x.is_integer());
                i64::try_from(x.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn rank_one_two_by_two() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let n = nullspace(&m);
        assert_eq!(n.len(), 1);
        // leading entry positive: (2, -1) rather than (-2, 1)
        assert_eq!(ints(&n[0]), vec![2, -1]);
    }

    #[test]
    fn identity_and_zero() {
        assert!(nullspace(&RationalMatrix::identity(3)).is_empty());
        let n = nullspace(&RationalMatrix::zeros(2, 2));
        assert_eq!(
            n.iter().map(|v| ints(v)).collect::<Vec<_>>(),
            vec![vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn blocks_do_not_change_the_answer() {
        // two decoupled 2x2 systems plus an untouched column
        let m = RationalMatrix::from_i64(&[&[1, 0, 1, 0, 0], &[0, 1, 0, -1, 0], &[2, 0, 2, 0, 0]]);
        let seq = nullspace_with(&m, Parallelism::Sequential);
        let par = nullspace_with(&m, Parallelism::Parallel);
        assert_eq!(seq, par);
        let got: Vec<Vec<i64>> = seq.iter().map(|v| ints(v)).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 0, -1, 0, 0],
                vec![0, 1, 0, 1, 0],
                vec![0, 0, 0, 0, 1]
            ]
        );
        for v in &seq {
            assert!(m.apply(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn reduced_echelon_output() {
        // spanned by (1,1,1,0) and (0,0,1,1); reduction clears column 2 of the first
        let m = RationalMatrix::from_i64(&[&[1, -1, 0, 0], &[1, 0, -1, 1]]);
        let n = nullspace(&m);
        let got: Vec<Vec<i64>> = n.iter().map(|v| ints(v)).collect();
        assert_eq!(got, vec![vec![1, 1, 0, -1], vec![0, 0, 1, 1]]);
        assert_eq!(m.rank() + n.len(), 4);
        assert_eq!(n[0][0], int(1));
    }
}
