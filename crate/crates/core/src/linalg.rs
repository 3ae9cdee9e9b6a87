//! Exact rank of integer matrices over the rationals.
//!
//! The primary path is a sparse, fraction-free column reduction in `i64` with
//! checked arithmetic. If an intermediate entry would overflow, the matrix is
//! handed to a dense Bareiss elimination over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Sparse column: `(row, value)` pairs sorted by row, no zero values.
pub type SparseColumn = Vec<(usize, i64)>;

/// Rank over `Q` of the matrix with the given columns.
pub fn rank(columns: &[SparseColumn], nrows: usize) -> usize {
    sparse_rank(columns).unwrap_or_else(|| bareiss_rank(&to_dense(columns, nrows)))
}

/// Column reduction keyed on the lowest nonzero row. `None` on overflow.
pub fn sparse_rank(columns: &[SparseColumn]) -> Option<usize> {
    let mut owner: std::collections::HashMap<usize, SparseColumn> = Default::default();
    let mut rank = 0;
    for col in columns {
        let mut c = col.clone();
        while let Some(&(low, val)) = c.last() {
            match owner.get(&low) {
                Some(pivot) => {
                    let pval = pivot.last().expect("pivot column is nonzero").1;
                    c = combine(&c, pval, pivot, val)?;
                }
                None => {
                    owner.insert(low, c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `a * x - b * y`, divided by the gcd of its entries.
fn combine(x: &SparseColumn, a: i64, y: &SparseColumn, b: i64) -> Option<SparseColumn> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (row, v) = match (x.get(i), y.get(j)) {
            (Some(&(rx, vx)), Some(&(ry, _))) if rx < ry => {
                i += 1;
                (rx, vx.checked_mul(a)?)
            }
            (Some(&(rx, _)), Some(&(ry, vy))) if ry < rx => {
                j += 1;
                (ry, vy.checked_mul(b)?.checked_neg()?)
            }
            (Some(&(rx, vx)), Some(&(_, vy))) => {
                i += 1;
                j += 1;
                (rx, vx.checked_mul(a)?.checked_sub(vy.checked_mul(b)?)?)
            }
            (Some(&(rx, vx)), None) => {
                i += 1;
                (rx, vx.checked_mul(a)?)
            }
            (None, Some(&(ry, vy))) => {
                j += 1;
                (ry, vy.checked_mul(b)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((row, v));
        }
    }
    let g = out.iter().fold(0i64, |g, &(_, v)| g.gcd(&v));
    if g > 1 {
        for e in &mut out {
            e.1 /= g;
        }
    }
    Some(out)
}

pub fn to_dense(columns: &[SparseColumn], nrows: usize) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); columns.len()]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            m[r][c] = BigInt::from(v);
        }
    }
    m
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}
