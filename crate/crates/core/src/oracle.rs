//! Orbit dimensions by exact linear algebra.
//!
//! The spans `T_n x` and `x T_n` (with `T_n` the upper triangular matrices)
//! are generated from the products `E_ij x` and `x E_ij`, `i <= j`, written
//! out as flattened `n²` vectors and reduced with fraction-free integer
//! elimination. Nothing here uses the closed-form dimension formulas.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, OneLine, Result};

/// A list of spanning vectors together with the dimension of their span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpan {
    pub ambient_dim: usize,
    pub basis_rows: Vec<Vec<i64>>,
    pub rank: usize,
}

impl MatrixSpan {
    pub fn new(ambient_dim: usize, basis_rows: Vec<Vec<i64>>) -> Self {
        let rank = exact_rank(&basis_rows, ambient_dim);
        Self { ambient_dim, basis_rows, rank }
    }
}

/// Row-major `n x n` matrix as a dense integer vector.
fn dense(x: &OneLine) -> Vec<i64> {
    let n = x.n();
    let m = x.to_matrix();
    let mut v = vec![0i64; n * n];
    for (r, c) in m.ones() {
        v[(r - 1) * n + (c - 1)] = 1;
    }
    v
}

/// Plain matrix product of two row-major `n x n` integer matrices.
fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = a[r * n + k];
            if ark == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += ark * b[k * n + c];
            }
        }
    }
    out
}

fn unit(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut e = vec![0i64; n * n];
    e[i * n + j] = 1;
    e
}

fn triangular_products(x: &OneLine, left: bool) -> MatrixSpan {
    let n = x.n();
    let xm = dense(x);
    let mut rows = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let e = unit(n, i, j);
            rows.push(if left { mat_mul(&e, &xm, n) } else { mat_mul(&xm, &e, n) });
        }
    }
    MatrixSpan::new(n * n, rows)
}

/// Span of `{E_ij x : i <= j}`.
pub fn left_span(x: &OneLine) -> MatrixSpan {
    triangular_products(x, true)
}

/// Span of `{x E_ij : i <= j}`.
pub fn right_span(x: &OneLine) -> MatrixSpan {
    triangular_products(x, false)
}

/// `dim(L ∩ R) = rank L + rank R - rank(L + R)`.
pub fn meet_dim(left: &MatrixSpan, right: &MatrixSpan) -> Result<usize> {
    if left.ambient_dim != right.ambient_dim {
        return Err(Error::SizeMismatch { left: left.ambient_dim, right: right.ambient_dim });
    }
    let mut union = left.basis_rows.clone();
    union.extend(right.basis_rows.iter().cloned());
    let joint = exact_rank(&union, left.ambient_dim);
    Ok(left.rank + right.rank - joint)
}

/// Orbit dimension `dim(Bx) + dim(xB) - dim(Bx ∩ xB)` from exact ranks.
pub fn oracle_length(x: &OneLine) -> usize {
    let l = left_span(x);
    let r = right_span(x);
    let meet = meet_dim(&l, &r).expect("spans of one element share the ambient space");
    l.rank + r.rank - meet
}

/// Rank of a set of integer row vectors by fraction-free (Bareiss) elimination.
pub fn exact_rank(rows: &[Vec<i64>], width: usize) -> usize {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    for row in &m {
        assert_eq!(row.len(), width, "row length differs from ambient dimension");
    }
    let mut rank = 0;
    let mut prev_pivot = 1i64;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in rank + 1..m.len() {
            let factor = m[r][col];
            for c in col..width {
                // exact division: Bareiss invariant
                m[r][c] = (pivot * m[r][c] - factor * m[rank][c]) / prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
