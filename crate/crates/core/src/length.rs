//! Length function and the combinatorial dimensions of `Bx`, `xB`, `Bx ∩ xB`.
//!
//! All indices exposed here are 1-based.

use alloc::vec::Vec;

use crate::{Error, OneLine, Result};

/// Coinversion pairs `(i, j)`, `i < j`, with `0 < a_i < a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinversionSet {
    pub pairs: Vec<(usize, usize)>,
    pub count: usize,
}

/// Every quantity entering the length of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthBreakdown {
    pub star_weights: Vec<usize>,
    pub star_sum: usize,
    pub coinv: usize,
    pub length: usize,
    pub dim_bx: usize,
    pub dim_xb: usize,
    pub dim_meet: usize,
}

pub fn coinversions(x: &OneLine) -> CoinversionSet {
    let a = x.entries();
    let mut pairs = Vec::new();
    for i in 0..a.len() {
        if a[i] == 0 {
            continue;
        }
        for j in i + 1..a.len() {
            if a[i] < a[j] {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    let count = pairs.len();
    CoinversionSet { pairs, count }
}

pub fn coinversion_count(x: &OneLine) -> usize {
    let a = x.entries();
    (0..a.len())
        .filter(|&i| a[i] != 0)
        .map(|i| a[i + 1..].iter().filter(|&&v| v > a[i]).count())
        .sum()
}

/// `a_i + n - i` for a nonzero entry, `0` otherwise.
pub fn star_weight(x: &OneLine, i: usize) -> Result<usize> {
    let a = x.get(i)?;
    Ok(if a == 0 { 0 } else { a + x.n() - i })
}

fn star_weights(x: &OneLine) -> Vec<usize> {
    let n = x.n();
    x.entries()
        .iter()
        .enumerate()
        .map(|(k, &a)| if a == 0 { 0 } else { a as usize + n - (k + 1) })
        .collect()
}

/// Dimension of the orbit `BxB`: sum of star weights minus coinversions.
pub fn length(x: &OneLine) -> usize {
    star_weights(x).iter().sum::<usize>() - coinversion_count(x)
}

/// Inversions `i < j`, `w_i > w_j`, of a permutation.
pub fn inversions(w: &OneLine) -> Result<usize> {
    if !w.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let a = w.entries();
    Ok((0..a.len())
        .map(|i| a[i + 1..].iter().filter(|&&v| v < a[i]).count())
        .sum())
}

/// `dim(Bx) = sum a_i`.
pub fn dim_bx(x: &OneLine) -> usize {
    x.entries().iter().map(|&a| a as usize).sum()
}

/// `dim(xB) = sum over nonzero a_i of (n - i + 1)`.
pub fn dim_xb(x: &OneLine) -> usize {
    let n = x.n();
    x.entries()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(k, _)| n - k)
        .sum()
}

/// `dim(Bx ∩ xB) = rank(x) + coinv(x)`.
pub fn dim_meet(x: &OneLine) -> usize {
    x.rank().0 + coinversion_count(x)
}

pub fn breakdown(x: &OneLine) -> LengthBreakdown {
    let star_weights = star_weights(x);
    let star_sum = star_weights.iter().sum::<usize>();
    let coinv = coinversion_count(x);
    LengthBreakdown {
        star_weights,
        star_sum,
        coinv,
        length: star_sum - coinv,
        dim_bx: dim_bx(x),
        dim_xb: dim_xb(x),
        dim_meet: dim_meet(x),
    }
}
