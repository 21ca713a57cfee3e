//! The Bruhat-Chevalley order on `R_n`.
//!
//! Two independent realizations live here:
//!
//! * [`deodhar_leq`]: compare the non-increasing rearrangements of every
//!   truncation `x(k)`, `y(k)` componentwise. [`deodhar_leq_gamma`] is the
//!   same test phrased through counts of larger entries.
//! * [`ppr_leq`]: reachability under generator moves (raise one entry, or
//!   swap an ascending pair of entries), searched breadth first.
//!
//! The two share no code beyond [`length`](crate::length::length), which the
//! closure uses only as a pruning bound.
//!
//! The covering predicates [`is_cover_type1`] and [`is_cover_type2`] decide
//! whether a single generator move raises the length by exactly one.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::length::length;
use crate::{Error, OneLine, Result};

/// An integer vector with no further constraints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&OneLine> for IntVector {
    fn from(x: &OneLine) -> Self {
        IntVector(x.entries().iter().map(|&v| v as i64).collect())
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

/// Same multiset, sorted non-increasingly.
pub fn nonincreasing(a: &IntVector) -> IntVector {
    let mut v = a.0.clone();
    v.sort_unstable_by(|p, q| q.cmp(p));
    IntVector(v)
}

/// First `k` entries, `1 <= k <= len`.
pub fn truncate(a: &IntVector, k: usize) -> Result<IntVector> {
    if k == 0 || k > a.len() {
        return Err(Error::IndexOutOfRange { index: k, len: a.len() });
    }
    Ok(IntVector(a.0[..k].to_vec()))
}

/// Containment order: sorted `a` is componentwise below sorted `b`.
pub fn containment_leq(a: &IntVector, b: &IntVector) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    let (sa, sb) = (nonincreasing(a), nonincreasing(b));
    Ok(sa.0.iter().zip(&sb.0).all(|(p, q)| p <= q))
}

/// Deodhar's criterion on plain integer vectors of equal length.
///
/// Both sorted prefixes are maintained by insertion as `k` grows, so the
/// whole test costs `O(n²)` with an early exit at the first failing `k`.
pub fn deodhar_leq_slices<T: Copy + Ord>(x: &[T], y: &[T]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch { left: x.len(), right: y.len() });
    }
    let mut sx: Vec<T> = Vec::with_capacity(x.len());
    let mut sy: Vec<T> = Vec::with_capacity(y.len());
    for (&a, &b) in x.iter().zip(y) {
        // non-increasing: insert before the first strictly smaller entry
        let px = sx.partition_point(|&v| v >= a);
        sx.insert(px, a);
        let py = sy.partition_point(|&v| v >= b);
        sy.insert(py, b);
        if sx.iter().zip(&sy).any(|(p, q)| p > q) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn deodhar_leq(x: &OneLine, y: &OneLine) -> Result<bool> {
    deodhar_leq_slices(x.entries(), y.entries())
}

/// `|Γ(x, a)|`: the number of entries strictly greater than `a`.
pub fn gamma_count(x: &IntVector, a: i64) -> usize {
    x.0.iter().filter(|&&v| v > a).count()
}

/// Deodhar's criterion through Γ-counts.
///
/// For each `k` and each `m <= k` the number of entries of `x(k)` that are
/// at least `a_m` must not exceed the same count for `y(k)`. The count of
/// entries `>= a_m` is `|Γ(·, a_m - 1)|`; the strict count `|Γ(·, a_m)|`
/// misses ties such as `x = (3)`, `y = (1)`.
pub fn deodhar_leq_gamma(x: &OneLine, y: &OneLine) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch { left: x.n(), right: y.n() });
    }
    let xv = IntVector::from(x);
    let yv = IntVector::from(y);
    for k in 1..=x.n() {
        let xk = truncate(&xv, k)?;
        let yk = truncate(&yv, k)?;
        for &am in &xk.0 {
            if gamma_count(&xk, am - 1) > gamma_count(&yk, am - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One generating relation of the order. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorMove {
    /// Replace the entry at `i` by the strictly larger `new_value`.
    Raise { i: usize, new_value: usize },
    /// Exchange the entries at `i < j`, where `a_i < a_j` before the move.
    Swap { i: usize, j: usize },
}

impl GeneratorMove {
    /// Applies the move if it is legal for `x`.
    pub fn apply(&self, x: &OneLine) -> Option<OneLine> {
        let n = x.n();
        let a = x.entries();
        match *self {
            GeneratorMove::Raise { i, new_value } => {
                if i == 0 || i > n || new_value > n || new_value <= a[i - 1] as usize {
                    return None;
                }
                if a.iter().any(|&v| v as usize == new_value) {
                    return None;
                }
                Some(x.with_entry(i - 1, new_value as u8))
            }
            GeneratorMove::Swap { i, j } => {
                if i == 0 || i >= j || j > n || a[i - 1] >= a[j - 1] {
                    return None;
                }
                Some(x.with_swap(i - 1, j - 1))
            }
        }
    }
}

/// All legal generator moves at `x`: every raise to any larger unused value,
/// and every ascending swap.
pub fn generator_moves(x: &OneLine) -> Vec<GeneratorMove> {
    let n = x.n();
    let a = x.entries();
    let mut used = alloc::vec![false; n + 1];
    for &v in a {
        used[v as usize] = true;
    }
    let mut moves = Vec::new();
    for i in 0..n {
        for v in a[i] as usize + 1..=n {
            if !used[v] {
                moves.push(GeneratorMove::Raise { i: i + 1, new_value: v });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if a[i] < a[j] {
                moves.push(GeneratorMove::Swap { i: i + 1, j: j + 1 });
            }
        }
    }
    moves
}

/// Every element one generator move above `x`.
pub fn ppr_raises(x: &OneLine) -> Vec<OneLine> {
    generator_moves(x)
        .iter()
        .map(|m| m.apply(x).expect("generated moves are legal"))
        .collect()
}

/// Reachability from `x` to `y` under generator moves.
///
/// Breadth first with a visited set; every move strictly increases the
/// length, so states at or above `length(y)` other than `y` are discarded.
pub fn ppr_leq(x: &OneLine, y: &OneLine) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch { left: x.n(), right: y.n() });
    }
    if x == y {
        return Ok(true);
    }
    let bound = length(y);
    if length(x) >= bound {
        return Ok(false);
    }
    let mut visited = BTreeSet::new();
    let mut queue = VecDeque::new();
    visited.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(z) = queue.pop_front() {
        for next in ppr_raises(&z) {
            if next == *y {
                return Ok(true);
            }
            if length(&next) >= bound || visited.contains(&next) {
                continue;
            }
            visited.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(false)
}

/// Everything reachable from `x` by generator moves, `x` included.
pub fn ppr_upset(x: &OneLine) -> BTreeSet<OneLine> {
    let mut visited = BTreeSet::new();
    let mut queue = VecDeque::new();
    visited.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(z) = queue.pop_front() {
        for next in ppr_raises(&z) {
            if visited.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    visited
}

/// The single position where `x` and `y` differ, if there is exactly one.
fn single_difference(x: &OneLine, y: &OneLine) -> Option<usize> {
    let mut diff = x.entries().iter().zip(y.entries()).enumerate().filter(|(_, (a, b))| a != b);
    let (pos, _) = diff.next()?;
    if diff.next().is_some() {
        return None;
    }
    Some(pos)
}

/// Cover test for a raise at a single position `i` (`b_i > a_i`).
///
/// For `a_i > 0` this holds iff `b_i = a_i + 1`, or the values
/// `a_i + 1, ..., a_i + s` all occur before position `i` and
/// `b_i = a_i + s + 1`. For `a_i = 0` the star weight jumps from `0` to
/// `b_i + n - i`, and the raise is a cover iff `1, ..., b_i - 1` all occur
/// before `i` and every entry after `i` exceeds `b_i`.
///
/// Returns `false` when `x`, `y` are not related by a single raise.
pub fn is_cover_type1(x: &OneLine, y: &OneLine) -> bool {
    if x.n() != y.n() {
        return false;
    }
    let Some(pos) = single_difference(x, y) else {
        return false;
    };
    let a = x.entries();
    let (ai, bi) = (a[pos] as usize, y.entries()[pos] as usize);
    if bi <= ai {
        return false;
    }
    let before = &a[..pos];
    let seen_before = |v: usize| before.iter().any(|&w| w as usize == v);
    if ai == 0 {
        (1..bi).all(seen_before) && a[pos + 1..].iter().all(|&w| w as usize > bi)
    } else {
        (ai + 1..bi).all(seen_before)
    }
}

/// Cover test for a swap of positions `i < j` with `a_i < a_j`.
///
/// Holds iff every entry strictly between the two positions is either
/// below `a_i` or above `a_j`. Returns `false` for any other difference
/// pattern.
pub fn is_cover_type2(x: &OneLine, y: &OneLine) -> bool {
    if x.n() != y.n() {
        return false;
    }
    let a = x.entries();
    let b = y.entries();
    let diff: Vec<usize> = (0..a.len()).filter(|&k| a[k] != b[k]).collect();
    let [i, j] = diff[..] else {
        return false;
    };
    if a[i] != b[j] || a[j] != b[i] || a[i] >= a[j] {
        return false;
    }
    a[i + 1..j].iter().all(|&s| s < a[i] || s > a[j])
}

/// The elements covering `x`, in lexicographic order.
pub fn covers_of(x: &OneLine) -> Vec<OneLine> {
    let mut out: Vec<OneLine> = ppr_raises(x)
        .into_iter()
        .filter(|y| is_cover_type1(x, y) || is_cover_type2(x, y))
        .collect();
    out.sort();
    out
}
