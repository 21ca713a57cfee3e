//! Rook monoid elements in one-line and matrix form.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An element of `R_n` in one-line notation.
///
/// `entries[j - 1]` is the row index of the nonzero cell of column `j`, or
/// `0` if column `j` is empty. Nonzero values are distinct and at most `n`.
/// The derived ordering is lexicographic on the entry vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneLine {
    entries: Vec<u8>,
}

/// Number of nonzero entries of an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(pub usize);

impl OneLine {
    /// Validates `entries` as an element of `R_n` with `n = entries.len()`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if n > u8::MAX as usize {
            return Err(Error::UnsupportedSize { n, max: u8::MAX as usize });
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if v != 0 {
                if seen[v] {
                    return Err(Error::DuplicateValue(v));
                }
                seen[v] = true;
            }
        }
        Ok(Self { entries })
    }

    /// Builds an element from a slice of arbitrary integers, validating range.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        let n = values.len();
        let mut entries = Vec::with_capacity(n);
        for &v in values {
            if v > n || v > u8::MAX as usize {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            entries.push(v as u8);
        }
        Self::new(entries)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_values(&(1..=n).collect::<Vec<_>>())
    }

    /// The longest element `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Result<Self> {
        Self::from_values(&(1..=n).rev().collect::<Vec<_>>())
    }

    /// Matrix size `n`.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Entry at 1-based column `j`.
    pub fn get(&self, j: usize) -> Result<usize> {
        if j == 0 || j > self.n() {
            return Err(Error::IndexOutOfRange { index: j, len: self.n() });
        }
        Ok(self.entries[j - 1] as usize)
    }

    pub fn rank(&self) -> Rank {
        Rank(self.entries.iter().filter(|&&v| v != 0).count())
    }

    pub fn is_permutation(&self) -> bool {
        self.rank().0 == self.n()
    }

    pub fn to_matrix(&self) -> RookMatrix {
        let n = self.n();
        let mut cells = vec![false; n * n];
        for (col, &row) in self.entries.iter().enumerate() {
            if row != 0 {
                cells[(row as usize - 1) * n + col] = true;
            }
        }
        RookMatrix { n, cells }
    }

    pub fn from_matrix(m: &RookMatrix) -> Self {
        let n = m.n;
        let mut entries = vec![0u8; n];
        for (col, entry) in entries.iter_mut().enumerate() {
            if let Some(row) = (0..n).find(|&r| m.cells[r * n + col]) {
                *entry = (row + 1) as u8;
            }
        }
        Self { entries }
    }

    /// Matrix product `self * other`.
    ///
    /// Column `j` of the product is `self` applied to column `j` of `other`,
    /// so in one-line form the product entry is `a[b_j]` (or `0`).
    pub fn multiply(&self, other: &OneLine) -> Result<OneLine> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        let entries = other
            .entries
            .iter()
            .map(|&b| if b == 0 { 0 } else { self.entries[b as usize - 1] })
            .collect();
        Ok(OneLine { entries })
    }

    /// Same element with one entry replaced; the caller guarantees validity.
    pub(crate) fn with_entry(&self, pos: usize, value: u8) -> OneLine {
        let mut entries = self.entries.clone();
        entries[pos] = value;
        OneLine { entries }
    }

    pub(crate) fn with_swap(&self, i: usize, j: usize) -> OneLine {
        let mut entries = self.entries.clone();
        entries.swap(i, j);
        OneLine { entries }
    }

    /// Canonical comma-separated text form.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for OneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses `a1,a2,...,an`.
///
/// Whitespace is ignored and one pair of surrounding parentheses is
/// allowed. A single run of digits without commas is read one digit per
/// entry, which is the compact `(3040)` style; it is only accepted when the
/// resulting `n` is at most 9.
pub fn parse_one_line(text: &str) -> Result<OneLine> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut body = cleaned.as_str();
    if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        body = inner;
    }
    if body.is_empty() {
        return Err(Error::Empty);
    }
    let values: Vec<usize> = if !body.contains(',') && body.len() > 1 {
        if body.len() > 9 {
            return Err(Error::Malformed(body.into()));
        }
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Malformed(c.to_string()))
            })
            .collect::<Result<_>>()?
    } else {
        body.split(',')
            .map(|tok| {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Malformed(tok.into()));
                }
                tok.parse::<usize>().map_err(|_| Error::Malformed(tok.into()))
            })
            .collect::<Result<_>>()?
    };
    OneLine::from_values(&values)
}

impl FromStr for OneLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_one_line(s)
    }
}

/// An `n x n` 0-1 matrix with at most one 1 in each row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RookMatrix {
    n: usize,
    /// Row-major.
    cells: Vec<bool>,
}

impl RookMatrix {
    pub fn new(n: usize, cells: Vec<bool>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if cells.len() != n * n {
            return Err(Error::InvalidMatrix);
        }
        for r in 0..n {
            if (0..n).filter(|&c| cells[r * n + c]).count() > 1 {
                return Err(Error::InvalidMatrix);
            }
        }
        for c in 0..n {
            if (0..n).filter(|&r| cells[r * n + c]).count() > 1 {
                return Err(Error::InvalidMatrix);
            }
        }
        Ok(Self { n, cells })
    }

    /// Matrix with ones at the given 1-based `(row, column)` positions.
    pub fn from_ones(n: usize, ones: &[(usize, usize)]) -> Result<Self> {
        let mut cells = vec![false; n * n];
        for &(r, c) in ones {
            if r == 0 || c == 0 || r > n || c > n {
                return Err(Error::InvalidMatrix);
            }
            cells[(r - 1) * n + (c - 1)] = true;
        }
        Self::new(n, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cell at 1-based `(row, column)`.
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[(row - 1) * self.n + (col - 1)]
    }

    /// 1-based positions of the ones, in row-major order.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        (0..self.n * self.n)
            .filter(|&k| self.cells[k])
            .map(|k| (k / self.n + 1, k % self.n + 1))
            .collect()
    }
}

/// `|R_n| = sum_k C(n,k)^2 k!`.
pub fn rook_monoid_size(n: usize) -> u128 {
    let mut total: u128 = 0;
    // C(n,k)^2 k! = C(n,k) * n!/(n-k)!
    let mut binom: u128 = 1;
    let mut falling: u128 = 1;
    for k in 0..=n as u128 {
        total += binom * falling;
        let n = n as u128;
        if k < n {
            binom = binom * (n - k) / (k + 1);
            falling *= n - k;
        }
    }
    total
}

/// Every element of `R_n` in lexicographic order.
pub fn enumerate(n: usize) -> Result<Elements> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n > u8::MAX as usize {
        return Err(Error::UnsupportedSize { n, max: u8::MAX as usize });
    }
    Ok(Elements { current: Some(vec![0; n]) })
}

/// Streaming lexicographic enumeration of `R_n`.
///
/// Partition work with `skip`/`step_by`, or restart after a known element
/// with [`Elements::after`].
#[derive(Clone, Debug)]
pub struct Elements {
    current: Option<Vec<u8>>,
}

impl Elements {
    /// Continues the enumeration strictly after `x`.
    pub fn after(x: &OneLine) -> Self {
        let mut v = x.entries.clone();
        let current = if advance(&mut v) { Some(v) } else { None };
        Self { current }
    }
}

/// Moves `v` to its lexicographic successor among valid elements.
fn advance(v: &mut [u8]) -> bool {
    let n = v.len();
    let mut used = vec![false; n + 1];
    for i in (0..n).rev() {
        used.iter_mut().for_each(|u| *u = false);
        for &w in &v[..i] {
            used[w as usize] = true;
        }
        if let Some(next) = (v[i] as usize + 1..=n).find(|&w| !used[w]) {
            v[i] = next as u8;
            v[i + 1..].iter_mut().for_each(|e| *e = 0);
            return true;
        }
    }
    false
}

impl Iterator for Elements {
    type Item = OneLine;

    fn next(&mut self) -> Option<OneLine> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if advance(&mut succ) {
            self.current = Some(succ);
        }
        Some(OneLine { entries: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ol(s: &str) -> OneLine {
        s.parse().unwrap()
    }

    #[test]
    fn parse_canonical_and_compact() {
        assert_eq!(ol("3,0,4,0").entries(), &[3, 0, 4, 0]);
        assert_eq!(ol("(3040)"), ol("3,0,4,0"));
        assert_eq!(ol(" ( 3, 0,4 ,0 ) "), ol("3,0,4,0"));
        assert_eq!(ol("0,0,0"), OneLine::zero(3).unwrap());
        assert_eq!(ol("1").n(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_one_line("2,2,1"), Err(Error::DuplicateValue(2)));
        assert_eq!(parse_one_line("4,0,1"), Err(Error::ValueOutOfRange { value: 4, n: 3 }));
        assert!(matches!(parse_one_line("1,x,0"), Err(Error::Malformed(_))));
        assert!(matches!(parse_one_line("1,,0"), Err(Error::Malformed(_))));
        assert!(matches!(parse_one_line("-1,0"), Err(Error::Malformed(_))));
        assert_eq!(parse_one_line(""), Err(Error::Empty));
        assert_eq!(parse_one_line("()"), Err(Error::Empty));
        // compact form is limited to n <= 9
        assert!(matches!(parse_one_line("1234567890"), Err(Error::Malformed(_))));
        assert!(parse_one_line("1,2,3,4,5,6,7,8,9,10").is_ok());
    }

    #[test]
    fn matrix_conversions() {
        let m = RookMatrix::from_ones(4, &[(3, 1), (4, 3)]).unwrap();
        assert_eq!(OneLine::from_matrix(&m), ol("3,0,4,0"));
        assert_eq!(ol("3,0,4,0").to_matrix().ones(), vec![(3, 1), (4, 3)]);

        let id = RookMatrix::from_ones(3, &[(1, 1), (2, 2), (3, 3)]).unwrap();
        assert_eq!(OneLine::from_matrix(&id), ol("1,2,3"));

        let m = RookMatrix::from_ones(4, &[(2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(OneLine::from_matrix(&m), ol("4,0,2,3"));

        assert!(OneLine::zero(4).unwrap().to_matrix().ones().is_empty());

        let p = ol("3,1,4,2").to_matrix();
        assert_eq!(p.ones(), vec![(1, 2), (2, 4), (3, 1), (4, 3)]);
    }

    #[test]
    fn invalid_matrices() {
        assert_eq!(RookMatrix::from_ones(2, &[(1, 1), (1, 2)]), Err(Error::InvalidMatrix));
        assert_eq!(RookMatrix::from_ones(2, &[(1, 1), (2, 1)]), Err(Error::InvalidMatrix));
        assert_eq!(RookMatrix::new(2, vec![false; 3]), Err(Error::InvalidMatrix));
    }

    #[test]
    fn multiply_examples() {
        let x = ol("2,1");
        assert_eq!(x.multiply(&x).unwrap(), ol("1,2"));
        let id = OneLine::identity(3).unwrap();
        let zero = OneLine::zero(3).unwrap();
        for x in enumerate(3).unwrap() {
            assert_eq!(id.multiply(&x).unwrap(), x);
            assert_eq!(x.multiply(&id).unwrap(), x);
            assert_eq!(zero.multiply(&x).unwrap(), zero);
            assert_eq!(x.multiply(&zero).unwrap(), zero);
        }
        assert_eq!(
            ol("1,2").multiply(&ol("1,2,3")),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    /// Boolean matrix product, written independently of `multiply`.
    fn matrix_product(a: &RookMatrix, b: &RookMatrix) -> Vec<bool> {
        let n = a.n();
        let mut out = vec![false; n * n];
        for r in 1..=n {
            for c in 1..=n {
                out[(r - 1) * n + (c - 1)] = (1..=n).any(|k| a.get(r, k) && b.get(k, c));
            }
        }
        out
    }

    #[test]
    fn multiply_matches_matrix_product_and_stays_valid() {
        for n in 1..=3 {
            let all: Vec<_> = enumerate(n).unwrap().collect();
            for x in &all {
                for y in &all {
                    let p = x.multiply(y).unwrap();
                    let expected = matrix_product(&x.to_matrix(), &y.to_matrix());
                    let m = RookMatrix::new(n, expected).expect("product is a rook matrix");
                    assert_eq!(p.to_matrix(), m);
                    assert!(OneLine::new(p.entries().to_vec()).is_ok());
                }
            }
        }
    }

    #[test]
    fn multiply_is_associative_on_r2() {
        let all: Vec<_> = enumerate(2).unwrap().collect();
        let mut triples = 0;
        for x in &all {
            for y in &all {
                for z in &all {
                    let l = x.multiply(y).unwrap().multiply(z).unwrap();
                    let r = x.multiply(&y.multiply(z).unwrap()).unwrap();
                    assert_eq!(l, r);
                    triples += 1;
                }
            }
        }
        assert_eq!(triples, 343);
    }

    #[test]
    fn rank_and_permutation() {
        assert_eq!(ol("4,0,2,3").rank(), Rank(3));
        assert_eq!(OneLine::zero(5).unwrap().rank(), Rank(0));
        assert_eq!(ol("3,1,4,2").rank(), Rank(4));
        assert!(ol("3,1,4,2").is_permutation());
        assert!(!ol("3,0,4,0").is_permutation());
        assert!(!ol("0").is_permutation());
    }

    #[test]
    fn enumeration_small() {
        let r1: Vec<_> = enumerate(1).unwrap().collect();
        assert_eq!(r1, vec![ol("0"), ol("1")]);
        assert_eq!(enumerate(0).err(), Some(Error::ZeroSize));
    }

    #[test]
    fn enumeration_is_sorted_distinct_and_complete() {
        for n in 1..=5 {
            let all: Vec<_> = enumerate(n).unwrap().collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(all.len() as u128, rook_monoid_size(n));
            // brute force over all vectors in [0, n]^n
            let mut brute = BTreeSet::new();
            let total = (n + 1).pow(n as u32);
            for mut code in 0..total {
                let mut v = vec![0usize; n];
                for slot in v.iter_mut().rev() {
                    *slot = code % (n + 1);
                    code /= n + 1;
                }
                if let Ok(x) = OneLine::from_values(&v) {
                    brute.insert(x);
                }
            }
            assert_eq!(brute.into_iter().collect::<Vec<_>>(), all);
        }
    }

    #[test]
    fn enumeration_restarts_after_element() {
        let all: Vec<_> = enumerate(3).unwrap().collect();
        let tail: Vec<_> = Elements::after(&all[10]).collect();
        assert_eq!(tail, all[11..].to_vec());
        assert_eq!(Elements::after(all.last().unwrap()).count(), 0);
    }

    #[test]
    fn round_trip_matrix_exhaustive() {
        for n in 1..=5 {
            for x in enumerate(n).unwrap() {
                assert_eq!(OneLine::from_matrix(&x.to_matrix()), x);
                assert_eq!(ol(&x.to_text()), x);
            }
        }
    }

    #[test]
    fn closed_form_sizes() {
        let sizes: Vec<_> = (1..=6).map(rook_monoid_size).collect();
        assert_eq!(sizes, vec![2, 7, 34, 209, 1546, 13327]);
    }
}
