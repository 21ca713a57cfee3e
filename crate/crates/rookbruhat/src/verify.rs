//! Verification campaign.
//!
//! For a given `n` this compares
//!
//! * the truncation criterion against generator-move reachability on
//!   ordered pairs (all of them, or a seeded uniform sample),
//! * lemma-based covers against covers found by definition (no element
//!   strictly in between),
//! * the closed-form length against the exact-rank orbit dimension, for
//!   every element.
//!
//! Work is split across the rayon pool and merged in input order, so the
//! report is identical between runs apart from `elapsed`.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rookbruhat_core::element::enumerate;
use rookbruhat_core::length::length;
use rookbruhat_core::oracle::oracle_length;
use rookbruhat_core::order::{covers_of, deodhar_leq, ppr_leq};
use rookbruhat_core::OneLine;
use serde::Serialize;

use crate::{Error, Result};

pub const MAX_EXHAUSTIVE_N: usize = 4;
pub const MAX_SAMPLED_N: usize = 6;
/// Elements whose covers are checked by definition in sampled mode.
pub const SAMPLED_COVER_CHECKS: usize = 64;
pub const DEFAULT_SAMPLES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

impl Mode {
    /// Exhaustive up to the supported bound, sampled with defaults above it.
    pub fn default_for(n: usize, seed: u64) -> Self {
        if n <= MAX_EXHAUSTIVE_N {
            Mode::Exhaustive
        } else {
            Mode::Sampled { count: DEFAULT_SAMPLES, seed }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderMismatch {
    pub x: String,
    pub y: String,
    pub deodhar: bool,
    pub ppr: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMismatch {
    pub x: String,
    pub lemma_covers: Vec<String>,
    pub brute_covers: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub x: String,
    pub formula: usize,
    pub oracle: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub mode: String,
    pub seed: Option<u64>,
    pub pairs_checked: usize,
    pub covers_checked: usize,
    pub elements_checked: usize,
    pub mismatches: Vec<OrderMismatch>,
    pub cover_mismatches: Vec<CoverMismatch>,
    pub oracle_mismatches: Vec<OracleMismatch>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.cover_mismatches.is_empty() && self.oracle_mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        match self.seed {
            Some(seed) => writeln!(f, "mode: {} (seed {seed})", self.mode)?,
            None => writeln!(f, "mode: {}", self.mode)?,
        }
        writeln!(f, "pairs_checked: {}", self.pairs_checked)?;
        writeln!(f, "order_mismatches: {}", self.mismatches.len())?;
        for m in &self.mismatches {
            writeln!(f, "  ({}) vs ({}): deodhar={} ppr={}", m.x, m.y, m.deodhar, m.ppr)?;
        }
        writeln!(f, "covers_checked: {}", self.covers_checked)?;
        writeln!(f, "cover_mismatches: {}", self.cover_mismatches.len())?;
        for m in &self.cover_mismatches {
            writeln!(f, "  ({}): lemma={:?} brute={:?}", m.x, m.lemma_covers, m.brute_covers)?;
        }
        writeln!(f, "elements_checked: {}", self.elements_checked)?;
        writeln!(f, "oracle_mismatches: {}", self.oracle_mismatches.len())?;
        for m in &self.oracle_mismatches {
            writeln!(f, "  ({}): formula={} oracle={}", m.x, m.formula, m.oracle)?;
        }
        writeln!(f, "elapsed: {:.3}s", self.elapsed.as_secs_f64())?;
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Covers of `x` found by definition over the listed elements.
pub fn brute_force_covers(x: &OneLine, elements: &[OneLine]) -> Vec<OneLine> {
    let above: Vec<&OneLine> = elements
        .iter()
        .filter(|y| *y != x && deodhar_leq(x, y).unwrap_or(false))
        .collect();
    let mut out: Vec<OneLine> = above
        .iter()
        .filter(|y| !above.iter().any(|z| z != *y && deodhar_leq(z, y).unwrap_or(false)))
        .map(|y| (*y).clone())
        .collect();
    out.sort();
    out
}

fn check_pair(x: &OneLine, y: &OneLine) -> Option<OrderMismatch> {
    let deodhar = deodhar_leq(x, y).expect("same size");
    let ppr = ppr_leq(x, y).expect("same size");
    (deodhar != ppr).then(|| OrderMismatch { x: x.to_string(), y: y.to_string(), deodhar, ppr })
}

fn check_covers(x: &OneLine, elements: &[OneLine]) -> Option<CoverMismatch> {
    let lemma = covers_of(x);
    let brute = brute_force_covers(x, elements);
    (lemma != brute).then(|| CoverMismatch {
        x: x.to_string(),
        lemma_covers: lemma.iter().map(ToString::to_string).collect(),
        brute_covers: brute.iter().map(ToString::to_string).collect(),
    })
}

fn check_oracle(x: &OneLine) -> Option<OracleMismatch> {
    let formula = length(x);
    let oracle = oracle_length(x);
    (formula != oracle).then(|| OracleMismatch { x: x.to_string(), formula, oracle })
}

pub fn verify(n: usize, mode: Mode) -> Result<VerificationReport> {
    let start = Instant::now();
    let (mode_name, max) = match mode {
        Mode::Exhaustive => ("exhaustive", MAX_EXHAUSTIVE_N),
        Mode::Sampled { .. } => ("sampled", MAX_SAMPLED_N),
    };
    if n == 0 || n > max {
        return Err(Error::UnsupportedMode { mode: mode_name, n, max });
    }
    let elements: Vec<OneLine> = enumerate(n)?.collect();

    let (pair_indices, cover_indices, seed): (Vec<(usize, usize)>, Vec<usize>, Option<u64>) = match mode {
        Mode::Exhaustive => {
            let m = elements.len();
            ((0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect(), (0..m).collect(), None)
        }
        Mode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = elements.len();
            let pairs = (0..count).map(|_| (rng.gen_range(0..m), rng.gen_range(0..m))).collect();
            let covers = (0..SAMPLED_COVER_CHECKS.min(count)).map(|_| rng.gen_range(0..m)).collect();
            (pairs, covers, Some(seed))
        }
    };

    let mismatches: Vec<OrderMismatch> = pair_indices
        .par_iter()
        .filter_map(|&(i, j)| check_pair(&elements[i], &elements[j]))
        .collect();
    let cover_mismatches: Vec<CoverMismatch> = cover_indices
        .par_iter()
        .filter_map(|&i| check_covers(&elements[i], &elements))
        .collect();
    let oracle_mismatches: Vec<OracleMismatch> = elements.par_iter().filter_map(check_oracle).collect();

    Ok(VerificationReport {
        n,
        mode: mode_name.to_string(),
        seed,
        pairs_checked: pair_indices.len(),
        covers_checked: cover_indices.len(),
        elements_checked: elements.len(),
        mismatches,
        cover_mismatches,
        oracle_mismatches,
        elapsed: start.elapsed(),
    })
}
