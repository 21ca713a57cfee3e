//! Parallel construction of the Hasse diagram.

use rayon::prelude::*;
use rookbruhat_core::element::enumerate;
use rookbruhat_core::order::covers_of;
use rookbruhat_core::poset::MAX_HASSE_N;
use rookbruhat_core::{HasseDiagram, OneLine};

use crate::Result;

/// Same diagram as [`rookbruhat_core::poset::build_hasse`], with the per-node
/// cover computation spread over the rayon pool. The merge is by node
/// index, so the output does not depend on scheduling.
pub fn build_hasse_par(n: usize) -> Result<HasseDiagram> {
    if n == 0 || n > MAX_HASSE_N {
        return Err(rookbruhat_core::Error::UnsupportedSize { n, max: MAX_HASSE_N }.into());
    }
    let elements: Vec<OneLine> = enumerate(n)?.collect();
    let covers: Vec<Vec<OneLine>> = elements.par_iter().map(covers_of).collect();
    Ok(HasseDiagram::from_covers(n, elements, covers))
}
