//! The graded poset `(R_n, <=)` as a Hasse diagram.

use alloc::vec;
use alloc::vec::Vec;

use crate::element::enumerate;
use crate::length::length;
use crate::order::{covers_of, deodhar_leq};
use crate::{Error, OneLine, Result};

/// Largest `n` for which the full diagram is built.
pub const MAX_HASSE_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: usize,
    pub element: OneLine,
    pub length: usize,
}

/// Nodes in lexicographic element order with dense ids, and cover edges
/// `(lower, upper)` sorted by `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub n: usize,
    pub nodes: Vec<Node>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Assembles a diagram from sorted elements and per-node cover lists.
    ///
    /// `covers[k]` lists the elements covering `elements[k]`; each must be
    /// present in `elements`.
    pub fn from_covers(n: usize, elements: Vec<OneLine>, covers: Vec<Vec<OneLine>>) -> Self {
        let nodes: Vec<Node> = elements
            .into_iter()
            .enumerate()
            .map(|(id, element)| {
                let length = length(&element);
                Node { id, element, length }
            })
            .collect();
        let mut edges = Vec::new();
        for (lo, ups) in covers.iter().enumerate() {
            for up in ups {
                let hi = nodes
                    .binary_search_by(|node| node.element.cmp(up))
                    .expect("cover target is an element of the diagram");
                edges.push((lo, hi));
            }
        }
        edges.sort_unstable();
        Self { n, nodes, edges }
    }

    pub fn id_of(&self, x: &OneLine) -> Option<usize> {
        self.nodes.binary_search_by(|node| node.element.cmp(x)).ok()
    }

    /// Ids of the nodes covering `id`.
    pub fn upper_covers(&self, id: usize) -> Vec<usize> {
        let start = self.edges.partition_point(|&(lo, _)| lo < id);
        self.edges[start..].iter().take_while(|&&(lo, _)| lo == id).map(|&(_, hi)| hi).collect()
    }

    /// Ids reachable from `id` along edges, `id` included, as a membership table.
    pub fn reachable_from(&self, id: usize) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(lo, hi) in &self.edges {
            adj[lo].push(hi);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![id];
        seen[id] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Number of edges on a longest directed path.
    pub fn longest_chain(&self) -> usize {
        // edges go up in length, so processing nodes by length is topological
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by_key(|&k| self.nodes[k].length);
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(lo, hi) in &self.edges {
            adj[lo].push(hi);
        }
        let mut best = vec![0usize; self.nodes.len()];
        for &v in &order {
            for &w in &adj[v] {
                best[w] = best[w].max(best[v] + 1);
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}

/// Hasse diagram of `R_n`, edges from the covering predicates.
pub fn build_hasse(n: usize) -> Result<HasseDiagram> {
    if n == 0 || n > MAX_HASSE_N {
        return Err(Error::UnsupportedSize { n, max: MAX_HASSE_N });
    }
    let elements: Vec<OneLine> = enumerate(n)?.collect();
    let covers = elements.iter().map(covers_of).collect();
    Ok(HasseDiagram::from_covers(n, elements, covers))
}

/// Number of nodes of each length `0..=n²`.
pub fn rank_sizes(h: &HasseDiagram) -> Vec<usize> {
    let mut sizes = vec![0usize; h.n * h.n + 1];
    for node in &h.nodes {
        sizes[node.length] += 1;
    }
    sizes
}

/// Induced sub-diagram on `{z : x <= z <= y}`, ids renumbered densely.
pub fn interval(h: &HasseDiagram, x: &OneLine, y: &OneLine) -> Result<HasseDiagram> {
    if x.n() != h.n || y.n() != h.n {
        return Err(Error::SizeMismatch { left: h.n, right: x.n().max(y.n()) });
    }
    if !deodhar_leq(x, y)? {
        return Err(Error::Incomparable);
    }
    let mut remap = vec![None; h.nodes.len()];
    let mut nodes = Vec::new();
    for node in &h.nodes {
        if deodhar_leq(x, &node.element)? && deodhar_leq(&node.element, y)? {
            remap[node.id] = Some(nodes.len());
            nodes.push(Node { id: nodes.len(), ..node.clone() });
        }
    }
    let edges = h
        .edges
        .iter()
        .filter_map(|&(lo, hi)| Some((remap[lo]?, remap[hi]?)))
        .collect();
    Ok(HasseDiagram { n: h.n, nodes, edges })
}
