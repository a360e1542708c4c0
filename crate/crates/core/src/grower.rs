//! Growing a connected crossing-free subgraph that contains the full star
//! of a root vertex and has minimum degree two.
//!
//! Starting from the root star, every degree-one vertex is completed by
//! adding crossing-free edges at it; for a valid simple complete drawing
//! at least two such candidate edges always exist, and the final subgraph
//! has at least n-1+floor(n/2) edges.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geom::{crossing_count, to_small_chain, Frac128, Point, Rat, Scalar};
use crate::model::Drawing;

pub type EdgePair = (usize, usize);

fn norm(u: usize, v: usize) -> EdgePair {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// One grow step: the degree-one vertex that was processed and the edges
/// added for it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrowStep {
    pub vertex: usize,
    pub added: Vec<EdgePair>,
}

/// A crossing-free connected subgraph of a host drawing containing the
/// root star, with minimum degree two on completion.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlaneSubgraph {
    pub root: usize,
    pub n: usize,
    pub edges: BTreeSet<EdgePair>,
    pub trace: Vec<GrowStep>,
}

impl PlaneSubgraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&norm(u, v))
    }

    pub fn neighbors(&self, w: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(u, v)| {
                if u == w {
                    Some(v)
                } else if v == w {
                    Some(u)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Edges not incident to the root.
    pub fn non_star_edges(&self) -> Vec<EdgePair> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| u != self.root && v != self.root)
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialize subgraph")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Check all structural invariants against the host drawing: root star
    /// contained, crossing-free, connected, minimum degree two, and the
    /// edge-count lower bound.
    pub fn check_invariants(&self, d: &Drawing) -> Result<()> {
        let n = d.n();
        for w in 0..n {
            if w != self.root && !self.contains(self.root, w) {
                return Err(Error::InvalidInput(format!(
                    "subgraph is missing star edge {},{}",
                    self.root, w
                )));
            }
        }
        let deg = self.degrees();
        if let Some(w) = (0..n).find(|&w| deg[w] < 2) {
            return Err(Error::InvalidInput(format!("vertex {w} has degree {} < 2", deg[w])));
        }
        if self.edges.len() < n - 1 + n / 2 {
            return Err(Error::InvalidInput(format!(
                "subgraph has {} edges < {}",
                self.edges.len(),
                n - 1 + n / 2
            )));
        }
        // Connectivity by traversal.
        let mut seen = vec![false; n];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in &self.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        while let Some(w) = stack.pop() {
            for &x in adj.get(&w).into_iter().flatten() {
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput("subgraph not connected".into()));
        }
        // Crossing-freeness, exact.
        let pairs: Vec<EdgePair> = self.edges.iter().copied().collect();
        for a in 0..pairs.len() {
            for b in a + 1..pairs.len() {
                let i = d.edge_index(pairs[a].0, pairs[a].1).unwrap();
                let j = d.edge_index(pairs[b].0, pairs[b].1).unwrap();
                let c = crossing_count(&d.edges[i].chain, &d.edges[j].chain)
                    .map_err(Error::Degeneracy)?;
                if c != 0 {
                    return Err(Error::InvalidInput(format!(
                        "subgraph edges {:?} and {:?} cross",
                        pairs[a], pairs[b]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Grow the plane subgraph at `root`. The drawing must be complete,
/// simple, and have at least three vertices.
pub fn grow_plane_subgraph(d: &Drawing, root: usize) -> Result<PlaneSubgraph> {
    let n = d.n();
    if !d.complete || n < 3 {
        return Err(Error::InvalidInput(
            "grower needs a complete drawing on >= 3 vertices".into(),
        ));
    }
    if root >= n {
        return Err(Error::InvalidInput(format!("root {root} out of range")));
    }
    let rat_chains: Vec<Vec<Point<Rat>>> = d.edges.iter().map(|e| e.chain.clone()).collect();
    match small_chains(&rat_chains) {
        Some(chains) => grow_inner(d, root, &chains),
        None => grow_inner(d, root, &rat_chains),
    }
}

fn small_chains(chains: &[Vec<Point<Rat>>]) -> Option<Vec<Vec<Point<Frac128>>>> {
    chains.iter().map(|c| to_small_chain(c)).collect()
}

fn grow_inner<T: Scalar>(d: &Drawing, root: usize, chains: &[Vec<Point<T>>]) -> Result<PlaneSubgraph> {
    let n = d.n();
    let mut edges: BTreeSet<EdgePair> = (0..n)
        .filter(|&w| w != root)
        .map(|w| norm(root, w))
        .collect();
    let mut deg = vec![1usize; n];
    deg[root] = n - 1;
    let mut trace = Vec::new();

    loop {
        let Some(u) = (0..n).find(|&w| deg[w] == 1) else {
            break;
        };
        let e = *edges
            .iter()
            .find(|&&(a, b)| a == u || b == u)
            .expect("degree-one vertex has an edge");
        // Crossing tests go against the current subgraph minus e; an edge
        // at u never crosses e anyway (they share u in a simple drawing).
        let others: Vec<usize> = edges
            .iter()
            .copied()
            .filter(|&p| p != e)
            .map(|(a, b)| d.edge_index(a, b).unwrap())
            .collect();
        let mut added = Vec::new();
        for w in 0..n {
            if w == u || edges.contains(&norm(u, w)) {
                continue;
            }
            let cand = d.edge_index(u, w).expect("complete drawing");
            let free = others.iter().all(|&j| {
                crossing_count(&chains[cand], &chains[j]).expect("simple drawing degenerated") == 0
            });
            if free {
                added.push(norm(u, w));
                if added.len() == 2 {
                    break;
                }
            }
        }
        // e itself is always a crossing-free candidate, so the candidate
        // set has 1 + |added| members; the guarantee demands >= 2.
        if added.is_empty() {
            return Err(Error::GuaranteeViolation { vertex: u, found: 1 });
        }
        for &(a, b) in &added {
            edges.insert((a, b));
            deg[a] += 1;
            deg[b] += 1;
        }
        trace.push(GrowStep { vertex: u, added });
    }

    Ok(PlaneSubgraph {
        root,
        n,
        edges,
        trace,
    })
}

/// Maximum degree over the non-root vertices and the smallest vertex
/// attaining it.
pub fn max_degree_non_root(g: &PlaneSubgraph) -> (usize, usize) {
    let deg = g.degrees();
    let mut best = (usize::MAX, 0usize);
    for w in 0..g.n {
        if w == g.root {
            continue;
        }
        if best.0 == usize::MAX || deg[w] > best.1 {
            best = (w, deg[w]);
        }
    }
    best
}
