//! Exact maximum disjoint-matching oracle: branch and bound on the edge
//! conflict graph (two edges conflict when they share a vertex or cross).
//! Exponential, intended for small instances and cross-checks.

use serde::Serialize;

use crate::cylinder::CylindricalDrawing;
use crate::error::{Error, Result};
use crate::grower::EdgePair;
use crate::model::{crossing_matrix, Drawing};

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub optimum: usize,
    pub witness: Vec<EdgePair>,
    /// Search nodes explored.
    pub explored: u64,
}

struct Search {
    adj: Vec<Vec<bool>>,
    degrees_scratch: Vec<usize>,
    best: Vec<usize>,
    explored: u64,
    node_limit: u64,
}

impl Search {
    /// Max independent set over the candidate list, extending `current`.
    fn run(&mut self, candidates: Vec<usize>, current: &mut Vec<usize>) -> Result<()> {
        self.explored += 1;
        if self.explored > self.node_limit {
            return Err(Error::LimitExceeded { limit: self.node_limit });
        }
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        if candidates.is_empty() {
            return Ok(());
        }
        if current.len() + self.color_bound(&candidates) <= self.best.len() {
            return Ok(());
        }
        // Branch on the candidate with most conflicts among candidates.
        let pick = *candidates
            .iter()
            .max_by_key(|&&v| candidates.iter().filter(|&&w| self.adj[v][w]).count())
            .unwrap();
        // Include pick.
        let reduced: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&w| w != pick && !self.adj[pick][w])
            .collect();
        current.push(pick);
        self.run(reduced, current)?;
        current.pop();
        // Exclude pick.
        let rest: Vec<usize> = candidates.into_iter().filter(|&w| w != pick).collect();
        self.run(rest, current)
    }

    /// Greedy clique cover of the candidates: an independent set takes at
    /// most one vertex per clique, so the cover size is an upper bound.
    fn color_bound(&mut self, candidates: &[usize]) -> usize {
        let mut assigned = vec![false; candidates.len()];
        let mut cliques = 0usize;
        for i in 0..candidates.len() {
            if assigned[i] {
                continue;
            }
            cliques += 1;
            assigned[i] = true;
            self.degrees_scratch.clear();
            self.degrees_scratch.push(candidates[i]);
            for j in i + 1..candidates.len() {
                if assigned[j] {
                    continue;
                }
                let v = candidates[j];
                if self.degrees_scratch.iter().all(|&w| self.adj[v][w]) {
                    assigned[j] = true;
                    self.degrees_scratch.push(v);
                }
            }
        }
        cliques
    }
}

fn max_independent_set(
    adj: Vec<Vec<bool>>,
    node_limit: u64,
) -> Result<(Vec<usize>, u64)> {
    let m = adj.len();
    let mut s = Search {
        adj,
        degrees_scratch: Vec::new(),
        best: Vec::new(),
        explored: 0,
        node_limit,
    };
    let mut current = Vec::new();
    s.run((0..m).collect(), &mut current)?;
    Ok((s.best, s.explored))
}

pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

/// Exact maximum disjoint matching of a simple drawing.
pub fn max_disjoint_bruteforce(d: &Drawing, node_limit: u64) -> Result<OracleResult> {
    let m = d.edges.len();
    let cm = crossing_matrix(d)?;
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let conflict =
                d.edges[i].shares_vertex(&d.edges[j]) || cm.count(i, j) > 0;
            adj[i][j] = conflict;
            adj[j][i] = conflict;
        }
    }
    let (best, explored) = max_independent_set(adj, node_limit)?;
    let mut witness: Vec<EdgePair> = best.iter().map(|&i| d.edges[i].pair()).collect();
    witness.sort();
    Ok(OracleResult {
        optimum: witness.len(),
        witness,
        explored,
    })
}

/// Exact maximum disjoint matching of a cylindrical drawing, using its
/// combinatorial crossing counts.
pub fn max_disjoint_cylindrical(c: &CylindricalDrawing, node_limit: u64) -> Result<OracleResult> {
    let m = c.edges.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (&c.edges[i], &c.edges[j]);
            let shares = a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j;
            let conflict = shares || c.crossing_count(a, b) > 0;
            adj[i][j] = conflict;
            adj[j][i] = conflict;
        }
    }
    let (best, explored) = max_independent_set(adj, node_limit)?;
    let mut witness: Vec<EdgePair> = best
        .iter()
        .map(|&k| {
            let e = &c.edges[k];
            (e.i.min(e.j), e.i.max(e.j))
        })
        .collect();
    witness.sort();
    Ok(OracleResult {
        optimum: witness.len(),
        witness,
        explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::convex_drawing;
    use crate::matching::certify;

    fn convex(n: usize) -> Drawing {
        convex_drawing(n).unwrap()
    }

    #[test]
    fn convex_k4_optimum_two() {
        let d = convex(4);
        let r = max_disjoint_bruteforce(&d, 1_000_000).unwrap();
        assert_eq!(r.optimum, 2);
        certify(&d, &r.witness).unwrap();
    }

    #[test]
    fn convex_k6_optimum_three() {
        let d = convex(6);
        let r = max_disjoint_bruteforce(&d, 10_000_000).unwrap();
        assert_eq!(r.optimum, 3);
        certify(&d, &r.witness).unwrap();
    }

    #[test]
    fn node_limit_enforced() {
        let d = convex(6);
        let err = max_disjoint_bruteforce(&d, 2).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { limit: 2 }));
    }
}
