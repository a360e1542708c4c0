//! Matching extraction: a greedy matching in the grown plane subgraph
//! (stage A), longest chains in four geometric partial orders on the
//! x-monotone drawing (stage B), and the end-to-end pipeline with exact
//! certification against the original drawing.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::cylinder::{best_cut, build_cylindrical, columns_of, cut_and_unroll, XMonotoneDrawing};
use crate::error::{Error, Result};
use crate::geom::{polyline_contacts, ContactKind, Point, Rat};
use crate::grower::{grow_plane_subgraph, max_degree_non_root, EdgePair, PlaneSubgraph};
use crate::model::{validate_simple, Drawing};

/// The four strict partial orders on vertex-disjoint non-crossing
/// x-monotone edges. Every disjoint pair is comparable in at least one of
/// them, so a maximum disjoint family of size D forces a chain of length
/// at least D^(1/4) in one order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum OrderKind {
    /// Left-to-right staircase: strictly left span, or below with both
    /// span endpoints further left.
    LeftStair,
    /// Mirror staircase: strictly right span, or below with both span
    /// endpoints further right.
    RightStair,
    /// Below with span contained in the upper edge's span.
    NestUp,
    /// Below with span containing the upper edge's span.
    NestDown,
}

pub const ALL_ORDER_KINDS: [OrderKind; 4] = [
    OrderKind::LeftStair,
    OrderKind::RightStair,
    OrderKind::NestUp,
    OrderKind::NestDown,
];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    /// e precedes f in the order.
    BelowRel,
    /// f precedes e.
    AboveRel,
    Incomparable,
}

/// An x-monotone edge: a chain with strictly increasing x, tagged with the
/// original unordered vertex pair it represents.
#[derive(Clone, Debug)]
pub struct XmEdge {
    pub id: EdgePair,
    pub chain: Vec<Point<Rat>>,
}

impl XmEdge {
    /// Accepts a strictly increasing or strictly decreasing chain and
    /// stores it left-to-right.
    pub fn new(id: EdgePair, mut chain: Vec<Point<Rat>>) -> Result<Self> {
        if chain.len() < 2 {
            return Err(Error::InvalidInput("x-monotone edge needs >= 2 points".into()));
        }
        if chain.windows(2).all(|w| w[0].x > w[1].x) {
            chain.reverse();
        }
        if !chain.windows(2).all(|w| w[0].x < w[1].x) {
            return Err(Error::InvalidInput("edge chain not strictly x-monotone".into()));
        }
        Ok(XmEdge { id, chain })
    }

    pub fn left(&self) -> &Rat {
        &self.chain[0].x
    }

    pub fn right(&self) -> &Rat {
        &self.chain[self.chain.len() - 1].x
    }

    /// Exact y-coordinate at `x`, which must lie within the span.
    pub fn y_at(&self, x: &Rat) -> Rat {
        for w in self.chain.windows(2) {
            if *x >= w[0].x && *x <= w[1].x {
                let t = (x.clone() - w[0].x.clone()) / (w[1].x.clone() - w[0].x.clone());
                return w[0].y.clone() + t * (w[1].y.clone() - w[0].y.clone());
            }
        }
        panic!("x outside edge span");
    }

    fn endpoints(&self) -> [&Point<Rat>; 2] {
        [&self.chain[0], &self.chain[self.chain.len() - 1]]
    }
}

/// Geometric relation of an edge pair, computed once and shared by all
/// four order kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PairGeom {
    /// Share an endpoint or meet somewhere: comparable in no order.
    Entangled,
    /// Spans separated by a vertical line; `true` iff e is left of f.
    SpanDisjoint(bool),
    /// Spans overlap, curves disjoint; `true` iff e is strictly below f.
    Separated(bool),
}

fn pair_geom(e: &XmEdge, f: &XmEdge) -> PairGeom {
    for pe in e.endpoints() {
        for pf in f.endpoints() {
            if pe == pf {
                return PairGeom::Entangled;
            }
        }
    }
    if e.right() < f.left() {
        return PairGeom::SpanDisjoint(true);
    }
    if f.right() < e.left() {
        return PairGeom::SpanDisjoint(false);
    }
    // Overlapping spans: disjoint x-monotone curves keep one vertical
    // order over the whole common span, so any contact disqualifies and
    // one sample x decides.
    if !polyline_contacts(&e.chain, &f.chain).is_empty() {
        return PairGeom::Entangled;
    }
    let x = e.left().max(f.left()).clone();
    PairGeom::Separated(e.y_at(&x) < f.y_at(&x))
}

/// Compare two x-monotone edges in one order kind.
pub fn order_relation(kind: OrderKind, e: &XmEdge, f: &XmEdge) -> Rel {
    relation_from_geom(kind, pair_geom(e, f), e, f)
}

fn relation_from_geom(kind: OrderKind, geom: PairGeom, e: &XmEdge, f: &XmEdge) -> Rel {
    let (le, re) = (e.left(), e.right());
    let (lf, rf) = (f.left(), f.right());
    match (kind, geom) {
        (_, PairGeom::Entangled) => Rel::Incomparable,
        (OrderKind::LeftStair, PairGeom::SpanDisjoint(e_left)) => {
            if e_left {
                Rel::BelowRel
            } else {
                Rel::AboveRel
            }
        }
        (OrderKind::RightStair, PairGeom::SpanDisjoint(e_left)) => {
            if e_left {
                Rel::AboveRel
            } else {
                Rel::BelowRel
            }
        }
        (OrderKind::LeftStair, PairGeom::Separated(e_below)) => {
            if e_below && le < lf && re < rf {
                Rel::BelowRel
            } else if !e_below && lf < le && rf < re {
                Rel::AboveRel
            } else {
                Rel::Incomparable
            }
        }
        (OrderKind::RightStair, PairGeom::Separated(e_below)) => {
            if e_below && lf < le && rf < re {
                Rel::BelowRel
            } else if !e_below && le < lf && re < rf {
                Rel::AboveRel
            } else {
                Rel::Incomparable
            }
        }
        (OrderKind::NestUp, PairGeom::Separated(e_below)) => {
            if e_below && lf <= le && re <= rf {
                Rel::BelowRel
            } else if !e_below && le <= lf && rf <= re {
                Rel::AboveRel
            } else {
                Rel::Incomparable
            }
        }
        (OrderKind::NestDown, PairGeom::Separated(e_below)) => {
            if e_below && le <= lf && rf <= re {
                Rel::BelowRel
            } else if !e_below && lf <= le && re <= rf {
                Rel::AboveRel
            } else {
                Rel::Incomparable
            }
        }
        (OrderKind::NestUp | OrderKind::NestDown, PairGeom::SpanDisjoint(_)) => Rel::Incomparable,
    }
}

/// Inclusion-maximal matching among the subgraph edges avoiding the root,
/// built greedily over edges in (min, max) endpoint order. Edges of a
/// plane subgraph never cross, so vertex-disjointness makes the result a
/// disjoint matching.
pub fn greedy_matching_avoiding(g: &PlaneSubgraph) -> BTreeSet<EdgePair> {
    let mut used = vec![false; g.n];
    let mut matching = BTreeSet::new();
    for (u, v) in g.non_star_edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            matching.insert((u, v));
        }
    }
    matching
}

/// x-monotone edges of a drawing, tagged with their original pair ids.
pub fn xm_edges(x: &XMonotoneDrawing) -> Result<Vec<XmEdge>> {
    x.drawing
        .edges
        .iter()
        .zip(&x.kept)
        .map(|(e, &id)| XmEdge::new(id, e.chain.clone()))
        .collect()
}

/// Longest chain among the edges for each order kind; returns the ids of
/// the best chain and the per-kind lengths.
pub fn chain_extract_detail(edges: &[XmEdge]) -> (Vec<EdgePair>, [usize; 4]) {
    let m = edges.len();
    let mut geoms = vec![PairGeom::Entangled; m * m];
    for a in 0..m {
        for b in a + 1..m {
            let g = pair_geom(&edges[a], &edges[b]);
            geoms[a * m + b] = g;
            geoms[b * m + a] = flip(g);
        }
    }
    let mut best: Vec<usize> = Vec::new();
    let mut lengths = [0usize; 4];
    for (ki, kind) in ALL_ORDER_KINDS.iter().enumerate() {
        let chain = longest_chain(*kind, edges, &geoms);
        lengths[ki] = chain.len();
        if chain.len() > best.len() {
            best = chain;
        }
    }
    (best.into_iter().map(|i| edges[i].id).collect(), lengths)
}

/// Longest chain over the four order kinds in an x-monotone drawing.
pub fn chain_extract(x: &XMonotoneDrawing) -> Result<Vec<EdgePair>> {
    Ok(chain_extract_detail(&xm_edges(x)?).0)
}

fn flip(g: PairGeom) -> PairGeom {
    match g {
        PairGeom::Entangled => PairGeom::Entangled,
        PairGeom::SpanDisjoint(b) => PairGeom::SpanDisjoint(!b),
        PairGeom::Separated(b) => PairGeom::Separated(!b),
    }
}

/// Longest-path dynamic program over the comparability DAG of one kind.
fn longest_chain(kind: OrderKind, edges: &[XmEdge], geoms: &[PairGeom]) -> Vec<usize> {
    let m = edges.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut indeg = vec![0usize; m];
    for a in 0..m {
        for b in a + 1..m {
            match relation_from_geom(kind, geoms[a * m + b], &edges[a], &edges[b]) {
                Rel::BelowRel => {
                    preds[b].push(a);
                    indeg[b] += 1;
                }
                Rel::AboveRel => {
                    preds[a].push(b);
                    indeg[a] += 1;
                }
                Rel::Incomparable => {}
            }
        }
    }
    // Kahn order over successor counts.
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); m];
    for b in 0..m {
        for &a in &preds[b] {
            succ[a].push(b);
        }
    }
    let mut queue: Vec<usize> = (0..m).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(m);
    let mut remaining = indeg.clone();
    let mut qi = 0;
    while qi < queue.len() {
        let a = queue[qi];
        qi += 1;
        order.push(a);
        for &b in &succ[a] {
            remaining[b] -= 1;
            if remaining[b] == 0 {
                queue.push(b);
            }
        }
    }
    debug_assert_eq!(order.len(), m, "comparability digraph must be acyclic");

    let mut len = vec![1usize; m];
    let mut back: Vec<Option<usize>> = vec![None; m];
    for &b in &order {
        for &a in &preds[b] {
            if len[a] + 1 > len[b] {
                len[b] = len[a] + 1;
                back[b] = Some(a);
            }
        }
    }
    let Some(mut cur) = (0..m).max_by_key(|&i| len[i]) else {
        return Vec::new();
    };
    let mut chain = vec![cur];
    while let Some(prev) = back[cur] {
        chain.push(prev);
        cur = prev;
    }
    chain.reverse();
    chain
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootPolicy {
    Fixed(usize),
    BestOfAll,
}

/// Per-stage statistics of one solve run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StageStats {
    pub root: usize,
    pub u: usize,
    /// Cylinder width (number of columns); 0 when stage B was skipped.
    pub delta: usize,
    pub stage_a_size: usize,
    pub cut_column: Option<usize>,
    pub kept_count: usize,
    pub chain_lengths: [usize; 4],
    pub stage_b_size: usize,
}

/// A certified disjoint matching plus how it was found.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchingResult {
    pub edges: Vec<EdgePair>,
    pub size: usize,
    pub stats: StageStats,
}

impl MatchingResult {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialize matching result")
    }

    /// Results loaded from disk must re-verify their certificate.
    pub fn from_json_str(s: &str, d: &Drawing) -> Result<Self> {
        let r: MatchingResult =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        certify(d, &r.edges)?;
        Ok(r)
    }
}

/// Verify with exact arithmetic that the edges are pairwise disjoint in
/// the drawing: no shared vertex, zero crossings.
pub fn certify(d: &Drawing, edges: &[EdgePair]) -> Result<()> {
    for (a, &(u1, v1)) in edges.iter().enumerate() {
        for &(u2, v2) in &edges[a + 1..] {
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                return Err(Error::EquivalenceViolation(format!(
                    "certificate failure: edges {:?} and {:?} share a vertex",
                    (u1, v1),
                    (u2, v2)
                )));
            }
            let i = d
                .edge_index(u1, v1)
                .ok_or_else(|| Error::InvalidInput(format!("no such edge {:?}", (u1, v1))))?;
            let j = d
                .edge_index(u2, v2)
                .ok_or_else(|| Error::InvalidInput(format!("no such edge {:?}", (u2, v2))))?;
            let contacts = polyline_contacts(&d.edges[i].chain, &d.edges[j].chain);
            if contacts.iter().any(|c| c.kind != ContactKind::SharedEndpoint) {
                return Err(Error::EquivalenceViolation(format!(
                    "certificate failure: edges {:?} and {:?} meet",
                    (u1, v1),
                    (u2, v2)
                )));
            }
        }
    }
    Ok(())
}

fn solve_for_root(d: &Drawing, root: usize) -> Result<MatchingResult> {
    let g = grow_plane_subgraph(d, root)?;
    let stage_a: Vec<EdgePair> = greedy_matching_avoiding(&g).into_iter().collect();
    let (u, _) = max_degree_non_root(&g);
    let delta = columns_of(d, &g, u, root).len();

    let mut stats = StageStats {
        root,
        u,
        delta,
        stage_a_size: stage_a.len(),
        cut_column: None,
        kept_count: 0,
        chain_lengths: [0; 4],
        stage_b_size: 0,
    };
    let mut stage_b: Vec<EdgePair> = Vec::new();
    if delta >= 3 {
        let c = build_cylindrical(d, &g, u, root)?;
        let (cut, kept) = best_cut(&c);
        stats.cut_column = Some(cut);
        stats.kept_count = kept;
        let x = cut_and_unroll(&c, cut)?;
        let (chain, lengths) = chain_extract_detail(&xm_edges(&x)?);
        stats.chain_lengths = lengths;
        stats.stage_b_size = chain.len();
        stage_b = chain;
    }

    let edges = if stage_b.len() > stage_a.len() {
        let mut e = stage_b;
        e.sort();
        e
    } else {
        stage_a
    };
    certify(d, &edges)?;
    Ok(MatchingResult {
        size: edges.len(),
        edges,
        stats,
    })
}

/// Run the full pipeline and return a certified disjoint matching.
pub fn solve(d: &Drawing, policy: RootPolicy) -> Result<MatchingResult> {
    if !d.complete || d.n() < 3 {
        return Err(Error::InvalidInput(
            "solve needs a complete drawing on >= 3 vertices".into(),
        ));
    }
    let report = validate_simple(d);
    if !report.ok() {
        return Err(Error::NotSimple(report.summary()));
    }
    match policy {
        RootPolicy::Fixed(v) => {
            if v >= d.n() {
                return Err(Error::InvalidInput(format!("root {v} out of range")));
            }
            solve_for_root(d, v)
        }
        RootPolicy::BestOfAll => {
            let mut best: Option<MatchingResult> = None;
            for v in 0..d.n() {
                let r = solve_for_root(d, v)?;
                if best.as_ref().map_or(true, |b| r.size > b.size) {
                    best = Some(r);
                }
            }
            Ok(best.expect("at least one root"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn p(x: i64, y: i64) -> Point<Rat> {
        Point::from_i64(x, y)
    }

    fn seg(id: EdgePair, a: (i64, i64), b: (i64, i64)) -> XmEdge {
        XmEdge::new(id, vec![p(a.0, a.1), p(b.0, b.1)]).unwrap()
    }

    #[test]
    fn order_relation_examples() {
        let e = seg((0, 1), (0, 0), (1, 0));
        let f = seg((2, 3), (2, 1), (3, 1));
        assert_eq!(order_relation(OrderKind::LeftStair, &e, &f), Rel::BelowRel);
        assert_eq!(order_relation(OrderKind::RightStair, &e, &f), Rel::AboveRel);
        assert_eq!(order_relation(OrderKind::NestUp, &e, &f), Rel::Incomparable);

        let e = seg((0, 1), (0, 0), (3, 0));
        let f = seg((2, 3), (1, 1), (2, 1));
        assert_eq!(order_relation(OrderKind::NestDown, &e, &f), Rel::BelowRel);
        assert_eq!(order_relation(OrderKind::NestUp, &e, &f), Rel::Incomparable);

        // Crossing pair is incomparable everywhere.
        let e = seg((0, 1), (0, 0), (2, 2));
        let f = seg((2, 3), (0, 2), (2, 0));
        for kind in ALL_ORDER_KINDS {
            assert_eq!(order_relation(kind, &e, &f), Rel::Incomparable);
        }
    }

    #[test]
    fn nested_edges_chain_of_three() {
        let edges = vec![
            seg((0, 1), (0, 0), (9, 0)),
            seg((2, 3), (1, 1), (8, 1)),
            seg((4, 5), (2, 2), (7, 2)),
        ];
        let (chain, lengths) = chain_extract_detail(&edges);
        assert_eq!(chain.len(), 3);
        assert!(lengths.contains(&3));
    }

    #[test]
    fn single_edge_chain() {
        let edges = vec![seg((0, 1), (0, 0), (1, 0))];
        let (chain, _) = chain_extract_detail(&edges);
        assert_eq!(chain, vec![(0, 1)]);
    }

    #[test]
    fn greedy_matching_star_plus_cycle() {
        let g = PlaneSubgraph {
            root: 0,
            n: 5,
            edges: [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)]
                .into_iter()
                .collect(),
            trace: vec![],
        };
        let m = greedy_matching_avoiding(&g);
        assert_eq!(m, [(1, 2), (3, 4)].into_iter().collect());
    }

    #[test]
    fn solve_k3_gives_one() {
        let d = Drawing::straight_complete(vec![p(0, 0), p(4, 0), p(2, 3)]).unwrap();
        let r = solve(&d, RootPolicy::Fixed(0)).unwrap();
        assert_eq!(r.size, 1);
    }

    #[test]
    fn solve_convex_k9() {
        let pts = vec![
            p(20, 0),
            p(15, 13),
            p(4, 20),
            p(-9, 18),
            p(-18, 9),
            p(-20, -4),
            p(-13, -15),
            p(-2, -20),
            p(11, -17),
        ];
        let d = Drawing::straight_complete(pts).unwrap();
        let r = solve(&d, RootPolicy::Fixed(0)).unwrap();
        assert!(r.size >= 3, "size {}", r.size);
        assert!(r.size <= 4);
        certify(&d, &r.edges).unwrap();
    }
}
