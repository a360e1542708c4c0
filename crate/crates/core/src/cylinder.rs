//! Reduction of the dense part of a grown plane subgraph to an angularly
//! monotone cylindrical drawing, and the cut that turns the cylinder into
//! an x-monotone drawing.
//!
//! Columns of the cylinder are the non-root neighbors of the max-degree
//! vertex `u`, in clockwise rotation order at `u`. Every edge between two
//! columns crosses all the u-to-root paths on exactly one of its two
//! sides, once each; the crossing order along each path gives integer
//! height ranks, which serve directly as y-coordinates of a piecewise
//! linear realization on the cylinder.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geom::{polyline_crossings, Point, Rat};
use crate::grower::{EdgePair, PlaneSubgraph};
use crate::model::{crossing_matrix, Drawing, PolylineEdge};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SideKind {
    #[serde(rename = "INNER")]
    Inner,
    #[serde(rename = "OUTER")]
    Outer,
}

/// Which side of the column pair an edge runs on, and the columns it
/// passes over (in traversal order from the smaller endpoint column for
/// INNER, from the larger one for OUTER).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Side {
    pub kind: SideKind,
    pub columns: Vec<usize>,
}

/// Cyclic interval i+1..j-1.
pub fn inner_interval(i: usize, j: usize) -> Vec<usize> {
    (i + 1..j).collect()
}

/// Cyclic interval j+1,..,delta-1,0,..,i-1.
pub fn outer_interval(i: usize, j: usize, delta: usize) -> Vec<usize> {
    (j + 1..delta).chain(0..i).collect()
}

/// An edge of the cylindrical drawing between columns `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylEdge {
    pub i: usize,
    pub j: usize,
    pub side: Side,
    /// Height rank per passed-over column; negative ranks sit below the
    /// column vertex, positive above, magnitudes ordered outward.
    pub heights: BTreeMap<usize, i64>,
}

impl CylEdge {
    pub fn is_incident_column(&self, l: usize) -> bool {
        self.i == l || self.j == l
    }

    pub fn passes_over(&self, l: usize) -> bool {
        self.heights.contains_key(&l)
    }

    /// Chain in the universal cover: integer points (x, y) with x running
    /// over consecutive columns; endpoint columns at height 0.
    pub fn cover_chain(&self, delta: usize) -> Vec<(i64, i64)> {
        let (start, end) = match self.side.kind {
            SideKind::Inner => (self.i as i64, self.j as i64),
            SideKind::Outer => (self.j as i64, (self.i + delta) as i64),
        };
        let mut chain = Vec::with_capacity((end - start + 1) as usize);
        for x in start..=end {
            let col = (x as usize) % delta;
            let y = if x == start || x == end {
                0
            } else {
                self.heights[&col]
            };
            chain.push((x, y));
        }
        chain
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// The max-degree vertex whose neighbors became the columns.
    pub u: usize,
    /// The root of the grown subgraph.
    pub v: usize,
}

/// Angularly monotone cylindrical drawing of the complete graph on the
/// columns.
#[derive(Clone, Debug)]
pub struct CylindricalDrawing {
    pub delta: usize,
    /// Original vertex id of each column.
    pub column_vertex: Vec<usize>,
    pub edges: Vec<CylEdge>,
    pub provenance: Option<Provenance>,
}

impl CylindricalDrawing {
    pub fn edge(&self, i: usize, j: usize) -> Option<&CylEdge> {
        self.edges.iter().find(|e| (e.i, e.j) == (i.min(j), i.max(j)))
    }

    /// Original unordered vertex pair of a cylinder edge.
    pub fn original_pair(&self, e: &CylEdge) -> EdgePair {
        let a = self.column_vertex[e.i];
        let b = self.column_vertex[e.j];
        (a.min(b), a.max(b))
    }

    /// Exact number of crossings between two cylinder edges, counted in
    /// the wrapped piecewise-linear realization.
    pub fn crossing_count(&self, a: &CylEdge, b: &CylEdge) -> usize {
        let ca = a.cover_chain(self.delta);
        let mut total = 0;
        for shift in [-(self.delta as i64), 0, self.delta as i64] {
            let cb: Vec<(i64, i64)> = b
                .cover_chain(self.delta)
                .iter()
                .map(|&(x, y)| (x + shift, y))
                .collect();
            let lo = ca[0].0.max(cb[0].0);
            let hi = ca[ca.len() - 1].0.min(cb[cb.len() - 1].0);
            for x in lo..hi {
                let d0 = height_at(&ca, x) - height_at(&cb, x);
                let d1 = height_at(&ca, x + 1) - height_at(&cb, x + 1);
                if d0 != 0 && d1 != 0 && (d0 < 0) != (d1 < 0) {
                    total += 1;
                }
            }
        }
        total
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&CylRaw::from(self)).expect("serialize cylindrical drawing")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: CylRaw = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

fn height_at(chain: &[(i64, i64)], x: i64) -> i64 {
    let idx = (x - chain[0].0) as usize;
    chain[idx].1
}

#[derive(Serialize, Deserialize)]
struct CylRaw {
    delta: usize,
    columns: Vec<usize>,
    edges: Vec<CylEdgeRaw>,
}

#[derive(Serialize, Deserialize)]
struct CylEdgeRaw {
    i: usize,
    j: usize,
    side: SideKind,
    heights: BTreeMap<String, i64>,
}

impl From<&CylindricalDrawing> for CylRaw {
    fn from(c: &CylindricalDrawing) -> Self {
        CylRaw {
            delta: c.delta,
            columns: c.column_vertex.clone(),
            edges: c
                .edges
                .iter()
                .map(|e| CylEdgeRaw {
                    i: e.i,
                    j: e.j,
                    side: e.side.kind,
                    heights: e.heights.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<CylRaw> for CylindricalDrawing {
    type Error = Error;
    fn try_from(raw: CylRaw) -> Result<Self> {
        let edges = raw
            .edges
            .into_iter()
            .map(|e| {
                let heights: BTreeMap<usize, i64> = e
                    .heights
                    .into_iter()
                    .map(|(k, v)| {
                        k.parse::<usize>()
                            .map(|k| (k, v))
                            .map_err(|_| Error::Parse(format!("bad column key {k:?}")))
                    })
                    .collect::<Result<_>>()?;
                let columns = match e.side {
                    SideKind::Inner => inner_interval(e.i, e.j),
                    SideKind::Outer => outer_interval(e.i, e.j, raw.delta),
                };
                Ok(CylEdge {
                    i: e.i,
                    j: e.j,
                    side: Side {
                        kind: e.side,
                        columns,
                    },
                    heights,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CylindricalDrawing {
            delta: raw.delta,
            column_vertex: raw.columns,
            edges,
            provenance: None,
        })
    }
}

/// Non-root neighbors of `u` in the subgraph, in clockwise rotation order
/// at `u`, rotated so the smallest vertex id comes first.
pub fn columns_of(d: &Drawing, gp: &PlaneSubgraph, u: usize, root: usize) -> Vec<usize> {
    let mut cw: Vec<usize> = d
        .rotation_ccw(u)
        .into_iter()
        .rev()
        .map(|idx| {
            let e = &d.edges[idx];
            if e.u == u {
                e.v
            } else {
                e.u
            }
        })
        .filter(|&w| w != root && gp.contains(u, w))
        .collect();
    if let Some(pos) = cw.iter().enumerate().min_by_key(|(_, &w)| w).map(|(p, _)| p) {
        cw.rotate_left(pos);
    }
    cw
}

/// Crossing count of edge chain `f` with the two-edge path u - v_l - root.
fn path_crossings(
    d: &Drawing,
    f: &[Point<Rat>],
    u: usize,
    root: usize,
    col_vertex: usize,
) -> Result<(usize, usize)> {
    let leg_u = d
        .edge_index(u, col_vertex)
        .ok_or_else(|| Error::InvalidInput("missing path edge".into()))?;
    let leg_v = d
        .edge_index(col_vertex, root)
        .ok_or_else(|| Error::InvalidInput("missing path edge".into()))?;
    let a = polyline_crossings(f, &d.edges[leg_u].chain).map_err(Error::Degeneracy)?;
    let b = polyline_crossings(f, &d.edges[leg_v].chain).map_err(Error::Degeneracy)?;
    Ok((a.len(), b.len()))
}

/// Decide on which side of columns `i < j` the edge between them runs, by
/// exact crossing counts against every path; the one-side-all-once /
/// other-side-never dichotomy is asserted.
pub fn edge_side(
    d: &Drawing,
    gp: &PlaneSubgraph,
    u: usize,
    root: usize,
    i: usize,
    j: usize,
) -> Result<Side> {
    let columns = columns_of(d, gp, u, root);
    side_with_columns(d, u, root, &columns, i, j).map(|(side, _)| side)
}

/// Side decision plus per-column total crossing counts for reuse.
fn side_with_columns(
    d: &Drawing,
    u: usize,
    root: usize,
    columns: &[usize],
    i: usize,
    j: usize,
) -> Result<(Side, BTreeMap<usize, (usize, usize)>)> {
    let delta = columns.len();
    assert!(i < j && j < delta, "column indices out of range");
    let f_idx = d
        .edge_index(columns[i], columns[j])
        .ok_or_else(|| Error::InvalidInput("missing column edge".into()))?;
    let f = &d.edges[f_idx].chain;

    let mut counts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (l, &w) in columns.iter().enumerate() {
        if l == i || l == j {
            continue;
        }
        counts.insert(l, path_crossings(d, f, u, root, w)?);
    }
    let total = |l: &usize| {
        let (a, b) = counts[l];
        a + b
    };
    let inner = inner_interval(i, j);
    let outer = outer_interval(i, j, delta);
    let claim_err = |detail: String| Error::ClaimViolation { i, j, detail };
    if counts.values().any(|&(a, b)| a + b > 1) {
        return Err(claim_err("a path is crossed more than once".into()));
    }
    let inner_ones = inner.iter().filter(|l| total(l) == 1).count();
    let outer_ones = outer.iter().filter(|l| total(l) == 1).count();
    let kind = if !inner.is_empty() && inner_ones == inner.len() && outer_ones == 0 {
        SideKind::Inner
    } else if !outer.is_empty() && outer_ones == outer.len() && inner_ones == 0 {
        SideKind::Outer
    } else if inner_ones == 0 && outer_ones == 0 && inner.is_empty() {
        // Crosses nothing and the inside is empty (adjacent columns, or a
        // two-column cylinder): runs inside by convention.
        SideKind::Inner
    } else if inner_ones == 0 && outer_ones == 0 && outer.is_empty() {
        // Crosses nothing and only the outside is empty.
        SideKind::Outer
    } else {
        return Err(claim_err(format!(
            "inner {} of {} crossed, outer {} of {} crossed",
            inner_ones,
            inner.len(),
            outer_ones,
            outer.len()
        )));
    };
    let columns_passed = match kind {
        SideKind::Inner => inner,
        SideKind::Outer => outer,
    };
    Ok((
        Side {
            kind,
            columns: columns_passed,
        },
        counts,
    ))
}

/// Position of a point along a chain, as an exactly comparable key.
fn chain_position(chain: &[Point<Rat>], p: &Point<Rat>) -> (usize, Rat) {
    use crate::geom::{point_on_segment, Segment};
    for k in 0..chain.len() - 1 {
        let seg = Segment::new(chain[k].clone(), chain[k + 1].clone());
        if point_on_segment(p, &seg) {
            let dx = seg.b.x.clone() - seg.a.x.clone();
            let t = if !num_traits::Zero::is_zero(&dx) {
                (p.x.clone() - seg.a.x.clone()) / dx
            } else {
                (p.y.clone() - seg.a.y.clone()) / (seg.b.y.clone() - seg.a.y.clone())
            };
            return (k, t);
        }
    }
    panic!("crossing point not on path chain");
}

/// Build the cylindrical drawing of the complete graph on the non-root
/// neighbors of `u`.
pub fn build_cylindrical(
    d: &Drawing,
    gp: &PlaneSubgraph,
    u: usize,
    root: usize,
) -> Result<CylindricalDrawing> {
    let columns = columns_of(d, gp, u, root);
    let delta = columns.len();
    if delta < 2 {
        return Err(Error::InvalidInput(format!(
            "cylinder needs at least 2 columns, got {delta}"
        )));
    }

    // Side of every edge first.
    let mut sides: BTreeMap<(usize, usize), Side> = BTreeMap::new();
    for i in 0..delta {
        for j in i + 1..delta {
            let (side, _) = side_with_columns(d, u, root, &columns, i, j)?;
            sides.insert((i, j), side);
        }
    }

    // Height ranks per column: order the crossing points along each path
    // from u to the root.
    let mut heights: BTreeMap<(usize, usize), BTreeMap<usize, i64>> = BTreeMap::new();
    for (l, &w) in columns.iter().enumerate() {
        let leg_u_chain = d.chain_from(d.edge_index(u, w).unwrap(), u);
        let leg_v_chain = d.chain_from(d.edge_index(w, root).unwrap(), w);
        // (position key, edge pair, below?) for every edge passing over l.
        let mut below: Vec<((usize, Rat), (usize, usize))> = Vec::new();
        let mut above: Vec<((usize, Rat), (usize, usize))> = Vec::new();
        for (&(i, j), side) in &sides {
            if !side.columns.contains(&l) {
                continue;
            }
            let f_idx = d.edge_index(columns[i], columns[j]).unwrap();
            let f = &d.edges[f_idx].chain;
            let on_leg_u = polyline_crossings(f, &leg_u_chain).map_err(Error::Degeneracy)?;
            let on_leg_v = polyline_crossings(f, &leg_v_chain).map_err(Error::Degeneracy)?;
            match (on_leg_u.len(), on_leg_v.len()) {
                (1, 0) => below.push((chain_position(&leg_u_chain, &on_leg_u[0]), (i, j))),
                (0, 1) => above.push((chain_position(&leg_v_chain, &on_leg_v[0]), (i, j))),
                (a, b) => {
                    return Err(Error::ClaimViolation {
                        i,
                        j,
                        detail: format!("path {l} crossed {a}+{b} times"),
                    })
                }
            }
        }
        below.sort_by(|a, b| a.0.cmp(&b.0));
        above.sort_by(|a, b| a.0.cmp(&b.0));
        // Below the vertex: ranks go -1, -2, ... outward from v_l toward u,
        // and the leg chain runs from u to v_l.
        let k = below.len() as i64;
        for (m, (_, pair)) in below.into_iter().enumerate() {
            heights.entry(pair).or_default().insert(l, m as i64 - k);
        }
        // Above the vertex: +1, +2, ... outward from v_l toward the root.
        for (m, (_, pair)) in above.into_iter().enumerate() {
            heights.entry(pair).or_default().insert(l, m as i64 + 1);
        }
    }

    let edges: Vec<CylEdge> = sides
        .into_iter()
        .map(|((i, j), side)| {
            let h = heights.remove(&(i, j)).unwrap_or_default();
            if h.len() != side.columns.len() {
                return Err(Error::ClaimViolation {
                    i,
                    j,
                    detail: "height count does not match side columns".into(),
                });
            }
            Ok(CylEdge {
                i,
                j,
                side,
                heights: h,
            })
        })
        .collect::<Result<_>>()?;

    Ok(CylindricalDrawing {
        delta,
        column_vertex: columns,
        edges,
        provenance: Some(Provenance { u, v: root }),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CylViolation {
    /// Two edges share a rank in one column.
    RankClash,
    /// A pair of edges crosses more than once on the cylinder.
    MultiCrossing,
    /// The cylinder crossing pairs differ from the original drawing's.
    Equivalence,
    /// Column order does not match the reversed rotation at the root.
    RotationMismatch,
}

#[derive(Clone, Debug, Default)]
pub struct CylReport {
    pub violations: Vec<(CylViolation, String)>,
}

impl CylReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validate a cylindrical drawing: simplicity on the cylinder, distinct
/// per-column ranks, and (when the host drawing is supplied)
/// crossing-equivalence with the original edges plus the reversed
/// rotation at the root.
pub fn validate_cylindrical(
    c: &CylindricalDrawing,
    host: Option<(&Drawing, &PlaneSubgraph)>,
) -> CylReport {
    let mut report = CylReport::default();

    // (c) distinct ranks per column.
    for l in 0..c.delta {
        let mut seen: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
        for e in &c.edges {
            if let Some(&h) = e.heights.get(&l) {
                if let Some(other) = seen.insert(h, (e.i, e.j)) {
                    report.violations.push((
                        CylViolation::RankClash,
                        format!("column {l} rank {h} shared by {:?} and {other:?}", (e.i, e.j)),
                    ));
                }
            }
        }
    }

    // (a) pairwise crossings at most one.
    let mut cyl_pairs: BTreeSet<(EdgePair, EdgePair)> = BTreeSet::new();
    for a in 0..c.edges.len() {
        for b in a + 1..c.edges.len() {
            let count = c.crossing_count(&c.edges[a], &c.edges[b]);
            if count > 1 {
                report.violations.push((
                    CylViolation::MultiCrossing,
                    format!(
                        "edges {:?} and {:?} cross {count} times",
                        (c.edges[a].i, c.edges[a].j),
                        (c.edges[b].i, c.edges[b].j)
                    ),
                ));
            }
            if count > 0 {
                let pa = (c.edges[a].i, c.edges[a].j);
                let pb = (c.edges[b].i, c.edges[b].j);
                cyl_pairs.insert((pa.min(pb), pa.max(pb)));
            }
        }
    }

    let Some((d, _gp)) = host else {
        return report;
    };

    // (b) crossing-equivalence with the original drawing.
    let mut orig_pairs: BTreeSet<(EdgePair, EdgePair)> = BTreeSet::new();
    for a in 0..c.edges.len() {
        for b in a + 1..c.edges.len() {
            let ea = &c.edges[a];
            let eb = &c.edges[b];
            let ia = d
                .edge_index(c.column_vertex[ea.i], c.column_vertex[ea.j])
                .unwrap();
            let ib = d
                .edge_index(c.column_vertex[eb.i], c.column_vertex[eb.j])
                .unwrap();
            match polyline_crossings(&d.edges[ia].chain, &d.edges[ib].chain) {
                Ok(pts) if !pts.is_empty() => {
                    let pa = (ea.i, ea.j);
                    let pb = (eb.i, eb.j);
                    orig_pairs.insert((pa.min(pb), pa.max(pb)));
                }
                Ok(_) => {}
                Err(e) => report
                    .violations
                    .push((CylViolation::Equivalence, format!("degenerate original pair: {e}"))),
            }
        }
    }
    if orig_pairs != cyl_pairs {
        let missing: Vec<_> = orig_pairs.difference(&cyl_pairs).collect();
        let extra: Vec<_> = cyl_pairs.difference(&orig_pairs).collect();
        report.violations.push((
            CylViolation::Equivalence,
            format!("missing {missing:?}, extra {extra:?}"),
        ));
    }

    // (d) column order reversed at the root.
    if let Some(p) = c.provenance {
        let at_root: Vec<usize> = d
            .rotation_ccw(p.v)
            .into_iter()
            .map(|idx| {
                let e = &d.edges[idx];
                if e.u == p.v {
                    e.v
                } else {
                    e.u
                }
            })
            .filter(|w| c.column_vertex.contains(w))
            .collect();
        if !cyclically_equal(&at_root, &c.column_vertex) {
            report.violations.push((
                CylViolation::RotationMismatch,
                format!("rotation at root {at_root:?} vs columns {:?}", c.column_vertex),
            ));
        }
    }

    report
}

fn cyclically_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(start) = b.iter().position(|x| *x == a[0]) else {
        return false;
    };
    (0..a.len()).all(|k| a[k] == b[(start + k) % b.len()])
}

/// x-monotone drawing obtained by cutting the cylinder open, or wrapped
/// around an already x-monotone plain drawing.
#[derive(Clone, Debug)]
pub struct XMonotoneDrawing {
    pub drawing: Drawing,
    /// Original unordered pair id for each local edge, parallel to
    /// `drawing.edges`.
    pub kept: Vec<EdgePair>,
    pub cut_column: Option<usize>,
}

impl XMonotoneDrawing {
    /// Wrap a plain drawing whose vertices have pairwise distinct
    /// x-coordinates and whose chains are strictly x-monotone.
    pub fn from_drawing(d: &Drawing) -> Result<Self> {
        let mut xs: Vec<&Rat> = d.vertices.iter().map(|p| &p.x).collect();
        xs.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(
                "x-monotone drawing needs pairwise distinct vertex x-coordinates".into(),
            ));
        }
        for e in &d.edges {
            let incr = e.chain.windows(2).all(|w| w[0].x < w[1].x);
            let decr = e.chain.windows(2).all(|w| w[0].x > w[1].x);
            if !incr && !decr {
                return Err(Error::InvalidInput(format!(
                    "edge {},{} is not strictly x-monotone",
                    e.u, e.v
                )));
            }
        }
        Ok(XMonotoneDrawing {
            kept: d.edges.iter().map(|e| e.pair()).collect(),
            drawing: d.clone(),
            cut_column: None,
        })
    }
}

/// Number of edges that survive cutting at column `l`: those neither
/// incident to the column vertex nor passing over the column.
pub fn kept_count(c: &CylindricalDrawing, l: usize) -> usize {
    c.edges
        .iter()
        .filter(|e| !e.is_incident_column(l) && !e.passes_over(l))
        .count()
}

/// The cut column maximizing the number of surviving edges (ties to the
/// smallest column).
pub fn best_cut(c: &CylindricalDrawing) -> (usize, usize) {
    (0..c.delta)
        .map(|l| (l, kept_count(c, l)))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .expect("at least one column")
}

/// Cut the cylinder at `cut_column` and unroll to an x-monotone drawing
/// of the surviving edges. Crossing-equivalence with the cylinder is
/// asserted.
pub fn cut_and_unroll(c: &CylindricalDrawing, cut_column: usize) -> Result<XMonotoneDrawing> {
    if cut_column >= c.delta {
        return Err(Error::InvalidInput(format!("cut column {cut_column} out of range")));
    }
    let delta = c.delta;
    // Column -> new x position, walking right from just after the cut.
    let new_x = |col: usize| -> usize { (col + delta - cut_column - 1) % delta };

    let vertices: Vec<Point<Rat>> = (0..delta - 1)
        .map(|x| Point::from_i64(x as i64, 0))
        .collect();

    let survivors: Vec<&CylEdge> = c
        .edges
        .iter()
        .filter(|e| !e.is_incident_column(cut_column) && !e.passes_over(cut_column))
        .collect();

    let mut edges = Vec::new();
    let mut kept = Vec::new();
    for e in &survivors {
        let chain: Vec<Point<Rat>> = e
            .cover_chain(delta)
            .into_iter()
            .map(|(x, y)| {
                let col = (x as usize) % delta;
                Point::from_i64(new_x(col) as i64, y)
            })
            .collect();
        if !chain.windows(2).all(|w| w[0].x < w[1].x) {
            return Err(Error::EquivalenceViolation(format!(
                "unrolled edge {:?} not x-monotone",
                (e.i, e.j)
            )));
        }
        let (u, v) = (new_x(e.i), new_x(e.j));
        let (u, v, chain) = if u < v {
            (u, v, chain)
        } else {
            (v, u, chain)
        };
        // cover chains run left to right; relabelled endpoints keep that
        // orientation, so the chain starts at the smaller new x.
        edges.push(PolylineEdge { u, v, chain });
        kept.push(c.original_pair(e));
    }
    let drawing = Drawing::new(vertices, edges, false)?;

    // Crossing-equivalence against the cylinder, restricted to survivors.
    for a in 0..survivors.len() {
        for b in a + 1..survivors.len() {
            let unrolled = polyline_crossings(&drawing.edges[a].chain, &drawing.edges[b].chain)
                .map_err(Error::Degeneracy)?
                .len();
            let on_cyl = c.crossing_count(survivors[a], survivors[b]);
            if unrolled != on_cyl {
                return Err(Error::EquivalenceViolation(format!(
                    "pair {:?},{:?}: {unrolled} crossings unrolled vs {on_cyl} on cylinder",
                    (survivors[a].i, survivors[a].j),
                    (survivors[b].i, survivors[b].j)
                )));
            }
        }
    }
    Ok(XMonotoneDrawing {
        drawing,
        kept,
        cut_column: Some(cut_column),
    })
}

/// Convenience: crossing pairs of the original sub-drawing spanned by the
/// cylinder edges, for equivalence tests.
pub fn original_crossing_pairs(
    d: &Drawing,
    c: &CylindricalDrawing,
) -> Result<BTreeSet<(EdgePair, EdgePair)>> {
    let m = crossing_matrix(d).map_err(Error::Degeneracy)?;
    let mut out = BTreeSet::new();
    for a in 0..c.edges.len() {
        for b in a + 1..c.edges.len() {
            let pa = c.original_pair(&c.edges[a]);
            let pb = c.original_pair(&c.edges[b]);
            let ia = d.edge_index(pa.0, pa.1).unwrap();
            let ib = d.edge_index(pb.0, pb.1).unwrap();
            if m.count(ia, ib) > 0 {
                out.insert((pa.min(pb), pa.max(pb)));
            }
        }
    }
    Ok(out)
}
