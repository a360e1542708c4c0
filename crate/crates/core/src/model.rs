//! Drawing data model for simple topological graphs: polyline edges over
//! exact rational coordinates, simplicity validation and the crossing
//! matrix.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{DegeneracyError, Error, Result};
use crate::geom::{
    cyclic_cmp, point_on_segment, polyline_contacts, polyline_crossings, rat_from_str,
    rat_to_string, to_small_chain, Contact, ContactKind, Frac128, Point, Rat, Scalar, Segment,
};

/// An edge drawn as a polyline. The chain starts at `u`'s position and
/// ends at `v`'s position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolylineEdge {
    pub u: usize,
    pub v: usize,
    pub chain: Vec<Point<Rat>>,
}

impl PolylineEdge {
    /// Unordered endpoint pair, normalized to `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn is_incident(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_vertex(&self, other: &PolylineEdge) -> bool {
        other.is_incident(self.u) || other.is_incident(self.v)
    }
}

/// A (usually complete) simple topological drawing.
#[derive(Clone, Debug)]
pub struct Drawing {
    pub vertices: Vec<Point<Rat>>,
    pub edges: Vec<PolylineEdge>,
    pub complete: bool,
    pair_index: BTreeMap<(usize, usize), usize>,
}

impl Drawing {
    /// Structural construction checks; geometric simplicity is the job of
    /// [`validate_simple`].
    pub fn new(vertices: Vec<Point<Rat>>, edges: Vec<PolylineEdge>, complete: bool) -> Result<Self> {
        let n = vertices.len();
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidInput("vertex positions not distinct".into()));
        }
        let mut pair_index = BTreeMap::new();
        for (idx, e) in edges.iter().enumerate() {
            if e.u == e.v || e.u >= n || e.v >= n {
                return Err(Error::InvalidInput(format!("bad edge endpoints {},{}", e.u, e.v)));
            }
            if e.chain.len() < 2 {
                return Err(Error::InvalidInput(format!("edge {},{}: chain too short", e.u, e.v)));
            }
            if e.chain.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!(
                    "edge {},{}: repeated consecutive chain point",
                    e.u, e.v
                )));
            }
            if e.chain[0] != vertices[e.u] || e.chain[e.chain.len() - 1] != vertices[e.v] {
                return Err(Error::InvalidInput(format!(
                    "edge {},{}: chain endpoints do not match vertex positions",
                    e.u, e.v
                )));
            }
            if pair_index.insert(e.pair(), idx).is_some() {
                return Err(Error::InvalidInput(format!("duplicate edge {},{}", e.u, e.v)));
            }
        }
        if complete && pair_index.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidInput(format!(
                "complete drawing on {} vertices needs {} edges, got {}",
                n,
                n * (n - 1) / 2,
                edges.len()
            )));
        }
        Ok(Drawing {
            vertices,
            edges,
            complete,
            pair_index,
        })
    }

    /// Straight-line complete drawing on the given points.
    pub fn straight_complete(points: Vec<Point<Rat>>) -> Result<Self> {
        let n = points.len();
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push(PolylineEdge {
                    u,
                    v,
                    chain: vec![points[u].clone(), points[v].clone()],
                });
            }
        }
        Drawing::new(points, edges, true)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let pair = if u <= v { (u, v) } else { (v, u) };
        self.pair_index.get(&pair).copied()
    }

    pub fn incident_edges(&self, w: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].is_incident(w)).collect()
    }

    /// Chain of edge `idx` oriented to start at vertex `from`.
    pub fn chain_from(&self, idx: usize, from: usize) -> Vec<Point<Rat>> {
        let e = &self.edges[idx];
        if e.u == from {
            e.chain.clone()
        } else {
            assert_eq!(e.v, from);
            let mut c = e.chain.clone();
            c.reverse();
            c
        }
    }

    /// Initial direction of edge `idx` leaving vertex `from`.
    fn initial_direction(&self, idx: usize, from: usize) -> (Rat, Rat) {
        let c = self.chain_from(idx, from);
        (
            c[1].x.clone() - c[0].x.clone(),
            c[1].y.clone() - c[0].y.clone(),
        )
    }

    /// Edges incident to `w` in counter-clockwise rotation order (by the
    /// direction of their end-piece at `w`).
    pub fn rotation_ccw(&self, w: usize) -> Vec<usize> {
        let mut inc = self.incident_edges(w);
        inc.sort_by(|&a, &b| {
            cyclic_cmp(&self.initial_direction(a, w), &self.initial_direction(b, w))
        });
        inc
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&DrawingRaw::from(self)).expect("serialize drawing")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: DrawingRaw = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct DrawingRaw {
    n: usize,
    vertices: Vec<[String; 2]>,
    edges: Vec<EdgeRaw>,
    complete: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeRaw {
    u: usize,
    v: usize,
    chain: Vec<[String; 2]>,
}

fn point_raw(p: &Point<Rat>) -> [String; 2] {
    [rat_to_string(&p.x), rat_to_string(&p.y)]
}

fn point_parse(raw: &[String; 2]) -> Result<Point<Rat>> {
    Ok(Point::new(
        rat_from_str(&raw[0]).map_err(Error::Parse)?,
        rat_from_str(&raw[1]).map_err(Error::Parse)?,
    ))
}

impl From<&Drawing> for DrawingRaw {
    fn from(d: &Drawing) -> Self {
        DrawingRaw {
            n: d.n(),
            vertices: d.vertices.iter().map(point_raw).collect(),
            edges: d
                .edges
                .iter()
                .map(|e| EdgeRaw {
                    u: e.u,
                    v: e.v,
                    chain: e.chain.iter().map(point_raw).collect(),
                })
                .collect(),
            complete: d.complete,
        }
    }
}

impl TryFrom<DrawingRaw> for Drawing {
    type Error = Error;
    fn try_from(raw: DrawingRaw) -> Result<Self> {
        if raw.n != raw.vertices.len() {
            return Err(Error::Parse("field n does not match vertex count".into()));
        }
        let vertices = raw.vertices.iter().map(point_parse).collect::<Result<Vec<_>>>()?;
        let edges = raw
            .edges
            .iter()
            .map(|e| {
                Ok(PolylineEdge {
                    u: e.u,
                    v: e.v,
                    chain: e.chain.iter().map(point_parse).collect::<Result<Vec<_>>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Drawing::new(vertices, edges, raw.complete)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ViolationKind {
    MultiCrossing,
    AdjacentCrossing,
    TangentialTouch,
    OverlappingEdges,
    EdgeThroughVertex,
    TripleCrossing,
    DirectionClash,
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Edge pair indices, or (edge, edge) duplicated for single-edge
    /// findings; vertex-related findings carry the vertex in `vertex`.
    pub edges: Vec<usize>,
    pub vertex: Option<usize>,
    pub witness: Option<Point<Rat>>,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.ok() {
            "ok".into()
        } else {
            self.violations
                .iter()
                .map(|v| format!("{:?} edges={:?} vertex={:?}", v.kind, v.edges, v.vertex))
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

/// Check the simple-topological-graph conditions: every independent pair
/// crosses at most once and shares nothing else, adjacent pairs meet only
/// at the shared vertex, no edge passes through a vertex, no overlaps, no
/// three edges through one interior point, and distinct initial
/// directions at every vertex.
pub fn validate_simple(d: &Drawing) -> ValidationReport {
    match small_mirror(d) {
        Some((vs, chains)) => validate_generic(d, &vs, &chains),
        None => {
            let vs: Vec<_> = d.vertices.clone();
            let chains: Vec<_> = d.edges.iter().map(|e| e.chain.clone()).collect();
            validate_generic(d, &vs, &chains)
        }
    }
}

type SmallPoint = Point<Frac128>;

fn small_mirror(d: &Drawing) -> Option<(Vec<SmallPoint>, Vec<Vec<SmallPoint>>)> {
    let vs = to_small_chain(&d.vertices)?;
    let chains = d
        .edges
        .iter()
        .map(|e| to_small_chain(&e.chain))
        .collect::<Option<Vec<_>>>()?;
    Some((vs, chains))
}

fn bbox<T: Scalar>(chain: &[Point<T>]) -> (T, T, T, T) {
    let mut x0 = chain[0].x.clone();
    let mut x1 = x0.clone();
    let mut y0 = chain[0].y.clone();
    let mut y1 = y0.clone();
    for p in &chain[1..] {
        if p.x < x0 {
            x0 = p.x.clone();
        }
        if p.x > x1 {
            x1 = p.x.clone();
        }
        if p.y < y0 {
            y0 = p.y.clone();
        }
        if p.y > y1 {
            y1 = p.y.clone();
        }
    }
    (x0, x1, y0, y1)
}

fn validate_generic<T: Scalar>(
    d: &Drawing,
    vertices: &[Point<T>],
    chains: &[Vec<Point<T>>],
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let m = d.edges.len();

    // (f) pairwise distinct initial directions at every vertex.
    for w in 0..vertices.len() {
        let inc = d.incident_edges(w);
        let dirs: Vec<(T, T)> = inc
            .iter()
            .map(|&idx| {
                let c = if d.edges[idx].u == w {
                    (&chains[idx][0], &chains[idx][1])
                } else {
                    let k = chains[idx].len();
                    (&chains[idx][k - 1], &chains[idx][k - 2])
                };
                (c.1.x.clone() - c.0.x.clone(), c.1.y.clone() - c.0.y.clone())
            })
            .collect();
        for a in 0..dirs.len() {
            for b in a + 1..dirs.len() {
                if same_dir(&dirs[a], &dirs[b]) {
                    report.violations.push(Violation {
                        kind: ViolationKind::DirectionClash,
                        edges: vec![inc[a], inc[b]],
                        vertex: Some(w),
                        witness: Some(vertices[w].to_rat()),
                    });
                }
            }
        }
    }

    // (c) no edge runs through a vertex position.
    for (idx, chain) in chains.iter().enumerate() {
        let e = &d.edges[idx];
        for (w, vp) in vertices.iter().enumerate() {
            for k in 0..chain.len() - 1 {
                // Skip the chain ends sitting on the edge's own vertices.
                if e.is_incident(w)
                    && ((k == 0 && chain[0] == *vp)
                        || (k == chain.len() - 2 && chain[chain.len() - 1] == *vp))
                {
                    continue;
                }
                let seg = Segment::new(chain[k].clone(), chain[k + 1].clone());
                if point_on_segment(vp, &seg) {
                    report.violations.push(Violation {
                        kind: ViolationKind::EdgeThroughVertex,
                        edges: vec![idx],
                        vertex: Some(w),
                        witness: Some(vp.to_rat()),
                    });
                }
            }
        }
    }

    // Pairwise contact analysis.
    let boxes: Vec<_> = chains.iter().map(|c| bbox(c)).collect();
    // Crossing point -> first pair through it; a second pair at the same
    // point always means three or more edges there.
    let mut point_edges: BTreeMap<Point<T>, (usize, usize)> = BTreeMap::new();
    let mut triples: BTreeMap<Point<T>, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..m {
        for j in i + 1..m {
            let (ix0, ix1, iy0, iy1) = &boxes[i];
            let (jx0, jx1, jy0, jy1) = &boxes[j];
            if ix1 < jx0 || jx1 < ix0 || iy1 < jy0 || jy1 < iy0 {
                continue;
            }
            let adjacent = d.edges[i].shares_vertex(&d.edges[j]);
            let contacts = polyline_contacts(&chains[i], &chains[j]);
            let mut crossings = 0usize;
            for Contact { point, kind } in contacts {
                match kind {
                    ContactKind::SharedEndpoint => {}
                    ContactKind::Crossing => {
                        crossings += 1;
                        if adjacent {
                            report.violations.push(Violation {
                                kind: ViolationKind::AdjacentCrossing,
                                edges: vec![i, j],
                                vertex: None,
                                witness: Some(point.to_rat()),
                            });
                        } else {
                            match point_edges.entry(point.clone()) {
                                std::collections::btree_map::Entry::Vacant(e) => {
                                    e.insert((i, j));
                                }
                                std::collections::btree_map::Entry::Occupied(e) => {
                                    let &(a, b) = e.get();
                                    triples
                                        .entry(point)
                                        .or_default()
                                        .extend([a, b, i, j]);
                                }
                            }
                        }
                    }
                    ContactKind::Touch => report.violations.push(Violation {
                        kind: ViolationKind::TangentialTouch,
                        edges: vec![i, j],
                        vertex: None,
                        witness: Some(point.to_rat()),
                    }),
                    ContactKind::Overlap => report.violations.push(Violation {
                        kind: ViolationKind::OverlappingEdges,
                        edges: vec![i, j],
                        vertex: None,
                        witness: Some(point.to_rat()),
                    }),
                    ContactKind::EndpointPassThrough => report.violations.push(Violation {
                        kind: ViolationKind::EdgeThroughVertex,
                        edges: vec![i, j],
                        vertex: None,
                        witness: Some(point.to_rat()),
                    }),
                }
            }
            if !adjacent && crossings > 1 {
                report.violations.push(Violation {
                    kind: ViolationKind::MultiCrossing,
                    edges: vec![i, j],
                    vertex: None,
                    witness: None,
                });
            }
        }
    }

    // (e) no three edges through one interior point.
    for (point, edges) in triples {
        report.violations.push(Violation {
            kind: ViolationKind::TripleCrossing,
            edges: edges.into_iter().collect(),
            vertex: None,
            witness: Some(point.to_rat()),
        });
    }

    report
}

fn same_dir<T: Scalar>(a: &(T, T), b: &(T, T)) -> bool {
    let cross = a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone();
    let dot = a.0.clone() * b.0.clone() + a.1.clone() * b.1.clone();
    cross.is_zero() && dot > T::zero()
}

/// Exact crossing counts and points for every unordered edge pair.
#[derive(Clone, Debug)]
pub struct CrossingMatrix {
    /// Only pairs with at least one crossing are stored.
    crossings: BTreeMap<(usize, usize), Vec<Point<Rat>>>,
    num_edges: usize,
}

impl CrossingMatrix {
    pub fn count(&self, i: usize, j: usize) -> usize {
        self.points(i, j).map(|p| p.len()).unwrap_or(0)
    }

    pub fn points(&self, i: usize, j: usize) -> Option<&Vec<Point<Rat>>> {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.crossings.get(&key)
    }

    /// Unordered edge-index pairs that cross at least once.
    pub fn crossing_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.crossings.keys().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }
}

/// Compute the crossing matrix of a drawing that already passed
/// [`validate_simple`].
pub fn crossing_matrix(d: &Drawing) -> std::result::Result<CrossingMatrix, DegeneracyError> {
    let mut crossings = BTreeMap::new();
    match small_mirror(d) {
        Some((_, chains)) => fill_crossings(&chains, &mut crossings)?,
        None => {
            let chains: Vec<_> = d.edges.iter().map(|e| e.chain.clone()).collect();
            fill_crossings(&chains, &mut crossings)?;
        }
    }
    Ok(CrossingMatrix {
        crossings,
        num_edges: d.edges.len(),
    })
}

fn fill_crossings<T: Scalar>(
    chains: &[Vec<Point<T>>],
    out: &mut BTreeMap<(usize, usize), Vec<Point<Rat>>>,
) -> std::result::Result<(), DegeneracyError> {
    let boxes: Vec<_> = chains.iter().map(|c| bbox(c)).collect();
    for i in 0..chains.len() {
        for j in i + 1..chains.len() {
            let (ix0, ix1, iy0, iy1) = &boxes[i];
            let (jx0, jx1, jy0, jy1) = &boxes[j];
            if ix1 < jx0 || jx1 < ix0 || iy1 < jy0 || jy1 < iy0 {
                continue;
            }
            let pts = polyline_crossings(&chains[i], &chains[j])?;
            if !pts.is_empty() {
                out.insert((i, j), pts.iter().map(|p| p.to_rat()).collect());
            }
        }
    }
    Ok(())
}

/// Two edges are disjoint iff they share no vertex and never cross.
pub fn disjoint(d: &Drawing, m: &CrossingMatrix, i: usize, j: usize) -> bool {
    !d.edges[i].shares_vertex(&d.edges[j]) && m.count(i, j) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(x: i64, y: i64) -> Point<Rat> {
        Point::from_i64(x, y)
    }

    fn pr(xn: i64, xd: i64, yn: i64, yd: i64) -> Point<Rat> {
        Point::new(
            Rat::new(BigInt::from(xn), BigInt::from(xd)),
            Rat::new(BigInt::from(yn), BigInt::from(yd)),
        )
    }

    fn convex_k4() -> Drawing {
        Drawing::straight_complete(vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)]).unwrap()
    }

    #[test]
    fn convex_k4_is_simple() {
        let d = convex_k4();
        let report = validate_simple(&d);
        assert!(report.ok(), "{}", report.summary());
    }

    #[test]
    fn convex_k4_crossing_matrix() {
        let d = convex_k4();
        let m = crossing_matrix(&d).unwrap();
        let pairs: Vec<_> = m.crossing_pairs().collect();
        let diag02 = d.edge_index(0, 2).unwrap();
        let diag13 = d.edge_index(1, 3).unwrap();
        let key = if diag02 < diag13 {
            (diag02, diag13)
        } else {
            (diag13, diag02)
        };
        assert_eq!(pairs, vec![key]);
        assert_eq!(m.points(diag02, diag13).unwrap(), &vec![p(2, 2)]);
    }

    #[test]
    fn double_crossing_detected() {
        let mut d = convex_k4();
        let idx = d.edge_index(0, 2).unwrap();
        d.edges[idx].chain = vec![p(0, 0), p(2, 3), pr(3, 1, 1, 2), p(4, 4)];
        let d = Drawing::new(d.vertices, d.edges, true).unwrap();
        let report = validate_simple(&d);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::MultiCrossing));
    }

    #[test]
    fn edge_through_vertex_detected() {
        let vertices = vec![p(0, 0), p(4, 0), p(2, 1)];
        let edges = vec![
            PolylineEdge {
                u: 0,
                v: 1,
                chain: vec![p(0, 0), p(2, 1), p(4, 0)],
            },
            PolylineEdge {
                u: 0,
                v: 2,
                chain: vec![p(0, 0), p(2, 1)],
            },
            PolylineEdge {
                u: 1,
                v: 2,
                chain: vec![p(4, 0), p(2, 1)],
            },
        ];
        let d = Drawing::new(vertices, edges, true).unwrap();
        let report = validate_simple(&d);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::EdgeThroughVertex));
    }

    #[test]
    fn overlap_detected() {
        let vertices = vec![p(0, 0), p(4, 0), p(2, 0), p(6, 5)];
        // Edges {0,1} and {2,3} overlap along y=0 between x=2 and x=4.
        let edges = vec![
            PolylineEdge {
                u: 0,
                v: 1,
                chain: vec![p(0, 0), p(4, 0)],
            },
            PolylineEdge {
                u: 2,
                v: 3,
                chain: vec![p(2, 0), p(5, 0), p(6, 5)],
            },
        ];
        let d = Drawing::new(vertices, edges, false).unwrap();
        let report = validate_simple(&d);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::OverlappingEdges));
    }

    #[test]
    fn star_has_no_crossings() {
        // Only the 4 star edges at vertex 0 of a convex 5-point set.
        let pts = vec![p(0, 0), p(10, 0), p(13, 7), p(5, 12), p(-3, 7)];
        let edges = (1..5)
            .map(|v| PolylineEdge {
                u: 0,
                v,
                chain: vec![pts[0].clone(), pts[v].clone()],
            })
            .collect();
        let d = Drawing::new(pts, edges, false).unwrap();
        assert!(validate_simple(&d).ok());
        let m = crossing_matrix(&d).unwrap();
        assert_eq!(m.crossing_pairs().count(), 0);
    }

    #[test]
    fn convex_k5_has_five_crossing_pairs() {
        let pts = vec![p(0, 0), p(10, 0), p(13, 7), p(5, 12), p(-3, 7)];
        let d = Drawing::straight_complete(pts).unwrap();
        assert!(validate_simple(&d).ok());
        let m = crossing_matrix(&d).unwrap();
        assert_eq!(m.crossing_pairs().count(), 5);
    }

    #[test]
    fn json_round_trip() {
        let d = convex_k4();
        let s = d.to_json_string();
        let d2 = Drawing::from_json_str(&s).unwrap();
        assert_eq!(d.vertices, d2.vertices);
        assert_eq!(d.edges, d2.edges);
        assert_eq!(s, d2.to_json_string());
    }
}
