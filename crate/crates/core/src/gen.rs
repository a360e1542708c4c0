//! Deterministic instance generators: convex complete drawings, random
//! point sets in general position, self-hosted cylindrical drawings (run
//! the reduction on a random instance), and random cylindrical drawings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cylinder::{build_cylindrical, validate_cylindrical, CylindricalDrawing};
use crate::error::{Error, Result};
use crate::geom::{orient, Orientation, Point, Rat};
use crate::grower::{grow_plane_subgraph, max_degree_non_root};
use crate::model::{validate_simple, Drawing};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    Convex,
    RandomPoints,
    CylSelfhosted,
    CylRandom,
}

#[derive(Clone, Copy, Debug)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Vertex count for drawing kinds, column count for cylinder kinds.
    pub size: usize,
    pub seed: u64,
}

pub enum GenOutput {
    Drawing(Drawing),
    Cylindrical(CylindricalDrawing),
}

impl GenOutput {
    pub fn to_json_string(&self) -> String {
        match self {
            GenOutput::Drawing(d) => d.to_json_string(),
            GenOutput::Cylindrical(c) => c.to_json_string(),
        }
    }
}

pub fn generate(spec: GenSpec) -> Result<GenOutput> {
    match spec.kind {
        GenKind::Convex => Ok(GenOutput::Drawing(convex_drawing(spec.size)?)),
        GenKind::RandomPoints => {
            Ok(GenOutput::Drawing(random_points_drawing(spec.size, spec.seed)?))
        }
        GenKind::CylSelfhosted => {
            Ok(GenOutput::Cylindrical(cyl_selfhosted(spec.size, spec.seed)?))
        }
        GenKind::CylRandom => Ok(GenOutput::Cylindrical(cyl_random(spec.size, spec.seed)?)),
    }
}

/// n integer points in strictly convex position with pairwise distinct
/// x-coordinates: jittered angles on a large circle, rounded to the grid
/// and rejection-resampled until the drawing is simple. Evenly spaced
/// exact circle points are useless here: their diagonals meet three and
/// more at a time.
pub fn convex_drawing(n: usize) -> Result<Drawing> {
    if n < 3 {
        return Err(Error::InvalidInput("convex drawing needs n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_4e3 ^ n as u64);
    let radius = (1i64 << 18) as f64;
    for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<Point<Rat>> = (0..n)
            .map(|k| {
                let theta =
                    std::f64::consts::TAU * (k as f64 + rng.gen_range(0.05..0.95)) / n as f64;
                Point::from_i64(
                    (radius * theta.cos()).round() as i64,
                    (radius * theta.sin()).round() as i64,
                )
            })
            .collect();
        let convex = (0..n).all(|k| {
            orient(&pts[k], &pts[(k + 1) % n], &pts[(k + 2) % n]) == Orientation::Ccw
        });
        let mut xs: Vec<_> = pts.iter().map(|p| p.x.clone()).collect();
        xs.sort();
        if !convex || xs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let Ok(d) = Drawing::straight_complete(pts) else {
            continue;
        };
        if validate_simple(&d).ok() {
            return Ok(d);
        }
    }
    Err(Error::GenerationFailure {
        attempts: MAX_ATTEMPTS,
        detail: format!("no simple convex drawing on n={n} within attempt budget"),
    })
}

/// Coordinate range for random points: large enough that degeneracies are
/// rare, small enough for the fast integer arithmetic path.
const GRID: i64 = 1 << 19;
const MAX_ATTEMPTS: usize = 500;

/// n uniform integer grid points, rejection-resampled until the complete
/// straight-line drawing validates (general position).
pub fn random_points_drawing(n: usize, seed: u64) -> Result<Drawing> {
    if n < 3 {
        return Err(Error::InvalidInput("random drawing needs n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut pts = Vec::with_capacity(n);
        for _ in 0..n {
            pts.push(Point::from_i64(
                rng.gen_range(-GRID..=GRID),
                rng.gen_range(-GRID..=GRID),
            ));
        }
        let Ok(d) = Drawing::straight_complete(pts) else {
            continue;
        };
        if validate_simple(&d).ok() {
            return Ok(d);
        }
    }
    Err(Error::GenerationFailure {
        attempts: MAX_ATTEMPTS,
        detail: format!("no simple drawing on n={n} within attempt budget"),
    })
}

/// Run the reduction on random drawings with n = delta + 2 vertices until
/// some root yields a cylinder of width exactly delta. Wide cylinders need
/// a near-universal vertex in the grown subgraph, so this can fail; use
/// `cyl_random` as the unconditional source.
pub fn cyl_selfhosted(delta: usize, seed: u64) -> Result<CylindricalDrawing> {
    if delta < 3 {
        return Err(Error::InvalidInput("cylinder width must be >= 3".into()));
    }
    let n = delta + 2;
    let attempts = 80;
    for k in 0..attempts {
        let Ok(d) = random_points_drawing(n, seed.wrapping_add(k as u64).wrapping_mul(0x9e3779b9))
        else {
            continue;
        };
        for root in 0..n {
            let Ok(g) = grow_plane_subgraph(&d, root) else {
                continue;
            };
            let (u, deg) = max_degree_non_root(&g);
            if deg != delta + 1 {
                continue;
            }
            if let Ok(c) = build_cylindrical(&d, &g, u, root) {
                if validate_cylindrical(&c, Some((&d, &g))).ok() {
                    return Ok(c);
                }
            }
        }
    }
    Err(Error::GenerationFailure {
        attempts,
        detail: format!("no self-hosted cylinder of width {delta} within attempt budget"),
    })
}

/// Random complete cylindrical drawing of width delta. Sides are random;
/// depths follow a tent profile (distance to the nearer endpoint along
/// the passed-over arc) plus random per-edge jitter, the shape real
/// annular drawings have: inner edges dip toward the hub, outer edges
/// bulge away, and two tents invert their order at most once. Fully
/// independent per-column height orders almost never validate beyond
/// small widths. Rejection-resampled until the validator passes.
pub fn cyl_random(delta: usize, seed: u64) -> Result<CylindricalDrawing> {
    use crate::cylinder::{inner_interval, outer_interval, CylEdge, Side, SideKind};
    if delta < 3 {
        return Err(Error::InvalidInput("cylinder width must be >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc11_7a2d0);
    // Attempts are ~0.2 ms each and acceptance at width 9 is ~1/3000, so a
    // roomy budget keeps the failure tail negligible.
    let attempts = 200_000;
    let num_edges = delta * (delta - 1) / 2;
    // Tent steps dominate any jitter difference.
    let step = num_edges as i64 + 1;
    for _ in 0..attempts {
        let mut edges = Vec::new();
        let mut jitter: Vec<i64> = (0..num_edges as i64).collect();
        jitter.shuffle(&mut rng);
        for i in 0..delta {
            for j in i + 1..delta {
                let (kind, columns) = if rng.gen_bool(0.5) {
                    (SideKind::Inner, inner_interval(i, j))
                } else {
                    (SideKind::Outer, outer_interval(i, j, delta))
                };
                edges.push(CylEdge {
                    i,
                    j,
                    side: Side { kind, columns },
                    heights: Default::default(),
                });
            }
        }
        for col in 0..delta {
            // (depth key, edge): deeper means farther from the boundary
            // circle, i.e. closer to the hub for inner edges.
            let mut passing: Vec<(i64, usize, bool)> = Vec::new();
            for (k, e) in edges.iter().enumerate() {
                let Some(pos) = e.side.columns.iter().position(|&c| c == col) else {
                    continue;
                };
                let arc = e.side.columns.len();
                let depth = pos.min(arc - 1 - pos) as i64;
                passing.push((
                    depth * step + jitter[k],
                    k,
                    e.side.kind == SideKind::Inner,
                ));
            }
            passing.sort();
            // Shallowest first: rank -1 / +1 sits nearest the column
            // vertex on its side.
            let mut below = 0i64;
            let mut above = 0i64;
            for &(_, k, inner) in &passing {
                let rank = if inner {
                    below -= 1;
                    below
                } else {
                    above += 1;
                    above
                };
                edges[k].heights.insert(col, rank);
            }
        }
        let c = CylindricalDrawing {
            delta,
            column_vertex: (0..delta).collect(),
            edges,
            provenance: None,
        };
        if validate_cylindrical(&c, None).ok() {
            return Ok(c);
        }
    }
    Err(Error::GenerationFailure {
        attempts,
        detail: format!("no valid random cylinder of width {delta} within attempt budget"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::crossing_matrix;

    #[test]
    fn convex_k4_one_crossing_pair() {
        let d = convex_drawing(4).unwrap();
        assert!(validate_simple(&d).ok());
        assert_eq!(crossing_matrix(&d).unwrap().crossing_pairs().count(), 1);
    }

    #[test]
    fn random_points_seed_42_validates() {
        let d = random_points_drawing(7, 42).unwrap();
        assert!(validate_simple(&d).ok());
        // Determinism: same seed, same bytes.
        let d2 = random_points_drawing(7, 42).unwrap();
        assert_eq!(d.to_json_string(), d2.to_json_string());
    }

    #[test]
    fn cyl_random_validates() {
        let c = cyl_random(5, 7).unwrap();
        assert_eq!(c.delta, 5);
        assert!(validate_cylindrical(&c, None).ok());
        let c2 = cyl_random(5, 7).unwrap();
        assert_eq!(c.to_json_string(), c2.to_json_string());
    }

    #[test]
    fn cyl_selfhosted_small() {
        let c = cyl_selfhosted(3, 1).unwrap();
        assert_eq!(c.delta, 3);
        assert!(validate_cylindrical(&c, None).ok());
    }
}
