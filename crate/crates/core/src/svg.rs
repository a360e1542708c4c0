//! Static SVG snapshots of drawings: one polyline per edge, circles for
//! vertices, optional highlighted matching. Coordinates drop to f64 here
//! only; nothing downstream consumes them.

use std::fmt::Write;

use crate::grower::EdgePair;
use crate::model::Drawing;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

fn approx(r: &crate::geom::Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(0.0)
}

/// Render a drawing; edges in `highlight` are drawn thick and red.
pub fn render(d: &Drawing, highlight: &[EdgePair]) -> String {
    let xs: Vec<f64> = d.vertices.iter().map(|p| approx(&p.x)).collect();
    let ys: Vec<f64> = d.vertices.iter().map(|p| approx(&p.y)).collect();
    let chain_pts: Vec<Vec<(f64, f64)>> = d
        .edges
        .iter()
        .map(|e| e.chain.iter().map(|p| (approx(&p.x), approx(&p.y))).collect())
        .collect();
    let all_x = chain_pts
        .iter()
        .flatten()
        .map(|&(x, _)| x)
        .chain(xs.iter().copied());
    let all_y = chain_pts
        .iter()
        .flatten()
        .map(|&(_, y)| y)
        .chain(ys.iter().copied());
    let (min_x, max_x) = min_max(all_x);
    let (min_y, max_y) = min_max(all_y);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let tx = |x: f64| MARGIN + (x - min_x) * scale;
    // SVG y grows downward; flip.
    let ty = |y: f64| SIZE - MARGIN - (y - min_y) * scale;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    for (e, pts) in d.edges.iter().zip(&chain_pts) {
        let hl = highlight
            .iter()
            .any(|&(a, b)| (a, b) == e.pair());
        let points: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", tx(x), ty(y)))
            .collect();
        writeln!(
            out,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
            points.join(" "),
            if hl { "#cc2222" } else { "#888888" },
            if hl { 3.0 } else { 1.0 },
        )
        .unwrap();
    }
    for (i, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
        writeln!(
            out,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"#222244\"/>",
            tx(x),
            ty(y)
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"#222244\">{}</text>",
            tx(x) + 6.0,
            ty(y) - 6.0,
            i
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn min_max(it: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in it {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if lo > hi {
        (0.0, 1.0)
    } else {
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Point, Rat};

    #[test]
    fn renders_triangle() {
        let d = Drawing::straight_complete(vec![
            Point::<Rat>::from_i64(0, 0),
            Point::from_i64(4, 0),
            Point::from_i64(2, 3),
        ])
        .unwrap();
        let svg = render(&d, &[(0, 1)]);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.contains("#cc2222"));
    }
}
