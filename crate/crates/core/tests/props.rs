use num_traits::Signed;
use proptest::prelude::*;
use topomatch::geom::{
    orient, point_on_segment, segment_intersection, Frac128, Orientation, Point, Rat, Scalar,
    SegIntersection, Segment,
};
use topomatch::matching::{order_relation, Rel, XmEdge, ALL_ORDER_KINDS};

fn rp(x: i64, y: i64) -> Point<Rat> {
    Point::from_i64(x, y)
}

fn coord() -> impl Strategy<Value = i64> {
    -50i64..=50
}

fn point() -> impl Strategy<Value = (i64, i64)> {
    (coord(), coord())
}

fn segment() -> impl Strategy<Value = ((i64, i64), (i64, i64))> {
    (point(), point()).prop_filter("degenerate", |(a, b)| a != b)
}

/// Segment with distinct endpoint x-coordinates, usable as an XmEdge.
fn xm_segment() -> impl Strategy<Value = ((i64, i64), (i64, i64))> {
    (point(), point()).prop_filter("needs distinct x", |(a, b)| a.0 != b.0)
}

fn xm_edge(id: usize, (a, b): ((i64, i64), (i64, i64))) -> XmEdge {
    XmEdge::new((2 * id, 2 * id + 1), vec![rp(a.0, a.1), rp(b.0, b.1)]).unwrap()
}

fn flip(r: Rel) -> Rel {
    match r {
        Rel::BelowRel => Rel::AboveRel,
        Rel::AboveRel => Rel::BelowRel,
        Rel::Incomparable => Rel::Incomparable,
    }
}

proptest! {
    #[test]
    fn orient_antisymmetric(p in point(), q in point(), r in point()) {
        let (p, q, r) = (rp(p.0, p.1), rp(q.0, q.1), rp(r.0, r.1));
        let expected = match orient(&p, &q, &r) {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        };
        prop_assert_eq!(orient(&q, &p, &r), expected);
    }

    #[test]
    fn orient_translation_invariant(
        p in point(), q in point(), r in point(), dx in coord(), dy in coord()
    ) {
        let shift = |(x, y): (i64, i64)| rp(x + dx, y + dy);
        prop_assert_eq!(
            orient(&rp(p.0, p.1), &rp(q.0, q.1), &rp(r.0, r.1)),
            orient(&shift(p), &shift(q), &shift(r))
        );
    }

    #[test]
    fn orient_cyclic_invariant(p in point(), q in point(), r in point()) {
        let (p, q, r) = (rp(p.0, p.1), rp(q.0, q.1), rp(r.0, r.1));
        prop_assert_eq!(orient(&p, &q, &r), orient(&q, &r, &p));
    }

    #[test]
    fn intersection_symmetric(s in segment(), t in segment()) {
        let s = Segment::new(rp(s.0 .0, s.0 .1), rp(s.1 .0, s.1 .1));
        let t = Segment::new(rp(t.0 .0, t.0 .1), rp(t.1 .0, t.1 .1));
        prop_assert_eq!(segment_intersection(&s, &t), segment_intersection(&t, &s));
    }

    #[test]
    fn proper_point_on_both(s in segment(), t in segment()) {
        let s = Segment::new(rp(s.0 .0, s.0 .1), rp(s.1 .0, s.1 .1));
        let t = Segment::new(rp(t.0 .0, t.0 .1), rp(t.1 .0, t.1 .1));
        if let SegIntersection::Proper(p) = segment_intersection(&s, &t) {
            prop_assert!(point_on_segment(&p, &s));
            prop_assert!(point_on_segment(&p, &t));
            // Proper means interior to both.
            prop_assert!(p != s.a && p != s.b && p != t.a && p != t.b);
        }
    }

    #[test]
    fn frac128_matches_bigrational(
        an in -100i64..=100, ad in 1i64..=20, bn in -100i64..=100, bd in 1i64..=20
    ) {
        let fa = Frac128::from_i64(an) / Frac128::from_i64(ad);
        let fb = Frac128::from_i64(bn) / Frac128::from_i64(bd);
        let ra = Rat::from_i64(an) / Rat::from_i64(ad);
        let rb = Rat::from_i64(bn) / Rat::from_i64(bd);
        prop_assert_eq!((fa + fb).to_rat(), ra.clone() + rb.clone());
        prop_assert_eq!((fa - fb).to_rat(), ra.clone() - rb.clone());
        prop_assert_eq!((fa * fb).to_rat(), ra.clone() * rb.clone());
        if bn != 0 {
            prop_assert_eq!((fa / fb).to_rat(), ra.clone() / rb.clone());
        }
        prop_assert_eq!(fa.cmp(&fb), ra.cmp(&rb));
        prop_assert_eq!((-fa).to_rat(), -ra.clone());
        prop_assert_eq!(fa.abs().to_rat(), ra.abs());
        prop_assert_eq!(fa.is_positive(), ra.is_positive());
    }

    #[test]
    fn order_relation_antisymmetric(s in xm_segment(), t in xm_segment()) {
        let e = xm_edge(0, s);
        let f = xm_edge(1, t);
        for kind in ALL_ORDER_KINDS {
            prop_assert_eq!(order_relation(kind, &e, &f), flip(order_relation(kind, &f, &e)));
        }
    }

    #[test]
    fn order_relation_irreflexive(s in xm_segment()) {
        let e = xm_edge(0, s);
        for kind in ALL_ORDER_KINDS {
            prop_assert_eq!(order_relation(kind, &e, &e), Rel::Incomparable);
        }
    }

    #[test]
    fn order_relation_transitive(s in xm_segment(), t in xm_segment(), u in xm_segment()) {
        let e = xm_edge(0, s);
        let f = xm_edge(1, t);
        let g = xm_edge(2, u);
        for kind in ALL_ORDER_KINDS {
            if order_relation(kind, &e, &f) == Rel::BelowRel
                && order_relation(kind, &f, &g) == Rel::BelowRel
            {
                prop_assert_eq!(order_relation(kind, &e, &g), Rel::BelowRel);
            }
        }
    }

    #[test]
    fn disjoint_pairs_covered(s in xm_segment(), t in xm_segment()) {
        let e = xm_edge(0, s);
        let f = xm_edge(1, t);
        // Restrict to pairs with no common point at all.
        let se = Segment::new(e.chain[0].clone(), e.chain[1].clone());
        let sf = Segment::new(f.chain[0].clone(), f.chain[1].clone());
        if segment_intersection(&se, &sf) == SegIntersection::None {
            let comparable = ALL_ORDER_KINDS
                .iter()
                .any(|&k| order_relation(k, &e, &f) != Rel::Incomparable);
            prop_assert!(comparable);
        }
    }
}
