//! Exact 2D geometry kernel: rational scalars, orientation, segment
//! intersection and polyline contact/crossing classification.
//!
//! All predicates are exact; no floating point is ever consulted. The
//! kernel is generic over the scalar so that drawings with small integer
//! coordinates can run on `Ratio<i128>` while arbitrary inputs fall back
//! to `BigRational`.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::DegeneracyError;

/// Canonical exact scalar: arbitrary-precision rational, always in lowest
/// terms with positive denominator.
pub type Rat = BigRational;

/// Scalar abstraction shared by the `BigRational` path and the bounded
/// `Frac128` fast path.
pub trait Scalar: Clone + Ord + Hash + Signed + Debug {
    fn from_i64(v: i64) -> Self;
    fn to_rat(&self) -> Rat;
}

impl Scalar for Rat {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
    fn to_rat(&self) -> Rat {
        self.clone()
    }
}

impl Scalar for Frac128 {
    fn from_i64(v: i64) -> Self {
        Frac128 { n: v as i128, d: 1 }
    }
    fn to_rat(&self) -> Rat {
        Rat::new(BigInt::from(self.n), BigInt::from(self.d))
    }
}

/// Exact fraction over `i128` that never reduces: with input coordinates
/// bounded by `SMALL_LIMIT`, numerators stay below 2^66 and denominators
/// below 2^44 (only division compounds denominators, and it happens at
/// most once per value), so cross-multiplied comparisons stay below
/// 2^110. Roughly an order of magnitude faster than `Ratio<i128>` on the
/// integer-heavy validation loops.
#[derive(Clone, Copy, Debug)]
pub struct Frac128 {
    /// Numerator; the fraction is not necessarily in lowest terms.
    n: i128,
    /// Denominator, always positive.
    d: i128,
}

impl Frac128 {
    fn reduce(self) -> Self {
        if self.d == 1 {
            return self;
        }
        let g = num_integer::Integer::gcd(&self.n, &self.d);
        Frac128 {
            n: self.n / g,
            d: self.d / g,
        }
    }
}

impl PartialEq for Frac128 {
    fn eq(&self, other: &Self) -> bool {
        self.n * other.d == other.n * self.d
    }
}
impl Eq for Frac128 {}

impl Ord for Frac128 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Denominators are positive, so cross-multiplication preserves
        // order.
        (self.n * other.d).cmp(&(other.n * self.d))
    }
}
impl PartialOrd for Frac128 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Frac128 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let r = self.reduce();
        r.n.hash(state);
        r.d.hash(state);
    }
}

impl std::ops::Add for Frac128 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.d == 1 && o.d == 1 {
            return Frac128 {
                n: self.n + o.n,
                d: 1,
            };
        }
        Frac128 {
            n: self.n * o.d + o.n * self.d,
            d: self.d * o.d,
        }
    }
}

impl std::ops::Sub for Frac128 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl std::ops::Mul for Frac128 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Frac128 {
            n: self.n * o.n,
            d: self.d * o.d,
        }
    }
}

impl std::ops::Div for Frac128 {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(o.n != 0, "division by zero");
        let sign = if o.n < 0 { -1 } else { 1 };
        Frac128 {
            n: self.n * o.d * sign,
            d: self.d * o.n.abs(),
        }
    }
}

impl std::ops::Rem for Frac128 {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        // Exact field: division never leaves a remainder.
        self - (self / o) * o
    }
}

impl std::ops::Neg for Frac128 {
    type Output = Self;
    fn neg(self) -> Self {
        Frac128 {
            n: -self.n,
            d: self.d,
        }
    }
}

impl Zero for Frac128 {
    fn zero() -> Self {
        Frac128 { n: 0, d: 1 }
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
}

impl One for Frac128 {
    fn one() -> Self {
        Frac128 { n: 1, d: 1 }
    }
}

impl num_traits::Num for Frac128 {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i128::from_str_radix(s, radix).map(|n| Frac128 { n, d: 1 })
    }
}

impl Signed for Frac128 {
    fn abs(&self) -> Self {
        Frac128 {
            n: self.n.abs(),
            d: self.d,
        }
    }
    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Self::zero()
        } else {
            *self - *other
        }
    }
    fn signum(&self) -> Self {
        Frac128 {
            n: self.n.signum(),
            d: 1,
        }
    }
    fn is_positive(&self) -> bool {
        self.n > 0
    }
    fn is_negative(&self) -> bool {
        self.n < 0
    }
}

/// Parse a rational from the interchange form `"p/q"` or `"p"`.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("bad rational numerator: {s:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("bad rational denominator: {s:?}"))?;
    if d <= BigInt::zero() {
        return Err(format!("rational denominator must be positive: {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Format a rational in the interchange form `"p/q"`, or `"p"` when the
/// denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point<T = Rat> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Point::new(T::from_i64(x), T::from_i64(y))
    }

    pub fn to_rat(&self) -> Point<Rat> {
        Point::new(self.x.to_rat(), self.y.to_rat())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment<T = Rat> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    /// Panics if `a == b`; degenerate segments are never meaningful here.
    pub fn new(a: Point<T>, b: Point<T>) -> Self {
        assert!(a != b, "degenerate segment");
        Segment { a, b }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// Sign of the exact determinant of (q-p, r-p).
pub fn orient<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Orientation {
    let det = cross(
        &(q.x.clone() - p.x.clone()),
        &(q.y.clone() - p.y.clone()),
        &(r.x.clone() - p.x.clone()),
        &(r.y.clone() - p.y.clone()),
    );
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::Ccw
    } else {
        Orientation::Cw
    }
}

fn cross<T: Scalar>(ux: &T, uy: &T, vx: &T, vy: &T) -> T {
    ux.clone() * vy.clone() - uy.clone() * vx.clone()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SegIntersection<T = Rat> {
    /// No common point.
    None,
    /// Interiors cross transversally at exactly one point.
    Proper(Point<T>),
    /// The segments touch at exactly one point which is an endpoint of at
    /// least one of them (for two segments of a simple drawing this is
    /// always a shared endpoint).
    Endpoint(Point<T>),
    /// The segments share a sub-segment of positive length.
    Overlap,
}

/// Exact classification of the intersection of two segments.
pub fn segment_intersection<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> SegIntersection<T> {
    // Bounding-box reject.
    if bbox_disjoint(s, t) {
        return SegIntersection::None;
    }
    let o1 = orient(&s.a, &s.b, &t.a);
    let o2 = orient(&s.a, &s.b, &t.b);
    let o3 = orient(&t.a, &t.b, &s.a);
    let o4 = orient(&t.a, &t.b, &s.b);

    use Orientation::Collinear;
    if o1 == Collinear && o2 == Collinear {
        // All four points on one line: 1D interval analysis.
        return collinear_case(s, t);
    }
    if o1 != o2 && o3 != o4 && o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear
    {
        return SegIntersection::Proper(line_intersection_point(s, t));
    }
    // At most one of the four orientations is collinear here; any common
    // point is an endpoint of one segment lying on the other.
    for (p, seg) in [(&t.a, s), (&t.b, s), (&s.a, t), (&s.b, t)] {
        if point_on_segment(p, seg) {
            return SegIntersection::Endpoint(p.clone());
        }
    }
    SegIntersection::None
}

fn bbox_disjoint<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> bool {
    let (sx0, sx1) = minmax(&s.a.x, &s.b.x);
    let (tx0, tx1) = minmax(&t.a.x, &t.b.x);
    if sx1 < tx0 || tx1 < sx0 {
        return true;
    }
    let (sy0, sy1) = minmax(&s.a.y, &s.b.y);
    let (ty0, ty1) = minmax(&t.a.y, &t.b.y);
    sy1 < ty0 || ty1 < sy0
}

fn minmax<'a, T: Ord>(a: &'a T, b: &'a T) -> (&'a T, &'a T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// True iff `p` lies on `seg` (endpoints included).
pub fn point_on_segment<T: Scalar>(p: &Point<T>, seg: &Segment<T>) -> bool {
    if orient(&seg.a, &seg.b, p) != Orientation::Collinear {
        return false;
    }
    let (x0, x1) = minmax(&seg.a.x, &seg.b.x);
    let (y0, y1) = minmax(&seg.a.y, &seg.b.y);
    x0 <= &p.x && &p.x <= x1 && y0 <= &p.y && &p.y <= y1
}

fn collinear_case<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> SegIntersection<T> {
    // Order points along the common line by the dominant axis.
    let dx = (s.a.x.clone() - s.b.x.clone()).abs();
    let dy = (s.a.y.clone() - s.b.y.clone()).abs();
    let key = |p: &Point<T>| if dx >= dy { p.x.clone() } else { p.y.clone() };
    let (slo, shi) = minmax_by_key(&s.a, &s.b, &key);
    let (tlo, thi) = minmax_by_key(&t.a, &t.b, &key);
    let lo = if key(slo) >= key(tlo) { slo } else { tlo };
    let hi = if key(shi) <= key(thi) { shi } else { thi };
    match key(lo).cmp(&key(hi)) {
        std::cmp::Ordering::Less => SegIntersection::Overlap,
        std::cmp::Ordering::Equal => SegIntersection::Endpoint(lo.clone()),
        std::cmp::Ordering::Greater => SegIntersection::None,
    }
}

fn minmax_by_key<'a, T: Scalar, K: Fn(&Point<T>) -> T>(
    a: &'a Point<T>,
    b: &'a Point<T>,
    key: &K,
) -> (&'a Point<T>, &'a Point<T>) {
    if key(a) <= key(b) {
        (a, b)
    } else {
        (b, a)
    }
}

/// Intersection point of the supporting lines; caller has established that
/// the segments properly cross.
fn line_intersection_point<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> Point<T> {
    let rx = s.b.x.clone() - s.a.x.clone();
    let ry = s.b.y.clone() - s.a.y.clone();
    let qx = t.b.x.clone() - t.a.x.clone();
    let qy = t.b.y.clone() - t.a.y.clone();
    let denom = cross(&rx, &ry, &qx, &qy);
    let wx = t.a.x.clone() - s.a.x.clone();
    let wy = t.a.y.clone() - s.a.y.clone();
    let u = cross(&wx, &wy, &qx, &qy) / denom;
    Point::new(s.a.x.clone() + u.clone() * rx, s.a.y.clone() + u * ry)
}

/// How two polylines meet at one point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContactKind {
    /// Transversal crossing of the two curves.
    Crossing,
    /// The curves meet but do not cross (tangential touch).
    Touch,
    /// Both polylines end at the point.
    SharedEndpoint,
    /// The point is an endpoint of exactly one polyline, interior to the
    /// other.
    EndpointPassThrough,
    /// The polylines share a sub-arc of positive length (witness point).
    Overlap,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Contact<T = Rat> {
    pub point: Point<T>,
    pub kind: ContactKind,
}

/// All points where two polylines meet, each classified. Consecutive
/// chain points must be distinct; each input must have at least two
/// points.
pub fn polyline_contacts<T: Scalar>(e: &[Point<T>], f: &[Point<T>]) -> Vec<Contact<T>> {
    assert!(e.len() >= 2 && f.len() >= 2, "polyline needs >= 2 points");
    let mut overlap_witnesses: Vec<Point<T>> = Vec::new();
    // (point, was a proper segment-interior crossing)
    let mut candidates: Vec<(Point<T>, bool)> = Vec::new();
    for i in 0..e.len() - 1 {
        let se = Segment::new(e[i].clone(), e[i + 1].clone());
        for j in 0..f.len() - 1 {
            let sf = Segment::new(f[j].clone(), f[j + 1].clone());
            match segment_intersection(&se, &sf) {
                SegIntersection::None => {}
                SegIntersection::Proper(p) => candidates.push((p, true)),
                SegIntersection::Endpoint(p) => candidates.push((p, false)),
                SegIntersection::Overlap => overlap_witnesses.push(se.a.clone()),
            }
        }
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0));

    let mut out: Vec<Contact<T>> = overlap_witnesses
        .into_iter()
        .map(|point| Contact {
            point,
            kind: ContactKind::Overlap,
        })
        .collect();
    let mut k = 0;
    while k < candidates.len() {
        let (p, proper) = &candidates[k];
        let mut hits = 1;
        while k + hits < candidates.len() && candidates[k + hits].0 == *p {
            hits += 1;
        }
        let end_e = *p == e[0] || *p == e[e.len() - 1];
        let end_f = *p == f[0] || *p == f[f.len() - 1];
        let kind = if end_e && end_f {
            ContactKind::SharedEndpoint
        } else if end_e || end_f {
            ContactKind::EndpointPassThrough
        } else if hits == 1 && *proper && !is_breakpoint(e, p) && !is_breakpoint(f, p) {
            // A lone transversal meeting of two segment interiors needs no
            // germ analysis.
            ContactKind::Crossing
        } else {
            classify_interior_contact(e, f, p)
        };
        out.push(Contact {
            point: p.clone(),
            kind,
        });
        k += hits;
    }
    out
}

fn is_breakpoint<T: Scalar>(chain: &[Point<T>], p: &Point<T>) -> bool {
    chain[1..chain.len() - 1].contains(p)
}

/// At an interior-interior meeting point, decide crossing vs. touch by the
/// cyclic order of the four local germ directions. Done in `BigRational`
/// because contact points can carry larger denominators than the input.
fn classify_interior_contact<T: Scalar>(e: &[Point<T>], f: &[Point<T>], p: &Point<T>) -> ContactKind {
    let p = p.to_rat();
    let de = germ_directions(&to_rat_chain(e), &p);
    let df = germ_directions(&to_rat_chain(f), &p);
    // Equal germ directions mean a shared sub-arc germ.
    for a in &de {
        for b in &df {
            if same_direction(a, b) {
                return ContactKind::Overlap;
            }
        }
    }
    let mut dirs: Vec<(&(Rat, Rat), bool)> =
        de.iter().map(|d| (d, true)).chain(df.iter().map(|d| (d, false))).collect();
    dirs.sort_by(|a, b| cyclic_cmp(a.0, b.0));
    let alternating = (0..4).all(|k| dirs[k].1 != dirs[(k + 1) % 4].1);
    if alternating {
        ContactKind::Crossing
    } else {
        ContactKind::Touch
    }
}

fn to_rat_chain<T: Scalar>(c: &[Point<T>]) -> Vec<Point<Rat>> {
    c.iter().map(|p| p.to_rat()).collect()
}

/// The two outgoing direction vectors of `chain` at interior point `p`.
fn germ_directions(chain: &[Point<Rat>], p: &Point<Rat>) -> Vec<(Rat, Rat)> {
    for i in 0..chain.len() - 1 {
        let seg = Segment::new(chain[i].clone(), chain[i + 1].clone());
        if *p == chain[i + 1] && i + 2 < chain.len() {
            // Interior breakpoint.
            return vec![dir(p, &chain[i]), dir(p, &chain[i + 2])];
        }
        if *p != seg.a && *p != seg.b && point_on_segment(p, &seg) {
            return vec![dir(p, &seg.a), dir(p, &seg.b)];
        }
    }
    panic!("contact point not interior to polyline");
}

fn dir(from: &Point<Rat>, to: &Point<Rat>) -> (Rat, Rat) {
    (to.x.clone() - from.x.clone(), to.y.clone() - from.y.clone())
}

fn same_direction(a: &(Rat, Rat), b: &(Rat, Rat)) -> bool {
    let c = cross(&a.0, &a.1, &b.0, &b.1);
    c.is_zero() && !(a.0.clone() * b.0.clone() + a.1.clone() * b.1.clone()).is_negative()
}

/// Counter-clockwise cyclic comparison of nonzero direction vectors,
/// starting from the positive x-axis.
pub fn cyclic_cmp(a: &(Rat, Rat), b: &(Rat, Rat)) -> std::cmp::Ordering {
    let half = |d: &(Rat, Rat)| -> u8 {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(&a.0, &a.1, &b.0, &b.1);
        // a before b iff turning from a to b is counter-clockwise.
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else if c.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    })
}

/// All transversal crossings between two polylines, shared polyline
/// endpoints excluded, de-duplicated.
pub fn polyline_crossings<T: Scalar>(
    e: &[Point<T>],
    f: &[Point<T>],
) -> Result<Vec<Point<T>>, DegeneracyError> {
    let mut out = Vec::new();
    for c in polyline_contacts(e, f) {
        match c.kind {
            ContactKind::Crossing => out.push(c.point),
            ContactKind::Touch | ContactKind::SharedEndpoint => {}
            ContactKind::Overlap => {
                return Err(DegeneracyError::Overlap {
                    witness: format!("{:?}", c.point.to_rat()),
                })
            }
            ContactKind::EndpointPassThrough => {
                return Err(DegeneracyError::EndpointPassThrough {
                    witness: format!("{:?}", c.point.to_rat()),
                })
            }
        }
    }
    Ok(out)
}

/// Number of transversal crossings, treating degeneracies as errors.
pub fn crossing_count<T: Scalar>(e: &[Point<T>], f: &[Point<T>]) -> Result<usize, DegeneracyError> {
    Ok(polyline_crossings(e, f)?.len())
}

/// Largest coordinate magnitude allowed on the `Ratio<i128>` fast path;
/// keeps every intermediate product well inside 127 bits.
const SMALL_LIMIT: i64 = 1 << 20;

/// Integer fast-path mirror of a rational chain, when every coordinate is
/// an integer of small magnitude.
pub fn to_small_chain(chain: &[Point<Rat>]) -> Option<Vec<Point<Frac128>>> {
    chain
        .iter()
        .map(|p| {
            let ix = rat_to_small(&p.x)?;
            let iy = rat_to_small(&p.y)?;
            Some(Point::new(ix, iy))
        })
        .collect()
}

fn rat_to_small(r: &Rat) -> Option<Frac128> {
    if !r.denom().is_one() {
        return None;
    }
    let v = i64::try_from(r.numer()).ok()?;
    if v.abs() > SMALL_LIMIT {
        return None;
    }
    Some(Frac128 {
        n: v as i128,
        d: 1,
    })
}
