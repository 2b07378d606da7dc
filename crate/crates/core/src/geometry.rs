//! Exact rational points and the planar predicates the rest of the crate is
//! built on.
//!
//! Every coordinate is a [`Rational`] (an arbitrary-precision fraction in
//! lowest terms), so distance thresholds, orientation signs and segment
//! crossings are decided without rounding. Threshold tests throughout the
//! crate compare squared distances, which keeps everything rational.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number in canonical form (positive denominator, reduced).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("expected planar points, got dimension {0}")]
    NotPlanar(usize),
    #[error("segment endpoints coincide")]
    DegenerateSegment,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {input:?} as an exact rational: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

/// Shorthand for `numer/denom` as a [`Rational`].
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"11/20"`, `"-3"`, `"0.55"` or `"1.5e-2"` exactly.
///
/// Decimal strings become exact decimal fractions; no floating point is
/// involved at any step.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: input.to_string(),
        reason,
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err("empty string"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err("bad numerator"))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| err("bad exponent"))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err("no digits"));
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err("unexpected character"));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(&all_digits).map_err(|_| err("bad digits"))?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Decimal approximation used only for display (SVG output, reports).
pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

/// Closest rational with denominator `denom` to a float. Used by fixture
/// generators to seed coordinates that are then audited exactly.
pub fn from_f64_grid(value: f64, denom: i64) -> Rational {
    rat((value * denom as f64).round() as i64, denom)
}

/// A point in Euclidean n-space with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn xy(x: Rational, y: Rational) -> Self {
        Self { coords: vec![x, y] }
    }

    /// Integer-ratio convenience constructor for planar points.
    pub fn planar(x: (i64, i64), y: (i64, i64)) -> Self {
        Self::xy(rat(x.0, x.1), rat(y.0, y.1))
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn x(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn y(&self) -> &Rational {
        &self.coords[1]
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }

    /// Centroid of a nonempty set of points.
    pub fn centroid<'a>(points: impl IntoIterator<Item = &'a Point>) -> Point {
        let mut iter = points.into_iter();
        let first = iter.next().expect("centroid of empty set").clone();
        let (sum, count) = iter.fold((first, 1i64), |(acc, n), p| (acc.add(p), n + 1));
        sum.scale(&rat(1, count))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exact squared Euclidean distance.
pub fn dist2(p: &Point, q: &Point) -> Result<Rational, GeometryError> {
    if p.dim() != q.dim() {
        return Err(GeometryError::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    Ok(p.coords
        .iter()
        .zip(&q.coords)
        .map(|(a, b)| {
            let d = a - b;
            &d * &d
        })
        .fold(Rational::zero(), |acc, x| acc + x))
}

/// Sign of a planar turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        self as i8
    }

    fn from_value(value: &Rational) -> Self {
        if value.is_positive() {
            Orientation::CounterClockwise
        } else if value.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// `det(q - p, r - p)` for planar points.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    let (ux, uy) = (q.x() - p.x(), q.y() - p.y());
    let (vx, vy) = (r.x() - p.x(), r.y() - p.y());
    ux * vy - uy * vx
}

/// Orientation of the triple `(p, q, r)`; counterclockwise is positive.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    debug_assert!(p.dim() == 2 && q.dim() == 2 && r.dim() == 2);
    Orientation::from_value(&cross(p, q, r))
}

/// True when `p` lies on the closed segment `[a, b]`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, p) != Orientation::Collinear {
        return false;
    }
    let within = |v: &Rational, lo: &Rational, hi: &Rational| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(p.x(), a.x(), b.x()) && within(p.y(), a.y(), b.y())
}

/// A nondegenerate planar segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        for p in [&a, &b] {
            if p.dim() != 2 {
                return Err(GeometryError::NotPlanar(p.dim()));
            }
        }
        if a == b {
            return Err(GeometryError::DegenerateSegment);
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    /// Same segment with endpoints in lexicographic order.
    pub fn normalized(&self) -> Segment {
        if self.a <= self.b {
            self.clone()
        } else {
            Segment {
                a: self.b.clone(),
                b: self.a.clone(),
            }
        }
    }

    pub fn has_endpoint(&self, p: &Point) -> bool {
        &self.a == p || &self.b == p
    }

    pub fn contains(&self, p: &Point) -> bool {
        on_segment(p, &self.a, &self.b)
    }
}

/// Result of intersecting two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Disjoint,
    /// A single common point that is not an endpoint of both segments.
    Point(Point),
    /// A single common point that is an endpoint of both segments.
    SharedEndpoint(Point),
    /// Collinear segments sharing a piece of positive length
    /// (endpoints in lexicographic order).
    Overlap(Segment),
}

impl SegmentIntersection {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, SegmentIntersection::Disjoint)
    }
}

pub fn segment_intersection(s: &Segment, t: &Segment) -> SegmentIntersection {
    let (a, b, c, d) = (&s.a, &s.b, &t.a, &t.b);
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    let single = |p: Point| {
        if s.has_endpoint(&p) && t.has_endpoint(&p) {
            SegmentIntersection::SharedEndpoint(p)
        } else {
            SegmentIntersection::Point(p)
        }
    };

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // Along a common line lexicographic order of points is a linear order.
        let s = s.normalized();
        let t = t.normalized();
        let lo = std::cmp::max(&s.a, &t.a);
        let hi = std::cmp::min(&s.b, &t.b);
        return match lo.cmp(hi) {
            Ordering::Greater => SegmentIntersection::Disjoint,
            Ordering::Equal => single(lo.clone()),
            Ordering::Less => SegmentIntersection::Overlap(Segment {
                a: lo.clone(),
                b: hi.clone(),
            }),
        };
    }

    if o1.sign() * o2.sign() > 0 || o3.sign() * o4.sign() > 0 {
        return SegmentIntersection::Disjoint;
    }

    // Unique crossing point on the supporting lines.
    let r = b.sub(a);
    let q = d.sub(c);
    let denom = &r.coords[0] * &q.coords[1] - &r.coords[1] * &q.coords[0];
    let ca = c.sub(a);
    let numer = &ca.coords[0] * &q.coords[1] - &ca.coords[1] * &q.coords[0];
    let t_param = numer / denom;
    let p = a.add(&r.scale(&t_param));
    single(p)
}

/// Position of a point relative to a closed triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

pub fn point_in_triangle(x: &Point, a: &Point, b: &Point, c: &Point) -> Containment {
    let base = orient(a, b, c);
    if base == Orientation::Collinear {
        return if on_segment(x, a, b) || on_segment(x, b, c) || on_segment(x, c, a) {
            Containment::Boundary
        } else {
            Containment::Outside
        };
    }
    let normalize = |o: Orientation| o.sign() * base.sign();
    let signs = [
        normalize(orient(a, b, x)),
        normalize(orient(b, c, x)),
        normalize(orient(c, a, x)),
    ];
    if signs.iter().any(|&s| s < 0) {
        Containment::Outside
    } else if signs.iter().all(|&s| s > 0) {
        Containment::Inside
    } else {
        Containment::Boundary
    }
}

/// Twice the signed area of a closed polygon (positive when counterclockwise).
pub fn signed_area2(polygon: &[Point]) -> Rational {
    let n = polygon.len();
    (0..n)
        .map(|i| {
            let p = &polygon[i];
            let q = &polygon[(i + 1) % n];
            p.x() * q.y() - q.x() * p.y()
        })
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// Strict point-in-polygon by crossing parity. The caller guarantees `p` is
/// not on the polygon boundary.
pub fn point_in_polygon(p: &Point, polygon: &[Point]) -> bool {
    let n = polygon.len();
    let mut inside = false;
    for i in 0..n {
        let a = &polygon[i];
        let b = &polygon[(i + 1) % n];
        if (a.y() > p.y()) != (b.y() > p.y()) {
            // x-coordinate of the edge at height p.y, compared without division.
            let lhs = (p.x() - a.x()) * (b.y() - a.y());
            let rhs = (b.x() - a.x()) * (p.y() - a.y());
            let crosses = if b.y() > a.y() { lhs < rhs } else { lhs > rhs };
            if crosses {
                inside = !inside;
            }
        }
    }
    inside
}

/// Rational upper bound on `|q - sqrt(n)|`, from `|q^2 - n| / q` (valid for q > 0).
pub fn sqrt_error_bound(q: &Rational, n: i64) -> Rational {
    let diff = q * q - Rational::from_integer(BigInt::from(n));
    diff.abs() / q
}

/// Rational `q` with `|q - sqrt(n)| < tol`, certified by [`sqrt_error_bound`].
pub fn sqrt_approx(n: i64, tol: &Rational) -> Rational {
    // Newton iteration from above stays rational and converges quadratically.
    let target = Rational::from_integer(BigInt::from(n));
    let mut q = Rational::from_integer(BigInt::from(n.max(1)));
    let two = rat(2, 1);
    for _ in 0..128 {
        if &sqrt_error_bound(&q, n) < tol {
            break;
        }
        q = (&q + &target / &q) / &two;
        // Keep denominators bounded by snapping to a nearby small fraction.
        q = limit_denominator(&q, 1 << 40);
    }
    q
}

/// Best rational approximation with denominator at most `max_denom`.
pub fn limit_denominator(value: &Rational, max_denom: i64) -> Rational {
    let max_denom = BigInt::from(max_denom);
    if value.denom() <= &max_denom {
        return value.clone();
    }
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let mut n = value.numer().clone();
    let mut d = value.denom().clone();
    loop {
        let a = num_integer::Integer::div_floor(&n, &d);
        let q2 = &q0 + &a * &q1;
        if q2 > max_denom {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let rem = &n - &a * &d;
        n = std::mem::replace(&mut d, rem);
        if d.is_zero() {
            break;
        }
    }
    Rational::new(p1, q1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::planar(x, y)
    }

    #[test]
    fn dist2_examples() {
        assert_eq!(dist2(&p((0, 1), (0, 1)), &p((3, 5), (4, 5))).unwrap(), rat(1, 1));
        let q = p((7, 3), (-2, 9));
        assert_eq!(dist2(&q, &q).unwrap(), rat(0, 1));
        let o = Point::origin(4);
        let e = Point::new(vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(dist2(&o, &e).unwrap(), rat(1, 1));
        assert!(matches!(
            dist2(&o, &q),
            Err(GeometryError::DimensionMismatch { left: 4, right: 2 })
        ));
    }

    #[test]
    fn orient_examples() {
        let o = p((0, 1), (0, 1));
        let ex = p((1, 1), (0, 1));
        let ey = p((0, 1), (1, 1));
        assert_eq!(orient(&o, &ex, &ey).sign(), 1);
        assert_eq!(orient(&o, &ex, &p((2, 1), (0, 1))).sign(), 0);
        assert_eq!(orient(&o, &ey, &ex).sign(), -1);
    }

    #[test]
    fn segment_intersection_examples() {
        let seg = |a: (i64, i64), b: (i64, i64)| Segment::new(p((a.0, 1), (a.1, 1)), p((b.0, 1), (b.1, 1))).unwrap();
        assert_eq!(
            segment_intersection(&seg((0, 0), (1, 1)), &seg((0, 1), (1, 0))),
            SegmentIntersection::Point(p((1, 2), (1, 2)))
        );
        assert_eq!(
            segment_intersection(&seg((0, 0), (1, 0)), &seg((0, 1), (1, 1))),
            SegmentIntersection::Disjoint
        );
        assert_eq!(
            segment_intersection(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))),
            SegmentIntersection::Overlap(seg((1, 0), (2, 0)))
        );
        assert_eq!(
            segment_intersection(&seg((0, 0), (1, 0)), &seg((1, 0), (1, 1))),
            SegmentIntersection::SharedEndpoint(p((1, 1), (0, 1)))
        );
        // collinear, touching only at a shared endpoint
        assert_eq!(
            segment_intersection(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))),
            SegmentIntersection::SharedEndpoint(p((1, 1), (0, 1)))
        );
        // T-junction: endpoint of one in the interior of the other
        assert_eq!(
            segment_intersection(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 1))),
            SegmentIntersection::Point(p((1, 1), (0, 1)))
        );
        // collinear but separated
        assert!(segment_intersection(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))).is_disjoint());
    }

    #[test]
    fn degenerate_segment_rejected() {
        let a = p((1, 1), (1, 1));
        assert_eq!(Segment::new(a.clone(), a), Err(GeometryError::DegenerateSegment));
    }

    #[test]
    fn point_in_triangle_examples() {
        let a = p((0, 1), (0, 1));
        let b = p((1, 1), (0, 1));
        let c = p((0, 1), (1, 1));
        assert_eq!(point_in_triangle(&p((1, 3), (1, 3)), &a, &b, &c), Containment::Inside);
        assert_eq!(point_in_triangle(&p((1, 2), (0, 1)), &a, &b, &c), Containment::Boundary);
        assert_eq!(point_in_triangle(&p((2, 1), (2, 1)), &a, &b, &c), Containment::Outside);
        // same answers for the clockwise vertex order
        assert_eq!(point_in_triangle(&p((1, 3), (1, 3)), &a, &c, &b), Containment::Inside);
        // collinear "triangle"
        let d = p((2, 1), (0, 1));
        assert_eq!(point_in_triangle(&p((3, 2), (0, 1)), &a, &b, &d), Containment::Boundary);
        assert_eq!(point_in_triangle(&p((1, 3), (1, 3)), &a, &b, &d), Containment::Outside);
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("11/20").unwrap(), rat(11, 20));
        assert_eq!(parse_rational("0.55").unwrap(), rat(11, 20));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("1.5e-2").unwrap(), rat(3, 200));
        assert_eq!(parse_rational("2e3").unwrap(), rat(2000, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn sqrt_approximation_is_certified() {
        let tol = rat(1, 1_000_000);
        let q = sqrt_approx(3, &tol);
        assert!(sqrt_error_bound(&q, 3) < tol);
    }

    #[test]
    fn polygon_helpers() {
        let square = vec![
            p((0, 1), (0, 1)),
            p((1, 1), (0, 1)),
            p((1, 1), (1, 1)),
            p((0, 1), (1, 1)),
        ];
        assert_eq!(signed_area2(&square), rat(2, 1));
        assert!(point_in_polygon(&p((1, 2), (1, 2)), &square));
        assert!(!point_in_polygon(&p((3, 2), (1, 2)), &square));
    }
}
