//! Exact point configurations with audited edge sets.
//!
//! Ideal configurations (regular polygons, points on circles) have
//! irrational coordinates. These generators use rational points that keep
//! the exact symmetries that matter (antipodality, `x2 = x1 + x3`) and
//! check every threshold comparison exactly.

use std::collections::BTreeSet;

use num_traits::Signed;
use thiserror::Error;

use crate::geometry::{dist2, from_f64_grid, rat, Point, Rational};
use crate::quasi::{EdgePolicy, UncertaintyInterval};
use crate::simplicial::{build_rips, ComplexError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("parameter outside its admissible range")]
    OutOfRange,
    #[error("audit failed: minimum slack {0}")]
    AuditFailed(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Points plus the outcome of their distance audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub points: Vec<Point>,
    /// Simplex counts of the Rips complex at the audited scale.
    pub census: Vec<usize>,
    /// Smallest margin of any squared distance against the squared scale,
    /// signed so that positive means "on the intended side".
    pub min_slack: Rational,
}

/// `rational √3` surrogate used by the hexagon.
pub const SQRT3_SURROGATE: (i64, i64) = (97, 56);

/// Minimum slack of `d² ≤ t²` for intended edges and `d² > t²` otherwise.
/// The audit passes when the slack is positive, or zero on an intended edge.
fn audit(points: &[Point], scale: &Rational, intended: impl Fn(usize, usize) -> bool) -> (Rational, bool) {
    let t2 = scale * scale;
    let mut min: Option<Rational> = None;
    let mut ok = true;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d2 = dist2(&points[i], &points[j]).expect("same dimension");
            let slack = if intended(i, j) { &t2 - &d2 } else { &d2 - &t2 };
            ok &= if intended(i, j) {
                !slack.is_negative()
            } else {
                slack.is_positive()
            };
            if min.as_ref().is_none_or(|m| &slack < m) {
                min = Some(slack);
            }
        }
    }
    (min.unwrap_or_else(|| rat(0, 1)), ok)
}

fn report(
    points: Vec<Point>,
    scale: &Rational,
    intended: impl Fn(usize, usize) -> bool,
    dim_cap: usize,
) -> Result<FixtureReport, FixtureError> {
    let (min_slack, ok) = audit(&points, scale, intended);
    if !ok {
        return Err(FixtureError::AuditFailed(min_slack.to_string()));
    }
    let census = build_rips(&points, scale, dim_cap)?.census();
    Ok(FixtureReport {
        points,
        census,
        min_slack,
    })
}

fn antipodal(n: usize, i: usize, j: usize) -> bool {
    (i + n / 2) % n == j
}

/// Near-regular hexagon of circumradius `r` with `x_{i+3} = -x_i` and
/// `x2 = x1 + x3` exactly. At scale 1 its Rips complex is the octahedron.
pub fn hexagon_points(r: &Rational) -> Result<FixtureReport, FixtureError> {
    let r2 = r * r;
    if r2 <= rat(1, 4) || rat(3, 1) * &r2 > rat(1, 1) {
        return Err(FixtureError::OutOfRange);
    }
    let h = r * rat(SQRT3_SURROGATE.0, SQRT3_SURROGATE.1) / rat(2, 1);
    let half = r / rat(2, 1);
    let x1 = Point::xy(r.clone(), rat(0, 1));
    let x2 = Point::xy(half.clone(), h.clone());
    let x3 = Point::xy(-half, h);
    let neg = |p: &Point| p.scale(&rat(-1, 1));
    let points = vec![x1.clone(), x2.clone(), x3.clone(), neg(&x1), neg(&x2), neg(&x3)];
    report(points, &rat(1, 1), |i, j| !antipodal(6, i, j), 3)
}

fn circle_point(radius: &Rational, t: &Rational) -> Point {
    // rational parametrization by the tangent of the half angle
    let one = rat(1, 1);
    let d = &one + t * t;
    Point::xy(radius * (&one - t * t) / &d, radius * rat(2, 1) * t / &d)
}

/// `2k` points on a circle with exact antipodal symmetry whose Rips complex
/// at scale 1 is the boundary of the `k`-dimensional cross-polytope.
pub fn cross_polytope_points(k: usize) -> Result<FixtureReport, FixtureError> {
    if k < 2 {
        return Err(FixtureError::OutOfRange);
    }
    let kf = k as f64;
    let r_hi = 1.0 / (2.0 * (std::f64::consts::PI / (2.0 * kf)).cos());
    let radius = from_f64_grid((0.5 + r_hi) / 2.0, 1_000_000);
    let half: Vec<Point> = (0..k)
        .map(|j| {
            let t = from_f64_grid((j as f64 * std::f64::consts::PI / (2.0 * kf)).tan(), 1_000_000);
            circle_point(&radius, &t)
        })
        .collect();
    let mut points = half.clone();
    points.extend(half.iter().map(|p| p.scale(&rat(-1, 1))));
    report(points, &rat(1, 1), |i, j| !antipodal(2 * k, i, j), k)
}

/// Lift magnitude of the four-dimensional fixture.
pub const FOUR_D_LIFT: (i64, i64) = (1, 100);

/// Six points in R⁴: the hexagon for `r = 11/20`, with odd-numbered points
/// lifted to `(x, δ x / r)` and even-numbered points to `(x, 0)`.
pub fn four_d_points() -> Result<FixtureReport, FixtureError> {
    let r = rat(11, 20);
    let hex = hexagon_points(&r)?;
    let lift = rat(FOUR_D_LIFT.0, FOUR_D_LIFT.1) / &r;
    let points = hex
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let (x, y) = (p.x().clone(), p.y().clone());
            let extra = if i % 2 == 0 {
                (&x * &lift, &y * &lift)
            } else {
                (rat(0, 1), rat(0, 1))
            };
            Point::new(vec![x, y, extra.0, extra.1])
        })
        .collect();
    report(points, &rat(1, 1), |i, j| !antipodal(6, i, j), 3)
}

/// Barycenters of the triangles on points {1, 3, 5} and {2, 4, 6}.
pub fn four_d_barycenters(points: &[Point]) -> (Point, Point) {
    (
        Point::centroid([&points[0], &points[2], &points[4]]),
        Point::centroid([&points[1], &points[3], &points[5]]),
    )
}

/// Three segments of length 2 along the sides of a small triangle, each
/// overhanging one corner by 1/2 and the other by 13/10. Every pair of
/// points lies strictly between 1 and 3, so with the interval `(1, 3)` all
/// pairs are uncertain; the policy picks exactly the three segments.
pub fn crossing_triangle_fixture() -> Result<(Vec<Point>, UncertaintyInterval, EdgePolicy), FixtureError> {
    let side = 0.2f64;
    let corners: Vec<(f64, f64)> = (0..3)
        .map(|i| {
            let a = std::f64::consts::FRAC_PI_2 + i as f64 * 2.0 * std::f64::consts::PI / 3.0;
            let rc = side / 3f64.sqrt();
            (rc * a.cos(), rc * a.sin())
        })
        .collect();
    let mut points = Vec::new();
    for i in 0..3 {
        let (p, q) = (corners[i], corners[(i + 1) % 3]);
        let (dx, dy) = ((q.0 - p.0) / side, (q.1 - p.1) / side);
        let start = (p.0 - 0.5 * dx, p.1 - 0.5 * dy);
        let end = (q.0 + 1.3 * dx, q.1 + 1.3 * dy);
        for (x, y) in [start, end] {
            points.push(Point::xy(from_f64_grid(x, 1000), from_f64_grid(y, 1000)));
        }
    }
    let interval = UncertaintyInterval::new(rat(1, 1), rat(3, 1)).expect("valid");
    let (lo2, hi2) = (rat(1, 1), rat(9, 1));
    let mut min_slack: Option<Rational> = None;
    for i in 0..6 {
        for j in i + 1..6 {
            let d2 = dist2(&points[i], &points[j]).expect("planar");
            let slack = std::cmp::min(&d2 - &lo2, &hi2 - &d2);
            if min_slack.as_ref().is_none_or(|m| &slack < m) {
                min_slack = Some(slack);
            }
        }
    }
    let min_slack = min_slack.expect("pairs exist");
    if !min_slack.is_positive() {
        return Err(FixtureError::AuditFailed(min_slack.to_string()));
    }
    let policy = EdgePolicy::Explicit(BTreeSet::from([(0, 1), (2, 3), (4, 5)]));
    Ok((points, interval, policy))
}

/// Twelve rational points on the unit circle about 30 degrees apart, with a
/// lower observation that sees only neighbours and an upper one that also
/// sees second neighbours.
pub fn annulus_ring() -> Result<
    (
        Vec<Point>,
        (UncertaintyInterval, EdgePolicy),
        (UncertaintyInterval, EdgePolicy),
    ),
    FixtureError,
> {
    let one = rat(1, 1);
    let half: Vec<Point> = (0..6)
        .map(|j| {
            circle_point(
                &one,
                &from_f64_grid((j as f64 * std::f64::consts::PI / 12.0).tan(), 10_000),
            )
        })
        .collect();
    let mut points = half.clone();
    points.extend(half.iter().map(|p| p.scale(&rat(-1, 1))));
    let lower = UncertaintyInterval::new(rat(3, 5), rat(7, 10)).expect("valid");
    let upper = UncertaintyInterval::new(rat(11, 10), rat(13, 10)).expect("valid");
    // neighbours inside the lower bound, second neighbours between the
    // intervals, third neighbours beyond the upper bound
    let gap = |i: usize, j: usize| {
        let d = (i as i64 - j as i64).rem_euclid(12) as usize;
        d.min(12 - d)
    };
    let (s1, ok1) = audit(&points, lower.lower(), |i, j| gap(i, j) == 1);
    let (s2, ok2) = audit(&points, lower.upper(), |i, j| gap(i, j) == 1);
    let (s3, ok3) = audit(&points, upper.lower(), |i, j| gap(i, j) <= 2);
    let (s4, ok4) = audit(&points, upper.upper(), |i, j| gap(i, j) <= 2);
    if !(ok1 && ok2 && ok3 && ok4) {
        let worst = [s1, s2, s3, s4].into_iter().min().expect("four");
        return Err(FixtureError::AuditFailed(worst.to_string()));
    }
    Ok((points, (lower, EdgePolicy::None), (upper, EdgePolicy::All)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_numbers, Field};
    use crate::quasi::{build_quasi, pair_image_analysis};
    use crate::shadow::{build_shadow, shadow_betti};

    #[test]
    fn hexagon_octahedron() {
        let fx = hexagon_points(&rat(11, 20)).unwrap();
        assert_eq!(fx.census, vec![6, 12, 8, 0]);
        assert!(fx.min_slack.is_positive());
        let p = &fx.points;
        assert_eq!(p[1], p[0].add(&p[2]));
        assert_eq!(p[0].add(&p[2]).add(&p[4]), Point::origin(2));
        assert_eq!(hexagon_points(&rat(1, 2)).unwrap_err(), FixtureError::OutOfRange);
        assert_eq!(hexagon_points(&rat(6, 10)).unwrap_err(), FixtureError::OutOfRange);
    }

    #[test]
    fn cross_polytopes() {
        let fx = cross_polytope_points(3).unwrap();
        assert_eq!(&fx.census[..3], &[6, 12, 8]);
        let fx = cross_polytope_points(4).unwrap();
        assert_eq!(&fx.census[..4], &[8, 24, 32, 16]);
        for i in 0..4 {
            assert_eq!(fx.points[i].add(&fx.points[i + 4]), Point::origin(2));
        }
        let r = build_rips(&fx.points, &rat(1, 1), 4).unwrap();
        assert_eq!(betti_numbers(&r, Field::Rationals, 3).unwrap().betti, vec![1, 0, 0, 1]);
    }

    #[test]
    fn four_d_identification() {
        let fx = four_d_points().unwrap();
        assert_eq!(fx.census, vec![6, 12, 8, 0]);
        let (a, b) = four_d_barycenters(&fx.points);
        assert_eq!(a, b);
        assert_eq!(a, Point::origin(4));
    }

    #[test]
    fn crossing_triangle_audit() {
        let (points, interval, policy) = crossing_triangle_fixture().unwrap();
        let q = build_quasi(&points, &interval, &policy, 2).unwrap();
        assert_eq!(q.complex.census(), vec![6, 3, 0]);
        assert_eq!(
            betti_numbers(&q.complex, Field::Rationals, 1).unwrap().betti,
            vec![3, 0]
        );
        assert_eq!(shadow_betti(&build_shadow(&q.complex).unwrap()), (1, 1));
        let r = build_rips(&points, &rat(3, 1), 2).unwrap();
        assert_eq!(betti_numbers(&r, Field::Rationals, 1).unwrap().betti, vec![1, 0]);
        assert_eq!(shadow_betti(&build_shadow(&r).unwrap()), (1, 0));
    }

    #[test]
    fn annulus_audit() {
        let (points, lower, upper) = annulus_ring().unwrap();
        let rep = pair_image_analysis(&points, (&lower.0, &lower.1), (&upper.0, &upper.1)).unwrap();
        assert_eq!(rep.middle_scale, rat(9, 10));
        assert_eq!((rep.image_rank, rep.middle_b1, rep.shadow_b1), (1, 1, Some(1)));
    }
}
