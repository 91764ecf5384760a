//! Exact planar primitives: points, directions on `S¹`, unit-radius
//! circular arcs, the `[δ, 2δ]` arc partition rule, and maximal
//! δ-separated direction nets.

use crate::{Error, Result};

pub const TAU: f64 = std::f64::consts::TAU;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dist(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Angle of the vector `other - self`.
    pub fn angle_to(&self, other: &Point2) -> f64 {
        (other.y - self.y).atan2(other.x - self.x)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// A direction on `S¹`, stored as an angle normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
}

impl Direction {
    pub fn new(theta: f64) -> Self {
        Direction {
            theta: normalize_angle(theta),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn unit_vector(&self) -> Point2 {
        Point2::new(self.theta.cos(), self.theta.sin())
    }

    /// Angular (arclength) distance on `S¹`, in `[0, π]`.
    pub fn dist(&self, other: &Direction) -> f64 {
        circular_dist(self.theta, other.theta)
    }

    /// Angular distance after antipodal identification, in `[0, π/2]`.
    pub fn dist_antipodal(&self, other: &Direction) -> f64 {
        let d = circular_dist(self.theta, other.theta);
        d.min(std::f64::consts::PI - d)
    }
}

/// Normalize an angle to `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can return TAU when theta is a tiny negative number.
    if t >= TAU {
        t - TAU
    } else {
        t
    }
}

/// Arclength distance between two angles on `S¹`, in `[0, π]`.
pub fn circular_dist(a: f64, b: f64) -> f64 {
    let d = (normalize_angle(a) - normalize_angle(b)).abs();
    d.min(TAU - d)
}

/// An arc of a radius-1 circle. `span` is signed: positive sweeps
/// counterclockwise from `start`. The arclength equals `|span|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitArc {
    pub centre: Point2,
    pub start: f64,
    pub span: f64,
}

impl UnitArc {
    pub fn new(centre: Point2, start: f64, span: f64) -> Self {
        debug_assert!(span.abs() <= TAU + 1e-9);
        UnitArc {
            centre,
            start,
            span,
        }
    }

    /// The full unit circle, traversed counterclockwise from angle 0.
    pub fn full_circle(centre: Point2) -> Self {
        UnitArc {
            centre,
            start: 0.0,
            span: TAU,
        }
    }

    pub fn arclength(&self) -> f64 {
        self.span.abs()
    }

    pub fn is_full_circle(&self) -> bool {
        self.span.abs() >= TAU - 1e-15
    }

    /// Angle on the containing circle at arclength `s` from the start,
    /// following the sign of `span`.
    pub fn angle_at(&self, s: f64) -> f64 {
        self.start + self.span.signum() * s
    }

    pub fn point_at_angle(&self, phi: f64) -> Point2 {
        Point2::new(self.centre.x + phi.cos(), self.centre.y + phi.sin())
    }

    pub fn start_point(&self) -> Point2 {
        self.point_at_angle(self.start)
    }

    pub fn end_point(&self) -> Point2 {
        self.point_at_angle(self.start + self.span)
    }

    /// Midpoint of the arc (not the circle centre).
    pub fn midpoint(&self) -> Point2 {
        self.point_at_angle(self.start + self.span / 2.0)
    }
}

/// The point on `arc` at arclength `s` from its start endpoint, in the
/// direction of the span's sign. Radius is exactly 1, so arclength and
/// angle coincide.
pub fn arc_point_at(arc: &UnitArc, s: f64) -> Result<Point2> {
    let max = arc.arclength();
    if !(0.0..=max + 1e-15).contains(&s) {
        return Err(Error::ArcParamOutOfRange { s, max });
    }
    Ok(arc.point_at_angle(arc.angle_at(s)))
}

/// Rotate `p` about `pivot` by `angle` (counterclockwise positive).
pub fn rotate_about(p: Point2, pivot: Point2, angle: f64) -> Point2 {
    let (sin, cos) = angle.sin_cos();
    let dx = p.x - pivot.x;
    let dy = p.y - pivot.y;
    Point2::new(
        pivot.x + cos * dx - sin * dy,
        pivot.y + sin * dx + cos * dy,
    )
}

/// Result of [`partition_arc`]: cut points in clockwise order along the
/// arc, and the equal-length sub-arcs in the arc's own orientation.
#[derive(Debug, Clone)]
pub struct ArcPartition {
    pub points: Vec<Point2>,
    pub subarcs: Vec<UnitArc>,
}

/// Partition an arc into `N = ceil(L / 2δ)` equal pieces, each of length
/// `L/N ∈ [δ, 2δ]`. When `L ≤ δ` the partition is trivial: the arc itself,
/// with its two endpoints. Cut points are returned in clockwise order; a
/// full circle is treated as half-open (N points, cyclic).
pub fn partition_arc(arc: &UnitArc, delta: f64) -> Result<ArcPartition> {
    if delta <= 0.0 {
        return Err(Error::InvalidDelta(delta));
    }
    let len = arc.arclength();
    if len <= delta {
        return Ok(ArcPartition {
            points: clockwise(vec![arc.start_point(), arc.end_point()], arc),
            subarcs: vec![*arc],
        });
    }
    let n = (len / (2.0 * delta)).ceil() as usize;
    let piece = arc.span / n as f64;

    let full = arc.is_full_circle();
    let cut_count = if full { n } else { n + 1 };
    let mut cut_angles = Vec::with_capacity(cut_count);
    for j in 0..cut_count {
        cut_angles.push(arc.start + piece * j as f64);
    }
    let points: Vec<Point2> = cut_angles
        .iter()
        .map(|&phi| arc.point_at_angle(phi))
        .collect();

    let subarcs: Vec<UnitArc> = (0..n)
        .map(|j| UnitArc::new(arc.centre, arc.start + piece * j as f64, piece))
        .collect();

    Ok(ArcPartition {
        points: clockwise(points, arc),
        subarcs,
    })
}

/// Clockwise order = traversal against a counterclockwise span.
fn clockwise(mut points: Vec<Point2>, arc: &UnitArc) -> Vec<Point2> {
    if arc.span > 0.0 {
        points.reverse();
    }
    points
}

/// A δ-separated, δ-covering set of angles.
#[derive(Debug, Clone)]
pub struct AngularNet {
    pub delta: f64,
    pub angles: Vec<f64>,
}

impl AngularNet {
    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Circular gaps between consecutive net angles (assumes the net spans
    /// all of S¹); used as quadrature weights for direction integrals.
    pub fn gaps(&self) -> Vec<f64> {
        let n = self.angles.len();
        (0..n)
            .map(|i| {
                let next = self.angles[(i + 1) % n];
                normalize_angle(next - self.angles[i])
            })
            .collect()
    }
}

/// The domain a direction net is swept over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngularDomain {
    FullCircle,
    /// Half-open interval `[low, low + length)` of angles.
    Interval { low: f64, length: f64 },
}

/// Deterministic greedy sweep from the domain's low endpoint with step
/// `delta`. For the full circle this yields `floor(2π/δ)` angles, which is
/// at least `1/(2δ)`.
pub fn max_separated_directions(domain: AngularDomain, delta: f64) -> Result<AngularNet> {
    let (low, length) = match domain {
        AngularDomain::FullCircle => (0.0, TAU),
        AngularDomain::Interval { low, length } => (low, length),
    };
    if delta <= 0.0 || delta >= length {
        return Err(Error::OutOfRange {
            name: "delta",
            value: delta,
            range: "(0, interval length)",
        });
    }
    let mut angles = Vec::new();
    let mut k = 0u64;
    loop {
        let step = delta * k as f64;
        if step >= length {
            break;
        }
        angles.push(normalize_angle(low + step));
        k += 1;
    }
    Ok(AngularNet { delta, angles })
}

/// If `|y - x|` is within `tol` of 1, return the direction of `y - x`;
/// otherwise reject with the measured distance.
pub fn unit_pair_direction(x: Point2, y: Point2, tol: f64) -> Result<Direction> {
    let d = x.dist(&y);
    if (d - 1.0).abs() <= tol {
        Ok(Direction::new(x.angle_to(&y)))
    } else {
        Err(Error::NotUnitDistance { distance: d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    const TOL: f64 = crate::GEOM_TOL;

    /// Independent 2x2 rotation-matrix oracle.
    fn rotate_oracle(p: Point2, pivot: Point2, angle: f64) -> Point2 {
        let m = [
            [angle.cos(), -angle.sin()],
            [angle.sin(), angle.cos()],
        ];
        let v = [p.x - pivot.x, p.y - pivot.y];
        Point2::new(
            pivot.x + m[0][0] * v[0] + m[0][1] * v[1],
            pivot.y + m[1][0] * v[0] + m[1][1] * v[1],
        )
    }

    #[test]
    fn rotate_quarter_turn() {
        let r = rotate_about(Point2::ORIGIN, Point2::new(1.0, 0.0), FRAC_PI_2);
        assert_abs_diff_eq!(r.x, 1.0, epsilon = TOL);
        assert_abs_diff_eq!(r.y, -1.0, epsilon = TOL);
        let o = rotate_oracle(Point2::ORIGIN, Point2::new(1.0, 0.0), FRAC_PI_2);
        assert_abs_diff_eq!(r.x, o.x, epsilon = TOL);
        assert_abs_diff_eq!(r.y, o.y, epsilon = TOL);
    }

    #[test]
    fn rotate_identity_and_half_turn() {
        let p = Point2::new(0.3, -1.7);
        let r = rotate_about(p, Point2::new(2.0, 5.0), 0.0);
        assert_eq!(r, p);
        let h = rotate_about(Point2::new(2.0, 0.0), Point2::ORIGIN, PI);
        assert_abs_diff_eq!(h.x, -2.0, epsilon = TOL);
        assert_abs_diff_eq!(h.y, 0.0, epsilon = TOL);
    }

    #[test]
    fn arc_point_endpoints() {
        let arc = UnitArc::new(Point2::ORIGIN, 0.0, FRAC_PI_2);
        let p0 = arc_point_at(&arc, 0.0).unwrap();
        assert_abs_diff_eq!(p0.x, 1.0, epsilon = TOL);
        assert_abs_diff_eq!(p0.y, 0.0, epsilon = TOL);
        let p1 = arc_point_at(&arc, FRAC_PI_2).unwrap();
        assert_abs_diff_eq!(p1.x, 0.0, epsilon = TOL);
        assert_abs_diff_eq!(p1.y, 1.0, epsilon = TOL);
    }

    #[test]
    fn arc_point_clockwise_parameterization() {
        // Clockwise arc from angle pi; at arclength pi/4 the angle is 3pi/4.
        let arc = UnitArc::new(Point2::new(1.0, 0.0), PI, -FRAC_PI_2);
        let p = arc_point_at(&arc, PI / 4.0).unwrap();
        assert_abs_diff_eq!(p.x, 1.0 + (PI - PI / 4.0).cos(), epsilon = TOL);
        assert_abs_diff_eq!(p.y, (PI - PI / 4.0).sin(), epsilon = TOL);
    }

    #[test]
    fn arc_point_out_of_range() {
        let arc = UnitArc::new(Point2::ORIGIN, 0.0, FRAC_PI_2);
        assert!(arc_point_at(&arc, 2.0).is_err());
        assert!(arc_point_at(&arc, -0.1).is_err());
    }

    #[test]
    fn partition_full_circle_two_pieces() {
        let arc = UnitArc::full_circle(Point2::ORIGIN);
        let part = partition_arc(&arc, FRAC_PI_2).unwrap();
        assert_eq!(part.subarcs.len(), 2);
        assert_eq!(part.points.len(), 2);
        for sub in &part.subarcs {
            assert_abs_diff_eq!(sub.arclength(), PI, epsilon = TOL);
        }
    }

    #[test]
    fn partition_trivial_when_short() {
        let arc = UnitArc::new(Point2::ORIGIN, 1.0, 0.2);
        let part = partition_arc(&arc, 0.3).unwrap();
        assert_eq!(part.subarcs.len(), 1);
        assert_eq!(part.points.len(), 2);
        assert_eq!(part.subarcs[0], arc);
    }

    #[test]
    fn partition_three_delta_arc() {
        let delta = 0.01;
        let arc = UnitArc::new(Point2::ORIGIN, 0.0, 3.0 * delta);
        let part = partition_arc(&arc, delta).unwrap();
        assert_eq!(part.subarcs.len(), 2);
        for sub in &part.subarcs {
            assert_abs_diff_eq!(sub.arclength(), 1.5 * delta, epsilon = TOL);
        }
    }

    #[test]
    fn partition_rejects_bad_delta() {
        let arc = UnitArc::full_circle(Point2::ORIGIN);
        assert!(partition_arc(&arc, 0.0).is_err());
        assert!(partition_arc(&arc, -1.0).is_err());
    }

    #[test]
    fn net_uniform_quarters() {
        let net = max_separated_directions(AngularDomain::FullCircle, FRAC_PI_2).unwrap();
        assert_eq!(net.len(), 4);
        for (i, expected) in [0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2].iter().enumerate() {
            assert_abs_diff_eq!(net.angles[i], expected, epsilon = TOL);
        }
    }

    #[test]
    fn net_size_lower_bound() {
        let delta = TAU / 1000.0;
        let net = max_separated_directions(AngularDomain::FullCircle, delta).unwrap();
        assert_eq!(net.len(), 1000);
        assert!(net.len() as f64 >= 1.0 / (2.0 * delta));
    }

    #[test]
    fn net_on_interval() {
        let net = max_separated_directions(
            AngularDomain::Interval {
                low: 0.0,
                length: PI / 10.0,
            },
            PI / 100.0,
        )
        .unwrap();
        assert_eq!(net.len(), 10);
    }

    #[test]
    fn unit_pair_cases() {
        let d = unit_pair_direction(Point2::ORIGIN, Point2::new(1.0, 0.0), 0.0).unwrap();
        assert_eq!(d.theta(), 0.0);
        let d = unit_pair_direction(Point2::ORIGIN, Point2::new(0.6, 0.8), 1e-12).unwrap();
        assert_abs_diff_eq!(d.theta(), 0.8f64.atan2(0.6), epsilon = TOL);
        match unit_pair_direction(Point2::ORIGIN, Point2::new(1.01, 0.0), 1e-3) {
            Err(Error::NotUnitDistance { distance }) => {
                assert_abs_diff_eq!(distance, 1.01, epsilon = TOL)
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }
}
