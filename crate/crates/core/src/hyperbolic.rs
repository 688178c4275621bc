//! Upper half-plane model of the hyperbolic plane.
//!
//! Geodesics are semicircles centered on the x-axis and vertical rays, and
//! the model is conformal, so a circle centered at `(x, 0)` meets a curve
//! orthogonally exactly when it is a geodesic normal to it. A convex curve
//! above the x-axis has equal tangent segments from every `(x, 0)` exactly
//! when every such circle through the tangency points is a double normal,
//! which is the case for curves of constant hyperbolic width.

use std::f64::consts::{PI, TAU};

use crate::curves2d::{ArcSplineCurve, ConvexCurve};
use crate::error::{GeomError, Result};
use crate::geom2d::{Arc2, Circle2, Orientation, Point2};
use crate::numeric::wrap_angle;
use crate::report::csv_row;
use crate::tol::{GEOM_EPS, HYPERBOLIC_CHORD_GAP};

/// A point of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    x: f64,
    y: f64,
}

impl HalfPlanePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(GeomError::NotInUpperHalfPlane(y));
        }
        Ok(HalfPlanePoint { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_point(self) -> Point2 {
        Point2::new(self.x, self.y)
    }
}

impl TryFrom<Point2> for HalfPlanePoint {
    type Error = GeomError;
    fn try_from(p: Point2) -> Result<Self> {
        HalfPlanePoint::new(p.x, p.y)
    }
}

/// Hyperbolic distance, `cosh d = 1 + |p − q|² / (2 p_y q_y)`, evaluated as
/// `2 asinh(|p − q| / (2 √(p_y q_y)))` for accuracy at short range.
pub fn hyp_distance(p: HalfPlanePoint, q: HalfPlanePoint) -> f64 {
    let chord = p.to_point().distance(q.to_point());
    2.0 * (chord / (2.0 * (p.y * q.y).sqrt())).asinh()
}

/// [`hyp_distance`] for raw points.
pub fn hyp_distance_points(p: Point2, q: Point2) -> Result<f64> {
    Ok(hyp_distance(p.try_into()?, q.try_into()?))
}

/// A complete geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    /// Upper half of the circle centered at `(center_x, 0)`.
    Semicircle { center_x: f64, radius: f64 },
    /// Vertical ray above `(x, 0)`.
    Vertical { x: f64 },
}

impl Geodesic {
    /// The geodesic through two distinct points.
    pub fn through(p: HalfPlanePoint, q: HalfPlanePoint) -> Result<Self> {
        let scale = 1.0 + p.x.abs().max(q.x.abs());
        if (p.x - q.x).abs() <= 1e-13 * scale {
            if (p.y - q.y).abs() <= 1e-15 * scale {
                return Err(GeomError::InvalidInput("geodesic through coincident points".into()));
            }
            return Ok(Geodesic::Vertical { x: 0.5 * (p.x + q.x) });
        }
        let center_x = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
        let radius = (p.x - center_x).hypot(p.y);
        Ok(Geodesic::Semicircle { center_x, radius })
    }

    /// Euclidean distance from `p` to the carrier.
    pub fn offset(&self, p: Point2) -> f64 {
        match *self {
            Geodesic::Semicircle { center_x, radius } => ((p.x - center_x).hypot(p.y) - radius).abs(),
            Geodesic::Vertical { x } => (p.x - x).abs(),
        }
    }

    /// Unit Euclidean tangent of the carrier at `p`.
    pub fn tangent_at(&self, p: Point2) -> Point2 {
        match *self {
            Geodesic::Semicircle { center_x, .. } => (p - Point2::new(center_x, 0.0)).perp().normalized(),
            Geodesic::Vertical { .. } => Point2::new(0.0, 1.0),
        }
    }

    /// Coordinate along the geodesic in which hyperbolic length is the
    /// absolute difference: `ln tan(φ/2)` on semicircles, `ln y` on rays.
    fn arclength_coordinate(&self, p: Point2) -> f64 {
        match *self {
            Geodesic::Semicircle { center_x, .. } => {
                let phi = p.y.atan2(p.x - center_x);
                (0.5 * phi).tan().ln()
            }
            Geodesic::Vertical { .. } => p.y.ln(),
        }
    }

    fn point_at_arclength_coordinate(&self, s: f64) -> Point2 {
        match *self {
            Geodesic::Semicircle { center_x, radius } => {
                let phi = 2.0 * s.exp().atan();
                Point2::new(center_x + radius * phi.cos(), radius * phi.sin())
            }
            Geodesic::Vertical { x } => Point2::new(x, s.exp()),
        }
    }

    /// Hyperbolic length between two points of this geodesic, from the
    /// arclength coordinate rather than the distance formula.
    pub fn length_between(&self, p: Point2, q: Point2) -> f64 {
        (self.arclength_coordinate(q) - self.arclength_coordinate(p)).abs()
    }

    /// Point at hyperbolic distance `d` from `from` along this geodesic,
    /// moving toward `toward` (or away from it when `d` is negative).
    pub fn walk(&self, from: Point2, toward: Point2, d: f64) -> Point2 {
        let s0 = self.arclength_coordinate(from);
        let dir = (self.arclength_coordinate(toward) - s0).signum();
        self.point_at_arclength_coordinate(s0 + dir * d)
    }
}

/// A geodesic segment between two points of its carrier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicChord {
    pub carrier: Geodesic,
    pub p: HalfPlanePoint,
    pub q: HalfPlanePoint,
}

impl GeodesicChord {
    pub fn new(carrier: Geodesic, p: HalfPlanePoint, q: HalfPlanePoint) -> Result<Self> {
        for pt in [p, q] {
            let off = carrier.offset(pt.to_point());
            if off > GEOM_EPS {
                return Err(GeomError::InvalidInput(format!("chord endpoint is {off:e} off its carrier")));
            }
        }
        Ok(GeodesicChord { carrier, p, q })
    }

    pub fn length(&self) -> f64 {
        hyp_distance(self.p, self.q)
    }
}

/// `|cos|` of the Euclidean angle between the chord's carrier and the curve
/// at each endpoint; zero means orthogonal, which by conformality is
/// hyperbolic orthogonality as well.
pub fn orthogonality_residual<C: ConvexCurve + ?Sized>(
    chord: &GeodesicChord,
    curve: &C,
    param_p: f64,
    param_q: f64,
) -> Result<(f64, f64)> {
    let residual = |end: HalfPlanePoint, param: f64| {
        let on_curve = curve.point_at(param);
        let gap = on_curve.distance(end.to_point());
        if gap > GEOM_EPS {
            return Err(GeomError::EndpointMismatch(gap));
        }
        Ok(chord.carrier.tangent_at(end.to_point()).dot(curve.tangent_at(param)).abs())
    };
    Ok((residual(chord.p, param_p)?, residual(chord.q, param_q)?))
}

/// Largest `|L1 − L2|` over tangent pairs from the boundary points `(x, 0)`.
pub fn equitangent_from_boundary_residual<C: ConvexCurve + ?Sized>(curve: &C, xs: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &x in xs {
        let (t1, t2) = curve.tangents_from_point(Point2::new(x, 0.0))?;
        worst = worst.max((t1.length - t2.length).abs());
    }
    Ok(worst)
}

/// Width along the double normal seen from one boundary point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthSample {
    pub x: f64,
    pub l1: f64,
    pub l2: f64,
    /// Hyperbolic length of the chord joining the two tangency points.
    pub width: f64,
}

/// For each `(x, 0)`, the hyperbolic length of the geodesic chord through the
/// two tangency points. That chord lies on the circle centered at `(x, 0)`
/// with radius the common tangent length, so it is a double normal.
pub fn hyperbolic_width_profile<C: ConvexCurve + ?Sized>(curve: &C, xs: &[f64]) -> Result<Vec<WidthSample>> {
    xs.iter()
        .map(|&x| {
            let (t1, t2) = curve.tangents_from_point(Point2::new(x, 0.0))?;
            let gap = (t1.length - t2.length).abs();
            if gap > HYPERBOLIC_CHORD_GAP {
                return Err(GeomError::NotEquitangentAtSample { x, gap });
            }
            let width = hyp_distance(t1.point.try_into()?, t2.point.try_into()?);
            Ok(WidthSample { x, l1: t1.length, l2: t2.length, width })
        })
        .collect()
}

/// `max − min` of the widths.
pub fn width_spread(samples: &[WidthSample]) -> f64 {
    let (lo, hi) =
        samples.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s.width), hi.max(s.width)));
    if samples.is_empty() {
        0.0
    } else {
        hi - lo
    }
}

/// Width profile as CSV with header `x,L1,L2,width`.
pub fn width_profile_csv(samples: &[WidthSample]) -> String {
    let mut out = String::from("x,L1,L2,width\n");
    for s in samples {
        out.push_str(&csv_row(&[s.x, s.l1, s.l2, s.width]));
    }
    out
}

/// The Euclidean circle that is the hyperbolic circle of radius `rho`
/// about `center`.
pub fn hyperbolic_circle(center: HalfPlanePoint, rho: f64) -> Result<Circle2> {
    Circle2::new(Point2::new(center.x, center.y * rho.cosh()), center.y * rho.sinh())
}

/// Maps a point of the Poincaré disk to the upper half-plane, sending the
/// disk center to `(0, 1)`.
pub fn disk_to_half_plane(u: f64, v: f64) -> Result<HalfPlanePoint> {
    let d = (1.0 - u) * (1.0 - u) + v * v;
    HalfPlanePoint::new(-2.0 * v / d, (1.0 - u * u - v * v) / d)
}

/// Hyperbolic Reuleaux triangle rounded by `epsilon`: arcs of hyperbolic
/// radius `side + ε` and `ε` about the vertices of an equilateral triangle.
/// It has constant hyperbolic width `side + 2ε`, is C¹ for `ε > 0`, and is
/// not a hyperbolic circle.
#[derive(Debug, Clone)]
pub struct HyperbolicReuleaux {
    pub curve: ArcSplineCurve,
    pub vertices: [HalfPlanePoint; 3],
    pub side: f64,
    pub epsilon: f64,
}

impl HyperbolicReuleaux {
    /// Equilateral triangle with hyperbolic circumradius `circumradius`
    /// centered at `(0, 1)`.
    pub fn build(circumradius: f64, epsilon: f64) -> Result<Self> {
        if !(circumradius > 0.0) || !(epsilon > 0.0) {
            return Err(GeomError::InvalidInput("circumradius and rounding must be positive".into()));
        }
        let t = (0.5 * circumradius).tanh();
        let mut vertices = [HalfPlanePoint { x: 0.0, y: 1.0 }; 3];
        for (k, v) in vertices.iter_mut().enumerate() {
            let a = PI / 2.0 + TAU * k as f64 / 3.0;
            *v = disk_to_half_plane(t * a.cos(), t * a.sin())?;
        }
        let side = hyp_distance(vertices[0], vertices[1]);

        let mut arcs = Vec::with_capacity(6);
        for k in 0..3 {
            let v = vertices[k];
            let others = [vertices[(k + 1) % 3], vertices[(k + 2) % 3]];
            let geos = [Geodesic::through(v, others[0])?, Geodesic::through(v, others[1])?];
            let far: Vec<Point2> =
                (0..2).map(|i| geos[i].walk(v.to_point(), others[i].to_point(), side + epsilon)).collect();
            let near: Vec<Point2> =
                (0..2).map(|i| geos[i].walk(v.to_point(), others[i].to_point(), -epsilon)).collect();
            for (radius, ends) in [(side + epsilon, far), (epsilon, near)] {
                let circle = hyperbolic_circle(v, radius)?;
                let (a0, a1) = ((ends[0] - circle.center()).angle(), (ends[1] - circle.center()).angle());
                let (s, e) = if wrap_angle(a1 - a0) < PI { (a0, a1) } else { (a1, a0) };
                arcs.push(Arc2::new(circle, s, e, Orientation::CounterClockwise)?);
            }
        }
        let base = arcs[0].start_angle();
        arcs.sort_by(|a, b| wrap_angle(a.start_angle() - base).total_cmp(&wrap_angle(b.start_angle() - base)));
        let curve = ArcSplineCurve::new(arcs)?;
        Ok(HyperbolicReuleaux { curve, vertices, side, epsilon })
    }

    pub fn width(&self) -> f64 {
        self.side + 2.0 * self.epsilon
    }
}
