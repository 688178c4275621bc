//! Strictly convex closed planar curves.
//!
//! Every curve here is parameterized by the angle `θ` of its outward normal,
//! so `point_at(θ)` is the support point in direction `(cos θ, sin θ)` and
//! the unit tangent is that normal rotated a quarter turn counterclockwise.
//! Two concrete representations implement [`ConvexCurve`]:
//!
//! - [`SupportCurve`]: a smooth support function `h(θ)`.
//! - [`ArcSplineCurve`]: a closed C¹ chain of circular arcs.

mod arcspline;
mod io;
mod support;

use std::f64::consts::{PI, TAU};

pub use arcspline::{inspect_arcs, ArcSplineCurve, ArcSplineReport};
pub use io::{Curve, CurveDocument};
pub use support::SupportCurve;

use crate::error::{GeomError, Result};
use crate::geom2d::Point2;
use crate::numeric::periodic_max;
use crate::tol::GEOM_EPS;

/// One tangency from an exterior point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentData {
    /// Tangency point on the curve.
    pub point: Point2,
    /// Distance from the source point to `point`.
    pub length: f64,
    /// Outward-normal angle of the tangency.
    pub param: f64,
}

/// Number of polygon vertices used for winding-number tests.
const WINDING_SAMPLES: usize = 720;

pub trait ConvexCurve {
    /// Support function `h(θ)`.
    fn support(&self, theta: f64) -> f64;

    fn point_at(&self, theta: f64) -> Point2;

    fn tangent_at(&self, theta: f64) -> Point2 {
        Point2::polar(theta).perp()
    }

    fn normal_at(&self, theta: f64) -> Point2 {
        Point2::polar(theta)
    }

    /// The two tangencies from exterior `x`, ordered so that the second
    /// tangency point is counterclockwise of the first as seen from `x`.
    fn tangents_from_point(&self, x: Point2) -> Result<(TangentData, TangentData)>;

    /// Closed polygon inscribed in the curve, used for winding numbers.
    fn boundary_polygon(&self, n: usize) -> Vec<Point2> {
        (0..n).map(|k| self.point_at(TAU * k as f64 / n as f64)).collect()
    }

    /// `max_θ (x·u(θ) − h(θ))`: the distance to the curve for exterior
    /// points, minus the distance to the boundary for interior points.
    fn signed_distance(&self, x: Point2) -> f64 {
        periodic_max(|t| x.dot(Point2::polar(t)) - self.support(t), 720).1
    }

    fn winding_number(&self, x: Point2) -> f64 {
        winding_number(&self.boundary_polygon(WINDING_SAMPLES), x)
    }

    /// Winding number below one half and signed distance above the
    /// geometric tolerance.
    fn is_exterior(&self, x: Point2) -> bool {
        self.winding_number(x).abs() < 0.5 && self.signed_distance(x) > GEOM_EPS
    }

    /// Largest Euclidean width over sampled directions.
    fn diameter(&self) -> f64 {
        (0..360)
            .map(|k| {
                let t = PI * k as f64 / 360.0;
                self.support(t) + self.support(t + PI)
            })
            .fold(0.0, f64::max)
    }
}

/// Winding number of a closed polygon around `x`.
pub fn winding_number(polygon: &[Point2], x: Point2) -> f64 {
    let n = polygon.len();
    let mut total = 0.0;
    for i in 0..n {
        let a = polygon[i] - x;
        let b = polygon[(i + 1) % n] - x;
        total += a.cross(b).atan2(a.dot(b));
    }
    total / TAU
}

/// Puts a pair of tangencies from `x` in counterclockwise order.
pub(crate) fn order_ccw(x: Point2, a: TangentData, b: TangentData) -> (TangentData, TangentData) {
    if (a.point - x).cross(b.point - x) >= 0.0 {
        (a, b)
    } else {
        (b, a)
    }
}

/// Largest gap between the two tangent lengths over the locus, with the
/// locus point where it occurs. Zero means the locus is equitangent.
pub fn equitangent_residual<C: ConvexCurve + ?Sized>(curve: &C, locus: &[Point2]) -> Result<(f64, Point2)> {
    if locus.is_empty() {
        return Err(GeomError::InvalidInput("empty locus".into()));
    }
    let mut worst = (0.0, locus[0]);
    for (index, &p) in locus.iter().enumerate() {
        let (t1, t2) = curve.tangents_from_point(p).map_err(|e| match e {
            GeomError::PointNotExterior { .. } => GeomError::LocusPointNotExterior { index },
            other => other,
        })?;
        let gap = (t1.length - t2.length).abs();
        if gap > worst.0 {
            worst = (gap, p);
        }
    }
    Ok(worst)
}

/// Euclidean width `h(θ) + h(θ + π)`.
pub fn euclidean_width<C: ConvexCurve + ?Sized>(curve: &C, theta: f64) -> f64 {
    curve.support(theta) + curve.support(theta + PI)
}

/// `(min, max)` of the Euclidean width over `n` directions in `[0, π)`.
pub fn width_range<C: ConvexCurve + ?Sized>(curve: &C, n: usize) -> (f64, f64) {
    (0..n)
        .map(|k| euclidean_width(curve, PI * k as f64 / n as f64))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), w| (lo.min(w), hi.max(w)))
}

/// Samples `n` evenly spaced points on a line segment `[t0, t1]` of the
/// line through `origin` with direction `dir`, keeping only points exterior
/// to the curve.
pub fn exterior_line_samples<C: ConvexCurve + ?Sized>(
    curve: &C,
    origin: Point2,
    dir: Point2,
    t0: f64,
    t1: f64,
    n: usize,
) -> Vec<Point2> {
    let d = dir.normalized();
    (0..n)
        .map(|k| {
            let t = if n == 1 { t0 } else { t0 + (t1 - t0) * k as f64 / (n - 1) as f64 };
            origin + d * t
        })
        .filter(|&p| curve.is_exterior(p))
        .collect()
}

/// Hausdorff distance between two convex curves: each curve is sampled at
/// `n` normal angles and every sample is measured against the other curve
/// exactly through its support function.
pub fn hausdorff<A: ConvexCurve + ?Sized, B: ConvexCurve + ?Sized>(a: &A, b: &B, n: usize) -> f64 {
    let one_way = |from: &dyn Fn(f64) -> Point2, to: &dyn Fn(Point2) -> f64| {
        (0..n).map(|k| to(from(TAU * k as f64 / n as f64)).abs()).fold(0.0, f64::max)
    };
    let ab = one_way(&|t| a.point_at(t), &|p| b.signed_distance(p));
    let ba = one_way(&|t| b.point_at(t), &|p| a.signed_distance(p));
    ab.max(ba)
}
