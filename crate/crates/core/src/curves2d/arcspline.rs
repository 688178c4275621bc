use std::f64::consts::TAU;

use super::{order_ccw, ConvexCurve, TangentData};
use crate::error::{GeomError, Result};
use crate::geom2d::{Arc2, Orientation, Point2};
use crate::numeric::{acos_clamped, angle_distance};
use crate::tol::{GEOM_EPS, JOINT_EPS, TANGENCY_DEDUP};

/// Slack on an arc's angular range when accepting a tangency.
const RANGE_SLACK: f64 = 1e-10;

/// Closed C¹ strictly convex curve made of circular arcs, traversed
/// counterclockwise. Each arc's polar angle equals the outward normal angle
/// of the curve, so arcs follow one another in increasing normal angle.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSplineCurve {
    arcs: Vec<Arc2>,
    /// Cumulative sweep before each arc, measured from `arcs[0].start_angle`.
    offsets: Vec<f64>,
}

/// Individually assertable validity residuals of an arc list.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSplineReport {
    /// Largest distance between an arc's end point and the next start point.
    pub max_joint_gap: f64,
    /// Largest difference between unit tangents across a joint.
    pub max_joint_tangent: f64,
    /// Sum of arc sweeps.
    pub total_turning: f64,
    /// Whether every arc has the same orientation.
    pub consistent_orientation: bool,
    /// Zero-radius arcs: corners where C¹ fails, exempt from smoothness.
    pub corners: Vec<usize>,
}

impl ArcSplineReport {
    pub fn is_valid(&self) -> bool {
        self.consistent_orientation
            && self.max_joint_gap <= GEOM_EPS
            && self.max_joint_tangent <= JOINT_EPS
            && (self.total_turning - TAU).abs() <= JOINT_EPS
    }
}

/// Unit tangent of an arc at polar angle `theta` in its direction of travel.
fn travel_tangent(arc: &Arc2, theta: f64) -> Point2 {
    let t = Point2::polar(theta).perp();
    match arc.orientation() {
        Orientation::CounterClockwise => t,
        Orientation::Clockwise => -t,
    }
}

/// Joint, tangent and turning residuals of a cyclic arc list.
pub fn inspect_arcs(arcs: &[Arc2]) -> ArcSplineReport {
    let n = arcs.len();
    let mut report = ArcSplineReport {
        max_joint_gap: 0.0,
        max_joint_tangent: 0.0,
        total_turning: arcs.iter().map(Arc2::sweep).sum(),
        consistent_orientation: arcs.iter().all(|a| Some(a.orientation()) == arcs.first().map(Arc2::orientation)),
        corners: arcs.iter().enumerate().filter(|(_, a)| a.is_corner()).map(|(i, _)| i).collect(),
    };
    for i in 0..n {
        let (a, b) = (&arcs[i], &arcs[(i + 1) % n]);
        report.max_joint_gap = report.max_joint_gap.max(a.end_point().distance(b.start_point()));
        let ta = travel_tangent(a, a.end_angle());
        let tb = travel_tangent(b, b.start_angle());
        report.max_joint_tangent = report.max_joint_tangent.max(ta.distance(tb));
    }
    report
}

impl ArcSplineCurve {
    /// Validates and stores a cyclic arc list. A clockwise list is reversed
    /// into counterclockwise order.
    pub fn new(arcs: Vec<Arc2>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(GeomError::InvalidCurve("arc spline needs at least one arc".into()));
        }
        let report = inspect_arcs(&arcs);
        if !report.consistent_orientation {
            return Err(GeomError::InvalidCurve("arcs turn in different directions".into()));
        }
        let arcs = if arcs[0].orientation() == Orientation::Clockwise {
            arcs.iter().rev().map(Arc2::reversed).collect()
        } else {
            arcs
        };
        if arcs.iter().all(Arc2::is_corner) {
            return Err(GeomError::InvalidCurve("arc spline has no arc of positive radius".into()));
        }
        if report.max_joint_gap > GEOM_EPS {
            return Err(GeomError::InvalidCurve(format!("joint gap {:e}", report.max_joint_gap)));
        }
        if report.max_joint_tangent > JOINT_EPS {
            return Err(GeomError::InvalidCurve(format!("joint tangent mismatch {:e}", report.max_joint_tangent)));
        }
        if (report.total_turning - TAU).abs() > JOINT_EPS {
            return Err(GeomError::InvalidCurve(format!("total turning {} ≠ 2π", report.total_turning)));
        }
        let mut offsets = Vec::with_capacity(arcs.len() + 1);
        let mut acc = 0.0;
        for a in &arcs {
            offsets.push(acc);
            acc += a.sweep();
        }
        offsets.push(acc);
        Ok(ArcSplineCurve { arcs, offsets })
    }

    pub fn arcs(&self) -> &[Arc2] {
        &self.arcs
    }

    pub fn report(&self) -> ArcSplineReport {
        inspect_arcs(&self.arcs)
    }

    pub fn length(&self) -> f64 {
        self.arcs.iter().map(Arc2::length).sum()
    }

    /// The arc whose normal range contains `theta`.
    pub(crate) fn arc_for_normal(&self, theta: f64) -> &Arc2 {
        &self.arcs[self.arc_index_for_normal(theta)]
    }

    fn arc_index_for_normal(&self, theta: f64) -> usize {
        let t = (theta - self.arcs[0].start_angle()).rem_euclid(TAU);
        let n = self.arcs.len();
        // offsets is sorted; find the last offset ≤ t.
        let i = self.offsets[..n].partition_point(|&o| o <= t);
        i.saturating_sub(1).min(n - 1)
    }

    /// `n` samples uniformly spaced in arclength, counterclockwise from the
    /// start of the first arc, each with its unit tangent.
    pub fn samples(&self, n: usize) -> Vec<(Point2, Point2)> {
        let n = n.max(3);
        let total = self.length();
        let mut out = Vec::with_capacity(n);
        let mut arc_i = 0;
        let mut before = 0.0;
        for k in 0..n {
            let s = total * k as f64 / n as f64;
            while arc_i + 1 < self.arcs.len() && before + self.arcs[arc_i].length() <= s {
                before += self.arcs[arc_i].length();
                arc_i += 1;
            }
            let arc = &self.arcs[arc_i];
            let theta =
                if arc.is_corner() { arc.start_angle() } else { arc.start_angle() + (s - before) / arc.radius() };
            out.push((arc.circle().point_at(theta), Point2::polar(theta).perp()));
        }
        out
    }
}

impl ConvexCurve for ArcSplineCurve {
    fn support(&self, theta: f64) -> f64 {
        let arc = self.arc_for_normal(theta);
        arc.center().dot(Point2::polar(theta)) + arc.radius()
    }

    fn point_at(&self, theta: f64) -> Point2 {
        self.arc_for_normal(theta).circle().point_at(theta)
    }

    fn boundary_polygon(&self, n: usize) -> Vec<Point2> {
        // Every joint plus uniform normal-angle samples.
        let mut pts: Vec<(f64, Point2)> =
            self.arcs.iter().zip(&self.offsets).map(|(a, &o)| (o, a.start_point())).collect();
        let start = self.arcs[0].start_angle();
        for k in 0..n {
            let t = TAU * k as f64 / n as f64;
            pts.push((t, self.point_at(start + t)));
        }
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        pts.into_iter().map(|(_, p)| p).collect()
    }

    /// Closed form per arc: on an arc with center `c` and radius `r`, the
    /// tangency condition `(c − x)·u(θ) + r = 0` has two solutions; those
    /// inside the arc's normal range are tangencies of the curve.
    fn tangents_from_point(&self, x: Point2) -> Result<(TangentData, TangentData)> {
        if !self.is_exterior(x) {
            return Err(GeomError::PointNotExterior { x: x.x, y: x.y });
        }
        let mut found: Vec<TangentData> = Vec::with_capacity(2);
        for arc in &self.arcs {
            let d = arc.center() - x;
            let dist = d.norm();
            if dist < arc.radius() || dist == 0.0 {
                continue;
            }
            let half = acos_clamped(-arc.radius() / dist);
            for theta in [d.angle() + half, d.angle() - half] {
                if !arc.contains_angle(theta, RANGE_SLACK) {
                    continue;
                }
                if found.iter().any(|t| angle_distance(t.param, theta) < TANGENCY_DEDUP) {
                    continue;
                }
                let point = arc.circle().point_at(theta);
                found.push(TangentData { point, length: point.distance(x), param: theta });
            }
        }
        if found.len() != 2 {
            return Err(GeomError::TangencyNotFound { found: found.len() });
        }
        Ok(order_ccw(x, found[0], found[1]))
    }
}
