use std::f64::consts::TAU;

use super::{order_ccw, ArcSplineCurve, ConvexCurve, TangentData};
use crate::error::{GeomError, Result};
use crate::geom2d::Point2;
use crate::numeric::{angle_distance, bisect, periodic_sign_changes};
use crate::tol::{TANGENCY_DEDUP, TANGENCY_ROOT_TOL, TANGENCY_SCAN_POINTS};

/// Samples used to check strict convexity (`h + h'' > 0`).
const CONVEXITY_SAMPLES: usize = 720;

/// A strictly convex curve given by its support function.
///
/// The curve point for normal angle `θ` is `h·u + h'·u⊥` with
/// `u = (cos θ, sin θ)`; its radius of curvature is `h + h''`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportCurve {
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Circle { center: Point2, radius: f64 },
    Ellipse { center: Point2, a: f64, b: f64, rotation: f64 },
    Fourier(Fourier),
    Arcs(ArcSplineCurve),
}

/// Trigonometric interpolant through uniformly spaced samples.
#[derive(Debug, Clone, PartialEq)]
struct Fourier {
    samples: Vec<(f64, f64)>,
    origin: f64,
    mean: f64,
    cos: Vec<f64>,
    sin: Vec<f64>,
    /// Half-weighted cosine coefficient at the Nyquist frequency (even counts).
    nyquist: Option<f64>,
}

impl Fourier {
    fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        let n = samples.len();
        if n < 3 {
            return Err(GeomError::InvalidCurve("support curve needs at least 3 samples".into()));
        }
        let origin = samples[0].0;
        let step = TAU / n as f64;
        for (k, &(theta, h)) in samples.iter().enumerate() {
            if !theta.is_finite() || !h.is_finite() {
                return Err(GeomError::InvalidCurve("non-finite support sample".into()));
            }
            if (theta - origin - step * k as f64).abs() > 1e-9 {
                return Err(GeomError::InvalidCurve(format!(
                    "support samples must be uniformly spaced over one turn (sample {k})"
                )));
            }
        }
        let nf = n as f64;
        let mean = samples.iter().map(|s| s.1).sum::<f64>() / nf;
        let m = (n - 1) / 2;
        let mut cos = Vec::with_capacity(m);
        let mut sin = Vec::with_capacity(m);
        for k in 1..=m {
            let (mut a, mut b) = (0.0, 0.0);
            for (j, &(_, h)) in samples.iter().enumerate() {
                let phi = (k * j) as f64 * step;
                a += h * phi.cos();
                b += h * phi.sin();
            }
            cos.push(2.0 * a / nf);
            sin.push(2.0 * b / nf);
        }
        let nyquist = n
            .is_multiple_of(2)
            .then(|| samples.iter().enumerate().map(|(j, s)| if j % 2 == 0 { s.1 } else { -s.1 }).sum::<f64>() / nf);
        Ok(Fourier { samples, origin, mean, cos, sin, nyquist })
    }

    fn eval(&self, theta: f64) -> [f64; 3] {
        let phi = theta - self.origin;
        let mut h = [self.mean, 0.0, 0.0];
        for (i, (&a, &b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let k = (i + 1) as f64;
            let (s, c) = (k * phi).sin_cos();
            h[0] += a * c + b * s;
            h[1] += k * (b * c - a * s);
            h[2] -= k * k * (a * c + b * s);
        }
        if let Some(a) = self.nyquist {
            let k = self.samples.len() as f64 / 2.0;
            let (s, c) = (k * phi).sin_cos();
            h[0] += a * c;
            h[1] -= k * a * s;
            h[2] -= k * k * a * c;
        }
        h
    }
}

impl SupportCurve {
    pub fn circle(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !center.is_finite() {
            return Err(GeomError::InvalidCurve(format!("circle radius must be positive, got {radius}")));
        }
        Ok(SupportCurve { repr: Repr::Circle { center, radius } })
    }

    /// Ellipse with semi-axes `a` (along the rotated x-axis) and `b`.
    pub fn ellipse(center: Point2, a: f64, b: f64, rotation: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) || !center.is_finite() || !rotation.is_finite() {
            return Err(GeomError::InvalidCurve(format!("ellipse semi-axes must be positive, got {a}, {b}")));
        }
        Ok(SupportCurve { repr: Repr::Ellipse { center, a, b, rotation } })
    }

    /// Trigonometric interpolation of `(θ, h)` samples spaced uniformly over
    /// one turn. Rejects sample sets whose interpolant is not strictly convex.
    pub fn from_samples(samples: Vec<(f64, f64)>) -> Result<Self> {
        let curve = SupportCurve { repr: Repr::Fourier(Fourier::new(samples)?) };
        curve.check_strictly_convex()?;
        Ok(curve)
    }

    /// Support function of an arc spline. Corner arcs give `h + h'' = 0` on
    /// their normal cone, so strict convexity is not required here.
    pub fn from_arcspline(curve: &ArcSplineCurve) -> Self {
        SupportCurve { repr: Repr::Arcs(curve.clone()) }
    }

    /// The interpolation samples, when this curve was built from samples.
    pub fn samples(&self) -> Option<&[(f64, f64)]> {
        match &self.repr {
            Repr::Fourier(f) => Some(&f.samples),
            _ => None,
        }
    }

    pub fn as_arcspline(&self) -> Option<&ArcSplineCurve> {
        match &self.repr {
            Repr::Arcs(a) => Some(a),
            _ => None,
        }
    }

    /// `[h, h', h'']` at `theta`.
    pub fn eval(&self, theta: f64) -> [f64; 3] {
        match &self.repr {
            Repr::Circle { center, radius } => {
                let u = Point2::polar(theta);
                let c = center.dot(u);
                [c + radius, center.dot(u.perp()), -c]
            }
            Repr::Ellipse { center, a, b, rotation } => {
                let u = Point2::polar(theta);
                let c = center.dot(u);
                let t = theta - rotation;
                let (s, co) = t.sin_cos();
                let (s2, c2) = (2.0 * t).sin_cos();
                let q = a * a * co * co + b * b * s * s;
                let h0 = q.sqrt();
                let dq = (b * b - a * a) * s2;
                let ddq = 2.0 * (b * b - a * a) * c2;
                let dh0 = dq / (2.0 * h0);
                let ddh0 = ddq / (2.0 * h0) - dq * dq / (4.0 * h0 * q);
                [c + h0, center.dot(u.perp()) + dh0, -c + ddh0]
            }
            Repr::Fourier(f) => f.eval(theta),
            Repr::Arcs(arcs) => {
                let arc = arcs.arc_for_normal(theta);
                let u = Point2::polar(theta);
                let c = arc.center().dot(u);
                [c + arc.radius(), arc.center().dot(u.perp()), -c]
            }
        }
    }

    pub fn h(&self, theta: f64) -> f64 {
        self.eval(theta)[0]
    }

    /// Radius of curvature `h + h''`.
    pub fn radius_of_curvature(&self, theta: f64) -> f64 {
        let [h, _, ddh] = self.eval(theta);
        h + ddh
    }

    /// Checks `h + h'' > 0` on a uniform grid.
    pub fn check_strictly_convex(&self) -> Result<()> {
        for k in 0..CONVEXITY_SAMPLES {
            let theta = TAU * k as f64 / CONVEXITY_SAMPLES as f64;
            let rho = self.radius_of_curvature(theta);
            if !(rho > 0.0) {
                return Err(GeomError::InvalidCurve(format!(
                    "support function is not strictly convex at θ = {theta} (h + h'' = {rho})"
                )));
            }
        }
        Ok(())
    }
}

impl ConvexCurve for SupportCurve {
    fn support(&self, theta: f64) -> f64 {
        self.h(theta)
    }

    fn point_at(&self, theta: f64) -> Point2 {
        let [h, dh, _] = self.eval(theta);
        let u = Point2::polar(theta);
        u * h + u.perp() * dh
    }

    /// Roots of `g(θ) = h(θ) − x·u(θ)`: scanned on a fixed grid for sign
    /// changes, bisected, then polished with Newton steps when they help.
    fn tangents_from_point(&self, x: Point2) -> Result<(TangentData, TangentData)> {
        if !self.is_exterior(x) {
            return Err(GeomError::PointNotExterior { x: x.x, y: x.y });
        }
        let g = |t: f64| self.h(t) - x.dot(Point2::polar(t));
        let mut roots: Vec<f64> = Vec::with_capacity(2);
        for (lo, hi) in periodic_sign_changes(&g, 0.0, TANGENCY_SCAN_POINTS) {
            let mut t = bisect(g, lo, hi, TANGENCY_ROOT_TOL);
            for _ in 0..2 {
                let [_, dh, _] = self.eval(t);
                let dg = dh - x.dot(Point2::polar(t).perp());
                if dg == 0.0 {
                    break;
                }
                let cand = t - g(t) / dg;
                if (cand - t).abs() < 1e-9 && g(cand).abs() < g(t).abs() {
                    t = cand;
                } else {
                    break;
                }
            }
            if roots.iter().all(|&r| angle_distance(r, t) > TANGENCY_DEDUP) {
                roots.push(t);
            }
        }
        if roots.len() != 2 {
            return Err(GeomError::TangencyNotFound { found: roots.len() });
        }
        let make = |t: f64| {
            let point = self.point_at(t);
            TangentData { point, length: point.distance(x), param: t }
        };
        Ok(order_ccw(x, make(roots[0]), make(roots[1])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_frame() {
        let c = SupportCurve::circle(Point2::ORIGIN, 1.0).unwrap();
        assert_eq!(c.point_at(0.0), Point2::new(1.0, 0.0));
        let t = c.tangent_at(0.0);
        assert!(t.x.abs() < 1e-16 && (t.y - 1.0).abs() < 1e-16);
        let r = SupportCurve::circle(Point2::ORIGIN, 2.5).unwrap();
        for k in 0..12 {
            let th = 0.5 * k as f64;
            assert!(r.point_at(th).distance(Point2::polar(th) * 2.5) < 1e-14);
            assert!(r.normal_at(th).dot(r.tangent_at(th)).abs() < 1e-15);
        }
    }

    #[test]
    fn ellipse_derivatives_match_finite_differences() {
        let e = SupportCurve::ellipse(Point2::new(0.3, -0.2), 2.0, 1.0, 0.4).unwrap();
        let step = 1e-5;
        for k in 0..20 {
            let t = 0.31 * k as f64;
            let [_, dh, ddh] = e.eval(t);
            let fd1 = (e.h(t + step) - e.h(t - step)) / (2.0 * step);
            let fd2 = (e.h(t + step) - 2.0 * e.h(t) + e.h(t - step)) / (step * step);
            assert!((dh - fd1).abs() < 1e-8);
            assert!((ddh - fd2).abs() < 1e-4);
        }
    }

    #[test]
    fn ellipse_points_lie_on_ellipse() {
        let e = SupportCurve::ellipse(Point2::ORIGIN, 2.0, 1.0, 0.0).unwrap();
        for k in 0..50 {
            let p = e.point_at(0.13 * k as f64);
            assert!((p.x * p.x / 4.0 + p.y * p.y - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn fourier_reproduces_ellipse() {
        let e = SupportCurve::ellipse(Point2::new(0.5, 0.25), 2.0, 1.0, 0.3).unwrap();
        let n = 128;
        let samples: Vec<(f64, f64)> = (0..n).map(|k| TAU * k as f64 / n as f64).map(|t| (t, e.h(t))).collect();
        let f = SupportCurve::from_samples(samples).unwrap();
        for k in 0..97 {
            let t = 0.0647 * k as f64;
            let (a, b) = (e.eval(t), f.eval(t));
            // Derivative errors grow with the harmonic order.
            for (i, tol) in [1e-12, 1e-11, 1e-9].into_iter().enumerate() {
                assert!((a[i] - b[i]).abs() < tol, "{i} {} {}", a[i], b[i]);
            }
        }
        // Even and odd sample counts both interpolate exactly at the nodes.
        for n in [7usize, 8] {
            let s: Vec<(f64, f64)> =
                (0..n).map(|k| TAU * k as f64 / n as f64).map(|t| (t, 1.0 + 0.05 * (2.0 * t).cos())).collect();
            let f = SupportCurve::from_samples(s.clone()).unwrap();
            for (t, h) in s {
                assert!((f.h(t) - h).abs() < 1e-14);
            }
            assert!((f.h(0.0) - f.h(TAU)).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_samples() {
        let uneven = vec![(0.0, 1.0), (1.0, 1.0), (3.0, 1.0)];
        assert!(SupportCurve::from_samples(uneven).is_err());
        // h = 1 + 0.5 cos 2θ has h + h'' = 1 − 1.5 cos 2θ < 0 somewhere.
        let n = 64;
        let s: Vec<(f64, f64)> =
            (0..n).map(|k| TAU * k as f64 / n as f64).map(|t| (t, 1.0 + 0.5 * (2.0 * t).cos())).collect();
        assert!(matches!(SupportCurve::from_samples(s), Err(GeomError::InvalidCurve(_))));
    }

    #[test]
    fn tangents_ellipse_polar_line_oracle() {
        // Polar line of (4, 0) w.r.t. x²/4 + y² = 1 is X = 1, giving (1, ±√3/2).
        let e = SupportCurve::ellipse(Point2::ORIGIN, 2.0, 1.0, 0.0).unwrap();
        let x = Point2::new(4.0, 0.0);
        let (a, b) = e.tangents_from_point(x).unwrap();
        let expect_len = (9.0f64 + 0.75).sqrt();
        for t in [a, b] {
            assert!((t.point.x - 1.0).abs() < 1e-11);
            assert!((t.point.y.abs() - 3f64.sqrt() / 2.0).abs() < 1e-11);
            assert!((t.length - expect_len).abs() < 1e-11);
            assert!((t.point - x).cross(e.tangent_at(t.param)).abs() < 1e-9);
        }
        assert!((a.point - x).cross(b.point - x) > 0.0);
    }

    #[test]
    fn tangents_ellipse_unequal() {
        let e = SupportCurve::ellipse(Point2::ORIGIN, 2.0, 1.0, 0.0).unwrap();
        let x = Point2::new(4.0, 1.0);
        let (a, b) = e.tangents_from_point(x).unwrap();
        // Oracle: tangency points solve x·X/4 + y·Y = 1 on the ellipse.
        for t in [a, b] {
            assert!((x.x * t.point.x / 4.0 + x.y * t.point.y - 1.0).abs() < 1e-11);
        }
        assert!((a.length - b.length).abs() > 0.1);
    }

    #[test]
    fn tangents_reject_interior() {
        let e = SupportCurve::ellipse(Point2::ORIGIN, 2.0, 1.0, 0.0).unwrap();
        assert!(matches!(e.tangents_from_point(Point2::new(1.0, 0.0)), Err(GeomError::PointNotExterior { .. })));
    }
}
