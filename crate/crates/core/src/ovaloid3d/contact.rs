//! Contact curves of tangent cones.
//!
//! The contact curve from `x` is traced by azimuth `ψ` about the line through
//! `x` and the inner point. Each half-plane bounded by that line cuts the
//! body in a convex section, and a tangent line from `x` to that section is
//! tangent to the surface, so each half-plane holds exactly one contact
//! point.

use std::f64::consts::{PI, TAU};

use super::{is_exterior, ImplicitOvaloid, Mat3, Surface, Vec3};
use crate::error::{GeomError, Result};
use crate::numeric::{bisect, golden_max};
use crate::tol::{CONTACT_SAMPLES, CONTINUATION_CORRECTOR_TOL, SOURCE_SPREAD_TOL};

/// Maximum halvings of a continuation step before reseeding.
const MAX_SUBDIVISION: u32 = 12;
const MAX_NEWTON: usize = 30;
/// Samples of the polar conic in the quadric oracle.
const ORACLE_SAMPLES: usize = 720;

/// Contact points sampled at uniform azimuth, with unit tangents pointing
/// toward increasing azimuth.
#[derive(Debug, Clone, PartialEq)]
pub struct ContactCurve {
    pub source: Vec3,
    pub points: Vec<Vec3>,
    pub tangents: Vec<Vec3>,
    pub azimuths: Vec<f64>,
}

impl ContactCurve {
    pub fn lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(move |p| (p - self.source).norm())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LengthSpread {
    pub min: f64,
    pub max: f64,
    pub spread: f64,
}

/// Orthonormal frame with `axis` from the inner point toward the source.
struct Frame {
    center: Vec3,
    axis: Vec3,
    e1: Vec3,
    e2: Vec3,
}

impl Frame {
    fn new<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3) -> Self {
        let center = s.inner_point();
        let axis = (x - center).normalize();
        let (e1, e2) = super::tangent_basis(&axis);
        Frame { center, axis, e1, e2 }
    }

    fn radial(&self, psi: f64) -> Vec3 {
        self.e1 * psi.cos() + self.e2 * psi.sin()
    }

    /// Normal of the half-plane at `psi`, pointing toward increasing azimuth.
    fn plane_normal(&self, psi: f64) -> Vec3 {
        self.e2 * psi.cos() - self.e1 * psi.sin()
    }

    fn azimuth(&self, p: &Vec3) -> f64 {
        let v = p - self.center;
        v.dot(&self.e2).atan2(v.dot(&self.e1))
    }
}

struct Tracer<'a, S: ?Sized> {
    s: &'a S,
    x: Vec3,
    frame: Frame,
}

impl<S: ImplicitOvaloid + ?Sized> Tracer<'_, S> {
    fn tangency(&self, p: &Vec3) -> f64 {
        self.s.gradient(p).dot(&(p - self.x))
    }

    fn tangency_gradient(&self, p: &Vec3) -> Vec3 {
        self.s.hessian(p) * (p - self.x) + self.s.gradient(p)
    }

    fn curve_tangent(&self, p: &Vec3, psi: f64) -> Vec3 {
        let t = self.s.gradient(p).cross(&self.tangency_gradient(p)).normalize();
        if t.dot(&self.frame.plane_normal(psi)) < 0.0 {
            -t
        } else {
            t
        }
    }

    fn converged(&self, p: &Vec3, psi: f64) -> bool {
        let g = self.s.gradient(p);
        let scale = 1f64.max(g.norm() * (p - self.x).norm());
        self.s.value(p).abs() <= CONTINUATION_CORRECTOR_TOL
            && self.tangency(p).abs() <= CONTINUATION_CORRECTOR_TOL * scale
            && self.frame.plane_normal(psi).dot(&(p - self.frame.center)).abs() <= CONTINUATION_CORRECTOR_TOL
            && self.frame.radial(psi).dot(&(p - self.frame.center)) > 0.0
    }

    /// Newton on `F = 0`, tangency `= 0`, and the half-plane at `psi`.
    fn correct(&self, mut p: Vec3, psi: f64) -> Option<Vec3> {
        let n = self.frame.plane_normal(psi);
        for _ in 0..MAX_NEWTON {
            let rhs = Vec3::new(self.s.value(&p), self.tangency(&p), n.dot(&(p - self.frame.center)));
            let jac = Mat3::from_rows(&[
                self.s.gradient(&p).transpose(),
                self.tangency_gradient(&p).transpose(),
                n.transpose(),
            ]);
            let step = jac.lu().solve(&rhs)?;
            p -= step;
            if !p.iter().all(|v| v.is_finite()) {
                return None;
            }
            if step.norm() <= 1e-15 * (1.0 + p.norm()) && self.converged(&p, psi) {
                return Some(p);
            }
        }
        self.converged(&p, psi).then_some(p)
    }

    /// Contact point in the half-plane at `psi` by bisection on the polar
    /// angle from the axis, then polished by [`Tracer::correct`].
    fn seed(&self, psi: f64) -> Result<Vec3> {
        let f = &self.frame;
        let on_surface = |t: f64| self.s.radial_point(&(f.axis * t.cos() + f.radial(psi) * t.sin()));
        let t = bisect(|t| self.tangency(&on_surface(t)), 0.0, PI, 1e-14);
        self.correct(on_surface(t), psi)
            .ok_or_else(|| GeomError::ContinuationFailed(format!("no contact point at azimuth {psi}")))
    }

    /// Tangent predictor to the next half-plane, then Newton corrector.
    fn step(&self, p: Vec3, from: f64, to: f64, depth: u32) -> Result<Vec3> {
        let t = self.curve_tangent(&p, from);
        let n = self.frame.plane_normal(to);
        let along = n.dot(&t);
        if along > 0.0 {
            let tau = -n.dot(&(p - self.frame.center)) / along;
            if tau >= 0.0 {
                if let Some(q) = self.correct(p + t * tau, to) {
                    return Ok(q);
                }
            }
        }
        if depth >= MAX_SUBDIVISION {
            return self.seed(to);
        }
        let mid = 0.5 * (from + to);
        let half = self.step(p, from, mid, depth + 1)?;
        self.step(half, mid, to, depth + 1)
    }
}

fn check_source<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3) -> Result<()> {
    if is_exterior(s, x) {
        Ok(())
    } else {
        Err(GeomError::SourceNotExterior { x: x.x, y: x.y, z: x.z })
    }
}

/// `n` contact points at azimuths `2πk/n`, traced by predictor-corrector
/// continuation from a bisection seed at azimuth zero.
pub fn contact_curve<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3, n: usize) -> Result<ContactCurve> {
    if n < 16 {
        return Err(GeomError::InvalidInput(format!("contact curves need at least 16 samples, got {n}")));
    }
    check_source(s, x)?;
    let tracer = Tracer { s, x: *x, frame: Frame::new(s, x) };
    let azimuths: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let mut points = Vec::with_capacity(n);
    points.push(tracer.seed(0.0)?);
    for k in 1..n {
        let next = tracer.step(points[k - 1], azimuths[k - 1], azimuths[k], 0)?;
        points.push(next);
    }
    let tangents = points.iter().zip(&azimuths).map(|(p, &psi)| tracer.curve_tangent(p, psi)).collect();
    Ok(ContactCurve { source: *x, points, tangents, azimuths })
}

/// The contact point at one azimuth, found without continuation.
pub fn contact_point_at<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3, psi: f64) -> Result<Vec3> {
    check_source(s, x)?;
    Tracer { s, x: *x, frame: Frame::new(s, x) }.seed(psi)
}

/// Spread of tangent-segment lengths over the contact curve.
pub fn tangent_length_spread<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3, n: usize) -> Result<LengthSpread> {
    let curve = contact_curve(s, x, n)?;
    let (min, max) = curve.lengths().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), l| (lo.min(l), hi.max(l)));
    Ok(LengthSpread { min, max, spread: max - min })
}

/// Largest `|(p − x)·n(p)| / |p − x|` over the contact curve: zero when the
/// surface meets the sphere about `x` through the contact curve orthogonally.
pub fn sphere_s_of_x_residual<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3) -> Result<f64> {
    let curve = contact_curve(s, x, CONTACT_SAMPLES)?;
    if curve.points.is_empty() {
        return Err(GeomError::EmptyContactCurve);
    }
    let (lo, hi) = curve.lengths().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), l| (lo.min(l), hi.max(l)));
    if hi - lo >= SOURCE_SPREAD_TOL {
        return Err(GeomError::NotEquitangentSource(hi - lo));
    }
    Ok(curve
        .points
        .iter()
        .map(|p| {
            let v = p - x;
            s.gradient(p).normalize().dot(&v).abs() / v.norm()
        })
        .fold(0.0, f64::max))
}

/// Two-sided distance between a traced contact curve and the conic cut from
/// a quadric by the polar plane of the source. Curve points are projected
/// onto the conic; conic points are compared with contact points solved
/// independently at the same azimuth.
pub fn quadric_oracle_hausdorff(s: &Surface, curve: &ContactCurve) -> Result<f64> {
    let [a, b, c] =
        s.semi_axes().ok_or_else(|| GeomError::InvalidInput("the polar-plane oracle needs a quadric".into()))?;
    let scale = Vec3::new(a, b, c);
    let x = curve.source;
    // In coordinates Y = X / (a, b, c) the surface is the unit sphere and the
    // polar plane is m·Y = 1.
    let m = x.component_div(&scale);
    let m2 = m.norm_squared();
    let center = m / m2;
    let rho = (1.0 - 1.0 / m2).sqrt();
    let (f1, f2) = super::tangent_basis(&m.normalize());
    let conic = |t: f64| (center + (f1 * t.cos() + f2 * t.sin()) * rho).component_mul(&scale);

    let step = TAU / ORACLE_SAMPLES as f64;
    let grid: Vec<Vec3> = (0..ORACLE_SAMPLES).map(|k| conic(step * k as f64)).collect();
    let to_conic = |p: &Vec3| {
        let k = (0..ORACLE_SAMPLES)
            .min_by(|&i, &j| (grid[i] - p).norm_squared().total_cmp(&(grid[j] - p).norm_squared()))
            .unwrap();
        let t0 = step * k as f64;
        let (_, best) = golden_max(|t| -(conic(t) - p).norm_squared(), t0 - step, t0 + step, 1e-14);
        (-best).max(0.0).sqrt()
    };
    let forward = curve.points.iter().map(to_conic).fold(0.0, f64::max);

    let frame = Frame::new(s, &x);
    let mut backward: f64 = 0.0;
    for q in &grid {
        let p = contact_point_at(s, &x, frame.azimuth(q))?;
        backward = backward.max((p - q).norm());
    }
    Ok(forward.max(backward))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_contact_circle() {
        let s = Surface::sphere(1.0).unwrap();
        let curve = contact_curve(&s, &Vec3::new(0.0, 0.0, 2.0), 64).unwrap();
        for (p, t) in curve.points.iter().zip(&curve.tangents) {
            assert!((p.z - 0.5).abs() < 1e-12);
            assert!(((p.x * p.x + p.y * p.y).sqrt() - 0.75f64.sqrt()).abs() < 1e-12);
            assert!(t.dot(p).abs() < 1e-12 && t.z.abs() < 1e-12);
        }
        let spread = tangent_length_spread(&s, &Vec3::new(0.0, 0.0, 2.0), 64).unwrap();
        assert!((spread.min - 3f64.sqrt()).abs() < 1e-12 && spread.spread < 1e-12);
    }

    #[test]
    fn contact_invariants_on_quartic() {
        let s = Surface::quartic(0.1).unwrap();
        let x = Vec3::new(1.3, -0.4, 0.9);
        let curve = contact_curve(&s, &x, 256).unwrap();
        for p in &curve.points {
            assert!(s.value(p).abs() < 1e-9);
            assert!(s.gradient(p).dot(&(p - x)).abs() < 1e-8);
        }
        // Continuation agrees with direct solves.
        for k in [0, 37, 128, 255] {
            let q = contact_point_at(&s, &x, curve.azimuths[k]).unwrap();
            assert!((q - curve.points[k]).norm() < 1e-10);
        }
    }

    #[test]
    fn spheroid_axis_source_gives_horizontal_circle() {
        let s = Surface::spheroid(1.0, 1.5).unwrap();
        let x = Vec3::new(0.0, 0.0, 3.0);
        let curve = contact_curve(&s, &x, 256).unwrap();
        // Polar plane z·3/c² = 1.
        for p in &curve.points {
            assert!((p.z - 0.75).abs() < 1e-12);
        }
        assert!(tangent_length_spread(&s, &x, 256).unwrap().spread < 1e-9);
        assert!(quadric_oracle_hausdorff(&s, &curve).unwrap() < 1e-8);
        assert!(sphere_s_of_x_residual(&s, &x).unwrap() < 1e-8);
    }

    #[test]
    fn off_axis_sources() {
        let s = Surface::spheroid(1.0, 1.5).unwrap();
        assert!(tangent_length_spread(&s, &Vec3::new(2.0, 0.0, 2.0), 256).unwrap().spread > 1e-2);
        assert!(matches!(
            sphere_s_of_x_residual(&s, &Vec3::new(2.0, 0.0, 2.0)),
            Err(GeomError::NotEquitangentSource(_))
        ));
        let e = Surface::ellipsoid(1.0, 1.2, 1.5).unwrap();
        for x in [Vec3::new(2.0, 1.0, -0.5), Vec3::new(0.0, 0.0, 1.6), Vec3::new(5.0, 5.0, 5.0)] {
            let curve = contact_curve(&e, &x, 256).unwrap();
            assert!(quadric_oracle_hausdorff(&e, &curve).unwrap() < 1e-8, "{x:?}");
        }
    }

    #[test]
    fn interior_source_rejected() {
        let s = Surface::sphere(1.0).unwrap();
        assert!(matches!(contact_curve(&s, &Vec3::new(0.1, 0.0, 0.0), 64), Err(GeomError::SourceNotExterior { .. })));
        assert!(contact_curve(&s, &Vec3::new(0.0, 0.0, 2.0), 8).is_err());
        assert!(quadric_oracle_hausdorff(
            &Surface::quartic(0.1).unwrap(),
            &contact_curve(&s, &Vec3::new(0.0, 0.0, 2.0), 16).unwrap()
        )
        .is_err());
    }
}
