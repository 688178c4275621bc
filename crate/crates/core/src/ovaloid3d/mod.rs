//! Strictly convex closed surfaces given implicitly by `F = 0`, `F < 0`
//! inside, and the tangent cones from exterior points.

use nalgebra::{Matrix3, Vector3};
use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::tol::SURFACE_EPS;

mod contact;
mod curvature;
mod locus;

pub use contact::{
    contact_curve, contact_point_at, quadric_oracle_hausdorff, sphere_s_of_x_residual, tangent_length_spread,
    ContactCurve, LengthSpread,
};
pub use curvature::{is_umbilic, joachimsthal_check, principal_curvatures, umbilic_scan, CurvatureData, UmbilicScan};
pub use locus::{
    certify_no_plane, find_collinear_lines, locus_csv, plane_witness, sample_equitangent_locus, Grid, LineFit,
    LocusRow, LocusScan, Plane, PlaneCertificate, PlaneWitness, WITNESS_SPREAD,
};

pub type Vec3 = Vector3<f64>;
pub type Mat3 = Matrix3<f64>;

/// Samples along the segment from a candidate source to the inner point when
/// counting boundary crossings.
const EXTERIOR_SEGMENT_SAMPLES: usize = 512;
/// Points used to check strict convexity of non-quadric surfaces.
const CONVEXITY_SAMPLES: usize = 2000;

/// A smooth closed surface `F = 0` bounding a strictly convex body that
/// contains [`ImplicitOvaloid::inner_point`].
pub trait ImplicitOvaloid: Sync {
    fn value(&self, p: &Vec3) -> f64;
    fn gradient(&self, p: &Vec3) -> Vec3;
    fn hessian(&self, p: &Vec3) -> Mat3;

    fn inner_point(&self) -> Vec3 {
        Vec3::zeros()
    }

    /// Distance from the inner point to the surface along unit `d`.
    ///
    /// `F` is convex along the ray, so Newton started beyond the root
    /// decreases monotonically onto it.
    fn radial_distance(&self, d: &Vec3) -> f64 {
        let c = self.inner_point();
        let mut r = 1.0;
        for _ in 0..64 {
            if self.value(&(c + d * r)) > 0.0 {
                break;
            }
            r *= 2.0;
        }
        for _ in 0..100 {
            let p = c + d * r;
            let step = self.value(&p) / self.gradient(&p).dot(d);
            r -= step;
            if step.abs() <= 1e-16 * r {
                break;
            }
        }
        r
    }

    fn radial_point(&self, d: &Vec3) -> Vec3 {
        self.inner_point() + d * self.radial_distance(d)
    }
}

/// `F(x) > 0` and the segment from `x` to the inner point crosses the
/// surface exactly once.
pub fn is_exterior<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3) -> bool {
    if !(s.value(x) > SURFACE_EPS) {
        return false;
    }
    let c = s.inner_point();
    let mut crossings = 0;
    let mut prev = s.value(x) > 0.0;
    for k in 1..=EXTERIOR_SEGMENT_SAMPLES {
        let t = k as f64 / EXTERIOR_SEGMENT_SAMPLES as f64;
        let cur = s.value(&(x + (c - x) * t)) > 0.0;
        if cur != prev {
            crossings += 1;
        }
        prev = cur;
    }
    crossings == 1
}

/// Unit vectors evenly spread over the sphere (golden-angle spiral).
pub fn fibonacci_directions(n: usize) -> Vec<Vec3> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden * i as f64;
            Vec3::new(r * phi.cos(), r * phi.sin(), z)
        })
        .collect()
}

/// Orthonormal `(t1, t2)` with `t1 × t2 = n` for unit `n`.
pub fn tangent_basis(n: &Vec3) -> (Vec3, Vec3) {
    let helper = if n.x.abs() <= n.y.abs() && n.x.abs() <= n.z.abs() {
        Vec3::x()
    } else if n.y.abs() <= n.z.abs() {
        Vec3::y()
    } else {
        Vec3::z()
    };
    let t1 = (helper - n * n.dot(&helper)).normalize();
    (t1, n.cross(&t1))
}

/// The surfaces of the test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "surface", rename_all = "lowercase")]
pub enum Surface {
    Sphere {
        radius: f64,
    },
    /// `x²/a² + y²/b² + z²/c² = 1`.
    Ellipsoid {
        a: f64,
        b: f64,
        c: f64,
    },
    /// `|p|² − 1 + δ(x⁴ + y⁴ + z⁴) = 0`.
    Quartic {
        delta: f64,
    },
}

impl Surface {
    pub fn sphere(radius: f64) -> Result<Self> {
        positive(&[radius])?;
        Ok(Surface::Sphere { radius })
    }

    pub fn ellipsoid(a: f64, b: f64, c: f64) -> Result<Self> {
        positive(&[a, b, c])?;
        Ok(Surface::Ellipsoid { a, b, c })
    }

    /// Ellipsoid of revolution about the z-axis.
    pub fn spheroid(a: f64, c: f64) -> Result<Self> {
        Surface::ellipsoid(a, a, c)
    }

    pub fn quartic(delta: f64) -> Result<Self> {
        if !delta.is_finite() {
            return Err(GeomError::InvalidInput("quartic coefficient must be finite".into()));
        }
        let s = Surface::Quartic { delta };
        s.check_strictly_convex()?;
        Ok(s)
    }

    /// Corpus lookup: `sphere [r]`, `spheroid [a, c]`, `ellipsoid [a, b, c]`,
    /// `quartic [δ]`. Empty parameters select the corpus defaults.
    pub fn from_name(name: &str, params: &[f64]) -> Result<Self> {
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(GeomError::InvalidInput(format!("{name} takes {n} parameters, got {}", params.len())))
            }
        };
        match (name, params.is_empty()) {
            ("sphere", true) => Surface::sphere(1.0),
            ("sphere", false) => arity(1).and_then(|_| Surface::sphere(params[0])),
            ("spheroid", true) => Surface::spheroid(1.0, 1.5),
            ("spheroid", false) => arity(2).and_then(|_| Surface::spheroid(params[0], params[1])),
            ("ellipsoid", true) => Surface::ellipsoid(1.0, 1.2, 1.5),
            ("ellipsoid", false) => arity(3).and_then(|_| Surface::ellipsoid(params[0], params[1], params[2])),
            ("quartic", true) => Surface::quartic(0.1),
            ("quartic", false) => arity(1).and_then(|_| Surface::quartic(params[0])),
            _ => Err(GeomError::InvalidInput(format!("unknown surface {name:?}"))),
        }
    }

    /// Semi-axes for quadrics (spheres included), `None` otherwise.
    pub fn semi_axes(&self) -> Option<[f64; 3]> {
        match *self {
            Surface::Sphere { radius } => Some([radius; 3]),
            Surface::Ellipsoid { a, b, c } => Some([a, b, c]),
            Surface::Quartic { .. } => None,
        }
    }

    /// Second fundamental form positive definite at sampled points.
    fn check_strictly_convex(&self) -> Result<()> {
        if !(self.value(&Vec3::zeros()) < 0.0) {
            return Err(GeomError::InvalidInput("origin is not inside the surface".into()));
        }
        for d in fibonacci_directions(CONVEXITY_SAMPLES) {
            let p = self.radial_point(&d);
            let g = self.gradient(&p);
            let (t1, t2) = tangent_basis(&g.normalize());
            let h = self.hessian(&p);
            let (a, b, c) = (t1.dot(&(h * t1)), t1.dot(&(h * t2)), t2.dot(&(h * t2)));
            if !(a > 0.0 && a * c - b * b > 0.0) || !p.iter().all(|v| v.is_finite()) {
                return Err(GeomError::InvalidInput("surface is not strictly convex".into()));
            }
        }
        Ok(())
    }
}

fn positive(values: &[f64]) -> Result<()> {
    if values.iter().all(|v| *v > 0.0 && v.is_finite()) {
        Ok(())
    } else {
        Err(GeomError::InvalidInput("surface parameters must be positive".into()))
    }
}

impl ImplicitOvaloid for Surface {
    fn value(&self, p: &Vec3) -> f64 {
        match *self {
            Surface::Sphere { radius } => p.norm_squared() - radius * radius,
            Surface::Ellipsoid { a, b, c } => (p.x / a).powi(2) + (p.y / b).powi(2) + (p.z / c).powi(2) - 1.0,
            Surface::Quartic { delta } => p.norm_squared() - 1.0 + delta * (p.x.powi(4) + p.y.powi(4) + p.z.powi(4)),
        }
    }

    fn gradient(&self, p: &Vec3) -> Vec3 {
        match *self {
            Surface::Sphere { .. } => p * 2.0,
            Surface::Ellipsoid { a, b, c } => Vec3::new(2.0 * p.x / (a * a), 2.0 * p.y / (b * b), 2.0 * p.z / (c * c)),
            Surface::Quartic { delta } => p * 2.0 + p.map(|v| 4.0 * delta * v.powi(3)),
        }
    }

    fn hessian(&self, p: &Vec3) -> Mat3 {
        match *self {
            Surface::Sphere { .. } => Mat3::identity() * 2.0,
            Surface::Ellipsoid { a, b, c } => {
                Mat3::from_diagonal(&Vec3::new(2.0 / (a * a), 2.0 / (b * b), 2.0 / (c * c)))
            }
            Surface::Quartic { delta } => Mat3::from_diagonal(&p.map(|v| 2.0 + 12.0 * delta * v * v)),
        }
    }

    fn radial_distance(&self, d: &Vec3) -> f64 {
        match *self {
            Surface::Sphere { radius } => radius,
            Surface::Ellipsoid { a, b, c } => 1.0 / ((d.x / a).powi(2) + (d.y / b).powi(2) + (d.z / c).powi(2)).sqrt(),
            Surface::Quartic { delta } => {
                // r² solves 1 = r² + δ r⁴ Σd⁴.
                let q = delta * (d.x.powi(4) + d.y.powi(4) + d.z.powi(4));
                let r2 = if q.abs() < 1e-300 { 1.0 } else { 2.0 / (1.0 + (1.0 + 4.0 * q).sqrt()) };
                r2.sqrt()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_lookup() {
        assert_eq!(Surface::from_name("sphere", &[]).unwrap(), Surface::Sphere { radius: 1.0 });
        assert_eq!(Surface::from_name("spheroid", &[]).unwrap(), Surface::Ellipsoid { a: 1.0, b: 1.0, c: 1.5 });
        assert_eq!(Surface::from_name("quartic", &[0.1]).unwrap(), Surface::Quartic { delta: 0.1 });
        assert!(Surface::from_name("torus", &[]).is_err());
        assert!(Surface::from_name("ellipsoid", &[1.0]).is_err());
        assert!(Surface::sphere(-1.0).is_err());
        // Strongly negative quartic terms create saddle regions.
        assert!(Surface::quartic(-0.4).is_err());
    }

    #[test]
    fn radial_points_lie_on_surface() {
        for s in [
            Surface::sphere(2.0).unwrap(),
            Surface::ellipsoid(1.0, 1.2, 1.5).unwrap(),
            Surface::quartic(0.1).unwrap(),
            Surface::quartic(-0.05).unwrap(),
        ] {
            for d in fibonacci_directions(50) {
                let p = s.radial_point(&d);
                assert!(s.value(&p).abs() < 1e-14, "{s:?}");
                // The generic Newton route agrees with the closed forms.
                struct Generic(Surface);
                impl ImplicitOvaloid for Generic {
                    fn value(&self, p: &Vec3) -> f64 {
                        self.0.value(p)
                    }
                    fn gradient(&self, p: &Vec3) -> Vec3 {
                        self.0.gradient(p)
                    }
                    fn hessian(&self, p: &Vec3) -> Mat3 {
                        self.0.hessian(p)
                    }
                }
                assert!((Generic(s).radial_distance(&d) - s.radial_distance(&d)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let s = Surface::quartic(0.1).unwrap();
        let p = Vec3::new(0.3, -0.7, 0.5);
        let h = 1e-6;
        for i in 0..3 {
            let mut e = Vec3::zeros();
            e[i] = h;
            let fd = (s.value(&(p + e)) - s.value(&(p - e))) / (2.0 * h);
            assert!((fd - s.gradient(&p)[i]).abs() < 1e-8);
            let fd2 = (s.gradient(&(p + e)) - s.gradient(&(p - e))) / (2.0 * h);
            assert!((fd2 - s.hessian(&p).column(i)).norm() < 1e-7);
        }
    }

    #[test]
    fn exterior_test() {
        let s = Surface::spheroid(1.0, 1.5).unwrap();
        assert!(is_exterior(&s, &Vec3::new(0.0, 0.0, 2.0)));
        assert!(!is_exterior(&s, &Vec3::new(0.0, 0.0, 1.2)));
        assert!(!is_exterior(&s, &Vec3::new(0.0, 0.0, 1.5)));
        assert!(is_exterior(&s, &Vec3::new(1.1, 0.0, 0.0)));
    }
}
