//! Principal curvatures from the implicit form, umbilics, and the
//! line-of-curvature check along contact curves.

use rayon::prelude::*;
use serde::Serialize;

use super::contact::contact_curve;
use super::{fibonacci_directions, tangent_basis, ImplicitOvaloid, Vec3};
use crate::error::{GeomError, Result};
use crate::numeric::nelder_mead_2d;
use crate::tol::{SOURCE_SPREAD_TOL, SURFACE_EPS, UMBILIC_FRAME_EPS};

/// Angular neighbourhood, in units of the mean sample spacing, within which
/// an umbilic seed must be the smallest curvature gap.
const SEED_NEIGHBOURHOOD: f64 = 3.0;
/// Refined umbilics closer than this are one cluster.
const CLUSTER_RADIUS: f64 = 1e-3;

/// Principal curvatures `k1 ≥ k2` with unit principal directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvatureData {
    pub k1: f64,
    pub k2: f64,
    pub e1: [f64; 3],
    pub e2: [f64; 3],
}

impl CurvatureData {
    pub fn e1(&self) -> Vec3 {
        Vec3::from(self.e1)
    }

    pub fn e2(&self) -> Vec3 {
        Vec3::from(self.e2)
    }

    /// `(k1 − k2) / (1 + |k1|)`.
    pub fn relative_gap(&self) -> f64 {
        (self.k1 - self.k2) / (1.0 + self.k1.abs())
    }
}

/// Shape operator `tᵢᵀ H tⱼ / |∇F|` in a tangent basis, diagonalised in
/// closed form.
pub fn principal_curvatures<S: ImplicitOvaloid + ?Sized>(s: &S, p: &Vec3) -> Result<CurvatureData> {
    let f = s.value(p);
    if !(f.abs() < SURFACE_EPS) {
        return Err(GeomError::NotOnSurface(f.abs()));
    }
    let g = s.gradient(p);
    let norm = g.norm();
    let (t1, t2) = tangent_basis(&(g / norm));
    let h = s.hessian(p);
    let a = t1.dot(&(h * t1)) / norm;
    let b = t1.dot(&(h * t2)) / norm;
    let d = t2.dot(&(h * t2)) / norm;
    let mean = 0.5 * (a + d);
    let radius = (0.5 * (a - d)).hypot(b);
    let phi = 0.5 * (2.0 * b).atan2(a - d);
    let e1 = t1 * phi.cos() + t2 * phi.sin();
    let e2 = t2 * phi.cos() - t1 * phi.sin();
    Ok(CurvatureData { k1: mean + radius, k2: mean - radius, e1: e1.into(), e2: e2.into() })
}

/// `|k1 − k2| < tol · (1 + |k1|)`.
pub fn is_umbilic<S: ImplicitOvaloid + ?Sized>(s: &S, p: &Vec3, tol: f64) -> Result<bool> {
    Ok(principal_curvatures(s, p)?.relative_gap() < tol)
}

#[derive(Debug, Clone, PartialEq)]
pub enum UmbilicScan {
    /// Every sampled point is umbilic.
    Everywhere { samples: usize },
    /// Isolated umbilics, one representative per cluster.
    Clusters(Vec<Vec3>),
}

/// Samples the surface along `n` spiral directions, refines every local
/// minimum of the curvature gap by Nelder–Mead in a tangent chart, and
/// clusters the refined points whose gap is below `tol`.
pub fn umbilic_scan<S: ImplicitOvaloid + ?Sized>(s: &S, n: usize, tol: f64) -> Result<UmbilicScan> {
    let dirs = fibonacci_directions(n);
    let gap_at = |d: &Vec3| principal_curvatures(s, &s.radial_point(d)).map(|c| c.relative_gap());
    let gaps = dirs.par_iter().map(gap_at).collect::<Result<Vec<f64>>>()?;
    if gaps.iter().all(|&g| g < tol) {
        return Ok(UmbilicScan::Everywhere { samples: n });
    }

    let spacing = (4.0 * std::f64::consts::PI / n as f64).sqrt();
    let cos_radius = (SEED_NEIGHBOURHOOD * spacing).cos();
    let seeds: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&i| (0..n).all(|j| j == i || dirs[i].dot(&dirs[j]) < cos_radius || gaps[j] > gaps[i]))
        .collect();

    let refined: Vec<Option<Vec3>> = seeds
        .par_iter()
        .map(|&i| {
            let d0 = dirs[i];
            let (t1, t2) = tangent_basis(&d0);
            let chart = |u: [f64; 2]| s.radial_point(&(d0 + t1 * u[0] + t2 * u[1]).normalize());
            let objective =
                |u: [f64; 2]| gap_at(&(d0 + t1 * u[0] + t2 * u[1]).normalize()).map_or(f64::INFINITY, |g| g * g);
            let (best, _) = nelder_mead_2d(objective, [0.0, 0.0], spacing, 0.0, 4000);
            let p = chart(best);
            match principal_curvatures(s, &p) {
                Ok(c) if c.relative_gap() < tol => Some(p),
                _ => None,
            }
        })
        .collect();

    let mut clusters: Vec<Vec3> = Vec::new();
    for p in refined.into_iter().flatten() {
        if clusters.iter().all(|c| (c - p).norm() > CLUSTER_RADIUS) {
            clusters.push(p);
        }
    }
    Ok(UmbilicScan::Clusters(clusters))
}

/// Largest angle between the contact curve's tangent and the nearer
/// principal direction, taken as zero where the principal gap is below the
/// umbilic frame tolerance.
pub fn joachimsthal_check<S: ImplicitOvaloid + ?Sized>(s: &S, x: &Vec3, n: usize) -> Result<f64> {
    let curve = contact_curve(s, x, n)?;
    let (lo, hi) = curve.lengths().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), l| (lo.min(l), hi.max(l)));
    if hi - lo >= SOURCE_SPREAD_TOL {
        return Err(GeomError::NotEquitangentSource(hi - lo));
    }
    let mut worst: f64 = 0.0;
    for (p, t) in curve.points.iter().zip(&curve.tangents) {
        let c = principal_curvatures(s, p)?;
        if c.k1 - c.k2 < UMBILIC_FRAME_EPS {
            continue;
        }
        let cos = t.dot(&c.e1()).abs().max(t.dot(&c.e2()).abs());
        // asin of the component off the nearer direction keeps precision
        // for small angles.
        let off = (1.0 - cos * cos).max(0.0).sqrt();
        worst = worst.max(off.asin());
    }
    Ok(worst)
}
