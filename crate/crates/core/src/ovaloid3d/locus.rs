//! Grid scans for equitangent sources and certificates about their shape.

use std::str::FromStr;

use rayon::prelude::*;

use super::contact::tangent_length_spread;
use super::{is_exterior, tangent_basis, ImplicitOvaloid, Vec3};
use crate::error::{GeomError, Result};
use crate::report::csv_row;

/// A plane point with tangent-length spread above this is a witness that the
/// plane is not contained in the equitangent locus.
pub const WITNESS_SPREAD: f64 = 1e-3;

/// Regular grid `nx × ny × nz` over the cube `[min, max]³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub min: f64,
    pub max: f64,
}

impl Grid {
    fn coord(&self, i: usize, n: usize) -> f64 {
        if n == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (n - 1) as f64
        }
    }

    /// Points with x varying slowest and z fastest.
    pub fn points(&self) -> Vec<Vec3> {
        let mut out = Vec::with_capacity(self.nx * self.ny * self.nz);
        for i in 0..self.nx {
            for j in 0..self.ny {
                for k in 0..self.nz {
                    out.push(Vec3::new(self.coord(i, self.nx), self.coord(j, self.ny), self.coord(k, self.nz)));
                }
            }
        }
        out
    }
}

/// Parses `"nx,ny,nz,min,max"`.
impl FromStr for Grid {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || GeomError::InvalidInput(format!("grid {s:?} is not \"nx,ny,nz,min,max\""));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(bad());
        }
        let count = |t: &str| t.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad);
        let real = |t: &str| t.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
        let grid = Grid {
            nx: count(parts[0])?,
            ny: count(parts[1])?,
            nz: count(parts[2])?,
            min: real(parts[3])?,
            max: real(parts[4])?,
        };
        if grid.min > grid.max {
            return Err(bad());
        }
        Ok(grid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusRow {
    pub point: Vec3,
    pub spread: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LocusScan {
    /// Every exterior point with its spread, in input order.
    pub exterior: Vec<LocusRow>,
    /// Exterior points with spread below the tolerance, in input order.
    pub equitangent: Vec<LocusRow>,
    pub interior_skipped: usize,
    /// Exterior points whose contact curve could not be traced.
    pub failed: usize,
}

/// Tangent-length spread at every exterior point, in parallel; the output
/// order follows the input regardless of the worker count.
pub fn sample_equitangent_locus<S: ImplicitOvaloid + ?Sized>(
    s: &S,
    points: &[Vec3],
    tol: f64,
    samples: usize,
) -> LocusScan {
    enum Outcome {
        Interior,
        Failed,
        Row(LocusRow),
    }
    let outcomes: Vec<Outcome> = points
        .par_iter()
        .map(|x| {
            if !is_exterior(s, x) {
                return Outcome::Interior;
            }
            match tangent_length_spread(s, x, samples) {
                Ok(l) => Outcome::Row(LocusRow { point: *x, spread: l.spread }),
                Err(_) => Outcome::Failed,
            }
        })
        .collect();
    let mut scan = LocusScan::default();
    for o in outcomes {
        match o {
            Outcome::Interior => scan.interior_skipped += 1,
            Outcome::Failed => scan.failed += 1,
            Outcome::Row(row) => {
                if row.spread < tol {
                    scan.equitangent.push(row);
                }
                scan.exterior.push(row);
            }
        }
    }
    scan
}

/// CSV with header `x,y,z,spread`.
pub fn locus_csv(rows: &[LocusRow]) -> String {
    let mut out = String::from("x,y,z,spread\n");
    for r in rows {
        out.push_str(&csv_row(&[r.point.x, r.point.y, r.point.z, r.spread]));
    }
    out
}

/// A line through at least three of the given points.
#[derive(Debug, Clone, PartialEq)]
pub struct LineFit {
    pub point: Vec3,
    pub direction: Vec3,
    /// Indices of the points within the tolerance of the line, ascending.
    pub members: Vec<usize>,
}

/// Maximal sets of three or more points lying within `tol` of a common line.
pub fn find_collinear_lines(points: &[Vec3], tol: f64) -> Vec<LineFit> {
    let mut lines: Vec<LineFit> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let span = points[j] - points[i];
            if span.norm() <= tol {
                continue;
            }
            let direction = span.normalize();
            let members: Vec<usize> = (0..points.len())
                .filter(|&k| {
                    let v = points[k] - points[i];
                    (v - direction * v.dot(&direction)).norm() <= tol
                })
                .collect();
            if members.len() >= 3 && !lines.iter().any(|l| l.members == members) {
                lines.push(LineFit { point: points[i], direction, members });
            }
        }
    }
    lines
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pub point: Vec3,
    pub normal: Vec3,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWitness {
    pub plane: Plane,
    pub point: Vec3,
    pub spread: f64,
}

/// The exterior point of an `n_side × n_side` patch of `plane` (half-width
/// `extent`, centered at the plane's point) with the largest spread, if that
/// spread exceeds [`WITNESS_SPREAD`].
pub fn plane_witness<S: ImplicitOvaloid + ?Sized>(
    s: &S,
    plane: Plane,
    extent: f64,
    n_side: usize,
    samples: usize,
) -> Option<PlaneWitness> {
    let (u, v) = tangent_basis(&plane.normal.normalize());
    let coord = |i: usize| if n_side == 1 { 0.0 } else { -extent + 2.0 * extent * i as f64 / (n_side - 1) as f64 };
    let points: Vec<Vec3> =
        (0..n_side * n_side).map(|k| plane.point + u * coord(k / n_side) + v * coord(k % n_side)).collect();
    let scan = sample_equitangent_locus(s, &points, 0.0, samples);
    scan.exterior
        .iter()
        .copied()
        .max_by(|a, b| a.spread.total_cmp(&b.spread))
        .filter(|r| r.spread > WITNESS_SPREAD)
        .map(|r| PlaneWitness { plane, point: r.point, spread: r.spread })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCertificate {
    pub witnesses: Vec<PlaneWitness>,
    /// Candidate planes on which no witness was found.
    pub uncovered: Vec<Plane>,
}

impl PlaneCertificate {
    pub fn certified(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Planes that could contain the sampled locus: the plane through it when
/// it spans one, the pencil of eight planes through its line when it is
/// collinear (both centered on the locus centroid), and otherwise the three
/// coordinate planes through the inner point or the single locus point.
fn candidate_planes(locus: &[Vec3], center: Vec3, tol: f64) -> Vec<Plane> {
    let coordinate = |point: Vec3| [Vec3::x(), Vec3::y(), Vec3::z()].map(|normal| Plane { point, normal }).to_vec();
    let Some(&first) = locus.first() else {
        return coordinate(center);
    };
    let Some(&far) = locus.iter().max_by(|a, b| (*a - first).norm().total_cmp(&(*b - first).norm())) else {
        return coordinate(first);
    };
    if (far - first).norm() <= tol {
        return coordinate(first);
    }
    let dir = (far - first).normalize();
    let centroid = locus.iter().fold(Vec3::zeros(), |acc, p| acc + p) / locus.len() as f64;
    let off_line = locus
        .iter()
        .map(|p| {
            let w = p - first;
            w - dir * w.dot(&dir)
        })
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap();
    if off_line.norm() > tol {
        return vec![Plane { point: centroid, normal: dir.cross(&off_line).normalize() }];
    }
    let (u, v) = tangent_basis(&dir);
    (0..8)
        .map(|k| {
            let a = std::f64::consts::PI * k as f64 / 8.0;
            Plane { point: centroid, normal: u * a.cos() + v * a.sin() }
        })
        .collect()
}

/// Exhibits, for every plane that could contain the sampled locus, a point
/// of that plane that is not equitangent.
pub fn certify_no_plane<S: ImplicitOvaloid + ?Sized>(
    s: &S,
    locus: &[Vec3],
    extent: f64,
    n_side: usize,
    samples: usize,
) -> PlaneCertificate {
    let mut cert = PlaneCertificate { witnesses: Vec::new(), uncovered: Vec::new() };
    for plane in candidate_planes(locus, s.inner_point(), 1e-6) {
        match plane_witness(s, plane, extent, n_side, samples) {
            Some(w) => cert.witnesses.push(w),
            None => cert.uncovered.push(plane),
        }
    }
    cert
}
