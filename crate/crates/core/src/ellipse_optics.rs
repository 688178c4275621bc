//! Focal properties of tangent lines.
//!
//! For an ellipse with foci `P`, `Q` and a tangent line `ℓ`, every point `X`
//! of `ℓ` sees the second tangent `L_X` at the same acute angle to `XQ` as
//! `ℓ` makes with `XP`. The converse check samples `X` along `ℓ` and, if
//! the angles agree, compares the curve with the ellipse having foci `P`,
//! `Q` tangent to `ℓ`.

use serde::Serialize;

use crate::curves2d::{hausdorff, ConvexCurve, SupportCurve};
use crate::error::{GeomError, Result};
use crate::geom2d::{angle_between, Line2, Point2};
use crate::numeric::angle_distance;
use crate::tol::{CONVERSE_ANGLE_TOL, CONVERSE_HAUSDORFF_TOL, GEOM_EPS};

/// Half-width, in curve diameters, of the stretch of `ℓ` sampled by
/// [`converse_check`].
const CONVERSE_SPAN: f64 = 8.0;
/// Samples closer than this to the tangency point are skipped.
const CONVERSE_EXCLUSION: f64 = 1e-3;
const HAUSDORFF_SAMPLES: usize = 720;

/// Curve, two interior points and a tangent line with its contact parameter.
#[derive(Debug, Clone)]
pub struct FocalConfig {
    curve: SupportCurve,
    p: Point2,
    q: Point2,
    ell: Line2,
    p0: f64,
}

impl FocalConfig {
    /// Finds the contact parameter of `ell`; fails unless `ell` supports the
    /// curve and `p`, `q` are strictly interior.
    pub fn new(curve: SupportCurve, p: Point2, q: Point2, ell: Line2) -> Result<Self> {
        for pt in [p, q] {
            if curve.signed_distance(pt) >= -GEOM_EPS {
                return Err(GeomError::InvalidInput(format!("({}, {}) is not interior", pt.x, pt.y)));
            }
        }
        let n = ell.normal();
        let offset = ell.point().dot(n);
        let p0 = if (curve.support(n.angle()) - offset).abs() <= GEOM_EPS {
            n.angle()
        } else if (curve.support((-n).angle()) + offset).abs() <= GEOM_EPS {
            (-n).angle()
        } else {
            return Err(GeomError::InvalidInput("line is not tangent to the curve".into()));
        };
        Ok(FocalConfig { curve, p, q, ell, p0 })
    }

    /// The configuration tangent at normal angle `p0`.
    pub fn at_normal(curve: SupportCurve, p: Point2, q: Point2, p0: f64) -> Result<Self> {
        let ell = Line2::new(curve.point_at(p0), Point2::polar(p0).perp())?;
        FocalConfig::new(curve, p, q, ell)
    }

    pub fn curve(&self) -> &SupportCurve {
        &self.curve
    }

    pub fn p(&self) -> Point2 {
        self.p
    }

    pub fn q(&self) -> Point2 {
        self.q
    }

    pub fn ell(&self) -> &Line2 {
        &self.ell
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn tangency_point(&self) -> Point2 {
        self.curve.point_at(self.p0)
    }
}

/// The tangent from `x ∈ ℓ` other than `ℓ` itself.
pub fn second_tangent(cfg: &FocalConfig, x: Point2) -> Result<Line2> {
    let off = cfg.ell.distance(x);
    if off > GEOM_EPS {
        return Err(GeomError::NotOnLine(off));
    }
    if x.distance(cfg.tangency_point()) <= GEOM_EPS {
        return Err(GeomError::XAtTangency);
    }
    let (t1, t2) = cfg.curve.tangents_from_point(x)?;
    let other = if angle_distance(t1.param, cfg.p0) > angle_distance(t2.param, cfg.p0) { t1 } else { t2 };
    Line2::new(x, cfg.curve.tangent_at(other.param))
}

/// `|∠(ℓ, XP) − ∠(L_X, XQ)|` with unsigned acute angles.
pub fn focal_angle_residual(cfg: &FocalConfig, x: Point2) -> Result<f64> {
    let lx = second_tangent(cfg, x)?;
    let alpha = angle_between(&cfg.ell, &Line2::through(x, cfg.p)?);
    let beta = angle_between(&lx, &Line2::through(x, cfg.q)?);
    Ok((alpha - beta).abs())
}

/// `|RP·SQ − PB·QA|`, where `R`, `S` are the feet of `P`, `Q` on `ℓ` and
/// `B`, `A` the feet of `P`, `Q` on `L_X`.
pub fn product_identity_residual(cfg: &FocalConfig, x: Point2) -> Result<f64> {
    let lx = second_tangent(cfg, x)?;
    let rp = cfg.ell.distance(cfg.p);
    let sq = cfg.ell.distance(cfg.q);
    let pb = lx.distance(cfg.p);
    let qa = lx.distance(cfg.q);
    Ok((rp * sq - pb * qa).abs())
}

/// The ellipse with foci `p`, `q` tangent to `ell`: its major axis is the
/// distance from `p` to the mirror image of `q` in `ell`.
pub fn focal_ellipse(p: Point2, q: Point2, ell: &Line2) -> Result<SupportCurve> {
    if ell.signed_distance(p) * ell.signed_distance(q) <= 0.0 {
        return Err(GeomError::InvalidInput("foci must lie strictly on one side of the line".into()));
    }
    let a = 0.5 * p.distance(ell.reflect(q));
    let c = 0.5 * p.distance(q);
    let b = (a * a - c * c).sqrt();
    let rotation = if c > 0.0 { (q - p).angle() } else { 0.0 };
    SupportCurve::ellipse(p.lerp(q, 0.5), a, b, rotation)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Angle test passed and the curve matches the focal ellipse.
    Ellipse,
    /// Angle test failed.
    NotEllipse,
    /// Angle test passed but the curve is far from the focal ellipse.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConverseReport {
    pub max_angle_residual: f64,
    pub max_product_residual: f64,
    /// Distance to the focal ellipse; computed only when the angle test passes.
    pub hausdorff: Option<f64>,
    pub verdict: Verdict,
    pub excluded_samples: usize,
}

/// `X` positions on `ℓ` used by [`converse_check`], and how many of the
/// evenly spaced candidates fell too close to the tangency point.
pub fn converse_samples(cfg: &FocalConfig, n_samples: usize) -> (Vec<Point2>, usize) {
    let t0 = cfg.ell.param_of(cfg.tangency_point());
    let half = CONVERSE_SPAN * cfg.curve.diameter();
    let mut xs = Vec::with_capacity(n_samples);
    let mut excluded = 0;
    for k in 0..n_samples {
        let s = if n_samples > 1 { -half + 2.0 * half * k as f64 / (n_samples - 1) as f64 } else { half };
        if s.abs() < CONVERSE_EXCLUSION {
            excluded += 1;
        } else {
            xs.push(cfg.ell.at(t0 + s));
        }
    }
    (xs, excluded)
}

/// Samples the angle test along `ℓ` and, when it passes, measures the
/// Hausdorff distance to the focal ellipse.
pub fn converse_check(cfg: &FocalConfig, n_samples: usize) -> Result<ConverseReport> {
    converse_check_with(cfg, n_samples, CONVERSE_ANGLE_TOL)
}

/// [`converse_check`] with a custom angle-test threshold.
pub fn converse_check_with(cfg: &FocalConfig, n_samples: usize, angle_tol: f64) -> Result<ConverseReport> {
    let (xs, excluded_samples) = converse_samples(cfg, n_samples);
    if xs.is_empty() {
        return Err(GeomError::InvalidInput("no usable samples on the tangent line".into()));
    }
    let mut max_angle: f64 = 0.0;
    let mut max_product: f64 = 0.0;
    for &x in &xs {
        max_angle = max_angle.max(focal_angle_residual(cfg, x)?);
        max_product = max_product.max(product_identity_residual(cfg, x)?);
    }
    let (hausdorff, verdict) = if max_angle < angle_tol {
        let target = focal_ellipse(cfg.p, cfg.q, &cfg.ell)?;
        let d = hausdorff(&cfg.curve, &target, HAUSDORFF_SAMPLES);
        (Some(d), if d < CONVERSE_HAUSDORFF_TOL { Verdict::Ellipse } else { Verdict::Inconsistent })
    } else {
        (None, Verdict::NotEllipse)
    };
    Ok(ConverseReport {
        max_angle_residual: max_angle,
        max_product_residual: max_product,
        hausdorff,
        verdict,
        excluded_samples,
    })
}
