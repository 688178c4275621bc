//! `verify`: named checks on a curve file, each reported as JSON.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use super::recipe::point_json;
use super::{parse_reals, pretty, read_file, write_output, Outcome};
use crate::curves2d::{equitangent_residual, exterior_line_samples, width_range, ConvexCurve, Curve};
use crate::ellipse_optics::{converse_check_with, FocalConfig, Verdict};
use crate::error::{GeomError, Result};
use crate::geom2d::{Line2, Point2};
use crate::hyperbolic::{
    equitangent_from_boundary_residual, hyperbolic_width_profile, width_profile_csv, width_spread,
};
use crate::tol::{CONVERSE_ANGLE_TOL, HYPERBOLIC_CHORD_GAP};

const WIDTH_DIRECTIONS: usize = 720;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    /// Equal tangent lengths from points of a line.
    EquitangentLine,
    /// Euclidean width over 720 directions.
    ConstantWidth,
    /// Tangents from the x-axis and hyperbolic width in the upper half-plane.
    HyperbolicWidth,
    /// Focal-angle test along a tangent line and comparison with the focal ellipse.
    EllipseOptics,
}

impl CheckName {
    fn default_tol(self) -> f64 {
        match self {
            CheckName::EquitangentLine => 1e-8,
            CheckName::ConstantWidth => 1e-9,
            CheckName::HyperbolicWidth => 1e-6,
            CheckName::EllipseOptics => CONVERSE_ANGLE_TOL,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Curve document, bare or under a "gamma" key.
    #[arg(long)]
    pub curve: PathBuf,
    #[arg(long, value_enum)]
    pub check: CheckName,
    /// Pass threshold; each check has its own default.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Line "px,py,dx,dy" for equitangent-line; defaults to the document's "ell".
    #[arg(long, allow_hyphen_values = true)]
    pub line: Option<String>,
    /// Parameter range "t0,t1" along the line, or x-range for hyperbolic-width.
    #[arg(long, allow_hyphen_values = true)]
    pub span: Option<String>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// Interior points "px,py,qx,qy" for ellipse-optics.
    #[arg(long, allow_hyphen_values = true)]
    pub foci: Option<String>,
    /// Outward normal angle of the fixed tangent line for ellipse-optics.
    #[arg(long, allow_hyphen_values = true)]
    pub tangent_at: Option<f64>,
    /// Also write the hyperbolic width profile as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Loads a curve and the surrounding document.
pub(crate) fn load_curve_document(text: &str) -> Result<(Curve, Value)> {
    let doc: Value = serde_json::from_str(text).map_err(|e| GeomError::InvalidInput(format!("curve JSON: {e}")))?;
    let curve = match doc.get("gamma") {
        Some(g) => Curve::from_value(g.clone())?,
        None => Curve::from_value(doc.clone())?,
    };
    Ok((curve, doc))
}

pub(crate) fn line_from_json(v: &Value) -> Result<Line2> {
    let pair = |key: &str| -> Result<Point2> {
        let arr: [f64; 2] = serde_json::from_value(v[key].clone())
            .map_err(|_| GeomError::InvalidInput(format!("line needs a two-number \"{key}\"")))?;
        Ok(Point2::new(arr[0], arr[1]))
    };
    Line2::new(pair("point")?, pair("direction")?)
}

pub fn run(args: &VerifyArgs) -> Result<Outcome> {
    let (curve, doc) = load_curve_document(&read_file(&args.curve)?)?;
    let tol = args.tol.unwrap_or(args.check.default_tol());
    if !(tol > 0.0) {
        return Err(GeomError::InvalidInput("--tol must be positive".into()));
    }
    let (report, pass) = match args.check {
        CheckName::EquitangentLine => equitangent_line(&curve, &doc, args, tol)?,
        CheckName::ConstantWidth => {
            let (min, max) = width_range(&curve, WIDTH_DIRECTIONS);
            let spread = max - min;
            let pass = spread < tol;
            (json!({"min": min, "max": max, "spread": spread, "directions": WIDTH_DIRECTIONS}), pass)
        }
        CheckName::HyperbolicWidth => hyperbolic_width(&curve, args, tol)?,
        CheckName::EllipseOptics => ellipse_optics(&curve, args, tol)?,
    };
    let mut report = report;
    let name = args.check.to_possible_value().expect("checks are named").get_name().to_string();
    report["check"] = json!(name);
    report["tol"] = json!(tol);
    report["pass"] = json!(pass);
    write_output(args.out.as_deref(), &(pretty(&report) + "\n"))?;
    Ok(Outcome::from_bool(pass))
}

fn equitangent_line(curve: &Curve, doc: &Value, args: &VerifyArgs, tol: f64) -> Result<(Value, bool)> {
    let line = match (&args.line, doc.get("ell")) {
        (Some(text), _) => {
            let [px, py, dx, dy] = parse_reals::<4>(text, "--line")?;
            Line2::new(Point2::new(px, py), Point2::new(dx, dy))?
        }
        (None, Some(ell)) => line_from_json(ell)?,
        (None, None) => return Err(GeomError::InvalidInput("equitangent-line needs --line".into())),
    };
    let (t0, t1) = match &args.span {
        Some(text) => {
            let [a, b] = parse_reals::<2>(text, "--span")?;
            (a, b)
        }
        None => {
            // The curve's shadow on the line, widened by a diameter each way.
            let ts: Vec<f64> = curve.boundary_polygon(720).iter().map(|&p| line.param_of(p)).collect();
            let lo = ts.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let d = curve.diameter();
            (lo - d, hi + d)
        }
    };
    let locus = exterior_line_samples(curve, line.point(), line.direction(), t0, t1, args.samples.unwrap_or(50));
    let (residual, worst) = equitangent_residual(curve, &locus)?;
    let pass = residual < tol;
    Ok((
        json!({"residual": residual, "worst_point": point_json(worst), "samples": locus.len(), "span": [t0, t1]}),
        pass,
    ))
}

fn hyperbolic_width(curve: &Curve, args: &VerifyArgs, tol: f64) -> Result<(Value, bool)> {
    let [x0, x1] = match &args.span {
        Some(text) => parse_reals::<2>(text, "--span")?,
        None => [-10.0, 10.0],
    };
    let n = args.samples.unwrap_or(100).max(1);
    let xs: Vec<f64> = (0..n).map(|k| if n == 1 { x0 } else { x0 + (x1 - x0) * k as f64 / (n - 1) as f64 }).collect();
    let residual = equitangent_from_boundary_residual(curve, &xs)?;
    if residual > HYPERBOLIC_CHORD_GAP {
        return Ok((
            json!({"equitangent_residual": residual, "width_min": null, "width_max": null, "spread": null}),
            false,
        ));
    }
    let profile = hyperbolic_width_profile(curve, &xs)?;
    if let Some(path) = &args.csv {
        write_output(Some(path), &width_profile_csv(&profile))?;
    }
    let spread = width_spread(&profile);
    let lo = profile.iter().map(|s| s.width).fold(f64::INFINITY, f64::min);
    let hi = profile.iter().map(|s| s.width).fold(f64::NEG_INFINITY, f64::max);
    let pass = residual < tol && spread < tol;
    Ok((json!({"equitangent_residual": residual, "width_min": lo, "width_max": hi, "spread": spread}), pass))
}

fn ellipse_optics(curve: &Curve, args: &VerifyArgs, tol: f64) -> Result<(Value, bool)> {
    let text = args.foci.as_deref().ok_or_else(|| GeomError::InvalidInput("ellipse-optics needs --foci".into()))?;
    let [px, py, qx, qy] = parse_reals::<4>(text, "--foci")?;
    let cfg = FocalConfig::at_normal(
        curve.to_support(),
        Point2::new(px, py),
        Point2::new(qx, qy),
        args.tangent_at.unwrap_or(FRAC_PI_2),
    )?;
    let report = converse_check_with(&cfg, args.samples.unwrap_or(64), tol)?;
    let pass = report.verdict == Verdict::Ellipse;
    Ok((serde_json::to_value(&report).expect("reports always serialize"), pass))
}
