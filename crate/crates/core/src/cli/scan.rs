//! `scan3d`: equitangent sources of a corpus surface on a grid.

use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};

use super::{pretty, write_output, Outcome};
use crate::error::{GeomError, Result};
use crate::ovaloid3d::{
    certify_no_plane, find_collinear_lines, locus_csv, sample_equitangent_locus, Grid, Surface, Vec3,
};

/// Collinearity search is cubic in the number of points; larger loci are
/// reported without it.
const MAX_LINE_SEARCH: usize = 200;
const LINE_TOL: f64 = 1e-6;
/// Side of the sample patch on each candidate plane.
const WITNESS_SIDE: usize = 9;

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// sphere, spheroid, ellipsoid or quartic.
    #[arg(long)]
    pub surface: String,
    /// Comma-separated surface parameters; corpus defaults when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// "nx,ny,nz,min,max".
    #[arg(long, default_value = "11,11,11,-3,3", allow_hyphen_values = true)]
    pub grid: String,
    /// Spread below which a source counts as equitangent.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Contact-curve samples per source.
    #[arg(long, default_value_t = crate::tol::CONTACT_SAMPLES)]
    pub samples: usize,
    /// Look for witnesses that no plane lies in the locus.
    #[arg(long)]
    pub certify: bool,
    /// Summary JSON destination.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// CSV destination (x,y,z,spread of the equitangent points).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &ScanArgs) -> Result<Outcome> {
    let params: Vec<f64> = match &args.params {
        None => Vec::new(),
        Some(text) => text
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| GeomError::InvalidInput(format!("--params {text:?} is not a list of numbers")))?,
    };
    let surface = Surface::from_name(&args.surface, &params)?;
    let grid: Grid = args.grid.parse()?;
    if args.samples < 16 {
        return Err(GeomError::InvalidInput("--samples must be at least 16".into()));
    }
    let scan = sample_equitangent_locus(&surface, &grid.points(), args.tol, args.samples);
    write_output(args.out.as_deref(), &locus_csv(&scan.equitangent))?;

    if let Some(path) = &args.report {
        let locus: Vec<Vec3> = scan.equitangent.iter().map(|r| r.point).collect();
        let lines = (locus.len() <= MAX_LINE_SEARCH).then(|| find_collinear_lines(&locus, LINE_TOL).len());
        let mut report = json!({
            "surface": surface,
            "grid": args.grid,
            "tol": args.tol,
            "samples": args.samples,
            "exterior": scan.exterior.len(),
            "equitangent": scan.equitangent.len(),
            "interior_skipped": scan.interior_skipped,
            "failed": scan.failed,
            "lines": lines,
        });
        if args.certify {
            let extent = grid.min.abs().max(grid.max.abs());
            let cert = certify_no_plane(&surface, &locus, extent, WITNESS_SIDE, args.samples);
            let v3 = |v: Vec3| json!([v.x, v.y, v.z]);
            report["plane_certificate"] = json!({
                "certified": cert.certified(),
                "witnesses": cert.witnesses.iter().map(|w| json!({
                    "plane_point": v3(w.plane.point),
                    "plane_normal": v3(w.plane.normal),
                    "point": v3(w.point),
                    "spread": w.spread,
                })).collect::<Vec<Value>>(),
                "uncovered": cert.uncovered.len(),
            });
        }
        write_output(Some(path), &(pretty(&report) + "\n"))?;
    }
    Ok(Outcome::Pass)
}

/// Reads `x,y,z,spread` rows.
pub fn parse_scan_csv(text: &str) -> Result<Vec<[f64; 4]>> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("x,y,z,spread") {
        return Err(GeomError::InvalidInput("scan CSV must start with the header x,y,z,spread".into()));
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| super::parse_reals::<4>(line, &format!("scan row {}", i + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_csv_parsing() {
        let rows = parse_scan_csv("x,y,z,spread\n1,2,3,0\n\n").unwrap();
        assert_eq!(rows, vec![[1.0, 2.0, 3.0, 0.0]]);
        assert!(parse_scan_csv("").is_err());
        assert!(parse_scan_csv("x,y,z,spread\n1,2\n").is_err());
        assert!(parse_scan_csv("x,y,z,spread\n").unwrap().is_empty());
    }
}
