//! Command-line front end: `construct`, `verify`, `scan3d` and `render`.
//!
//! Exit codes: 0 when a verification passes (or a command succeeds), 1 when
//! it fails, 2 on usage or precondition errors. Errors are reported on
//! standard error prefixed with their stable name.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{GeomError, Result};

mod recipe;
mod render;
mod scan;
mod verify;

pub use recipe::{run_recipe, Recipe};
pub use render::{render_document_svg, render_scan_svg, View};
pub use verify::CheckName;

#[derive(Debug, Parser)]
#[command(name = "equitangent", version, about = "Equitangent curves and surfaces: constructions and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a curve from a JSON recipe.
    Construct {
        #[arg(long)]
        recipe: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named check on a curve file and print a JSON report.
    Verify(verify::VerifyArgs),
    /// Scan a grid for equitangent sources of a corpus surface.
    Scan3d(scan::ScanArgs),
    /// Draw a curve document or a scan CSV as SVG.
    Render {
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        curve: Option<PathBuf>,
        #[arg(long)]
        scan: Option<PathBuf>,
        /// Coordinate plane used for scan points.
        #[arg(long, value_enum, default_value_t = View::Xz)]
        view: View,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Construct { recipe, out } => {
            let text = read_file(&recipe)?;
            let recipe: Recipe = serde_json::from_str(&text)
                .map_err(|e| GeomError::InvalidInput(format!("recipe {}: {e}", recipe.display())))?;
            let doc = run_recipe(&recipe)?;
            write_output(out.as_deref(), &(pretty(&doc) + "\n"))?;
            Ok(Outcome::Pass)
        }
        Command::Verify(args) => verify::run(&args),
        Command::Scan3d(args) => scan::run(&args),
        Command::Render { curve, scan, view, out } => {
            let svg = match (curve, scan) {
                (Some(path), _) => {
                    let value: serde_json::Value = serde_json::from_str(&read_file(&path)?)
                        .map_err(|e| GeomError::InvalidInput(format!("{}: {e}", path.display())))?;
                    render_document_svg(&value)?
                }
                (None, Some(path)) => render_scan_svg(&scan::parse_scan_csv(&read_file(&path)?)?, view),
                (None, None) => return Err(GeomError::InvalidInput("render needs --curve or --scan".into())),
            };
            write_output(out.as_deref(), &svg)?;
            Ok(Outcome::Pass)
        }
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| GeomError::InvalidInput(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or to standard output when absent.
pub(crate) fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|e| GeomError::InvalidInput(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| GeomError::InvalidInput(format!("stdout: {e}")))
        }
    }
}

pub(crate) fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

/// Parses exactly `N` comma-separated reals.
pub(crate) fn parse_reals<const N: usize>(text: &str, what: &str) -> Result<[f64; N]> {
    let values: Vec<f64> = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| GeomError::InvalidInput(format!("{what}: {text:?} is not a list of numbers")))?;
    values
        .try_into()
        .map_err(|v: Vec<f64>| GeomError::InvalidInput(format!("{what}: expected {N} numbers, got {}", v.len())))
}
