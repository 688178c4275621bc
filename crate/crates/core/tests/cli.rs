use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_equitangent"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn construct(dir: &Path, name: &str, recipe: &str) -> PathBuf {
    let recipe_path = write(dir, &format!("{name}.recipe.json"), recipe);
    let out = dir.join(format!("{name}.json"));
    let o = run(&["construct", "--recipe", recipe_path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn four_arc_curve_verifies() {
    let dir = TempDir::new().unwrap();
    let curve = construct(dir.path(), "fig", r#"{"construction":"figure1"}"#);
    let doc = json(&curve);
    assert_eq!(doc["gamma"]["arcs"].as_array().unwrap().len(), 4);
    let report = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "--curve",
        curve.to_str().unwrap(),
        "--check",
        "equitangent-line",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let r = json(&report);
    assert_eq!(r["pass"], true);
    assert!(r["residual"].as_f64().unwrap() < 1e-8);

    // A line parallel to the radical axis is not equitangent.
    let ell = &doc["ell"];
    let (p, d) = (&ell["point"], &ell["direction"]);
    let (px, py, dx, dy) =
        (p[0].as_f64().unwrap(), p[1].as_f64().unwrap(), d[0].as_f64().unwrap(), d[1].as_f64().unwrap());
    let shifted = format!("{},{},{dx},{dy}", px - 0.3 * dy, py + 0.3 * dx);
    let o = run(&["verify", "--curve", curve.to_str().unwrap(), "--check", "equitangent-line", "--line", &shifted]);
    assert_eq!(code(&o), 1);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["pass"], false);
}

#[test]
fn off_axis_points_need_snapping() {
    let dir = TempDir::new().unwrap();
    let raw =
        r#"{"construction":"figure1","c1":[2.41,5.65,0.96],"c2":[2.41,2.19,1.72],"x":[0.32,4.22],"y":[5.98,4.22]"#;
    let recipe = write(dir.path(), "raw.json", &format!("{raw}}}"));
    let o = run(&["construct", "--recipe", recipe.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotOnRadicalAxis"));
    construct(dir.path(), "snapped", &format!(r#"{raw},"snap_to_axis":true}}"#));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let reuleaux = construct(d, "r5", r#"{"construction":"reuleaux","n":5,"lambda":1.0,"epsilon":0.25}"#);
    let r = reuleaux.to_str().unwrap();
    assert_eq!(code(&run(&["verify", "--curve", r, "--check", "constant-width"])), 0);
    assert_eq!(code(&run(&["verify", "--curve", r, "--check", "ellipse-optics", "--foci", "-0.2,0,0.2,0"])), 1);
    assert_eq!(code(&run(&["verify", "--curve", r, "--check", "hyperbolic-width"])), 2);

    let even = write(d, "even.json", r#"{"construction":"reuleaux","n":4,"lambda":1.0,"epsilon":0.1}"#);
    let o = run(&["construct", "--recipe", even.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("EvenN"));

    let unknown = write(d, "unknown.json", r#"{"construction":"reuleaux","n":5,"lambda":1.0,"epsilon":0.1,"x":1}"#);
    assert_eq!(code(&run(&["construct", "--recipe", unknown.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["construct", "--recipe", d.join("missing.json").to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify", "--curve", r])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["scan3d", "--surface", "torus"])), 2);
    assert_eq!(code(&run(&["scan3d", "--surface", "sphere", "--grid", "3,3"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn ellipse_optics_on_exact_ellipse() {
    let dir = TempDir::new().unwrap();
    let n = 256;
    let samples: Vec<Value> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            serde_json::json!({"theta": t, "h": (4.0 * t.cos().powi(2) + t.sin().powi(2)).sqrt()})
        })
        .collect();
    let curve =
        write(dir.path(), "ellipse.json", &serde_json::json!({"type": "support", "samples": samples}).to_string());
    let f = 3f64.sqrt();
    let foci = format!("{},0,{f},0", -f);
    let o = run(&["verify", "--curve", curve.to_str().unwrap(), "--check", "ellipse-optics", "--foci", &foci]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["verdict"], "ellipse");
    assert!(r["hausdorff"].as_f64().unwrap() < 1e-6);
}

#[test]
fn hyperbolic_witness_and_csv() {
    let dir = TempDir::new().unwrap();
    let curve =
        construct(dir.path(), "hyp", r#"{"construction":"hyperbolic_reuleaux","circumradius":0.6,"epsilon":0.15}"#);
    let csv = dir.path().join("width.csv");
    let o = run(&[
        "verify",
        "--curve",
        curve.to_str().unwrap(),
        "--check",
        "hyperbolic-width",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,L1,L2,width"));
    assert_eq!(lines.count(), 100);
}

#[test]
fn scan_outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let mut outputs = Vec::new();
    for threads in ["1", "4"] {
        let csv = d.join(format!("scan{threads}.csv"));
        let report = d.join(format!("scan{threads}.json"));
        let o = bin()
            .env("RAYON_NUM_THREADS", threads)
            .args([
                "scan3d",
                "--surface",
                "spheroid",
                "--grid",
                "5,5,7,-3,3",
                "--samples",
                "64",
                "--certify",
                "--out",
                csv.to_str().unwrap(),
                "--report",
                report.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push((fs::read(&csv).unwrap(), fs::read(&report).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    let r: Value = serde_json::from_slice(&outputs[0].1).unwrap();
    assert_eq!(r["plane_certificate"]["certified"], true);
    let rows = String::from_utf8(outputs[0].0.clone()).unwrap();
    for line in rows.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|t| t.parse().unwrap()).collect();
        assert!(v[0].hypot(v[1]) < 1e-6, "{line}");
    }
    assert!(rows.lines().count() > 1);

    let svg = d.join("scan.svg");
    let o = run(&["render", "--scan", d.join("scan1.csv").to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));
}

#[test]
fn construct_and_render_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = construct(dir.path(), "a", r#"{"construction":"radical_polygon","n":5,"lambda":1.0,"epsilon":0.25}"#);
    let b = construct(dir.path(), "b", r#"{"construction":"radical_polygon","n":5,"lambda":1.0,"epsilon":0.25}"#);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(json(&a)["Gamma"].as_array().unwrap().len(), 10);

    let svg = run(&["render", "--curve", a.to_str().unwrap()]);
    assert_eq!(code(&svg), 0);
    let text = String::from_utf8(svg.stdout).unwrap();
    assert!(text.contains("<svg") && text.contains("<path"));
    assert_eq!(text, String::from_utf8(run(&["render", "--curve", a.to_str().unwrap()]).stdout).unwrap());
}
