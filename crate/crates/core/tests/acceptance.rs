//! Acceptance criteria, one line per criterion. Each criterion has a
//! wall-clock budget that is asserted together with its tolerances.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use equitangent::constructions::{four_arc_reference_parameters, FourArcCurve, RadicalPolygon, RoundedReuleaux};
use equitangent::curves2d::{equitangent_residual, width_range, ConvexCurve, SupportCurve};
use equitangent::ellipse_optics::{
    converse_check, focal_angle_residual, product_identity_residual, FocalConfig, Verdict,
};
use equitangent::geom2d::{Line2, Point2};
use equitangent::hyperbolic::{
    equitangent_from_boundary_residual, hyperbolic_circle, hyperbolic_width_profile, width_spread, HalfPlanePoint,
    HyperbolicReuleaux,
};
use equitangent::ovaloid3d::{
    certify_no_plane, contact_curve, fibonacci_directions, find_collinear_lines, is_umbilic, joachimsthal_check,
    quadric_oracle_hausdorff, sample_equitangent_locus, umbilic_scan, Grid, ImplicitOvaloid, Surface, UmbilicScan,
    Vec3,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
/// Name, wall-clock budget in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn xs(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

fn circle_equitangency() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    let mut oracle: f64 = 0.0;
    for pair in 0..1000 {
        let c = Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let r = rng.gen_range(0.1..3.0);
        let circle = SupportCurve::circle(c, r).map_err(|e| e.to_string())?;
        let normal = Point2::polar(rng.gen_range(0.0..TAU));
        let foot = c + normal * (r + rng.gen_range(0.05..4.0));
        let line = Line2::new(foot, normal.perp()).map_err(|e| e.to_string())?;
        let locus: Vec<Point2> = (0..10).map(|_| line.at(rng.gen_range(-10.0..10.0))).collect();
        let (res, _) = equitangent_residual(&circle, &locus).map_err(|e| e.to_string())?;
        worst = worst.max(res);
        // Tangent length against the power of the point, on a tenth of the pairs.
        if pair % 10 != 0 {
            continue;
        }
        for &x in &locus {
            let (t1, _) = circle.tangents_from_point(x).map_err(|e| e.to_string())?;
            let power = ((x - c).norm_sq() - r * r).sqrt();
            oracle = oracle.max((t1.length - power).abs() / power.max(1.0));
        }
    }
    ensure(worst < 1e-10, || format!("residual {worst:e}"))?;
    ensure(oracle < 1e-10, || format!("tangent length vs power of point {oracle:e}"))?;
    Ok(format!("max residual {worst:.2e} over 1000 pairs x 10 points"))
}

fn four_arc_construction() -> Check {
    let (c1, c2, x, y) = four_arc_reference_parameters();
    let fig = FourArcCurve::build(c1, c2, x, y).map_err(|e| e.to_string())?;
    let report = fig.curve.report();
    ensure(report.max_joint_gap < 1e-9 && report.max_joint_tangent < 1e-9, || format!("joints {report:?}"))?;
    let locus = fig.axis_locus(50, 3.0);
    ensure(locus.len() == 50 && locus.iter().all(|&p| fig.curve.is_exterior(p)), || "locus not exterior".into())?;
    let (res, _) = equitangent_residual(&fig.curve, &locus).map_err(|e| e.to_string())?;
    ensure(res < 1e-8, || format!("residual {res:e}"))?;
    // The same sample positions moved 0.1 off the radical axis.
    let shift = fig.axis.normal() * 0.1;
    let off: Vec<Point2> = locus.iter().map(|&p| p + shift).collect();
    let (perturbed, _) = equitangent_residual(&fig.curve, &off).map_err(|e| e.to_string())?;
    ensure(perturbed > 1e-4, || format!("perturbed residual only {perturbed:e}"))?;
    Ok(format!(
        "joints {:.1e}/{:.1e}, residual {res:.2e}, perturbed {perturbed:.2e}",
        report.max_joint_gap, report.max_joint_tangent
    ))
}

fn constant_width() -> Check {
    let mut spreads = Vec::new();
    for n in [3, 5, 7] {
        let (lambda, eps) = (1.0, 0.2);
        let r = RoundedReuleaux::build(n, lambda, eps).map_err(|e| e.to_string())?;
        let (lo, hi) = width_range(&r.curve, 720);
        let dev = (lo - (lambda + 2.0 * eps)).abs().max((hi - (lambda + 2.0 * eps)).abs());
        ensure(dev < 1e-9, || format!("n = {n}: width in [{lo}, {hi}]"))?;
        spreads.push(format!("n={n} {dev:.1e}"));
    }
    Ok(format!("deviation from lambda+2eps: {}", spreads.join(", ")))
}

fn radical_polygon_pair() -> Check {
    let poly = RadicalPolygon::build(5, 1.0, 0.25).map_err(|e| e.to_string())?;
    let gamma = RoundedReuleaux::build(5, 1.0, 0.25).map_err(|e| e.to_string())?.curve;
    ensure(poly.vertices.len() == 10, || "not a decagon".into())?;
    let mut pair: f64 = 0.0;
    let mut power: f64 = 0.0;
    let mut ortho: f64 = 0.0;
    for (j, edge) in poly.edges.iter().enumerate() {
        let (a, b) = poly.edge_segment(j);
        for k in 0..20 {
            let p = a.lerp(b, k as f64 / 19.0);
            let (t1, t2) = gamma.tangents_from_point(p).map_err(|e| e.to_string())?;
            pair = pair.max((t1.length - t2.length).abs());
            power = power.max((edge.small.power(p) - edge.large.power(p)).abs());
        }
        ortho = ortho.max((b - a).normalized().dot(edge.side).abs());
    }
    ensure(pair < 1e-8, || format!("tangent pairs differ by {pair:e}"))?;
    ensure(power < 1e-9, || format!("power residual {power:e}"))?;
    ensure(ortho < 1e-10, || format!("edge/side cosine {ortho:e}"))?;
    Ok(format!("pairs {pair:.1e}, power {power:.1e}, orthogonality {ortho:.1e}"))
}

fn hyperbolic_width() -> Check {
    let samples = xs(100, -10.0, 10.0);
    let rho = 0.8;
    let disk = hyperbolic_circle(HalfPlanePoint::new(0.0, 1.0).unwrap(), rho).map_err(|e| e.to_string())?;
    let disk = SupportCurve::circle(disk.center(), disk.radius()).map_err(|e| e.to_string())?;
    let disk_res = equitangent_from_boundary_residual(&disk, &samples).map_err(|e| e.to_string())?;
    ensure(disk_res < 1e-9, || format!("disk equitangency {disk_res:e}"))?;
    let profile = hyperbolic_width_profile(&disk, &samples).map_err(|e| e.to_string())?;
    let disk_spread = width_spread(&profile);
    ensure(disk_spread < 1e-8, || format!("disk width spread {disk_spread:e}"))?;
    let diameter = profile.iter().map(|s| (s.width - 2.0 * rho).abs()).fold(0.0, f64::max);
    ensure(diameter < 1e-8, || format!("disk width differs from 2 rho by {diameter:e}"))?;

    let ellipse = SupportCurve::ellipse(Point2::new(0.0, 3.0), 2.0, 1.0, 0.0).map_err(|e| e.to_string())?;
    let ellipse_res = equitangent_from_boundary_residual(&ellipse, &samples).map_err(|e| e.to_string())?;
    ensure(ellipse_res > 1e-3, || format!("ellipse residual only {ellipse_res:e}"))?;

    let witness = HyperbolicReuleaux::build(0.6, 0.15).map_err(|e| e.to_string())?;
    let w_res = equitangent_from_boundary_residual(&witness.curve, &samples).map_err(|e| e.to_string())?;
    let w_spread = width_spread(&hyperbolic_width_profile(&witness.curve, &samples).map_err(|e| e.to_string())?);
    ensure(w_res < 1e-6 && w_spread < 1e-6, || format!("witness residual {w_res:e}, spread {w_spread:e}"))?;
    Ok(format!("disk {disk_res:.1e}/{disk_spread:.1e}, ellipse {ellipse_res:.2e}, witness {w_res:.1e}/{w_spread:.1e}"))
}

fn focal_config(curve: SupportCurve, p: Point2, q: Point2, normal: f64) -> Result<FocalConfig, String> {
    FocalConfig::at_normal(curve, p, q, normal).map_err(|e| e.to_string())
}

fn ellipse_optics_forward() -> Check {
    let f = 3f64.sqrt();
    let ellipse = || SupportCurve::ellipse(Point2::new(0.0, 0.0), 2.0, 1.0, 0.0).unwrap();
    let cfg = focal_config(ellipse(), Point2::new(-f, 0.0), Point2::new(f, 0.0), FRAC_PI_2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut angle, mut product): (f64, f64) = (0.0, 0.0);
    for _ in 0..100 {
        let mut t = rng.gen_range(-8.0..8.0);
        if f64::abs(t) < 0.05 {
            t += 0.1;
        }
        let x = cfg.ell().at(cfg.ell().param_of(cfg.tangency_point()) + t);
        angle = angle.max(focal_angle_residual(&cfg, x).map_err(|e| e.to_string())?);
        product = product.max(product_identity_residual(&cfg, x).map_err(|e| e.to_string())?);
    }
    ensure(angle < 1e-9, || format!("focal angle residual {angle:e}"))?;
    ensure(product < 1e-8, || format!("product residual {product:e}"))?;

    let mut weakest = f64::INFINITY;
    for (p, q) in [((-1.0, 0.0), (1.0, 0.0)), ((-1.5, 0.2), (1.2, -0.3)), ((0.0, 0.5), (0.0, -0.5))] {
        let cfg = focal_config(ellipse(), Point2::new(p.0, p.1), Point2::new(q.0, q.1), FRAC_PI_2)?;
        let worst = (1..=20)
            .map(|k| focal_angle_residual(&cfg, cfg.ell().at(-6.0 + 0.6 * k as f64 + 0.01)).unwrap_or(0.0))
            .fold(0.0, f64::max);
        weakest = weakest.min(worst);
    }
    ensure(weakest > 1e-3, || format!("non-focal pair residual only {weakest:e}"))?;
    Ok(format!("angle {angle:.1e}, product {product:.1e}, non-focal min-of-max {weakest:.2e}"))
}

fn ellipse_optics_converse() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut passing = 0;
    let mut worst_h: f64 = 0.0;
    for _ in 0..6 {
        let (a, b): (f64, f64) = (rng.gen_range(1.0..3.0), rng.gen_range(0.5..1.0));
        let rot = rng.gen_range(0.0..PI);
        let center = Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let c = (a * a - b * b).sqrt();
        let axis = Point2::polar(rot);
        let curve = SupportCurve::ellipse(center, a, b, rot).map_err(|e| e.to_string())?;
        let cfg = focal_config(curve, center - axis * c, center + axis * c, rng.gen_range(0.0..TAU))?;
        let report = converse_check(&cfg, 64).map_err(|e| e.to_string())?;
        if report.max_angle_residual < 1e-7 {
            passing += 1;
            let h = report.hausdorff.ok_or("no Hausdorff distance for a passing curve")?;
            worst_h = worst_h.max(h);
            ensure(report.verdict == Verdict::Ellipse, || format!("{report:?}"))?;
        }
    }
    ensure(passing == 6, || format!("only {passing} of 6 ellipses pass the angle test"))?;
    ensure(worst_h < 1e-6, || format!("Hausdorff {worst_h:e}"))?;

    // A slightly non-elliptic support function is caught by the angle test.
    let n = 512;
    let wobbly: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            let h = (4.0 * t.cos().powi(2) + t.sin().powi(2)).sqrt() + 1e-3 * (3.0 * t).cos();
            (t, h)
        })
        .collect();
    let f = 3f64.sqrt();
    let wobbly = SupportCurve::from_samples(wobbly).map_err(|e| e.to_string())?;
    let cfg = focal_config(wobbly, Point2::new(-f, 0.0), Point2::new(f, 0.0), FRAC_PI_2)?;
    let r = converse_check(&cfg, 64).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::NotEllipse, || format!("perturbed ellipse {r:?}"))?;

    let reuleaux = SupportCurve::from_arcspline(&RoundedReuleaux::build(3, 1.0, 0.2).unwrap().curve);
    let cfg = focal_config(reuleaux, Point2::new(-0.2, 0.0), Point2::new(0.2, 0.0), FRAC_PI_2)?;
    let r = converse_check(&cfg, 64).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::NotEllipse, || format!("Reuleaux {r:?}"))?;
    Ok(format!("6/6 ellipses pass with Hausdorff <= {worst_h:.1e}; perturbed and Reuleaux rejected"))
}

fn surface_scans() -> Check {
    let grid: Grid = "11,11,11,-3,3".parse().map_err(|e: equitangent::GeomError| e.to_string())?;
    let points = grid.points();

    let sphere = Surface::sphere(1.0).unwrap();
    let sph = sample_equitangent_locus(&sphere, &points, 1e-8, 256);
    ensure(sph.failed == 0 && sph.equitangent.len() == sph.exterior.len(), || {
        format!("sphere: {} of {} exterior points equitangent", sph.equitangent.len(), sph.exterior.len())
    })?;

    let spheroid = Surface::spheroid(1.0, 1.5).unwrap();
    let s = sample_equitangent_locus(&spheroid, &points, 1e-8, 256);
    let locus: Vec<Vec3> = s.equitangent.iter().map(|r| r.point).collect();
    let off_axis = locus.iter().map(|p| p.x.hypot(p.y)).fold(0.0, f64::max);
    ensure(!locus.is_empty() && off_axis < 1e-6 && s.failed == 0, || {
        format!("spheroid locus of {} points, {off_axis:e} off axis", locus.len())
    })?;
    let cert = certify_no_plane(&spheroid, &locus, 3.0, 9, 256);
    ensure(cert.certified() && cert.witnesses.iter().all(|w| w.spread > 1e-3), || format!("{cert:?}"))?;

    let triaxial = Surface::ellipsoid(1.0, 1.2, 1.5).unwrap();
    let t = sample_equitangent_locus(&triaxial, &points, 1e-8, 256);
    let t_locus: Vec<Vec3> = t.equitangent.iter().map(|r| r.point).collect();
    let lines = find_collinear_lines(&t_locus, 1e-6).len();
    ensure(lines < 3 && t.failed == 0, || format!("triaxial: {lines} lines among {} points", t_locus.len()))?;
    Ok(format!(
        "sphere {} exterior all equitangent; spheroid {} axis points, {} plane witnesses; triaxial {} points, {lines} lines",
        sph.exterior.len(),
        locus.len(),
        cert.witnesses.len(),
        t_locus.len()
    ))
}

fn umbilics() -> Check {
    let (a, b, c) = (1.0f64, 1.2f64, 1.5f64);
    let e = Surface::ellipsoid(a, b, c).unwrap();
    // Umbilics lie in the plane of the longest and shortest axes.
    let ux = (a * a * (b * b - a * a) / (c * c - a * a)).sqrt();
    let uz = (c * c * (c * c - b * b) / (c * c - a * a)).sqrt();
    let found = match umbilic_scan(&e, 10_000, 1e-6).map_err(|e| e.to_string())? {
        UmbilicScan::Clusters(found) => found,
        other => return Err(format!("{other:?}")),
    };
    ensure(found.len() == 4, || format!("{} clusters", found.len()))?;
    let mut err: f64 = 0.0;
    for sx in [-1.0, 1.0] {
        for sz in [-1.0, 1.0] {
            let target = Vec3::new(sx * ux, 0.0, sz * uz);
            err = err.max(found.iter().map(|p| (p - target).norm()).fold(f64::INFINITY, f64::min));
        }
    }
    ensure(err < 1e-4, || format!("position error {err:e}"))?;

    let sphere = Surface::sphere(1.0).unwrap();
    let all =
        fibonacci_directions(500).iter().all(|d| is_umbilic(&sphere, &sphere.radial_point(d), 1e-8).unwrap_or(false));
    ensure(all, || "sphere has a non-umbilic sample".into())?;
    let everywhere = umbilic_scan(&sphere, 500, 1e-8).map_err(|e| e.to_string())?;
    ensure(everywhere == UmbilicScan::Everywhere { samples: 500 }, || format!("{everywhere:?}"))?;
    Ok(format!("4 clusters within {err:.1e}; sphere umbilic at 500/500"))
}

fn joachimsthal() -> Check {
    let spheroid = Surface::spheroid(1.0, 1.5).unwrap();
    let mis = joachimsthal_check(&spheroid, &Vec3::new(0.0, 0.0, 3.0), 256).map_err(|e| e.to_string())?;
    ensure(mis < 1e-6, || format!("misalignment {mis:e}"))?;
    let sources = [
        Vec3::new(0.0, 0.0, 3.0),
        Vec3::new(2.0, 1.0, -0.5),
        Vec3::new(-1.5, 2.5, 1.0),
        Vec3::new(0.0, 0.0, 1.6),
        Vec3::new(5.0, 5.0, 5.0),
    ];
    let mut worst: f64 = 0.0;
    for s in [Surface::sphere(1.0).unwrap(), spheroid, Surface::ellipsoid(1.0, 1.2, 1.5).unwrap()] {
        for x in sources {
            let curve = contact_curve(&s, &x, 256).map_err(|e| e.to_string())?;
            worst = worst.max(quadric_oracle_hausdorff(&s, &curve).map_err(|e| e.to_string())?);
        }
    }
    ensure(worst < 1e-8, || format!("oracle Hausdorff {worst:e}"))?;
    Ok(format!("misalignment {mis:.1e}, oracle Hausdorff {worst:.1e} over 15 contact curves"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("circle equitangency", 5, circle_equitangency),
        ("four-arc construction", 5, four_arc_construction),
        ("constant width", 5, constant_width),
        ("radical polygon pair", 10, radical_polygon_pair),
        ("hyperbolic width", 10, hyperbolic_width),
        ("focal optics forward", 5, ellipse_optics_forward),
        ("focal optics converse", 10, ellipse_optics_converse),
        ("surface scans", 60, surface_scans),
        ("umbilics", 30, umbilics),
        ("lines of curvature", 10, joachimsthal),
    ];
    let mut failures = 0;
    for (i, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed < Duration::from_secs(budget) {
                Ok(detail)
            } else {
                Err(format!("{detail}; over the {budget} s budget"))
            }
        });
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
