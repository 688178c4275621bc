//! Small scalar solvers used throughout the crate.

use std::f64::consts::{PI, TAU};

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let w = theta.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Smallest absolute difference between two angles, in `[0, π]`.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = wrap_angle(a - b);
    d.min(TAU - d)
}

/// Bisection on a bracket `[lo, hi]` with `f(lo)` and `f(hi)` of opposite
/// (or zero) sign. Stops when the bracket is narrower than `tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    if f(hi) == 0.0 {
        return hi;
    }
    for _ in 0..200 {
        if (hi - lo).abs() <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sign-change brackets of `f` sampled on a uniform closed grid over one period
/// `[start, start + 2π)`. Exact zeros at grid points are reported as degenerate
/// brackets `(t, t)`.
pub fn periodic_sign_changes<F: Fn(f64) -> f64>(f: &F, start: f64, n: usize) -> Vec<(f64, f64)> {
    let step = TAU / n as f64;
    let values: Vec<f64> = (0..n).map(|k| f(start + step * k as f64)).collect();
    let mut brackets = Vec::new();
    for k in 0..n {
        let a = start + step * k as f64;
        let fa = values[k];
        let fb = values[(k + 1) % n];
        if fa == 0.0 {
            brackets.push((a, a));
        } else if fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            brackets.push((a, a + step));
        }
    }
    brackets
}

/// Golden-section search for the maximum of a unimodal function on `[a, b]`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Maximum of a 2π-periodic function: grid scan followed by golden-section
/// refinement around the best grid point. Returns `(argmax, max)`.
pub fn periodic_max<F: Fn(f64) -> f64>(f: F, n: usize) -> (f64, f64) {
    let step = TAU / n as f64;
    let (mut best_k, mut best_v) = (0usize, f64::NEG_INFINITY);
    for k in 0..n {
        let v = f(step * k as f64);
        if v > best_v {
            best_k = k;
            best_v = v;
        }
    }
    let center = step * best_k as f64;
    let (t, v) = golden_max(&f, center - step, center + step, 1e-13);
    if v >= best_v {
        (wrap_angle(t), v)
    } else {
        (center, best_v)
    }
}

/// Nelder–Mead minimisation in two variables. Returns the best vertex and value.
pub fn nelder_mead_2d<F: Fn([f64; 2]) -> f64>(
    f: F,
    start: [f64; 2],
    scale: f64,
    ftol: f64,
    max_iter: usize,
) -> ([f64; 2], f64) {
    let mut simplex = [start, [start[0] + scale, start[1]], [start[0], start[1] + scale]];
    let mut values = simplex.map(&f);
    for _ in 0..max_iter {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        simplex = order.map(|i| simplex[i]);
        values = order.map(|i| values[i]);
        let size = (simplex[1][0] - simplex[0][0])
            .abs()
            .max((simplex[1][1] - simplex[0][1]).abs())
            .max((simplex[2][0] - simplex[0][0]).abs())
            .max((simplex[2][1] - simplex[0][1]).abs());
        if (values[2] - values[0]).abs() <= ftol || size < 1e-15 {
            break;
        }
        let centroid = [0.5 * (simplex[0][0] + simplex[1][0]), 0.5 * (simplex[0][1] + simplex[1][1])];
        let along =
            |t: f64| [centroid[0] + t * (simplex[2][0] - centroid[0]), centroid[1] + t * (simplex[2][1] - centroid[1])];
        let reflected = along(-1.0);
        let fr = f(reflected);
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = f(expanded);
            if fe < fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
        } else if fr < values[1] {
            simplex[2] = reflected;
            values[2] = fr;
        } else {
            let contracted = if fr < values[2] { along(-0.5) } else { along(0.5) };
            let fc = f(contracted);
            if fc < values[2].min(fr) {
                simplex[2] = contracted;
                values[2] = fc;
            } else {
                for i in 1..3 {
                    simplex[i] = [0.5 * (simplex[0][0] + simplex[i][0]), 0.5 * (simplex[0][1] + simplex[i][1])];
                    values[i] = f(simplex[i]);
                }
            }
        }
    }
    let best = (0..3).min_by(|&i, &j| values[i].total_cmp(&values[j])).unwrap();
    (simplex[best], values[best])
}

/// Composite Gauss–Legendre quadrature (5 points per panel).
pub fn gauss_legendre<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    const NODES: [f64; 5] =
        [0.0, -0.538_469_310_105_683_1, 0.538_469_310_105_683_1, -0.906_179_845_938_664, 0.906_179_845_938_664];
    const WEIGHTS: [f64; 5] = [
        0.568_888_888_888_888_9,
        0.478_628_670_499_366_47,
        0.478_628_670_499_366_47,
        0.236_926_885_056_189_08,
        0.236_926_885_056_189_08,
    ];
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        let half = 0.5 * h;
        for (x, w) in NODES.iter().zip(WEIGHTS) {
            total += w * f(mid + half * x);
        }
    }
    total * 0.5 * h
}

/// `acos` clamped to its domain.
pub fn acos_clamped(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

/// Fold an angle between lines into `[0, π/2]`.
pub fn acute(angle: f64) -> f64 {
    let a = angle.rem_euclid(PI);
    a.min(PI - a)
}
