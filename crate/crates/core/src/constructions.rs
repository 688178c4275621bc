//! Explicit equitangent constructions.
//!
//! - [`FourArcCurve`]: a four-arc C¹ convex curve built from two circles and two
//!   points on their radical axis. From every point of that axis outside the
//!   curve the two tangent segments have equal length, yet the curve is not
//!   a circle.
//! - [`RoundedReuleaux`] and [`RadicalPolygon`]: a rounded Reuleaux polygon
//!   of constant width `λ + 2ε` together with the regular `2n`-gon whose
//!   edges lie on radical axes of its vertex circles. Tangent segments from
//!   every point of the polygon to the curve are equal.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::curves2d::{ArcSplineCurve, ConvexCurve};
use crate::error::{GeomError, Result};
use crate::geom2d::{radical_axis, tangent_points_to_circle, Arc2, Circle2, Line2, Orientation, Point2};
use crate::numeric::{bisect, golden_max, wrap_angle};
use crate::tol::GEOM_EPS;

/// The four-arc curve together with the construction data that defines it.
#[derive(Debug, Clone)]
pub struct FourArcCurve {
    pub curve: ArcSplineCurve,
    pub c1: Circle2,
    pub c2: Circle2,
    /// Radical axis of the two given circles.
    pub axis: Line2,
    pub x: Point2,
    pub y: Point2,
    /// Tangency points from `x` on the first and second circle.
    pub a: Point2,
    pub b: Point2,
    /// Tangency points from `y` on the first and second circle.
    pub c: Point2,
    pub d: Point2,
    /// Circles carrying the bridging arcs `ab` and `dc`.
    pub bridge_x: Circle2,
    pub bridge_y: Circle2,
}
/// Sample circles and points. Both points sit on the line `y = 4.22`, a few
/// thousandths away from the exact radical axis.
/// on the line `y = 4.22`, a few thousandths away from the exact radical axis.
pub fn four_arc_sample_parameters() -> (Circle2, Circle2, Point2, Point2) {
    (
        Circle2::new(Point2::new(2.41, 5.65), 0.96).expect("positive radius"),
        Circle2::new(Point2::new(2.41, 2.19), 1.72).expect("positive radius"),
        Point2::new(0.32, 4.22),
        Point2::new(5.98, 4.22),
    )
}

/// The sample parameters with `x` and `y` projected onto the exact
/// radical axis.
pub fn four_arc_reference_parameters() -> (Circle2, Circle2, Point2, Point2) {
    let (c1, c2, x, y) = four_arc_sample_parameters();
    let axis = radical_axis(&c1, &c2).expect("sample circles are not concentric");
    (c1, c2, snap_to_line(x, &axis), snap_to_line(y, &axis))
}

pub fn snap_to_line(p: Point2, line: &Line2) -> Point2 {
    line.at(line.param_of(p))
}

/// Signed distance from `p` to the convex hull of two discs; positive outside.
/// The hull is the union of discs interpolating centers and radii linearly,
/// and `|p − c(t)| − r(t)` is convex in `t`.
pub fn distance_to_disc_hull(p: Point2, c1: &Circle2, c2: &Circle2) -> f64 {
    let f = |t: f64| {
        let c = c1.center().lerp(c2.center(), t);
        let r = c1.radius() + (c2.radius() - c1.radius()) * t;
        p.distance(c) - r
    };
    let (_, neg) = golden_max(|t| -f(t), 0.0, 1.0, 1e-14);
    (-neg).min(f(0.0)).min(f(1.0))
}

/// Sweep from `a` to `b` counterclockwise, in `[0, 2π)`.
fn ccw_sweep(a: f64, b: f64) -> f64 {
    wrap_angle(b - a)
}

/// Support lines of `conv(C1 ∪ C2)` through `p`: returns the tangency point
/// on `c1` and the one on `c2`.
fn hull_tangencies(p: Point2, c1: &Circle2, c2: &Circle2) -> Result<(Point2, Point2)> {
    let (a1, b1) = tangent_points_to_circle(p, c1)?;
    let (a2, b2) = tangent_points_to_circle(p, c2)?;
    let reference = c1.center().lerp(c2.center(), 0.5) - p;
    let bearing = |q: Point2| {
        let v = q - p;
        reference.cross(v).atan2(reference.dot(v))
    };
    let candidates = [(a1, 1u8), (b1, 1), (a2, 2), (b2, 2)];
    let most_ccw = candidates.iter().max_by(|u, v| bearing(u.0).total_cmp(&bearing(v.0))).unwrap();
    let most_cw = candidates.iter().min_by(|u, v| bearing(u.0).total_cmp(&bearing(v.0))).unwrap();
    if most_ccw.1 == most_cw.1 {
        return Err(GeomError::ArcsDoNotClose(
            "one circle hides the other from a source point; no bridging arc".into(),
        ));
    }
    Ok(if most_ccw.1 == 1 { (most_ccw.0, most_cw.0) } else { (most_cw.0, most_ccw.0) })
}

/// Circle tangent to both source tangent lines at `p1` (on `c1`) and `p2`
/// (on `c2`): its center is where the two tangency normals meet.
fn bridging_circle(p1: Point2, c1: &Circle2, p2: Point2, c2: &Circle2) -> Result<Circle2> {
    let n1 = Line2::through(p1, c1.center())?;
    let n2 = Line2::through(p2, c2.center())?;
    let center = n1.intersect(&n2).ok_or_else(|| GeomError::ArcsDoNotClose("tangency normals are parallel".into()))?;
    let (r1, r2) = (center.distance(p1), center.distance(p2));
    if (r1 - r2).abs() > GEOM_EPS * (1.0 + r1) {
        return Err(GeomError::ArcsDoNotClose(format!(
            "bridging center is not equidistant from the tangency points ({r1} vs {r2})"
        )));
    }
    // The bridging circle must contain both circles, touching them from outside.
    let inward = (center - p1).dot(c1.center() - p1) > 0.0 && (center - p2).dot(c2.center() - p2) > 0.0;
    if !inward || r1 <= c1.radius() || r2 <= c2.radius() {
        return Err(GeomError::ArcsDoNotClose("bridging arc would not be convex".into()));
    }
    Circle2::new(center, 0.5 * (r1 + r2))
}

impl FourArcCurve {
    /// Builds the curve from two circles and two points `x`, `y` on their
    /// radical axis, outside the convex hull of the circles and on opposite
    /// sides of the center line.
    pub fn build(c1: Circle2, c2: Circle2, x: Point2, y: Point2) -> Result<FourArcCurve> {
        let axis = radical_axis(&c1, &c2)?;
        for p in [x, y] {
            let off = axis.distance(p);
            if off > GEOM_EPS {
                return Err(GeomError::NotOnRadicalAxis { distance: off });
            }
        }
        if x.distance(y) <= GEOM_EPS {
            return Err(GeomError::ArcsDoNotClose("x and y coincide".into()));
        }
        for p in [x, y] {
            if distance_to_disc_hull(p, &c1, &c2) <= GEOM_EPS {
                return Err(GeomError::PointInsideHull);
            }
        }
        let center_dir = c2.center() - c1.center();
        let side = |p: Point2| center_dir.cross(p - c1.center());
        if side(x) * side(y) >= 0.0 {
            return Err(GeomError::ArcsDoNotClose("x and y must lie on opposite sides of the center line".into()));
        }

        let (a, b) = hull_tangencies(x, &c1, &c2)?;
        let (c, d) = hull_tangencies(y, &c1, &c2)?;
        let bridge_x = bridging_circle(a, &c1, b, &c2)?;
        let bridge_y = bridging_circle(c, &c1, d, &c2)?;

        let ang = |p: Point2, circ: &Circle2| (p - circ.center()).angle();
        let (ja, jb, jc, jd) = (ang(a, &c1), ang(b, &c2), ang(c, &c1), ang(d, &c2));

        // Either c → a → b → d or a → c → d → b runs counterclockwise.
        let order_a = [(c1, jc, ja), (bridge_x, ja, jb), (c2, jb, jd), (bridge_y, jd, jc)];
        let order_b = [(c1, ja, jc), (bridge_y, jc, jd), (c2, jd, jb), (bridge_x, jb, ja)];
        let chosen = [order_a, order_b]
            .into_iter()
            .find(|order| {
                let sweeps: Vec<f64> = order.iter().map(|(_, s, e)| ccw_sweep(*s, *e)).collect();
                let total: f64 = sweeps.iter().sum();
                (total - TAU).abs() < 1e-9 && sweeps.iter().all(|&s| s > 0.0) && sweeps[1] < PI && sweeps[3] < PI
            })
            .ok_or_else(|| GeomError::ArcsDoNotClose("tangency points do not interleave".into()))?;

        let joints = [(c, a), (a, b), (b, d), (d, c)];
        let joints = if chosen == order_a { joints } else { [(a, c), (c, d), (d, b), (b, a)] };
        let arcs = chosen
            .iter()
            .zip(joints)
            .map(|((circle, _, _), (p, q))| {
                Arc2::new(*circle, ang(p, circle), ang(q, circle), Orientation::CounterClockwise)
            })
            .collect::<Result<Vec<_>>>()?;
        let curve = ArcSplineCurve::new(arcs).map_err(|e| GeomError::ArcsDoNotClose(e.to_string()))?;
        Ok(FourArcCurve { curve, c1, c2, axis, x, y, a, b, c, d, bridge_x, bridge_y })
    }

    /// `n` points of the radical axis outside the curve, split evenly
    /// between the two rays leaving the curve, reaching `extent` beyond
    /// `x` and `y`.
    pub fn axis_locus(&self, n: usize, extent: f64) -> Vec<Point2> {
        let axis = &self.axis;
        let (tx, ty) = (axis.param_of(self.x), axis.param_of(self.y));
        // The axis meets the center line inside the hull of the circles.
        let inside = axis.param_of(self.c1.center());
        let exit = |t_out: f64| bisect(|t| self.curve.signed_distance(axis.at(t)), inside, t_out, 1e-13);
        let half = n / 2;
        let mut out = Vec::with_capacity(n);
        for (t_src, count) in [(tx, half), (ty, n - half)] {
            let dir = (t_src - inside).signum();
            let t_exit = exit(t_src + dir * extent);
            let t_far = t_src + dir * extent;
            let start = t_exit + dir * 1e-6;
            for k in 0..count {
                let s = if count == 1 { 0.0 } else { k as f64 / (count - 1) as f64 };
                out.push(axis.at(start + (t_far - start) * s));
            }
        }
        out
    }
}

/// Four-arc equitangent curve; see [`FourArcCurve::build`].
pub fn build_figure1(c1: Circle2, c2: Circle2, x: Point2, y: Point2) -> Result<ArcSplineCurve> {
    FourArcCurve::build(c1, c2, x, y).map(|f| f.curve)
}

fn check_polygon_params(n: i64, lambda: f64, epsilon: f64) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(GeomError::EvenN(n));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(GeomError::NonPositiveLambda(lambda));
    }
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return Err(GeomError::InvalidInput(format!("rounding radius must be non-negative, got {epsilon}")));
    }
    Ok(())
}

/// Vertices of the regular `n`-gon whose longest diagonals have length
/// `lambda`, starting at the top and running counterclockwise.
pub fn regular_polygon_vertices(n: usize, lambda: f64) -> Vec<Point2> {
    let m = n / 2;
    let circumradius = lambda / (2.0 * (m as f64 * PI / n as f64).sin());
    (0..n).map(|k| Point2::polar(FRAC_PI_2 + TAU * k as f64 / n as f64) * circumradius).collect()
}

/// Rounded Reuleaux polygon: arcs of radius `λ + ε` and `ε` about every
/// vertex of a regular odd polygon with diagonal `λ`.
#[derive(Debug, Clone)]
pub struct RoundedReuleaux {
    pub curve: ArcSplineCurve,
    pub vertices: Vec<Point2>,
    pub n: usize,
    pub lambda: f64,
    pub epsilon: f64,
}

impl RoundedReuleaux {
    pub fn build(n: i64, lambda: f64, epsilon: f64) -> Result<Self> {
        check_polygon_params(n, lambda, epsilon)?;
        let n = n as usize;
        let vertices = regular_polygon_vertices(n, lambda);
        let m = n / 2;
        let mut arcs: Vec<Arc2> = Vec::with_capacity(2 * n);
        for k in 0..n {
            let v = vertices[k];
            let p = (vertices[(k + m) % n] - v).angle();
            let q = (vertices[(k + m + 1) % n] - v).angle();
            // The opposite side subtends π/n at v; orient the pair so it sweeps that way.
            let (s, e) = if ccw_sweep(p, q) < PI { (p, q) } else { (q, p) };
            let big = Circle2::new(v, lambda + epsilon)?;
            arcs.push(Arc2::new(big, s, e, Orientation::CounterClockwise)?);
            let small = if epsilon > 0.0 {
                Arc2::new(Circle2::new(v, epsilon)?, s + PI, e + PI, Orientation::CounterClockwise)?
            } else {
                Arc2::corner(v, s + PI, e + PI)?
            };
            arcs.push(small);
        }
        let base = arcs[0].start_angle();
        arcs.sort_by(|a, b| wrap_angle(a.start_angle() - base).total_cmp(&wrap_angle(b.start_angle() - base)));
        let curve = ArcSplineCurve::new(arcs)?;
        Ok(RoundedReuleaux { curve, vertices, n, lambda, epsilon })
    }

    pub fn width(&self) -> f64 {
        self.lambda + 2.0 * self.epsilon
    }
}

/// Rounded Reuleaux curve and the polygon vertices.
pub fn build_rounded_reuleaux(n: i64, lambda: f64, epsilon: f64) -> Result<(ArcSplineCurve, Vec<Point2>)> {
    RoundedReuleaux::build(n, lambda, epsilon).map(|r| (r.curve, r.vertices))
}

/// A vertex circle of the rounded Reuleaux construction. The radius may be
/// zero, so this is not a [`Circle2`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexCircle {
    pub center: Point2,
    pub radius: f64,
}

impl VertexCircle {
    pub fn power(&self, p: Point2) -> f64 {
        (p - self.center).norm_sq() - self.radius * self.radius
    }
}

/// One edge line of the radical polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadicalEdge {
    pub line: Line2,
    /// Circle of radius `ε` about one end of a polygon side.
    pub small: VertexCircle,
    /// Circle of radius `λ + ε` about the other end.
    pub large: VertexCircle,
    /// Unit direction of the polygon side joining the two centers.
    pub side: Point2,
}

/// Regular `2n`-gon whose edges lie on radical axes of vertex circles.
#[derive(Debug, Clone)]
pub struct RadicalPolygon {
    /// `vertices[j]` joins `edges[j]` and `edges[j + 1]`.
    pub vertices: Vec<Point2>,
    pub edges: Vec<RadicalEdge>,
}

impl RadicalPolygon {
    pub fn build(n: i64, lambda: f64, epsilon: f64) -> Result<Self> {
        check_polygon_params(n, lambda, epsilon)?;
        let n = n as usize;
        let v = regular_polygon_vertices(n, lambda);
        let mut edges: Vec<(f64, RadicalEdge)> = Vec::with_capacity(2 * n);
        for k in 0..n {
            let (p, q) = (v[k], v[(k + 1) % n]);
            for (small_at, large_at) in [(p, q), (q, p)] {
                let s = small_at.distance(large_at);
                let u = (large_at - small_at) * (1.0 / s);
                let small = VertexCircle { center: small_at, radius: epsilon };
                let large = VertexCircle { center: large_at, radius: lambda + epsilon };
                // Equal power along the side: t² − ε² = (s − t)² − (λ + ε)².
                let t = (s * s + small.radius.powi(2) - large.radius.powi(2)) / (2.0 * s);
                let line = Line2::new(small_at + u * t, u.perp())?;
                let outward = if t < 0.0 { -u } else { u };
                edges.push((outward.angle(), RadicalEdge { line, small, large, side: u }));
            }
        }
        edges.sort_by(|a, b| a.0.total_cmp(&b.0));
        let edges: Vec<RadicalEdge> = edges.into_iter().map(|(_, e)| e).collect();
        let m = edges.len();
        let vertices = (0..m)
            .map(|j| {
                edges[j]
                    .line
                    .intersect(&edges[(j + 1) % m].line)
                    .ok_or_else(|| GeomError::InvalidInput("consecutive radical axes are parallel".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RadicalPolygon { vertices, edges })
    }

    /// Endpoints of edge `j`.
    pub fn edge_segment(&self, j: usize) -> (Point2, Point2) {
        let m = self.vertices.len();
        (self.vertices[(j + m - 1) % m], self.vertices[j])
    }

    /// `per_edge` evenly spaced points on every edge, endpoints included.
    pub fn boundary_samples(&self, per_edge: usize) -> Vec<Point2> {
        (0..self.edges.len())
            .flat_map(|j| {
                let (a, b) = self.edge_segment(j);
                (0..per_edge).map(move |k| a.lerp(b, k as f64 / (per_edge.max(2) - 1) as f64))
            })
            .collect()
    }
}

/// Vertices of the radical polygon.
pub fn build_radical_polygon(n: i64, lambda: f64, epsilon: f64) -> Result<Vec<Point2>> {
    RadicalPolygon::build(n, lambda, epsilon).map(|p| p.vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves2d::{equitangent_residual, euclidean_width, width_range, SupportCurve};

    #[test]
    fn four_arc_reference_curve() {
        let (c1, c2, x, y) = four_arc_reference_parameters();
        let fig = FourArcCurve::build(c1, c2, x, y).unwrap();
        assert_eq!(fig.curve.arcs().len(), 4);
        let r = fig.curve.report();
        assert!(r.is_valid(), "{r:?}");
        // Expected bridging arcs: centers (6.58, 2.91) r 5.95 and (0.75, 3.39) r 3.77.
        assert!(fig.bridge_x.center().distance(Point2::new(6.58, 2.91)) < 0.05);
        assert!((fig.bridge_x.radius() - 5.95).abs() < 0.05);
        assert!(fig.bridge_y.center().distance(Point2::new(0.75, 3.39)) < 0.05);
        assert!((fig.bridge_y.radius() - 3.77).abs() < 0.05);
        // Tangency points close to the drawn dots.
        assert!(fig.a.distance(Point2::new(1.61, 6.18)) < 0.02);
        assert!(fig.b.distance(Point2::new(0.72, 1.9)) < 0.02);
        assert!(fig.c.distance(Point2::new(2.98, 6.43)) < 0.02);
        assert!(fig.d.distance(Point2::new(3.81, 1.19)) < 0.02);
        let locus = fig.axis_locus(50, 3.0);
        assert_eq!(locus.len(), 50);
        let (res, _) = equitangent_residual(&fig.curve, &locus).unwrap();
        assert!(res < 1e-8, "{res}");
    }

    #[test]
    fn four_arc_bridging_arcs_touch_source_lines() {
        let (c1, c2, x, y) = four_arc_reference_parameters();
        let fig = FourArcCurve::build(c1, c2, x, y).unwrap();
        for (src, p, circ) in [
            (fig.x, fig.a, fig.bridge_x),
            (fig.x, fig.b, fig.bridge_x),
            (fig.y, fig.c, fig.bridge_y),
            (fig.y, fig.d, fig.bridge_y),
        ] {
            let line = Line2::through(src, p).unwrap();
            assert!((line.distance(circ.center()) - circ.radius()).abs() < 1e-9);
        }
    }

    #[test]
    fn four_arc_errors() {
        let (c1, c2, x, y) = four_arc_reference_parameters();
        assert!(matches!(FourArcCurve::build(c1, c2, x, x), Err(GeomError::ArcsDoNotClose(_))));
        let off = x + Point2::new(0.0, 0.1);
        assert!(matches!(FourArcCurve::build(c1, c2, off, y), Err(GeomError::NotOnRadicalAxis { .. })));
        let (_, _, dx, dy) = four_arc_sample_parameters();
        assert!(matches!(FourArcCurve::build(c1, c2, dx, dy), Err(GeomError::NotOnRadicalAxis { .. })));
        let inside = snap_to_line(Point2::new(2.0, 4.0), &radical_axis(&c1, &c2).unwrap());
        assert_eq!(FourArcCurve::build(c1, c2, inside, y).unwrap_err(), GeomError::PointInsideHull);
        let same_side = snap_to_line(Point2::new(-1.0, 0.0), &radical_axis(&c1, &c2).unwrap());
        assert!(matches!(FourArcCurve::build(c1, c2, x, same_side), Err(GeomError::ArcsDoNotClose(_))));
        assert_eq!(FourArcCurve::build(c1, c1, x, y).unwrap_err(), GeomError::ConcentricCircles);
    }

    #[test]
    fn disc_hull_distance() {
        let c1 = Circle2::new(Point2::new(0.0, 0.0), 1.0).unwrap();
        let c2 = Circle2::new(Point2::new(4.0, 0.0), 1.0).unwrap();
        assert!((distance_to_disc_hull(Point2::new(2.0, 3.0), &c1, &c2) - 2.0).abs() < 1e-9);
        assert!((distance_to_disc_hull(Point2::new(2.0, 0.0), &c1, &c2) + 1.0).abs() < 1e-9);
        assert!((distance_to_disc_hull(Point2::new(-3.0, 0.0), &c1, &c2) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn reuleaux_widths() {
        for (n, lambda, eps) in [(3, 1.0, 0.0), (5, 1.0, 0.25), (5, 1.0, 0.2), (7, 2.0, 0.1)] {
            let r = RoundedReuleaux::build(n, lambda, eps).unwrap();
            assert_eq!(r.curve.arcs().len(), 2 * n as usize);
            let (lo, hi) = width_range(&r.curve, 360);
            assert!((lo - r.width()).abs() < 1e-9 && (hi - r.width()).abs() < 1e-9, "{n} {lo} {hi}");
            let report = r.curve.report();
            assert!(report.is_valid());
            assert_eq!(report.corners.len(), if eps == 0.0 { n as usize } else { 0 });
        }
        let s = SupportCurve::from_arcspline(&RoundedReuleaux::build(5, 1.0, 0.2).unwrap().curve);
        for k in 0..360 {
            assert!((euclidean_width(&s, k as f64 * TAU / 360.0) - 1.4).abs() < 1e-9);
        }
    }

    #[test]
    fn reuleaux_errors() {
        assert_eq!(RoundedReuleaux::build(4, 1.0, 0.1).unwrap_err(), GeomError::EvenN(4));
        assert_eq!(RoundedReuleaux::build(1, 1.0, 0.1).unwrap_err(), GeomError::EvenN(1));
        assert_eq!(RoundedReuleaux::build(5, 0.0, 0.1).unwrap_err(), GeomError::NonPositiveLambda(0.0));
        assert!(RoundedReuleaux::build(5, 1.0, -0.1).is_err());
        assert_eq!(RadicalPolygon::build(6, 1.0, 0.1).unwrap_err(), GeomError::EvenN(6));
    }

    #[test]
    fn diagonals_have_length_lambda() {
        for n in [3usize, 5, 7, 9] {
            let v = regular_polygon_vertices(n, 1.3);
            let m = n / 2;
            for k in 0..n {
                assert!((v[k].distance(v[(k + m) % n]) - 1.3).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn radical_polygon_is_regular_and_equitangent() {
        for (n, eps) in [(5, 0.25), (3, 0.1)] {
            let poly = RadicalPolygon::build(n, 1.0, eps).unwrap();
            let m = poly.vertices.len();
            assert_eq!(m, 2 * n as usize);
            let side = poly.vertices[0].distance(poly.vertices[1]);
            for j in 0..m {
                assert!((poly.vertices[j].distance(poly.vertices[(j + 1) % m]) - side).abs() < 1e-12);
                let e = &poly.edges[j];
                assert!(e.line.direction().dot(e.side).abs() < 1e-10);
            }
            let gamma = RoundedReuleaux::build(n, 1.0, eps).unwrap().curve;
            let (res, _) = equitangent_residual(&gamma, &poly.boundary_samples(20)).unwrap();
            assert!(res < 1e-8, "{res}");
            assert!(poly.vertices.iter().all(|&p| gamma.is_exterior(p)));
        }
    }

    #[test]
    fn sharp_reuleaux_corner_tangent_is_power_root() {
        // With ε = 0 the small circle is the corner itself: its power is |P − V|².
        let poly = RadicalPolygon::build(5, 1.0, 0.0).unwrap();
        let gamma = RoundedReuleaux::build(5, 1.0, 0.0).unwrap().curve;
        for j in 0..poly.edges.len() {
            let (a, b) = poly.edge_segment(j);
            let p = a.lerp(b, 0.5);
            let e = &poly.edges[j];
            let (t1, t2) = gamma.tangents_from_point(p).unwrap();
            let corner = e.small.power(p).sqrt();
            let big = e.large.power(p).sqrt();
            assert!((corner - big).abs() < 1e-12);
            assert!((t1.length - corner).abs() < 1e-9 && (t2.length - corner).abs() < 1e-9);
            assert!(t1.point.distance(e.small.center) < 1e-9 || t2.point.distance(e.small.center) < 1e-9);
        }
    }
}
