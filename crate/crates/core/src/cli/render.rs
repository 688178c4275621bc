//! SVG drawings of curve documents and scan files.

use std::f64::consts::PI;

use clap::ValueEnum;
use serde_json::Value;
use svg::node::element::path::Data;
use svg::node::element::{Circle, Group, Line, Path, Polygon, Text};
use svg::Document;

use super::verify::{line_from_json, load_curve_document};
use crate::curves2d::{ArcSplineCurve, ConvexCurve, Curve};
use crate::error::{GeomError, Result};
use crate::geom2d::{Orientation, Point2};

const POLYLINE_SAMPLES: usize = 720;
const WIDTH_PX: f64 = 800.0;
const MARGIN: f64 = 0.08;

/// Coordinate plane onto which scan points are projected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum View {
    Xy,
    Xz,
    Yz,
}

impl View {
    fn project(self, r: &[f64; 4]) -> Point2 {
        match self {
            View::Xy => Point2::new(r[0], r[1]),
            View::Xz => Point2::new(r[0], r[2]),
            View::Yz => Point2::new(r[1], r[2]),
        }
    }

    fn labels(self) -> (&'static str, &'static str) {
        match self {
            View::Xy => ("x", "y"),
            View::Xz => ("x", "z"),
            View::Yz => ("y", "z"),
        }
    }
}

/// World-space bounding box; SVG space flips y.
struct Frame {
    min: Point2,
    max: Point2,
}

impl Frame {
    fn around(points: &[Point2], min_half: f64) -> Frame {
        let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points.iter().filter(|p| p.is_finite()) {
            min = Point2::new(min.x.min(p.x), min.y.min(p.y));
            max = Point2::new(max.x.max(p.x), max.y.max(p.y));
        }
        if !(min.x <= max.x) {
            min = Point2::new(-min_half, -min_half);
            max = Point2::new(min_half, min_half);
        }
        let center = min.lerp(max, 0.5);
        let half = Point2::new(
            (0.5 * (max.x - min.x)).max(min_half) * (1.0 + MARGIN),
            (0.5 * (max.y - min.y)).max(min_half) * (1.0 + MARGIN),
        );
        Frame { min: center - half, max: center + half }
    }

    fn size(&self) -> f64 {
        (self.max.x - self.min.x).max(self.max.y - self.min.y)
    }

    fn document(&self) -> Document {
        let (w, h) = (self.max.x - self.min.x, self.max.y - self.min.y);
        Document::new()
            .set("viewBox", (self.min.x, -self.max.y, w, h))
            .set("width", WIDTH_PX)
            .set("height", (WIDTH_PX * h / w).round())
    }

    /// Segment of the line through `p` with direction `d` inside the box.
    fn clip(&self, p: Point2, d: Point2) -> (Point2, Point2) {
        let corners = [self.min, Point2::new(self.max.x, self.min.y), self.max, Point2::new(self.min.x, self.max.y)];
        let ts: Vec<f64> = corners.iter().map(|&c| (c - p).dot(d)).collect();
        let lo = ts.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (p + d * lo, p + d * hi)
    }
}

fn screen(p: Point2) -> (f64, f64) {
    (p.x, -p.y)
}

fn arc_path(curve: &ArcSplineCurve) -> Data {
    let arcs = curve.arcs();
    let mut data = Data::new().move_to(screen(arcs[0].start_point()));
    for arc in arcs.iter().filter(|a| !a.is_corner()) {
        let ccw = arc.orientation() == Orientation::CounterClockwise;
        // Counterclockwise in the plane is clockwise on screen.
        let sweep_flag = if ccw { 0 } else { 1 };
        let r = arc.radius();
        let pieces = if arc.sweep() > PI { 2 } else { 1 };
        let part = arc.sweep() / pieces as f64;
        for k in 1..=pieces {
            let angle = arc.start_angle() + if ccw { part } else { -part } * k as f64;
            let end = if k == pieces { arc.end_point() } else { arc.circle().point_at(angle) };
            data = data.elliptical_arc_to((r, r, 0, 0, sweep_flag, end.x, -end.y));
        }
    }
    data.close()
}

fn curve_path(curve: &Curve) -> Data {
    let arcs = match curve {
        Curve::ArcSpline(a) => Some(a),
        Curve::Support(s) => s.as_arcspline(),
    };
    if let Some(a) = arcs {
        return arc_path(a);
    }
    let pts = curve.boundary_polygon(POLYLINE_SAMPLES);
    let mut data = Data::new().move_to(screen(pts[0]));
    for &p in &pts[1..] {
        data = data.line_to(screen(p));
    }
    data.close()
}

fn points_of(v: Option<&Value>) -> Result<Vec<Point2>> {
    let Some(v) = v else { return Ok(Vec::new()) };
    let raw: Vec<[f64; 2]> =
        serde_json::from_value(v.clone()).map_err(|e| GeomError::InvalidInput(format!("point list: {e}")))?;
    Ok(raw.into_iter().map(|[x, y]| Point2::new(x, y)).collect())
}

fn dot(p: Point2, r: f64, fill: &str) -> Circle {
    Circle::new().set("cx", p.x).set("cy", -p.y).set("r", r).set("fill", fill)
}

fn segment(a: Point2, b: Point2, stroke: &str, width: f64) -> Line {
    Line::new()
        .set("x1", a.x)
        .set("y1", -a.y)
        .set("x2", b.x)
        .set("y2", -b.y)
        .set("stroke", stroke)
        .set("stroke-width", width)
}

/// Draws the curve of a document (bare or under `"gamma"`) with whatever
/// construction data accompanies it: the line `"ell"`, `"sources"` with their
/// `"tangency"` points, `"vertices"`, and the polygon `"Gamma"`.
pub fn render_document_svg(doc: &Value) -> Result<String> {
    let (curve, doc) = load_curve_document(&doc.to_string())?;
    let sources = points_of(doc.get("sources"))?;
    let tangency = points_of(doc.get("tangency"))?;
    let vertices = points_of(doc.get("vertices"))?;
    let polygon = points_of(doc.get("Gamma"))?;

    let mut extent = curve.boundary_polygon(POLYLINE_SAMPLES);
    extent.extend(sources.iter().chain(&vertices).chain(&polygon).chain(&tangency));
    let frame = Frame::around(&extent, 1e-3);
    let stroke = frame.size() * 0.004;

    let mut group = Group::new().set("fill", "none").set("stroke-linecap", "round");
    if let Some(ell) = doc.get("ell") {
        let line = line_from_json(ell)?;
        let (a, b) = frame.clip(line.point(), line.direction());
        group = group.add(
            segment(a, b, "#888888", stroke).set("stroke-dasharray", format!("{} {}", 4.0 * stroke, 3.0 * stroke)),
        );
    }
    for (i, &s) in sources.iter().enumerate() {
        for &t in tangency.iter().skip(2 * i).take(2) {
            group = group.add(segment(s, t, "#d62728", stroke));
        }
    }
    if !polygon.is_empty() {
        let pts: Vec<String> = polygon.iter().map(|p| format!("{},{}", p.x, -p.y)).collect();
        group =
            group.add(Polygon::new().set("points", pts.join(" ")).set("stroke", "#1f77b4").set("stroke-width", stroke));
    }
    group =
        group.add(Path::new().set("d", curve_path(&curve)).set("stroke", "black").set("stroke-width", 1.5 * stroke));
    for &p in sources.iter().chain(&vertices) {
        group = group.add(dot(p, 2.0 * stroke, "black"));
    }
    for &p in &tangency {
        group = group.add(dot(p, 1.5 * stroke, "#d62728"));
    }
    Ok(frame.document().add(group).to_string() + "\n")
}

/// Scan points projected onto a coordinate plane, with both axes drawn.
pub fn render_scan_svg(rows: &[[f64; 4]], view: View) -> String {
    let mut pts: Vec<Point2> = rows.iter().map(|r| view.project(r)).collect();
    let dots = pts.clone();
    pts.push(Point2::ORIGIN);
    let frame = Frame::around(&pts, 1.0);
    let stroke = frame.size() * 0.003;
    let (h0, h1) = frame.clip(Point2::ORIGIN, Point2::new(1.0, 0.0));
    let (v0, v1) = frame.clip(Point2::ORIGIN, Point2::new(0.0, 1.0));
    let (hl, vl) = view.labels();
    let font = frame.size() * 0.03;
    let label = |text: &str, p: Point2| {
        Text::new(text).set("x", p.x).set("y", -p.y).set("font-size", font).set("font-family", "sans-serif")
    };
    let mut group = Group::new()
        .add(segment(h0, h1, "#888888", stroke))
        .add(segment(v0, v1, "#888888", stroke))
        .add(label(hl, h1 - Point2::new(2.0 * font, font)))
        .add(label(vl, v1 + Point2::new(0.5 * font, -1.5 * font)));
    for p in dots {
        group = group.add(dot(p, 3.0 * stroke, "#1f77b4"));
    }
    frame.document().add(group).to_string() + "\n"
}
