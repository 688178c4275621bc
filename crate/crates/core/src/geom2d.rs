//! Planar primitives: points, lines, circles, arcs, power of a point and
//! radical axes.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::numeric::{acos_clamped, acute};
use crate::tol::{CONCENTRIC_EPS, GEOM_EPS};

/// A point (or displacement) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point2 { x: c, y: s }
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn distance(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point2 {
        Point2 { x: -self.y, y: self.x }
    }

    pub fn normalized(self) -> Point2 {
        let n = self.norm();
        Point2 { x: self.x / n, y: self.y / n }
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        self + (o - self) * t
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// A line stored as a point on it plus a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    point: Point2,
    direction: Point2,
}

impl Line2 {
    /// Normalizes `direction`; fails on a zero or non-finite direction.
    pub fn new(point: Point2, direction: Point2) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0) || !n.is_finite() || !point.is_finite() {
            return Err(GeomError::InvalidInput("line direction must be non-zero".into()));
        }
        Ok(Line2 { point, direction: direction * (1.0 / n) })
    }

    pub fn through(a: Point2, b: Point2) -> Result<Self> {
        Line2::new(a, b - a)
    }

    pub fn point(&self) -> Point2 {
        self.point
    }

    pub fn direction(&self) -> Point2 {
        self.direction
    }

    /// Unit normal (direction rotated a quarter turn counterclockwise).
    pub fn normal(&self) -> Point2 {
        self.direction.perp()
    }

    pub fn at(&self, t: f64) -> Point2 {
        self.point + self.direction * t
    }

    /// Signed distance, positive on the side of [`Line2::normal`].
    pub fn signed_distance(&self, p: Point2) -> f64 {
        (p - self.point).dot(self.normal())
    }

    pub fn distance(&self, p: Point2) -> f64 {
        self.signed_distance(p).abs()
    }

    /// Line parameter of the orthogonal projection of `p`.
    pub fn param_of(&self, p: Point2) -> f64 {
        (p - self.point).dot(self.direction)
    }

    /// Mirror image of `p` across the line.
    pub fn reflect(&self, p: Point2) -> Point2 {
        p - self.normal() * (2.0 * self.signed_distance(p))
    }

    /// Intersection point with another line, `None` when parallel.
    pub fn intersect(&self, other: &Line2) -> Option<Point2> {
        let denom = self.direction.cross(other.direction);
        if denom.abs() < 1e-15 {
            return None;
        }
        let t = (other.point - self.point).cross(other.direction) / denom;
        Some(self.at(t))
    }
}

/// A circle with positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle2 {
    center: Point2,
    radius: f64,
}

impl Circle2 {
    pub fn new(center: Point2, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() || !center.is_finite() {
            return Err(GeomError::InvalidInput(format!("circle radius must be positive, got {radius}")));
        }
        Ok(Circle2 { center, radius })
    }

    /// Zero-radius circle, used only to represent corners of arc splines.
    pub(crate) fn point_circle(center: Point2) -> Self {
        Circle2 { center, radius: 0.0 }
    }

    pub fn center(&self) -> Point2 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn point_at(&self, angle: f64) -> Point2 {
        self.center + Point2::polar(angle) * self.radius
    }
}

/// Traversal sense of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// A circular arc between two polar angles of its circle. Corners of arc
/// splines are stored as arcs of radius zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc2 {
    circle: Circle2,
    start_angle: f64,
    end_angle: f64,
    orientation: Orientation,
}

impl Arc2 {
    pub fn new(circle: Circle2, start_angle: f64, end_angle: f64, orientation: Orientation) -> Result<Self> {
        Arc2::checked(circle, start_angle, end_angle, orientation)
    }

    /// A zero-radius arc at `point` sweeping outward normals from
    /// `start_angle` to `end_angle`.
    pub fn corner(point: Point2, start_angle: f64, end_angle: f64) -> Result<Self> {
        Arc2::checked(Circle2::point_circle(point), start_angle, end_angle, Orientation::CounterClockwise)
    }

    fn checked(circle: Circle2, start_angle: f64, end_angle: f64, orientation: Orientation) -> Result<Self> {
        if !start_angle.is_finite() || !end_angle.is_finite() {
            return Err(GeomError::InvalidInput("arc angles must be finite".into()));
        }
        let arc = Arc2 { circle, start_angle, end_angle, orientation };
        let sweep = arc.sweep();
        if !(sweep > 0.0 && sweep <= TAU) {
            return Err(GeomError::InvalidInput(format!("arc sweep {sweep} outside (0, 2π]")));
        }
        Ok(arc)
    }

    pub fn circle(&self) -> Circle2 {
        self.circle
    }

    pub fn center(&self) -> Point2 {
        self.circle.center
    }

    pub fn radius(&self) -> f64 {
        self.circle.radius
    }

    pub fn start_angle(&self) -> f64 {
        self.start_angle
    }

    pub fn end_angle(&self) -> f64 {
        self.end_angle
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_corner(&self) -> bool {
        self.circle.radius == 0.0
    }

    /// Angular extent in `(0, 2π]`. An arc whose raw angle difference is a
    /// whole turn is a full circle.
    pub fn sweep(&self) -> f64 {
        let raw = match self.orientation {
            Orientation::CounterClockwise => self.end_angle - self.start_angle,
            Orientation::Clockwise => self.start_angle - self.end_angle,
        };
        if raw > 0.0 && raw <= TAU + 1e-12 {
            return raw.min(TAU);
        }
        let w = raw.rem_euclid(TAU);
        if w == 0.0 {
            TAU
        } else {
            w
        }
    }

    pub fn start_point(&self) -> Point2 {
        self.circle.point_at(self.start_angle)
    }

    pub fn end_point(&self) -> Point2 {
        self.circle.point_at(self.end_angle)
    }

    pub fn length(&self) -> f64 {
        self.circle.radius * self.sweep()
    }

    /// Same arc traversed the other way.
    pub fn reversed(&self) -> Arc2 {
        Arc2 {
            circle: self.circle,
            start_angle: self.end_angle,
            end_angle: self.start_angle,
            orientation: match self.orientation {
                Orientation::CounterClockwise => Orientation::Clockwise,
                Orientation::Clockwise => Orientation::CounterClockwise,
            },
        }
    }

    /// Whether the polar angle `theta` lies on the arc, with slack `tol`.
    pub fn contains_angle(&self, theta: f64, tol: f64) -> bool {
        let offset = match self.orientation {
            Orientation::CounterClockwise => (theta - self.start_angle).rem_euclid(TAU),
            Orientation::Clockwise => (self.start_angle - theta).rem_euclid(TAU),
        };
        offset <= self.sweep() + tol || offset >= TAU - tol
    }
}

/// `|p − center|² − radius²`.
pub fn power_of_point(p: Point2, c: &Circle2) -> f64 {
    (p - c.center).norm_sq() - c.radius * c.radius
}

/// The line of points with equal power with respect to both circles.
pub fn radical_axis(c1: &Circle2, c2: &Circle2) -> Result<Line2> {
    let d = c2.center - c1.center;
    let dist = d.norm();
    if dist < CONCENTRIC_EPS {
        return Err(GeomError::ConcentricCircles);
    }
    let u = d * (1.0 / dist);
    // Signed offset from c1 along the center line.
    let t = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dist);
    Line2::new(c1.center + u * t, u.perp())
}

/// The two tangency points on `c` of the tangent lines through exterior `x`.
/// The second point is counterclockwise of the first as seen from `x`.
pub fn tangent_points_to_circle(x: Point2, c: &Circle2) -> Result<(Point2, Point2)> {
    let power = power_of_point(x, c);
    if power <= GEOM_EPS {
        return Err(GeomError::PointNotExterior { x: x.x, y: x.y });
    }
    let d = x - c.center;
    let dist = d.norm();
    let base = d.angle();
    let half = acos_clamped(c.radius / dist);
    let a = c.point_at(base + half);
    let b = c.point_at(base - half);
    if (a - x).cross(b - x) > 0.0 {
        Ok((a, b))
    } else {
        Ok((b, a))
    }
}

/// Orthogonal projection of `p` onto `line`.
pub fn project_onto_line(p: Point2, line: &Line2) -> Point2 {
    line.at(line.param_of(p))
}

/// Unsigned acute angle between two lines, in `[0, π/2]`.
pub fn angle_between(l1: &Line2, l2: &Line2) -> f64 {
    let cos = l1.direction.dot(l2.direction).abs();
    let sin = l1.direction.cross(l2.direction).abs();
    acute(sin.atan2(cos)).min(FRAC_PI_2)
}
