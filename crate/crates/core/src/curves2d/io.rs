//! JSON curve documents.
//!
//! ```json
//! {"type":"support","samples":[{"theta":0.0,"h":1.0}, ...]}
//! {"type":"arcspline","arcs":[{"cx":0.0,"cy":0.0,"r":1.0,"a0":0.0,"a1":6.283185307179586,"ccw":true}]}
//! ```

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{ArcSplineCurve, ConvexCurve, SupportCurve, TangentData};
use crate::error::{GeomError, Result};
use crate::geom2d::{Arc2, Circle2, Orientation, Point2};

/// Samples written for analytic support curves (circles, ellipses).
const ANALYTIC_SAMPLES: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportSample {
    pub theta: f64,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcRecord {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    pub a0: f64,
    pub a1: f64,
    pub ccw: bool,
}

/// Serialized form of a curve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum CurveDocument {
    Support { samples: Vec<SupportSample> },
    Arcspline { arcs: Vec<ArcRecord> },
}

/// Either curve representation, as read from or written to JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum Curve {
    Support(SupportCurve),
    ArcSpline(ArcSplineCurve),
}

impl From<SupportCurve> for Curve {
    fn from(c: SupportCurve) -> Self {
        Curve::Support(c)
    }
}

impl From<ArcSplineCurve> for Curve {
    fn from(c: ArcSplineCurve) -> Self {
        Curve::ArcSpline(c)
    }
}

impl ArcRecord {
    fn from_arc(a: &Arc2) -> Self {
        ArcRecord {
            cx: a.center().x,
            cy: a.center().y,
            r: a.radius(),
            a0: a.start_angle(),
            a1: a.end_angle(),
            ccw: a.orientation() == Orientation::CounterClockwise,
        }
    }

    fn to_arc(self) -> Result<Arc2> {
        let center = Point2::new(self.cx, self.cy);
        let orientation = if self.ccw { Orientation::CounterClockwise } else { Orientation::Clockwise };
        if self.r == 0.0 {
            let arc = Arc2::corner(center, self.a0, self.a1)?;
            return Ok(if self.ccw { arc } else { arc.reversed() });
        }
        Arc2::new(Circle2::new(center, self.r)?, self.a0, self.a1, orientation)
    }
}

impl CurveDocument {
    pub fn from_curve(curve: &Curve) -> Self {
        match curve {
            Curve::ArcSpline(a) => arcs_document(a),
            Curve::Support(s) => {
                if let Some(a) = s.as_arcspline() {
                    return arcs_document(a);
                }
                let samples = match s.samples() {
                    Some(samples) => samples.iter().map(|&(theta, h)| SupportSample { theta, h }).collect(),
                    None => (0..ANALYTIC_SAMPLES)
                        .map(|k| {
                            let theta = TAU * k as f64 / ANALYTIC_SAMPLES as f64;
                            SupportSample { theta, h: s.h(theta) }
                        })
                        .collect(),
                };
                CurveDocument::Support { samples }
            }
        }
    }

    pub fn into_curve(self) -> Result<Curve> {
        match self {
            CurveDocument::Support { samples } => {
                Ok(Curve::Support(SupportCurve::from_samples(samples.into_iter().map(|s| (s.theta, s.h)).collect())?))
            }
            CurveDocument::Arcspline { arcs } => {
                let arcs = arcs.into_iter().map(ArcRecord::to_arc).collect::<Result<Vec<_>>>()?;
                Ok(Curve::ArcSpline(ArcSplineCurve::new(arcs)?))
            }
        }
    }
}

fn arcs_document(a: &ArcSplineCurve) -> CurveDocument {
    CurveDocument::Arcspline { arcs: a.arcs().iter().map(ArcRecord::from_arc).collect() }
}

impl Curve {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CurveDocument::from_curve(self)).expect("curve documents always serialize")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(CurveDocument::from_curve(self)).expect("curve documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CurveDocument =
            serde_json::from_str(text).map_err(|e| GeomError::InvalidInput(format!("curve JSON: {e}")))?;
        doc.into_curve()
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self> {
        let doc: CurveDocument =
            serde_json::from_value(value).map_err(|e| GeomError::InvalidInput(format!("curve JSON: {e}")))?;
        doc.into_curve()
    }

    /// Support-function view, used by checks defined on support curves.
    pub fn to_support(&self) -> SupportCurve {
        match self {
            Curve::Support(s) => s.clone(),
            Curve::ArcSpline(a) => SupportCurve::from_arcspline(a),
        }
    }

    fn inner(&self) -> &dyn ConvexCurve {
        match self {
            Curve::Support(s) => s,
            Curve::ArcSpline(a) => a,
        }
    }
}

impl ConvexCurve for Curve {
    fn support(&self, theta: f64) -> f64 {
        self.inner().support(theta)
    }

    fn point_at(&self, theta: f64) -> Point2 {
        self.inner().point_at(theta)
    }

    fn tangents_from_point(&self, x: Point2) -> Result<(TangentData, TangentData)> {
        self.inner().tangents_from_point(x)
    }

    fn boundary_polygon(&self, n: usize) -> Vec<Point2> {
        self.inner().boundary_polygon(n)
    }
}
