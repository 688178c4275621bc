//! Construction recipes.
//!
//! ```json
//! {"construction":"figure1"}
//! {"construction":"figure1","c1":[2.41,5.65,0.96],"c2":[2.41,2.19,1.72],"x":[0.32,4.22],"y":[5.98,4.22],"snap_to_axis":true}
//! {"construction":"reuleaux","n":5,"lambda":1.0,"epsilon":0.25}
//! {"construction":"radical_polygon","n":5,"lambda":1.0,"epsilon":0.25}
//! {"construction":"hyperbolic_reuleaux","circumradius":0.6,"epsilon":0.15}
//! ```

use serde::Deserialize;
use serde_json::{json, Value};

use crate::constructions::{
    four_arc_reference_parameters, snap_to_line, FourArcCurve, RadicalPolygon, RoundedReuleaux,
};
use crate::curves2d::Curve;
use crate::error::{GeomError, Result};
use crate::geom2d::{radical_axis, Circle2, Line2, Point2};
use crate::hyperbolic::HyperbolicReuleaux;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case", deny_unknown_fields)]
pub enum Recipe {
    /// Four-arc curve from two circles and two points of their radical axis.
    /// With no circles or points given, uses the reference configuration.
    #[serde(rename = "figure1", alias = "four_arc")]
    FourArc {
        /// `[cx, cy, r]`.
        c1: Option<[f64; 3]>,
        c2: Option<[f64; 3]>,
        x: Option<[f64; 2]>,
        y: Option<[f64; 2]>,
        /// Project `x` and `y` onto the exact radical axis first.
        #[serde(default)]
        snap_to_axis: bool,
    },
    Reuleaux {
        n: i64,
        lambda: f64,
        epsilon: f64,
    },
    RadicalPolygon {
        n: i64,
        lambda: f64,
        epsilon: f64,
    },
    HyperbolicReuleaux {
        circumradius: f64,
        epsilon: f64,
    },
}

pub(crate) fn point_json(p: Point2) -> Value {
    json!([p.x, p.y])
}

pub(crate) fn line_json(l: &Line2) -> Value {
    json!({"point": point_json(l.point()), "direction": point_json(l.direction())})
}

fn circle(v: [f64; 3]) -> Result<Circle2> {
    Circle2::new(Point2::new(v[0], v[1]), v[2])
}

/// Runs a recipe and returns the output document, whose `"gamma"` key holds
/// the curve.
pub fn run_recipe(recipe: &Recipe) -> Result<Value> {
    match *recipe {
        Recipe::FourArc { c1, c2, x, y, snap_to_axis } => {
            let (c1, c2, mut x, mut y) = match (c1, c2, x, y) {
                (None, None, None, None) => four_arc_reference_parameters(),
                (Some(c1), Some(c2), Some(x), Some(y)) => {
                    (circle(c1)?, circle(c2)?, Point2::new(x[0], x[1]), Point2::new(y[0], y[1]))
                }
                _ => {
                    return Err(GeomError::InvalidInput(
                        "four-arc recipe needs all of c1, c2, x, y or none of them".into(),
                    ))
                }
            };
            if snap_to_axis {
                let axis = radical_axis(&c1, &c2)?;
                x = snap_to_line(x, &axis);
                y = snap_to_line(y, &axis);
            }
            let fig = FourArcCurve::build(c1, c2, x, y)?;
            Ok(json!({
                "gamma": Curve::from(fig.curve.clone()).to_value(),
                "ell": line_json(&fig.axis),
                "sources": [point_json(fig.x), point_json(fig.y)],
                "tangency": [point_json(fig.a), point_json(fig.b), point_json(fig.c), point_json(fig.d)],
            }))
        }
        Recipe::Reuleaux { n, lambda, epsilon } => {
            let r = RoundedReuleaux::build(n, lambda, epsilon)?;
            Ok(json!({
                "gamma": Curve::from(r.curve).to_value(),
                "vertices": r.vertices.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
                "width": r.lambda + 2.0 * r.epsilon,
            }))
        }
        Recipe::RadicalPolygon { n, lambda, epsilon } => {
            let r = RoundedReuleaux::build(n, lambda, epsilon)?;
            let g = RadicalPolygon::build(n, lambda, epsilon)?;
            Ok(json!({
                "gamma": Curve::from(r.curve).to_value(),
                "Gamma": g.vertices.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
            }))
        }
        Recipe::HyperbolicReuleaux { circumradius, epsilon } => {
            let h = HyperbolicReuleaux::build(circumradius, epsilon)?;
            Ok(json!({
                "gamma": Curve::from(h.curve.clone()).to_value(),
                "vertices": h.vertices.iter().map(|v| point_json(v.to_point())).collect::<Vec<_>>(),
                "hyperbolic_width": h.width(),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Value> {
        run_recipe(&serde_json::from_str(text).map_err(|e| GeomError::InvalidInput(e.to_string()))?)
    }

    #[test]
    fn four_arc_recipes() {
        let doc = parse(r#"{"construction":"figure1"}"#).unwrap();
        assert_eq!(doc["gamma"]["arcs"].as_array().unwrap().len(), 4);
        let drawn =
            r#"{"construction":"figure1","c1":[2.41,5.65,0.96],"c2":[2.41,2.19,1.72],"x":[0.32,4.22],"y":[5.98,4.22]}"#;
        assert_eq!(parse(drawn).unwrap_err().name(), "NotOnRadicalAxis");
        let snapped = drawn.replace('}', r#","snap_to_axis":true}"#);
        assert_eq!(parse(&snapped).unwrap(), doc);
        assert!(parse(r#"{"construction":"figure1","c1":[0,0,1]}"#).is_err());
    }

    #[test]
    fn polygon_recipes() {
        let doc = parse(r#"{"construction":"reuleaux","n":5,"lambda":1,"epsilon":0.25}"#).unwrap();
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 5);
        assert_eq!(doc["gamma"]["arcs"].as_array().unwrap().len(), 10);
        let doc = parse(r#"{"construction":"radical_polygon","n":5,"lambda":1,"epsilon":0.25}"#).unwrap();
        assert_eq!(doc["Gamma"].as_array().unwrap().len(), 10);
        let err = parse(r#"{"construction":"reuleaux","n":4,"lambda":1,"epsilon":0.25}"#).unwrap_err();
        assert_eq!(err.name(), "EvenN");
        assert!(parse(r#"{"construction":"reuleaux","n":5,"lambda":1,"epsilon":0.25,"extra":1}"#).is_err());
        assert!(parse(r#"{"construction":"spiral"}"#).is_err());
    }

    #[test]
    fn gamma_loads_back() {
        let doc = parse(r#"{"construction":"hyperbolic_reuleaux","circumradius":0.6,"epsilon":0.15}"#).unwrap();
        let curve = Curve::from_value(doc["gamma"].clone()).unwrap();
        assert_eq!(curve.to_value(), doc["gamma"]);
    }
}
