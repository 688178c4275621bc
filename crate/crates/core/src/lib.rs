//! Equitangent curves and surfaces.
//!
//! Constructions of planar convex curves whose tangent segments from every
//! point of a line (or of an enclosing polygon) have equal lengths, and
//! numerical checks of the related statements: circles are the only curves
//! equitangent from a tangent line, equitangency from a line disjoint from
//! the curve is hyperbolic constant width, the focal-angle property singles
//! out ellipses, and on ovaloids a large equitangent locus forces a sphere.

pub mod cli;
pub mod constructions;
pub mod curves2d;
pub mod ellipse_optics;
pub mod error;
pub mod geom2d;
pub mod hyperbolic;
pub mod numeric;
pub mod ovaloid3d;
pub mod report;
pub mod tol;

pub use error::{GeomError, Result};
