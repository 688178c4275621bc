//! Tolerances shared across modules.
//!
//! Lengths are absolute and assume unit-scale inputs.

/// On/inside/outside predicates for planar geometry.
pub const GEOM_EPS: f64 = 1e-9;

/// Two centers closer than this are treated as concentric.
pub const CONCENTRIC_EPS: f64 = 1e-12;

/// Bisection stopping width (radians) for tangency roots on support curves.
pub const TANGENCY_ROOT_TOL: f64 = 1e-12;

/// Grid used to bracket tangency roots on support curves.
pub const TANGENCY_SCAN_POINTS: usize = 720;

/// Tangencies closer than this in normal angle are the same tangency.
pub const TANGENCY_DEDUP: f64 = 1e-8;

/// C¹ joint tolerance for arc splines.
pub const JOINT_EPS: f64 = 1e-9;

/// Chord ill-defined above this tangent-length gap.
pub const HYPERBOLIC_CHORD_GAP: f64 = 1e-6;

/// Newton corrector residual for contact-curve continuation.
pub const CONTINUATION_CORRECTOR_TOL: f64 = 1e-11;

/// Default number of contact-curve samples.
pub const CONTACT_SAMPLES: usize = 256;

/// Below this principal-curvature gap the principal frame is ill-conditioned
/// and every direction counts as principal.
pub const UMBILIC_FRAME_EPS: f64 = 1e-7;

/// On-surface tolerance for implicit surfaces.
pub const SURFACE_EPS: f64 = 1e-9;

/// Joachimsthal check requires the source to be this equitangent.
pub const SOURCE_SPREAD_TOL: f64 = 1e-6;

/// Angle test threshold for accepting a curve as a candidate ellipse.
pub const CONVERSE_ANGLE_TOL: f64 = 1e-7;

/// Hausdorff threshold for the ellipse verdict.
pub const CONVERSE_HAUSDORFF_TOL: f64 = 1e-6;
