use thiserror::Error;

/// Every failure mode of the library. The variant name is the stable
/// identifier reported by the CLI and mapped to FFI error codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("ConcentricCircles: circle centers coincide")]
    ConcentricCircles,
    #[error("PointNotExterior: point ({x}, {y}) is not strictly outside the curve")]
    PointNotExterior { x: f64, y: f64 },
    #[error("PointNotExterior: source ({x}, {y}, {z}) is not strictly outside the surface")]
    SourceNotExterior { x: f64, y: f64, z: f64 },
    #[error("PointNotExterior: locus point #{index} is not strictly outside the curve")]
    LocusPointNotExterior { index: usize },
    #[error("TangencyNotFound: expected two tangencies, found {found}")]
    TangencyNotFound { found: usize },
    #[error("NotOnRadicalAxis: point is {distance:e} away from the radical axis")]
    NotOnRadicalAxis { distance: f64 },
    #[error("PointInsideHull: point lies inside the convex hull of the two circles")]
    PointInsideHull,
    #[error("ArcsDoNotClose: {0}")]
    ArcsDoNotClose(String),
    #[error("EvenN: polygon order must be odd and at least 3, got {0}")]
    EvenN(i64),
    #[error("NonPositiveLambda: diagonal length must be positive, got {0}")]
    NonPositiveLambda(f64),
    #[error("NotInUpperHalfPlane: y = {0} is not positive")]
    NotInUpperHalfPlane(f64),
    #[error("EndpointMismatch: chord endpoint is {0:e} away from the curve point")]
    EndpointMismatch(f64),
    #[error("NotEquitangentAtSample: |L1 - L2| = {gap:e} at x = {x}")]
    NotEquitangentAtSample { x: f64, gap: f64 },
    #[error("XAtTangency: X coincides with the tangency point of the fixed line")]
    XAtTangency,
    #[error("NotOnLine: point is {0:e} away from the line")]
    NotOnLine(f64),
    #[error("ContinuationFailed: {0}")]
    ContinuationFailed(String),
    #[error("NotOnSurface: |F(p)| = {0:e}")]
    NotOnSurface(f64),
    #[error("NotEquitangentSource: tangent-length spread {0:e} exceeds the locus tolerance")]
    NotEquitangentSource(f64),
    #[error("EmptyContactCurve")]
    EmptyContactCurve,
    #[error("InvalidCurve: {0}")]
    InvalidCurve(String),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

impl GeomError {
    /// Stable name of the error kind, used on the CLI's standard error.
    pub fn name(&self) -> &'static str {
        match self {
            GeomError::ConcentricCircles => "ConcentricCircles",
            GeomError::PointNotExterior { .. }
            | GeomError::SourceNotExterior { .. }
            | GeomError::LocusPointNotExterior { .. } => "PointNotExterior",
            GeomError::TangencyNotFound { .. } => "TangencyNotFound",
            GeomError::NotOnRadicalAxis { .. } => "NotOnRadicalAxis",
            GeomError::PointInsideHull => "PointInsideHull",
            GeomError::ArcsDoNotClose(_) => "ArcsDoNotClose",
            GeomError::EvenN(_) => "EvenN",
            GeomError::NonPositiveLambda(_) => "NonPositiveLambda",
            GeomError::NotInUpperHalfPlane(_) => "NotInUpperHalfPlane",
            GeomError::EndpointMismatch(_) => "EndpointMismatch",
            GeomError::NotEquitangentAtSample { .. } => "NotEquitangentAtSample",
            GeomError::XAtTangency => "XAtTangency",
            GeomError::NotOnLine(_) => "NotOnLine",
            GeomError::ContinuationFailed(_) => "ContinuationFailed",
            GeomError::NotOnSurface(_) => "NotOnSurface",
            GeomError::NotEquitangentSource(_) => "NotEquitangentSource",
            GeomError::EmptyContactCurve => "EmptyContactCurve",
            GeomError::InvalidCurve(_) => "InvalidCurve",
            GeomError::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
