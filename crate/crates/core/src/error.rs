use thiserror::Error;

/// Errors raised while building or interpreting a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum TriangleError {
    #[error("side lengths must be positive and finite")]
    NonPositiveSide,
    #[error("side lengths violate the strict triangle inequality")]
    DegenerateTriangle,
    #[error("angles must be positive and finite")]
    NonPositiveAngle,
    #[error("angles sum to {sum}, expected pi")]
    AngleSum { sum: f64 },
}

impl TriangleError {
    /// Stable identifier used in JSON error documents and C status codes.
    pub fn kind(&self) -> &'static str {
        match self {
            TriangleError::NonPositiveSide => "NonPositiveSide",
            TriangleError::DegenerateTriangle => "DegenerateTriangle",
            TriangleError::NonPositiveAngle => "NonPositiveAngle",
            TriangleError::AngleSum { .. } => "AngleSum",
        }
    }
}

/// Errors raised by the chart operations.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ChartError {
    #[error("point ({x}, {y}) is outside the side-ratio region")]
    OutOfRegion { x: f64, y: f64 },
    #[error("point ({x}, {y}, {z}) is not an open-triangle point of the angle plane")]
    OutOfSigma { x: f64, y: f64, z: f64 },
    #[error("median parameter {t} is outside (0, 1)")]
    OutOfRange { t: f64 },
}

impl ChartError {
    pub fn kind(&self) -> &'static str {
        match self {
            ChartError::OutOfRegion { .. } => "OutOfRegion",
            ChartError::OutOfSigma { .. } => "OutOfSigma",
            ChartError::OutOfRange { .. } => "OutOfRange",
        }
    }
}
