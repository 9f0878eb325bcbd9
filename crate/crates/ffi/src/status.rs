use std::ffi::c_char;

use trimoduli::model::InvalidTolerance;
use trimoduli::report::ClassifyError;
use trimoduli::svg::RenderError;
use trimoduli::{ChartError, TriangleError};

/// Result code of every fallible call. `TM_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidTolerance = 2,
    NonPositiveSide = 3,
    DegenerateTriangle = 4,
    NonPositiveAngle = 5,
    AngleSum = 6,
    OutOfRegion = 7,
    OutOfSigma = 8,
    OutOfRange = 9,
    InvalidArgument = 10,
    InvalidSpec = 11,
    Internal = 12,
}

impl From<TriangleError> for TmStatus {
    fn from(e: TriangleError) -> Self {
        match e {
            TriangleError::NonPositiveSide => TmStatus::NonPositiveSide,
            TriangleError::DegenerateTriangle => TmStatus::DegenerateTriangle,
            TriangleError::NonPositiveAngle => TmStatus::NonPositiveAngle,
            TriangleError::AngleSum { .. } => TmStatus::AngleSum,
        }
    }
}

impl From<ChartError> for TmStatus {
    fn from(e: ChartError) -> Self {
        match e {
            ChartError::OutOfRegion { .. } => TmStatus::OutOfRegion,
            ChartError::OutOfSigma { .. } => TmStatus::OutOfSigma,
            ChartError::OutOfRange { .. } => TmStatus::OutOfRange,
        }
    }
}

impl From<ClassifyError> for TmStatus {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Triangle(t) => t.into(),
            ClassifyError::Chart(c) => c.into(),
        }
    }
}

impl From<InvalidTolerance> for TmStatus {
    fn from(_: InvalidTolerance) -> Self {
        TmStatus::InvalidTolerance
    }
}

impl From<RenderError> for TmStatus {
    fn from(e: RenderError) -> Self {
        match e {
            RenderError::InvalidSpec(_) => TmStatus::InvalidSpec,
            RenderError::Io(_) => TmStatus::Internal,
        }
    }
}

impl TmStatus {
    fn message(self) -> &'static [u8] {
        match self {
            TmStatus::Ok => b"ok\0",
            TmStatus::NullPointer => b"a required pointer argument was null\0",
            TmStatus::InvalidTolerance => b"tolerances must be finite and positive\0",
            TmStatus::NonPositiveSide => b"side lengths must be positive and finite\0",
            TmStatus::DegenerateTriangle => {
                b"side lengths violate the strict triangle inequality\0"
            }
            TmStatus::NonPositiveAngle => b"angles must be positive and finite\0",
            TmStatus::AngleSum => b"angles do not sum to pi\0",
            TmStatus::OutOfRegion => b"point is outside the side-ratio region\0",
            TmStatus::OutOfSigma => b"point is not an open-triangle point of the angle plane\0",
            TmStatus::OutOfRange => b"median parameter is outside (0, 1)\0",
            TmStatus::InvalidArgument => b"invalid argument\0",
            TmStatus::InvalidSpec => b"invalid render settings\0",
            TmStatus::Internal => b"internal error\0",
        }
    }
}

/// Static, NUL-terminated description of a status code. Never free it.
#[no_mangle]
pub extern "C" fn tm_status_message(status: TmStatus) -> *const c_char {
    status.message().as_ptr().cast()
}
