//! Charts of the space of triangle shapes.
//!
//! A similarity class of triangles is placed either in the side-ratio
//! region of the plane ([`sideratio`]) or on the angle plane
//! `x + y + z = pi` ([`sigma`]). Both charts classify points as acute,
//! right or obtuse and as equilateral, isosceles or scalene, and both
//! carry exact class measures that [`measure`] checks by Monte Carlo.

pub mod cli;
pub mod error;
pub mod measure;
pub mod model;
pub mod report;
pub mod sideratio;
pub mod sigma;
pub mod svg;

pub use error::{ChartError, TriangleError};
pub use model::{
    angles_of_sides, canonicalize, classify_angles, classify_sides, sides_of_angles,
    validate_triangle, AngleKind, Angles, CanonicalSides, LegRelation, ShapeClass, SideKind, Sides,
    Tolerance,
};
