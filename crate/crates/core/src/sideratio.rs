//! The side-ratio chart: a class with sides `a <= b <= c` goes to `(a/c, b/c)`.
//!
//! Its image is the region `{0 < x <= 1, x <= y <= 1, x + y > 1}`, the
//! triangle B(0,1), C(1,1), E(1/2,1/2) minus the edge BE. The quarter arc
//! `x^2 + y^2 = 1` splits it into acute (above) and obtuse (below) parts.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::Serialize;

use crate::error::ChartError;
use crate::model::{
    classify_sides, AngleKind, CanonicalSides, LegRelation, ShapeClass, SideKind, Tolerance,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint2 {
    pub x: f64,
    pub y: f64,
}

impl ChartPoint2 {
    pub fn new(x: f64, y: f64) -> Self {
        ChartPoint2 { x, y }
    }
}

/// Named points of the side-ratio figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Landmark2 {
    A,
    B,
    C,
    D,
    E,
    O,
}

impl Landmark2 {
    pub const ALL: [Landmark2; 6] = [
        Landmark2::A,
        Landmark2::B,
        Landmark2::C,
        Landmark2::D,
        Landmark2::E,
        Landmark2::O,
    ];

    pub fn coords(self) -> ChartPoint2 {
        let (x, y) = match self {
            Landmark2::A => (1.0, 0.0),
            Landmark2::B => (0.0, 1.0),
            Landmark2::C => (1.0, 1.0),
            Landmark2::D => (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
            Landmark2::E => (0.5, 0.5),
            Landmark2::O => (0.0, 0.0),
        };
        ChartPoint2 { x, y }
    }

    pub fn name(self) -> &'static str {
        match self {
            Landmark2::A => "A",
            Landmark2::B => "B",
            Landmark2::C => "C",
            Landmark2::D => "D",
            Landmark2::E => "E",
            Landmark2::O => "O",
        }
    }
}

/// Which named piece of the region a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Locus2 {
    InteriorAcute,
    InteriorObtuse,
    ArcBD,
    SegmentBC,
    SegmentCD,
    SegmentDE,
    PointC,
    PointD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chart2Classification {
    pub class: ShapeClass,
    pub locus: Locus2,
}

pub fn to_chart2(s: &CanonicalSides) -> ChartPoint2 {
    ChartPoint2 { x: s.a(), y: s.b() }
}

/// Membership in the image region. Points with `x + y <= 1 + eps_geom` are
/// rejected: the edge BE carries no triangle.
pub fn in_region2(p: ChartPoint2, tol: &Tolerance) -> bool {
    p.x.is_finite()
        && p.y.is_finite()
        && p.x > 0.0
        && p.x <= 1.0
        && p.y <= 1.0
        && p.x <= p.y
        && p.x + p.y > 1.0 + tol.eps_geom
}

/// The representative `(x, y, 1)` of the class at `p`.
pub fn canonical_triangle_of_chart2(
    p: ChartPoint2,
    tol: &Tolerance,
) -> Result<CanonicalSides, ChartError> {
    if !in_region2(p, tol) {
        return Err(ChartError::OutOfRegion { x: p.x, y: p.y });
    }
    Ok(CanonicalSides::from_ratios_unchecked(p.x, p.y))
}

pub fn classify_chart2(
    p: ChartPoint2,
    tol: &Tolerance,
) -> Result<Chart2Classification, ChartError> {
    let s = canonical_triangle_of_chart2(p, tol)?;
    let class = classify_sides(&s, tol);
    let locus = match (class.angle_kind, class.side_kind) {
        (_, SideKind::Equilateral) => Locus2::PointC,
        (AngleKind::Right, SideKind::Isosceles(_)) => Locus2::PointD,
        (AngleKind::Right, _) => Locus2::ArcBD,
        (_, SideKind::Isosceles(LegRelation::LegsLonger)) => Locus2::SegmentBC,
        (AngleKind::Acute, SideKind::Isosceles(LegRelation::LegsShorter)) => Locus2::SegmentCD,
        (_, SideKind::Isosceles(LegRelation::LegsShorter)) => Locus2::SegmentDE,
        (AngleKind::Acute, SideKind::Scalene) => Locus2::InteriorAcute,
        (_, SideKind::Scalene) => Locus2::InteriorObtuse,
    };
    Ok(Chart2Classification { class, locus })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    Total,
    Acute,
    Obtuse,
    Right,
}

/// Exact area of a class region in the side-ratio chart.
///
/// Total is the triangle B, C, E (1/4). Obtuse is the circular segment cut
/// off by the arc between B and D, bounded below by BE: `(pi - 2) / 8`.
pub fn region_area2(kind: RegionKind) -> f64 {
    match kind {
        RegionKind::Total => 0.25,
        RegionKind::Acute => (4.0 - PI) / 8.0,
        RegionKind::Obtuse => (PI - 2.0) / 8.0,
        RegionKind::Right => 0.0,
    }
}

/// `region_area2(kind) / region_area2(Total)`.
pub fn region_fraction2(kind: RegionKind) -> f64 {
    match kind {
        RegionKind::Total => 1.0,
        RegionKind::Acute => (4.0 - PI) / 2.0,
        RegionKind::Obtuse => (PI - 2.0) / 2.0,
        RegionKind::Right => 0.0,
    }
}
