//! The angle chart: a class goes to its angle triple on the plane
//! `x + y + z = pi`.
//!
//! Valid triangles fill the open triangle A(0,0,pi), B(pi,0,0), C(0,pi,0).
//! The cube `[0, pi/2]^3` cuts it along the medial triangle P, Q, R: right
//! triangles sit on that boundary, acute ones inside it, obtuse ones in the
//! three corner triangles APQ, BQR and CPR.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

use serde::Serialize;

use crate::error::ChartError;
use crate::model::{
    decide_angles, side_pattern, AngleKind, Angles, ShapeClass, SideKind, Tolerance,
    ANGLE_SUM_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ChartPoint3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        ChartPoint3 { x, y, z }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(v: [f64; 3]) -> Self {
        ChartPoint3 {
            x: v[0],
            y: v[1],
            z: v[2],
        }
    }

    pub fn max_abs_diff(&self, other: &ChartPoint3) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Landmark3 {
    A,
    B,
    C,
    P,
    Q,
    R,
    PPrime,
    QPrime,
    RPrime,
    Centroid,
    S,
    D,
    E,
    F,
    O,
}

impl Landmark3 {
    pub const ALL: [Landmark3; 15] = [
        Landmark3::A,
        Landmark3::B,
        Landmark3::C,
        Landmark3::P,
        Landmark3::Q,
        Landmark3::R,
        Landmark3::PPrime,
        Landmark3::QPrime,
        Landmark3::RPrime,
        Landmark3::Centroid,
        Landmark3::S,
        Landmark3::D,
        Landmark3::E,
        Landmark3::F,
        Landmark3::O,
    ];

    pub fn coords(self) -> ChartPoint3 {
        let h = FRAC_PI_2;
        let q = FRAC_PI_4;
        let (x, y, z) = match self {
            Landmark3::A => (0.0, 0.0, PI),
            Landmark3::B => (PI, 0.0, 0.0),
            Landmark3::C => (0.0, PI, 0.0),
            Landmark3::P => (0.0, h, h),
            Landmark3::Q => (h, 0.0, h),
            Landmark3::R => (h, h, 0.0),
            Landmark3::PPrime => (h, q, q),
            Landmark3::QPrime => (q, h, q),
            Landmark3::RPrime => (q, q, h),
            Landmark3::Centroid => (FRAC_PI_3, FRAC_PI_3, FRAC_PI_3),
            // cube vertex, drawn only; not on the plane
            Landmark3::S => (h, h, h),
            Landmark3::D => (0.0, h, 0.0),
            Landmark3::E => (0.0, 0.0, h),
            Landmark3::F => (h, 0.0, 0.0),
            Landmark3::O => (0.0, 0.0, 0.0),
        };
        ChartPoint3 { x, y, z }
    }

    pub fn name(self) -> &'static str {
        match self {
            Landmark3::A => "A",
            Landmark3::B => "B",
            Landmark3::C => "C",
            Landmark3::P => "P",
            Landmark3::Q => "Q",
            Landmark3::R => "R",
            Landmark3::PPrime => "P'",
            Landmark3::QPrime => "Q'",
            Landmark3::RPrime => "R'",
            Landmark3::Centroid => "G",
            Landmark3::S => "S",
            Landmark3::D => "D",
            Landmark3::E => "E",
            Landmark3::F => "F",
            Landmark3::O => "O",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Locus3 {
    Centroid,
    PPrime,
    QPrime,
    RPrime,
    /// Right angle at z.
    EdgePQ,
    /// Right angle at y.
    EdgePR,
    /// Right angle at x.
    EdgeQR,
    InteriorPQR,
    /// Obtuse angle at z.
    CornerAPQ,
    /// Obtuse angle at y.
    CornerCPR,
    /// Obtuse angle at x.
    CornerBQR,
}

impl Locus3 {
    pub fn is_prime_point(self) -> bool {
        matches!(self, Locus3::PPrime | Locus3::QPrime | Locus3::RPrime)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chart3Classification {
    pub class: ShapeClass,
    pub locus: Locus3,
}

/// Canonical image of a class: its angles in ascending order.
pub fn psi(t: &Angles) -> ChartPoint3 {
    ChartPoint3::from_array(t.sorted().as_array())
}

/// Distinct coordinate permutations of `p`, in lexicographic index order.
/// Coordinates within `eps_class` (relative) count as equal.
pub fn orbit(p: ChartPoint3, tol: &Tolerance) -> Vec<ChartPoint3> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let v = p.as_array();
    let scale = v.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut out: Vec<ChartPoint3> = Vec::with_capacity(6);
    for perm in PERMS {
        let q = ChartPoint3::from_array([v[perm[0]], v[perm[1]], v[perm[2]]]);
        if !out
            .iter()
            .any(|o| o.max_abs_diff(&q) <= tol.eps_class * scale)
        {
            out.push(q);
        }
    }
    out
}

/// First-octant membership on the plane. Coordinates must exceed `eps_geom`
/// and the sum must match pi to within [`ANGLE_SUM_TOLERANCE`].
pub fn on_sigma(p: ChartPoint3, tol: &Tolerance) -> bool {
    p.as_array()
        .iter()
        .all(|c| c.is_finite() && *c > tol.eps_geom)
        && (p.x + p.y + p.z - PI).abs() <= ANGLE_SUM_TOLERANCE
}

pub fn classify_chart3(
    p: ChartPoint3,
    tol: &Tolerance,
) -> Result<Chart3Classification, ChartError> {
    if !on_sigma(p, tol) {
        return Err(ChartError::OutOfSigma {
            x: p.x,
            y: p.y,
            z: p.z,
        });
    }
    let (class, max_idx) = decide_angles(p.as_array(), tol);
    let locus = match (class.angle_kind, class.side_kind) {
        (_, SideKind::Equilateral) => Locus3::Centroid,
        (AngleKind::Right, SideKind::Isosceles(_)) => {
            [Locus3::PPrime, Locus3::QPrime, Locus3::RPrime][max_idx]
        }
        (AngleKind::Right, _) => [Locus3::EdgeQR, Locus3::EdgePR, Locus3::EdgePQ][max_idx],
        (AngleKind::Acute, _) => Locus3::InteriorPQR,
        (AngleKind::Obtuse, _) => {
            [Locus3::CornerBQR, Locus3::CornerCPR, Locus3::CornerAPQ][max_idx]
        }
    };
    Ok(Chart3Classification { class, locus })
}

/// Point `t*A + (1-t)*R` on the median through A.
pub fn median_point(t: f64) -> Result<ChartPoint3, ChartError> {
    if !(t > 0.0 && t < 1.0) {
        return Err(ChartError::OutOfRange { t });
    }
    let base = (1.0 - t) * FRAC_PI_2;
    Ok(ChartPoint3::new(base, base, t * PI))
}

/// Side pattern along the median through A: the repeated angle
/// `(1-t) pi/2` against the apex angle `t pi`.
pub fn leg_relation_of_median(t: f64, tol: &Tolerance) -> Result<SideKind, ChartError> {
    let p = median_point(t)?;
    let mut v = p.as_array();
    v.sort_by(f64::total_cmp);
    Ok(side_pattern(v, tol.eps_class))
}

/// Area fraction of a class on the open triangle ABC.
pub fn region_proportion3(kind: AngleKind) -> f64 {
    match kind {
        AngleKind::Obtuse => 0.75,
        AngleKind::Acute => 0.25,
        AngleKind::Right => 0.0,
    }
}

/// Area of triangle ABC: equilateral with side `pi * sqrt(2)`.
pub fn sigma_total_area() -> f64 {
    3f64.sqrt() / 2.0 * PI * PI
}

pub fn region_area3(kind: AngleKind) -> f64 {
    region_proportion3(kind) * sigma_total_area()
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn sqrt6() -> f64 {
    6f64.sqrt()
}

/// Isometric 2-D coordinates on the plane, origin at the centroid.
///
/// Basis `(1,-1,0)/sqrt2` and `(1,1,-2)/sqrt6`; both are orthogonal to the
/// plane normal, so areas and distances are preserved.
pub fn to_plane(p: ChartPoint3) -> [f64; 2] {
    [(p.x - p.y) / SQRT2, (p.x + p.y - 2.0 * p.z) / sqrt6()]
}

pub fn from_plane(uv: [f64; 2]) -> ChartPoint3 {
    let [u, v] = uv;
    let s6 = sqrt6();
    ChartPoint3::new(
        FRAC_PI_3 + u / SQRT2 + v / s6,
        FRAC_PI_3 - u / SQRT2 + v / s6,
        FRAC_PI_3 - 2.0 * v / s6,
    )
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict point-in-triangle test by orientation signs.
pub fn in_open_triangle(p: [f64; 2], tri: [[f64; 2]; 3]) -> bool {
    let d0 = cross(tri[0], tri[1], p);
    let d1 = cross(tri[1], tri[2], p);
    let d2 = cross(tri[2], tri[0], p);
    (d0 > 0.0 && d1 > 0.0 && d2 > 0.0) || (d0 < 0.0 && d1 < 0.0 && d2 < 0.0)
}

fn plane_triangle(l: [Landmark3; 3]) -> [[f64; 2]; 3] {
    l.map(|m| to_plane(m.coords()))
}

/// Acute test through the medial triangle instead of the coordinates.
pub fn in_open_pqr(p: ChartPoint3) -> bool {
    in_open_triangle(
        to_plane(p),
        plane_triangle([Landmark3::P, Landmark3::Q, Landmark3::R]),
    )
}

/// Which open corner triangle contains `p`, if any.
pub fn corner_of(p: ChartPoint3) -> Option<Locus3> {
    let uv = to_plane(p);
    let corners = [
        (
            Locus3::CornerAPQ,
            [Landmark3::A, Landmark3::P, Landmark3::Q],
        ),
        (
            Locus3::CornerCPR,
            [Landmark3::C, Landmark3::P, Landmark3::R],
        ),
        (
            Locus3::CornerBQR,
            [Landmark3::B, Landmark3::Q, Landmark3::R],
        ),
    ];
    let hits: Vec<Locus3> = corners
        .iter()
        .filter(|(_, tri)| in_open_triangle(uv, plane_triangle(*tri)))
        .map(|(l, _)| *l)
        .collect();
    match hits.as_slice() {
        [one] => Some(*one),
        _ => None,
    }
}

/// Intersection of the lines through `p0 p1` and `q0 q1` in plane coordinates.
fn intersect_lines(p0: [f64; 2], p1: [f64; 2], q0: [f64; 2], q1: [f64; 2]) -> Option<[f64; 2]> {
    let r = [p1[0] - p0[0], p1[1] - p0[1]];
    let s = [q1[0] - q0[0], q1[1] - q0[1]];
    let denom = r[0] * s[1] - r[1] * s[0];
    if denom.abs() < 1e-300 {
        return None;
    }
    let w = [q0[0] - p0[0], q0[1] - p0[1]];
    let t = (w[0] * s[1] - w[1] * s[0]) / denom;
    Some([p0[0] + t * r[0], p0[1] + t * r[1]])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedianConcurrency {
    pub ar_bp: ChartPoint3,
    pub bp_cq: ChartPoint3,
    pub cq_ar: ChartPoint3,
    /// Mean of the three pairwise intersections.
    pub common: ChartPoint3,
}

/// Intersects the medians AR, BP, CQ pairwise.
pub fn medians_concurrency_check() -> MedianConcurrency {
    use Landmark3::*;
    let seg = |a: Landmark3, b: Landmark3| (to_plane(a.coords()), to_plane(b.coords()));
    let (ar, bp, cq) = (seg(A, R), seg(B, P), seg(C, Q));
    let meet = |m: ([f64; 2], [f64; 2]), n: ([f64; 2], [f64; 2])| {
        from_plane(intersect_lines(m.0, m.1, n.0, n.1).expect("medians are not parallel"))
    };
    let ar_bp = meet(ar, bp);
    let bp_cq = meet(bp, cq);
    let cq_ar = meet(cq, ar);
    let common = ChartPoint3::new(
        (ar_bp.x + bp_cq.x + cq_ar.x) / 3.0,
        (ar_bp.y + bp_cq.y + cq_ar.y) / 3.0,
        (ar_bp.z + bp_cq.z + cq_ar.z) / 3.0,
    );
    MedianConcurrency {
        ar_bp,
        bp_cq,
        cq_ar,
        common,
    }
}
