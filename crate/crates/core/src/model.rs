//! Triangle values, similarity canonicalization and shape classification.
//!
//! Two representations of a similarity class live here: side lengths
//! normalized so the longest side is 1 ([`CanonicalSides`]) and angle
//! triples summing to pi ([`Angles`]). Both classify through the same
//! equality-pattern logic so side-space and angle-space never disagree on
//! what "isosceles with longer legs" means.

use std::cmp::Ordering;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::TriangleError;

/// Largest admissible `|x + y + z - pi|` for any [`Angles`] value.
pub const ANGLE_SUM_TOLERANCE: f64 = 1e-12;

/// Comparison tolerances.
///
/// `eps_class` is relative and decides right-angle and equal-side bands.
/// `eps_geom` is absolute and decides region membership and round trips.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_class: f64,
    pub eps_geom: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_class: 1e-9,
            eps_geom: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
#[error("tolerances must be positive and finite (eps_class={eps_class}, eps_geom={eps_geom})")]
pub struct InvalidTolerance {
    pub eps_class: f64,
    pub eps_geom: f64,
}

impl Tolerance {
    pub fn new(eps_class: f64, eps_geom: f64) -> Result<Self, InvalidTolerance> {
        let ok = |e: f64| e.is_finite() && e > 0.0;
        if ok(eps_class) && ok(eps_geom) {
            Ok(Tolerance {
                eps_class,
                eps_geom,
            })
        } else {
            Err(InvalidTolerance {
                eps_class,
                eps_geom,
            })
        }
    }
}

/// Raw side lengths of a non-degenerate triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    a: f64,
    b: f64,
    c: f64,
}

impl Sides {
    /// Validates with the default tolerance.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, TriangleError> {
        validate_triangle(a, b, c, &Tolerance::default())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Multiplies every side by `k`; `None` if the result is not a valid triangle.
    pub fn scaled(&self, k: f64) -> Option<Sides> {
        Sides::new(self.a * k, self.b * k, self.c * k).ok()
    }
}

/// Checks positivity and the strict triangle inequality.
///
/// The inequality is tested relative to the longest side: a triple with
/// `lo + mid - hi <= eps_geom * hi` is degenerate. Values pass through
/// unchanged.
pub fn validate_triangle(a: f64, b: f64, c: f64, tol: &Tolerance) -> Result<Sides, TriangleError> {
    if [a, b, c].iter().any(|s| !s.is_finite() || *s <= 0.0) {
        return Err(TriangleError::NonPositiveSide);
    }
    let [lo, mid, hi] = sorted3([a, b, c]);
    if lo + mid - hi <= tol.eps_geom * hi {
        return Err(TriangleError::DegenerateTriangle);
    }
    Ok(Sides { a, b, c })
}

/// Similarity-class representative: `a <= b <= c = 1`, `a + b > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalSides {
    a: f64,
    b: f64,
}

impl CanonicalSides {
    /// Builds `(a, b, 1)` from side ratios, checking the canonical invariants.
    pub fn from_ratios(a: f64, b: f64, tol: &Tolerance) -> Result<Self, TriangleError> {
        if !(a.is_finite() && b.is_finite()) || a <= 0.0 || b <= 0.0 {
            return Err(TriangleError::NonPositiveSide);
        }
        if a > b || b > 1.0 || a + b <= 1.0 + tol.eps_geom {
            return Err(TriangleError::DegenerateTriangle);
        }
        Ok(CanonicalSides { a, b })
    }

    // Callers guarantee the invariants.
    pub(crate) fn from_ratios_unchecked(a: f64, b: f64) -> Self {
        CanonicalSides { a, b }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        1.0
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, 1.0]
    }
}

/// Sorts ascending and divides by the longest side.
pub fn canonicalize(s: &Sides) -> CanonicalSides {
    let [lo, mid, hi] = sorted3(s.as_array());
    CanonicalSides {
        a: lo / hi,
        b: mid / hi,
    }
}

/// Angle triple in radians, positive, summing to pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angles {
    x: f64,
    y: f64,
    z: f64,
}

impl Angles {
    /// Accepts positive angles whose sum is within [`ANGLE_SUM_TOLERANCE`]
    /// of pi, then rescales them so the sum is pi to rounding.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, TriangleError> {
        if [x, y, z].iter().any(|t| !t.is_finite() || *t <= 0.0) {
            return Err(TriangleError::NonPositiveAngle);
        }
        let sum = x + y + z;
        if (sum - PI).abs() > ANGLE_SUM_TOLERANCE {
            return Err(TriangleError::AngleSum { sum });
        }
        Ok(Self::renormalized([x, y, z]))
    }

    pub fn from_degrees(x: f64, y: f64, z: f64) -> Result<Self, TriangleError> {
        Angles::new(x.to_radians(), y.to_radians(), z.to_radians())
    }

    // Positive inputs whose sum is near pi; order is preserved.
    pub(crate) fn renormalized(t: [f64; 3]) -> Self {
        let k = PI / (t[0] + t[1] + t[2]);
        Angles {
            x: t[0] * k,
            y: t[1] * k,
            z: t[2] * k,
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn sum(&self) -> f64 {
        self.x + self.y + self.z
    }

    /// The same class with angles in ascending order.
    pub fn sorted(&self) -> Angles {
        let [x, y, z] = sorted3(self.as_array());
        Angles { x, y, z }
    }
}

/// Angle opposite `opp`, robust for needle and cap triangles.
///
/// Uses `atan2(4K, p^2 + q^2 - opp^2)` with the area `K` from the
/// cancellation-free ordering of Heron's formula.
fn angle_opposite(opp: f64, p: f64, q: f64) -> f64 {
    let [s0, s1, s2] = sorted3([opp, p, q]);
    // largest first: x >= y >= z
    let (x, y, z) = (s2, s1, s0);
    let prod = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    let four_area = prod.max(0.0).sqrt();
    four_area.atan2(p * p + q * q - opp * opp)
}

/// Interior angles via the law of cosines, ascending, renormalized to sum to pi.
pub fn angles_of_sides(s: &CanonicalSides) -> Angles {
    let [a, b, c] = s.as_array();
    let raw = [
        angle_opposite(a, b, c),
        angle_opposite(b, a, c),
        angle_opposite(c, a, b),
    ];
    Angles::renormalized(sorted3(raw))
}

/// Law of sines with the longest side normalized to 1.
pub fn sides_of_angles(t: &Angles) -> CanonicalSides {
    let [x, y, z] = sorted3(t.as_array());
    // sin(z) == sin(x + y); the sum of the two small angles keeps precision
    // when z is close to pi.
    let denom = if z > std::f64::consts::FRAC_PI_2 {
        (x + y).sin()
    } else {
        z.sin()
    };
    let a = (x.sin() / denom).min(1.0);
    let b = (y.sin() / denom).min(1.0);
    CanonicalSides::from_ratios_unchecked(a.min(b), b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleKind {
    Acute,
    Right,
    Obtuse,
}

/// Whether the two equal sides of an isosceles triangle exceed the third.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LegRelation {
    LegsLonger,
    LegsShorter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideKind {
    Equilateral,
    Isosceles(LegRelation),
    Scalene,
}

impl SideKind {
    pub fn name(&self) -> &'static str {
        match self {
            SideKind::Equilateral => "equilateral",
            SideKind::Isosceles(_) => "isosceles",
            SideKind::Scalene => "scalene",
        }
    }

    pub fn leg_relation(&self) -> Option<LegRelation> {
        match self {
            SideKind::Isosceles(rel) => Some(*rel),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShapeClass {
    pub angle_kind: AngleKind,
    pub side_kind: SideKind,
}

fn rel_gap(p: f64, q: f64) -> f64 {
    let scale = p.abs().max(q.abs());
    if scale == 0.0 {
        0.0
    } else {
        (p - q).abs() / scale
    }
}

/// Equality pattern of an ascending triple of sides or angles.
///
/// Equal angles face equal sides and the order is preserved, so the same
/// rule serves both: a repeated top pair means the equal sides are the
/// longer ones.
pub(crate) fn side_pattern(sorted: [f64; 3], eps: f64) -> SideKind {
    let [lo, mid, hi] = sorted;
    if rel_gap(lo, hi) <= eps {
        return SideKind::Equilateral;
    }
    let low = rel_gap(lo, mid);
    let high = rel_gap(mid, hi);
    match (low <= eps, high <= eps) {
        (false, false) => SideKind::Scalene,
        (true, false) => SideKind::Isosceles(LegRelation::LegsShorter),
        (false, true) => SideKind::Isosceles(LegRelation::LegsLonger),
        (true, true) if low <= high => SideKind::Isosceles(LegRelation::LegsShorter),
        (true, true) => SideKind::Isosceles(LegRelation::LegsLonger),
    }
}

/// Pythagorean test on `a^2 + b^2 - c^2`; the band `eps_class * c^2` is Right.
pub fn classify_sides(s: &CanonicalSides, tol: &Tolerance) -> ShapeClass {
    let [a, b, c] = s.as_array();
    let gap = a * a + b * b - c * c;
    let angle_kind = if gap.abs() <= tol.eps_class * c * c {
        AngleKind::Right
    } else if gap > 0.0 {
        AngleKind::Acute
    } else {
        AngleKind::Obtuse
    };
    ShapeClass {
        angle_kind,
        side_kind: side_pattern([a, b, c], tol.eps_class),
    }
}

/// Decision procedure shared by [`classify_angles`] and the angle chart.
///
/// Takes the triple in its given order and also reports the index of the
/// largest coordinate.
pub(crate) fn decide_angles(t: [f64; 3], tol: &Tolerance) -> (ShapeClass, usize) {
    let max_idx = (0..3)
        .max_by(|&i, &j| t[i].total_cmp(&t[j]).then(j.cmp(&i)))
        .unwrap_or(0);
    let half = std::f64::consts::FRAC_PI_2;
    let top = t[max_idx];
    let angle_kind = if (top - half).abs() <= tol.eps_class * half {
        AngleKind::Right
    } else if top < half {
        AngleKind::Acute
    } else {
        AngleKind::Obtuse
    };
    let class = ShapeClass {
        angle_kind,
        side_kind: side_pattern(sorted3(t), tol.eps_class),
    };
    (class, max_idx)
}

/// Largest angle against pi/2 with a relative `eps_class` band for Right.
pub fn classify_angles(t: &Angles, tol: &Tolerance) -> ShapeClass {
    decide_angles(t.as_array(), tol).0
}

pub(crate) fn sorted3(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(|p, q| p.partial_cmp(q).unwrap_or(Ordering::Equal));
    v
}
