//! JSON documents emitted by the command-line tool.
//!
//! Every document goes through [`canonical`], which orders object keys
//! lexicographically. Floats use the shortest representation that parses
//! back to the same double, so parsing and re-serializing a document gives
//! identical bytes. Field names are listed in `docs/json-schema.md`.

use serde_json::{json, Map, Value};

use crate::error::{ChartError, TriangleError};
use crate::measure::{Chart, ProportionReport};
use crate::model::{
    angles_of_sides, canonicalize, sides_of_angles, AngleKind, Angles, CanonicalSides, ShapeClass,
    Sides, Tolerance,
};
use crate::sideratio::{classify_chart2, region_area2, region_fraction2, to_chart2, RegionKind};
use crate::sigma::{
    classify_chart3, orbit, psi, region_area3, region_proportion3, sigma_total_area,
};

/// Rebuilds every object with its keys in sorted order.
pub fn canonical(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, canonical(v));
            }
            Value::Object(out)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonical).collect()),
        other => other,
    }
}

/// Pretty-printed canonical form with a trailing newline.
pub fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&canonical(v)).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// How the three input numbers of `classify` are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Sides,
    AnglesRadians,
    AnglesDegrees,
}

impl InputKind {
    fn name(self) -> &'static str {
        match self {
            InputKind::Sides => "sides",
            InputKind::AnglesRadians => "angles_radians",
            InputKind::AnglesDegrees => "angles_degrees",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error(transparent)]
    Chart(#[from] ChartError),
}

impl ClassifyError {
    pub fn kind(&self) -> &'static str {
        match self {
            ClassifyError::Triangle(e) => e.kind(),
            ClassifyError::Chart(e) => e.kind(),
        }
    }
}

pub fn class_json(c: &ShapeClass) -> Value {
    json!({
        "angle_kind": c.angle_kind,
        "side_kind": c.side_kind.name(),
        "leg_relation": c.side_kind.leg_relation(),
    })
}

/// Builds the full `classify` document for one triangle.
pub fn classify_document(
    kind: InputKind,
    values: [f64; 3],
    tol: &Tolerance,
) -> Result<Value, ClassifyError> {
    let (canon, angles): (CanonicalSides, Angles) = match kind {
        InputKind::Sides => {
            let s = crate::model::validate_triangle(values[0], values[1], values[2], tol)?;
            let c = canonicalize(&s);
            (c, angles_of_sides(&c))
        }
        InputKind::AnglesRadians | InputKind::AnglesDegrees => {
            let t = if kind == InputKind::AnglesDegrees {
                Angles::from_degrees(values[0], values[1], values[2])?
            } else {
                Angles::new(values[0], values[1], values[2])?
            };
            let c = sides_of_angles(&t);
            // rejects needle triangles that collapse onto BE after rounding
            Sides::new(c.a(), c.b(), c.c())?;
            (c, t)
        }
    };
    let class = crate::model::classify_sides(&canon, tol);
    let p2 = to_chart2(&canon);
    let c2 = classify_chart2(p2, tol)?;
    let p3 = psi(&angles);
    let c3 = classify_chart3(p3, tol)?;
    let orbit: Vec<[f64; 3]> = orbit(p3, tol).iter().map(|p| p.as_array()).collect();
    Ok(json!({
        "input": { "kind": kind.name(), "values": values },
        "canonical_sides": canon.as_array(),
        "angles": angles.sorted().as_array(),
        "chart2": { "x": p2.x, "y": p2.y, "locus": c2.locus },
        "chart3": { "point": p3.as_array(), "locus": c3.locus, "orbit": orbit },
        "class": class_json(&class),
        "tolerance": { "eps_class": tol.eps_class, "eps_geom": tol.eps_geom },
    }))
}

pub fn error_document(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn entry(symbolic: &str, value: f64) -> Value {
    json!({ "symbolic": symbolic, "value": value })
}

/// Exact class measures of a chart.
pub fn measure_document(chart: Chart) -> Value {
    match chart {
        Chart::SideRatio => json!({
            "chart": chart.name(),
            "areas": {
                "total": entry("1/4", region_area2(RegionKind::Total)),
                "acute": entry("(4-pi)/8", region_area2(RegionKind::Acute)),
                "obtuse": entry("(pi-2)/8", region_area2(RegionKind::Obtuse)),
                "right": entry("0", region_area2(RegionKind::Right)),
            },
            "fractions": {
                "acute": entry("(4-pi)/2", region_fraction2(RegionKind::Acute)),
                "obtuse": entry("(pi-2)/2", region_fraction2(RegionKind::Obtuse)),
                "right": entry("0", region_fraction2(RegionKind::Right)),
            },
        }),
        Chart::AngleSigma => json!({
            "chart": chart.name(),
            "proportions": {
                "acute": entry("1/4", region_proportion3(AngleKind::Acute)),
                "obtuse": entry("3/4", region_proportion3(AngleKind::Obtuse)),
                "right": entry("0", region_proportion3(AngleKind::Right)),
            },
            "areas": {
                "total": entry("sqrt(3)/2*pi^2", sigma_total_area()),
                "acute": entry("sqrt(3)/8*pi^2", region_area3(AngleKind::Acute)),
                "obtuse": entry("3*sqrt(3)/8*pi^2", region_area3(AngleKind::Obtuse)),
                "right": entry("0", region_area3(AngleKind::Right)),
            },
        }),
    }
}

pub fn report_document(r: &ProportionReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}
