//! SVG 1.1 drawings of both charts.
//!
//! Output is a pure function of the [`RenderSpec`]: coordinates are printed
//! with three decimals and elements are emitted in a fixed order. Dashed
//! strokes mark boundaries that carry no triangle.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::measure::Chart;
use crate::sideratio::{ChartPoint2, Landmark2};
use crate::sigma::{to_plane, ChartPoint3, Landmark3};

pub const MIN_DIMENSION: u32 = 64;
pub const MAX_DIMENSION: u32 = 16384;

/// Segments used to draw the quarter arcs.
pub const ARC_SEGMENTS: usize = 256;

const RED: &str = "#c0392b";
const BLUE: &str = "#1f5fbf";
const INK: &str = "#222222";
const GREY: &str = "#888888";
pub const FILL_ACUTE: &str = "#a8d5a2";
pub const FILL_OBTUSE: &str = "#f4c27a";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    Barycentric2D,
    Oblique3D,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OverlayPoint {
    SideRatio(ChartPoint2),
    Sigma(ChartPoint3),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub chart: Chart,
    pub width: u32,
    pub height: u32,
    pub shade_regions: bool,
    pub show_landmarks: bool,
    pub overlay_points: Vec<OverlayPoint>,
    /// Ignored for the side-ratio chart.
    pub projection: Projection,
}

impl RenderSpec {
    pub fn new(chart: Chart) -> Self {
        RenderSpec {
            chart,
            width: 800,
            height: 800,
            shade_regions: false,
            show_landmarks: true,
            overlay_points: Vec::new(),
            projection: Projection::Barycentric2D,
        }
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("invalid render spec: {0}")]
    InvalidSpec(String),
    #[error("cannot write figure: {0}")]
    Io(#[from] std::io::Error),
}

/// Affine map from chart coordinates to pixels, `y` pointing down.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub scale: f64,
    pub origin_x: f64,
    pub origin_y: f64,
}

impl Frame {
    fn fit(width: u32, height: u32, lo: [f64; 2], hi: [f64; 2]) -> Frame {
        let (w, h) = (width as f64, height as f64);
        let scale = (w / (hi[0] - lo[0])).min(h / (hi[1] - lo[1]));
        // center the data box
        let origin_x = (w - scale * (hi[0] - lo[0])) / 2.0 - scale * lo[0];
        let origin_y = (h - scale * (hi[1] - lo[1])) / 2.0 + scale * hi[1];
        Frame {
            scale,
            origin_x,
            origin_y,
        }
    }

    pub fn to_px(&self, p: [f64; 2]) -> [f64; 2] {
        [
            self.origin_x + self.scale * p[0],
            self.origin_y - self.scale * p[1],
        ]
    }

    /// Pixels per chart unit of area.
    pub fn area_scale(&self) -> f64 {
        self.scale * self.scale
    }
}

/// Pixel frame used for the side-ratio chart.
pub fn side_ratio_frame(width: u32, height: u32) -> Frame {
    Frame::fit(width, height, [-0.14, -0.14], [1.2, 1.2])
}

fn oblique(p: ChartPoint3) -> [f64; 2] {
    // x to the right, z up, y receding to the upper right
    const K: f64 = 0.42;
    [p.x + K * p.y, p.z + K * p.y]
}

/// Maps a point of the angle plane into 2-D drawing coordinates.
pub fn sigma_coords(p: ChartPoint3, projection: Projection) -> [f64; 2] {
    match projection {
        Projection::Barycentric2D => {
            let [u, v] = to_plane(p);
            // put A at the top
            [u, -v]
        }
        Projection::Oblique3D => oblique(p),
    }
}

/// Pixel frame used for the angle chart.
pub fn sigma_frame(width: u32, height: u32, projection: Projection) -> Frame {
    match projection {
        Projection::Barycentric2D => {
            let r = PI * 2f64.sqrt() / 2.0;
            let top = 2.0 * PI / 6f64.sqrt();
            Frame::fit(
                width,
                height,
                [-r - 0.5, -top / 2.0 - 0.6],
                [r + 0.5, top + 0.5],
            )
        }
        Projection::Oblique3D => Frame::fit(
            width,
            height,
            [-0.5, -0.5],
            [PI + 0.42 * PI + 0.8, PI + 0.42 * PI + 0.6],
        ),
    }
}

struct Canvas {
    out: String,
    frame: Frame,
}

fn f(v: f64) -> String {
    // avoid "-0.000"
    let s = format!("{:.3}", v);
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

impl Canvas {
    fn path_d(&self, pts: &[[f64; 2]], close: bool) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let [x, y] = self.frame.to_px(*p);
            let _ = write!(d, "{}{},{} ", if i == 0 { "M" } else { "L" }, f(x), f(y));
        }
        if close {
            d.push('Z');
        } else {
            d.pop();
        }
        d
    }

    fn polygon(&mut self, id: &str, pts: &[[f64; 2]], fill: &str) {
        let d = self.path_d(pts, true);
        let _ = writeln!(
            self.out,
            r#"  <path id="{id}" class="region" d="{d}" fill="{fill}" stroke="none"/>"#
        );
    }

    fn polyline(&mut self, pts: &[[f64; 2]], stroke: &str, width: f64, dashed: bool) {
        let d = self.path_d(pts, false);
        let dash = if dashed {
            r#" stroke-dasharray="8,6""#
        } else {
            ""
        };
        let _ = writeln!(
            self.out,
            r#"  <path d="{d}" fill="none" stroke="{stroke}" stroke-width="{}"{dash}/>"#,
            f(width)
        );
    }

    fn line(&mut self, a: [f64; 2], b: [f64; 2], stroke: &str, width: f64, dashed: bool) {
        self.polyline(&[a, b], stroke, width, dashed);
    }

    fn arrow(&mut self, a: [f64; 2], b: [f64; 2], label: &str) {
        let [x1, y1] = self.frame.to_px(a);
        let [x2, y2] = self.frame.to_px(b);
        let _ = writeln!(
            self.out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{INK}" stroke-width="1.000" marker-end="url(#arrow)"/>"#,
            f(x1),
            f(y1),
            f(x2),
            f(y2)
        );
        self.text([x2 + 6.0, y2 - 6.0], label, "axis-label");
    }

    fn text(&mut self, px: [f64; 2], label: &str, class: &str) {
        let _ = writeln!(
            self.out,
            r#"  <text class="{class}" x="{}" y="{}" font-family="serif" font-size="16" fill="{INK}">{}</text>"#,
            f(px[0]),
            f(px[1]),
            escape(label)
        );
    }

    fn landmark(&mut self, id: &str, p: [f64; 2], label: &str, offset: [f64; 2]) {
        let [x, y] = self.frame.to_px(p);
        let _ = writeln!(
            self.out,
            r#"  <circle id="landmark-{id}" class="landmark" cx="{}" cy="{}" r="3.500" fill="{INK}"/>"#,
            f(x),
            f(y)
        );
        self.text([x + offset[0], y + offset[1]], label, "landmark-label");
    }

    fn overlay(&mut self, p: [f64; 2], index: usize) {
        let [x, y] = self.frame.to_px(p);
        let _ = writeln!(
            self.out,
            r##"  <circle id="overlay-{index}" class="overlay" cx="{}" cy="{}" r="5.000" fill="none" stroke="#8e44ad" stroke-width="2.000"/>"##,
            f(x),
            f(y)
        );
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn arc(from_deg: f64, to_deg: f64) -> Vec<[f64; 2]> {
    (0..=ARC_SEGMENTS)
        .map(|i| {
            let t = (from_deg + (to_deg - from_deg) * i as f64 / ARC_SEGMENTS as f64).to_radians();
            [t.cos(), t.sin()]
        })
        .collect()
}

/// Obtuse part of the side-ratio region: E, D, then the arc back to B.
pub fn obtuse_region2() -> Vec<[f64; 2]> {
    let mut pts = vec![[0.5, 0.5]];
    pts.extend(arc(45.0, 90.0));
    pts
}

/// Acute part of the side-ratio region: C, then the arc from B to D.
pub fn acute_region2() -> Vec<[f64; 2]> {
    let mut pts = vec![[1.0, 1.0]];
    pts.extend(arc(90.0, 45.0));
    pts
}

fn header(spec: &RenderSpec, title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(s, "  <title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r#"  <defs><marker id="arrow" markerWidth="10" markerHeight="10" refX="9" refY="5" orient="auto"><path d="M0,0 L10,5 L0,10 Z" fill="{INK}"/></marker></defs>"#
    );
    let _ = writeln!(
        s,
        r#"  <rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        spec.width, spec.height
    );
    s
}

fn render_side_ratio(spec: &RenderSpec) -> Result<String, RenderError> {
    let frame = side_ratio_frame(spec.width, spec.height);
    let mut c = Canvas {
        out: header(spec, "Side-ratio chart of triangle shapes"),
        frame,
    };
    if spec.shade_regions {
        c.polygon("region-acute", &acute_region2(), FILL_ACUTE);
        c.polygon("region-obtuse", &obtuse_region2(), FILL_OBTUSE);
    }
    c.arrow([0.0, 0.0], [1.15, 0.0], "x");
    c.arrow([0.0, 0.0], [0.0, 1.15], "y");
    // construction lines
    c.polyline(&arc(0.0, 90.0), INK, 1.0, false);
    c.line([1.0, 0.0], [1.0, 1.0], INK, 1.0, false);
    c.line([0.0, 0.0], [0.5, 0.5], INK, 1.0, false);
    c.line([0.5, 0.5], [1.0, 0.0], INK, 1.0, true);
    // region boundary
    c.line([0.0, 1.0], [1.0, 1.0], RED, 2.0, false);
    c.line([0.5, 0.5], [1.0, 1.0], RED, 2.0, false);
    c.line([0.0, 1.0], [0.5, 0.5], RED, 2.0, true);
    if spec.show_landmarks {
        for l in Landmark2::ALL {
            let p = l.coords();
            let label = match l {
                Landmark2::A => "A(1,0)",
                Landmark2::B => "B(0,1)",
                Landmark2::C => "C(1,1)",
                Landmark2::D => "D(1/√2,1/√2)",
                Landmark2::E => "E(1/2,1/2)",
                Landmark2::O => "O(0,0)",
            };
            let offset = match l {
                Landmark2::A | Landmark2::O => [-10.0, 22.0],
                Landmark2::C => [8.0, -6.0],
                _ => [-110.0, 4.0],
            };
            c.landmark(l.name(), [p.x, p.y], label, offset);
        }
    }
    for (i, o) in spec.overlay_points.iter().enumerate() {
        match o {
            OverlayPoint::SideRatio(p) => c.overlay([p.x, p.y], i),
            OverlayPoint::Sigma(_) => {
                return Err(RenderError::InvalidSpec(format!(
                    "overlay {i} is an angle-plane point but the chart is side-ratio"
                )))
            }
        }
    }
    c.text(
        [spec.width as f64 / 2.0 - 30.0, spec.height as f64 - 12.0],
        "Figure 1",
        "caption",
    );
    c.out.push_str("</svg>\n");
    Ok(c.out)
}

fn render_sigma(spec: &RenderSpec) -> Result<String, RenderError> {
    let proj = spec.projection;
    let frame = sigma_frame(spec.width, spec.height, proj);
    let mut c = Canvas {
        out: header(spec, "Angle-plane chart of triangle shapes"),
        frame,
    };
    let at = |l: Landmark3| sigma_coords(l.coords(), proj);
    use Landmark3::*;
    if spec.shade_regions {
        c.polygon("region-acute", &[at(P), at(Q), at(R)], FILL_ACUTE);
        c.polygon("region-obtuse-apq", &[at(A), at(P), at(Q)], FILL_OBTUSE);
        c.polygon("region-obtuse-cpr", &[at(C), at(P), at(R)], FILL_OBTUSE);
        c.polygon("region-obtuse-bqr", &[at(B), at(Q), at(R)], FILL_OBTUSE);
    }
    if proj == Projection::Oblique3D {
        let o = at(O);
        c.arrow(o, oblique(ChartPoint3::new(PI * 1.3, 0.0, 0.0)), "x");
        c.arrow(o, oblique(ChartPoint3::new(0.0, 0.0, PI * 1.3)), "z");
        c.arrow(o, oblique(ChartPoint3::new(0.0, PI * 1.3, 0.0)), "y");
        let h = FRAC_PI_2;
        let cube = |x: f64, y: f64, z: f64| oblique(ChartPoint3::new(x, y, z));
        let edges = [
            ((h, 0.0, 0.0), (h, 0.0, h)),
            ((0.0, h, 0.0), (0.0, h, h)),
            ((0.0, h, 0.0), (h, h, 0.0)),
            ((h, h, 0.0), (h, 0.0, 0.0)),
            ((h, h, 0.0), (h, h, h)),
            ((h, h, h), (0.0, h, h)),
            ((h, h, h), (h, 0.0, h)),
            ((0.0, h, h), (0.0, 0.0, h)),
            ((0.0, 0.0, h), (h, 0.0, h)),
        ];
        for (a, b) in edges {
            c.line(cube(a.0, a.1, a.2), cube(b.0, b.1, b.2), INK, 1.0, false);
        }
    } else {
        for (from, to) in [(A, R), (B, P), (C, Q)] {
            c.line(at(from), at(to), GREY, 1.0, false);
        }
    }
    c.line(at(A), at(B), RED, 2.0, true);
    c.line(at(B), at(C), RED, 2.0, true);
    c.line(at(C), at(A), RED, 2.0, true);
    c.polyline(&[at(P), at(Q), at(R), at(P)], BLUE, 2.0, false);
    if spec.show_landmarks {
        let mut named = vec![A, B, C, P, Q, R, PPrime, QPrime, RPrime, Centroid];
        if proj == Projection::Oblique3D {
            named.extend([S, D, E, F, O]);
        }
        for l in named {
            let label = match l {
                A => "A(0,0,π)".to_string(),
                B => "B(π,0,0)".to_string(),
                C => "C(0,π,0)".to_string(),
                P => "P(0,π/2,π/2)".to_string(),
                Q => "Q(π/2,0,π/2)".to_string(),
                R => "R(π/2,π/2,0)".to_string(),
                PPrime => "P′".to_string(),
                QPrime => "Q′".to_string(),
                RPrime => "R′".to_string(),
                Centroid => "(π/3,π/3,π/3)".to_string(),
                other => other.name().to_string(),
            };
            c.landmark(&format!("{:?}", l), at(l), &label, [8.0, -6.0]);
        }
    }
    for (i, o) in spec.overlay_points.iter().enumerate() {
        match o {
            OverlayPoint::Sigma(p) => c.overlay(sigma_coords(*p, proj), i),
            OverlayPoint::SideRatio(_) => {
                return Err(RenderError::InvalidSpec(format!(
                    "overlay {i} is a side-ratio point but the chart is the angle plane"
                )))
            }
        }
    }
    c.text(
        [spec.width as f64 / 2.0 - 30.0, spec.height as f64 - 12.0],
        "Figure 2",
        "caption",
    );
    c.out.push_str("</svg>\n");
    Ok(c.out)
}

/// Renders the chart described by `spec` to an SVG document.
pub fn render_svg(spec: &RenderSpec) -> Result<String, RenderError> {
    for (name, v) in [("width", spec.width), ("height", spec.height)] {
        if !(MIN_DIMENSION..=MAX_DIMENSION).contains(&v) {
            return Err(RenderError::InvalidSpec(format!(
                "{name} must be between {MIN_DIMENSION} and {MAX_DIMENSION}, got {v}"
            )));
        }
    }
    match spec.chart {
        Chart::SideRatio => render_side_ratio(spec),
        Chart::AngleSigma => render_sigma(spec),
    }
}

pub fn write_svg(spec: &RenderSpec, path: &Path) -> Result<(), RenderError> {
    let svg = render_svg(spec)?;
    std::fs::write(path, svg)?;
    Ok(())
}
