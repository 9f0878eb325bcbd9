//! C ABI for `trimoduli`.
//!
//! Every fallible function returns a [`TmStatus`] and writes its result
//! through an out-pointer, which is left untouched on failure. Tolerance
//! pointers may be null to mean the defaults. Strings handed out by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`tm_string_free`]; reports with [`tm_report_free`]. Panics never cross
//! the boundary: they surface as `TM_STATUS_INTERNAL`.
//!
//! The header `include/trimoduli.h` is regenerated by the build script.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trimoduli::measure::{estimate, Chart, ProportionReport, SamplePlan};
use trimoduli::model::{self, AngleKind, Angles, LegRelation, ShapeClass, SideKind, Tolerance};
use trimoduli::report::{self, InputKind};
use trimoduli::sideratio::{self, Locus2, RegionKind};
use trimoduli::sigma::{self, Locus3};
use trimoduli::svg::{self, Projection, RenderSpec};

mod status;

pub use status::{tm_status_message, TmStatus};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TmTolerance {
    /// Relative band for the right-angle and equal-side decisions.
    pub eps_class: f64,
    /// Absolute slack for region membership.
    pub eps_geom: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmAngleKind {
    Acute = 0,
    Right = 1,
    Obtuse = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmSideKind {
    Equilateral = 0,
    /// Isosceles with the two equal sides longer than the third.
    IsoscelesLegsLonger = 1,
    /// Isosceles with the two equal sides shorter than the third.
    IsoscelesLegsShorter = 2,
    Scalene = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TmShapeClass {
    pub angle_kind: TmAngleKind,
    pub side_kind: TmSideKind,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmLocus2 {
    InteriorAcute = 0,
    InteriorObtuse = 1,
    ArcBD = 2,
    SegmentBC = 3,
    SegmentCD = 4,
    SegmentDE = 5,
    PointC = 6,
    PointD = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmLocus3 {
    Centroid = 0,
    PPrime = 1,
    QPrime = 2,
    RPrime = 3,
    EdgePQ = 4,
    EdgePR = 5,
    EdgeQR = 6,
    InteriorPQR = 7,
    CornerAPQ = 8,
    CornerCPR = 9,
    CornerBQR = 10,
}

/// A point of the side-ratio chart with its classification.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TmChart2 {
    pub x: f64,
    pub y: f64,
    pub locus: TmLocus2,
    pub shape: TmShapeClass,
}

/// A point of the angle plane with its classification.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TmChart3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub locus: TmLocus3,
    pub shape: TmShapeClass,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TmPoint3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmChart {
    SideRatio = 0,
    AngleSigma = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmRegion {
    Total = 0,
    Acute = 1,
    Obtuse = 2,
    Right = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmInput {
    Sides = 0,
    AnglesRadians = 1,
    AnglesDegrees = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TmProjection {
    Barycentric = 0,
    Oblique = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TmClassCounts {
    pub acute: u64,
    pub right: u64,
    pub obtuse: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TmClassFractions {
    pub acute: f64,
    pub right: f64,
    pub obtuse: f64,
}

/// Opaque Monte Carlo report.
pub struct TmReport {
    inner: ProportionReport,
}

impl From<AngleKind> for TmAngleKind {
    fn from(k: AngleKind) -> Self {
        match k {
            AngleKind::Acute => TmAngleKind::Acute,
            AngleKind::Right => TmAngleKind::Right,
            AngleKind::Obtuse => TmAngleKind::Obtuse,
        }
    }
}

impl From<TmAngleKind> for AngleKind {
    fn from(k: TmAngleKind) -> Self {
        match k {
            TmAngleKind::Acute => AngleKind::Acute,
            TmAngleKind::Right => AngleKind::Right,
            TmAngleKind::Obtuse => AngleKind::Obtuse,
        }
    }
}

impl From<ShapeClass> for TmShapeClass {
    fn from(c: ShapeClass) -> Self {
        TmShapeClass {
            angle_kind: c.angle_kind.into(),
            side_kind: match c.side_kind {
                SideKind::Equilateral => TmSideKind::Equilateral,
                SideKind::Isosceles(LegRelation::LegsLonger) => TmSideKind::IsoscelesLegsLonger,
                SideKind::Isosceles(LegRelation::LegsShorter) => TmSideKind::IsoscelesLegsShorter,
                SideKind::Scalene => TmSideKind::Scalene,
            },
        }
    }
}

impl From<Locus2> for TmLocus2 {
    fn from(l: Locus2) -> Self {
        match l {
            Locus2::InteriorAcute => TmLocus2::InteriorAcute,
            Locus2::InteriorObtuse => TmLocus2::InteriorObtuse,
            Locus2::ArcBD => TmLocus2::ArcBD,
            Locus2::SegmentBC => TmLocus2::SegmentBC,
            Locus2::SegmentCD => TmLocus2::SegmentCD,
            Locus2::SegmentDE => TmLocus2::SegmentDE,
            Locus2::PointC => TmLocus2::PointC,
            Locus2::PointD => TmLocus2::PointD,
        }
    }
}

impl From<Locus3> for TmLocus3 {
    fn from(l: Locus3) -> Self {
        match l {
            Locus3::Centroid => TmLocus3::Centroid,
            Locus3::PPrime => TmLocus3::PPrime,
            Locus3::QPrime => TmLocus3::QPrime,
            Locus3::RPrime => TmLocus3::RPrime,
            Locus3::EdgePQ => TmLocus3::EdgePQ,
            Locus3::EdgePR => TmLocus3::EdgePR,
            Locus3::EdgeQR => TmLocus3::EdgeQR,
            Locus3::InteriorPQR => TmLocus3::InteriorPQR,
            Locus3::CornerAPQ => TmLocus3::CornerAPQ,
            Locus3::CornerCPR => TmLocus3::CornerCPR,
            Locus3::CornerBQR => TmLocus3::CornerBQR,
        }
    }
}

impl From<TmChart> for Chart {
    fn from(c: TmChart) -> Self {
        match c {
            TmChart::SideRatio => Chart::SideRatio,
            TmChart::AngleSigma => Chart::AngleSigma,
        }
    }
}

/// Runs `body`, converting a panic into `Internal`.
fn guard(body: impl FnOnce() -> Result<(), TmStatus>) -> TmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TmStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => TmStatus::Internal,
    }
}

unsafe fn tolerance(tol: *const TmTolerance) -> Result<Tolerance, TmStatus> {
    match tol.as_ref() {
        None => Ok(Tolerance::default()),
        Some(t) => Ok(Tolerance::new(t.eps_class, t.eps_geom)?),
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), TmStatus> {
    let slot = out.as_mut().ok_or(TmStatus::NullPointer)?;
    *slot = value;
    Ok(())
}

fn string_out(out: *mut *mut c_char, s: String) -> Result<(), TmStatus> {
    if out.is_null() {
        return Err(TmStatus::NullPointer);
    }
    let c = CString::new(s).map_err(|_| TmStatus::Internal)?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

fn canonical_sides(
    a: f64,
    b: f64,
    c: f64,
    tol: &Tolerance,
) -> Result<model::CanonicalSides, TmStatus> {
    Ok(model::canonicalize(&model::validate_triangle(
        a, b, c, tol,
    )?))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub extern "C" fn tm_tolerance_default() -> TmTolerance {
    let t = Tolerance::default();
    TmTolerance {
        eps_class: t.eps_class,
        eps_geom: t.eps_geom,
    }
}

/// Classifies a triangle given by three side lengths in any order.
#[no_mangle]
pub unsafe extern "C" fn tm_classify_sides(
    a: f64,
    b: f64,
    c: f64,
    tol: *const TmTolerance,
    out: *mut TmShapeClass,
) -> TmStatus {
    guard(|| {
        let tol = tolerance(tol)?;
        let s = canonical_sides(a, b, c, &tol)?;
        write(out, model::classify_sides(&s, &tol).into())
    })
}

/// Classifies a triangle given by three angles in radians summing to pi.
#[no_mangle]
pub unsafe extern "C" fn tm_classify_angles(
    x: f64,
    y: f64,
    z: f64,
    tol: *const TmTolerance,
    out: *mut TmShapeClass,
) -> TmStatus {
    guard(|| {
        let tol = tolerance(tol)?;
        let t = Angles::new(x, y, z)?;
        write(out, model::classify_angles(&t, &tol).into())
    })
}

/// Side-ratio chart image `(a/c, b/c)` of a triangle given by its sides.
#[no_mangle]
pub unsafe extern "C" fn tm_chart2_of_sides(
    a: f64,
    b: f64,
    c: f64,
    tol: *const TmTolerance,
    out: *mut TmChart2,
) -> TmStatus {
    guard(|| {
        let tol = tolerance(tol)?;
        let p = sideratio::to_chart2(&canonical_sides(a, b, c, &tol)?);
        let k = sideratio::classify_chart2(p, &tol)?;
        write(
            out,
            TmChart2 {
                x: p.x,
                y: p.y,
                locus: k.locus.into(),
                shape: k.class.into(),
            },
        )
    })
}

fn chart3(t: &Angles, tol: &Tolerance) -> Result<TmChart3, TmStatus> {
    let p = sigma::psi(t);
    let k = sigma::classify_chart3(p, tol)?;
    Ok(TmChart3 {
        x: p.x,
        y: p.y,
        z: p.z,
        locus: k.locus.into(),
        shape: k.class.into(),
    })
}

/// Angle-plane image (ascending angles) of a triangle given by its sides.
#[no_mangle]
pub unsafe extern "C" fn tm_chart3_of_sides(
    a: f64,
    b: f64,
    c: f64,
    tol: *const TmTolerance,
    out: *mut TmChart3,
) -> TmStatus {
    guard(|| {
        let tol = tolerance(tol)?;
        let t = model::angles_of_sides(&canonical_sides(a, b, c, &tol)?);
        write(out, chart3(&t, &tol)?)
    })
}

/// Angle-plane image (ascending angles) of a triangle given by its angles.
#[no_mangle]
pub unsafe extern "C" fn tm_chart3_of_angles(
    x: f64,
    y: f64,
    z: f64,
    tol: *const TmTolerance,
    out: *mut TmChart3,
) -> TmStatus {
    guard(|| {
        let tol = tolerance(tol)?;
        write(out, chart3(&Angles::new(x, y, z)?, &tol)?)
    })
}

/// Exact area of a class region of the side-ratio chart.
#[no_mangle]
pub extern "C" fn tm_region_area2(region: TmRegion) -> f64 {
    sideratio::region_area2(match region {
        TmRegion::Total => RegionKind::Total,
        TmRegion::Acute => RegionKind::Acute,
        TmRegion::Obtuse => RegionKind::Obtuse,
        TmRegion::Right => RegionKind::Right,
    })
}

/// Exact proportion of a class on the angle plane.
#[no_mangle]
pub extern "C" fn tm_region_proportion3(kind: TmAngleKind) -> f64 {
    sigma::region_proportion3(kind.into())
}

/// Point at parameter `t` in (0, 1) on the median from the acute-isosceles
/// end to the apex vertex.
#[no_mangle]
pub unsafe extern "C" fn tm_median_point(t: f64, out: *mut TmPoint3) -> TmStatus {
    guard(|| {
        let p = sigma::median_point(t)?;
        write(
            out,
            TmPoint3 {
                x: p.x,
                y: p.y,
                z: p.z,
            },
        )
    })
}

/// Classification document as canonical JSON, identical to the CLI's
/// `classify` output. Free the string with [`tm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tm_classify_json(
    input: TmInput,
    v0: f64,
    v1: f64,
    v2: f64,
    tol: *const TmTolerance,
    out: *mut *mut c_char,
) -> TmStatus {
    guard(|| {
        let tol = tolerance(tol)?;
        let kind = match input {
            TmInput::Sides => InputKind::Sides,
            TmInput::AnglesRadians => InputKind::AnglesRadians,
            TmInput::AnglesDegrees => InputKind::AnglesDegrees,
        };
        let doc = report::classify_document(kind, [v0, v1, v2], &tol)?;
        string_out(out, report::render(doc))
    })
}

/// Monte Carlo estimate of the class proportions. `n` must be positive.
/// On success `*out` owns a report to be released with [`tm_report_free`].
#[no_mangle]
pub unsafe extern "C" fn tm_estimate(
    chart: TmChart,
    n: u64,
    seed: u64,
    tol: *const TmTolerance,
    out: *mut *mut TmReport,
) -> TmStatus {
    guard(|| {
        if out.is_null() {
            return Err(TmStatus::NullPointer);
        }
        if n == 0 {
            return Err(TmStatus::InvalidArgument);
        }
        let plan = SamplePlan {
            chart: chart.into(),
            n,
            seed,
            tol: tolerance(tol)?,
        };
        let report = Box::new(TmReport {
            inner: estimate(&plan),
        });
        *out = Box::into_raw(report);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn tm_report_counts(
    report: *const TmReport,
    out: *mut TmClassCounts,
) -> TmStatus {
    guard(|| {
        let r = &report.as_ref().ok_or(TmStatus::NullPointer)?.inner;
        write(
            out,
            TmClassCounts {
                acute: r.counts.acute,
                right: r.counts.right,
                obtuse: r.counts.obtuse,
            },
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn tm_report_fractions(
    report: *const TmReport,
    out: *mut TmClassFractions,
) -> TmStatus {
    guard(|| {
        let r = &report.as_ref().ok_or(TmStatus::NullPointer)?.inner;
        write(
            out,
            TmClassFractions {
                acute: r.fractions.acute,
                right: r.fractions.right,
                obtuse: r.fractions.obtuse,
            },
        )
    })
}

/// Whether every class fell inside its acceptance band. False for null.
#[no_mangle]
pub unsafe extern "C" fn tm_report_all_pass(report: *const TmReport) -> bool {
    report.as_ref().is_some_and(|r| r.inner.all_pass)
}

/// The report as canonical JSON, identical to the CLI's `sample` output.
#[no_mangle]
pub unsafe extern "C" fn tm_report_to_json(
    report: *const TmReport,
    out: *mut *mut c_char,
) -> TmStatus {
    guard(|| {
        let r = &report.as_ref().ok_or(TmStatus::NullPointer)?.inner;
        string_out(out, report::render(report::report_document(r)))
    })
}

/// Releases a report. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tm_report_free(report: *mut TmReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Renders a chart to an SVG string. Free it with [`tm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tm_render_svg(
    chart: TmChart,
    width: u32,
    height: u32,
    shade_regions: bool,
    projection: TmProjection,
    out: *mut *mut c_char,
) -> TmStatus {
    guard(|| {
        let mut spec = RenderSpec::new(chart.into());
        spec.width = width;
        spec.height = height;
        spec.shade_regions = shade_regions;
        spec.projection = match projection {
            TmProjection::Barycentric => Projection::Barycentric2D,
            TmProjection::Oblique => Projection::Oblique3D,
        };
        string_out(out, svg::render_svg(&spec)?)
    })
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
