//! Command-line surface: `classify`, `measure`, `sample` and `plot`.
//!
//! Exit codes: 0 success, 1 statistical check failed, 2 invalid input.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::measure::{estimate, Chart, SamplePlan};
use crate::model::{
    angles_of_sides, canonicalize, sides_of_angles, validate_triangle, Angles, Tolerance,
};
use crate::report::{
    self, classify_document, error_document, measure_document, report_document, InputKind,
};
use crate::sideratio::to_chart2;
use crate::sigma::psi;
use crate::svg::{write_svg, OverlayPoint, Projection, RenderError, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_STATISTICAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trimoduli",
    version,
    about = "Charts of triangle shapes: classify, measure, sample, plot"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartArg {
    Sideratio,
    Sigma,
}

impl From<ChartArg> for Chart {
    fn from(c: ChartArg) -> Chart {
        match c {
            ChartArg::Sideratio => Chart::SideRatio,
            ChartArg::Sigma => Chart::AngleSigma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProjectionArg {
    Barycentric,
    Oblique,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    #[arg(long, default_value_t = 1e-9)]
    pub eps_class: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub eps_geom: f64,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct TriangleArgs {
    /// Three side lengths.
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true)]
    pub sides: Option<Vec<f64>>,
    /// Three angles, radians unless --degrees is given.
    #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true)]
    pub angles: Option<Vec<f64>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a triangle and place it on both charts.
    Classify {
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Read --angles in degrees.
        #[arg(long)]
        degrees: bool,
        #[command(flatten)]
        tol: ToleranceArgs,
        /// JSON output (the only format).
        #[arg(long, default_value_t = true)]
        json: bool,
    },
    /// Print the exact class measures of a chart.
    Measure {
        #[arg(long, value_enum)]
        chart: ChartArg,
    },
    /// Monte Carlo estimate of the class proportions.
    Sample {
        #[arg(long, value_enum)]
        chart: ChartArg,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, env = "TRIMODULI_SEED", default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        tol: ToleranceArgs,
    },
    /// Write an SVG drawing of a chart.
    Plot {
        #[arg(long, value_enum)]
        chart: ChartArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 800)]
        height: u32,
        #[arg(long, value_enum, default_value_t = ProjectionArg::Barycentric)]
        projection: ProjectionArg,
        /// Fill the acute and obtuse regions.
        #[arg(long)]
        shade: bool,
        #[arg(long)]
        no_landmarks: bool,
        /// Triangle to mark on the chart.
        #[command(flatten)]
        triangle: TriangleArgs,
        /// Read --angles in degrees.
        #[arg(long)]
        degrees: bool,
        #[command(flatten)]
        tol: ToleranceArgs,
    },
}

/// What a command wants printed and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn invalid(kind: &str, message: impl std::fmt::Display) -> Outcome {
    Outcome {
        stdout: report::render(error_document(kind, &message.to_string())),
        code: EXIT_INVALID,
    }
}

fn tolerance(t: &ToleranceArgs) -> Result<Tolerance, Outcome> {
    Tolerance::new(t.eps_class, t.eps_geom).map_err(|e| invalid("InvalidTolerance", e))
}

fn triangle_input(
    t: &TriangleArgs,
    degrees: bool,
) -> Result<Option<(InputKind, [f64; 3])>, Outcome> {
    let pick = |v: &Vec<f64>| [v[0], v[1], v[2]];
    match (&t.sides, &t.angles) {
        (_, None) if degrees => Err(invalid(
            "InvalidArguments",
            "--degrees applies to --angles only",
        )),
        (Some(s), _) => Ok(Some((InputKind::Sides, pick(s)))),
        (_, Some(a)) if degrees => Ok(Some((InputKind::AnglesDegrees, pick(a)))),
        (_, Some(a)) => Ok(Some((InputKind::AnglesRadians, pick(a)))),
        _ => Ok(None),
    }
}

fn overlay_for(
    chart: Chart,
    kind: InputKind,
    v: [f64; 3],
    tol: &Tolerance,
) -> Result<OverlayPoint, Outcome> {
    let fail = |e: crate::error::TriangleError| invalid(e.kind(), e);
    let (canon, angles) = match kind {
        InputKind::Sides => {
            let c = canonicalize(&validate_triangle(v[0], v[1], v[2], tol).map_err(fail)?);
            (c, angles_of_sides(&c))
        }
        InputKind::AnglesRadians => {
            let t = Angles::new(v[0], v[1], v[2]).map_err(fail)?;
            (sides_of_angles(&t), t)
        }
        InputKind::AnglesDegrees => {
            let t = Angles::from_degrees(v[0], v[1], v[2]).map_err(fail)?;
            (sides_of_angles(&t), t)
        }
    };
    Ok(match chart {
        Chart::SideRatio => OverlayPoint::SideRatio(to_chart2(&canon)),
        Chart::AngleSigma => OverlayPoint::Sigma(psi(&angles)),
    })
}

/// Executes a parsed command without touching the process state.
pub fn run(cli: Cli) -> Outcome {
    match run_inner(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn run_inner(cli: Cli) -> Result<Outcome, Outcome> {
    match cli.command {
        Command::Classify {
            triangle,
            degrees,
            tol,
            json: _,
        } => {
            let tol = tolerance(&tol)?;
            let (kind, values) = triangle_input(&triangle, degrees)?
                .ok_or_else(|| invalid("MissingInput", "one of --sides or --angles is required"))?;
            let doc = classify_document(kind, values, &tol).map_err(|e| invalid(e.kind(), e))?;
            Ok(Outcome {
                stdout: report::render(doc),
                code: EXIT_OK,
            })
        }
        Command::Measure { chart } => Ok(Outcome {
            stdout: report::render(measure_document(chart.into())),
            code: EXIT_OK,
        }),
        Command::Sample {
            chart,
            n,
            seed,
            tol,
        } => {
            let tol = tolerance(&tol)?;
            let r = estimate(&SamplePlan {
                chart: chart.into(),
                n,
                seed,
                tol,
            });
            let code = if r.all_pass {
                EXIT_OK
            } else {
                EXIT_STATISTICAL
            };
            Ok(Outcome {
                stdout: report::render(report_document(&r)),
                code,
            })
        }
        Command::Plot {
            chart,
            out,
            width,
            height,
            projection,
            shade,
            no_landmarks,
            triangle,
            degrees,
            tol,
        } => {
            let tol = tolerance(&tol)?;
            let chart: Chart = chart.into();
            let mut spec = RenderSpec::new(chart);
            spec.width = width;
            spec.height = height;
            spec.shade_regions = shade;
            spec.show_landmarks = !no_landmarks;
            spec.projection = match projection {
                ProjectionArg::Barycentric => Projection::Barycentric2D,
                ProjectionArg::Oblique => Projection::Oblique3D,
            };
            if let Some((kind, values)) = triangle_input(&triangle, degrees)? {
                spec.overlay_points
                    .push(overlay_for(chart, kind, values, &tol)?);
            }
            write_svg(&spec, &out).map_err(|e| match e {
                RenderError::InvalidSpec(_) => invalid("InvalidSpec", &e),
                RenderError::Io(_) => invalid("IoError", &e),
            })?;
            let doc =
                serde_json::json!({ "written": out.display().to_string(), "chart": chart.name() });
            Ok(Outcome {
                stdout: report::render(doc),
                code: EXIT_OK,
            })
        }
    }
}
