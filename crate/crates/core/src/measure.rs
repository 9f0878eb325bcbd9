//! Seeded Monte Carlo checks of the exact class measures on both charts.
//!
//! # Reproducibility
//!
//! Samples are produced in chunks of [`CHUNK_SIZE`]. Chunk `i` draws from
//! ChaCha8 seeded with `seed_from_u64(seed)` on stream `i`, so every chunk
//! is a pure function of `(seed, i)`. Chunk results are combined in index
//! order, which makes reports bit-identical at any rayon thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::model::{AngleKind, Angles, Tolerance};
use crate::sideratio::{classify_chart2, in_region2, region_fraction2, ChartPoint2, RegionKind};
use crate::sigma::{classify_chart3, on_sigma, region_proportion3, sigma_total_area, ChartPoint3};

pub const CHUNK_SIZE: usize = 1 << 16;

/// Right-class count ceiling as a fraction of `n`.
pub const RIGHT_CEILING_FRACTION: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    #[serde(rename = "sideratio")]
    SideRatio,
    #[serde(rename = "sigma")]
    AngleSigma,
}

impl Chart {
    pub fn name(self) -> &'static str {
        match self {
            Chart::SideRatio => "sideratio",
            Chart::AngleSigma => "sigma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePlan {
    pub chart: Chart,
    pub n: u64,
    pub seed: u64,
    pub tol: Tolerance,
}

/// Generator for chunk `chunk` of a run seeded with `seed`.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn chunk_lengths(n: u64) -> Vec<(u64, usize)> {
    let chunk = CHUNK_SIZE as u64;
    (0..n.div_ceil(chunk))
        .map(|i| (i, (n - i * chunk).min(chunk) as usize))
        .collect()
}

/// Runs `job` once per chunk in parallel and returns results in chunk order.
fn per_chunk<T, F>(seed: u64, n: u64, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, usize) -> T + Sync,
{
    chunk_lengths(n)
        .into_par_iter()
        .map(|(i, len)| job(&mut chunk_rng(seed, i), len))
        .collect()
}

/// Uniform point on the open triangle ABC from sorted uniform spacings.
pub fn draw_sigma<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> Angles {
    loop {
        let u: f64 = rng.random();
        let v: f64 = rng.random();
        let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
        let t = [
            lo * std::f64::consts::PI,
            (hi - lo) * std::f64::consts::PI,
            (1.0 - hi) * std::f64::consts::PI,
        ];
        if t.iter().all(|c| *c > tol.eps_geom) {
            return Angles::renormalized(t);
        }
    }
}

/// Uniform point of the side-ratio region by rejection from the unit square.
pub fn draw_side_ratio<R: Rng + ?Sized>(rng: &mut R, tol: &Tolerance) -> ChartPoint2 {
    loop {
        let p = ChartPoint2::new(rng.random(), rng.random());
        if in_region2(p, tol) {
            return p;
        }
    }
}

pub fn sample_sigma(seed: u64, n: u64, tol: &Tolerance) -> Vec<Angles> {
    per_chunk(seed, n, |rng, len| {
        (0..len).map(|_| draw_sigma(rng, tol)).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn sample_side_ratio(seed: u64, n: u64, tol: &Tolerance) -> Vec<ChartPoint2> {
    per_chunk(seed, n, |rng, len| {
        (0..len)
            .map(|_| draw_side_ratio(rng, tol))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct ClassTriple<T> {
    pub acute: T,
    pub right: T,
    pub obtuse: T,
}

impl<T: Copy> ClassTriple<T> {
    pub fn get(&self, kind: AngleKind) -> T {
        match kind {
            AngleKind::Acute => self.acute,
            AngleKind::Right => self.right,
            AngleKind::Obtuse => self.obtuse,
        }
    }

    fn from_fn(f: impl Fn(AngleKind) -> T) -> Self {
        ClassTriple {
            acute: f(AngleKind::Acute),
            right: f(AngleKind::Right),
            obtuse: f(AngleKind::Obtuse),
        }
    }
}

impl ClassTriple<u64> {
    fn bump(&mut self, kind: AngleKind) {
        match kind {
            AngleKind::Acute => self.acute += 1,
            AngleKind::Right => self.right += 1,
            AngleKind::Obtuse => self.obtuse += 1,
        }
    }

    fn add(self, o: Self) -> Self {
        ClassTriple {
            acute: self.acute + o.acute,
            right: self.right + o.right,
            obtuse: self.obtuse + o.obtuse,
        }
    }

    pub fn total(&self) -> u64 {
        self.acute + self.right + self.obtuse
    }
}

/// Monte Carlo tallies against the exact class fractions of one chart.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProportionReport {
    pub chart: Chart,
    pub n: u64,
    pub seed: u64,
    pub eps_class: f64,
    pub eps_geom: f64,
    pub counts: ClassTriple<u64>,
    pub fractions: ClassTriple<f64>,
    pub exact: ClassTriple<f64>,
    /// Three binomial standard deviations; zero for the right class.
    pub half_widths: ClassTriple<f64>,
    pub right_count_ceiling: u64,
    pub pass: ClassTriple<bool>,
    pub all_pass: bool,
}

/// Exact class fraction on a chart.
pub fn exact_fraction(chart: Chart, kind: AngleKind) -> f64 {
    match chart {
        Chart::AngleSigma => region_proportion3(kind),
        Chart::SideRatio => region_fraction2(match kind {
            AngleKind::Acute => RegionKind::Acute,
            AngleKind::Right => RegionKind::Right,
            AngleKind::Obtuse => RegionKind::Obtuse,
        }),
    }
}

pub fn binomial_half_width(p: f64, n: u64) -> f64 {
    3.0 * (p * (1.0 - p) / n as f64).sqrt()
}

fn tally_chunk(
    chart: Chart,
    rng: &mut ChaCha8Rng,
    len: usize,
    tol: &Tolerance,
) -> ClassTriple<u64> {
    let mut counts = ClassTriple::default();
    for _ in 0..len {
        let kind = match chart {
            Chart::AngleSigma => {
                let t = draw_sigma(rng, tol);
                let p = ChartPoint3::from_array(t.as_array());
                classify_chart3(p, tol)
                    .expect("sampler stays on the plane")
                    .class
                    .angle_kind
            }
            Chart::SideRatio => {
                let p = draw_side_ratio(rng, tol);
                classify_chart2(p, tol)
                    .expect("sampler stays in the region")
                    .class
                    .angle_kind
            }
        };
        counts.bump(kind);
    }
    counts
}

/// Samples `plan.n` points, classifies them and compares with the exact fractions.
///
/// `n` must be at least 1.
pub fn estimate(plan: &SamplePlan) -> ProportionReport {
    assert!(plan.n >= 1, "sample plan needs n >= 1");
    let tol = plan.tol;
    let counts = per_chunk(plan.seed, plan.n, |rng, len| {
        tally_chunk(plan.chart, rng, len, &tol)
    })
    .into_iter()
    .fold(ClassTriple::default(), ClassTriple::add);
    let n = plan.n;
    let fractions = ClassTriple::from_fn(|k| counts.get(k) as f64 / n as f64);
    let exact = ClassTriple::from_fn(|k| exact_fraction(plan.chart, k));
    let half_widths = ClassTriple::from_fn(|k| match k {
        AngleKind::Right => 0.0,
        _ => binomial_half_width(exact.get(k), n),
    });
    let right_count_ceiling = (n as f64 * RIGHT_CEILING_FRACTION).floor() as u64;
    let pass = ClassTriple::from_fn(|k| match k {
        AngleKind::Right => counts.right <= right_count_ceiling,
        _ => (fractions.get(k) - exact.get(k)).abs() <= half_widths.get(k),
    });
    ProportionReport {
        chart: plan.chart,
        n,
        seed: plan.seed,
        eps_class: tol.eps_class,
        eps_geom: tol.eps_geom,
        counts,
        fractions,
        exact,
        half_widths,
        right_count_ceiling,
        pass,
        all_pass: pass.acute && pass.right && pass.obtuse,
    }
}

/// Area of the box the hit-or-miss estimator samples from.
pub fn bounding_area(chart: Chart) -> f64 {
    match chart {
        Chart::SideRatio => 1.0,
        // parallelogram spanned by B - A and C - A
        Chart::AngleSigma => 2.0 * sigma_total_area(),
    }
}

fn region_matches(kind: RegionKind, angle: AngleKind) -> bool {
    match kind {
        RegionKind::Total => true,
        RegionKind::Acute => angle == AngleKind::Acute,
        RegionKind::Obtuse => angle == AngleKind::Obtuse,
        RegionKind::Right => angle == AngleKind::Right,
    }
}

/// Hit-or-miss estimate of a class region's absolute area.
///
/// Side ratio: uniform points of the unit square. Angle plane: uniform
/// points `A + s (B - A) + t (C - A)` with `s, t` in `[0, 1)`.
pub fn area_mc(chart: Chart, kind: RegionKind, seed: u64, n: u64, tol: &Tolerance) -> f64 {
    assert!(n >= 1, "area estimate needs n >= 1");
    let hits: u64 = per_chunk(seed, n, |rng, len| {
        let mut hits = 0u64;
        for _ in 0..len {
            let s: f64 = rng.random();
            let t: f64 = rng.random();
            let class = match chart {
                Chart::SideRatio => classify_chart2(ChartPoint2::new(s, t), tol)
                    .ok()
                    .map(|c| c.class),
                Chart::AngleSigma => {
                    let pi = std::f64::consts::PI;
                    let p = ChartPoint3::new(s * pi, t * pi, (1.0 - s - t) * pi);
                    if on_sigma(p, tol) {
                        classify_chart3(p, tol).ok().map(|c| c.class)
                    } else {
                        None
                    }
                }
            };
            if class.is_some_and(|c| region_matches(kind, c.angle_kind)) {
                hits += 1;
            }
        }
        hits
    })
    .into_iter()
    .sum();
    hits as f64 / n as f64 * bounding_area(chart)
}
