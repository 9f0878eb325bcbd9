//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use trimoduli::measure::{chunk_rng, draw_side_ratio, estimate, Chart, SamplePlan};
use trimoduli::model::{
    angles_of_sides, canonicalize, classify_angles, classify_sides, sides_of_angles, AngleKind,
    Angles, CanonicalSides, LegRelation, ShapeClass, SideKind, Sides, Tolerance,
};
use trimoduli::sideratio::{
    canonical_triangle_of_chart2, classify_chart2, region_area2, to_chart2, ChartPoint2, Landmark2,
    Locus2, RegionKind,
};
use trimoduli::sigma::{
    classify_chart3, median_point, medians_concurrency_check, psi, region_proportion3, Landmark3,
    Locus3,
};
use trimoduli::svg::side_ratio_frame;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(
        elapsed < limit,
        format!("runtime {elapsed:?} exceeds {limit:?}"),
    )
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let p = [AngleKind::Obtuse, AngleKind::Acute, AngleKind::Right].map(region_proportion3);
    let elapsed = start.elapsed();
    for (got, want) in p.iter().zip([0.75, 0.25, 0.0]) {
        check(
            (got - want).abs() <= 1e-15,
            format!("proportion {got} != {want}"),
        )?;
    }
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!(
        "obtuse {} acute {} right {} in {elapsed:?}",
        p[0], p[1], p[2]
    ))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let obtuse = region_area2(RegionKind::Obtuse);
    let acute = region_area2(RegionKind::Acute);
    let total = region_area2(RegionKind::Total);
    let elapsed = start.elapsed();
    check(
        (obtuse - (PI - 2.0) / 8.0).abs() <= 1e-15,
        format!("obtuse area {obtuse}"),
    )?;
    check(
        (acute - (4.0 - PI) / 8.0).abs() <= 1e-15,
        format!("acute area {acute}"),
    )?;
    check(
        (acute + obtuse - total).abs() <= 1e-15,
        "acute + obtuse != total",
    )?;
    check((total - 0.25).abs() <= 1e-15, format!("total area {total}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!(
        "obtuse {obtuse} acute {acute} total {total} in {elapsed:?}"
    ))
}

fn criterion_3() -> Verdict {
    let n = 1_000_000;
    let mut notes = Vec::new();
    let start = Instant::now();
    for (chart, obtuse, acute, band) in [
        (Chart::AngleSigma, 0.75, 0.25, 0.0013),
        (Chart::SideRatio, (PI - 2.0) / 2.0, (4.0 - PI) / 2.0, 0.0015),
    ] {
        let r = estimate(&SamplePlan {
            chart,
            n,
            seed: 1,
            tol: Tolerance::default(),
        });
        let name = chart.name();
        check(r.all_pass, format!("{name}: report flags a failed class"))?;
        check(
            (r.fractions.obtuse - obtuse).abs() <= band,
            format!("{name}: obtuse {}", r.fractions.obtuse),
        )?;
        check(
            (r.fractions.acute - acute).abs() <= band,
            format!("{name}: acute {}", r.fractions.acute),
        )?;
        check(
            r.counts.right <= 100,
            format!("{name}: right count {}", r.counts.right),
        )?;
        notes.push(format!(
            "{name} obtuse {:.5} acute {:.5} right {}",
            r.fractions.obtuse, r.fractions.acute, r.counts.right
        ));
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{} in {elapsed:?}", notes.join("; ")))
}

/// Whether the triangle sits further than `margin` (relative) from every
/// decision boundary of both the side and the angle classifiers.
fn clear_of_boundaries(c: &CanonicalSides, t: &Angles, margin: f64) -> bool {
    let [a, b, _] = c.as_array();
    let [lo, mid, hi] = t.sorted().as_array();
    (a * a + b * b - 1.0).abs() > margin
        && (hi - FRAC_PI_2).abs() > margin * FRAC_PI_2
        && (b - a) > margin
        && (1.0 - b) > margin
        && (mid - lo) / hi > margin
        && (hi - mid) / hi > margin
}

fn criterion_4() -> Verdict {
    let tol = Tolerance::default();
    let margin = 10.0 * tol.eps_class;
    let mut rng = chunk_rng(4, 0);
    let start = Instant::now();
    let (mut drawn, mut compared, mut excluded) = (0u32, 0u32, 0u32);
    while drawn < 100_000 {
        let Ok(s) = Sides::new(rng.random(), rng.random(), rng.random()) else {
            continue;
        };
        drawn += 1;
        let c = canonicalize(&s);
        let t = angles_of_sides(&c);
        if !clear_of_boundaries(&c, &t, margin) {
            excluded += 1;
            continue;
        }
        let by_sides = classify_sides(&c, &tol);
        let by_angles = classify_angles(&t, &tol);
        let by_chart2 = classify_chart2(to_chart2(&c), &tol)
            .map_err(|e| format!("{s:?}: {e}"))?
            .class;
        let by_chart3 = classify_chart3(psi(&t), &tol)
            .map_err(|e| format!("{s:?}: {e}"))?
            .class;
        let agree = |x: ShapeClass| {
            x.angle_kind == by_sides.angle_kind && x.side_kind == by_sides.side_kind
        };
        check(
            agree(by_angles) && agree(by_chart2) && agree(by_chart3),
            format!("{s:?}: {by_sides:?} {by_angles:?} {by_chart2:?} {by_chart3:?}"),
        )?;
        compared += 1;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "{compared}/{drawn} agree ({excluded} near a boundary) in {elapsed:?}"
    ))
}

fn criterion_5() -> Verdict {
    let tol = Tolerance::default();
    let class = |angle_kind, side_kind| ShapeClass {
        angle_kind,
        side_kind,
    };
    let equilateral = class(AngleKind::Acute, SideKind::Equilateral);
    let right_iso = class(
        AngleKind::Right,
        SideKind::Isosceles(LegRelation::LegsShorter),
    );

    let c = classify_chart2(Landmark2::C.coords(), &tol).map_err(|e| e.to_string())?;
    check(
        c.class == equilateral && c.locus == Locus2::PointC,
        format!("C: {c:?}"),
    )?;
    check(
        Landmark2::C.coords() == ChartPoint2::new(1.0, 1.0),
        "C is not (1,1)",
    )?;
    let d = classify_chart2(Landmark2::D.coords(), &tol).map_err(|e| e.to_string())?;
    check(
        d.class == right_iso && d.locus == Locus2::PointD,
        format!("D: {d:?}"),
    )?;
    check(
        Landmark2::D.coords() == ChartPoint2::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        "D is not (1/√2,1/√2)",
    )?;
    for l in [Landmark2::B, Landmark2::E] {
        check(
            classify_chart2(l.coords(), &tol).is_err(),
            format!("{} is not excluded", l.name()),
        )?;
    }

    let g = classify_chart3(Landmark3::Centroid.coords(), &tol).map_err(|e| e.to_string())?;
    check(
        g.class == equilateral && g.locus == Locus3::Centroid,
        format!("centroid: {g:?}"),
    )?;
    check(
        Landmark3::Centroid
            .coords()
            .max_abs_diff(&trimoduli::sigma::ChartPoint3::new(
                FRAC_PI_3, FRAC_PI_3, FRAC_PI_3,
            ))
            <= 1e-15,
        "centroid is not (π/3,π/3,π/3)",
    )?;
    for (l, locus) in [
        (Landmark3::PPrime, Locus3::PPrime),
        (Landmark3::QPrime, Locus3::QPrime),
        (Landmark3::RPrime, Locus3::RPrime),
    ] {
        let k = classify_chart3(l.coords(), &tol).map_err(|e| e.to_string())?;
        check(
            k.class == right_iso && k.locus == locus,
            format!("{}: {k:?}", l.name()),
        )?;
        let mut v = l.coords().as_array();
        v.sort_by(f64::total_cmp);
        check(
            v == [FRAC_PI_4, FRAC_PI_4, FRAC_PI_2],
            format!("{} coordinates {v:?}", l.name()),
        )?;
    }
    for l in [Landmark3::P, Landmark3::Q, Landmark3::R] {
        check(
            classify_chart3(l.coords(), &tol).is_err(),
            format!("{} is not excluded", l.name()),
        )?;
    }
    Ok("C, D, B, E, centroid, P′, Q′, R′ and P, Q, R behave as drawn".into())
}

fn criterion_6() -> Verdict {
    let tol = Tolerance::default();
    let ts = (1..1000).map(|i| i as f64 / 1000.0).chain([1.0 / 3.0]);
    let mut count = 0;
    for t in ts {
        let k = classify_chart3(median_point(t).map_err(|e| e.to_string())?, &tol)
            .map_err(|e| e.to_string())?;
        let side_ok = if t == 1.0 / 3.0 {
            k.class.side_kind == SideKind::Equilateral
        } else if t < 1.0 / 3.0 {
            k.class.side_kind == SideKind::Isosceles(LegRelation::LegsLonger)
        } else {
            k.class.side_kind == SideKind::Isosceles(LegRelation::LegsShorter)
        };
        let angle_ok = k.class.angle_kind
            == match t {
                t if t < 0.5 => AngleKind::Acute,
                t if t > 0.5 => AngleKind::Obtuse,
                _ => AngleKind::Right,
            };
        check(side_ok && angle_ok, format!("t = {t}: {:?}", k.class))?;
        count += 1;
    }
    Ok(format!(
        "{count} median points; equilateral at 1/3, right exactly at 1/2"
    ))
}

fn criterion_7() -> Verdict {
    let tol = Tolerance::default();
    let cases = 100_000;
    let mut rng = chunk_rng(7, 0);
    let start = Instant::now();
    let near = |p: [f64; 3], q: [f64; 3]| (0..3).all(|i| (p[i] - q[i]).abs() <= tol.eps_geom);
    let mut drawn = 0;
    while drawn < cases {
        let v: [f64; 3] = [rng.random(), rng.random(), rng.random()];
        let Ok(s) = Sides::new(v[0], v[1], v[2]) else {
            continue;
        };
        drawn += 1;
        let c = canonicalize(&s);
        let t = angles_of_sides(&c);
        check(
            (t.sum() - PI).abs() <= 1e-12,
            format!("angle sum {} for {s:?}", t.sum()),
        )?;

        let k = 10f64.powf(rng.random_range(-6.0..6.0));
        let scaled = canonicalize(&s.scaled(k).ok_or("scaling failed")?);
        check(
            near(scaled.as_array(), c.as_array()),
            format!("scale {k} moves {s:?}"),
        )?;
        check(
            classify_sides(&scaled, &tol) == classify_sides(&c, &tol),
            format!("scale {k} reclassifies {s:?}"),
        )?;

        for p in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let q = Sides::new(v[p[0]], v[p[1]], v[p[2]]).map_err(|e| e.to_string())?;
            check(
                canonicalize(&q) == c,
                format!("permutation {p:?} moves {s:?}"),
            )?;
        }

        let back = sides_of_angles(&t);
        check(
            near(back.as_array(), c.as_array()),
            format!("round trip {s:?} -> {back:?}"),
        )?;

        let x = draw_side_ratio(&mut rng, &tol);
        let lifted = canonical_triangle_of_chart2(x, &tol).map_err(|e| e.to_string())?;
        check(
            to_chart2(&lifted) == x,
            format!("right inverse fails at {x:?}"),
        )?;
    }
    let m = medians_concurrency_check();
    let g = Landmark3::Centroid.coords();
    for (name, p) in [("AR∩BP", m.ar_bp), ("BP∩CQ", m.bp_cq), ("CQ∩AR", m.cq_ar)] {
        check(
            p.max_abs_diff(&g) <= tol.eps_geom,
            format!("{name} misses the centroid by {}", p.max_abs_diff(&g)),
        )?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "{cases} cases, medians meet at the centroid, in {elapsed:?}"
    ))
}

fn run_bin(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_trimoduli"))
        .args(args)
        .env_remove("TRIMODULI_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    check(
        out.status.code() == Some(0),
        format!("{args:?} exited with {:?}", out.status.code()),
    )?;
    Ok(out.stdout)
}

fn criterion_8() -> Verdict {
    let sample = ["sample", "--chart", "sigma", "--n", "200000", "--seed", "8"];
    check(
        run_bin(&sample)? == run_bin(&sample)?,
        "sample output differs between runs",
    )?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let paths = [dir.path().join("one.svg"), dir.path().join("two.svg")];
    for p in &paths {
        let out = p.to_str().ok_or("non-UTF-8 path")?;
        run_bin(&[
            "plot",
            "--chart",
            "sideratio",
            "--shade",
            "--sides",
            "3",
            "4",
            "5",
            "--out",
            out,
        ])?;
    }
    let read = |p: &std::path::Path| std::fs::read(p).map_err(|e| e.to_string());
    let (first, second) = (read(&paths[0])?, read(&paths[1])?);
    check(first == second, "plot output differs between runs")?;

    let svg = String::from_utf8(first).map_err(|e| e.to_string())?;
    let px = side_ratio_frame(800, 800).area_scale();
    let mut notes = Vec::new();
    for (id, kind) in [
        ("region-obtuse", RegionKind::Obtuse),
        ("region-acute", RegionKind::Acute),
    ] {
        let poly = common::path_polygon(&svg, id).ok_or(format!("no {id} path"))?;
        let area = common::count(&common::rasterize(&poly, 800, 800)) as f64 / px;
        let exact = region_area2(kind);
        let rel = (area - exact).abs() / exact;
        check(rel <= 0.01, format!("{id}: raster {area} vs exact {exact}"))?;
        notes.push(format!("{id} off by {:.3}%", rel * 100.0));
    }
    Ok(format!(
        "byte-identical sample and plot; {}",
        notes.join(", ")
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exact angle-plane proportions", criterion_1),
        ("exact side-ratio areas", criterion_2),
        ("Monte Carlo reproduction", criterion_3),
        ("chart consistency", criterion_4),
        ("landmark fidelity", criterion_5),
        ("median locus", criterion_6),
        ("round-trip and invariance properties", criterion_7),
        ("deterministic artifacts", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
