//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use pentatile::cli;
use pentatile::convert::{convert_patch, place_all, plan, PentagonalTiling};
use pentatile::geom::Point;
use pentatile::pentagon::{angles_from_n, build_shape, classify, equilateral_theta, ShapeClass};
use pentatile::rhombic::Family;
use pentatile::subdivide::{Axis, Chirality, DivisionSpec, Side, SideAssignment};
use pentatile::validate::{full_check, Check};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn angle_tables() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for &(theta, n, want) in TABLES {
        let got = angles_from_n(n, theta).unwrap().to_array();
        for k in 0..5 {
            let err = (got[k] - want[k]).abs();
            worst = worst.max(err);
            if err > 0.005 {
                bad.push(format!("n={n} theta={theta} angle {k}: {:.4} vs {}", got[k], want[k]));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} rows, {} values, max deviation {worst:.4} (tol 0.005){}",
            TABLES.len(),
            5 * TABLES.len(),
            if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }
        ),
    )
}

fn equilateral() -> Outcome {
    let want = [(4, 41.41), (5, 37.95), (6, 30.0), (7, 16.41)];
    let mut ok = equilateral_theta(8).is_none();
    let mut parts = Vec::new();
    for (n, w) in want {
        let got = equilateral_theta(n);
        ok &= got.is_some_and(|g| (g - w).abs() <= 0.005);
        parts.push(format!("n={n}: {}", got.map_or("none".into(), |g| format!("{g:.3}"))));
    }
    parts.push(format!("n=8: {:?}", equilateral_theta(8)));
    outcome(ok, parts.join(", "))
}

use ShapeClass::*;

/// Claims made by the table headings, as `(n, lo, hi, class)`; a point
/// claim has `lo == hi`, otherwise the open interval is meant.
const HEADING_CLAIMS: &[(u32, f64, f64, ShapeClass)] = &[
    (5, 0.0, 18.0, ConcaveAtE),
    (10, 0.0, 18.0, ConcaveAtE),
    (5, 18.0, 18.0, Trapezoid),
    (10, 18.0, 18.0, ConcaveAtE),
    (5, 18.0, 54.0, ConvexPentagon),
    (10, 18.0, 54.0, ConcaveAtE),
    (5, 54.0, 54.0, ConvexPentagon),
    (10, 54.0, 54.0, Trapezoid),
    (5, 54.0, 90.0, ConvexPentagon),
    (10, 54.0, 90.0, ConvexPentagon),
    (5, 90.0, 90.0, Parallelogram),
    (10, 90.0, 90.0, Parallelogram),
    (5, 90.0, 180.0, ConcaveAtB),
    (10, 90.0, 180.0, ConcaveAtB),
    (4, 0.0, 45.0, ConvexPentagon),
    (8, 0.0, 45.0, ConcaveAtE),
    (4, 45.0, 45.0, ConvexPentagon),
    (8, 45.0, 45.0, Trapezoid),
    (4, 45.0, 90.0, ConvexPentagon),
    (8, 45.0, 90.0, ConvexPentagon),
    (4, 90.0, 90.0, Parallelogram),
    (8, 90.0, 90.0, Parallelogram),
    (4, 90.0, 180.0, ConcaveAtB),
    (8, 90.0, 180.0, ConcaveAtB),
    (6, 0.0, 30.0, ConcaveAtE),
    (12, 0.0, 30.0, ConcaveAtE),
    (6, 30.0, 30.0, Trapezoid),
    (12, 30.0, 30.0, ConcaveAtE),
    (6, 30.0, 60.0, ConvexPentagon),
    (12, 30.0, 60.0, ConcaveAtE),
    (12, 60.0, 60.0, Trapezoid),
    (6, 60.0, 90.0, ConvexPentagon),
    (12, 60.0, 90.0, ConvexPentagon),
    (6, 90.0, 90.0, Parallelogram),
    (12, 90.0, 90.0, Parallelogram),
    (6, 90.0, 180.0, ConcaveAtB),
    (12, 90.0, 180.0, ConcaveAtB),
    (8, 26.0, 26.0, ConcaveAtE),
];

/// The stated rule for the whole family.
fn rule(n: u32, theta: f64) -> ShapeClass {
    if theta == 90.0 {
        return Parallelogram;
    }
    if theta > 90.0 {
        return ConcaveAtB;
    }
    if n == 4 {
        return ConvexPentagon;
    }
    let t = 90.0 - 360.0 / n as f64;
    if theta == t {
        Trapezoid
    } else if theta < t {
        ConcaveAtE
    } else {
        ConvexPentagon
    }
}

/// The class read off the coordinates: a reflex vertex, a straight one, or none.
fn measured_class(n: u32, theta: f64) -> Option<ShapeClass> {
    let s = build_shape(n, theta).ok()?;
    let m = s.measured_angles();
    let near = |k: usize, v: f64| (m[k] - v).abs() <= 1e-6;
    Some(if near(1, 180.0) {
        Parallelogram
    } else if m[1] > 180.0 {
        ConcaveAtB
    } else if near(4, 180.0) {
        Trapezoid
    } else if m[4] > 180.0 {
        ConcaveAtE
    } else {
        ConvexPentagon
    })
}

fn classification() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for &(n, lo, hi, want) in HEADING_CLAIMS {
        let thetas: Vec<f64> = if lo == hi {
            vec![lo]
        } else {
            let mut v: Vec<f64> = ((lo as i32 + 1)..(hi as i32)).map(f64::from).collect();
            v.push((lo + hi) / 2.0);
            v
        };
        for theta in thetas {
            checked += 1;
            let got = classify(n, theta).unwrap();
            if got != want {
                bad.push(format!("heading n={n} theta={theta}: {got:?} != {want:?}"));
            }
        }
    }
    for n in [4, 5, 6, 8, 10, 12] {
        for t in 1..180 {
            let theta = t as f64;
            checked += 1;
            let got = classify(n, theta).unwrap();
            if got != rule(n, theta) {
                bad.push(format!("rule n={n} theta={theta}: {got:?}"));
            }
            if measured_class(n, theta) != Some(got) {
                bad.push(format!("coordinates n={n} theta={theta}: {:?}", measured_class(n, theta)));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (n, theta) checks{}", tail(&bad)),
    )
}

fn tail(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; {} failures, first: {}", bad.len(), bad[..bad.len().min(3)].join("; "))
    }
}

fn closure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut built, mut skipped) = (0, 0);
    let (mut gap, mut ang, mut e_err): (f64, f64, f64) = (0.0, 0.0, 0.0);
    while built < 1000 {
        let n = rng.gen_range(3..=24);
        let theta = rng.gen_range(0.5..179.5);
        let Ok(s) = build_shape(n, theta) else {
            skipped += 1;
            continue;
        };
        built += 1;
        let v = s.vertices;
        for (i, j) in [(0, 1), (1, 2), (2, 3), (4, 0)] {
            gap = gap.max((v[i].dist(v[j]) - 1.0).abs());
        }
        let want = angles_from_n(n, theta).unwrap().to_array();
        for (m, w) in s.measured_angles().iter().zip(want) {
            ang = ang.max((m - w).abs());
        }
        e_err = e_err.max((v[3].dist(v[4]) - s.edge_e).abs());
    }
    outcome(
        gap <= 1e-9 && ang <= 1e-6 && e_err <= 1e-9 && skipped == 0,
        format!(
            "{built} shapes ({skipped} rejected): unit edges off by {gap:.1e} (tol 1e-9), angles by {ang:.1e} deg (tol 1e-6), |DE| vs e by {e_err:.1e} (tol 1e-9)"
        ),
    )
}

fn pair_area() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for &(theta, n, _) in TABLES {
        let s = build_shape(n, theta).unwrap();
        let b = s.angles.b.to_radians();
        let rhombus = (2.0 * (b / 2.0).sin()).powi(2) * (360.0 / n as f64).to_radians().sin();
        worst = worst.max(((2.0 * s.area() - rhombus) / rhombus).abs());
        count += 1;
    }
    outcome(
        worst <= 1e-9,
        format!("{count} configurations, max relative error {worst:.1e} (tol 1e-9)"),
    )
}

struct Run {
    family: Family,
    theta: f64,
    u: u32,
    tiles: usize,
    tiling: PentagonalTiling,
    ok: bool,
    failures: Vec<String>,
    elapsed: Duration,
}

fn conversion_runs() -> Vec<Run> {
    let mut jobs: Vec<(Family, f64, u32)> = Vec::new();
    for (family, theta) in configurations() {
        if theta == 90.0 {
            continue;
        }
        jobs.push((family, theta, 0));
        jobs.push((family, theta, 1));
    }
    for (family, theta) in [
        (Family::Fivefold, 68.0),
        (Family::Eightfold, 45.0),
        (Family::Eightfold, 61.0),
        (Family::Twelvefold, 30.0),
        (Family::Twelvefold, 72.0),
    ] {
        jobs.push((family, theta, 2));
    }
    jobs.push((Family::Fivefold, 68.0, 3));

    let mut patches = BTreeMap::new();
    jobs.into_iter()
        .map(|(family, theta, u)| {
            let patch = patches.entry(family).or_insert_with(|| standard_patch(family)).clone();
            let start = Instant::now();
            let tiling = convert_patch(&patch, theta, DivisionSpec::new(u)).unwrap();
            let report = full_check(&tiling, &patch.tolerance());
            let elapsed = start.elapsed();
            let failures = [Check::Overlap, Check::Coverage, Check::VertexSum, Check::EEdge, Check::Symmetry]
                .into_iter()
                .filter_map(|c| {
                    let k = report.failures(c).count();
                    (k > 0).then(|| format!("{c:?} x{k}"))
                })
                .collect();
            Run {
                family,
                theta,
                u,
                tiles: patch.tiles.len(),
                ok: report.all_ok(),
                tiling,
                failures,
                elapsed,
            }
        })
        .collect()
}

fn end_to_end(runs: &[Run]) -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = (Duration::ZERO, String::new());
    for r in runs {
        let label = format!("{} theta={} u={}", r.family, r.theta, r.u);
        if !r.ok {
            bad.push(format!("{label}: {}", r.failures.join(", ")));
        }
        if r.tiles < 50 {
            bad.push(format!("{label}: only {} rhombi", r.tiles));
        }
        if r.elapsed > Duration::from_secs(10) {
            bad.push(format!("{label}: {:.1}s", r.elapsed.as_secs_f64()));
        }
        if r.elapsed > slowest.0 {
            slowest = (r.elapsed, label);
        }
    }
    let largest = runs.iter().map(|r| r.tiling.pentagons.len()).max().unwrap_or(0);
    outcome(
        bad.is_empty(),
        format!(
            "{} conversions validated, up to {largest} pentagons, slowest {} in {:.2}s (limit 10s){}",
            runs.len(),
            slowest.1,
            slowest.0.as_secs_f64(),
            tail(&bad)
        ),
    )
}

fn bookkeeping(runs: &[Run]) -> Outcome {
    let mut bad = Vec::new();
    for r in runs {
        let per = if r.u == 0 { 2 } else { 8 * (r.u * r.u) as usize };
        if r.tiling.pentagons.len() != per * r.tiles {
            bad.push(format!(
                "{} theta={} u={}: {} != {per} x {}",
                r.family, r.theta, r.u, r.tiling.pentagons.len(), r.tiles
            ));
        }
    }
    let per_rhombus: Vec<usize> = (1..=3).map(|u| DivisionSpec::new(u).pentagons_per_rhombus()).collect();
    if per_rhombus != [8, 32, 72] {
        bad.push(format!("per-rhombus counts {per_rhombus:?}"));
    }
    outcome(
        bad.is_empty(),
        format!("{} tilings counted; per rhombus {per_rhombus:?} for u = 1, 2, 3{}", runs.len(), tail(&bad)),
    )
}

fn rpa_rpp() -> Outcome {
    let mut bad = Vec::new();
    let mut literal_overlaps = Vec::new();
    for family in Family::ALL {
        let patch = standard_patch(family);
        let theta = 68.0;
        for u in 1..=2 {
            let (refined, sides) = plan(&patch, theta, DivisionSpec::new(u)).unwrap();
            if sides.base_chirality.len() != patch.tiles.len()
                || sides.base_chirality.values().any(|&c| c != Chirality::Anterior)
            {
                bad.push(format!("{family} u={u}: base rhombi not all anterior"));
            }
            let patterns = sides.per_base_patterns(&refined);
            let first = patterns.values().next().unwrap();
            if patterns.values().any(|p| p != first) || patterns.len() != patch.tiles.len() {
                bad.push(format!("{family} u={u}: per-base patterns differ"));
            }
            if first.get(&(0, 0)).map(|s| s.chirality) != Some(Chirality::Anterior) {
                bad.push(format!("{family} u={u}: pattern not rooted in the anterior side"));
            }
            if u == 1 {
                // the sub-tile reading: every sub-rhombus anterior
                let literal = SideAssignment {
                    sides: sides
                        .sides
                        .keys()
                        .map(|&id| (id, Side::new(Chirality::Anterior, Axis::FirstPair)))
                        .collect(),
                    base_chirality: sides.base_chirality.clone(),
                };
                let pentagons = place_all(&refined, theta, &literal).unwrap();
                let tiling = PentagonalTiling {
                    pentagons,
                    theta,
                    division: DivisionSpec::new(u),
                    source_patch: patch.clone(),
                    families: patch.families().into_iter().collect(),
                };
                let report = full_check(&tiling, &patch.tolerance());
                literal_overlaps.push(report.failures(Check::Overlap).count());
            }
        }
        let direct = convert_patch(&patch, theta, DivisionSpec::DIRECT).unwrap();
        let (a, p) = (direct.count(Chirality::Anterior), direct.count(Chirality::Posterior));
        if a == 0 || p == 0 {
            bad.push(format!("{family} u=0: anterior {a}, posterior {p}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "every base rhombus anterior-rooted with one shared pattern, both chiralities at u=0; \
             an all-anterior sub-rhombus variant overlaps ({literal_overlaps:?} overlapping pairs){}",
            tail(&bad)
        ),
    )
}

type Fault<'a> = Box<dyn Fn(&mut pentatile::PlacedPentagon) + 'a>;

fn fault_injection() -> Outcome {
    let patch = standard_patch(Family::Fivefold);
    let tiling = convert_patch(&patch, 68.0, DivisionSpec::DIRECT).unwrap();
    let tol = patch.tolerance();
    let clean = full_check(&tiling, &tol);
    let victim = nearest_pentagon(&tiling.pentagons, Point::new(0.3, 0.2));
    let faults: [(&str, Fault); 3] = [
        ("reflected", Box::new(reflect_across_ac)),
        ("translated", Box::new(|p| translate(p, Point::new(0.1 * patch.side_len, 0.0)))),
        ("re-angled", Box::new(|p| reangle_b(p, 1.0))),
    ];
    let mut parts = vec![format!("clean tiling valid: {}", clean.all_ok())];
    let mut ok = clean.all_ok();
    for (name, fault) in faults {
        let mut t = tiling.clone();
        fault(&mut t.pentagons[victim]);
        let report = full_check(&t, &tol);
        let found = !report.all_ok() && !report.diagnostics.is_empty();
        ok &= found;
        let mut kinds: Vec<String> = report.diagnostics.iter().map(|d| format!("{:?}", d.check)).collect();
        kinds.dedup();
        parts.push(format!("{name}: {} diagnostics ({})", report.diagnostics.len(), kinds.join(",")));
    }
    outcome(ok, parts.join("; "))
}

fn run_cli(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    cli::run(std::iter::once("pentatile").chain(args.iter().copied()), &mut out, &mut err)
}

fn determinism() -> Outcome {
    let pipelines: [(&str, &str, &str); 3] = [
        ("fivefold", "35", "1"),
        ("eightfold", "45", "2"),
        ("twelvefold", "72", "0"),
    ];
    let mut bad = Vec::new();
    let mut bytes = 0;
    for (family, theta, u) in pipelines {
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let dir = tempfile::tempdir().unwrap();
            let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
            let (patch, json, svg) = (p("patch.json"), p("tiling.json"), p("tiling.svg"));
            let codes = [
                run_cli(&["generate", "--family", family, "-o", &patch]),
                run_cli(&["convert", &patch, "--theta", theta, "--u", u, "--json", &json, "--svg", &svg, "--overlay"]),
                run_cli(&["validate", &json]),
            ];
            if codes != [0, 0, 0] {
                bad.push(format!("{family}: exit codes {codes:?}"));
            }
            let read = |f: &str| std::fs::read(f).unwrap_or_default();
            outputs.push((read(&patch), read(&json), read(&svg)));
        }
        bytes += outputs[0].1.len() + outputs[0].2.len();
        if outputs[0] != outputs[1] || outputs[0].1.is_empty() || outputs[0].2.is_empty() {
            bad.push(format!("{family}: outputs differ between runs"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("3 generate/convert/validate pipelines run twice, {bytes} bytes compared{}", tail(&bad)),
    )
}

fn main() {
    let runs = conversion_runs();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("angle tables", angle_tables()),
        ("equilateral cases", equilateral()),
        ("classification boundaries", classification()),
        ("closure and consistency", closure()),
        ("pair-area identity", pair_area()),
        ("end-to-end conversions", end_to_end(&runs)),
        ("pentagon counts", bookkeeping(&runs)),
        ("anterior/posterior rhombi", rpa_rpp()),
        ("fault injection", fault_injection()),
        ("determinism", determinism()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in criteria.iter().enumerate() {
        println!(
            "criterion {}: {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
