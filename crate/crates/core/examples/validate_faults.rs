//! Breaks one pentagon of a valid tiling in three ways and prints what the
//! validator reports.

use pentatile::geom::Point;
use pentatile::rhombic::{multigrid_patch, Family};
use pentatile::subdivide::DivisionSpec;
use pentatile::validate::monte_carlo_coverage;
use pentatile::{convert_patch, full_check, PlacedPentagon};

fn mirror(p: &mut PlacedPentagon) {
    let (a, c) = (p.vertices[0], p.vertices[2]);
    let dir = (c - a) * (1.0 / a.dist(c));
    for v in &mut p.vertices {
        let w = *v - a;
        *v = a + dir * (2.0 * w.dot(dir)) - w;
    }
}

fn shift(p: &mut PlacedPentagon) {
    for v in &mut p.vertices {
        *v += Point::new(0.1, 0.0);
    }
}

fn bend(p: &mut PlacedPentagon) {
    // pull B toward AC along its bisector: B grows, the outline no longer fits
    let m = (p.vertices[0] + p.vertices[2]) * 0.5;
    p.vertices[1] = m.lerp(p.vertices[1], 0.97);
}

fn main() {
    let patch = multigrid_patch(Family::Fivefold, 2.0, 0.29).unwrap();
    let tiling = convert_patch(&patch, 68.0, DivisionSpec::DIRECT).unwrap();
    let tol = patch.tolerance();
    println!("clean: valid = {}", full_check(&tiling, &tol).all_ok());
    println!("clean: Monte Carlo coverage = {}", monte_carlo_coverage(&tiling, 10_000, 1));

    type Fault = fn(&mut PlacedPentagon);
    let faults: [(&str, Fault); 3] =
        [("reflected", mirror), ("translated", shift), ("re-angled", bend)];
    for (name, fault) in faults {
        let mut t = tiling.clone();
        fault(&mut t.pentagons[0]);
        let report = full_check(&t, &tol);
        println!("{name}: valid = {}, {} diagnostics", report.all_ok(), report.diagnostics.len());
        for d in report.diagnostics.iter().take(3) {
            println!("    {:?} {} ({:.3e})", d.check, d.subject, d.magnitude);
        }
    }
}
