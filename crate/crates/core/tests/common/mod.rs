#![allow(dead_code)]

use pentatile::convert::PlacedPentagon;
use pentatile::geom::Point;
use pentatile::rhombic::{multigrid_patch, Family, RhombicPatch};

/// Published angle tables: `(theta, n, [A, B, C, D, E])`, two decimals.
/// In the twelve-fold tables the third row's order column is printed as 6,
/// but its angles (A = 30, C = 150) are those of n = 12.
pub const TABLES: &[(f64, u32, [f64; 5])] = &[
    (9.0, 5, [72.0, 99.0, 108.0, 57.92, 203.08]),
    (9.0, 10, [36.0, 99.0, 144.0, 22.28, 238.72]),
    (18.0, 5, [72.0, 108.0, 108.0, 72.0, 180.0]),
    (18.0, 10, [36.0, 108.0, 144.0, 26.27, 225.73]),
    (35.0, 5, [72.0, 125.0, 108.0, 81.83, 153.17]),
    (35.0, 10, [36.0, 125.0, 144.0, 32.25, 202.75]),
    (54.0, 5, [72.0, 144.0, 108.0, 81.73, 134.27]),
    (54.0, 10, [36.0, 144.0, 144.0, 36.0, 180.0]),
    (68.0, 5, [72.0, 158.0, 108.0, 78.79, 123.21]),
    (68.0, 10, [36.0, 158.0, 144.0, 36.93, 165.07]),
    (90.0, 5, [72.0, 180.0, 108.0, 72.0, 108.0]),
    (90.0, 10, [36.0, 180.0, 144.0, 36.0, 144.0]),
    (110.0, 5, [72.0, 200.0, 108.0, 64.67, 95.33]),
    (110.0, 10, [36.0, 200.0, 144.0, 33.36, 126.64]),
    (26.0, 4, [90.0, 116.0, 90.0, 122.0, 122.0]),
    (26.0, 8, [45.0, 116.0, 135.0, 38.63, 205.37]),
    (45.0, 4, [90.0, 135.0, 90.0, 112.5, 112.5]),
    (45.0, 8, [45.0, 135.0, 135.0, 45.0, 180.0]),
    (61.0, 4, [90.0, 151.0, 90.0, 104.5, 104.5]),
    (61.0, 8, [45.0, 151.0, 135.0, 46.89, 162.11]),
    (90.0, 4, [90.0, 180.0, 90.0, 90.0, 90.0]),
    (90.0, 8, [45.0, 180.0, 135.0, 45.0, 135.0]),
    (134.0, 4, [90.0, 224.0, 90.0, 68.0, 68.0]),
    (134.0, 8, [45.0, 224.0, 135.0, 35.53, 100.47]),
    (17.0, 4, [90.0, 107.0, 90.0, 126.5, 126.5]),
    (17.0, 6, [60.0, 107.0, 120.0, 50.65, 202.35]),
    (17.0, 12, [30.0, 107.0, 150.0, 21.01, 231.99]),
    (30.0, 4, [90.0, 120.0, 90.0, 120.0, 120.0]),
    (30.0, 6, [60.0, 120.0, 120.0, 60.0, 180.0]),
    (30.0, 12, [30.0, 120.0, 150.0, 24.90, 215.10]),
    (44.0, 4, [90.0, 134.0, 90.0, 113.0, 113.0]),
    (44.0, 6, [60.0, 134.0, 120.0, 64.45, 161.55]),
    (44.0, 12, [30.0, 134.0, 150.0, 27.98, 198.02]),
    (60.0, 4, [90.0, 150.0, 90.0, 105.0, 105.0]),
    (60.0, 6, [60.0, 150.0, 120.0, 65.10, 144.90]),
    (60.0, 12, [30.0, 150.0, 150.0, 30.0, 180.0]),
    (72.0, 4, [90.0, 162.0, 90.0, 99.0, 99.0]),
    (72.0, 6, [60.0, 162.0, 120.0, 63.76, 134.24]),
    (72.0, 12, [30.0, 162.0, 150.0, 30.53, 167.47]),
    (90.0, 4, [90.0, 180.0, 90.0, 90.0, 90.0]),
    (90.0, 6, [60.0, 180.0, 120.0, 60.0, 120.0]),
    (90.0, 12, [30.0, 180.0, 150.0, 30.0, 150.0]),
    (125.0, 4, [90.0, 215.0, 90.0, 72.5, 72.5]),
    (125.0, 6, [60.0, 215.0, 120.0, 49.56, 95.44]),
    (125.0, 12, [30.0, 215.0, 150.0, 25.77, 119.23]),
];

pub fn family_of(n: u32) -> Family {
    match n {
        5 | 10 => Family::Fivefold,
        8 => Family::Eightfold,
        6 | 12 => Family::Twelvefold,
        _ => panic!("order {n} belongs to several families"),
    }
}

/// Distinct `(family, theta)` table configurations, in table order.
pub fn configurations() -> Vec<(Family, f64)> {
    let mut out: Vec<(Family, f64)> = Vec::new();
    for &(theta, n, _) in TABLES {
        if n == 4 {
            continue;
        }
        let key = (family_of(n), theta);
        if !out.contains(&key) {
            out.push(key);
        }
    }
    out
}

pub fn standard_patch(family: Family) -> RhombicPatch {
    multigrid_patch(family, family.default_radius(), family.default_offset()).unwrap()
}

/// Index of the pentagon whose centroid is nearest `p`.
pub fn nearest_pentagon(pentagons: &[PlacedPentagon], p: Point) -> usize {
    let c = |q: &PlacedPentagon| pentagon_centroid(q).dist(p);
    (0..pentagons.len())
        .min_by(|&a, &b| c(&pentagons[a]).total_cmp(&c(&pentagons[b])))
        .unwrap()
}

pub fn pentagon_centroid(p: &PlacedPentagon) -> Point {
    let mut s = Point::ORIGIN;
    for v in p.vertices {
        s += v;
    }
    s * 0.2
}

/// Mirrors the pentagon across the line through its `A` and `C`.
pub fn reflect_across_ac(p: &mut PlacedPentagon) {
    let (a, c) = (p.vertices[0], p.vertices[2]);
    let dir = (c - a) * (1.0 / a.dist(c));
    for v in &mut p.vertices {
        let w = *v - a;
        *v = a + dir * (2.0 * w.dot(dir)) - w;
    }
}

pub fn translate(p: &mut PlacedPentagon, by: Point) {
    for v in &mut p.vertices {
        *v += by;
    }
}

/// Slides `B` along the perpendicular bisector of `AC` so that the angle at
/// `B` grows by `delta` degrees. Requires `B != 180`.
pub fn reangle_b(p: &mut PlacedPentagon, delta: f64) {
    let (a, b, c) = (p.vertices[0], p.vertices[1], p.vertices[2]);
    let m = (a + c) * 0.5;
    let half = a.dist(c) / 2.0;
    let now = 2.0 * (half / b.dist(m)).atan().to_degrees();
    let d = half / ((now + delta) / 2.0).to_radians().tan();
    let dir = (b - m) * (1.0 / b.dist(m));
    p.vertices[1] = m + dir * d;
}
