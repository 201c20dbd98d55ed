//! Geometric verification of patches and tilings.
//!
//! Everything here is recomputed from coordinates: stored shape angles,
//! poses and side assignments are never consulted.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::convert::PentagonalTiling;
use crate::geom::{
    check_simple, distance_to_segment, interior_angles, locate, signed_area,
    triangulate, triangulated_intersection_area, BBox, Location, Point, PointIndex,
    SpatialGrid, Tolerance,
};
use crate::rhombic::RhombicPatch;

/// Relative tolerance on total tile area against patch area.
pub const COVERAGE_REL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Overlap,
    Coverage,
    VertexSum,
    EEdge,
    Symmetry,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub check: Check,
    /// What failed, e.g. `pentagons 3,17` or `vertex 12 at (x, y)`.
    pub subject: String,
    /// Size of the violation in the check's own unit (area, degrees, ...).
    pub magnitude: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub coverage_ok: bool,
    pub overlap_ok: bool,
    pub vertex_sums_ok: bool,
    pub e_edge_matching_ok: bool,
    pub symmetry_ok: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl ValidationReport {
    fn from_diagnostics(diagnostics: Vec<Diagnostic>) -> Self {
        let ok = |c: Check| !diagnostics.iter().any(|d| d.check == c);
        ValidationReport {
            coverage_ok: ok(Check::Coverage),
            overlap_ok: ok(Check::Overlap),
            vertex_sums_ok: ok(Check::VertexSum),
            e_edge_matching_ok: ok(Check::EEdge),
            symmetry_ok: ok(Check::Symmetry),
            diagnostics,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.coverage_ok
            && self.overlap_ok
            && self.vertex_sums_ok
            && self.e_edge_matching_ok
            && self.symmetry_ok
    }

    pub fn failures(&self, check: Check) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(move |d| d.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Polygons with their triangulations and boxes, bucketed for neighbor queries.
struct Polygons<'a> {
    polys: Vec<&'a [Point]>,
    tris: Vec<Vec<[Point; 3]>>,
    boxes: Vec<BBox>,
    angles: Vec<Vec<f64>>,
    grid: SpatialGrid,
    max_diameter: f64,
}

impl<'a> Polygons<'a> {
    fn new(polys: Vec<&'a [Point]>) -> Self {
        let boxes: Vec<BBox> = polys.iter().map(|p| BBox::of(p)).collect();
        let tris = polys.par_iter().map(|p| triangulate(p)).collect();
        let angles = polys.iter().map(|p| interior_angles(p)).collect();
        let max_diameter = polys
            .iter()
            .map(|p| {
                let mut d: f64 = 0.0;
                for a in p.iter() {
                    for b in p.iter() {
                        d = d.max(a.dist(*b));
                    }
                }
                d
            })
            .fold(0.0, f64::max);
        let cell = boxes
            .iter()
            .map(|b| b.width().max(b.height()))
            .fold(0.0, f64::max);
        let mut grid = SpatialGrid::new(cell);
        for (k, b) in boxes.iter().enumerate() {
            grid.insert(k, b);
        }
        Polygons {
            polys,
            tris,
            boxes,
            angles,
            grid,
            max_diameter,
        }
    }

    fn overlaps(&self, tol: &Tolerance, label: &str) -> Vec<Diagnostic> {
        let thresh = tol.eps_len * tol.eps_len;
        (0..self.polys.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                if check_simple(self.polys[i], tol.eps_len).is_err() {
                    out.push(Diagnostic {
                        check: Check::Overlap,
                        subject: format!("{label} {i} is not simple"),
                        magnitude: 0.0,
                    });
                }
                for j in self.grid.query(&self.boxes[i]) {
                    if j <= i || !self.boxes[i].overlaps(&self.boxes[j], 0.0) {
                        continue;
                    }
                    let area = triangulated_intersection_area(&self.tris[i], &self.tris[j]);
                    if area > thresh {
                        out.push(Diagnostic {
                            check: Check::Overlap,
                            subject: format!("{label}s {i},{j}"),
                            magnitude: area,
                        });
                    }
                }
                out
            })
            .collect()
    }

    /// Angle sum at `v` over every polygon touching it: the corner angle if
    /// `v` is a corner, 180 if it lies inside an edge, 360 if it is interior.
    fn angle_sum(&self, v: Point, tol: &Tolerance) -> f64 {
        let mut sum = 0.0;
        for k in self.grid.query_point(v, tol.eps_len) {
            if !self.boxes[k].contains(v, tol.eps_len) {
                continue;
            }
            let poly = self.polys[k];
            if let Some(c) = poly.iter().position(|p| p.dist(v) <= tol.eps_len) {
                sum += self.angles[k][c];
                continue;
            }
            sum += match locate(v, poly, tol.eps_len) {
                Location::OnBoundary => 180.0,
                Location::Inside => 360.0,
                Location::Outside => 0.0,
            };
        }
        sum
    }
}

fn coverage_diag(covered: f64, target: f64, what: &str) -> Option<Diagnostic> {
    let rel = if target > 0.0 {
        (covered - target).abs() / target
    } else {
        covered.abs()
    };
    (rel > COVERAGE_REL_TOL).then(|| Diagnostic {
        check: Check::Coverage,
        subject: format!("{what} area {covered} vs patch area {target}"),
        magnitude: rel,
    })
}

fn symmetry_diags(points: &PointIndex, order: u32, center: Point) -> Vec<Diagnostic> {
    if order <= 1 {
        return Vec::new();
    }
    let step = 360.0 / order as f64;
    points
        .points()
        .par_iter()
        .enumerate()
        .filter_map(|(k, &p)| {
            let q = p.rotate_about(center, step);
            points.find(q).is_none().then(|| Diagnostic {
                check: Check::Symmetry,
                subject: format!("vertex {k} at ({:.9}, {:.9}) has no image", p.x, p.y),
                magnitude: step,
            })
        })
        .collect()
}

fn boundary_distance(p: Point, boundary: &[(Point, Point)]) -> f64 {
    boundary
        .iter()
        .map(|&(a, b)| distance_to_segment(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

/// Checks a pentagonal tiling against its source patch: no overlaps, total
/// area equal to the patch area, 360 degrees around every vertex farther
/// than one pentagon diameter from the patch boundary, every `DE` edge
/// matched by exactly one opposite `DE` edge, and rotational symmetry of
/// the vertex set.
pub fn full_check(tiling: &PentagonalTiling, tol: &Tolerance) -> ValidationReport {
    let polys = Polygons::new(tiling.pentagons.iter().map(|p| &p.vertices[..]).collect());
    let mut diags = polys.overlaps(tol, "pentagon");

    let covered: f64 = polys.polys.iter().map(|p| signed_area(p).abs()).sum();
    diags.extend(coverage_diag(covered, tiling.source_patch.area(), "pentagon"));

    let mut points = PointIndex::new(*tol);
    let ids: Vec<[usize; 5]> = tiling
        .pentagons
        .iter()
        .map(|p| p.vertices.map(|v| points.insert(v)))
        .collect();

    let patch = &tiling.source_patch;
    let boundary = patch.adjacency(&patch.tolerance()).boundary_segments();
    let margin = polys.max_diameter;
    diags.extend(
        points
            .points()
            .par_iter()
            .enumerate()
            .filter(|(_, &v)| boundary_distance(v, &boundary) > margin)
            .filter_map(|(k, &v)| {
                let sum = polys.angle_sum(v, tol);
                ((sum - 360.0).abs() > tol.eps_ang).then(|| Diagnostic {
                    check: Check::VertexSum,
                    subject: format!("vertex {k} at ({:.9}, {:.9})", v.x, v.y),
                    magnitude: sum - 360.0,
                })
            })
            .collect::<Vec<_>>(),
    );

    diags.extend(e_edge_diags(&ids));
    diags.extend(symmetry_diags(&points, patch.symmetry_order, patch.center));
    ValidationReport::from_diagnostics(diags)
}

fn e_edge_diags(ids: &[[usize; 5]]) -> Vec<Diagnostic> {
    let mut edges: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut out = Vec::new();
    for (k, v) in ids.iter().enumerate() {
        let (d, e) = (v[3], v[4]);
        if d == e {
            out.push(Diagnostic {
                check: Check::EEdge,
                subject: format!("pentagon {k} has a degenerate DE edge"),
                magnitude: 0.0,
            });
            continue;
        }
        edges.entry((d.min(e), d.max(e))).or_default().push(k);
    }
    for users in edges.values() {
        let matched = match users.as_slice() {
            [a, b] => ids[*a][3] == ids[*b][4] && ids[*a][4] == ids[*b][3],
            _ => false,
        };
        if !matched {
            for &k in users {
                out.push(Diagnostic {
                    check: Check::EEdge,
                    subject: format!("pentagon {k}: DE edge shared by {} pentagon(s)", users.len()),
                    magnitude: users.len() as f64,
                });
            }
        }
    }
    out
}

/// Checks a rhombic patch: no overlaps, boundary edges forming a single
/// closed curve with no edge used more than twice, 360 degrees at every
/// vertex off the boundary, and rotational symmetry of the vertex set.
pub fn check_patch(patch: &RhombicPatch, tol: &Tolerance) -> ValidationReport {
    let polys = Polygons::new(patch.tiles.iter().map(|t| &t.corners[..]).collect());
    let mut diags = polys.overlaps(tol, "tile");
    let adj = patch.adjacency(tol);

    for (&(a, b), users) in &adj.edges {
        if users.len() > 2 {
            diags.push(Diagnostic {
                check: Check::Coverage,
                subject: format!("edge {a}-{b} used by {} tiles", users.len()),
                magnitude: users.len() as f64,
            });
        }
    }
    diags.extend(boundary_loop_diags(&adj.edges));

    let boundary = adj.boundary_segments();
    diags.extend(
        adj.points
            .points()
            .par_iter()
            .enumerate()
            .filter(|(_, &v)| boundary_distance(v, &boundary) > tol.eps_len)
            .filter_map(|(k, &v)| {
                let sum = polys.angle_sum(v, tol);
                ((sum - 360.0).abs() > tol.eps_ang).then(|| Diagnostic {
                    check: Check::VertexSum,
                    subject: format!("vertex {k} at ({:.9}, {:.9})", v.x, v.y),
                    magnitude: sum - 360.0,
                })
            })
            .collect::<Vec<_>>(),
    );

    diags.extend(symmetry_diags(&adj.points, patch.symmetry_order, patch.center));
    ValidationReport::from_diagnostics(diags)
}

/// The boundary of a hole-free patch is one closed curve: every vertex has
/// even boundary degree and the boundary graph is connected.
fn boundary_loop_diags(edges: &BTreeMap<(usize, usize), Vec<(usize, usize)>>) -> Vec<Diagnostic> {
    let mut graph: HashMap<usize, Vec<usize>> = HashMap::new();
    for (&(a, b), users) in edges {
        if users.len() == 1 {
            graph.entry(a).or_default().push(b);
            graph.entry(b).or_default().push(a);
        }
    }
    let mut out = Vec::new();
    let mut odd: Vec<usize> = graph
        .iter()
        .filter(|(_, n)| n.len() % 2 == 1)
        .map(|(&v, _)| v)
        .collect();
    odd.sort_unstable();
    for v in odd {
        out.push(Diagnostic {
            check: Check::Coverage,
            subject: format!("boundary vertex {v} has odd degree"),
            magnitude: graph[&v].len() as f64,
        });
    }
    if let Some(&start) = graph.keys().min() {
        let mut seen = std::collections::HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &graph[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != graph.len() {
            out.push(Diagnostic {
                check: Check::Coverage,
                subject: "boundary is not a single closed curve (gap or hole)".into(),
                magnitude: (graph.len() - seen.len()) as f64,
            });
        }
    }
    out
}

/// Fraction of random points, drawn uniformly from the patch tiles that
/// touch no boundary edge, covered by exactly one pentagon.
pub fn monte_carlo_coverage(tiling: &PentagonalTiling, samples: usize, seed: u64) -> f64 {
    let patch = &tiling.source_patch;
    let adj = patch.adjacency(&patch.tolerance());
    let interior: Vec<usize> = (0..patch.tiles.len())
        .filter(|&p| {
            let ids = adj.corner_ids[p];
            (0..4).all(|k| {
                let (a, b) = (ids[k], ids[(k + 1) % 4]);
                adj.edges[&(a.min(b), a.max(b))].len() == 2
            })
        })
        .collect();
    if interior.is_empty() || samples == 0 {
        return 1.0;
    }
    let mut cumulative = Vec::with_capacity(interior.len());
    let mut total = 0.0;
    for &p in &interior {
        total += patch.tiles[p].area().abs();
        cumulative.push(total);
    }

    let polys = Polygons::new(tiling.pentagons.iter().map(|p| &p.vertices[..]).collect());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut once = 0usize;
    for _ in 0..samples {
        let r = rng.gen::<f64>() * total;
        let slot = cumulative.partition_point(|&c| c < r).min(interior.len() - 1);
        let t = &patch.tiles[interior[slot]];
        let (s, u) = (rng.gen::<f64>(), rng.gen::<f64>());
        let q = t.corners[0] + (t.corners[1] - t.corners[0]) * s + (t.corners[3] - t.corners[0]) * u;
        let hits = polys
            .grid
            .query_point(q, 0.0)
            .into_iter()
            .filter(|&k| polys.boxes[k].contains(q, 0.0) && locate(q, polys.polys[k], 0.0) != Location::Outside)
            .count();
        if hits == 1 {
            once += 1;
        }
    }
    once as f64 / samples as f64
}
