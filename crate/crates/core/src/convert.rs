//! Rhombic patch to pentagonal tiling.
//!
//! Each rhombus holds a pair of congruent pentagons whose diagonals `AC`
//! run along two opposite rhombus edges. Along those edges the `B` vertices
//! bulge outward; along the other two edges the pair is dented by the same
//! triangles. A shared edge is therefore valid exactly when one of its two
//! tiles bulges across it, which is a parity constraint per edge.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Isometry, Point};
use crate::pentagon::{build_shape, PentagonShape, ShapeClass, ShapeError};
use crate::rhombic::{PatchError, RhombicPatch, RhombusTile};
use crate::subdivide::{subdivide_patch, Axis, Chirality, DivisionSpec, Side, SideAssignment};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConvertError {
    #[error("order {n} at theta {theta}: {source}")]
    Shape {
        n: u32,
        theta: f64,
        #[source]
        source: ShapeError,
    },
    #[error("tile {tile}: {side:?} is only realizable on squares")]
    IncompatibleSide { tile: usize, side: Side },
    #[error("no side assignment exists: contradiction on the edge shared by tiles {0} and {1}")]
    Unsolvable(usize, usize),
    #[error("edge shared by more than two tiles: {0:?}")]
    NonManifoldEdge(Vec<usize>),
    #[error("preset assignment is inconsistent on the edge shared by tiles {0} and {1}")]
    InconsistentPreset(usize, usize),
    #[error("preset assignment has no entry for tile {0}")]
    MissingSide(usize),
    #[error(transparent)]
    Patch(#[from] PatchError),
    #[error("malformed tiling document: {0}")]
    Schema(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacedPentagon {
    /// Order of the pentagon family (the rhombus is `360/n`).
    pub n: u32,
    pub chirality: Chirality,
    /// Maps the canonical shape, scaled by `scale`, onto `vertices`.
    pub pose: Isometry,
    pub scale: f64,
    /// Rhombus id and slot (0 or 1) within its pair.
    pub source: (usize, u8),
    /// Asterisk in renders: posterior trapezoids only.
    pub posterior_mark: bool,
    /// `A, B, C, D, E`.
    pub vertices: [Point; 5],
}

#[derive(Debug, Clone, PartialEq)]
pub struct PentagonalTiling {
    pub pentagons: Vec<PlacedPentagon>,
    pub theta: f64,
    pub division: DivisionSpec,
    /// The patch before subdivision.
    pub source_patch: RhombicPatch,
    pub families: BTreeSet<u32>,
}

impl PentagonalTiling {
    pub fn count(&self, chirality: Chirality) -> usize {
        self.pentagons.iter().filter(|p| p.chirality == chirality).count()
    }
}

fn shape_for(n: u32, theta: f64) -> Result<PentagonShape, ConvertError> {
    build_shape(n, theta).map_err(|source| ConvertError::Shape { n, theta, source })
}

/// Index of the corner hosting vertex `A` of the first pentagon.
fn a_corner(tile: &RhombusTile, side: Side) -> Result<usize, ConvertError> {
    match (side.chirality, side.axis) {
        (Chirality::Anterior, Axis::FirstPair) | (Chirality::Posterior, Axis::SecondPair) => Ok(0),
        _ if tile.is_square() => Ok(1),
        _ => Err(ConvertError::IncompatibleSide {
            tile: tile.id,
            side,
        }),
    }
}

/// The side a non-square rhombus must take for a given axis.
pub fn forced_chirality(axis: Axis) -> Chirality {
    match axis {
        Axis::FirstPair => Chirality::Anterior,
        Axis::SecondPair => Chirality::Posterior,
    }
}

/// Places the pentagon pair of `shape` in `tile`.
pub fn place_pair_with(
    tile: &RhombusTile,
    shape: &PentagonShape,
    side: Side,
) -> Result<[PlacedPentagon; 2], ConvertError> {
    let ia = a_corner(tile, side)?;
    let reflect = side.chirality == Chirality::Posterior;
    let ic = if reflect { (ia + 3) % 4 } else { (ia + 1) % 4 };
    let p = tile.corners;
    let scale = tile.side() / shape.diagonal_ac();
    let c = shape.vertices[2];
    let c = if reflect { Point::new(c.x, -c.y) } else { c };
    let rotation = (p[ic] - p[ia]).heading() - c.heading();
    let first = Isometry::new(rotation, p[ia], reflect);
    let second = first.then(&Isometry::rotation_about(tile.center(), 180.0));
    let mark = reflect && shape.shape_class == ShapeClass::Trapezoid;
    let n = tile.order_n;
    let make = |pose: Isometry, slot: u8| PlacedPentagon {
        n,
        chirality: side.chirality,
        pose,
        scale,
        source: (tile.id, slot),
        posterior_mark: mark,
        vertices: shape.vertices.map(|v| pose.apply(v * scale)),
    };
    Ok([make(first, 0), make(second, 1)])
}

/// Places the `(tile.order_n, theta)` pentagon pair in `tile`.
pub fn place_pair(
    tile: &RhombusTile,
    theta: f64,
    axis: Axis,
    chirality: Chirality,
) -> Result<[PlacedPentagon; 2], ConvertError> {
    let shape = shape_for(tile.order_n, theta)?;
    place_pair_with(tile, &shape, Side::new(chirality, axis))
}

/// Shared-edge parity constraints: for tile positions `p`, `q` sharing an
/// edge, `first(p) xor first(q) == parity`.
fn constraints(patch: &RhombicPatch) -> Result<Vec<(usize, usize, bool)>, ConvertError> {
    let adj = patch.adjacency(&patch.tolerance());
    let mut out = Vec::new();
    for users in adj.edges.values() {
        match users.as_slice() {
            [_] => {}
            [(p, k), (q, l)] => out.push((*p, *q, !((k % 2 == 1) ^ (l % 2 == 1)))),
            more => {
                return Err(ConvertError::NonManifoldEdge(
                    more.iter().map(|&(p, _)| patch.tiles[p].id).collect(),
                ))
            }
        }
    }
    Ok(out)
}

/// Finds a side for every tile such that on each shared edge exactly one
/// of the two tiles bulges. With a preset (the subdivided case) the preset
/// is checked and returned as is.
pub fn solve_sides(
    patch: &RhombicPatch,
    theta: f64,
    preset: Option<&SideAssignment>,
) -> Result<SideAssignment, ConvertError> {
    for n in patch.families() {
        shape_for(n, theta)?;
    }
    let cons = constraints(patch)?;
    if let Some(pre) = preset {
        check_assignment(patch, pre, &cons)?;
        return Ok(pre.clone());
    }

    let mut order: Vec<usize> = (0..patch.tiles.len()).collect();
    order.sort_by_key(|&p| patch.tiles[p].id);
    let eps = patch.tolerance().eps_len;
    let dists: Vec<f64> = patch.tiles.iter().map(|t| t.center().dist(patch.center)).collect();
    let nearest = dists.iter().cloned().fold(f64::INFINITY, f64::min);
    let seed = order.iter().copied().find(|&p| dists[p] <= nearest + eps);
    let seeds: Vec<usize> = seed.into_iter().chain(order.iter().copied()).collect();

    let first = propagate(patch.tiles.len(), &cons, &seeds).map_err(|(p, q)| {
        let (a, b) = (patch.tiles[p].id, patch.tiles[q].id);
        ConvertError::Unsolvable(a.min(b), a.max(b))
    })?;

    let mut out = SideAssignment::default();
    for (p, t) in patch.tiles.iter().enumerate() {
        let axis = if first[p] {
            Axis::FirstPair
        } else {
            Axis::SecondPair
        };
        let chirality = if t.is_square() {
            Chirality::Anterior
        } else {
            forced_chirality(axis)
        };
        out.sides.insert(t.id, Side::new(chirality, axis));
    }
    Ok(out)
}

/// Breadth-first propagation of `x_p xor x_q = parity` constraints over
/// `count` variables. Each unassigned seed, in order, starts a component
/// with `true`. Returns the first contradicting pair on failure.
fn propagate(
    count: usize,
    cons: &[(usize, usize, bool)],
    seeds: &[usize],
) -> Result<Vec<bool>, (usize, usize)> {
    let mut nbrs: Vec<Vec<(usize, bool)>> = vec![Vec::new(); count];
    for &(p, q, parity) in cons {
        nbrs[p].push((q, parity));
        nbrs[q].push((p, parity));
    }
    for list in &mut nbrs {
        list.sort_unstable();
    }
    let mut value: Vec<Option<bool>> = vec![None; count];
    for &s in seeds {
        if value[s].is_some() {
            continue;
        }
        value[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(p) = queue.pop_front() {
            let vp = value[p].expect("queued variables are assigned");
            for &(q, parity) in &nbrs[p] {
                let want = vp ^ parity;
                match value[q] {
                    None => {
                        value[q] = Some(want);
                        queue.push_back(q);
                    }
                    Some(have) if have != want => return Err((p, q)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(value.into_iter().map(|v| v.unwrap_or(true)).collect())
}

fn check_assignment(
    patch: &RhombicPatch,
    assignment: &SideAssignment,
    cons: &[(usize, usize, bool)],
) -> Result<(), ConvertError> {
    for t in &patch.tiles {
        let side = assignment.get(t.id).ok_or(ConvertError::MissingSide(t.id))?;
        a_corner(t, side)?;
    }
    for &(p, q, parity) in cons {
        let (a, b) = (&patch.tiles[p], &patch.tiles[q]);
        let fa = assignment.sides[&a.id].axis == Axis::FirstPair;
        let fb = assignment.sides[&b.id].axis == Axis::FirstPair;
        if fa ^ fb != parity {
            return Err(ConvertError::InconsistentPreset(a.id.min(b.id), a.id.max(b.id)));
        }
    }
    Ok(())
}

/// Refines the patch and solves its sides without placing pentagons.
pub fn plan(
    patch: &RhombicPatch,
    theta: f64,
    spec: DivisionSpec,
) -> Result<(RhombicPatch, SideAssignment), ConvertError> {
    let (refined, preset) = subdivide_patch(patch, spec);
    let preset = (spec.u > 0).then_some(&preset);
    let sides = solve_sides(&refined, theta, preset)?;
    Ok((refined, sides))
}

/// Places pentagon pairs in an already planned patch.
pub fn place_all(
    refined: &RhombicPatch,
    theta: f64,
    sides: &SideAssignment,
) -> Result<Vec<PlacedPentagon>, ConvertError> {
    let mut shapes = BTreeMap::new();
    for n in refined.families() {
        shapes.insert(n, shape_for(n, theta)?);
    }
    let pairs: Vec<[PlacedPentagon; 2]> = refined
        .tiles
        .par_iter()
        .map(|t| {
            let side = sides.get(t.id).ok_or(ConvertError::MissingSide(t.id))?;
            place_pair_with(t, &shapes[&t.order_n], side)
        })
        .collect::<Result<_, _>>()?;
    Ok(pairs.into_iter().flatten().collect())
}

/// Subdivides (for `u >= 1`), solves sides and places every pentagon pair.
pub fn convert_patch(
    patch: &RhombicPatch,
    theta: f64,
    spec: DivisionSpec,
) -> Result<PentagonalTiling, ConvertError> {
    let (refined, sides) = plan(patch, theta, spec)?;
    let pentagons = place_all(&refined, theta, &sides)?;
    Ok(PentagonalTiling {
        pentagons,
        theta,
        division: spec,
        source_patch: patch.clone(),
        families: patch.families().into_iter().collect(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TilingDoc {
    theta: f64,
    u: u32,
    families: Vec<u32>,
    pentagons: Vec<PentagonDoc>,
    patch: crate::rhombic::json::PatchDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PentagonDoc {
    n: u32,
    chirality: ChiralityTag,
    mark: bool,
    vertices: [Point; 5],
    source: (usize, u8),
}

#[derive(Serialize, Deserialize, Clone, Copy)]
enum ChiralityTag {
    A,
    P,
}

/// Serializes a tiling together with its source patch.
pub fn tiling_to_json(tiling: &PentagonalTiling) -> String {
    let doc = TilingDoc {
        theta: tiling.theta,
        u: tiling.division.u,
        families: tiling.families.iter().copied().collect(),
        pentagons: tiling
            .pentagons
            .iter()
            .map(|p| PentagonDoc {
                n: p.n,
                chirality: match p.chirality {
                    Chirality::Anterior => ChiralityTag::A,
                    Chirality::Posterior => ChiralityTag::P,
                },
                mark: p.posterior_mark,
                vertices: p.vertices,
                source: p.source,
            })
            .collect(),
        patch: crate::rhombic::json::PatchDoc::from_patch(&tiling.source_patch),
    };
    serde_json::to_string_pretty(&doc).expect("tiling serializes")
}

/// Reads a tiling document. Poses are recovered from the vertices; nothing
/// is checked geometrically here (that is the validator's job).
pub fn tiling_from_json(document: &str) -> Result<PentagonalTiling, ConvertError> {
    let doc: TilingDoc =
        serde_json::from_str(document).map_err(|e| ConvertError::Schema(e.to_string()))?;
    if !(doc.theta > 0.0 && doc.theta < 180.0) {
        return Err(ConvertError::Schema(format!("theta {} out of range", doc.theta)));
    }
    let source_patch = doc.patch.into_patch()?;
    let pentagons = doc
        .pentagons
        .into_iter()
        .enumerate()
        .map(|(k, p)| {
            if p.n < 3 {
                return Err(ConvertError::Schema(format!("pentagon {k}: order {} < 3", p.n)));
            }
            if p.vertices.iter().any(|v| !v.is_finite()) {
                return Err(ConvertError::Schema(format!("pentagon {k}: non-finite vertex")));
            }
            let chirality = match p.chirality {
                ChiralityTag::A => Chirality::Anterior,
                ChiralityTag::P => Chirality::Posterior,
            };
            let [a, b, ..] = p.vertices;
            Ok(PlacedPentagon {
                n: p.n,
                chirality,
                pose: Isometry::new((b - a).heading(), a, chirality == Chirality::Posterior),
                scale: a.dist(b),
                source: p.source,
                posterior_mark: p.mark,
                vertices: p.vertices,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PentagonalTiling {
        pentagons,
        theta: doc.theta,
        division: DivisionSpec::new(doc.u),
        source_patch,
        families: doc.families.into_iter().collect(),
    })
}
