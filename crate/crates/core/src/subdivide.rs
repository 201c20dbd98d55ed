//! Similar subdivision of every rhombus into `4u^2` copies, with the
//! pair orientations that make the refined patch convertible.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geom::Point;
use crate::rhombic::{Lineage, RhombicPatch, RhombusTile};

/// Division parameter shared by every tile of a patch. `u = 0` means the
/// rhombi are converted directly; `u >= 1` cuts each into `2u x 2u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DivisionSpec {
    pub u: u32,
}

impl DivisionSpec {
    pub const DIRECT: DivisionSpec = DivisionSpec { u: 0 };

    pub fn new(u: u32) -> Self {
        DivisionSpec { u }
    }

    /// Sub-rhombi per base rhombus.
    pub fn divisions(self) -> usize {
        if self.u == 0 {
            1
        } else {
            4 * (self.u as usize).pow(2)
        }
    }

    pub fn pentagons_per_rhombus(self) -> usize {
        2 * self.divisions()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Chirality {
    Anterior,
    Posterior,
}

impl Chirality {
    pub fn flipped(self) -> Self {
        match self {
            Chirality::Anterior => Chirality::Posterior,
            Chirality::Posterior => Chirality::Anterior,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Chirality::Anterior => "A",
            Chirality::Posterior => "P",
        }
    }
}

/// Which pair of opposite rhombus edges the `B` vertices protrude across:
/// `FirstPair` is `P0P1`/`P2P3`, `SecondPair` is `P1P2`/`P3P0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    FirstPair,
    SecondPair,
}

impl Axis {
    pub fn flipped(self) -> Self {
        match self {
            Axis::FirstPair => Axis::SecondPair,
            Axis::SecondPair => Axis::FirstPair,
        }
    }

    /// Whether edge `k` (from `P_k` to `P_{k+1}`) belongs to this pair.
    pub fn contains_edge(self, k: usize) -> bool {
        k.is_multiple_of(2) == (self == Axis::FirstPair)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Side {
    pub chirality: Chirality,
    pub axis: Axis,
}

impl Side {
    pub const fn new(chirality: Chirality, axis: Axis) -> Self {
        Side { chirality, axis }
    }
}

/// Orientation of every tile of a (possibly refined) patch, keyed by tile id.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SideAssignment {
    pub sides: BTreeMap<usize, Side>,
    /// For refined patches: the classification of each base rhombus by the
    /// chirality its standard-unit pattern is rooted in.
    pub base_chirality: BTreeMap<usize, Chirality>,
}

impl SideAssignment {
    pub fn get(&self, id: usize) -> Option<Side> {
        self.sides.get(&id).copied()
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn count(&self, chirality: Chirality) -> usize {
        self.sides.values().filter(|s| s.chirality == chirality).count()
    }

    /// The assignment of each base tile's sub-rhombi, indexed by their cell.
    pub fn per_base_patterns(
        &self,
        refined: &RhombicPatch,
    ) -> BTreeMap<usize, BTreeMap<(u32, u32), Side>> {
        let mut out: BTreeMap<usize, BTreeMap<(u32, u32), Side>> = BTreeMap::new();
        for t in &refined.tiles {
            if let (Some(l), Some(s)) = (t.lineage, self.get(t.id)) {
                out.entry(l.base_id).or_default().insert((l.i, l.j), s);
            }
        }
        out
    }
}

/// Side of the sub-rhombus in cell `(i, j)` of a standard-unit grid. Each
/// 2x2 block holds two anterior rhombi on one diagonal and two posterior
/// rhombi on the other, so protrusions along every grid line alternate.
pub fn standard_unit_side(i: u32, j: u32) -> Side {
    if (i + j).is_multiple_of(2) {
        Side::new(Chirality::Anterior, Axis::FirstPair)
    } else {
        Side::new(Chirality::Posterior, Axis::SecondPair)
    }
}

/// Replaces each rhombus by a `2u x 2u` grid of similar rhombi and assigns
/// the standard-unit sides. With `u = 0` the patch is returned unchanged
/// and the assignment is empty.
pub fn subdivide_patch(patch: &RhombicPatch, spec: DivisionSpec) -> (RhombicPatch, SideAssignment) {
    if spec.u == 0 {
        return (patch.clone(), SideAssignment::default());
    }
    let m = 2 * spec.u;
    let mut bases: Vec<&RhombusTile> = patch.tiles.iter().collect();
    bases.sort_by_key(|t| t.id);

    let blocks: Vec<Vec<(RhombusTile, Side)>> = bases
        .par_iter()
        .enumerate()
        .map(|(k, base)| {
            let [p0, p1, _, p3] = base.corners;
            let a = (p1 - p0) * (1.0 / m as f64);
            let b = (p3 - p0) * (1.0 / m as f64);
            let mut cells = Vec::with_capacity((m * m) as usize);
            for i in 0..m {
                for j in 0..m {
                    let q: Point = p0 + a * i as f64 + b * j as f64;
                    let tile = RhombusTile {
                        id: k * (m * m) as usize + (i * m + j) as usize,
                        corners: [q, q + a, q + a + b, q + b],
                        acute_deg: base.acute_deg,
                        order_n: base.order_n,
                        lineage: Some(Lineage {
                            base_id: base.id,
                            i,
                            j,
                        }),
                    };
                    cells.push((tile, standard_unit_side(i, j)));
                }
            }
            cells
        })
        .collect();

    let mut tiles = Vec::with_capacity(bases.len() * (m * m) as usize);
    let mut assignment = SideAssignment::default();
    for (tile, side) in blocks.into_iter().flatten() {
        assignment.sides.insert(tile.id, side);
        tiles.push(tile);
    }
    for base in &bases {
        assignment.base_chirality.insert(base.id, Chirality::Anterior);
    }
    let refined = RhombicPatch {
        tiles,
        symmetry_order: patch.symmetry_order,
        center: patch.center,
        side_len: patch.side_len / m as f64,
    };
    (refined, assignment)
}
