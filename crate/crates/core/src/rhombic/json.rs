use serde::{Deserialize, Serialize};

use super::{Lineage, PatchError, RhombicPatch, RhombusTile};
use crate::geom::{Point, Tolerance};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct PatchDoc {
    pub symmetry_order: u32,
    pub side_len: f64,
    pub center: Point,
    pub tiles: Vec<TileDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct TileDoc {
    pub id: usize,
    pub acute_deg: f64,
    pub corners: [Point; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lineage: Option<[u64; 3]>,
}

impl PatchDoc {
    pub(crate) fn from_patch(patch: &RhombicPatch) -> Self {
        PatchDoc {
            symmetry_order: patch.symmetry_order,
            side_len: patch.side_len,
            center: patch.center,
            tiles: patch
                .tiles
                .iter()
                .map(|t| TileDoc {
                    id: t.id,
                    acute_deg: t.acute_deg,
                    corners: t.corners,
                    lineage: t.lineage.map(|l| [l.base_id as u64, l.i as u64, l.j as u64]),
                })
                .collect(),
        }
    }

    pub(crate) fn into_patch(self) -> Result<RhombicPatch, PatchError> {
        if !(self.side_len > 0.0 && self.side_len.is_finite()) {
            return Err(PatchError::Schema(format!("side_len {} is not positive", self.side_len)));
        }
        let tol = Tolerance::for_side(self.side_len);
        let mut tiles = Vec::with_capacity(self.tiles.len());
        for doc in self.tiles {
            let mut tile = RhombusTile::from_corners(doc.id, doc.corners, &tol)?;
            if (tile.acute_deg - doc.acute_deg).abs() > tol.eps_ang {
                return Err(PatchError::InvalidTile {
                    id: doc.id,
                    reason: format!(
                        "declared acute angle {} but corners give {}",
                        doc.acute_deg, tile.acute_deg
                    ),
                });
            }
            tile.lineage = doc.lineage.map(|[b, i, j]| Lineage {
                base_id: b as usize,
                i: i as u32,
                j: j as u32,
            });
            tiles.push(tile);
        }
        RhombicPatch::new(tiles, self.symmetry_order, self.center, self.side_len)
    }
}

/// Serializes a patch; floats use the shortest representation that reads
/// back to the same value.
pub fn save_patch(patch: &RhombicPatch) -> String {
    serde_json::to_string_pretty(&PatchDoc::from_patch(patch)).expect("patch serializes")
}

/// Parses and validates a patch document. Corners may start at any corner
/// and run in either direction; they are normalized on load.
pub fn load_patch(document: &str) -> Result<RhombicPatch, PatchError> {
    let doc: PatchDoc =
        serde_json::from_str(document).map_err(|e| PatchError::Schema(e.to_string()))?;
    doc.into_patch()
}
