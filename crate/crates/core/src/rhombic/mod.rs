//! Rhombic patches: tiles, adjacency, generators and JSON exchange.

pub(crate) mod json;
mod multigrid;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::geom::{signed_area, BBox, Point, PointIndex, Tolerance};

pub use json::{load_patch, save_patch};
pub use multigrid::{multigrid_patch, Family};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PatchError {
    #[error("tile {id}: {reason}")]
    InvalidTile { id: usize, reason: String },
    #[error("duplicate tile id {0}")]
    DuplicateId(usize),
    #[error(
        "singular grid: lines of grids {grids:?} meet at ({x:.6}, {y:.6}); retry with offset {suggested_offset}"
    )]
    SingularGrid {
        grids: [usize; 3],
        x: f64,
        y: f64,
        suggested_offset: f64,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed patch document: {0}")]
    Schema(String),
}

/// Where a sub-rhombus came from: base tile id and its cell in the
/// `2u x 2u` grid laid along sides `P0P1` (index `i`) and `P0P3` (index `j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lineage {
    pub base_id: usize,
    pub i: u32,
    pub j: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhombusTile {
    pub id: usize,
    /// Counterclockwise, `corners[0]` at an acute corner.
    pub corners: [Point; 4],
    pub acute_deg: f64,
    /// `360 / acute_deg`: the pentagon family that fills this rhombus.
    pub order_n: u32,
    pub lineage: Option<Lineage>,
}

impl RhombusTile {
    /// Validates and normalizes four corners into a tile. Corners may come
    /// in either orientation and start anywhere; the acute angle must be
    /// `360/n` for an integer `n`.
    pub fn from_corners(id: usize, corners: [Point; 4], tol: &Tolerance) -> Result<Self, PatchError> {
        let bad = |reason: String| PatchError::InvalidTile { id, reason };
        if corners.iter().any(|p| !p.is_finite()) {
            return Err(bad("non-finite coordinate".into()));
        }
        let mut c = corners;
        if signed_area(&c) < 0.0 {
            c = [c[0], c[3], c[2], c[1]];
        }
        let sides: Vec<f64> = (0..4).map(|k| c[k].dist(c[(k + 1) % 4])).collect();
        let side = sides[0];
        if side <= tol.eps_len {
            return Err(bad("degenerate side".into()));
        }
        if sides.iter().any(|s| (s - side).abs() > tol.eps_len) {
            return Err(bad(format!("sides are not equal: {sides:?}")));
        }
        if (c[0] + c[2]).dist(c[1] + c[3]) > tol.eps_len {
            return Err(bad("opposite sides are not parallel".into()));
        }
        let u = c[1] - c[0];
        let v = c[3] - c[0];
        let mut angle = u.cross(v).atan2(u.dot(v)).to_degrees();
        if angle > 90.0 + tol.eps_ang {
            c = [c[1], c[2], c[3], c[0]];
            angle = 180.0 - angle;
        }
        let n = (360.0 / angle).round();
        if !(3.0..=1e6).contains(&n) || (angle - 360.0 / n).abs() > tol.eps_ang {
            return Err(bad(format!(
                "acute angle {angle:.6} is not 360/n for an integer n"
            )));
        }
        Ok(RhombusTile {
            id,
            corners: c,
            acute_deg: 360.0 / n,
            order_n: n as u32,
            lineage: None,
        })
    }

    pub fn side(&self) -> f64 {
        self.corners[0].dist(self.corners[1])
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.corners)
    }

    pub fn center(&self) -> Point {
        (self.corners[0] + self.corners[2]) * 0.5
    }

    /// Long diagonal.
    pub fn diameter(&self) -> f64 {
        self.corners[0].dist(self.corners[2])
    }

    pub fn is_square(&self) -> bool {
        self.order_n == 4
    }

    /// Edge `k` runs from `corners[k]` to `corners[k+1]`.
    pub fn edge(&self, k: usize) -> (Point, Point) {
        (self.corners[k % 4], self.corners[(k + 1) % 4])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhombicPatch {
    pub tiles: Vec<RhombusTile>,
    pub symmetry_order: u32,
    pub center: Point,
    pub side_len: f64,
}

impl RhombicPatch {
    /// Checks ids are unique and every tile has side `side_len`.
    pub fn new(
        tiles: Vec<RhombusTile>,
        symmetry_order: u32,
        center: Point,
        side_len: f64,
    ) -> Result<Self, PatchError> {
        if !(side_len > 0.0 && side_len.is_finite()) {
            return Err(PatchError::InvalidParameter(format!("side_len {side_len}")));
        }
        if symmetry_order == 0 {
            return Err(PatchError::InvalidParameter("symmetry_order 0".into()));
        }
        let tol = Tolerance::for_side(side_len);
        let mut seen = std::collections::HashSet::new();
        for t in &tiles {
            if !seen.insert(t.id) {
                return Err(PatchError::DuplicateId(t.id));
            }
            if (t.side() - side_len).abs() > tol.eps_len {
                return Err(PatchError::InvalidTile {
                    id: t.id,
                    reason: format!("side {} differs from patch side {side_len}", t.side()),
                });
            }
        }
        Ok(RhombicPatch {
            tiles,
            symmetry_order,
            center,
            side_len,
        })
    }

    pub fn tolerance(&self) -> Tolerance {
        Tolerance::for_side(self.side_len)
    }

    pub fn area(&self) -> f64 {
        self.tiles.iter().map(|t| t.area().abs()).sum()
    }

    pub fn bbox(&self) -> BBox {
        let pts: Vec<Point> = self.tiles.iter().flat_map(|t| t.corners).collect();
        BBox::of(&pts)
    }

    /// Distinct acute angles present, as orders `n`.
    pub fn families(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.tiles.iter().map(|t| t.order_n).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn adjacency(&self, tol: &Tolerance) -> Adjacency {
        Adjacency::build(self, tol)
    }
}

/// Edge incidence of a patch, with vertices identified up to tolerance.
#[derive(Debug, Clone)]
pub struct Adjacency {
    pub points: PointIndex,
    /// Per tile (by position), the vertex ids of its four corners.
    pub corner_ids: Vec<[usize; 4]>,
    /// Undirected edge `(low id, high id)` to the `(tile position, edge)`
    /// pairs using it.
    pub edges: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

impl Adjacency {
    fn build(patch: &RhombicPatch, tol: &Tolerance) -> Self {
        let mut points = PointIndex::new(*tol);
        let mut corner_ids = Vec::with_capacity(patch.tiles.len());
        let mut edges: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (pos, t) in patch.tiles.iter().enumerate() {
            let ids = t.corners.map(|p| points.insert(p));
            for k in 0..4 {
                let (a, b) = (ids[k], ids[(k + 1) % 4]);
                edges.entry((a.min(b), a.max(b))).or_default().push((pos, k));
            }
            corner_ids.push(ids);
        }
        Adjacency {
            points,
            corner_ids,
            edges,
        }
    }

    /// Edges used by exactly one tile, as point pairs.
    pub fn boundary_segments(&self) -> Vec<(Point, Point)> {
        let pts = self.points.points();
        self.edges
            .iter()
            .filter(|(_, users)| users.len() == 1)
            .map(|(&(a, b), _)| (pts[a], pts[b]))
            .collect()
    }
}

/// `n` rhombi of angle `360/n` around the origin, each cut into
/// `rings_u x rings_u` similar rhombi of unit side.
pub fn wheel_patch(n: u32, rings_u: u32) -> Result<RhombicPatch, PatchError> {
    if n < 3 {
        return Err(PatchError::InvalidParameter(format!("wheel order {n} < 3")));
    }
    if rings_u < 1 {
        return Err(PatchError::InvalidParameter("rings_u must be at least 1".into()));
    }
    let tol = Tolerance::for_side(1.0);
    let step = 360.0 / n as f64;
    let mut tiles = Vec::with_capacity((n * rings_u * rings_u) as usize);
    for k in 0..n {
        let a = Point::unit(k as f64 * step);
        let b = Point::unit((k + 1) as f64 * step);
        for i in 0..rings_u {
            for j in 0..rings_u {
                let p0 = a * i as f64 + b * j as f64;
                let id = tiles.len();
                tiles.push(RhombusTile::from_corners(id, [p0, p0 + a, p0 + a + b, p0 + b], &tol)?);
            }
        }
    }
    RhombicPatch::new(tiles, n, Point::ORIGIN, 1.0)
}
