//! Dual-grid (multigrid) generator for 5-, 8- and 12-fold rhombic patches.
//!
//! Grid `j` is the family of lines `x . e_j + offset = k`. Each crossing of
//! two lines from grids `r < s` dualizes to the rhombus spanned by `e_r`
//! and `e_s`, translated by `sum_j K_j e_j` where `K_j` counts the lines of
//! grid `j` below the crossing.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{PatchError, RhombicPatch, RhombusTile};
use crate::geom::{Point, Tolerance};

/// Distance to an integer below which a third grid line counts as
/// passing through a crossing.
const SINGULAR_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Rhombi of 72 and 36 degrees.
    Fivefold,
    /// Squares and 45 degree rhombi.
    Eightfold,
    /// Squares, 60 and 30 degree rhombi.
    Twelvefold,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Fivefold, Family::Eightfold, Family::Twelvefold];

    /// Unit normals of the grids.
    pub fn directions(self) -> Vec<Point> {
        let (m, step) = match self {
            Family::Fivefold => (5, 72.0),
            Family::Eightfold => (4, 45.0),
            Family::Twelvefold => (6, 30.0),
        };
        (0..m).map(|j| Point::unit(j as f64 * step)).collect()
    }

    pub fn default_offset(self) -> f64 {
        match self {
            Family::Fivefold => 0.29,
            Family::Eightfold | Family::Twelvefold => 0.5,
        }
    }

    /// A window giving 70 to 110 rhombi around the center.
    pub fn default_radius(self) -> f64 {
        match self {
            Family::Fivefold => 2.0,
            Family::Eightfold => 2.5,
            Family::Twelvefold => 1.6,
        }
    }

    pub fn symmetry_order(self) -> u32 {
        match self {
            Family::Fivefold => 5,
            Family::Eightfold => 8,
            Family::Twelvefold => 12,
        }
    }

    /// The acute angles a patch of this family contains.
    pub fn acute_angles(self) -> &'static [f64] {
        match self {
            Family::Fivefold => &[72.0, 36.0],
            Family::Eightfold => &[90.0, 45.0],
            Family::Twelvefold => &[90.0, 60.0, 30.0],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Fivefold => "fivefold",
            Family::Eightfold => "eightfold",
            Family::Twelvefold => "twelvefold",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fivefold" | "5" => Ok(Family::Fivefold),
            "eightfold" | "8" => Ok(Family::Eightfold),
            "twelvefold" | "12" => Ok(Family::Twelvefold),
            other => Err(format!(
                "unknown family '{other}' (expected fivefold, eightfold or twelvefold)"
            )),
        }
    }
}

struct Crossing {
    r: usize,
    s: usize,
    kr: i64,
    ks: i64,
}

/// Rhombic patch dual to all grid crossings within `window_radius` of the
/// origin. Tiles have unit side, are ordered by `(r, s, k_r, k_s)` and the
/// patch is symmetric about the origin.
pub fn multigrid_patch(
    family: Family,
    window_radius: f64,
    offset: f64,
) -> Result<RhombicPatch, PatchError> {
    if !(window_radius > 0.0 && window_radius.is_finite()) {
        return Err(PatchError::InvalidParameter(format!(
            "window radius must be positive, got {window_radius}"
        )));
    }
    if !(offset > 0.0 && offset < 1.0) {
        return Err(PatchError::InvalidParameter(format!(
            "offset must lie in (0, 1), got {offset}"
        )));
    }
    let dirs = family.directions();
    let m = dirs.len();
    let kmin = (-window_radius + offset).ceil() as i64;
    let kmax = (window_radius + offset).floor() as i64;

    let mut crossings = Vec::new();
    for r in 0..m {
        for s in (r + 1)..m {
            for kr in kmin..=kmax {
                for ks in kmin..=kmax {
                    crossings.push(Crossing { r, s, kr, ks });
                }
            }
        }
    }

    let tol = Tolerance::for_side(1.0);
    let tiles: Vec<Option<[Point; 4]>> = crossings
        .par_iter()
        .map(|c| dual_rhombus(&dirs, c, offset, window_radius))
        .collect::<Result<_, _>>()?;

    let mut out = Vec::new();
    for corners in tiles.into_iter().flatten() {
        let id = out.len();
        out.push(RhombusTile::from_corners(id, corners, &tol)?);
    }
    RhombicPatch::new(out, family.symmetry_order(), Point::ORIGIN, 1.0)
}

fn dual_rhombus(
    dirs: &[Point],
    c: &Crossing,
    offset: f64,
    radius: f64,
) -> Result<Option<[Point; 4]>, PatchError> {
    let (er, es) = (dirs[c.r], dirs[c.s]);
    let (br, bs) = (c.kr as f64 - offset, c.ks as f64 - offset);
    let det = er.cross(es);
    let x = Point::new((br * es.y - bs * er.y) / det, (er.x * bs - es.x * br) / det);
    if x.norm() > radius {
        return Ok(None);
    }
    let mut base = er * (c.kr - 1) as f64 + es * (c.ks - 1) as f64;
    for (j, &ej) in dirs.iter().enumerate() {
        if j == c.r || j == c.s {
            continue;
        }
        let t = x.dot(ej) + offset;
        if (t - t.round()).abs() < SINGULAR_EPS {
            return Err(PatchError::SingularGrid {
                grids: [c.r, c.s, j],
                x: x.x,
                y: x.y,
                suggested_offset: ((offset + 0.013) * 1000.0).round() / 1000.0,
            });
        }
        base += ej * t.floor();
    }
    Ok(Some([base, base + er, base + er + es, base + es]))
}
