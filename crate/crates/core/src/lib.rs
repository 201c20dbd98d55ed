//! Pentagonal tilings derived from rotationally symmetric rhombic tilings.
//!
//! Every rhombus of acute angle `360/n` can be filled by a pair of congruent
//! pentagons from a two-parameter family. A patch of rhombi becomes a
//! pentagonal tiling once each rhombus is given a pair orientation
//! (which pair of opposite edges carries the outward-pointing `B` vertices)
//! and a chirality (the pair or its mirror image).
//!
//! - [`pentagon`] builds and classifies the shapes.
//! - [`rhombic`] generates patches (multigrid duals and wheels) and reads/writes them.
//! - [`subdivide`] refines each rhombus into `4u^2` similar copies.
//! - [`convert`] solves the orientations and places the pentagons.
//! - [`validate`] checks patches and tilings from coordinates alone.
//! - [`render`] writes SVG; [`cli`] wires everything into subcommands.

pub mod cli;
pub mod convert;
pub mod geom;
pub mod pentagon;
pub mod render;
pub mod rhombic;
pub mod subdivide;
pub mod validate;

pub use convert::{
    convert_patch, place_pair, solve_sides, ConvertError, PentagonalTiling, PlacedPentagon,
};
pub use geom::{apply_isometry, GeomError, Isometry, Point, Tolerance};
pub use pentagon::{build_shape, classify, PentagonShape, ShapeClass, ShapeError};
pub use rhombic::{multigrid_patch, wheel_patch, Family, PatchError, RhombicPatch, RhombusTile};
pub use subdivide::{subdivide_patch, Axis, Chirality, DivisionSpec, Side, SideAssignment};
pub use validate::{check_patch, full_check, ValidationReport};

use thiserror::Error;

/// Union of the module errors, for callers that do not care which stage failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Patch(#[from] PatchError),
    #[error(transparent)]
    Convert(#[from] ConvertError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
