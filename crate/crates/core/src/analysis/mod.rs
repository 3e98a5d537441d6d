//! Structure of a design's stitch graph.
//!
//! Inside the grid every lattice point touches exactly one stitched horizontal
//! edge and one stitched vertical edge, so the front stitches split cleanly
//! into closed loops and stepped paths that run from boundary to boundary.
//! Loops enclose polyominoes and nest inside one another.

mod corners;
mod decompose;
mod polyomino;
mod stats;
mod symmetry;

pub use corners::{corner_map, Corner, CornerMap};
pub use decompose::{decompose, polyomino_of, Decomposition, Loop, Path};
pub(crate) use polyomino::enclosed_cells;
pub use polyomino::Polyomino;
pub use stats::{stats, StatsRecord, CSV_HEADER};
pub use symmetry::{detect_symmetry, transform, PointGroup, SquareSymmetry, SymmetryReport};
