//! # sashiko
//!
//! Synthesis and analysis of grid-based sashiko needlework.
//!
//! A *hitomezashi* design is fully determined by two binary phase words: one
//! bit per horizontal stitch line and one per vertical stitch line. Each bit
//! says whether the line's first stitch sits on the front or the back of the
//! fabric; running stitch then forces every later stitch on that line. This
//! crate builds the resulting stitch sets, derives the reverse-side dual,
//! splits the stitch graph into loops and edge-to-edge paths, extracts the
//! polyominoes those loops enclose, detects square symmetries and renders
//! everything to SVG or ASCII.
//!
//! It also covers two related constructions:
//!
//! - Fibonacci snowflakes, closed lattice paths built from Fibonacci turn
//!   words, whose outlines are four times an odd Fibonacci number long.
//! - Counted-thread *kogin* and *hishi* charts: rows of horizontal runs with
//!   odd (kogin) or even (hishi) thread counts, with a small motif library.
//!
//! ## Coordinates
//!
//! Everything is measured in thread units. The origin is the bottom-left
//! lattice point and `y` grows upward. A design with `W + 1` vertical lines and
//! `H + 1` horizontal lines covers `W x H` unit cells.
//!
//! ## Quick start
//!
//! ```
//! use sashiko::prelude::*;
//!
//! let spec = DesignSpec::parse_words("001100110", "001100110")?;
//! let design = build_design(&spec)?;
//! let parts = decompose(&design)?;
//! assert!(parts.loops.iter().any(|l| l.polyomino == Polyomino::plus()));
//! # Ok::<(), sashiko::Error>(())
//! ```
//!
//! Runnable examples for each capability live in `examples/`:
//!
//! ```bash
//! cargo run --example decompose_loops
//! ```

pub mod analysis;
pub mod cli;
pub mod design;
pub mod enumerate;
mod error;
pub mod kogin;
pub mod render;
pub mod snowflake;

pub use error::{Error, Result};

/// Commonly used types and operations.
pub mod prelude {
    pub use crate::analysis::{
        corner_map, decompose, detect_symmetry, polyomino_of, stats, transform, Corner, CornerMap,
        Decomposition, Loop, Path, PointGroup, Polyomino, SquareSymmetry, StatsRecord,
        SymmetryReport,
    };
    pub use crate::design::{
        back_of, build_design, design_count, jujizashi, stitch_stage, BitWord, Design, DesignSpec,
        Edge, Orientation, Point, Stage, StitchSet,
    };
    pub use crate::enumerate::{
        census, enumerate_designs, find_designs_containing, CensusMode, CensusTable, ShapeMatch,
    };
    pub use crate::kogin::{motif, parse_chart, validate, KoginChart, ParityMode, Strictness};
    pub use crate::render::{
        render_chart_svg, render_design_ascii, render_design_svg, RenderOptions, Side,
    };
    pub use crate::snowflake::{
        build_snowflake, is_snowflake, odd_fibonacci, turn_word, Snowflake,
    };
    pub use crate::{Error, Result};
}
