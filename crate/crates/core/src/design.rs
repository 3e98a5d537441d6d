//! Hitomezashi designs as pairs of binary phase words.
//!
//! Parity convention: on a line with bit `b`, the unit edge starting at
//! coordinate `t` is stitched on the front iff `t + b` is even. A `0` bit
//! therefore puts the line's first stitch (at coordinate 0) on the front and a
//! `1` bit puts it on the back. Flipping every bit gives the reverse side.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// A lattice point in thread units, origin bottom-left, `y` upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

impl Point {
    pub const fn new(x: u32, y: u32) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Ordered, non-empty sequence of phase bits. Index 0 is the bottom row or the
/// leftmost column.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    bits: Vec<bool>,
}

impl BitWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::BitWord {
                word: String::new(),
                reason: "word must contain at least one bit".into(),
            });
        }
        Ok(BitWord { bits })
    }

    /// Parses a string of `0`/`1` characters, leftmost character first.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::BitWord {
                    word: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        BitWord::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The bit at `i` as 0 or 1.
    pub fn bit(&self, i: usize) -> u32 {
        self.bits[i] as u32
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn flipped(&self) -> BitWord {
        BitWord {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Smallest `p >= 1` with `bits[i] == bits[i + p]` for every valid `i`.
    /// Equals the length when the word has no shorter repetition.
    pub fn minimal_period(&self) -> usize {
        let n = self.bits.len();
        (1..=n)
            .find(|&p| (0..n - p).all(|i| self.bits[i] == self.bits[i + p]))
            .unwrap_or(n)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The complete genome of a hitomezashi design.
///
/// `rows` has one bit per horizontal stitch line (`y = 0..=H`), `cols` one bit
/// per vertical stitch line (`x = 0..=W`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DesignSpec {
    pub rows: BitWord,
    pub cols: BitWord,
}

impl DesignSpec {
    pub fn new(rows: BitWord, cols: BitWord) -> Self {
        DesignSpec { rows, cols }
    }

    pub fn parse_words(rows: &str, cols: &str) -> Result<Self> {
        Ok(DesignSpec {
            rows: BitWord::parse(rows)?,
            cols: BitWord::parse(cols)?,
        })
    }

    /// Grid width `W` in cells.
    pub fn width(&self) -> u32 {
        self.cols.len().saturating_sub(1) as u32
    }

    /// Grid height `H` in cells.
    pub fn height(&self) -> u32 {
        self.rows.len().saturating_sub(1) as u32
    }

    pub fn flipped(&self) -> DesignSpec {
        DesignSpec {
            rows: self.rows.flipped(),
            cols: self.cols.flipped(),
        }
    }

    /// Parses the line-oriented pattern format:
    ///
    /// ```text
    /// # comment
    /// rows=0011
    /// cols=0101
    /// ```
    ///
    /// Keys may appear in either order; each must appear exactly once.
    pub fn from_pattern_text(text: &str) -> Result<Self> {
        let mut rows = None;
        let mut cols = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Pattern {
                line: line_no,
                message: format!("expected key=value, found {line:?}"),
            })?;
            let slot = match key.trim() {
                "rows" => &mut rows,
                "cols" => &mut cols,
                other => {
                    return Err(Error::Pattern {
                        line: line_no,
                        message: format!("unknown key {other:?}"),
                    })
                }
            };
            if slot.is_some() {
                return Err(Error::Pattern {
                    line: line_no,
                    message: format!("duplicate key {:?}", key.trim()),
                });
            }
            let word = BitWord::parse(value.trim()).map_err(|e| Error::Pattern {
                line: line_no,
                message: e.to_string(),
            })?;
            *slot = Some(word);
        }
        let last = text.lines().count().max(1);
        let missing = |key: &str| Error::Pattern {
            line: last,
            message: format!("missing required key {key:?}"),
        };
        Ok(DesignSpec {
            rows: rows.ok_or_else(|| missing("rows"))?,
            cols: cols.ok_or_else(|| missing("cols"))?,
        })
    }

    pub fn to_pattern_text(&self) -> String {
        format!("rows={}\ncols={}\n", self.rows, self.cols)
    }
}

impl fmt::Display for DesignSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows={} cols={}", self.rows, self.cols)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// Spans `(x, y)`–`(x + 1, y)`.
    H,
    /// Spans `(x, y)`–`(x, y + 1)`.
    V,
}

/// A unit lattice edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub orientation: Orientation,
    pub x: u32,
    pub y: u32,
}

impl Edge {
    pub const fn h(x: u32, y: u32) -> Self {
        Edge {
            orientation: Orientation::H,
            x,
            y,
        }
    }

    pub const fn v(x: u32, y: u32) -> Self {
        Edge {
            orientation: Orientation::V,
            x,
            y,
        }
    }

    pub fn endpoints(&self) -> (Point, Point) {
        let a = Point::new(self.x, self.y);
        let b = match self.orientation {
            Orientation::H => Point::new(self.x + 1, self.y),
            Orientation::V => Point::new(self.x, self.y + 1),
        };
        (a, b)
    }

    /// The edge joining two lattice-adjacent points.
    pub fn between(a: Point, b: Point) -> Option<Edge> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if lo.y == hi.y && hi.x == lo.x + 1 {
            Some(Edge::h(lo.x, lo.y))
        } else if lo.x == hi.x && hi.y == lo.y + 1 {
            Some(Edge::v(lo.x, lo.y))
        } else {
            None
        }
    }

    pub fn within(&self, width: u32, height: u32) -> bool {
        match self.orientation {
            Orientation::H => self.x < width && self.y <= height,
            Orientation::V => self.x <= width && self.y < height,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::H => 'H',
            Orientation::V => 'V',
        };
        write!(f, "{o}({},{})", self.x, self.y)
    }
}

/// A set of unit edges on a `width x height` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StitchSet {
    edges: BTreeSet<Edge>,
    width: u32,
    height: u32,
}

impl StitchSet {
    pub fn empty(width: u32, height: u32) -> Self {
        StitchSet {
            edges: BTreeSet::new(),
            width,
            height,
        }
    }

    /// Builds a set, rejecting edges outside the grid.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(
        width: u32,
        height: u32,
        edges: I,
    ) -> Result<Self> {
        let mut set = StitchSet::empty(width, height);
        for e in edges {
            if !e.within(width, height) {
                return Err(Error::Dimension(format!(
                    "edge {e} lies outside a {width}x{height} grid"
                )));
            }
            set.edges.insert(e);
        }
        Ok(set)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    /// Edges in sorted order (all `H` edges first, then `V`, each by `x` then `y`).
    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn count(&self, orientation: Orientation) -> usize {
        self.edges
            .iter()
            .filter(|e| e.orientation == orientation)
            .count()
    }

    pub fn filter(&self, orientation: Orientation) -> StitchSet {
        StitchSet {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| e.orientation == orientation)
                .collect(),
            width: self.width,
            height: self.height,
        }
    }

    /// Reflects every edge through the vertical axis `x -> W - x`.
    pub fn mirrored_x(&self) -> StitchSet {
        let w = self.width;
        StitchSet {
            edges: self
                .edges
                .iter()
                .map(|e| match e.orientation {
                    Orientation::H => Edge::h(w - 1 - e.x, e.y),
                    Orientation::V => Edge::v(w - e.x, e.y),
                })
                .collect(),
            width: self.width,
            height: self.height,
        }
    }
}

impl<'a> IntoIterator for &'a StitchSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// A built design: its spec and the front stitch set derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    spec: DesignSpec,
    front: StitchSet,
}

impl Design {
    pub fn spec(&self) -> &DesignSpec {
        &self.spec
    }

    pub fn front(&self) -> &StitchSet {
        &self.front
    }

    pub fn width(&self) -> u32 {
        self.front.width
    }

    pub fn height(&self) -> u32 {
        self.front.height
    }

    /// Parity-rule lookup, equivalent to `front().contains(e)` for in-bounds edges.
    pub fn is_stitched(&self, e: &Edge) -> bool {
        e.within(self.width(), self.height()) && stitched(&self.spec, e)
    }
}

fn stitched(spec: &DesignSpec, e: &Edge) -> bool {
    match e.orientation {
        Orientation::H => (e.x + spec.rows.bit(e.y as usize)).is_multiple_of(2),
        Orientation::V => (e.y + spec.cols.bit(e.x as usize)).is_multiple_of(2),
    }
}

/// Pattern file of the ten-cross design: plus-shaped loops on the front.
pub const JUJIZASHI_PATTERN: &str = include_str!("../patterns/jujizashi.pattern");

/// The bundled ten-cross spec.
pub fn jujizashi() -> DesignSpec {
    DesignSpec::from_pattern_text(JUJIZASHI_PATTERN).expect("bundled pattern parses")
}

/// Builds the front stitch set of a spec.
pub fn build_design(spec: &DesignSpec) -> Result<Design> {
    if spec.rows.len() < 2 || spec.cols.len() < 2 {
        return Err(Error::Dimension(format!(
            "need at least 2 rows and 2 cols to form a cell, got {} rows and {} cols",
            spec.rows.len(),
            spec.cols.len()
        )));
    }
    let (w, h) = (spec.width(), spec.height());
    let horizontal = (0..=h).flat_map(|y| (0..w).map(move |x| Edge::h(x, y)));
    let vertical = (0..=w).flat_map(|x| (0..h).map(move |y| Edge::v(x, y)));
    let edges = horizontal
        .chain(vertical)
        .filter(|e| stitched(spec, e))
        .collect();
    Ok(Design {
        spec: spec.clone(),
        front: StitchSet {
            edges,
            width: w,
            height: h,
        },
    })
}

/// The design seen from the reverse side: every phase bit flipped, no mirroring.
pub fn back_of(design: &Design) -> Design {
    build_design(&design.spec.flipped()).expect("flipping bits preserves dimensions")
}

/// Number of distinct designs with `m` vertical and `n` horizontal lines,
/// `2^(m+n)`. Fails when `m + n > 63`.
pub fn design_count(m: usize, n: usize) -> Result<u64> {
    if m < 2 || n < 2 {
        return Err(Error::Dimension(format!(
            "need m >= 2 and n >= 2, got m={m}, n={n}"
        )));
    }
    let exp = m + n;
    if exp > 63 {
        return Err(Error::Overflow(format!(
            "2^{exp} does not fit in 64 bits (m + n must be at most 63)"
        )));
    }
    Ok(1u64 << exp)
}

/// Stitching stage: which direction has been worked so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Stage {
    VerticalOnly,
    HorizontalOnly,
    #[default]
    Combined,
}

pub fn stitch_stage(design: &Design, stage: Stage) -> StitchSet {
    match stage {
        Stage::VerticalOnly => design.front.filter(Orientation::V),
        Stage::HorizontalOnly => design.front.filter(Orientation::H),
        Stage::Combined => design.front.clone(),
    }
}
