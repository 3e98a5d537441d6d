use std::fmt;

use crate::design::{Design, Edge, Point, StitchSet};

/// The eight symmetries of the square, acting about the grid center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SquareSymmetry {
    Identity,
    /// Reflection in the vertical axis, `x -> W - x`.
    MirrorX,
    /// Reflection in the horizontal axis, `y -> H - y`.
    MirrorY,
    Rot180,
    /// Quarter turn counter-clockwise.
    Rot90,
    Rot270,
    /// Reflection in the main diagonal, `(x, y) -> (y, x)`.
    MirrorDiag,
    /// Reflection in the anti-diagonal.
    MirrorAnti,
}

impl SquareSymmetry {
    pub const ALL: [SquareSymmetry; 8] = [
        SquareSymmetry::Identity,
        SquareSymmetry::MirrorX,
        SquareSymmetry::MirrorY,
        SquareSymmetry::Rot180,
        SquareSymmetry::Rot90,
        SquareSymmetry::Rot270,
        SquareSymmetry::MirrorDiag,
        SquareSymmetry::MirrorAnti,
    ];

    /// Linear part acting on `(x, y)` column vectors.
    pub fn matrix(self) -> [[i64; 2]; 2] {
        use SquareSymmetry::*;
        match self {
            Identity => [[1, 0], [0, 1]],
            MirrorX => [[-1, 0], [0, 1]],
            MirrorY => [[1, 0], [0, -1]],
            Rot180 => [[-1, 0], [0, -1]],
            Rot90 => [[0, -1], [1, 0]],
            Rot270 => [[0, 1], [-1, 0]],
            MirrorDiag => [[0, 1], [1, 0]],
            MirrorAnti => [[0, -1], [-1, 0]],
        }
    }

    fn from_matrix(m: [[i64; 2]; 2]) -> SquareSymmetry {
        SquareSymmetry::ALL
            .into_iter()
            .find(|g| g.matrix() == m)
            .expect("product of square symmetries is a square symmetry")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: SquareSymmetry) -> SquareSymmetry {
        let a = self.matrix();
        let b = other.matrix();
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        SquareSymmetry::from_matrix(m)
    }

    /// Swaps the two axes (only meaningful on square grids as a symmetry).
    pub fn swaps_axes(self) -> bool {
        self.matrix()[0][0] == 0
    }

    pub fn name(self) -> &'static str {
        use SquareSymmetry::*;
        match self {
            Identity => "identity",
            MirrorX => "mirror-x",
            MirrorY => "mirror-y",
            Rot180 => "rot180",
            Rot90 => "rot90",
            Rot270 => "rot270",
            MirrorDiag => "mirror-diag",
            MirrorAnti => "mirror-anti",
        }
    }

    /// Image dimensions of a `width x height` grid.
    pub fn image_extent(self, width: u32, height: u32) -> (u32, u32) {
        if self.swaps_axes() {
            (height, width)
        } else {
            (width, height)
        }
    }

    /// Maps a lattice point of a `width x height` grid into the image grid.
    pub fn apply_point(self, p: Point, width: u32, height: u32) -> Point {
        let [[a, b], [c, d]] = self.matrix();
        let (w, h) = (width as i64, height as i64);
        let off_x = -((a * w).min(0) + (b * h).min(0));
        let off_y = -((c * w).min(0) + (d * h).min(0));
        let (x, y) = (p.x as i64, p.y as i64);
        Point::new(
            (a * x + b * y + off_x) as u32,
            (c * x + d * y + off_y) as u32,
        )
    }

    pub fn apply_edge(self, e: Edge, width: u32, height: u32) -> Edge {
        let (p, q) = e.endpoints();
        Edge::between(
            self.apply_point(p, width, height),
            self.apply_point(q, width, height),
        )
        .expect("isometries keep unit edges adjacent")
    }

    pub fn apply(self, set: &StitchSet) -> StitchSet {
        let (w, h) = (set.width(), set.height());
        let (iw, ih) = self.image_extent(w, h);
        StitchSet::from_edges(iw, ih, set.iter().map(|&e| self.apply_edge(e, w, h)))
            .expect("image of an in-bounds edge is in bounds")
    }
}

impl fmt::Display for SquareSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Applies `g` to the design's front stitches.
pub fn transform(design: &Design, g: SquareSymmetry) -> StitchSet {
    g.apply(design.front())
}

/// Finite point groups that can occur as subgroups of the square's symmetries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointGroup {
    C1,
    C2,
    C4,
    D1,
    D2,
    D4,
}

impl PointGroup {
    fn from_ops(ops: &[SquareSymmetry]) -> PointGroup {
        let has = |g| ops.contains(&g);
        match ops.len() {
            1 => PointGroup::C1,
            2 if has(SquareSymmetry::Rot180) => PointGroup::C2,
            2 => PointGroup::D1,
            4 if has(SquareSymmetry::Rot90) => PointGroup::C4,
            4 => PointGroup::D2,
            8 => PointGroup::D4,
            n => unreachable!("a subgroup of order {n} cannot occur in the square group"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PointGroup::C1 => "c1",
            PointGroup::C2 => "c2",
            PointGroup::C4 => "c4",
            PointGroup::D1 => "d1",
            PointGroup::D2 => "d2",
            PointGroup::D4 => "d4",
        }
    }
}

impl fmt::Display for PointGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    /// Symmetries fixing the front stitch set, in [`SquareSymmetry::ALL`] order.
    pub ops: Vec<SquareSymmetry>,
    pub point_group: PointGroup,
    pub row_period: usize,
    pub col_period: usize,
}

impl SymmetryReport {
    pub fn contains(&self, g: SquareSymmetry) -> bool {
        self.ops.contains(&g)
    }
}

pub fn detect_symmetry(design: &Design) -> SymmetryReport {
    let square = design.width() == design.height();
    let ops: Vec<SquareSymmetry> = SquareSymmetry::ALL
        .into_iter()
        .filter(|g| square || !g.swaps_axes())
        .filter(|&g| &transform(design, g) == design.front())
        .collect();
    SymmetryReport {
        point_group: PointGroup::from_ops(&ops),
        row_period: design.spec().rows.minimal_period(),
        col_period: design.spec().cols.minimal_period(),
        ops,
    }
}
