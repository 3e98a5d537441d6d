use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::design::{Design, Edge, Point};
use crate::{Error, Result};

/// Which horizontal (Left/Right) and vertical (Up/Down) edge meet at an
/// interior vertex. Read as a Truchet tile, each corner is a quarter arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    LU,
    LD,
    RU,
    RD,
}

impl Corner {
    fn from_sides(left: bool, up: bool) -> Corner {
        match (left, up) {
            (true, true) => Corner::LU,
            (true, false) => Corner::LD,
            (false, true) => Corner::RU,
            (false, false) => Corner::RD,
        }
    }

    pub fn horizontal_edge(self, p: Point) -> Edge {
        match self {
            Corner::LU | Corner::LD => Edge::h(p.x - 1, p.y),
            Corner::RU | Corner::RD => Edge::h(p.x, p.y),
        }
    }

    pub fn vertical_edge(self, p: Point) -> Edge {
        match self {
            Corner::LU | Corner::RU => Edge::v(p.x, p.y),
            Corner::LD | Corner::RD => Edge::v(p.x, p.y - 1),
        }
    }

    /// Box-drawing glyph for the corner.
    pub fn glyph(self) -> char {
        match self {
            Corner::LU => '┘',
            Corner::LD => '┐',
            Corner::RU => '└',
            Corner::RD => '┌',
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Corner::LU => "LU",
            Corner::LD => "LD",
            Corner::RU => "RU",
            Corner::RD => "RD",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerMap {
    pub width: u32,
    pub height: u32,
    pub corners: BTreeMap<Point, Corner>,
}

impl CornerMap {
    pub fn get(&self, p: Point) -> Option<Corner> {
        self.corners.get(&p).copied()
    }

    /// Groups the front edges into connected components, pairing the two
    /// edges at each interior vertex through its corner and joining whatever
    /// meets at boundary vertices.
    pub fn trace_components(&self, design: &Design) -> Vec<BTreeSet<Edge>> {
        let edges: Vec<Edge> = design.front().iter().copied().collect();
        let index: BTreeMap<Edge, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut parent: Vec<usize> = (0..edges.len()).collect();

        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };

        for (&p, &c) in &self.corners {
            let h = index[&c.horizontal_edge(p)];
            let v = index[&c.vertical_edge(p)];
            union(h, v, &mut parent);
        }
        let mut at_boundary: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            let (a, b) = e.endpoints();
            for p in [a, b] {
                if !self.corners.contains_key(&p) {
                    at_boundary.entry(p).or_default().push(i);
                }
            }
        }
        for group in at_boundary.values() {
            for w in group.windows(2) {
                union(w[0], w[1], &mut parent);
            }
        }

        let mut components: BTreeMap<usize, BTreeSet<Edge>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            let root = find(&mut parent, i);
            components.entry(root).or_default().insert(*e);
        }
        components.into_values().collect()
    }

    /// One row of corner glyphs per interior row, top first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for y in (1..self.height).rev() {
            for x in 1..self.width {
                out.push(self.corners[&Point::new(x, y)].glyph());
            }
            out.push('\n');
        }
        out
    }
}

/// Corner type of every interior vertex. Needs at least a 2x2 grid.
pub fn corner_map(design: &Design) -> Result<CornerMap> {
    let (w, h) = (design.width(), design.height());
    if w < 2 || h < 2 {
        return Err(Error::Dimension(format!(
            "a {w}x{h} grid has no interior vertex"
        )));
    }
    let mut corners = BTreeMap::new();
    for x in 1..w {
        for y in 1..h {
            let left = design.is_stitched(&Edge::h(x - 1, y));
            let right = design.is_stitched(&Edge::h(x, y));
            let up = design.is_stitched(&Edge::v(x, y));
            let down = design.is_stitched(&Edge::v(x, y - 1));
            if left == right || up == down {
                return Err(Error::Internal(format!(
                    "interior vertex ({x},{y}) breaks the degree law"
                )));
            }
            corners.insert(Point::new(x, y), Corner::from_sides(left, up));
        }
    }
    Ok(CornerMap {
        width: w,
        height: h,
        corners,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{build_design, DesignSpec};

    fn design(rows: &str, cols: &str) -> Design {
        build_design(&DesignSpec::parse_words(rows, cols).unwrap()).unwrap()
    }

    #[test]
    fn unit_grid_has_no_corners() {
        assert!(matches!(
            corner_map(&design("00", "00")),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn corner_follows_parities() {
        let d = design("0110", "1001");
        let map = corner_map(&d).unwrap();
        let spec = d.spec();
        for (p, c) in &map.corners {
            // Right edge stitched iff x + rows[y] even; up edge iff y + cols[x] even.
            let right = (p.x + spec.rows.bit(p.y as usize)).is_multiple_of(2);
            let up = (p.y + spec.cols.bit(p.x as usize)).is_multiple_of(2);
            assert_eq!(*c, Corner::from_sides(!right, up), "at {p}");
        }
    }

    #[test]
    fn text_has_one_glyph_per_interior_vertex() {
        let map = corner_map(&design("0000", "000")).unwrap();
        let text = map.to_text();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().all(|l| l.chars().count() == 1));
    }
}
