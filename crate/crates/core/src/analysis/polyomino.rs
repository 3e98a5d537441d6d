use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::symmetry::SquareSymmetry;
use crate::{Error, Result};

/// A set of unit cells translated so the minimum `x` and `y` are both zero.
///
/// Cell `(cx, cy)` is the unit square with lower-left corner `(cx, cy)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polyomino {
    cells: BTreeSet<(u32, u32)>,
}

impl Polyomino {
    /// Canonicalizes an arbitrary cell set by translation.
    pub fn from_cells<I>(cells: I) -> Polyomino
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let raw: Vec<(i64, i64)> = cells.into_iter().collect();
        let min_x = raw.iter().map(|c| c.0).min().unwrap_or(0);
        let min_y = raw.iter().map(|c| c.1).min().unwrap_or(0);
        Polyomino {
            cells: raw
                .into_iter()
                .map(|(x, y)| ((x - min_x) as u32, (y - min_y) as u32))
                .collect(),
        }
    }

    pub fn monomino() -> Polyomino {
        Polyomino::from_cells([(0, 0)])
    }

    /// The plus-shaped pentomino: five cells in rows of 1, 3, 1.
    pub fn plus() -> Polyomino {
        Polyomino::from_cells([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
    }

    /// Parses `x,y;x,y;...` cell lists.
    pub fn parse_cells(s: &str) -> Result<Polyomino> {
        let bad = |msg: String| Error::BitWord {
            word: s.to_string(),
            reason: msg,
        };
        let mut cells = Vec::new();
        for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (x, y) = item
                .split_once(',')
                .ok_or_else(|| bad(format!("cell {item:?} is not x,y")))?;
            let x: i64 = x
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad x in {item:?}")))?;
            let y: i64 = y
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad y in {item:?}")))?;
            cells.push((x, y));
        }
        if cells.is_empty() {
            return Err(bad("no cells given".into()));
        }
        Ok(Polyomino::from_cells(cells))
    }

    pub fn cells(&self) -> &BTreeSet<(u32, u32)> {
        &self.cells
    }

    pub fn area(&self) -> usize {
        self.cells.len()
    }

    /// Bounding box `(width, height)` in cells.
    pub fn extent(&self) -> (u32, u32) {
        let w = self.cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
        let h = self.cells.iter().map(|c| c.1 + 1).max().unwrap_or(0);
        (w, h)
    }

    /// Cell count per row, top row first.
    pub fn row_profile(&self) -> Vec<usize> {
        let (_, h) = self.extent();
        (0..h)
            .rev()
            .map(|y| self.cells.iter().filter(|c| c.1 == y).count())
            .collect()
    }

    pub fn is_edge_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            let around = [
                (x.wrapping_sub(1), y),
                (x + 1, y),
                (x, y.wrapping_sub(1)),
                (x, y + 1),
            ];
            for n in around {
                if self.cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    pub fn transformed(&self, g: SquareSymmetry) -> Polyomino {
        let [[a, b], [c, d]] = g.matrix();
        // Cell centers sit at half-integers; work in doubled coordinates.
        Polyomino::from_cells(self.cells.iter().map(|&(x, y)| {
            let (x2, y2) = (2 * x as i64 + 1, 2 * y as i64 + 1);
            let (tx, ty) = (a * x2 + b * y2, c * x2 + d * y2);
            ((tx - 1).div_euclid(2), (ty - 1).div_euclid(2))
        }))
    }

    /// Representative of the orbit under all eight square symmetries.
    pub fn symmetric_canonical(&self) -> Polyomino {
        SquareSymmetry::ALL
            .iter()
            .map(|&g| self.transformed(g))
            .min()
            .expect("eight candidates")
    }

    pub fn congruent(&self, other: &Polyomino) -> bool {
        self.area() == other.area() && self.symmetric_canonical() == other.symmetric_canonical()
    }

    /// `#`/`.` picture, top row first.
    pub fn to_text(&self) -> String {
        let (w, h) = self.extent();
        let mut out = String::new();
        for y in (0..h).rev() {
            for x in 0..w {
                out.push(if self.cells.contains(&(x, y)) {
                    '#'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|(x, y)| format!("{x},{y}")).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Cells enclosed by a closed rectilinear curve, given the curve's horizontal
/// unit edges as their left endpoints. Scans each column bottom to top and
/// pairs up the crossings.
pub(crate) fn enclosed_cells<I>(horizontal_edges: I) -> BTreeSet<(i64, i64)>
where
    I: IntoIterator<Item = (i64, i64)>,
{
    let mut columns: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for (x, y) in horizontal_edges {
        columns.entry(x).or_default().push(y);
    }
    let mut cells = BTreeSet::new();
    for (x, mut ys) in columns {
        ys.sort_unstable();
        for pair in ys.chunks_exact(2) {
            cells.extend((pair[0]..pair[1]).map(|y| (x, y)));
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_profile_is_one_three_one() {
        let p = Polyomino::plus();
        assert_eq!(p.area(), 5);
        assert_eq!(p.row_profile(), vec![1, 3, 1]);
        assert!(p.is_edge_connected());
        assert_eq!(p.to_text(), ".#.\n###\n.#.\n");
    }

    #[test]
    fn translation_is_canonical() {
        let a = Polyomino::from_cells([(5, 7), (6, 7)]);
        let b = Polyomino::from_cells([(-3, 0), (-2, 0)]);
        assert_eq!(a, b);
        assert_eq!(
            a.cells().iter().copied().collect::<Vec<_>>(),
            vec![(0, 0), (1, 0)]
        );
    }

    #[test]
    fn symmetric_canonical_identifies_rotations() {
        let l = Polyomino::from_cells([(0, 0), (0, 1), (0, 2), (1, 0)]);
        for g in SquareSymmetry::ALL {
            let t = l.transformed(g);
            assert_eq!(t.area(), 4);
            assert!(t.congruent(&l));
        }
        let domino_h = Polyomino::from_cells([(0, 0), (1, 0)]);
        let domino_v = Polyomino::from_cells([(0, 0), (0, 1)]);
        assert_ne!(domino_h, domino_v);
        assert!(domino_h.congruent(&domino_v));
        assert!(!domino_h.congruent(&Polyomino::monomino()));
    }

    #[test]
    fn disconnected_cells_are_detected() {
        assert!(!Polyomino::from_cells([(0, 0), (1, 1)]).is_edge_connected());
    }

    #[test]
    fn parse_cells_round_trips() {
        let p = Polyomino::plus();
        assert_eq!(Polyomino::parse_cells(&p.to_string()).unwrap(), p);
        assert!(Polyomino::parse_cells("").is_err());
        assert!(Polyomino::parse_cells("1;2").is_err());
    }

    #[test]
    fn column_scan_fills_a_square() {
        let cells = enclosed_cells([(0, 0), (1, 0), (0, 2), (1, 2)]);
        assert_eq!(cells.len(), 4);
    }
}
