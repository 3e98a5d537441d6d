use std::collections::BTreeSet;

use super::polyomino::{enclosed_cells, Polyomino};
use crate::design::{Design, Edge, Orientation, Point};
use crate::{Error, Result};

/// A closed stitch loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    /// Cyclic edge order, starting at the lexicographically smallest vertex
    /// and leaving it along its horizontal edge.
    pub edges: Vec<Edge>,
    /// `vertices[i]` is the start of `edges[i]`.
    pub vertices: Vec<Point>,
    pub area: usize,
    pub polyomino: Polyomino,
    cells: BTreeSet<(u32, u32)>,
}

impl Loop {
    /// Enclosed cells in grid coordinates (not translated).
    pub fn cells(&self) -> &BTreeSet<(u32, u32)> {
        &self.cells
    }

    pub fn min_vertex(&self) -> Point {
        self.vertices[0]
    }
}

/// A stepped line of stitches running from one grid boundary point to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub edges: Vec<Edge>,
    /// `edges.len() + 1` vertices from the smaller endpoint to the larger.
    pub vertices: Vec<Point>,
    pub endpoints: (Point, Point),
}

impl Path {
    pub fn min_vertex(&self) -> Point {
        *self.vertices.iter().min().expect("paths have vertices")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub loops: Vec<Loop>,
    pub paths: Vec<Path>,
    /// `nesting[i]` is the smallest loop strictly enclosing loop `i`.
    pub nesting: Vec<Option<usize>>,
}

impl Decomposition {
    /// 1 for an outermost loop.
    pub fn depth(&self, loop_index: usize) -> usize {
        let mut depth = 1;
        let mut cur = loop_index;
        while let Some(parent) = self.nesting[cur] {
            depth += 1;
            cur = parent;
        }
        depth
    }

    /// Deepest loop nesting; 0 when there are no loops.
    pub fn max_depth(&self) -> usize {
        (0..self.loops.len())
            .map(|i| self.depth(i))
            .max()
            .unwrap_or(0)
    }

    pub fn children(&self, loop_index: usize) -> impl Iterator<Item = usize> + '_ {
        self.nesting
            .iter()
            .enumerate()
            .filter(move |(_, p)| **p == Some(loop_index))
            .map(|(i, _)| i)
    }

    pub fn edge_count(&self) -> usize {
        self.loops.iter().map(|l| l.edges.len()).sum::<usize>()
            + self.paths.iter().map(|p| p.edges.len()).sum::<usize>()
    }
}

/// Incident front edges of every lattice vertex, plus a visited flag per edge.
struct StitchGraph {
    width: u32,
    height: u32,
    incident: Vec<Vec<Edge>>,
}

impl StitchGraph {
    fn new(design: &Design) -> Result<Self> {
        let (w, h) = (design.width(), design.height());
        let mut g = StitchGraph {
            width: w,
            height: h,
            incident: vec![Vec::with_capacity(2); ((w + 1) * (h + 1)) as usize],
        };
        for e in design.front() {
            let (a, b) = e.endpoints();
            let (ia, ib) = (g.vertex_index(a), g.vertex_index(b));
            g.incident[ia].push(*e);
            g.incident[ib].push(*e);
        }
        for x in 0..=w {
            for y in 0..=h {
                let p = Point::new(x, y);
                let degree = g.incident_at(p).len();
                let interior = x > 0 && x < w && y > 0 && y < h;
                if (interior && degree != 2) || degree > 2 {
                    return Err(Error::Internal(format!(
                        "vertex {p} has front degree {degree}"
                    )));
                }
            }
        }
        Ok(g)
    }

    fn vertex_index(&self, p: Point) -> usize {
        (p.x * (self.height + 1) + p.y) as usize
    }

    fn edge_index(&self, e: &Edge) -> usize {
        let (w, h) = (self.width, self.height);
        match e.orientation {
            Orientation::H => (e.y * w + e.x) as usize,
            Orientation::V => ((h + 1) * w + e.x * h + e.y) as usize,
        }
    }

    fn edge_slots(&self) -> usize {
        let (w, h) = (self.width, self.height);
        ((h + 1) * w + (w + 1) * h) as usize
    }

    fn incident_at(&self, p: Point) -> &[Edge] {
        &self.incident[self.vertex_index(p)]
    }

    /// Vertices in lexicographic `(x, y)` order.
    fn vertices(&self) -> impl Iterator<Item = Point> {
        let h = self.height;
        (0..=self.width).flat_map(move |x| (0..=h).map(move |y| Point::new(x, y)))
    }

    /// Follows stitches from `start` along `first` until a dead end or until
    /// `start` comes round again.
    fn walk(&self, start: Point, first: Edge, used: &mut [bool]) -> (Vec<Edge>, Vec<Point>) {
        let mut edges = Vec::new();
        let mut vertices = vec![start];
        let mut at = start;
        let mut edge = first;
        loop {
            used[self.edge_index(&edge)] = true;
            edges.push(edge);
            let (a, b) = edge.endpoints();
            at = if a == at { b } else { a };
            if at == start {
                break;
            }
            vertices.push(at);
            match self
                .incident_at(at)
                .iter()
                .find(|e| !used[self.edge_index(e)])
            {
                Some(next) => edge = *next,
                None => break,
            }
        }
        (edges, vertices)
    }
}

/// Splits the front stitches into closed loops and boundary-to-boundary paths.
///
/// Loops and paths are each ordered by their lexicographically smallest vertex.
pub fn decompose(design: &Design) -> Result<Decomposition> {
    let graph = StitchGraph::new(design)?;
    let mut used = vec![false; graph.edge_slots()];

    let mut paths = Vec::new();
    for p in graph.vertices() {
        let inc = graph.incident_at(p);
        if inc.len() == 1 && !used[graph.edge_index(&inc[0])] {
            let (edges, vertices) = graph.walk(p, inc[0], &mut used);
            let end = *vertices.last().expect("walk visits at least one vertex");
            if !on_boundary(end, graph.width, graph.height)
                || !on_boundary(p, graph.width, graph.height)
            {
                return Err(Error::Internal(format!(
                    "path from {p} to {end} does not end on the boundary"
                )));
            }
            paths.push(Path {
                edges,
                vertices,
                endpoints: (p, end),
            });
        }
    }

    let mut loops = Vec::new();
    for p in graph.vertices() {
        let inc = graph.incident_at(p);
        if inc.len() == 2 && !used[graph.edge_index(&inc[0])] {
            // p is the smallest vertex of its loop, so its edges go right and up.
            let first = *inc
                .iter()
                .find(|e| e.orientation == Orientation::H)
                .ok_or_else(|| {
                    Error::Internal(format!("loop corner {p} lacks a horizontal edge"))
                })?;
            let (edges, vertices) = graph.walk(p, first, &mut used);
            let closes = edges
                .last()
                .map(|e| {
                    let (a, b) = e.endpoints();
                    a == p || b == p
                })
                .unwrap_or(false);
            if !closes || edges.len() < 4 {
                return Err(Error::Internal(format!(
                    "component at {p} is not a closed loop"
                )));
            }
            loops.push(build_loop(edges, vertices));
        }
    }

    paths.sort_by_key(Path::min_vertex);
    let nesting = nesting_forest(&loops);
    Ok(Decomposition {
        loops,
        paths,
        nesting,
    })
}

fn on_boundary(p: Point, width: u32, height: u32) -> bool {
    p.x == 0 || p.y == 0 || p.x == width || p.y == height
}

fn loop_cells(edges: &[Edge]) -> BTreeSet<(u32, u32)> {
    enclosed_cells(
        edges
            .iter()
            .filter(|e| e.orientation == Orientation::H)
            .map(|e| (e.x as i64, e.y as i64)),
    )
    .into_iter()
    .map(|(x, y)| (x as u32, y as u32))
    .collect()
}

fn build_loop(edges: Vec<Edge>, vertices: Vec<Point>) -> Loop {
    let cells = loop_cells(&edges);
    Loop {
        area: cells.len(),
        polyomino: Polyomino::from_cells(cells.iter().map(|&(x, y)| (x as i64, y as i64))),
        cells,
        edges,
        vertices,
    }
}

fn nesting_forest(loops: &[Loop]) -> Vec<Option<usize>> {
    loops
        .iter()
        .enumerate()
        .map(|(i, inner)| {
            loops
                .iter()
                .enumerate()
                .filter(|&(j, outer)| {
                    j != i && outer.area > inner.area && inner.cells.is_subset(&outer.cells)
                })
                .min_by_key(|(_, outer)| outer.area)
                .map(|(j, _)| j)
        })
        .collect()
}

/// The region enclosed by a loop, translated to canonical position.
pub fn polyomino_of(lp: &Loop) -> Polyomino {
    Polyomino::from_cells(
        loop_cells(&lp.edges)
            .into_iter()
            .map(|(x, y)| (x as i64, y as i64)),
    )
}
