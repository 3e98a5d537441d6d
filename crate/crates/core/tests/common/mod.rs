//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's geometry; designs are recomputed from the raw bits.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sashiko::prelude::*;

pub type Pt = (i64, i64);
/// An undirected unit segment with its endpoints in sorted order.
pub type Seg = (Pt, Pt);

pub fn seg(a: Pt, b: Pt) -> Seg {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn bits(word: &str) -> Vec<u32> {
    word.bytes().map(|b| (b - b'0') as u32).collect()
}

/// Front segments straight from the running-stitch rule: on a line with
/// phase bit b the stitches occupy the unit steps t with t + b even.
pub fn naive_front(rows: &str, cols: &str) -> BTreeSet<Seg> {
    let (r, c) = (bits(rows), bits(cols));
    let (w, h) = (c.len() as i64 - 1, r.len() as i64 - 1);
    let mut out = BTreeSet::new();
    for (y, &b) in r.iter().enumerate() {
        for x in 0..w {
            if (x as u32 + b).is_multiple_of(2) {
                out.insert(seg((x, y as i64), (x + 1, y as i64)));
            }
        }
    }
    for (x, &b) in c.iter().enumerate() {
        for y in 0..h {
            if (y as u32 + b).is_multiple_of(2) {
                out.insert(seg((x as i64, y), (x as i64, y + 1)));
            }
        }
    }
    out
}

pub fn all_segments(w: i64, h: i64) -> BTreeSet<Seg> {
    let mut out = BTreeSet::new();
    for y in 0..=h {
        for x in 0..w {
            out.insert(seg((x, y), (x + 1, y)));
        }
    }
    for x in 0..=w {
        for y in 0..h {
            out.insert(seg((x, y), (x, y + 1)));
        }
    }
    out
}

pub fn edge_seg(e: &Edge) -> Seg {
    let (a, b) = e.endpoints();
    seg((a.x as i64, a.y as i64), (b.x as i64, b.y as i64))
}

pub fn segs(set: &StitchSet) -> BTreeSet<Seg> {
    set.iter().map(edge_seg).collect()
}

pub fn degrees(front: &BTreeSet<Seg>) -> BTreeMap<Pt, usize> {
    let mut deg = BTreeMap::new();
    for &(a, b) in front {
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    deg
}

pub fn word(rng: &mut impl Rng, len: usize) -> String {
    (0..len)
        .map(|_| if rng.random_bool(0.5) { '1' } else { '0' })
        .collect()
}

/// `count` random (rows, cols) pairs with line counts in `lines`.
pub fn random_words(
    seed: u64,
    count: usize,
    lines: std::ops::RangeInclusive<usize>,
) -> Vec<(String, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(lines.clone());
            let m = rng.random_range(lines.clone());
            (word(&mut rng, n), word(&mut rng, m))
        })
        .collect()
}

pub fn all_words(len: usize) -> Vec<String> {
    (0..1u32 << len)
        .map(|i| {
            (0..len)
                .map(|k| {
                    if i >> (len - 1 - k) & 1 == 1 {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect()
        })
        .collect()
}

pub fn design(rows: &str, cols: &str) -> Design {
    build_design(&DesignSpec::parse_words(rows, cols).unwrap()).unwrap()
}

/// Cells strictly inside a closed lattice polygon, by casting a ray to the
/// right from each cell center and counting vertical crossings.
pub fn ray_cast_cells(boundary: &BTreeSet<Seg>) -> BTreeSet<(i64, i64)> {
    let verticals: Vec<Seg> = boundary
        .iter()
        .copied()
        .filter(|(a, b)| a.0 == b.0)
        .collect();
    let max_x = boundary.iter().map(|s| s.1 .0).max().unwrap_or(0);
    let max_y = boundary.iter().map(|s| s.1 .1).max().unwrap_or(0);
    let mut cells = BTreeSet::new();
    for cx in 0..max_x {
        for cy in 0..max_y {
            let crossings = verticals
                .iter()
                .filter(|(a, _)| a.0 > cx && a.1 == cy)
                .count();
            if crossings % 2 == 1 {
                cells.insert((cx, cy));
            }
        }
    }
    cells
}

/// Polygon area from an ordered vertex cycle.
pub fn shoelace(vertices: &[Pt]) -> i64 {
    let n = vertices.len();
    let twice: i64 = (0..n)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            a.0 * b.1 - b.0 * a.1
        })
        .sum();
    twice.abs() / 2
}

/// Connected components of a segment set (plain BFS over shared endpoints).
pub fn components(front: &BTreeSet<Seg>) -> Vec<BTreeSet<Seg>> {
    let mut by_point: BTreeMap<Pt, Vec<Seg>> = BTreeMap::new();
    for &s in front {
        by_point.entry(s.0).or_default().push(s);
        by_point.entry(s.1).or_default().push(s);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &s in front {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![s];
        while let Some(t) = stack.pop() {
            if !seen.insert(t) {
                continue;
            }
            comp.insert(t);
            for p in [t.0, t.1] {
                stack.extend(by_point[&p].iter().copied().filter(|u| !seen.contains(u)));
            }
        }
        out.push(comp);
    }
    out
}

/// `(loops, paths)` counted from components: a component is a loop when every
/// one of its points has degree 2.
pub fn naive_loop_path_counts(front: &BTreeSet<Seg>) -> (usize, usize) {
    let deg = degrees(front);
    let comps = components(front);
    let loops = comps
        .iter()
        .filter(|c| c.iter().all(|(a, b)| deg[a] == 2 && deg[b] == 2))
        .count();
    (loops, comps.len() - loops)
}

/// The image of a point under a named square symmetry of a `w x h` grid.
pub fn map_point(name: &str, p: Pt, w: i64, h: i64) -> Pt {
    let (x, y) = p;
    match name {
        "identity" => (x, y),
        "mirror-x" => (w - x, y),
        "mirror-y" => (x, h - y),
        "rot180" => (w - x, h - y),
        "rot90" => (h - y, x),
        "rot270" => (y, w - x),
        "mirror-diag" => (y, x),
        "mirror-anti" => (h - y, w - x),
        other => panic!("unknown symmetry {other}"),
    }
}

pub fn map_segments(name: &str, front: &BTreeSet<Seg>, w: i64, h: i64) -> BTreeSet<Seg> {
    front
        .iter()
        .map(|&(a, b)| seg(map_point(name, a, w, h), map_point(name, b, w, h)))
        .collect()
}

pub const SYMMETRY_NAMES: [&str; 8] = [
    "identity",
    "mirror-x",
    "mirror-y",
    "rot180",
    "rot90",
    "rot270",
    "mirror-diag",
    "mirror-anti",
];

pub fn swaps_axes(name: &str) -> bool {
    matches!(name, "rot90" | "rot270" | "mirror-diag" | "mirror-anti")
}

/// Checks that a decomposition partitions the front, that loops are simple
/// closed cycles and that paths are simple and end on the boundary.
pub fn check_decomposition(d: &Design, parts: &Decomposition) -> std::result::Result<(), String> {
    let (w, h) = (d.width() as i64, d.height() as i64);
    let front = segs(d.front());
    let mut covered: BTreeMap<Seg, usize> = BTreeMap::new();
    let on_boundary = |p: Pt| p.0 == 0 || p.1 == 0 || p.0 == w || p.1 == h;
    let pt = |p: &Point| (p.x as i64, p.y as i64);

    for (i, lp) in parts.loops.iter().enumerate() {
        let n = lp.edges.len();
        if n < 4 || lp.vertices.len() != n {
            return Err(format!(
                "loop {i}: {n} edges, {} vertices",
                lp.vertices.len()
            ));
        }
        let distinct: BTreeSet<Pt> = lp.vertices.iter().map(pt).collect();
        if distinct.len() != n {
            return Err(format!("loop {i} revisits a vertex"));
        }
        for k in 0..n {
            let expect = seg(pt(&lp.vertices[k]), pt(&lp.vertices[(k + 1) % n]));
            if edge_seg(&lp.edges[k]) != expect {
                return Err(format!("loop {i} is not a closed walk at step {k}"));
            }
        }
        for e in &lp.edges {
            *covered.entry(edge_seg(e)).or_insert(0) += 1;
        }
    }
    for (i, p) in parts.paths.iter().enumerate() {
        let n = p.edges.len();
        if n == 0 || p.vertices.len() != n + 1 {
            return Err(format!(
                "path {i}: {n} edges, {} vertices",
                p.vertices.len()
            ));
        }
        let distinct: BTreeSet<Pt> = p.vertices.iter().map(pt).collect();
        if distinct.len() != n + 1 {
            return Err(format!("path {i} revisits a vertex"));
        }
        for k in 0..n {
            let expect = seg(pt(&p.vertices[k]), pt(&p.vertices[k + 1]));
            if edge_seg(&p.edges[k]) != expect {
                return Err(format!("path {i} is not a walk at step {k}"));
            }
        }
        let (a, b) = (pt(&p.vertices[0]), pt(&p.vertices[n]));
        if !on_boundary(a) || !on_boundary(b) {
            return Err(format!(
                "path {i} runs from {a:?} to {b:?}, not boundary to boundary"
            ));
        }
        for e in &p.edges {
            *covered.entry(edge_seg(e)).or_insert(0) += 1;
        }
    }
    if let Some((s, c)) = covered.iter().find(|(_, &c)| c > 1) {
        return Err(format!("segment {s:?} used {c} times"));
    }
    let used: BTreeSet<Seg> = covered.keys().copied().collect();
    if used != front {
        return Err(format!(
            "components cover {} segments, front has {}",
            used.len(),
            front.len()
        ));
    }
    Ok(())
}
