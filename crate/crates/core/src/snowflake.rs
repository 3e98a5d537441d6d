//! Fibonacci snowflakes.
//!
//! Turn words over `{L, R}` follow
//!
//! ```text
//! q0 = ε,  q1 = R,
//! qn = q(n-1) q(n-2)        if n ≡ 2 (mod 3)
//! qn = q(n-1) swap(q(n-2))  otherwise
//! ```
//!
//! so `|qn|` is the n-th Fibonacci number. A snowflake boundary walks the word
//! four times: starting at the origin heading east, each letter is one unit
//! step followed by a quarter turn. The snowflake of order `k` uses the word
//! whose length is the k-th distinct odd Fibonacci number (1, 3, 5, 13, 21,
//! ...), so its outline has `4 * odd_fibonacci(k)` unit steps.
//!
//! Not every order yields a simple curve. Every construction is checked
//! (closed, self-avoiding, perimeter, and the known shapes at orders 0 and 1)
//! and orders that fail are reported as errors instead of being returned.

use std::collections::HashSet;
use std::fmt;

use crate::analysis::{enclosed_cells, Polyomino};
use crate::design::{Edge, StitchSet};
use crate::{Error, Result};

/// Largest order [`build_snowflake`] will attempt.
pub const MAX_ORDER: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    L,
    R,
}

impl Turn {
    pub fn swapped(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnWord {
    pub index: usize,
    pub letters: Vec<Turn>,
}

impl TurnWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exchanges `L` and `R`.
    pub fn swapped(&self) -> TurnWord {
        TurnWord {
            index: self.index,
            letters: self.letters.iter().map(|t| t.swapped()).collect(),
        }
    }
}

impl fmt::Display for TurnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.letters {
            f.write_str(match t {
                Turn::L => "L",
                Turn::R => "R",
            })?;
        }
        Ok(())
    }
}

pub fn turn_word(n: usize) -> TurnWord {
    let mut prev: Vec<Turn> = Vec::new();
    let mut cur: Vec<Turn> = vec![Turn::R];
    if n == 0 {
        return TurnWord {
            index: 0,
            letters: prev,
        };
    }
    for i in 2..=n {
        let mut next = cur.clone();
        if i % 3 == 2 {
            next.extend_from_slice(&prev);
        } else {
            next.extend(prev.iter().map(|t| t.swapped()));
        }
        prev = std::mem::replace(&mut cur, next);
    }
    TurnWord {
        index: n,
        letters: cur,
    }
}

/// `(n, F_n)` for the k-th distinct odd Fibonacci number, `F_1 = F_2 = 1`.
fn odd_fibonacci_entry(k: u32) -> Result<(usize, u64)> {
    let (mut a, mut b) = (1u64, 1u64); // F_n, F_(n+1)
    let mut n = 1usize;
    let mut seen = 0u32;
    loop {
        let duplicate = n == 2;
        if a % 2 == 1 && !duplicate {
            if seen == k {
                return Ok((n, a));
            }
            seen += 1;
        }
        let next = a
            .checked_add(b)
            .ok_or_else(|| Error::Overflow(format!("odd Fibonacci number {k} exceeds 64 bits")))?;
        a = b;
        b = next;
        n += 1;
    }
}

/// The (k+1)-th distinct odd value of 1, 1, 2, 3, 5, 8, 13, ...: 1, 3, 5, 13, 21, 55, 89, ...
pub fn odd_fibonacci(k: u32) -> Result<u64> {
    odd_fibonacci_entry(k).map(|(_, value)| value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    E,
    N,
    W,
    S,
}

impl Heading {
    fn delta(self) -> (i64, i64) {
        match self {
            Heading::E => (1, 0),
            Heading::N => (0, 1),
            Heading::W => (-1, 0),
            Heading::S => (0, -1),
        }
    }

    fn turned(self, t: Turn) -> Heading {
        const CCW: [Heading; 4] = [Heading::E, Heading::N, Heading::W, Heading::S];
        let i = CCW.iter().position(|&h| h == self).expect("listed");
        match t {
            Turn::L => CCW[(i + 1) % 4],
            Turn::R => CCW[(i + 3) % 4],
        }
    }

    pub fn letter(self) -> char {
        match self {
            Heading::E => 'E',
            Heading::N => 'N',
            Heading::W => 'W',
            Heading::S => 'S',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snowflake {
    pub order: u32,
    /// Index of the turn word the boundary repeats.
    pub turn_index: usize,
    pub steps: Vec<Heading>,
    /// Boundary vertices, starting (and implicitly ending) at the origin.
    pub vertices: Vec<(i64, i64)>,
    pub polyomino: Polyomino,
    pub perimeter: usize,
}

impl Snowflake {
    /// The boundary as a string of `N`/`E`/`S`/`W` steps.
    pub fn steps_text(&self) -> String {
        self.steps.iter().map(|h| h.letter()).collect()
    }

    /// Boundary edges moved onto a grid whose lower-left corner is the origin.
    pub fn outline(&self) -> StitchSet {
        let min_x = self.vertices.iter().map(|v| v.0).min().unwrap_or(0);
        let min_y = self.vertices.iter().map(|v| v.1).min().unwrap_or(0);
        let max_x = self.vertices.iter().map(|v| v.0).max().unwrap_or(0);
        let max_y = self.vertices.iter().map(|v| v.1).max().unwrap_or(0);
        let edges = boundary_edges(&self.vertices).into_iter().map(|(a, b)| {
            let shift = |p: (i64, i64)| {
                crate::design::Point::new((p.0 - min_x) as u32, (p.1 - min_y) as u32)
            };
            Edge::between(shift(a), shift(b)).expect("unit steps")
        });
        StitchSet::from_edges((max_x - min_x) as u32, (max_y - min_y) as u32, edges)
            .expect("outline lies inside its bounding box")
    }
}

fn boundary_edges(vertices: &[(i64, i64)]) -> Vec<((i64, i64), (i64, i64))> {
    (0..vertices.len())
        .map(|i| (vertices[i], vertices[(i + 1) % vertices.len()]))
        .collect()
}

/// Builds and validates the order-`k` snowflake.
pub fn build_snowflake(order: u32) -> Result<Snowflake> {
    if order > MAX_ORDER {
        return Err(Error::ConstructionInvalid {
            order,
            reason: format!("order exceeds the supported maximum of {MAX_ORDER}"),
        });
    }
    let invalid = |reason: String| Error::ConstructionInvalid { order, reason };
    let (turn_index, odd_fib) = odd_fibonacci_entry(order)?;
    let word = turn_word(turn_index);

    let mut heading = Heading::E;
    let mut pos = (0i64, 0i64);
    let mut vertices = vec![pos];
    let mut steps = Vec::with_capacity(4 * word.len());
    for _ in 0..4 {
        for &t in &word.letters {
            let (dx, dy) = heading.delta();
            pos = (pos.0 + dx, pos.1 + dy);
            steps.push(heading);
            vertices.push(pos);
            heading = heading.turned(t);
        }
    }

    if pos != (0, 0) {
        return Err(invalid(format!("boundary ends at {pos:?}, not the origin")));
    }
    vertices.pop();
    let mut seen = HashSet::with_capacity(vertices.len());
    if let Some(v) = vertices.iter().find(|v| !seen.insert(**v)) {
        return Err(invalid(format!("boundary revisits {v:?}")));
    }
    let perimeter = steps.len();
    let expected = 4 * odd_fib as usize;
    if perimeter != expected {
        return Err(invalid(format!(
            "perimeter {perimeter} differs from 4 x {odd_fib}"
        )));
    }

    let horizontal = boundary_edges(&vertices)
        .into_iter()
        .filter(|(a, b)| a.1 == b.1)
        .map(|(a, b)| (a.0.min(b.0), a.1));
    let polyomino = Polyomino::from_cells(enclosed_cells(horizontal));
    if polyomino.area() == 0 || !polyomino.is_edge_connected() {
        return Err(invalid("enclosed region is empty or disconnected".into()));
    }
    let known = match order {
        0 => Some(("unit square", Polyomino::monomino())),
        1 => Some(("plus pentomino", Polyomino::plus())),
        _ => None,
    };
    if let Some((name, shape)) = known {
        if !polyomino.congruent(&shape) {
            return Err(invalid(format!("order {order} should be the {name}")));
        }
    }

    Ok(Snowflake {
        order,
        turn_index,
        steps,
        vertices,
        polyomino,
        perimeter,
    })
}

/// Smallest order `k <= max_order` whose snowflake is congruent to `p`.
pub fn is_snowflake(p: &Polyomino, max_order: u32) -> Option<u32> {
    (0..=max_order.min(MAX_ORDER)).find(|&k| {
        build_snowflake(k)
            .map(|s| s.polyomino.congruent(p))
            .unwrap_or(false)
    })
}
