//! Exhaustive and sampled walks over the design space.
//!
//! With `m` vertical and `n` horizontal lines there are `2^(m+n)` designs.
//! Designs are numbered by reading the concatenated word `rows ++ cols` as a
//! binary number with line 0 of the rows word as the most significant bit, so
//! index order is lexicographic order on the bitstrings.
//!
//! Sampling uses ChaCha8 seeded from a caller-supplied `u64`; there is no
//! default seed.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::{decompose, stats, Polyomino, StatsRecord, CSV_HEADER};
use crate::design::{build_design, design_count, BitWord, DesignSpec};
use crate::{Error, Result};

/// Default ceiling on the number of designs a single call may visit.
pub const DEFAULT_CAP: u64 = 1 << 24;

fn checked_total(m: usize, n: usize, cap: u64) -> Result<u64> {
    let total = design_count(m, n).map_err(|e| match e {
        Error::Overflow(_) => Error::CapExceeded {
            requested: 1u128 << (m + n).min(127),
            cap,
        },
        other => other,
    })?;
    if total > cap {
        return Err(Error::CapExceeded {
            requested: total as u128,
            cap,
        });
    }
    Ok(total)
}

/// The design with the given index among all `2^(m+n)` designs.
pub fn spec_at(m: usize, n: usize, index: u64) -> DesignSpec {
    let total_bits = m + n;
    let bit = |k: usize| (index >> (total_bits - 1 - k)) & 1 == 1;
    let rows = (0..n).map(bit).collect();
    let cols = (n..n + m).map(bit).collect();
    DesignSpec::new(
        BitWord::new(rows).expect("n >= 2"),
        BitWord::new(cols).expect("m >= 2"),
    )
}

/// Iterator over every spec with `m` vertical lines (cols) and `n` horizontal
/// lines (rows), in lexicographic order.
#[derive(Debug, Clone)]
pub struct DesignIter {
    m: usize,
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for DesignIter {
    type Item = DesignSpec;

    fn next(&mut self) -> Option<DesignSpec> {
        if self.next >= self.end {
            return None;
        }
        let spec = spec_at(self.m, self.n, self.next);
        self.next += 1;
        Some(spec)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for DesignIter {}

pub fn enumerate_designs(m: usize, n: usize, cap: u64) -> Result<DesignIter> {
    let end = checked_total(m, n, cap)?;
    Ok(DesignIter { m, n, next: 0, end })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMode {
    Exhaustive,
    /// `count` designs drawn with replacement, every bit uniform.
    Sample {
        count: u64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<StatsRecord>,
    /// Loop count -> number of designs.
    pub loop_histogram: BTreeMap<usize, u64>,
    /// Path count -> number of designs.
    pub path_histogram: BTreeMap<usize, u64>,
    /// Loop area -> number of loops across all designs.
    pub area_histogram: BTreeMap<usize, u64>,
}

impl CensusTable {
    fn from_rows(m: usize, n: usize, rows: Vec<StatsRecord>) -> CensusTable {
        let mut table = CensusTable {
            m,
            n,
            rows: Vec::new(),
            loop_histogram: BTreeMap::new(),
            path_histogram: BTreeMap::new(),
            area_histogram: BTreeMap::new(),
        };
        for r in &rows {
            *table.loop_histogram.entry(r.loops).or_insert(0) += 1;
            *table.path_histogram.entry(r.paths).or_insert(0) += 1;
            for (&area, &count) in &r.area_histogram {
                *table.area_histogram.entry(area).or_insert(0) += count as u64;
            }
        }
        table.rows = rows;
        table
    }

    /// Header plus one row per design.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.to_csv_row());
            out.push('\n');
        }
        out
    }

    /// `kind,key,count` lines for the three aggregate histograms.
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("histogram,key,count\n");
        for (name, hist) in [
            ("loops", &self.loop_histogram),
            ("paths", &self.path_histogram),
            ("area", &self.area_histogram),
        ] {
            for (k, v) in hist {
                out.push_str(&format!("{name},{k},{v}\n"));
            }
        }
        out
    }
}

fn sample_specs(m: usize, n: usize, count: u64, seed: u64) -> Vec<DesignSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rows = (0..n).map(|_| rng.random::<bool>()).collect();
            let cols = (0..m).map(|_| rng.random::<bool>()).collect();
            DesignSpec::new(
                BitWord::new(rows).expect("n >= 2"),
                BitWord::new(cols).expect("m >= 2"),
            )
        })
        .collect()
}

fn stats_of(spec: &DesignSpec) -> Result<StatsRecord> {
    stats(&build_design(spec)?)
}

/// Per-design statistics, computed in parallel and returned in a fixed order.
///
/// In sample mode the cap bounds `count` rather than `2^(m+n)`.
pub fn census(m: usize, n: usize, mode: CensusMode, cap: u64) -> Result<CensusTable> {
    let rows = match mode {
        CensusMode::Exhaustive => {
            let total = checked_total(m, n, cap)?;
            (0..total)
                .into_par_iter()
                .map(|i| stats_of(&spec_at(m, n, i)))
                .collect::<Result<Vec<_>>>()?
        }
        CensusMode::Sample { count, seed } => {
            if m < 2 || n < 2 {
                return Err(Error::Dimension(format!(
                    "need m >= 2 and n >= 2, got m={m}, n={n}"
                )));
            }
            if count > cap {
                return Err(Error::CapExceeded {
                    requested: count as u128,
                    cap,
                });
            }
            sample_specs(m, n, count, seed)
                .par_iter()
                .map(stats_of)
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(CensusTable::from_rows(m, n, rows))
}

/// How a loop's polyomino is compared with a search target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShapeMatch {
    #[default]
    Translation,
    /// Equal up to the eight square symmetries.
    Congruence,
}

impl ShapeMatch {
    fn matches(self, candidate: &Polyomino, target: &Polyomino) -> bool {
        match self {
            ShapeMatch::Translation => candidate == target,
            ShapeMatch::Congruence => candidate.congruent(target),
        }
    }
}

/// Every spec of the given size whose decomposition has a loop enclosing `target`.
pub fn find_designs_containing(
    target: &Polyomino,
    m: usize,
    n: usize,
    matching: ShapeMatch,
    cap: u64,
) -> Result<Vec<DesignSpec>> {
    let total = checked_total(m, n, cap)?;
    // A loop enclosing the target needs at least its bounding box in cells.
    let (tw, th) = target.extent();
    let (gw, gh) = ((m - 1) as u32, (n - 1) as u32);
    let fits = match matching {
        ShapeMatch::Translation => tw <= gw && th <= gh,
        ShapeMatch::Congruence => (tw <= gw && th <= gh) || (th <= gw && tw <= gh),
    };
    if !fits {
        return Ok(Vec::new());
    }
    let hits = (0..total)
        .into_par_iter()
        .map(|i| -> Result<Option<DesignSpec>> {
            let spec = spec_at(m, n, i);
            let parts = decompose(&build_design(&spec)?)?;
            let found = parts
                .loops
                .iter()
                .any(|l| l.area == target.area() && matching.matches(&l.polyomino, target));
            Ok(found.then_some(spec))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hits.into_iter().flatten().collect())
}
