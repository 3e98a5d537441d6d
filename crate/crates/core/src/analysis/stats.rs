use std::collections::BTreeMap;

use super::decompose::decompose;
use crate::design::{Design, DesignSpec, Orientation};
use crate::Result;

/// Column order of [`StatsRecord::to_csv_row`].
pub const CSV_HEADER: &str =
    "m,n,rows_bits,cols_bits,loops,paths,max_depth,h_edges,v_edges,loop_area_total,largest_area,area_histogram";

/// Structural summary of one design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsRecord {
    pub spec: DesignSpec,
    pub loops: usize,
    pub paths: usize,
    pub max_depth: usize,
    /// Loop area -> number of loops with that area.
    pub area_histogram: BTreeMap<usize, usize>,
    pub h_edges: usize,
    pub v_edges: usize,
}

impl StatsRecord {
    /// Number of vertical stitch lines.
    pub fn m(&self) -> usize {
        self.spec.cols.len()
    }

    /// Number of horizontal stitch lines.
    pub fn n(&self) -> usize {
        self.spec.rows.len()
    }

    pub fn loop_area_total(&self) -> usize {
        self.area_histogram.iter().map(|(a, c)| a * c).sum()
    }

    pub fn largest_area(&self) -> usize {
        self.area_histogram.keys().next_back().copied().unwrap_or(0)
    }

    /// One CSV row in [`CSV_HEADER`] order. The histogram is written as
    /// `area:count` pairs joined by `;`.
    pub fn to_csv_row(&self) -> String {
        let hist: Vec<String> = self
            .area_histogram
            .iter()
            .map(|(a, c)| format!("{a}:{c}"))
            .collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.m(),
            self.n(),
            self.spec.rows,
            self.spec.cols,
            self.loops,
            self.paths,
            self.max_depth,
            self.h_edges,
            self.v_edges,
            self.loop_area_total(),
            self.largest_area(),
            hist.join(";")
        )
    }
}

pub fn stats(design: &Design) -> Result<StatsRecord> {
    let parts = decompose(design)?;
    let mut area_histogram = BTreeMap::new();
    for lp in &parts.loops {
        *area_histogram.entry(lp.area).or_insert(0) += 1;
    }
    Ok(StatsRecord {
        spec: design.spec().clone(),
        loops: parts.loops.len(),
        paths: parts.paths.len(),
        max_depth: parts.max_depth(),
        area_histogram,
        h_edges: design.front().count(Orientation::H),
        v_edges: design.front().count(Orientation::V),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::build_design;

    #[test]
    fn unit_square_stats() {
        let d = build_design(&DesignSpec::parse_words("00", "00").unwrap()).unwrap();
        let s = stats(&d).unwrap();
        assert_eq!((s.loops, s.paths, s.max_depth), (1, 0, 1));
        assert_eq!((s.h_edges, s.v_edges), (2, 2));
        assert_eq!(s.to_csv_row(), "2,2,00,00,1,0,1,2,2,1,1,1:1");
        assert_eq!(
            CSV_HEADER.split(',').count(),
            s.to_csv_row().split(',').count()
        );
    }
}
