//! Counted-thread charts: kogin (odd thread counts) and hishi (even).
//!
//! Chart text format:
//!
//! ```text
//! # optional comment lines
//! width=7 mode=kogin name=sample
//! -.---.-
//! ...-...
//! ```
//!
//! `-` is a thread covered by the stitch, `.` a skipped thread; rows are
//! listed top first. Only horizontal stitches are modelled.

use std::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityMode {
    /// Odd thread counts.
    Kogin,
    /// Even thread counts.
    Hishi,
}

impl ParityMode {
    pub fn accepts(self, length: usize) -> bool {
        match self {
            ParityMode::Kogin => length % 2 == 1,
            ParityMode::Hishi => length.is_multiple_of(2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParityMode::Kogin => "kogin",
            ParityMode::Hishi => "hishi",
        }
    }
}

impl fmt::Display for ParityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One stitch covering `length` threads from `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub length: usize,
}

impl Run {
    pub fn new(start: usize, length: usize) -> Self {
        Run { start, length }
    }

    pub fn end(&self) -> usize {
        self.start + self.length
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ChartRow {
    pub runs: Vec<Run>,
}

impl ChartRow {
    pub fn parse(line: &str) -> std::result::Result<ChartRow, (usize, char)> {
        let mut runs: Vec<Run> = Vec::new();
        let mut open: Option<usize> = None;
        for (i, c) in line.chars().enumerate() {
            match (c, open) {
                ('-', None) => open = Some(i),
                ('-', Some(_)) => {}
                ('.', Some(s)) => {
                    runs.push(Run::new(s, i - s));
                    open = None;
                }
                ('.', None) => {}
                (other, _) => return Err((i, other)),
            }
        }
        if let Some(s) = open {
            runs.push(Run::new(s, line.chars().count() - s));
        }
        Ok(ChartRow { runs })
    }

    pub fn render(&self, width: usize) -> String {
        let mut cells = vec!['.'; width];
        for r in &self.runs {
            for c in cells.iter_mut().skip(r.start).take(r.length) {
                *c = '-';
            }
        }
        cells.into_iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KoginChart {
    pub name: String,
    pub width: usize,
    pub mode: ParityMode,
    /// Top row first.
    pub rows: Vec<ChartRow>,
}

impl KoginChart {
    /// Checks runs are sorted, non-empty, inside the width and separated by
    /// at least one skipped thread.
    pub fn check_structure(&self) -> Result<()> {
        if self.rows.is_empty() {
            return Err(Error::Chart("chart has no rows".into()));
        }
        for (ri, row) in self.rows.iter().enumerate() {
            let mut prev_end: Option<usize> = None;
            for (k, run) in row.runs.iter().enumerate() {
                if run.length == 0 {
                    return Err(Error::Chart(format!("row {ri} run {k} is empty")));
                }
                if run.end() > self.width {
                    return Err(Error::Chart(format!(
                        "row {ri} run {k} ends at {} beyond width {}",
                        run.end(),
                        self.width
                    )));
                }
                if prev_end.is_some_and(|e| run.start <= e) {
                    return Err(Error::Chart(format!(
                        "row {ri} run {k} touches or overlaps the previous run"
                    )));
                }
                prev_end = Some(run.end());
            }
        }
        Ok(())
    }

    pub fn run_count(&self) -> usize {
        self.rows.iter().map(|r| r.runs.len()).sum()
    }

    pub fn runs(&self) -> impl Iterator<Item = (usize, usize, &Run)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(ri, row)| row.runs.iter().enumerate().map(move |(k, r)| (ri, k, r)))
    }

    /// True when every row reads the same left to right as right to left.
    pub fn has_vertical_mirror(&self) -> bool {
        self.rows.iter().all(|row| {
            let mut mirrored: Vec<Run> = row
                .runs
                .iter()
                .map(|r| Run::new(self.width - r.end(), r.length))
                .collect();
            mirrored.reverse();
            mirrored == row.runs
        })
    }
}

impl fmt::Display for KoginChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_chart(self))
    }
}

/// How far [`validate`] goes beyond parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    /// Run lengths must have the mode's parity.
    Parity,
    /// Kogin charts additionally restrict runs to 1, 3 or 5 threads.
    #[default]
    Strict,
}

/// Thread counts allowed in strict kogin charts.
pub const STRICT_KOGIN_LENGTHS: [usize; 3] = [1, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub row: usize,
    pub run: usize,
    pub length: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(
                f,
                "violation row={} run={} length={} reason={}",
                v.row, v.run, v.length, v.reason
            )?;
        }
        Ok(())
    }
}

pub fn validate(chart: &KoginChart, strictness: Strictness) -> ValidationReport {
    let mut violations = Vec::new();
    for (row, run, r) in chart.runs() {
        let reason = if !chart.mode.accepts(r.length) {
            Some(format!(
                "{} charts need {} thread counts",
                chart.mode,
                match chart.mode {
                    ParityMode::Kogin => "odd",
                    ParityMode::Hishi => "even",
                }
            ))
        } else if chart.mode == ParityMode::Kogin
            && strictness == Strictness::Strict
            && !STRICT_KOGIN_LENGTHS.contains(&r.length)
        {
            Some("strict kogin allows only 1, 3 or 5 threads".to_string())
        } else {
            None
        };
        if let Some(reason) = reason {
            violations.push(Violation {
                row,
                run,
                length: r.length,
                reason,
            });
        }
    }
    ValidationReport { violations }
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, ParityMode, String)> {
    let err = |column: usize, message: String| Error::ChartParse {
        line: line_no,
        column,
        message,
    };
    let (mut width, mut mode, mut name) = (None, None, None);
    let mut column = 1;
    for field in line.split(' ') {
        if field.is_empty() {
            column += 1;
            continue;
        }
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(column, format!("expected key=value, found {field:?}")))?;
        match key {
            "width" => {
                width = Some(
                    value
                        .parse::<usize>()
                        .ok()
                        .filter(|&w| w > 0)
                        .ok_or_else(|| err(column, format!("invalid width {value:?}")))?,
                )
            }
            "mode" => {
                mode = Some(match value {
                    "kogin" => ParityMode::Kogin,
                    "hishi" => ParityMode::Hishi,
                    _ => return Err(err(column, format!("unknown mode {value:?}"))),
                })
            }
            "name" => name = Some(value.to_string()),
            _ => return Err(err(column, format!("unknown header key {key:?}"))),
        }
        column += field.chars().count() + 1;
    }
    Ok((
        width.ok_or_else(|| err(1, "header is missing width".into()))?,
        mode.ok_or_else(|| err(1, "header is missing mode".into()))?,
        name.ok_or_else(|| err(1, "header is missing name".into()))?,
    ))
}

pub fn parse_chart(text: &str) -> Result<KoginChart> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_no, header) = lines.next().ok_or(Error::ChartParse {
        line: 1,
        column: 1,
        message: "missing header line".into(),
    })?;
    let (width, mode, name) = parse_header(header, header_no)?;
    let mut rows = Vec::new();
    for (line_no, line) in lines {
        let row = ChartRow::parse(line).map_err(|(i, c)| Error::ChartParse {
            line: line_no,
            column: i + 1,
            message: format!("unexpected character {c:?}; rows use '-' and '.'"),
        })?;
        let found = line.chars().count();
        if found != width {
            return Err(Error::WidthMismatch {
                line: line_no,
                expected: width,
                found,
            });
        }
        rows.push(row);
    }
    let chart = KoginChart {
        name,
        width,
        mode,
        rows,
    };
    chart.check_structure()?;
    Ok(chart)
}

/// Normalized chart text: header line, then one row per line.
pub fn emit_chart(chart: &KoginChart) -> String {
    let mut out = format!(
        "width={} mode={} name={}\n",
        chart.width, chart.mode, chart.name
    );
    for row in &chart.rows {
        out.push_str(&row.render(chart.width));
        out.push('\n');
    }
    out
}

const MOTIFS: [(&str, &str); 4] = [
    ("butterfly", include_str!("../motifs/butterfly.chart")),
    ("dragonfly", include_str!("../motifs/dragonfly.chart")),
    ("gourd", include_str!("../motifs/gourd.chart")),
    ("kikurako", include_str!("../motifs/kikurako.chart")),
];

/// Names of the bundled motifs, sorted.
pub fn motif_names() -> Vec<&'static str> {
    MOTIFS.iter().map(|(n, _)| *n).collect()
}

/// Raw bundled chart text, comments included.
pub fn motif_source(name: &str) -> Option<&'static str> {
    MOTIFS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn motif(name: &str) -> Result<KoginChart> {
    let text = motif_source(name).ok_or_else(|| Error::UnknownMotif {
        name: name.to_string(),
        valid: motif_names().into_iter().map(String::from).collect(),
    })?;
    parse_chart(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart(rows: &[&str], mode: ParityMode) -> KoginChart {
        let text = format!(
            "width={} mode={} name=t\n{}\n",
            rows[0].len(),
            mode,
            rows.join("\n")
        );
        parse_chart(&text).unwrap()
    }

    #[test]
    fn row_transliteration() {
        let row = ChartRow::parse("-.---.-").unwrap();
        assert_eq!(
            row.runs,
            vec![Run::new(0, 1), Run::new(2, 3), Run::new(6, 1)]
        );
        assert_eq!(row.render(7), "-.---.-");
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let err = parse_chart("width=5 mode=kogin name=x\n-.-.-\n-.-\n").unwrap_err();
        assert_eq!(
            err,
            Error::WidthMismatch {
                line: 3,
                expected: 5,
                found: 3
            }
        );
    }

    #[test]
    fn bad_characters_report_position() {
        let err = parse_chart("width=3 mode=kogin name=x\n-x-\n").unwrap_err();
        assert!(matches!(
            err,
            Error::ChartParse {
                line: 2,
                column: 2,
                ..
            }
        ));
        let err = parse_chart("width=3 mode=sashiko name=x\n---\n").unwrap_err();
        assert!(matches!(err, Error::ChartParse { line: 1, .. }));
        assert!(parse_chart("# only a comment\n").is_err());
    }

    #[test]
    fn parity_rules() {
        let ok = chart(&["-.---.-----"], ParityMode::Kogin);
        assert!(validate(&ok, Strictness::Strict).is_ok());

        let two = chart(&["--.-"], ParityMode::Kogin);
        let report = validate(&two, Strictness::Strict);
        assert_eq!(report.violations.len(), 1);
        assert_eq!((report.violations[0].row, report.violations[0].run), (0, 0));

        let four_kogin = chart(&["----"], ParityMode::Kogin);
        assert!(!validate(&four_kogin, Strictness::Parity).is_ok());
        let four_hishi = chart(&["----"], ParityMode::Hishi);
        assert!(validate(&four_hishi, Strictness::Strict).is_ok());

        let seven = chart(&["-------"], ParityMode::Kogin);
        assert!(validate(&seven, Strictness::Parity).is_ok());
        assert!(!validate(&seven, Strictness::Strict).is_ok());
    }

    #[test]
    fn unknown_motif_lists_names() {
        let err = motif("asanoha").unwrap_err();
        let text = err.to_string();
        for name in motif_names() {
            assert!(text.contains(name));
        }
    }

    #[test]
    fn bundled_motifs_are_valid_and_mirrored() {
        for name in motif_names() {
            let m = motif(name).unwrap();
            assert_eq!(m.name, name);
            assert!(validate(&m, Strictness::Strict).is_ok(), "{name}");
            assert!(m.has_vertical_mirror(), "{name}");
            assert!(m.runs().all(|(_, _, r)| r.length % 2 == 1));
            assert_eq!(parse_chart(&emit_chart(&m)).unwrap(), m);
        }
    }

    #[test]
    fn structure_check_catches_touching_runs() {
        let mut c = chart(&["-.-"], ParityMode::Kogin);
        c.rows[0].runs[0].length = 2;
        assert!(c.check_structure().is_err());
    }

    #[test]
    fn emitter_normalizes_whitespace() {
        let text = "# note\nwidth=3 mode=hishi name=x   \n--.  \n";
        let c = parse_chart(text).unwrap();
        assert_eq!(emit_chart(&c), "width=3 mode=hishi name=x\n--.\n");
    }
}
