//! SVG and ASCII output for designs, stitch sets and kogin charts.
//!
//! SVG is written as plain text so the output is byte-stable and easy to
//! inspect: every stitch is one `<line class="stitch">`, every kogin run one
//! `<rect class="run">`, emitted in sorted order.

use std::fmt::Write;

use crate::design::{back_of, stitch_stage, Design, Orientation, Stage, StitchSet};
use crate::kogin::KoginChart;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Side {
    #[default]
    Front,
    Back,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Output units per thread.
    pub cell_size: f64,
    pub side: Side,
    /// Reflect the back side `x -> W - x`, as seen when the cloth is turned over.
    pub mirror_back: bool,
    pub stage: Stage,
    pub show_grid: bool,
    pub stroke: String,
    pub background: String,
    /// Fraction of `cell_size` left open between collinear stitches.
    pub gap: f64,
    /// ASCII output with `-`, `|`, `+` instead of box-drawing characters.
    pub plain_ascii: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            cell_size: 20.0,
            side: Side::Front,
            mirror_back: false,
            stage: Stage::Combined,
            show_grid: false,
            stroke: "#f8f8f2".into(),
            background: "#1d2b53".into(),
            gap: 0.15,
            plain_ascii: false,
        }
    }
}

/// Three decimals at most, trailing zeros dropped.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

fn svg_open(out: &mut String, width: f64, height: f64, background: &str) {
    let (w, h) = (num(width), num(height));
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        out,
        "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"{background}\"/>"
    );
}

fn grid_path(out: &mut String, cols: usize, rows: usize, cell: f64, margin: f64) {
    let mut d = String::new();
    let (right, bottom) = (margin + cols as f64 * cell, margin + rows as f64 * cell);
    for i in 0..=cols {
        let x = margin + i as f64 * cell;
        let _ = write!(d, "M{} {}V{}", num(x), num(margin), num(bottom));
    }
    for j in 0..=rows {
        let y = margin + j as f64 * cell;
        let _ = write!(d, "M{} {}H{}", num(margin), num(y), num(right));
    }
    let _ = writeln!(
        out,
        "  <path class=\"grid\" d=\"{d}\" fill=\"none\" stroke=\"#8a93b8\" stroke-opacity=\"0.35\" stroke-width=\"{}\"/>",
        num(cell * 0.03)
    );
}

/// Draws a stitch set; the lattice origin is the bottom-left corner.
pub fn render_stitches_svg(stitches: &StitchSet, opts: &RenderOptions) -> String {
    let cell = opts.cell_size;
    let margin = cell;
    let (w, h) = (stitches.width(), stitches.height());
    let mut out = String::new();
    svg_open(
        &mut out,
        w as f64 * cell + 2.0 * margin,
        h as f64 * cell + 2.0 * margin,
        &opts.background,
    );
    if opts.show_grid {
        grid_path(&mut out, w as usize, h as usize, cell, margin);
    }
    let _ = writeln!(
        out,
        "  <g class=\"stitches\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\">",
        opts.stroke,
        num(cell * 0.12)
    );
    let half_gap = opts.gap * cell / 2.0;
    let px = |x: u32| margin + x as f64 * cell;
    let py = |y: u32| margin + (h - y) as f64 * cell;
    for e in stitches {
        let (x1, y1, x2, y2) = match e.orientation {
            Orientation::H => (px(e.x) + half_gap, py(e.y), px(e.x + 1) - half_gap, py(e.y)),
            Orientation::V => (px(e.x), py(e.y) - half_gap, px(e.x), py(e.y + 1) + half_gap),
        };
        let _ = writeln!(
            out,
            "    <line class=\"stitch\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// The stitches a render of `design` shows under `opts`.
pub fn visible_stitches(design: &Design, opts: &RenderOptions) -> StitchSet {
    match opts.side {
        Side::Front => stitch_stage(design, opts.stage),
        Side::Back => {
            let back = stitch_stage(&back_of(design), opts.stage);
            if opts.mirror_back {
                back.mirrored_x()
            } else {
                back
            }
        }
    }
}

pub fn render_design_svg(design: &Design, opts: &RenderOptions) -> String {
    render_stitches_svg(&visible_stitches(design, opts), opts)
}

/// Character picture: lattice points on even rows and columns, stitches in
/// between. Top row first, trailing spaces trimmed.
pub fn render_stitches_ascii(stitches: &StitchSet, plain: bool) -> String {
    let (dot, hz, vt) = if plain {
        ('+', '-', '|')
    } else {
        ('·', '─', '│')
    };
    let (w, h) = (stitches.width() as usize, stitches.height() as usize);
    let mut grid = vec![vec![' '; 2 * w + 1]; 2 * h + 1];
    for row in grid.iter_mut().step_by(2) {
        for c in row.iter_mut().step_by(2) {
            *c = dot;
        }
    }
    for e in stitches {
        let (x, y) = (e.x as usize, e.y as usize);
        match e.orientation {
            Orientation::H => grid[2 * (h - y)][2 * x + 1] = hz,
            Orientation::V => grid[2 * (h - y) - 1][2 * x] = vt,
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_design_ascii(design: &Design, opts: &RenderOptions) -> String {
    render_stitches_ascii(&visible_stitches(design, opts), opts.plain_ascii)
}

/// One `<rect class="run">` per run, `length * cell_size` wide.
pub fn render_chart_svg(chart: &KoginChart, opts: &RenderOptions) -> String {
    let cell = opts.cell_size;
    let margin = cell;
    let rows = chart.rows.len();
    let mut out = String::new();
    svg_open(
        &mut out,
        chart.width as f64 * cell + 2.0 * margin,
        rows as f64 * cell + 2.0 * margin,
        &opts.background,
    );
    if opts.show_grid {
        grid_path(&mut out, chart.width, rows, cell, margin);
    }
    let _ = writeln!(out, "  <g class=\"runs\" fill=\"{}\">", opts.stroke);
    let thickness = cell * 0.4;
    for (ri, row) in chart.rows.iter().enumerate() {
        let y = margin + ri as f64 * cell + (cell - thickness) / 2.0;
        for run in &row.runs {
            let _ = writeln!(
                out,
                "    <rect class=\"run\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" rx=\"{}\"/>",
                num(margin + run.start as f64 * cell),
                num(y),
                num(run.length as f64 * cell),
                num(thickness),
                num(thickness / 2.0)
            );
        }
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
