//! Command-line front end. Every subcommand is a thin binding over the
//! library; the `sashiko` binary only forwards process arguments here.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 file error.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{decompose, detect_symmetry, stats, Polyomino, CSV_HEADER};
use crate::design::{back_of, build_design, BitWord, Design, DesignSpec, Stage};
use crate::enumerate::{
    census, enumerate_designs, find_designs_containing, CensusMode, ShapeMatch, DEFAULT_CAP,
};
use crate::kogin::{emit_chart, motif, motif_names, parse_chart, validate, KoginChart, Strictness};
use crate::render::{
    render_chart_svg, render_design_ascii, render_design_svg, render_stitches_ascii,
    render_stitches_svg, RenderOptions, Side,
};
use crate::snowflake::build_snowflake;

const ORIENTATION_HELP: &str = "\
Bit words are read left to right: the first character is line 0, the bottom \
row for --rows and the leftmost column for --cols. On a line with bit b, the \
unit edge starting at coordinate t is stitched on the front iff t + b is even.

Word shorthands: ones[:LEN], zeros[:LEN], alternating[:LEN], \
random:p=<float>,seed=<int>[,len=<LEN>], fibword:<LEN>. Without LEN the \
length is taken from the other word.";

#[derive(Debug, Parser)]
#[command(name = "sashiko", version, about = "Hitomezashi and kogin sashiko patterns", after_help = ORIENTATION_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Args)]
struct DesignArgs {
    /// Row phase word (one bit per horizontal line, bottom first) or shorthand.
    #[arg(long, allow_hyphen_values = false)]
    rows: Option<String>,
    /// Column phase word (one bit per vertical line, left first) or shorthand.
    #[arg(long)]
    cols: Option<String>,
    /// Pattern file with `rows=` and `cols=` lines.
    #[arg(long, conflicts_with_all = ["rows", "cols"])]
    pattern: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Front,
    Back,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StageArg {
    Vertical,
    Horizontal,
    Combined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DesignFormat {
    Svg,
    Ascii,
    Pattern,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    format: Option<DesignFormat>,
    #[arg(long, value_enum, default_value = "front")]
    side: SideArg,
    /// Show the back as seen after turning the cloth over.
    #[arg(long)]
    mirror_back: bool,
    #[arg(long, value_enum, default_value = "combined")]
    stage: StageArg,
    #[arg(long, default_value_t = 20.0)]
    cell_size: f64,
    #[arg(long)]
    grid: bool,
    /// Use plain ASCII characters instead of box drawing.
    #[arg(long)]
    plain_ascii: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SnowflakeFormat {
    Steps,
    Svg,
    Ascii,
    Cells,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartFormat {
    Svg,
    Text,
}

#[derive(Debug, Args)]
struct ChartArgs {
    /// Bundled motif name.
    #[arg(long, conflicts_with = "chart")]
    motif: Option<String>,
    /// Chart file.
    #[arg(long)]
    chart: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Render a design.
    Generate {
        #[command(flatten)]
        design: DesignArgs,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// The reverse-side design (all phase bits flipped).
    Dual {
        #[command(flatten)]
        design: DesignArgs,
        #[command(flatten)]
        render: RenderArgs,
    },
    /// List loops and boundary-to-boundary paths.
    Decompose {
        #[command(flatten)]
        design: DesignArgs,
        #[arg(long, value_enum, default_value = "front")]
        side: SideArg,
    },
    /// One CSV row of structural statistics.
    Stats {
        #[command(flatten)]
        design: DesignArgs,
        #[arg(long, value_enum, default_value = "front")]
        side: SideArg,
    },
    /// Square symmetries and phase-word periods.
    Symmetry {
        #[command(flatten)]
        design: DesignArgs,
        #[arg(long, value_enum, default_value = "front")]
        side: SideArg,
    },
    /// Every design with m vertical and n horizontal lines.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Per-design statistics as CSV.
    Census {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long)]
        count: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        /// Print the aggregate histograms instead of per-design rows.
        #[arg(long)]
        summary: bool,
    },
    /// Designs with a loop enclosing the target polyomino.
    Find {
        /// plus, cell, snowflake:<order> or cells:x,y;x,y;...
        #[arg(long)]
        target: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Search every size from 2x2 lines up to m x n.
        #[arg(long)]
        up_to: bool,
        /// Match up to rotation and reflection, not only translation.
        #[arg(long)]
        congruent: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Fibonacci snowflake outline.
    Snowflake {
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "steps")]
        format: SnowflakeFormat,
        #[arg(long, default_value_t = 20.0)]
        cell_size: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check run lengths of a kogin or hishi chart.
    KoginValidate {
        #[command(flatten)]
        chart: ChartArgs,
        /// Check parity only, allowing kogin runs longer than 5.
        #[arg(long)]
        parity_only: bool,
    },
    /// Render a chart.
    KoginRender {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, value_enum, default_value = "svg")]
        format: ChartFormat,
        #[arg(long, default_value_t = 20.0)]
        cell_size: f64,
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Names of the bundled kogin motifs.
    MotifList,
}

/// Where a design comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignSource {
    Spec(DesignSpec),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChartSource {
    Motif(String),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Shape(Polyomino),
    Snowflake(u32),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Generate {
        design: DesignSource,
        format: DesignFormat,
        options: RenderOptions,
        out: Option<PathBuf>,
    },
    Dual {
        design: DesignSource,
        format: DesignFormat,
        options: RenderOptions,
        out: Option<PathBuf>,
    },
    Decompose {
        design: DesignSource,
        side: Side,
    },
    Stats {
        design: DesignSource,
        side: Side,
    },
    Symmetry {
        design: DesignSource,
        side: Side,
    },
    Enumerate {
        m: usize,
        n: usize,
        cap: u64,
    },
    Census {
        m: usize,
        n: usize,
        mode: CensusMode,
        cap: u64,
        summary: bool,
    },
    Find {
        target: Target,
        m: usize,
        n: usize,
        up_to: bool,
        matching: ShapeMatch,
        cap: u64,
    },
    Snowflake {
        order: u32,
        format: SnowflakeFormat,
        cell_size: f64,
        out: Option<PathBuf>,
    },
    KoginValidate {
        chart: ChartSource,
        strictness: Strictness,
    },
    KoginRender {
        chart: ChartSource,
        format: ChartFormat,
        options: RenderOptions,
        out: Option<PathBuf>,
    },
    MotifList,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Help or version text; not a failure.
    Display(String),
    Domain(String),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Display(_) => 0,
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Display(s) => f.write_str(s),
            CliError::Domain(s) => write!(f, "error: {s}"),
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Io(s) => write!(f, "file error: {s}"),
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn usage(flag: &str, msg: impl fmt::Display) -> CliError {
    CliError::Usage(format!("{flag}: {msg}"))
}

/// A phase word before its length is known.
enum WordShape {
    Literal(BitWord),
    Generated {
        length: Option<usize>,
        make: Box<dyn Fn(usize) -> Vec<bool>>,
    },
}

fn parse_len(flag: &str, s: &str) -> Result<usize, CliError> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(usage(flag, format!("invalid length {s:?}"))),
    }
}

/// Binary Fibonacci word: w1 = 1, w2 = 10, wn = w(n-1) w(n-2), cut to `len`.
pub fn fibonacci_word(len: usize) -> Vec<bool> {
    let mut prev = vec![true];
    let mut cur = vec![true, false];
    while cur.len() < len {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    if len == 1 {
        return prev;
    }
    cur.truncate(len);
    cur
}

fn parse_word_shape(flag: &str, value: &str) -> Result<WordShape, CliError> {
    if !value.is_empty() && value.chars().all(|c| c == '0' || c == '1') {
        return Ok(WordShape::Literal(
            BitWord::parse(value).map_err(|e| usage(flag, e))?,
        ));
    }
    let (kind, rest) = match value.split_once(':') {
        Some((k, r)) => (k, Some(r)),
        None => (value, None),
    };
    let simple_len = |rest: Option<&str>| rest.map(|r| parse_len(flag, r)).transpose();
    match kind {
        "ones" => Ok(WordShape::Generated {
            length: simple_len(rest)?,
            make: Box::new(|n| vec![true; n]),
        }),
        "zeros" => Ok(WordShape::Generated {
            length: simple_len(rest)?,
            make: Box::new(|n| vec![false; n]),
        }),
        "alternating" => Ok(WordShape::Generated {
            length: simple_len(rest)?,
            make: Box::new(|n| (0..n).map(|i| i % 2 == 1).collect()),
        }),
        "fibword" => {
            let n = rest.ok_or_else(|| usage(flag, "fibword needs a length, e.g. fibword:8"))?;
            Ok(WordShape::Generated {
                length: Some(parse_len(flag, n)?),
                make: Box::new(fibonacci_word),
            })
        }
        "random" => {
            let params = rest.ok_or_else(|| usage(flag, "random needs p=<float>,seed=<int>"))?;
            let (mut p, mut seed, mut length) = (None, None, None);
            for kv in params.split(',') {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| usage(flag, format!("expected key=value in {kv:?}")))?;
                match k {
                    "p" => {
                        let prob: f64 = v
                            .parse()
                            .ok()
                            .filter(|x: &f64| (0.0..=1.0).contains(x))
                            .ok_or_else(|| {
                                usage(flag, format!("p must be in [0, 1], got {v:?}"))
                            })?;
                        p = Some(prob);
                    }
                    "seed" => {
                        seed = Some(
                            v.parse::<u64>()
                                .map_err(|_| usage(flag, format!("invalid seed {v:?}")))?,
                        )
                    }
                    "len" => length = Some(parse_len(flag, v)?),
                    _ => return Err(usage(flag, format!("unknown random parameter {k:?}"))),
                }
            }
            let p = p.ok_or_else(|| usage(flag, "random needs p=<float>"))?;
            let seed = seed.ok_or_else(|| usage(flag, "random needs an explicit seed=<int>"))?;
            Ok(WordShape::Generated {
                length,
                make: Box::new(move |n| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..n).map(|_| rng.random_bool(p)).collect()
                }),
            })
        }
        _ => Err(usage(
            flag,
            format!("expected a bit string or shorthand, got {value:?}"),
        )),
    }
}

fn resolve_words(rows: &str, cols: &str) -> Result<DesignSpec, CliError> {
    let rows = parse_word_shape("--rows", rows)?;
    let cols = parse_word_shape("--cols", cols)?;
    let len_of = |w: &WordShape| match w {
        WordShape::Literal(b) => Some(b.len()),
        WordShape::Generated { length, .. } => *length,
    };
    let (rl, cl) = (len_of(&rows), len_of(&cols));
    let finish = |flag: &str, w: WordShape, other: Option<usize>| -> Result<BitWord, CliError> {
        match w {
            WordShape::Literal(b) => Ok(b),
            WordShape::Generated { length, make } => {
                let n = length.or(other).ok_or_else(|| {
                    usage(
                        flag,
                        "shorthand needs a length (e.g. ones:8) or a literal other word",
                    )
                })?;
                BitWord::new(make(n)).map_err(|e| usage(flag, e))
            }
        }
    };
    Ok(DesignSpec::new(
        finish("--rows", rows, cl)?,
        finish("--cols", cols, rl)?,
    ))
}

fn design_source(args: DesignArgs) -> Result<DesignSource, CliError> {
    match (args.pattern, args.rows, args.cols) {
        (Some(path), _, _) => Ok(DesignSource::File(path)),
        (None, Some(r), Some(c)) => Ok(DesignSource::Spec(resolve_words(&r, &c)?)),
        (None, Some(_), None) => Err(usage(
            "--cols",
            "missing; --rows needs --cols (or use --pattern)",
        )),
        (None, None, Some(_)) => Err(usage(
            "--rows",
            "missing; --cols needs --rows (or use --pattern)",
        )),
        (None, None, None) => Err(usage("--rows", "give --rows and --cols, or --pattern FILE")),
    }
}

fn chart_source(args: ChartArgs) -> Result<ChartSource, CliError> {
    match (args.motif, args.chart) {
        (Some(m), _) => Ok(ChartSource::Motif(m)),
        (None, Some(p)) => Ok(ChartSource::File(p)),
        (None, None) => Err(usage("--motif", "give --motif NAME or --chart FILE")),
    }
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Front => Side::Front,
        SideArg::Back => Side::Back,
    }
}

fn render_options(r: &RenderArgs) -> Result<RenderOptions, CliError> {
    if !(r.cell_size > 0.0 && r.cell_size.is_finite()) {
        return Err(usage("--cell-size", "must be a positive number"));
    }
    Ok(RenderOptions {
        cell_size: r.cell_size,
        side: side(r.side),
        mirror_back: r.mirror_back,
        stage: match r.stage {
            StageArg::Vertical => Stage::VerticalOnly,
            StageArg::Horizontal => Stage::HorizontalOnly,
            StageArg::Combined => Stage::Combined,
        },
        show_grid: r.grid,
        plain_ascii: r.plain_ascii,
        ..RenderOptions::default()
    })
}

fn parse_target(value: &str) -> Result<Target, CliError> {
    let flag = "--target";
    match value.split_once(':') {
        None if value == "plus" => Ok(Target::Shape(Polyomino::plus())),
        None if value == "cell" => Ok(Target::Shape(Polyomino::monomino())),
        Some(("snowflake", k)) => k
            .parse()
            .map(Target::Snowflake)
            .map_err(|_| usage(flag, format!("invalid snowflake order {k:?}"))),
        Some(("cells", list)) => {
            let p = Polyomino::parse_cells(list).map_err(|e| usage(flag, e))?;
            if !p.is_edge_connected() {
                return Err(usage(flag, "cells must form an edge-connected polyomino"));
            }
            Ok(Target::Shape(p))
        }
        _ => Err(usage(
            flag,
            format!("expected plus, cell, snowflake:<k> or cells:x,y;..., got {value:?}"),
        )),
    }
}

/// Parses process-style arguments (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<Command, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Display(e.to_string())
        }
        _ => CliError::Usage(
            e.to_string()
                .trim_start_matches("error: ")
                .trim_end()
                .to_string(),
        ),
    })?;
    Ok(match cli.command {
        Sub::Generate { design, render } => Command::Generate {
            design: design_source(design)?,
            format: render.format.unwrap_or(DesignFormat::Svg),
            options: render_options(&render)?,
            out: render.out,
        },
        Sub::Dual { design, render } => Command::Dual {
            design: design_source(design)?,
            format: render.format.unwrap_or(DesignFormat::Pattern),
            options: render_options(&render)?,
            out: render.out,
        },
        Sub::Decompose { design, side: s } => Command::Decompose {
            design: design_source(design)?,
            side: side(s),
        },
        Sub::Stats { design, side: s } => Command::Stats {
            design: design_source(design)?,
            side: side(s),
        },
        Sub::Symmetry { design, side: s } => Command::Symmetry {
            design: design_source(design)?,
            side: side(s),
        },
        Sub::Enumerate { m, n, cap } => Command::Enumerate { m, n, cap },
        Sub::Census {
            m,
            n,
            mode,
            count,
            seed,
            cap,
            summary,
        } => {
            let mode = match mode {
                ModeArg::Exhaustive => {
                    if count.is_some() || seed.is_some() {
                        return Err(usage(
                            "--mode",
                            "--count and --seed only apply to --mode sample",
                        ));
                    }
                    CensusMode::Exhaustive
                }
                ModeArg::Sample => CensusMode::Sample {
                    count: count.ok_or_else(|| usage("--count", "required with --mode sample"))?,
                    seed: seed.ok_or_else(|| usage("--seed", "required with --mode sample"))?,
                },
            };
            Command::Census {
                m,
                n,
                mode,
                cap,
                summary,
            }
        }
        Sub::Find {
            target,
            m,
            n,
            up_to,
            congruent,
            cap,
        } => Command::Find {
            target: parse_target(&target)?,
            m,
            n,
            up_to,
            matching: if congruent {
                ShapeMatch::Congruence
            } else {
                ShapeMatch::Translation
            },
            cap,
        },
        Sub::Snowflake {
            order,
            format,
            cell_size,
            out,
        } => {
            if !(cell_size > 0.0 && cell_size.is_finite()) {
                return Err(usage("--cell-size", "must be a positive number"));
            }
            Command::Snowflake {
                order,
                format,
                cell_size,
                out,
            }
        }
        Sub::KoginValidate { chart, parity_only } => Command::KoginValidate {
            chart: chart_source(chart)?,
            strictness: if parity_only {
                Strictness::Parity
            } else {
                Strictness::Strict
            },
        },
        Sub::KoginRender {
            chart,
            format,
            cell_size,
            grid,
            out,
        } => {
            if !(cell_size > 0.0 && cell_size.is_finite()) {
                return Err(usage("--cell-size", "must be a positive number"));
            }
            Command::KoginRender {
                chart: chart_source(chart)?,
                format,
                options: RenderOptions {
                    cell_size,
                    show_grid: grid,
                    ..RenderOptions::default()
                },
                out,
            }
        }
        Sub::MotifList => Command::MotifList,
    })
}

fn read_file(path: &FsPath) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_spec(source: &DesignSource) -> Result<DesignSpec, CliError> {
    match source {
        DesignSource::Spec(s) => Ok(s.clone()),
        DesignSource::File(p) => Ok(DesignSpec::from_pattern_text(&read_file(p)?)?),
    }
}

fn load_design(source: &DesignSource, s: Side) -> Result<Design, CliError> {
    let design = build_design(&load_spec(source)?)?;
    Ok(match s {
        Side::Front => design,
        Side::Back => back_of(&design),
    })
}

fn load_chart(source: &ChartSource) -> Result<KoginChart, CliError> {
    match source {
        ChartSource::Motif(name) => Ok(motif(name)?),
        ChartSource::File(p) => Ok(parse_chart(&read_file(p)?)?),
    }
}

fn emit(out: &mut dyn Write, dest: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match dest {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn render_design(design: &Design, format: DesignFormat, options: &RenderOptions) -> String {
    match format {
        DesignFormat::Svg => render_design_svg(design, options),
        DesignFormat::Ascii => render_design_ascii(design, options),
        DesignFormat::Pattern => design.spec().to_pattern_text(),
    }
}

/// Text printed by `decompose`.
pub fn decomposition_text(design: &Design) -> crate::Result<String> {
    let parts = decompose(design)?;
    let mut s = format!(
        "loops={} paths={} max_depth={}\n",
        parts.loops.len(),
        parts.paths.len(),
        parts.max_depth()
    );
    for (i, lp) in parts.loops.iter().enumerate() {
        let parent = parts.nesting[i].map_or("-".to_string(), |p| p.to_string());
        s.push_str(&format!(
            "loop {i} start={} edges={} area={} depth={} parent={parent} cells={}\n",
            lp.min_vertex(),
            lp.edges.len(),
            lp.area,
            parts.depth(i),
            lp.polyomino
        ));
    }
    for (i, p) in parts.paths.iter().enumerate() {
        s.push_str(&format!(
            "path {i} from={} to={} edges={}\n",
            p.endpoints.0,
            p.endpoints.1,
            p.edges.len()
        ));
    }
    Ok(s)
}

/// Text printed by `symmetry`.
pub fn symmetry_text(design: &Design) -> String {
    let r = detect_symmetry(design);
    let ops: Vec<&str> = r.ops.iter().map(|g| g.name()).collect();
    format!(
        "point_group={}\nops={}\nrow_period={}\ncol_period={}\n",
        r.point_group,
        ops.join(","),
        r.row_period,
        r.col_period
    )
}

/// Runs a parsed command, writing results to `out` unless `--out` is set.
pub fn run(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Generate {
            design,
            format,
            options,
            out: dest,
        } => {
            let d = build_design(&load_spec(design)?)?;
            emit(out, dest, &render_design(&d, *format, options))
        }
        Command::Dual {
            design,
            format,
            options,
            out: dest,
        } => {
            let d = back_of(&build_design(&load_spec(design)?)?);
            emit(out, dest, &render_design(&d, *format, options))
        }
        Command::Decompose { design, side } => emit(
            out,
            &None,
            &decomposition_text(&load_design(design, *side)?)?,
        ),
        Command::Stats { design, side } => {
            let rec = stats(&load_design(design, *side)?)?;
            emit(out, &None, &format!("{CSV_HEADER}\n{}\n", rec.to_csv_row()))
        }
        Command::Symmetry { design, side } => {
            emit(out, &None, &symmetry_text(&load_design(design, *side)?))
        }
        Command::Enumerate { m, n, cap } => {
            let mut text = String::new();
            for spec in enumerate_designs(*m, *n, *cap)? {
                text.push_str(&spec.to_string());
                text.push('\n');
            }
            emit(out, &None, &text)
        }
        Command::Census {
            m,
            n,
            mode,
            cap,
            summary,
        } => {
            let table = census(*m, *n, *mode, *cap)?;
            let text = if *summary {
                table.summary_csv()
            } else {
                table.to_csv()
            };
            emit(out, &None, &text)
        }
        Command::Find {
            target,
            m,
            n,
            up_to,
            matching,
            cap,
        } => {
            let shape = match target {
                Target::Shape(p) => p.clone(),
                Target::Snowflake(k) => build_snowflake(*k)?.polyomino,
            };
            let sizes: Vec<(usize, usize)> = if *up_to {
                (2..=*m)
                    .flat_map(|a| (2..=*n).map(move |b| (a, b)))
                    .collect()
            } else {
                vec![(*m, *n)]
            };
            let mut text = String::new();
            for (a, b) in sizes {
                for spec in find_designs_containing(&shape, a, b, *matching, *cap)? {
                    text.push_str(&spec.to_string());
                    text.push('\n');
                }
            }
            emit(out, &None, &text)
        }
        Command::Snowflake {
            order,
            format,
            cell_size,
            out: dest,
        } => {
            let flake = build_snowflake(*order)?;
            let opts = RenderOptions {
                cell_size: *cell_size,
                ..RenderOptions::default()
            };
            let text = match format {
                SnowflakeFormat::Steps => format!("{}\n", flake.steps_text()),
                SnowflakeFormat::Svg => render_stitches_svg(&flake.outline(), &opts),
                SnowflakeFormat::Ascii => render_stitches_ascii(&flake.outline(), false),
                SnowflakeFormat::Cells => flake.polyomino.to_text(),
            };
            emit(out, dest, &text)
        }
        Command::KoginValidate { chart, strictness } => {
            let c = load_chart(chart)?;
            let report = validate(&c, *strictness);
            emit(out, &None, &report.to_string())?;
            if report.is_ok() {
                Ok(())
            } else {
                Err(CliError::Domain(format!(
                    "chart {} has {} violation(s)",
                    c.name,
                    report.violations.len()
                )))
            }
        }
        Command::KoginRender {
            chart,
            format,
            options,
            out: dest,
        } => {
            let c = load_chart(chart)?;
            let text = match format {
                ChartFormat::Svg => render_chart_svg(&c, options),
                ChartFormat::Text => emit_chart(&c),
            };
            emit(out, dest, &text)
        }
        Command::MotifList => {
            let text: String = motif_names()
                .into_iter()
                .map(|n| format!("{n}\n"))
                .collect();
            emit(out, &None, &text)
        }
    }
}

/// Parses and runs, reporting errors on `err`. Returns the exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(argv).and_then(|cmd| run(&cmd, out));
    match result {
        Ok(()) => 0,
        Err(CliError::Display(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
