//! Command line front end for `gext`.
//!
//! Exit codes: 0 success, 2 bad usage or input, 3 a `--verify` cross-check
//! disagreed, 4 I/O failure, 5 a size cap was hit.

pub mod query;
pub mod render;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gext::resolution::Arrow;
use gext::{
    build_d, build_dstar, build_word, ext1_dimension_table, ext1_oracle, ext_even_exhaustive,
    ext_with_cap, period_closed_form, period_iterative, ExtDecomposition, ExtShape, PeriodResult,
    Rim, Sign, TrapeziumWord, DEFAULT_MAX_DEGREE, DEFAULT_TABLE_CAP,
};

use query::{Input, LetterSpan, MatrixEntry, Payload, QueryResult, Trace};

#[derive(Debug, Parser)]
#[command(
    name = "gext",
    version,
    about = "Periods and Ext groups of rank one modules L_I"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Period of the minimal projective resolution of L_I.
    Period(PeriodArgs),
    /// Ext^d(L_I, L_J).
    Ext(ExtArgs),
    /// Trapezium word of two rims.
    Word(PairArgs),
    /// Presentation matrix D of L_I, or D* when a second rim is given.
    Matrix(MatrixArgs),
    /// dim Ext^1 for every ordered pair of k-subsets.
    Table(TableArgs),
    /// SVG picture of one or two rims.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct Circle {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct PeriodArgs {
    #[command(flatten)]
    pub circle: Circle,
    /// Comma-separated ascending labels.
    #[arg(long)]
    pub rim: String,
    /// Also run the iterative route and compare.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub circle: Circle,
    #[arg(long = "rim-i", alias = "rim")]
    pub rim_i: String,
    #[arg(long = "rim-j")]
    pub rim_j: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExtArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, default_value_t = 1)]
    pub degree: u32,
    /// Recompute with the determinantal-divisor oracle or the full a_uv table.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub circle: Circle,
    #[arg(long = "rim-i", alias = "rim")]
    pub rim_i: String,
    #[arg(long = "rim-j")]
    pub rim_j: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub circle: Circle,
    /// Largest n accepted.
    #[arg(long, env = "GEXT_MAX_N", default_value_t = DEFAULT_TABLE_CAP)]
    pub max_n: usize,
    /// JSON instead of CSV.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub circle: Circle,
    #[arg(long = "rim-i", alias = "rim")]
    pub rim_i: String,
    #[arg(long = "rim-j")]
    pub rim_j: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Verification(String),
    Io(String),
    SizeCap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Io(_) => 4,
            CliError::SizeCap(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::SizeCap(m) => write!(f, "too large: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gext::Error> for CliError {
    fn from(e: gext::Error) -> Self {
        match e {
            gext::Error::TooLarge { .. } => CliError::SizeCap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Period(a) => cmd_period(a),
        Command::Ext(a) => cmd_ext(a),
        Command::Word(a) => cmd_word(a),
        Command::Matrix(a) => cmd_matrix(a),
        Command::Table(a) => cmd_table(a),
        Command::Render(a) => cmd_render(a),
    }
}

fn parse_rim(c: &Circle, text: &str) -> CliResult<Rim> {
    Ok(Rim::parse(c.n, c.k, text)?)
}

fn input(c: &Circle, rims: &[&Rim], degree: Option<u32>) -> Input {
    Input {
        n: c.n,
        k: c.k,
        rims: rims.iter().map(|r| r.elements()).collect(),
        degree,
    }
}

pub fn cmd_period(a: &PeriodArgs) -> CliResult<String> {
    let rim = parse_rim(&a.circle, &a.rim)?;
    let period = period_closed_form(&rim);
    if a.verify && period_iterative(&rim) != period {
        return Err(CliError::Verification(format!(
            "closed form gives {period:?}, iteration gives {:?}",
            period_iterative(&rim)
        )));
    }
    if a.json {
        let q = QueryResult::new(
            "period",
            input(&a.circle, &[&rim], None),
            Payload::Period {
                period: period.finite(),
                projective: period == PeriodResult::Projective,
            },
            Trace {
                path: "closed_form".into(),
                rotation: None,
                verified: a.verify,
            },
        );
        return Ok(q.to_json());
    }
    let mut text = match period {
        PeriodResult::Finite(m) => m.to_string(),
        PeriodResult::Projective => "projective".to_string(),
    };
    if a.verify {
        text.push_str(" (verified)");
    }
    text.push('\n');
    Ok(text)
}

fn shape_name(shape: &ExtShape) -> &'static str {
    match shape {
        ExtShape::OddLike { .. } => "odd_like",
        ExtShape::EvenCyclic { .. } => "even_cyclic",
        ExtShape::Zero => "zero",
    }
}

fn ext_path(j: &Rim, e: &ExtDecomposition) -> &'static str {
    if e.context.is_projective() {
        "projective"
    } else if e.degree.is_multiple_of(2) {
        "auv_min"
    } else if &e.context == j {
        "identical_rims"
    } else {
        "box_merge"
    }
}

fn factor_text(e: &ExtDecomposition) -> String {
    let factors = e.factors();
    if factors.is_empty() {
        return "0".to_string();
    }
    factors
        .iter()
        .map(|&h| match h {
            1 => "F[t]/(t)".to_string(),
            h => format!("F[t]/(t^{h})"),
        })
        .collect::<Vec<_>>()
        .join(" x ")
}

pub fn cmd_ext(a: &ExtArgs) -> CliResult<String> {
    let c = &a.pair.circle;
    let i = parse_rim(c, &a.pair.rim_i)?;
    let j = parse_rim(c, &a.pair.rim_j)?;
    let e = ext_with_cap(&i, &j, a.degree, DEFAULT_MAX_DEGREE)?;
    if a.verify {
        let check = if a.degree % 2 == 1 {
            let (mut oracle, _) = ext1_oracle(&e.context, &j)?;
            oracle.degree = a.degree;
            oracle
        } else {
            ext_even_exhaustive(&i, &j, a.degree)?
        };
        if check != e {
            return Err(CliError::Verification(format!(
                "fast route gives {:?}, cross-check gives {:?}",
                e.factors(),
                check.factors()
            )));
        }
    }
    if a.pair.json {
        let rotation = match a.degree % 2 {
            1 if !e.context.is_projective() && e.context != j => {
                Some(build_word(&e.context, &j)?.rotation())
            }
            _ => None,
        };
        let q = QueryResult::new(
            "ext",
            input(c, &[&i, &j], Some(a.degree)),
            Payload::Ext {
                degree: e.degree,
                shape: shape_name(&e.shape).into(),
                exponents: e.factors(),
                dimension: e.dimension,
                context: e.context.elements(),
            },
            Trace {
                path: ext_path(&j, &e).into(),
                rotation,
                verified: a.verify,
            },
        );
        return Ok(q.to_json());
    }
    let mut text = format!(
        "Ext^{}(L_I, L_J) = {}\ndimension {}",
        a.degree,
        factor_text(&e),
        e.dimension
    );
    if a.verify {
        text.push_str(" (verified)");
    }
    text.push('\n');
    Ok(text)
}

fn word_payload(w: &TrapeziumWord) -> Payload {
    Payload::Word {
        raw: w.raw_string(),
        reduced: w.reduced_string(),
        s: w.box_count(),
        boxes: w.boxes().iter().map(|b| [b.left, b.right]).collect(),
        letters: w
            .letters()
            .iter()
            .map(|l| LetterSpan {
                kind: l.kind.to_string(),
                start_edge: l.start_edge,
                length: l.length,
            })
            .collect(),
    }
}

pub fn cmd_word(a: &PairArgs) -> CliResult<String> {
    let i = parse_rim(&a.circle, &a.rim_i)?;
    let j = parse_rim(&a.circle, &a.rim_j)?;
    let w = build_word(&i, &j)?;
    if a.json {
        let q = QueryResult::new(
            "word",
            input(&a.circle, &[&i, &j], None),
            word_payload(&w),
            Trace {
                path: "edge_scan".into(),
                rotation: Some(w.rotation()),
                verified: false,
            },
        );
        return Ok(q.to_json());
    }
    let boxes: Vec<String> = w
        .boxes()
        .iter()
        .map(|b| format!("({},{})", b.left, b.right))
        .collect();
    let show = |s: String| {
        if s.is_empty() {
            "(empty)".to_string()
        } else {
            s
        }
    };
    Ok(format!(
        "raw {}\nreduced {}\ns {}\nboxes {}\nrotation {}\n",
        show(w.raw_string()),
        show(w.reduced_string()),
        w.box_count(),
        show(boxes.join(" ")),
        w.rotation()
    ))
}

fn sign_of(s: Sign) -> i8 {
    s.as_i64() as i8
}

pub fn cmd_matrix(a: &MatrixArgs) -> CliResult<String> {
    let i = parse_rim(&a.circle, &a.rim_i)?;
    let (name, rows, cols, entries, text) = match &a.rim_j {
        Some(text_j) => {
            let j = parse_rim(&a.circle, text_j)?;
            let m = build_dstar(&i, &j)?;
            let entries = m
                .entries()
                .map(|((row, col), mono)| MatrixEntry {
                    row,
                    col,
                    sign: sign_of(mono.sign),
                    arrow: None,
                    exponent: mono.exponent,
                })
                .collect();
            let text = format!(
                "rows (valleys) {:?}\ncols (peaks) {:?}\n{m}",
                m.row_labels(),
                m.col_labels()
            );
            (
                "dstar",
                m.row_labels().to_vec(),
                m.col_labels().to_vec(),
                entries,
                text,
            )
        }
        None => {
            let d = build_d(&i);
            let entries: Vec<MatrixEntry> = d
                .entries
                .iter()
                .map(|e| MatrixEntry {
                    row: e.row,
                    col: e.col,
                    sign: sign_of(e.sign),
                    arrow: Some(match e.arrow {
                        Arrow::X => "x".into(),
                        Arrow::Y => "y".into(),
                    }),
                    exponent: e.exponent as u32,
                })
                .collect();
            let text = d_text(&d.rows, &d.cols, &entries);
            ("d", d.rows.clone(), d.cols.clone(), entries, text)
        }
    };
    if a.json {
        let mut rims = vec![&i];
        let j;
        if let Some(t) = &a.rim_j {
            j = parse_rim(&a.circle, t)?;
            rims.push(&j);
        }
        let q = QueryResult::new(
            "matrix",
            input(&a.circle, &rims, None),
            Payload::Matrix {
                name: name.into(),
                rows,
                cols,
                entries,
            },
            Trace {
                path: name.into(),
                rotation: None,
                verified: false,
            },
        );
        return Ok(q.to_json());
    }
    Ok(text)
}

fn d_text(rows: &[usize], cols: &[usize], entries: &[MatrixEntry]) -> String {
    let cell = |r: usize, c: usize| -> String {
        let terms: Vec<String> = entries
            .iter()
            .filter(|e| e.row == r && e.col == c)
            .map(|e| {
                let sign = if e.sign < 0 { "-" } else { "" };
                format!("{sign}{}^{}", e.arrow.as_deref().unwrap_or("t"), e.exponent)
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    };
    let cells: Vec<Vec<String>> = (0..rows.len())
        .map(|r| (0..cols.len()).map(|c| cell(r, c)).collect())
        .collect();
    let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    let mut out = format!("rows (valleys) {rows:?}\ncols (peaks) {cols:?}\n");
    for row in cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(&format!("[ {} ]\n", line.join("  ")));
    }
    out
}

pub fn cmd_table(a: &TableArgs) -> CliResult<String> {
    let c = &a.circle;
    let table = ext1_dimension_table(c.n, c.k, a.max_n)?;
    if a.json {
        let q = QueryResult::new(
            "table",
            input(c, &[], None),
            Payload::Table {
                rims: table.rims.iter().map(|r| r.elements()).collect(),
                dims: table.dims.clone(),
            },
            Trace {
                path: "box_merge".into(),
                rotation: None,
                verified: false,
            },
        );
        return Ok(q.to_json());
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let header =
        std::iter::once("rim".to_string()).chain(table.rims.iter().map(|r| r.to_label_string()));
    w.write_record(header).map_err(io)?;
    for (rim, row) in table.rims.iter().zip(&table.dims) {
        let record =
            std::iter::once(rim.to_label_string()).chain(row.iter().map(|d| d.to_string()));
        w.write_record(record).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

pub fn cmd_render(a: &RenderArgs) -> CliResult<String> {
    let i = parse_rim(&a.circle, &a.rim_i)?;
    let j = a
        .rim_j
        .as_deref()
        .map(|t| parse_rim(&a.circle, t))
        .transpose()?;
    let svg = render::render_svg(&i, j.as_ref())?;
    match &a.out {
        Some(path) => {
            std::fs::write(path, &svg)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(svg),
    }
}
