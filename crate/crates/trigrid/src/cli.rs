//! The `trigrid` command line.
//!
//! Exit status: 0 on success, 1 when the input is not a valid document or
//! diagram, 2 when an enumeration budget ran out (partial output is still
//! written), 64 on usage errors and 74 on I/O errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trigrid_core::enumerate::{EnumerationOptions, Filter, DEFAULT_NODE_BUDGET};
use trigrid_core::link::DEFAULT_CROSSING_BOUND;
use trigrid_core::surface::{analyze, obstruction_report, SurfaceReport};
use trigrid_core::{constructions, ColorPair, GridDiagram, SymmetryGroup};

use crate::document::{self, Diagram, DiagramDocument, DocumentError};
use crate::parallel::{self, Limits};
use crate::report;
use crate::svg::{self, Style};

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "trigrid", version, about = "Triple grid diagrams: validation, invariants, enumeration and rendering")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Input document (default: standard input)
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file (default: standard output)
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Symmetry::None)]
    symmetry: Symmetry,
    /// Worker threads for enumeration and census
    #[arg(long, global = true, env = "TRIGRID_JOBS")]
    jobs: Option<usize>,
    /// Largest crossing count for which brackets are evaluated
    #[arg(long, global = true, default_value_t = DEFAULT_CROSSING_BOUND)]
    crossing_bound: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    #[arg(long, global = true, default_value_t = 60.0)]
    budget_seconds: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Symmetry {
    None,
    /// translations
    T,
    /// translations and color rotation
    Tr,
    /// translations, rotation and reflection
    Trr,
}

impl From<Symmetry> for SymmetryGroup {
    fn from(s: Symmetry) -> Self {
        match s {
            Symmetry::None => SymmetryGroup::None,
            Symmetry::T => SymmetryGroup::Translations,
            Symmetry::Tr => SymmetryGroup::TranslationsRotation,
            Symmetry::Trr => SymmetryGroup::TranslationsRotationReflection,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GridArg {
    Ab,
    Bc,
    Ca,
}

impl From<GridArg> for ColorPair {
    fn from(g: GridArg) -> Self {
        match g {
            GridArg::Ab => ColorPair::AlphaBeta,
            GridArg::Bc => ColorPair::BetaGamma,
            GridArg::Ca => ColorPair::GammaAlpha,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    N2,
    N3,
    Staircase,
    Squares,
    SquaresChain,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FilterArg {
    Simple,
    LagrangianEligible,
    ImmersedEligible,
    Orientable,
    Nonorientable,
    Connected,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Simple => Filter::Simple,
            FilterArg::LagrangianEligible => Filter::LagrangianEligible,
            FilterArg::ImmersedEligible => Filter::ImmersedEligible,
            FilterArg::Orientable => Filter::Orientable,
            FilterArg::Nonorientable => Filter::Nonorientable,
            FilterArg::Connected => Filter::Connected,
        }
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Grid number
    #[arg(long)]
    n: u32,
    /// Smallest size b (default 1)
    #[arg(long)]
    b_min: Option<usize>,
    /// Largest size b (default n)
    #[arg(long)]
    b_max: Option<usize>,
    #[arg(long = "filter", value_enum)]
    filters: Vec<FilterArg>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that the input document holds a valid diagram
    Validate,
    /// Print the three grid diagrams
    Grids,
    /// Legendrian invariants, unlink evidence, surface and status
    Analyze,
    /// Surface type and fillability status
    Classify,
    /// List diagrams of one grid number up to symmetry
    Enumerate(SearchArgs),
    /// Count diagrams by size, orientability, Euler characteristic and status
    Census(SearchArgs),
    /// Build a diagram from a named family
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Add a Legendrian pushoff to a grid diagram
    Pushoff {
        /// Grid to use when the input is a triple grid diagram
        #[arg(long, value_enum, default_value_t = GridArg::Ab)]
        grid: GridArg,
    },
    /// Write an SVG picture
    Render {
        /// Draw this grid's link instead of the whole diagram
        #[arg(long, value_enum)]
        grid: Option<GridArg>,
        /// Draw the Legendrian front of the grid
        #[arg(long)]
        front: bool,
    },
    /// Check the nonorientable-surface obstruction given two fillable links
    Obstruct {
        /// Two labels, e.g. ab,bc
        #[arg(long, value_delimiter = ',', required = true)]
        claim: Vec<String>,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => EXIT_INVALID,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<trigrid_core::Error> for Failure {
    fn from(e: trigrid_core::Error) -> Self {
        match e {
            trigrid_core::Error::InvalidParameter(_) | trigrid_core::Error::LabelError(_) => Failure::Usage(e.to_string()),
            e => Failure::Invalid(e.to_string()),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, common: &Common) -> Result<DiagramDocument, Failure> {
        let bytes = match &common.input {
            Some(path) => fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            None => {
                let mut buf = Vec::new();
                self.stdin.read_to_end(&mut buf).map_err(|e| Failure::Io(format!("standard input: {e}")))?;
                buf
            }
        };
        Ok(document::parse(&bytes)?)
    }

    fn write(&mut self, common: &Common, text: &str) -> Result<(), Failure> {
        match &common.output {
            Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
            None => self.stdout.write_all(text.as_bytes()).map_err(|e| Failure::Io(format!("standard output: {e}"))),
        }
    }
}

fn json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn emit_document(common: &Common, doc: &DiagramDocument) -> String {
    match common.format {
        Format::Json => document::emit(doc) + "\n",
        Format::Text => report::diagram_text(doc),
    }
}

fn analysis(common: &Common, doc: &DiagramDocument) -> Result<SurfaceReport, Failure> {
    match &doc.diagram {
        Diagram::Combinatorial(d) => Ok(analyze(d, common.crossing_bound)),
        Diagram::Geometric(d) => Ok(analyze(d, common.crossing_bound)),
        Diagram::Grid(_) => Err(Failure::Invalid("expected a combinatorial or geometric diagram, got a grid".into())),
    }
}

fn search_options(common: &Common, args: &SearchArgs) -> Result<EnumerationOptions, Failure> {
    let mut opts = EnumerationOptions::new(args.n).symmetry(common.symmetry.into()).node_budget(common.budget_nodes);
    opts.crossing_bound = common.crossing_bound;
    opts.filters = args.filters.iter().map(|&f| f.into()).collect();
    if args.b_min.is_some() || args.b_max.is_some() {
        opts.b_range = Some(args.b_min.unwrap_or(1)..=args.b_max.unwrap_or(args.n as usize));
    }
    if args.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(opts)
}

fn limits(common: &Common) -> Result<Limits, Failure> {
    if !common.budget_seconds.is_finite() || common.budget_seconds <= 0.0 {
        return Err(Failure::Usage("--budget-seconds must be positive".into()));
    }
    if common.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    Ok(Limits { jobs: common.jobs, time: Some(Duration::from_secs_f64(common.budget_seconds)) })
}

fn pick_grid(doc: &DiagramDocument, label: ColorPair) -> GridDiagram {
    match &doc.diagram {
        Diagram::Grid(g) => g.clone(),
        Diagram::Combinatorial(d) => d.three_grids()[label.index()].clone(),
        Diagram::Geometric(d) => d.grids()[label.index()].clone(),
    }
}

/// Runs one command; the returned code is the process exit status.
fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<u8, Failure> {
    let common = &cli.common;
    match &cli.command {
        Command::Validate => {
            let doc = io.read(common)?;
            let (n, b) = match &doc.diagram {
                Diagram::Combinatorial(d) => (Some(d.n()), d.size()),
                Diagram::Geometric(d) => (None, d.points().len() / 2),
                Diagram::Grid(g) => (Some(g.n()), g.points().len() / 2),
            };
            let text = match common.format {
                Format::Json => json(&serde_json::json!({ "valid": true, "type": doc.diagram.kind(), "n": n, "b": b })),
                Format::Text => format!("valid {} diagram, b = {b}\n", doc.diagram.kind()),
            };
            io.write(common, &text)?;
        }
        Command::Grids => {
            let doc = io.read(common)?;
            let grids: Vec<GridDiagram> = match &doc.diagram {
                Diagram::Combinatorial(d) => d.three_grids().to_vec(),
                Diagram::Geometric(d) => d.grids().to_vec(),
                Diagram::Grid(g) => vec![g.clone()],
            };
            let text = match common.format {
                Format::Json => json(&serde_json::Value::Array(
                    grids.into_iter().map(|g| document::to_value(&g.into())).collect(),
                )),
                Format::Text => grids.iter().map(report::grid_sketch).collect::<Vec<_>>().join("\n"),
            };
            io.write(common, &text)?;
        }
        Command::Analyze => {
            let doc = io.read(common)?;
            let r = analysis(common, &doc)?;
            let text = match common.format {
                Format::Json => json(&report::analysis_value(&r)),
                Format::Text => report::analysis_text(&r),
            };
            io.write(common, &text)?;
        }
        Command::Classify => {
            let doc = io.read(common)?;
            let r = analysis(common, &doc)?;
            let text = match common.format {
                Format::Json => json(&report::classification_value(&r)),
                Format::Text => report::classification_text(&r),
            };
            io.write(common, &text)?;
        }
        Command::Enumerate(args) => {
            let opts = search_options(common, args)?;
            let e = parallel::enumerate(&opts, limits(common)?)?;
            let text = match common.format {
                Format::Json => json(&report::enumeration_value(&e, opts.n, opts.symmetry)),
                Format::Text => report::enumeration_text(&e, opts.n, opts.symmetry),
            };
            io.write(common, &text)?;
            if !e.complete {
                return Ok(EXIT_BUDGET);
            }
        }
        Command::Census(args) => {
            let opts = search_options(common, args)?;
            let c = parallel::census(&opts, limits(common)?)?;
            let text = match common.format {
                Format::Json => json(&report::census_value(&c)),
                Format::Text => report::census_text(&c),
            };
            io.write(common, &text)?;
            if !c.complete {
                return Ok(EXIT_BUDGET);
            }
        }
        Command::Generate { family, n, k } => {
            let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("this family needs --{flag}")));
            let (d, name) = match family {
                Family::N2 => (constructions::example_n2(), "n2".to_string()),
                Family::N3 => (constructions::example_n3(), "n3".to_string()),
                Family::Staircase => {
                    let n = need(*n, "n")?;
                    (constructions::staircase(n)?, format!("staircase({n})"))
                }
                Family::Squares => {
                    let k = need(*k, "k")?;
                    (constructions::squares_antidiagonal(k)?, format!("squares({k})"))
                }
                Family::SquaresChain => {
                    let k = need(*k, "k")?;
                    (constructions::squares_chain(k)?, format!("squares-chain({k})"))
                }
            };
            let doc = DiagramDocument::from(d).named(name).with_provenance("trigrid generate");
            io.write(common, &emit_document(common, &doc))?;
        }
        Command::Pushoff { grid } => {
            let doc = io.read(common)?;
            let g = pick_grid(&doc, (*grid).into());
            let mut out = DiagramDocument::from(constructions::pushoff(&g)).with_provenance("trigrid pushoff");
            out.name = doc.name.map(|n| format!("pushoff of {n}"));
            io.write(common, &emit_document(common, &out))?;
        }
        Command::Render { grid, front } => {
            let doc = io.read(common)?;
            let style = Style::default();
            let text = match (&doc.diagram, grid, front) {
                (_, _, true) => svg::render_front(&pick_grid(&doc, grid.map_or(ColorPair::AlphaBeta, Into::into)), style),
                (Diagram::Grid(g), _, false) => svg::render_grid(g, style),
                (_, Some(label), false) => svg::render_grid(&pick_grid(&doc, (*label).into()), style),
                (Diagram::Combinatorial(d), None, false) => svg::render_combinatorial(d, style),
                (Diagram::Geometric(d), None, false) => svg::render_geometric(d, style),
            };
            io.write(common, &text)?;
        }
        Command::Obstruct { claim } => {
            let doc = io.read(common)?;
            let labels = claim
                .iter()
                .map(|s| ColorPair::parse(s).ok_or_else(|| Failure::Usage(format!("unknown label {s:?}, use ab, bc or ca"))))
                .collect::<Result<Vec<_>, _>>()?;
            let verdict = match &doc.diagram {
                Diagram::Combinatorial(d) => obstruction_report(d, &labels)?,
                Diagram::Geometric(d) => obstruction_report(d, &labels)?,
                Diagram::Grid(_) => return Err(Failure::Invalid("expected a combinatorial or geometric diagram".into())),
            };
            let text = match common.format {
                Format::Json => json(&report::obstruction_value(&verdict)),
                Format::Text => report::obstruction_text(&verdict),
            };
            io.write(common, &text)?;
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { stdin, stdout };
    match execute(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "trigrid: {}", f.message());
            f.code()
        }
    }
}
