//! Front end for the `vcwidth` binary.
//!
//! [`run`] does all the work against caller-supplied streams and returns the
//! process exit code, so tests can drive it without spawning a process.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use vcwidth_core::{
    emit_td, minimum_vertex_cover, parse_cover, parse_gr, parse_td, pathwidth_cvc_capped, pathwidth_cvc_with,
    pathwidth_exact, pathwidth_vc, treewidth_exact, treewidth_vc_3k, treewidth_vc_4k, validate, Cover, CvcError,
    Graph, OracleError, Solution, SolveError, SolveStats,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// The default treewidth solver hands over to the oracle at or below this
/// many vertices when the cover is over the cap.
const FALLBACK_N: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "vcwidth", version, about = "Exact treewidth and pathwidth by vertex cover dynamic programming")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute treewidth.
    Tw {
        #[arg(long, value_enum, default_value_t = TwAlgo::Fast)]
        algo: TwAlgo,
        #[command(flatten)]
        common: SolveArgs,
    },
    /// Compute pathwidth.
    Pw {
        #[arg(long, value_enum, default_value_t = PwAlgo::Vc)]
        algo: PwAlgo,
        /// Largest vertex cover of the complement accepted by `cvc`.
        #[arg(long, default_value_t = 26, value_parser = clap::value_parser!(u32).range(1..))]
        max_kprime: u32,
        #[command(flatten)]
        common: SolveArgs,
    },
    /// Validate a `.td` decomposition against a `.gr` graph and print its width.
    Check {
        /// Graph file; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        td: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TwAlgo {
    #[value(name = "3k", alias = "tw-vc-3k")]
    Fast,
    #[value(name = "4k", alias = "tw-vc-4k")]
    Basic,
    #[value(name = "oracle", alias = "oracle-tw")]
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PwAlgo {
    #[value(name = "vc", alias = "pw-vc")]
    Vc,
    #[value(name = "cvc", alias = "pw-cvc")]
    Cvc,
    #[value(name = "oracle", alias = "oracle-pw")]
    Oracle,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph in `.gr` format; stdin when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Vertex cover to use instead of computing one (for `cvc`: a vertex
    /// cover of the complement).
    #[arg(long)]
    pub cover: Option<PathBuf>,
    /// Print an optimal decomposition in `.td` format after the width.
    #[arg(long)]
    pub emit_witness: bool,
    /// Print solver counters.
    #[arg(long)]
    pub stats: bool,
    /// Largest vertex cover accepted by the cover-parameterized solvers.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..=30))]
    pub max_k: u32,
    /// Largest vertex count accepted by the oracle.
    #[arg(long, default_value_t = 26, value_parser = clap::value_parser!(u32).range(1..=26))]
    pub max_n: u32,
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Cap(_) => EXIT_CAP,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Cover(_) => Failure::Input(e.to_string()),
            SolveError::CoverTooLarge { .. } => Failure::Cap(e.to_string()),
            SolveError::Internal(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<CvcError> for Failure {
    fn from(e: CvcError) -> Self {
        match e {
            CvcError::NotAComplementCover(..) | CvcError::UniverseMismatch { .. } => Failure::Input(e.to_string()),
            CvcError::CoverTooLarge { .. } => Failure::Cap(e.to_string()),
            CvcError::Internal(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Cap(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Diagnostics go to `err`, results to `out`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code();
        }
    };
    let mut report = String::new();
    let result = match cli.command {
        Command::Tw { algo, common } => solve_tw(algo, &common, stdin, &mut report),
        Command::Pw { algo, max_kprime, common } => solve_pw(algo, max_kprime as usize, &common, stdin, &mut report),
        Command::Check { input, td } => check(input.as_ref(), &td, stdin, &mut report),
    };
    let _ = out.write_all(report.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn read_source(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    match path {
        Some(p) => {
            buf = std::fs::read(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
        }
        None => {
            stdin.read_to_end(&mut buf).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(buf)
}

fn source_name(path: Option<&PathBuf>) -> String {
    path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string())
}

fn read_graph(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    let bytes = read_source(path, stdin)?;
    parse_gr(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", source_name(path))))
}

fn read_cover_file(path: &PathBuf, g: &Graph) -> Result<vcwidth_core::VertexSet, Failure> {
    let bytes = read_source(Some(path), &mut std::io::empty())?;
    parse_cover(&bytes, g.n()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// The given or computed vertex cover, checked against the cap.
fn cover_for(g: &Graph, args: &SolveArgs) -> Result<Cover, Failure> {
    let cover = match &args.cover {
        Some(p) => {
            let set = read_cover_file(p, g)?;
            Cover::new(g, set).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        None => minimum_vertex_cover(g),
    };
    Ok(cover)
}

fn over_cap(cover: &Cover, args: &SolveArgs) -> Option<Failure> {
    (cover.k() > args.max_k as usize)
        .then(|| Failure::Cap(format!("vertex cover of size {} exceeds --max-k {}", cover.k(), args.max_k)))
}

fn solve_tw(algo: TwAlgo, args: &SolveArgs, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    let g = read_graph(args.input.as_ref(), stdin)?;
    if algo == TwAlgo::Oracle {
        return oracle(&g, args, treewidth_exact, out);
    }
    let cover = cover_for(&g, args)?;
    if let Some(cap) = over_cap(&cover, args) {
        if algo == TwAlgo::Fast && g.n() <= FALLBACK_N && !args.emit_witness {
            return oracle(&g, args, treewidth_exact, out);
        }
        return Err(cap);
    }
    let sol = match algo {
        TwAlgo::Fast => treewidth_vc_3k(&g, Some(&cover))?,
        _ => treewidth_vc_4k(&g, Some(&cover))?,
    };
    report(&g, &sol, args, algo == TwAlgo::Fast, out);
    Ok(EXIT_OK)
}

fn solve_pw(
    algo: PwAlgo,
    max_kprime: usize,
    args: &SolveArgs,
    stdin: &mut dyn Read,
    out: &mut String,
) -> Result<i32, Failure> {
    let g = read_graph(args.input.as_ref(), stdin)?;
    let sol = match algo {
        PwAlgo::Oracle => return oracle(&g, args, pathwidth_exact, out),
        PwAlgo::Vc => {
            let cover = cover_for(&g, args)?;
            if let Some(cap) = over_cap(&cover, args) {
                return Err(cap);
            }
            pathwidth_vc(&g, Some(&cover))?
        }
        PwAlgo::Cvc => match &args.cover {
            Some(p) => {
                let set = read_cover_file(p, &g)?;
                if set.len() > max_kprime {
                    return Err(Failure::Cap(format!(
                        "complement cover of size {} exceeds --max-kprime {max_kprime}",
                        set.len()
                    )));
                }
                pathwidth_cvc_with(&g, &set)?
            }
            None => pathwidth_cvc_capped(&g, max_kprime)?,
        },
    };
    report(&g, &sol, args, false, out);
    Ok(EXIT_OK)
}

fn oracle(
    g: &Graph,
    args: &SolveArgs,
    exact: fn(&Graph) -> Result<i32, OracleError>,
    out: &mut String,
) -> Result<i32, Failure> {
    if args.emit_witness {
        return Err(Failure::Cap("the oracle computes widths only; no witness available".to_string()));
    }
    if g.n() > args.max_n as usize {
        return Err(Failure::Cap(format!("{} vertices exceed --max-n {}", g.n(), args.max_n)));
    }
    let width = exact(g)?;
    let _ = writeln!(out, "width: {width}");
    if args.stats {
        let _ = writeln!(out, "vertices: {}", g.n());
        let _ = writeln!(out, "table entries: {}", 1u64 << g.n());
    }
    Ok(EXIT_OK)
}

fn report(g: &Graph, sol: &Solution, args: &SolveArgs, layered: bool, out: &mut String) {
    let _ = writeln!(out, "width: {}", sol.width);
    if args.stats {
        write_stats(&sol.stats, layered, out);
    }
    if args.emit_witness {
        out.push_str(&emit_td(&sol.witness, g.n()));
    }
}

fn write_stats(s: &SolveStats, layered: bool, out: &mut String) {
    let _ = writeln!(out, "cover size: {}", s.cover_size);
    let _ = writeln!(out, "valid triples: {}", s.valid_triples);
    let _ = writeln!(out, "states: {}", s.states);
    let _ = writeln!(out, "table entries: {}", s.table_entries);
    if layered {
        let _ = writeln!(out, "join layers: {}", s.layers);
        let _ = writeln!(out, "join cells: {}", s.join_cells);
    }
}

fn check(input: Option<&PathBuf>, td: &PathBuf, stdin: &mut dyn Read, out: &mut String) -> Result<i32, Failure> {
    let g = read_graph(input, stdin)?;
    let bytes = read_source(Some(td), &mut std::io::empty())?;
    let doc = parse_td(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", td.display())))?;
    if doc.n != g.n() {
        return Err(Failure::Input(format!(
            "{}: declares {} vertices, graph has {}",
            td.display(),
            doc.n,
            g.n()
        )));
    }
    match validate(&g, &doc.decomposition) {
        Ok(w) => {
            let _ = writeln!(out, "width: {w}");
            Ok(EXIT_OK)
        }
        Err(violations) => {
            for v in &violations {
                let _ = writeln!(out, "violation: {v}");
            }
            Err(Failure::Input(format!("{}: not a valid decomposition ({} violations)", td.display(), violations.len())))
        }
    }
}
