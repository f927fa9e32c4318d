//! `bdom` command-line front end.
//!
//! Exit codes: 0 success, 2 parse error, 3 infeasible parameters, 4 guard
//! violation (size limits, invalid dimensions), 5 internal error.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context as _;
use bdom_core::audit::{audit_grid_interval, audit_stars, embedded_grid_claim};
use bdom_core::families::{grid, path, star, star_orientation};
use bdom_core::interval::{flip_walk, jump_search};
use bdom_core::lattice::{builtin_pattern, check, EfficiencyClause};
use bdom_core::{gamma, gamma_bruteforce, gamma_undirected, Bits, Digraph, Graph, Params};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::formats::{self, FormatError};
use crate::parallel;
use crate::report::{self, ClaimRow, RunReport};

#[derive(Debug, Parser)]
#[command(name = "bdom", version, about = "Directed (t,r) broadcast domination toolkit")]
pub struct Cli {
    /// Wrap the payload in a run report (command, input digests, timing).
    #[arg(long, global = true)]
    pub report: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    /// Transmission strength.
    #[arg(long)]
    pub t: u32,
    /// Required reception.
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact domination number of a graph (.ug) or digraph (.dg).
    Gamma {
        graph: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        /// Read the file as a digraph (implied by a .dg extension).
        #[arg(long)]
        directed: bool,
    },
    /// Domination interval over all orientations of an undirected graph.
    Interval {
        graph: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        /// Report the first orientation attaining each value.
        #[arg(long)]
        witnesses: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Flip arcs one at a time between two orientations, tracking the domination number.
    Walk {
        graph: PathBuf,
        /// Starting orientation as a {0,1} string in canonical edge order.
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Emit a generated graph in .ug (or .dg for star orientations) format.
    Family {
        #[command(subcommand)]
        family: Family,
        /// Write to a file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Check a periodic lattice pattern on a torus.
    Torus {
        /// Builtin name (diag13, checker12, dense23) or a .pat file.
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Torus side multiplier over the pattern's base torus.
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, value_enum, default_value_t = ClauseArg::SelfConsistent)]
        clause: ClauseArg,
    },
    /// Compare the exact solver against subset enumeration.
    Oracle {
        graph: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        directed: bool,
    },
    /// Seeded search for single arc flips changing the domination number by 2 or more.
    Jumps {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Check closed-form claims against exhaustive enumeration.
    Audit {
        #[arg(value_enum)]
        target: AuditTarget,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Grid {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Star with `s` source leaves, as a digraph.
    StarOrientation {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClauseArg {
    SelfConsistent,
    Literal,
}

impl From<ClauseArg> for EfficiencyClause {
    fn from(c: ClauseArg) -> Self {
        match c {
            ClauseArg::SelfConsistent => EfficiencyClause::SelfConsistent,
            ClauseArg::Literal => EfficiencyClause::Literal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AuditTarget {
    Star,
    Grid,
    Embedded,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Markdown,
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl Failure {
    fn parse(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }
}

fn core_code(e: &bdom_core::Error) -> i32 {
    use bdom_core::Error::*;
    match e {
        InvalidParams { .. } | InfeasibleParams { .. } => 3,
        InvalidVertex { .. } | LoopEdge { .. } | DuplicateEdge { .. } | LengthMismatch { .. } => 2,
        TooLarge { .. }
        | TooManyEdges { .. }
        | InvalidDims
        | OutOfFormulaDomain
        | OutOfRange { .. }
        | NotAMultiple { .. }
        | DegenerateTorus { .. } => 4,
    }
}

impl From<bdom_core::Error> for Failure {
    fn from(e: bdom_core::Error) -> Self {
        Failure {
            code: core_code(&e),
            error: e.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::parse(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 5, error }
    }
}

/// Output of a command: text for stdout plus what the run report needs.
pub struct Outcome {
    pub payload: Payload,
    pub inputs: Vec<(PathBuf, Vec<u8>)>,
    pub params: Option<Params>,
}

pub enum Payload {
    Json(Value),
    Text(String),
}

fn params(a: ParamArgs) -> Result<Params, Failure> {
    Ok(Params::feasible(a.t, a.r)?)
}

fn read_input(path: &Path, inputs: &mut Vec<(PathBuf, Vec<u8>)>) -> Result<String, Failure> {
    let bytes = std::fs::read(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::parse)?;
    let text = String::from_utf8(bytes.clone())
        .with_context(|| format!("{} is not UTF-8", path.display()))
        .map_err(Failure::parse)?;
    inputs.push((path.to_owned(), bytes));
    Ok(text)
}

fn is_dg(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "dg")
}

enum Loaded {
    Undirected(Graph),
    Directed(Digraph),
}

fn load(path: &Path, directed: bool, inputs: &mut Vec<(PathBuf, Vec<u8>)>) -> Result<Loaded, Failure> {
    let text = read_input(path, inputs)?;
    if directed || is_dg(path) {
        Ok(Loaded::Directed(formats::parse_dg(&text)?))
    } else {
        Ok(Loaded::Undirected(formats::parse_ug(&text)?))
    }
}

fn load_ug(path: &Path, inputs: &mut Vec<(PathBuf, Vec<u8>)>) -> Result<Graph, Failure> {
    Ok(formats::parse_ug(&read_input(path, inputs)?)?)
}

fn parse_bits(s: &str) -> Result<Bits, Failure> {
    Bits::parse01(s).ok_or_else(|| Failure::parse(anyhow::anyhow!("orientation {s:?} is not a {{0,1}} string")))
}

pub fn execute(command: &Command) -> Result<Outcome, Failure> {
    let mut inputs = Vec::new();
    let mut used_params = None;
    let payload = match command {
        Command::Gamma { graph, params: pa, directed } => {
            let p = params(*pa)?;
            used_params = Some(p);
            let res = match load(graph, *directed, &mut inputs)? {
                Loaded::Undirected(g) => gamma_undirected(&g, p)?,
                Loaded::Directed(d) => gamma(&d, p)?,
            };
            Payload::Json(report::gamma_payload(&res, p))
        }
        Command::Oracle { graph, params: pa, directed } => {
            let p = params(*pa)?;
            used_params = Some(p);
            let d = match load(graph, *directed, &mut inputs)? {
                Loaded::Undirected(g) => g.doubly_directed(),
                Loaded::Directed(d) => d,
            };
            let brute = gamma_bruteforce(&d, p)?;
            let exact = gamma(&d, p)?;
            Payload::Json(report::oracle_payload(&exact, &brute, p))
        }
        Command::Interval { graph, params: pa, witnesses, jobs } => {
            let p = params(*pa)?;
            used_params = Some(p);
            let g = load_ug(graph, &mut inputs)?;
            let iv = parallel::domination_interval(&g, p, *witnesses, *jobs)?;
            Payload::Json(report::interval_payload(&iv, *witnesses))
        }
        Command::Walk { graph, from, to, params: pa } => {
            let p = params(*pa)?;
            used_params = Some(p);
            let g = load_ug(graph, &mut inputs)?;
            let trace = flip_walk(&g, &parse_bits(from)?, &parse_bits(to)?, p)?;
            Payload::Json(report::walk_payload(&trace))
        }
        Command::Family { family, .. } => Payload::Text(match family {
            Family::Grid { m, n } => formats::write_ug(&grid(*m, *n)?),
            Family::Star { n } => formats::write_ug(&star(*n)?),
            Family::Path { n } => formats::write_ug(&path(*n)),
            Family::StarOrientation { n, s } => formats::write_dg(&star_orientation(*n, *s)?),
        }),
        Command::Torus { pattern, params: pa, reps, clause } => {
            let p = params(*pa)?;
            used_params = Some(p);
            let pat = match builtin_pattern(pattern) {
                Some(pat) => pat,
                None => {
                    let path = Path::new(pattern);
                    let text = read_input(path, &mut inputs)?;
                    let name = path.file_stem().map_or(pattern.clone(), |s| s.to_string_lossy().into_owned());
                    formats::parse_pat(&name, &text)?
                }
            };
            if *reps == 0 {
                return Err(bdom_core::Error::InvalidDims.into());
            }
            let (a, b) = pat.base_torus();
            let rep = check(&pat, p, a * reps, b * reps, (*clause).into())?;
            Payload::Json(report::efficiency_payload(&rep))
        }
        Command::Jumps { params: pa, vertices, trials, seed } => {
            let p = params(*pa)?;
            used_params = Some(p);
            let found = jump_search(p, *vertices, *trials, *seed)?;
            Payload::Json(serde_json::json!({
                "t": p.t,
                "r": p.r,
                "vertices": vertices,
                "trials": trials,
                "seed": seed,
                "found": found.iter().map(report::jump_payload).collect::<Vec<_>>(),
            }))
        }
        Command::Audit { target, format } => {
            let rows = audit_rows(*target)?;
            match format {
                OutputFormat::Json => Payload::Json(report::rows_json(&rows)),
                OutputFormat::Markdown => Payload::Text(report::rows_markdown("Claim audit", &rows)),
            }
        }
    };
    Ok(Outcome {
        payload,
        inputs,
        params: used_params,
    })
}

/// Default audit instances: stars `n = 3..=6`; small grids whose orientation
/// space is enumerable; lattice-embedded grids with `mn ≤ 12`.
pub fn audit_rows(target: AuditTarget) -> Result<Vec<ClaimRow>, Failure> {
    let mut rows = Vec::new();
    if matches!(target, AuditTarget::Star | AuditTarget::All) {
        rows.extend(report::star_rows(&audit_stars(3..=6)?));
    }
    if matches!(target, AuditTarget::Grid | AuditTarget::All) {
        let audits = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)]
            .into_iter()
            .map(|(m, n)| audit_grid_interval(m, n))
            .collect::<Result<Vec<_>, _>>()?;
        rows.extend(report::grid_rows(&audits));
    }
    if matches!(target, AuditTarget::Embedded | AuditTarget::All) {
        let audits = [(1, 3), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)]
            .into_iter()
            .map(|(m, n)| embedded_grid_claim(m, n))
            .collect::<Result<Vec<_>, _>>()?;
        rows.extend(report::embedded_rows(&audits));
    }
    Ok(rows)
}

/// Parses `args`, runs the command and writes output. Returns the exit code.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let started = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            return f.code;
        }
    };
    let elapsed = started.elapsed().as_millis();
    let text = match (&outcome.payload, cli.report) {
        (payload, true) => {
            let inputs: Vec<(&Path, Vec<u8>)> =
                outcome.inputs.iter().map(|(p, b)| (p.as_path(), b.clone())).collect();
            let results = match payload {
                Payload::Json(v) => v.clone(),
                Payload::Text(t) => Value::String(t.clone()),
            };
            let rep = RunReport {
                command: &args[1..],
                inputs: &inputs,
                params: outcome.params,
                results,
                timing_ms: elapsed,
            };
            pretty(&rep.to_json())
        }
        (Payload::Json(v), false) => pretty(v),
        (Payload::Text(t), false) => t.clone(),
    };
    if let Command::Family { out: Some(path), .. } = &cli.command {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: writing {}: {e}", path.display());
            return 5;
        }
        return 0;
    }
    print!("{text}");
    0
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
