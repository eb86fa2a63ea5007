//! The `oed` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 resource cap, 4 cross-check
//! failure.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{run_bench, BenchError, BenchRecord};
use crate::delta::{run_engine, Engine, EngineError, EngineOptions};
use crate::generators::{gen_family, Family};
use crate::graph::{read_graph, strip_isolated, Graph, ReadError};
use crate::vc::{brute_force_vc_count, independent_set_count, vc_count_reduction_with, CountError};
use crate::verify::{run_verification, VerificationReport, VerifyParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_CROSS_CHECK: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "oed",
    about = "Odd/even edge-induced subgraph census and vertex cover counting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print O_k, E_k and Δ_k for every k.
    Delta {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = EngineArg::Gray)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count vertex covers.
    Count {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Reduction)]
        method: Method,
    },
    /// Cross-check every counting route on small and random graphs.
    Verify {
        #[arg(long, default_value_t = 5)]
        exhaustive_n: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a member of a graph family in edge-list format.
    Gen {
        family: String,
        size: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time engines on one graph.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "naive,gray,components")]
        engines: Vec<EngineArg>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Naive,
    Gray,
    Components,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Naive => Engine::Naive,
            EngineArg::Gray => Engine::Gray,
            EngineArg::Components => Engine::Components,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Reduction,
    Brute,
    Independent,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Reduction => "reduction",
            Method::Brute => "brute",
            Method::Independent => "independent",
        }
    }
}

/// An error with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl ToString) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

impl From<ReadError> for CliError {
    fn from(e: ReadError) -> Self {
        CliError::input(e)
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError {
            code: EXIT_CAP,
            message: e.to_string(),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        let code = match e {
            CountError::VertexCap { .. } | CountError::Engine(_) => EXIT_CAP,
            CountError::IsolatedVertex(_) | CountError::DimensionMismatch { .. } => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::Engine(e) => e.into(),
            e @ BenchError::Disagreement { .. } => CliError {
                code: EXIT_CROSS_CHECK,
                message: e.to_string(),
            },
        }
    }
}

/// Parses `OED_THREADS`; absent means one thread.
pub fn threads_from_env(value: Option<&str>) -> Result<usize, CliError> {
    match value {
        None => Ok(1),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(t),
            _ => Err(CliError::input(format!(
                "OED_THREADS must be a positive integer, got {s:?}"
            ))),
        },
    }
}

pub fn cmd_delta(
    input: &Path,
    engine: Engine,
    format: Format,
    opts: &EngineOptions,
) -> Result<String, CliError> {
    let g = read_graph(input)?;
    let run = run_engine(&g, engine, opts)?;
    Ok(match format {
        Format::Json => run.profile.to_json() + "\n",
        Format::Csv => run.profile.to_csv(),
    })
}

#[derive(Debug, Serialize)]
struct CountOutput {
    method: &'static str,
    n: usize,
    m: usize,
    isolated: usize,
    count: String,
}

pub fn cmd_count(input: &Path, method: Method, opts: &EngineOptions) -> Result<String, CliError> {
    let g = read_graph(input)?;
    count_graph(&g, method, opts)
}

fn count_graph(g: &Graph, method: Method, opts: &EngineOptions) -> Result<String, CliError> {
    let count = match method {
        Method::Reduction => vc_count_reduction_with(g, Engine::Gray, opts)?,
        Method::Brute => brute_force_vc_count(g)?,
        Method::Independent => independent_set_count(g)?,
    };
    let out = CountOutput {
        method: method.name(),
        n: g.vertex_count(),
        m: g.edge_count(),
        isolated: strip_isolated(g).isolated_count(),
        count: count.to_string(),
    };
    Ok(serde_json::to_string(&out).expect("plain struct serializes") + "\n")
}

pub fn cmd_verify(params: &VerifyParams) -> Result<VerificationReport, CliError> {
    run_verification(params).map_err(CliError::input)
}

/// Returns the edge list; writes it to `output` instead when given.
pub fn cmd_gen(
    family: &str,
    size: Option<usize>,
    output: Option<&Path>,
) -> Result<String, CliError> {
    let family: Family = family.parse().map_err(CliError::input)?;
    let size = match (family.is_sized(), size) {
        (true, None) => return Err(CliError::input(format!("{family} requires a size"))),
        (_, s) => s.unwrap_or(0),
    };
    let g = gen_family(family, size).map_err(CliError::input)?;
    let text = g.to_edge_list();
    match output {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

pub fn cmd_bench(
    input: &Path,
    engines: &[Engine],
    repeats: usize,
    opts: &EngineOptions,
) -> Result<Vec<BenchRecord>, CliError> {
    let g = read_graph(input)?;
    Ok(run_bench(&g, engines, repeats, opts)?)
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, threads_env: Option<&str>) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Invocation {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Invocation {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match dispatch(cli, threads_env) {
        Ok((stdout, code, stderr)) => Invocation {
            stdout,
            stderr,
            code,
        },
        Err(e) => Invocation {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
            code: e.code,
        },
    }
}

fn dispatch(cli: Cli, threads_env: Option<&str>) -> Result<(String, i32, String), CliError> {
    let threads = threads_from_env(threads_env)?;
    let opts = EngineOptions { threads };
    match cli.command {
        Command::Delta {
            input,
            engine,
            format,
        } => Ok((
            cmd_delta(&input, engine.into(), format, &opts)?,
            EXIT_OK,
            String::new(),
        )),
        Command::Count { input, method } => {
            Ok((cmd_count(&input, method, &opts)?, EXIT_OK, String::new()))
        }
        Command::Verify {
            exhaustive_n,
            n_max,
            m_max,
            trials,
            seed,
        } => {
            let report = cmd_verify(&VerifyParams {
                exhaustive_n,
                n_max,
                m_max,
                trials,
                seed,
                threads,
                corrupt_profile_of: None,
            })?;
            let (code, note) = if report.passing {
                (EXIT_OK, String::new())
            } else {
                (
                    EXIT_CROSS_CHECK,
                    format!("error: {} cross-check failures\n", report.failures.len()),
                )
            };
            Ok((report.to_json() + "\n", code, note))
        }
        Command::Gen {
            family,
            size,
            output,
        } => Ok((
            cmd_gen(&family, size, output.as_deref())?,
            EXIT_OK,
            String::new(),
        )),
        Command::Bench {
            input,
            engines,
            repeats,
        } => {
            let engines: Vec<Engine> = engines.into_iter().map(Engine::from).collect();
            let records = cmd_bench(&input, &engines, repeats, &opts)?;
            let out = records.iter().map(|r| r.to_json() + "\n").collect();
            Ok((out, EXIT_OK, String::new()))
        }
    }
}
