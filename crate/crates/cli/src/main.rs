//! `stcalc`: sequences, verification runs and evaluation for (s,t)-deformed calculus.
//!
//! Exit codes: 0 success, 1 a verification failure or computation error, 2 usage error.

mod eval;
mod params;
mod render;
mod seq;
mod show;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const MAX_D: usize = 12;
pub const MAX_N: i64 = 200;
pub const MAX_ORDER: usize = 64;
pub const MIN_VERIFY_ORDER: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "stcalc", version, about = "Exact (s,t)-deformed calculus")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a sequence of Fibonacci polynomials, polytopic numbers or q-binomials.
    Seq(seq::SeqArgs),
    /// Run the identity registry.
    Verify(VerifyArgs),
    /// Evaluate a polynomial or truncated series.
    Eval(eval::EvalArgs),
    /// List registered cases, printed sequences or named specializations.
    Show(show::ShowArgs),
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Truncation order.
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Only cases whose id contains this string.
    #[arg(long)]
    filter: Option<String>,
    /// Worker threads (defaults to ST_CALC_THREADS, then the number of CPUs).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<stcalc_core::Error> for CliError {
    fn from(e: stcalc_core::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Rendered output plus whether the command succeeded.
pub struct Output {
    pub body: String,
    pub ok: bool,
}

impl Output {
    pub fn ok(body: String) -> Self {
        Output { body, ok: true }
    }
}

fn run_verify(args: &VerifyArgs, format: Format) -> CliResult<Output> {
    if args.order < MIN_VERIFY_ORDER {
        return Err(CliError::Usage(format!("--order must be at least {MIN_VERIFY_ORDER}, got {}", args.order)));
    }
    if args.order > MAX_ORDER {
        return Err(CliError::Usage(format!("--order must be at most {MAX_ORDER}, got {}", args.order)));
    }
    let mut cfg = stcalc_verify::RunConfig::new(args.order, args.seed);
    cfg.filter = args.filter.clone();
    cfg.threads = args.threads;
    let report = stcalc_verify::run_with(&cfg)?;
    if report.cases.is_empty() {
        return Err(CliError::Usage(format!("no case matches `{}`", args.filter.as_deref().unwrap_or(""))));
    }
    let body = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => render::report_csv(&report)?,
    };
    Ok(Output { body, ok: report.all_ok() })
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Seq(a) => seq::run(a, cli.format),
        Command::Verify(a) => run_verify(a, cli.format),
        Command::Eval(a) => eval::run(a, cli.format),
        Command::Show(a) => show::run(a, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.body),
                None => std::io::stdout().write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
