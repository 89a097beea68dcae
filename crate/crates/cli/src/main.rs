//! `cangrow`: construct Artinian local algebras, compute canonical modules
//! and minimal free resolutions, and analyze Betti-sequence growth.

mod cache;
mod output;
mod ringspec;
mod run;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use run::{execute, CliError, CmdKind, Format, Request, EXIT_FINDING, EXIT_INPUT};

#[derive(Parser, Debug)]
#[command(name = "cangrow", version, about = "Exact workbench for Artinian local algebras: resolutions, canonical modules, Betti growth")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Ring spec file.
    #[arg(long)]
    ring: Option<PathBuf>,
    /// Second ring spec file (tensor).
    #[arg(long)]
    ring2: Option<PathBuf>,
    /// Module spec: canonical | k | cyclic(p,..) | ideal(p,..) | coker([[p,..],..]).
    #[arg(long, default_value = "canonical")]
    module: String,
    /// Second module spec (tor, ext, criteria).
    #[arg(long, default_value = "canonical")]
    module2: String,
    /// Resolution depth.
    #[arg(long, default_value_t = 8)]
    steps: usize,
    /// Override the ring file's field (e.g. Q or F32003).
    #[arg(long)]
    field: Option<String>,
    /// Seed for randomized scans.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample count for scans.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Entry-operation budget for elimination passes.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Resolution cache directory (advisory).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Print differentials (resolve).
    #[arg(long)]
    differentials: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Minimal free resolution: Betti numbers and optional differentials.
    Resolve(Opts),
    /// Canonical module summary.
    Canonical(Opts),
    /// Tor dimension table.
    Tor(Opts),
    /// Ext dimension table.
    Ext(Opts),
    /// Betti growth report (recurrence, curvature, classification).
    Growth(Opts),
    /// Gorenstein-deviation quotient g(R).
    Gdev(Opts),
    /// Socle test with canonical-module cross-check.
    Gorenstein(Opts),
    /// Run the bound and criterion battery on (R, M, N).
    Criteria(Opts),
    /// Local tensor of two rings with product-series verification.
    Tensor(Opts),
    /// Randomized scans: the b1-vs-b0 open question and witness growth.
    Scan(Opts),
    /// Re-run a recorded invocation and compare (timing excluded).
    Replay {
        /// JSON record produced by a previous run.
        record: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn build_request(kind: CmdKind, opts: &Opts, argv: Vec<String>) -> Result<Request, CliError> {
    let ring_text = opts.ring.as_ref().map(read_file).transpose()?;
    let ring2_text = opts.ring2.as_ref().map(read_file).transpose()?;
    Ok(Request {
        argv,
        kind,
        ring_text,
        ring2_text,
        module_spec: opts.module.clone(),
        module2_spec: opts.module2.clone(),
        steps: opts.steps,
        field_override: opts.field.clone(),
        seed: opts.seed,
        samples: opts.samples,
        budget_limit: opts.budget,
        cache_dir: opts.cache.clone(),
        with_differentials: opts.differentials,
    })
}

fn run_once(cli: &Cli, argv: Vec<String>) -> Result<(Format, output::Envelope), CliError> {
    let (kind, opts) = match &cli.cmd {
        Cmd::Resolve(o) => (CmdKind::Resolve, o),
        Cmd::Canonical(o) => (CmdKind::Canonical, o),
        Cmd::Tor(o) => (CmdKind::Tor, o),
        Cmd::Ext(o) => (CmdKind::Ext, o),
        Cmd::Growth(o) => (CmdKind::Growth, o),
        Cmd::Gdev(o) => (CmdKind::Gdev, o),
        Cmd::Gorenstein(o) => (CmdKind::Gorenstein, o),
        Cmd::Criteria(o) => (CmdKind::Criteria, o),
        Cmd::Tensor(o) => (CmdKind::Tensor, o),
        Cmd::Scan(o) => (CmdKind::Scan, o),
        Cmd::Replay { .. } => unreachable!("replay handled by caller"),
    };
    let req = build_request(kind, opts, argv)?;
    let env = execute(&req)?;
    Ok((opts.format, env))
}

/// Null out the timing field for byte comparison.
fn strip_timing(env: &output::Envelope) -> serde_json::Value {
    let mut v = serde_json::to_value(env).expect("serializable");
    v["timing_ms"] = serde_json::Value::Null;
    v
}

fn replay(record: &PathBuf, opts: &Opts) -> Result<i32, CliError> {
    let text = read_file(record)?;
    let rec: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::input(format!("bad record: {e}")))?;
    let argv: Vec<String> = rec["command"]
        .as_array()
        .ok_or_else(|| CliError::input("record has no command array"))?
        .iter()
        .map(|v| v.as_str().map(str::to_string))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::input("record command is not a string array"))?;
    let mut full = vec!["cangrow".to_string()];
    full.extend(argv.clone());
    let cli = Cli::try_parse_from(&full)
        .map_err(|e| CliError::input(format!("record command does not parse: {e}")))?;
    if matches!(cli.cmd, Cmd::Replay { .. }) {
        return Err(CliError::input("cannot replay a replay"));
    }
    let (_, env) = run_once(&cli, argv)?;
    let mut original = rec.clone();
    original["timing_ms"] = serde_json::Value::Null;
    let fresh = strip_timing(&env);
    let identical = original == fresh;
    match opts.format {
        Format::Json => print!("{}", env.to_json()),
        Format::Table => {
            print!("{}", env.render_table());
            println!("replay: {}", if identical { "identical" } else { "DIFFERS" });
        }
    }
    if identical {
        Ok(if env.findings.is_empty() { 0 } else { EXIT_FINDING })
    } else {
        eprintln!("replay differs from the record (timing excluded)");
        Ok(EXIT_INPUT)
    }
}

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let code = match &cli.cmd {
        Cmd::Replay { record, opts } => match replay(record, opts) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {}", e.message);
                e.exit
            }
        },
        _ => match run_once(&cli, argv) {
            Ok((format, env)) => {
                match format {
                    Format::Json => print!("{}", env.to_json()),
                    Format::Table => print!("{}", env.render_table()),
                }
                if env.findings.is_empty() {
                    0
                } else {
                    EXIT_FINDING
                }
            }
            Err(e) => {
                eprintln!("error: {}", e.message);
                e.exit
            }
        },
    };
    std::process::exit(code);
}
