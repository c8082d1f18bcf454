//! Command-line driver: `verify`, `solve`, `family` and `report`.
//!
//! Configuration comes from an optional JSON file, then the `--seed`,
//! `--input` and `--out` flags, then overrides of any other key written as
//! `--key=value` or with a dotted path such as `--grid.N=32`. Exit codes: 0
//! success, 1 numerical failure, 2 usage or configuration error.

mod commands;
mod config;
mod verify;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::Value;

use crate::error::Error;

pub use commands::{initial_configuration, laurent_cross_prediction};
pub use config::{apply_override, Command, GridConfig, RunConfig};
pub use verify::{run_verify, CheckResult, Environment, VerificationReport};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CommandArg {
    Verify,
    Solve,
    Family,
    Report,
}

#[derive(Debug, Parser)]
#[command(name = "hitchin", about = "Self-duality equations on a lattice torus")]
struct Args {
    command: CommandArg,
    /// JSON run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Configuration file to start from instead of the fixture.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for per-site loops.
    #[arg(long)]
    threads: Option<usize>,
}

const FLAGS: [&str; 5] = ["config", "seed", "input", "out", "threads"];

/// Splits `--a.b=value` overrides from the arguments clap understands.
fn split_overrides(args: &[String]) -> (Vec<String>, Vec<(String, String)>) {
    let mut plain = Vec::new();
    let mut overrides = Vec::new();
    for arg in args {
        if let Some(rest) = arg.strip_prefix("--") {
            if let Some((path, value)) = rest.split_once('=') {
                if !FLAGS.contains(&path) {
                    overrides.push((path.to_string(), value.to_string()));
                    continue;
                }
            }
        }
        plain.push(arg.clone());
    }
    (plain, overrides)
}

/// Builds the run configuration from parsed arguments.
fn build_config(args: &Args, overrides: &[(String, String)]) -> crate::Result<RunConfig> {
    let mut value = match &args.config {
        Some(path) => RunConfig::read(path)?,
        None => Value::Object(Default::default()),
    };
    if let Some(seed) = args.seed {
        apply_override(&mut value, "seed", &seed.to_string())?;
    }
    let obj = value.as_object_mut().ok_or_else(|| Error::InvalidArgument("config must be an object".into()))?;
    for (key, path) in [("out", &args.out), ("input", &args.input)] {
        if let Some(p) = path {
            obj.insert(key.into(), Value::String(p.display().to_string()));
        }
    }
    for (path, raw) in overrides {
        apply_override(&mut value, path, raw)?;
    }
    RunConfig::from_value(value)
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidArgument(_)
        | Error::InvalidGrid(_)
        | Error::Shape(_)
        | Error::GridMismatch
        | Error::CutoffTooLarge { .. }
        | Error::Io(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.
pub fn run(args: &[String]) -> i32 {
    let (plain, overrides) = split_overrides(args);
    let parsed = match Args::try_parse_from(std::iter::once("hitchin".to_string()).chain(plain)) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match build_config(&parsed, &overrides) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let dispatch = || match parsed.command {
        CommandArg::Verify => commands::verify(&cfg),
        CommandArg::Solve => commands::solve_command(&cfg),
        CommandArg::Family => commands::family(&cfg),
        CommandArg::Report => commands::report(&cfg),
    };
    let result = match parsed.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(dispatch),
            Err(e) => {
                eprintln!("error: cannot start {t} threads: {e}");
                return 2;
            }
        },
        None => dispatch(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
