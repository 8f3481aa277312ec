//! `orderlex`: Alexander polynomials, covers and orderability checks for
//! mapping tori described by JSON manifests.
//!
//! Exit codes: 0 success, 1 a check failed, 2 unreadable or invalid input,
//! 3 the monodromy is not a certified automorphism, 4 a `--hom` selector
//! does not resolve.

mod commands;
mod manifest;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orderlex::orderability::{default_depth, DEFAULT_SEED};

use commands::{Check, Failure, Settings};
use manifest::Manifest;

const DEFAULT_TRIALS: usize = 500;

#[derive(Debug, Parser)]
#[command(name = "orderlex", version, about = "Twisted Alexander polynomials and bi-orderability checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Magnus truncation depth [default: manifest, then ORDERLEX_DEPTH, then 6]
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Trials per randomized suite [default: manifest, then 500]
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Scale of the map to ℤ (twisted: default 1; lemma4: default 2)
    #[arg(long = "d-scale", global = true, allow_negative_numbers = true)]
    d_scale: Option<i64>,
    /// `name`, `name:kind` (trivial, sign, permutation, standard, regular)
    /// or `trivial`; repeatable
    #[arg(long, global = true)]
    hom: Vec<String>,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classical Alexander polynomial and orderability verdict
    Alexander { manifest: PathBuf },
    /// Twisted Alexander polynomials
    Twisted { manifest: PathBuf },
    /// Fiber of the finite cover and its lifted monodromy
    Cover { manifest: PathBuf },
    /// Run one verification and print a JSON report
    Verify {
        #[arg(value_enum)]
        check: Check,
        manifest: Option<PathBuf>,
    },
    /// Full JSON report for a manifest, or the built-in battery
    Report {
        #[arg(required_unless_present = "battery")]
        manifest: Option<PathBuf>,
        #[arg(long, conflicts_with = "manifest")]
        battery: bool,
    },
}

fn load(path: &Path) -> Result<Manifest, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Manifest::parse(&text).map_err(|e| Failure::Manifest(path.display().to_string(), e))
}

fn settings(cli: &Cli, m: Option<&Manifest>) -> Settings {
    let opts = m.map(|m| m.options).unwrap_or_default();
    Settings {
        depth: cli.depth.or(opts.depth).unwrap_or_else(default_depth).max(1),
        trials: cli.trials.or(opts.trials).unwrap_or(DEFAULT_TRIALS),
        seed: cli.seed.or(opts.seed).unwrap_or(DEFAULT_SEED),
        d_scale: cli.d_scale,
        selectors: cli.hom.clone(),
        json: cli.json,
    }
}

fn run(cli: &Cli) -> commands::Outcome {
    match &cli.command {
        Command::Alexander { manifest } => {
            let m = load(manifest)?;
            commands::alexander(&m, &settings(cli, Some(&m)))
        }
        Command::Twisted { manifest } => {
            let m = load(manifest)?;
            commands::twisted(&m, &settings(cli, Some(&m)))
        }
        Command::Cover { manifest } => {
            let m = load(manifest)?;
            commands::cover(&m, &settings(cli, Some(&m)))
        }
        Command::Verify { check, manifest } => {
            let m = manifest.as_deref().map(load).transpose()?;
            commands::verify(m.as_ref(), *check, &settings(cli, m.as_ref()))
        }
        Command::Report { battery: true, .. } => commands::battery_report(),
        Command::Report { manifest, .. } => {
            let m = load(manifest.as_deref().expect("clap requires a manifest"))?;
            commands::report(&m, &settings(cli, Some(&m)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, passed)) => {
            print!("{text}");
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
