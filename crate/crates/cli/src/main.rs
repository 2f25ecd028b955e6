use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod commands;

#[derive(Parser)]
#[command(name = "ktinv", version, about = "Exact invariants of Killing tensors on the Minkowski plane and of binary forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the general element and its parameter labels.
    General(TargetArgs),
    /// Print the infinitesimal generators of the group action.
    Generators(GeneratorsArgs),
    /// Search for polynomial invariants degree by degree.
    Invariants(InvariantsArgs),
    /// Check a polynomial for invariance on random group elements.
    Verify(VerifyArgs),
    /// Tabulate dimensions of the Killing tensor spaces.
    Dims(DimsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Family {
    Cit,
    Itkt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Source {
    Mst,
    Closed,
    Both,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct TargetArgs {
    #[arg(long, value_enum, default_value_t = Family::Itkt)]
    family: Family,
    /// Valence (itkt) or form degree (cit).
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GeneratorsArgs {
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, value_enum, default_value_t = Source::Mst)]
    source: Source,
    #[arg(long)]
    check_commutators: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    target: TargetArgs,
    #[arg(long, default_value_t = 4)]
    max_degree: u32,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    target: TargetArgs,
    /// Polynomial in the family's parameters, in canonical text syntax.
    #[arg(long)]
    poly: String,
    #[arg(long, default_value_t = 100)]
    trials: u64,
}

#[derive(Args)]
struct DimsArgs {
    /// Largest valence to tabulate.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[command(flatten)]
    out: OutputArgs,
}

/// Everything that determines a run, echoed into every report.
#[derive(Clone, Debug, Serialize)]
struct RunConfig {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<Family>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    source: Option<Source>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check_commutators: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    seed: u64,
    format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<PathBuf>,
}

impl RunConfig {
    fn new(command: &'static str, family: Option<Family>, n: usize, out: &OutputArgs) -> Self {
        RunConfig {
            command,
            family,
            n,
            max_degree: None,
            source: None,
            check_commutators: None,
            trials: None,
            poly: None,
            seed: out.seed,
            format: out.format,
            output: out.output.clone(),
        }
    }
}

/// A rendered report plus the process exit status it implies.
pub struct Outcome {
    text: String,
    json: serde_json::Value,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cfg, result) = match &cli.command {
        Command::General(a) => {
            let cfg = RunConfig::new("general", Some(a.family), a.n, &a.out);
            let r = commands::general(&cfg);
            (cfg, r)
        }
        Command::Generators(a) => {
            let mut cfg = RunConfig::new("generators", Some(a.target.family), a.target.n, &a.target.out);
            cfg.source = Some(a.source);
            cfg.check_commutators = Some(a.check_commutators);
            let r = commands::generators(&cfg);
            (cfg, r)
        }
        Command::Invariants(a) => {
            let mut cfg = RunConfig::new("invariants", Some(a.target.family), a.target.n, &a.target.out);
            cfg.max_degree = Some(a.max_degree);
            let r = commands::invariants(&cfg);
            (cfg, r)
        }
        Command::Verify(a) => {
            let mut cfg = RunConfig::new("verify", Some(a.target.family), a.target.n, &a.target.out);
            cfg.trials = Some(a.trials);
            cfg.poly = Some(a.poly.clone());
            let r = commands::verify(&cfg);
            (cfg, r)
        }
        Command::Dims(a) => {
            let cfg = RunConfig::new("dims", None, a.max_n, &a.out);
            let r = commands::dims(&cfg);
            (cfg, r)
        }
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cfg.format {
        Format::Text => format!("# ktinv {} {}\n{}", env!("CARGO_PKG_VERSION"), header(&cfg), outcome.text),
        Format::Json => {
            let envelope = serde_json::json!({
                "schema": "v1",
                "tool": "ktinv",
                "version": env!("CARGO_PKG_VERSION"),
                "config": cfg,
                "seed": cfg.seed,
                "result": outcome.json,
            });
            serde_json::to_string_pretty(&envelope).expect("reports serialize") + "\n"
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn header(cfg: &RunConfig) -> String {
    let mut parts = vec![cfg.command.to_string()];
    if let Some(f) = cfg.family {
        parts.push(format!("family={}", if f == Family::Cit { "cit" } else { "itkt" }));
    }
    parts.push(format!("n={}", cfg.n));
    if let Some(d) = cfg.max_degree {
        parts.push(format!("max-degree={d}"));
    }
    if let Some(t) = cfg.trials {
        parts.push(format!("trials={t}"));
    }
    parts.push(format!("seed={}", cfg.seed));
    parts.join(" ")
}
