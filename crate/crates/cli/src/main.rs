use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use terwilliger_core::algebra::mul_basis;
use terwilliger_core::oracle::DEFAULT_CAP;
use terwilliger_core::radical::DEFAULT_SEED;
use terwilliger_core::report::Report;
use terwilliger_core::verify::{Verifier, VerifyOptions};
use terwilliger_core::{BasisTriple, SchemeSpec};

/// Structure of the Terwilliger algebra of a factorial association scheme.
#[derive(Parser)]
#[command(name = "terwilliger", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, center, radical, Wedderburn blocks and verdicts.
    Report(SchemeArgs),
    /// Cross-check every structural claim against explicit matrices.
    Verify(VerifyArgs),
    /// Multiply two basis elements B_{g,h,i}.
    Mul(MulArgs),
}

#[derive(Args)]
struct SchemeArgs {
    /// Factor sizes, e.g. 2,3,3.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<u64>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Emit JSON.
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Number of distinct base points to realize the algebra at.
    #[arg(long, default_value_t = 2)]
    base_points: usize,
    /// Seed for sampled nilpotency sweeps.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest number of points the matrix realization may use.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    oracle_cap: usize,
}

#[derive(Args)]
struct MulArgs {
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Left factor as g,h,i bitstrings, e.g. 01,11,11.
    lhs: String,
    /// Right factor as g,h,i bitstrings.
    rhs: String,
}

/// Failures that are the caller's fault exit with 2; failed checks with 1.
enum Outcome {
    Ok,
    ChecksFailed,
}

fn build_spec(args: &SchemeArgs) -> Result<Arc<SchemeSpec>> {
    let spec = SchemeSpec::new(args.sizes.clone(), args.characteristic).context("invalid scheme")?;
    Ok(Arc::new(spec))
}

fn report(args: &SchemeArgs) -> Result<Outcome> {
    let spec = build_spec(args)?;
    let report = Report::build(&spec)?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(Outcome::Ok)
}

fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let spec = build_spec(&args.scheme)?;
    let mut report = Report::build(&spec)?;
    let opts = VerifyOptions {
        base_points: args.base_points,
        seed: args.seed,
        oracle_cap: args.oracle_cap,
        ..VerifyOptions::default()
    };
    let start = Instant::now();
    let summary = Verifier::new(&spec, opts)?.run()?;
    // timings go to stderr so stdout stays reproducible
    eprintln!("verification finished in {:.2?}", start.elapsed());
    let failed = summary.first_failure().map(|c| format!("{}: {}", c.name, c.detail));
    report.verification = Some(summary);
    if args.scheme.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    match failed {
        Some(first) => {
            eprintln!("verification failed at {first}");
            Ok(Outcome::ChecksFailed)
        }
        None => Ok(Outcome::Ok),
    }
}

fn mul(args: &MulArgs) -> Result<Outcome> {
    let spec = build_spec(&args.scheme)?;
    let lhs = BasisTriple::parse(&spec, &args.lhs).with_context(|| format!("left factor {}", args.lhs))?;
    let rhs = BasisTriple::parse(&spec, &args.rhs).with_context(|| format!("right factor {}", args.rhs))?;
    let product = mul_basis(&spec, &lhs, &rhs);
    if args.scheme.json {
        let value = match &product {
            Some((c, t)) => json!({ "coeff": c.to_string(), "triple": t.to_strings() }),
            None => json!({ "coeff": "0", "triple": null }),
        };
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        match product {
            Some((c, t)) => println!("{c} · {t}"),
            None => println!("zero"),
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report(args) => report(args),
        Command::Verify(args) => verify(args),
        Command::Mul(args) => mul(args),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
