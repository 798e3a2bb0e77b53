//! Range verifier for the totient-equation forms.
//!
//! Exit codes: 0 held, 1 a failure was found, 2 usage error, 3 resource limit.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use phi_systems::arith::{SpfTable, DEFAULT_MEMORY_BUDGET};
use phi_systems::certify::certify;
use phi_systems::sweep::{emit_counts, emit_report, run_sweep, Format, SweepConfig, SweepOptions, Task};
use phi_systems::Error;

const MEMORY_BUDGET_VAR: &str = "PHI_VERIFY_MEMORY_BUDGET";

#[derive(Parser)]
#[command(name = "phi-verify", version, about = "Verify prime statements through their totient-equation forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify one integer (or a range) with its Fermat congruence system
    Certify {
        m: Option<u64>,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// phi(n + x) + 1 = n + x on 0 < x < n - 2
    Bertrand(SweepArgs),
    /// phi(n - x) + 1 = n - x and phi(n + x) + 1 = n + x on 0 <= x <= n - 3
    Binary(SweepArgs),
    /// The triple system for odd n > 5
    Ternary(SweepArgs),
    /// The triple system with the mod-3 congruence
    Peculiar(SweepArgs),
    /// Peculiar solvability of n against n - 3 being a sum of two primes
    Proposition(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    from: Option<u64>,
    #[arg(long)]
    to: Option<u64>,
    /// json, csv or table
    #[arg(long, default_value = "table")]
    format: String,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    first_witness_only: bool,
    #[arg(long)]
    verify_against_oracle: bool,
    /// Decide primality through the Fermat congruence systems
    #[arg(long)]
    via_fermat: bool,
    /// Worker threads (0 = one per core)
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Also write "n count" lines to this file
    #[arg(long)]
    emit_counts: Option<PathBuf>,
    /// Omit per-n rows from the report
    #[arg(long)]
    summary_only: bool,
    /// Include elapsed time in the report
    #[arg(long)]
    timing: bool,
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn memory_budget() -> Result<u64, Failure> {
    match std::env::var(MEMORY_BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{MEMORY_BUDGET_VAR}: not a byte count: {v}"))),
        Err(_) => Ok(DEFAULT_MEMORY_BUDGET),
    }
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn certify_one(m: u64, args: &SweepArgs) -> Result<bool, Failure> {
    let format: Format = args.format.parse()?;
    let table = SpfTable::with_budget(m.isqrt().max(2), memory_budget()?)?;
    let cert = certify(&table, m)?;
    let mut out = output(args.out.as_ref())?;
    match format {
        Format::Json => {
            serde_json::to_writer(&mut out, &cert).map_err(Error::from)?;
            writeln!(out)?;
        }
        Format::Csv | Format::Table => {
            writeln!(out, "subject  {}", cert.subject)?;
            writeln!(out, "verdict  {:?}", cert.verdict)?;
            if let Some(p) = cert.failing_modulus {
                writeln!(out, "failing  {p}")?;
            }
            for c in &cert.checks {
                writeln!(out, "{}^{} mod {} = {}", c.base, c.exponent, c.modulus, c.residue)?;
            }
        }
    }
    out.flush()?;
    Ok(true)
}

fn sweep(task: Task, args: &SweepArgs) -> Result<bool, Failure> {
    let format: Format = args.format.parse()?;
    let lo = args.from.unwrap_or(match task {
        Task::Bertrand => 4,
        Task::Ternary | Task::Peculiar | Task::Proposition => 7,
        Task::Binary | Task::Certify => 2,
    });
    let hi = args.to.ok_or_else(|| Failure::Usage("--to is required for a range sweep".into()))?;
    let options = SweepOptions {
        config: SweepConfig {
            first_witness_only: args.first_witness_only,
            verify_against_oracle: args.verify_against_oracle,
            via_fermat: args.via_fermat,
        },
        threads: args.threads,
        per_n: !args.summary_only,
        record_timing: args.timing,
        memory_budget: memory_budget()?,
    };

    eprintln!("{task}: sweeping [{lo}, {hi}] on {} thread(s)", args.threads);
    let started = std::time::Instant::now();
    let report = run_sweep(task, lo, hi, &options)?;
    eprintln!(
        "{task}: checked {} values in {:.2?}, {} failure(s)",
        report.checked,
        started.elapsed(),
        report.failures.len()
    );

    let mut out = output(args.out.as_ref())?;
    emit_report(&report, format, &mut out)?;
    out.flush()?;
    if let Some(path) = &args.emit_counts {
        let mut counts = BufWriter::new(File::create(path)?);
        emit_counts(&report, &mut counts)?;
        counts.flush()?;
    }
    for n in &report.failures {
        eprintln!("{task}: no witness for n = {n}");
    }
    Ok(report.held())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Certify { m: Some(m), sweep: args } => certify_one(*m, args),
        Command::Certify { m: None, sweep: args } => sweep(Task::Certify, args),
        Command::Bertrand(args) => sweep(Task::Bertrand, args),
        Command::Binary(args) => sweep(Task::Binary, args),
        Command::Ternary(args) => sweep(Task::Ternary, args),
        Command::Peculiar(args) => sweep(Task::Peculiar, args),
        Command::Proposition(args) => sweep(Task::Proposition, args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
