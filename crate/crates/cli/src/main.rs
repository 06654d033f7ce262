//! `ercd`: runs verification suites and dumps operator tables.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
//! or configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ercd_core::reps::{Basis, Fault};
use ercd_core::suite::{run_suite, OutputFormat, Suite, SuiteConfig, Tolerances};
use ercd_core::tables::{dump_tables, TableKind};

const OUT_DIR_VAR: &str = "ERCD_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "ercd", version, about = "Verify the extended real Clifford-Dirac algebra")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites (the default).
    Run(RunArgs),
    /// Dump a multiplication, commutator or structure-constant table.
    Tables(TableArgs),
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Comma-separated suites: cd, ercd, percd, so6, a32, pgi, bosonic, fw, poincare, all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Number of seeded momentum samples.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Radius of the momentum ball samples are drawn from.
    #[arg(long, default_value_t = 10.0)]
    radius: f64,
    /// Tolerance override KEY=VALUE with KEY one of fw, symmetry, closure, casimir. Repeatable.
    #[arg(long = "tol", value_name = "KEY=VALUE")]
    tol: Vec<String>,
    /// text, json or csv.
    #[arg(long, default_value = "text")]
    format: String,
    /// Report file. Defaults to $ERCD_OUT_DIR/ercd-report.<ext> when that is set, else stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Test mode: add 1 to entry ROW:COL of gamma GAMMA before checking (GAMMA:ROW:COL).
    #[arg(long, value_name = "GAMMA:ROW:COL")]
    inject_fault: Option<String>,
    /// Run suites on separate threads.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Ort set name, e.g. cd16, ercd64, percd29, so6, a32, pgi8.
    #[arg(long)]
    set: String,
    /// multiplication, commutator or structure-constants.
    #[arg(long, default_value = "structure-constants")]
    kind: String,
    /// json, csv or text.
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn default_out(format: OutputFormat, stem: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(OUT_DIR_VAR)?;
    Some(PathBuf::from(dir).join(format!("{stem}.{}", format.extension())))
}

fn config(args: &RunArgs) -> ercd_core::Result<SuiteConfig> {
    let mut tolerances = Tolerances::default();
    for t in &args.tol {
        tolerances.apply_override(t)?;
    }
    let format: OutputFormat = args.format.parse()?;
    let cfg = SuiteConfig {
        suites: Suite::parse_list(&args.suite)?,
        mass: args.mass,
        samples: args.samples,
        seed: args.seed,
        radius: args.radius,
        tolerances,
        format,
        out: args.out.clone().or_else(|| default_out(format, "ercd-report")),
        fault: args.inject_fault.as_deref().map(str::parse::<Fault>).transpose()?,
        parallel: args.parallel,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn run(args: &RunArgs) -> ercd_core::Result<bool> {
    let cfg = config(args)?;
    let ledger = run_suite(&cfg)?;
    match &cfg.out {
        Some(path) => {
            ledger.write(cfg.format, path)?;
            eprintln!(
                "{}: {} passed, {} failed, {} noted; report written to {}",
                if ledger.passed { "PASS" } else { "FAIL" },
                ledger.summary.pass,
                ledger.summary.fail,
                ledger.summary.noted,
                path.display()
            );
        }
        None => print!("{}", ledger.render(cfg.format)?),
    }
    for c in ledger.failures() {
        eprintln!("failed: {} ({})", c.id, c.detail);
    }
    Ok(ledger.passed)
}

fn tables(args: &TableArgs) -> ercd_core::Result<()> {
    let kind: TableKind = args.kind.parse()?;
    let format: OutputFormat = args.format.parse()?;
    let body = dump_tables(&Basis::standard(), &args.set, kind, format)?;
    let stem = format!("{}-{}", args.set, kind);
    match args.out.clone().or_else(|| default_out(format, &stem)) {
        Some(path) => {
            std::fs::write(&path, body).map_err(|e| ercd_core::Error::Io(format!("{}: {e}", path.display())))?
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Some(Command::Tables(t)) => tables(t).map(|_| true),
        Some(Command::Run(r)) => run(r),
        None => run(&cli.run),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
