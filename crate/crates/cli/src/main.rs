//! `braidlab` command-line front end.

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use braidlab::Budget;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(
    name = "braidlab",
    version,
    about = "Braids, free Lie algebras and the simplicial circle"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest Lie degree any computation may reach.
    #[arg(long, global = true)]
    budget_degree: Option<usize>,
    /// Largest simplicial level any computation may reach.
    #[arg(long, global = true)]
    budget_level: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Word problem, strand operations and linking numbers of a braid.
    Braid(BraidArgs),
    /// The cabling map from the free group on y1..yn into P_{n+1}.
    Theta(ThetaArgs),
    /// The associated graded Lie algebras.
    #[command(subcommand)]
    Gr(GrCommand),
    /// Homology of the graded pieces of the simplicial circle.
    Homology(HomologyArgs),
    /// Simplicial identities, relation checks and random property suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct BraidArgs {
    /// Strand count; may also be given as an `n=K:` prefix of the word.
    #[arg(long)]
    pub n: Option<usize>,
    /// Crossing word, e.g. "s1 s2^-1", "A(1,3)" or "[A(1,2),A(1,3)]".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub trivial: bool,
    #[arg(long, value_name = "K")]
    pub delete: Option<usize>,
    #[arg(long, value_name = "K")]
    pub double: Option<usize>,
    #[arg(long)]
    pub linking: bool,
    #[arg(long)]
    pub brunnian: bool,
    #[arg(long)]
    pub qbrunnian: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ThetaArgs {
    #[arg(long)]
    pub n: usize,
    /// Word in y1..yn, e.g. "y1 y2^-1" or "[y1,y2^-1]".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub linking: bool,
    #[arg(long)]
    pub brunnian: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum GrCommand {
    /// Image of a Lie expression in y1..yn.
    Theta {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Rank of the degree-m piece for n strands.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Residues of the infinitesimal braid relations for n strands.
    CheckRelations {
        #[arg(long)]
        n: usize,
    },
    /// The degree-4 example at n = 3.
    DeltaExample,
    /// Matrix of the induced map in degree m, with rank and elementary divisors.
    ThetaMatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Also print the matrix, one row per line.
        #[arg(long)]
        matrix: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct HomologyArgs {
    /// Largest Lie degree.
    #[arg(long)]
    pub m: usize,
    /// Largest simplicial degree.
    #[arg(long = "N")]
    pub n: usize,
    /// Fail with exit code 5 unless the Lie degree 1 and 2 rows match the known values.
    #[arg(long)]
    pub assert_known: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceChoice {
    Fs1,
    Ap,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Largest simplicial level.
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = InstanceChoice::All)]
    pub instance: InstanceChoice,
    /// Random spot checks per level.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

/// Everything a run depends on; embedded in JSON reports.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub budget: Budget,
    pub seed: u64,
}

#[derive(Serialize)]
struct Envelope<'a> {
    version: &'static str,
    config: &'a RunConfig,
    passed: bool,
    result: &'a serde_json::Value,
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Braid(_) => "braid".into(),
        Command::Theta(_) => "theta".into(),
        Command::Gr(g) => {
            let sub = match g {
                GrCommand::Theta { .. } => "theta",
                GrCommand::Rank { .. } => "rank",
                GrCommand::CheckRelations { .. } => "check-relations",
                GrCommand::DeltaExample => "delta-example",
                GrCommand::ThetaMatrix { .. } => "theta-matrix",
            };
            format!("gr {sub}")
        }
        Command::Homology(_) => "homology".into(),
        Command::Verify(_) => "verify".into(),
    }
}

fn dispatch(command: Command, config: RunConfig) -> Result<Output, CliError> {
    match command {
        Command::Braid(a) => commands::braid(&a),
        Command::Theta(a) => commands::theta(&a),
        Command::Gr(g) => commands::gr(&g, &config),
        Command::Homology(a) => commands::homology(&a, &config),
        Command::Verify(a) => commands::verify(&a, &config),
    }
}

/// Runs the command, on a worker thread when `BRAIDLAB_BUDGET_MS` is set.
fn run_with_deadline(command: Command, config: RunConfig) -> Result<Output, CliError> {
    let limit = match std::env::var("BRAIDLAB_BUDGET_MS") {
        Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| {
            CliError::Usage(format!("BRAIDLAB_BUDGET_MS must be an integer, got '{v}'"))
        })?),
        Err(_) => None,
    };
    let Some(ms) = limit else {
        return dispatch(command, config);
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(dispatch(command, config));
    });
    match rx.recv_timeout(Duration::from_millis(ms)) {
        Ok(r) => r,
        Err(mpsc::RecvTimeoutError::Timeout) => Err(CliError::Engine(
            braidlab::Error::BudgetExceeded(format!("wall time over {ms} ms")),
        )),
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            Err(CliError::Usage("worker thread panicked".into()))
        }
    }
}

fn emit(out: &Option<std::path::PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = Budget::default();
    let budget = match Budget::new(
        cli.budget_level.unwrap_or(defaults.max_level),
        cli.budget_degree.unwrap_or(defaults.max_degree),
    ) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CliError::Engine(e).exit_code());
        }
    };
    let config = RunConfig {
        command: command_name(&cli.command),
        budget,
        seed: cli.seed,
    };
    match run_with_deadline(cli.command, config.clone()) {
        Ok(output) => {
            let text = if cli.json {
                // round-trip through Value so object keys come out sorted
                let env = Envelope {
                    version: braidlab::VERSION,
                    config: &config,
                    passed: output.passed(),
                    result: &output.json,
                };
                let value = serde_json::to_value(&env).expect("report serializes");
                serde_json::to_string_pretty(&value).expect("report serializes") + "\n"
            } else {
                output.text.clone()
            };
            if let Err(e) = emit(&cli.out, &text) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(1);
            }
            if let Some(msg) = &output.failure {
                eprintln!("{msg}");
            }
            ExitCode::from(output.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
