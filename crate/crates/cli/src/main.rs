use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qtorus_core::input::{parse_presentation, ParsedInput};
use qtorus_core::predict::PredictError;
use qtorus_core::report::{analyze, extend, ExtendError, InvariantReport};
use qtorus_core::selftest;

const EXIT_INPUT: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_INEXACT: u8 = 4;
const EXIT_SELFTEST: u8 = 5;

/// Invariants of multiparameter quantum tori and predicted GK dimensions
/// of their simple modules.
#[derive(Parser)]
#[command(name = "qtorus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the invariants of the torus in FILE.
    Analyze(Common),
    /// Also report the skew-Laurent extension by the [sigma] block.
    Extend {
        #[command(flatten)]
        common: Common,
        /// Known GK dimensions of simple modules over the torus, e.g. 1,3.
        #[arg(long, value_parser = parse_vset)]
        vset: Option<BTreeSet<usize>>,
    },
    /// Run the randomized certification suites against the oracles.
    Selftest {
        /// Run a tenth of the cases.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Args)]
struct Common {
    file: PathBuf,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Largest entry of candidate vectors in the Krull dimension search.
    #[arg(long, default_value_t = 2)]
    bound: u32,
}

fn parse_vset(s: &str) -> Result<BTreeSet<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer")))
        .collect()
}

fn load(common: &Common) -> Result<ParsedInput, ExitCode> {
    let text = std::fs::read_to_string(&common.file).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", common.file.display());
        ExitCode::from(EXIT_INPUT)
    })?;
    parse_presentation(&text).map_err(|e| {
        eprintln!("error[{}]: {}: {e}", e.kind(), common.file.display());
        ExitCode::from(EXIT_INPUT)
    })
}

fn emit(report: &InvariantReport, json: bool) {
    if json {
        let text = serde_json::to_string_pretty(report).expect("report serializes");
        println!("{text}");
    } else {
        print!("{report}");
    }
}

fn extend_exit(e: &ExtendError) -> u8 {
    match e {
        ExtendError::Predict(PredictError::Inexact(_)) => EXIT_INEXACT,
        ExtendError::Predict(PredictError::HypothesisFailed { .. } | PredictError::MissingVSet { .. }) => {
            EXIT_HYPOTHESIS
        }
        ExtendError::Predict(PredictError::WrongSemantics(_) | PredictError::Internal(_)) => 1,
        ExtendError::Predict(_) | ExtendError::MissingSigma | ExtendError::Algebra(_) => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Analyze(common) => {
            let input = match load(&common) {
                Ok(input) => input,
                Err(code) => return code,
            };
            let report = analyze(&input, common.bound);
            emit(&report, common.json);
            if report.kdim.exact {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INEXACT)
            }
        }
        Command::Extend { common, vset } => {
            let input = match load(&common) {
                Ok(input) => input,
                Err(code) => return code,
            };
            match extend(&input, common.bound, vset) {
                Ok(report) => {
                    emit(&report, common.json);
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {}: {e}", common.file.display());
                    ExitCode::from(extend_exit(&e))
                }
            }
        }
        Command::Selftest { quick } => {
            let reports = selftest::run_all(quick);
            for r in &reports {
                println!("{r}");
            }
            if reports.iter().all(|r| r.passed()) {
                println!("selftest passed");
                ExitCode::SUCCESS
            } else {
                println!("selftest FAILED");
                ExitCode::from(EXIT_SELFTEST)
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
