use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pcolor_cli::commands::{self, BridgeArgs, BuildArgs, Report, VerifyArgs};
use pcolor_cli::suites;

/// Exact verification of perfect colorings and the structures they encode.
///
/// Exit codes: 0 verified, 1 the property fails (the JSON report carries a witness),
/// 2 input or usage error. Set PCOLOR_THREADS to cap parallelism.
#[derive(Debug, Parser)]
#[command(name = "pcolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph or hypergraph family and write it as JSON.
    Build(BuildArgs),
    /// Check a property and print a JSON report.
    Verify(VerifyArgs),
    /// Convert between equivalent structures.
    Bridge(BridgeArgs),
    /// Run a reproducibility suite: AC1 .. AC12, or `all`.
    Suite {
        name: String,
        /// Seed for the randomized sweeps (AC1, AC8).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn print_report(report: &Report) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(report).expect("reports serialize"));
    ExitCode::from(report.exit_code())
}

fn configure_threads() {
    if let Some(n) = std::env::var("PCOLOR_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Build(args) => match commands::build(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify(args) => {
            let report = commands::verify(&args).unwrap_or_else(|e| Report::input_error(&args.kind.name(), &e));
            if let Some(e) = &report.error {
                eprintln!("error: {e}");
            }
            print_report(&report)
        }
        Command::Bridge(args) => match commands::bridge(&args) {
            Ok(None) => ExitCode::SUCCESS,
            Ok(Some(report)) => print_report(&report),
            Err(e) => {
                eprintln!("error: {e}");
                print_report(&Report::input_error(&args.name, &e))
            }
        },
        Command::Suite { name, seed } => {
            let outcomes = if name.eq_ignore_ascii_case("all") {
                suites::run_all(seed)
            } else {
                match suites::run(&name, seed) {
                    Some(o) => vec![o],
                    None => {
                        eprintln!("error: unknown suite {name:?}; expected AC1 .. AC12 or all");
                        return ExitCode::from(2);
                    }
                }
            };
            for o in &outcomes {
                println!("{}", o.line());
            }
            if outcomes.iter().all(|o| o.passed && o.within_limit()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
