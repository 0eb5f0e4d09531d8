use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use log::info;

use brimkit::cli::{error_outcome, run_text, CommandArgs};
use brimkit::multiplicity::init_thread_pool;
use brimkit::Error;

/// Buchsbaum-Rim multiplicities and the complexes that compute them.
#[derive(Parser, Debug)]
#[command(name = "brimkit", version, allow_negative_numbers = true)]
struct Cli {
    /// br, brpoly, chi, koszul, hilbert, complex, grade, verify, serre or question
    command: String,
    /// Session file
    session: PathBuf,
    #[arg(long)]
    nu: Option<i64>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    range: Option<Vec<i64>>,
    /// Cross-check the BR function against the dense oracle
    #[arg(long)]
    oracle: bool,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    init_thread_pool();

    let outcome = match std::fs::read_to_string(&cli.session) {
        Ok(text) => {
            let args = CommandArgs {
                nu: cli.nu,
                j: cli.j,
                range: cli.range.as_ref().map(|r| (r[0], r[1])),
                oracle: cli.oracle,
            };
            let start = Instant::now();
            let o = run_text(&text, &cli.command, &args);
            info!(
                "{} on {} finished in {:.3}s (exit {})",
                cli.command,
                cli.session.display(),
                start.elapsed().as_secs_f64(),
                o.exit_code
            );
            o
        }
        Err(e) => error_outcome(
            &cli.command,
            &Error::InvalidInput(format!("cannot read {}: {e}", cli.session.display())),
        ),
    };
    println!("{}", outcome.to_json());
    ExitCode::from(outcome.exit_code as u8)
}
