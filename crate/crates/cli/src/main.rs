use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use doubletorus_cli::{run_text, RunOptions, EXIT_FAILED, EXIT_INPUT, EXIT_OK};

#[derive(Parser)]
#[command(name = "doubletorus", version, about = "Exact line-bundle and doubled-torus computations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Execute a session file.
    Run {
        file: PathBuf,
        /// Print one `key=value` record per command.
        #[arg(long)]
        records: bool,
        /// Exit 1 on negative verdicts as well as failed identities.
        #[arg(long)]
        assert: bool,
    },
    /// Run the built-in acceptance suite.
    Selftest,
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return code(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    match cli.command {
        Cmd::Run { file, records, assert } => {
            let text = match std::fs::read(&file).map(String::from_utf8) {
                Ok(Ok(t)) => t,
                Ok(Err(_)) => {
                    eprintln!("{}: not valid UTF-8", file.display());
                    return code(EXIT_INPUT);
                }
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return code(EXIT_INPUT);
                }
            };
            let report = run_text(&text, RunOptions { records, assert });
            for line in &report.stdout {
                println!("{line}");
            }
            for line in &report.stderr {
                eprintln!("{line}");
            }
            code(report.exit_code)
        }
        Cmd::Selftest => {
            let results = doubletorus_acceptance::run_all();
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("{} passed, {failed} failed", results.len() - failed);
            code(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
