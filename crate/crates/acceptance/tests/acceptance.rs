use std::process::ExitCode;

use doubletorus_acceptance::{criterion_count, run_all};

fn main() -> ExitCode {
    let results = run_all();
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("acceptance: {} passed, {} failed", results.len() - failed.len(), failed.len());
    if results.len() != criterion_count() || !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
