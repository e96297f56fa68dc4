use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lambdaf_cli::{run, JobConfig};

fn main() -> ExitCode {
    let config = JobConfig::parse();
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
