use std::process::ExitCode;

use clap::Parser;
use fnm::cli::{run, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fnm: {e}");
            ExitCode::from(1)
        }
    }
}
