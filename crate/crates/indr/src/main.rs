use std::process::ExitCode;

use clap::Parser;
use indr::cli::{run, Cli, EXIT_INPUT_ERROR};

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_INPUT_ERROR
        }
    };
    ExitCode::from(code as u8)
}
