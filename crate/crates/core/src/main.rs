use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = antiflip::cli::Cli::parse();
    match antiflip::cli::run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if err.is_internal() { 3 } else { 2 })
        }
    }
}
