use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = gext_cli::Cli::parse();
    match gext_cli::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gext: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
