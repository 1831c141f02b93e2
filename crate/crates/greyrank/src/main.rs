use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use greyrank::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("{w}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.report.as_bytes()).is_err() {
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("greyrank: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
