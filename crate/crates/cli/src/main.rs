use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hyperconn_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{}", output.text);
            std::io::stdout().flush().ok();
            ExitCode::from(output.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
