use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use leash_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let status = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("leash: {e:#}");
            match e.downcast_ref::<leash_cli::CliError>() {
                Some(cli_err) => cli_err.exit_code(),
                None => 1,
            }
        }
    };
    let _ = out.flush();
    ExitCode::from(status as u8)
}
