use std::process::ExitCode;

use clap::Parser;
use metamob_cli::args::Cli;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    match metamob_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = serde_json::json!({
                "error": { "kind": metamob_cli::error_kind(&e), "message": format!("{e:#}") }
            });
            eprintln!("{msg}");
            ExitCode::FAILURE
        }
    }
}
