use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use projdim::{io, run, Cli, CliError};
use projdim_core::par::configure_threads;
use projdim_core::semigroup::words::set_node_cap;

const NODE_CAP_VAR: &str = "PROJDIM_NODE_CAP";

fn setup(cli: &Cli) -> Result<(), CliError> {
    if let Ok(v) = std::env::var(NODE_CAP_VAR) {
        let cap = v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{NODE_CAP_VAR} must be a positive integer, got `{v}`"
                ))
            })?;
        set_node_cap(cap);
    }
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        if !configure_threads(n) {
            log::warn!("thread cap {n} not applied");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = setup(&cli).and_then(|_| run(&cli)).and_then(|report| {
        let text = report.to_json();
        match &cli.report {
            Some(path) => io::write_text(path, &(text + "\n")),
            None => {
                writeln!(std::io::stdout().lock(), "{text}").map_err(|source| CliError::Write {
                    path: "<stdout>".into(),
                    source,
                })
            }
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("projdim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
