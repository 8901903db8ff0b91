mod cli;
mod run;

use std::process::ExitCode;

use clap::Parser;
use divfront::Error;

use crate::cli::Cli;

const THREADS_ENV: &str = "FRONTIER_THREADS";

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => 2,
        Error::DimensionMismatch { .. } => 3,
        Error::DivergenceUndefined(_) => 4,
        _ => 1,
    }
}

#[cfg(feature = "parallel")]
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    log::debug!("using {n} worker threads");
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn configure_threads() -> Result<(), String> {
    if std::env::var_os(THREADS_ENV).is_some() {
        log::warn!("{THREADS_ENV} is ignored in a build without the `parallel` feature");
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        log::error!("{msg}");
        return ExitCode::from(1);
    }
    match run::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            log::error!("{err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
