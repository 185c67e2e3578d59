use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use sl2_blocks_cli::args::Cli;
use sl2_blocks_cli::{execute, UsageError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            };
        }
    };
    let written = match &cli.command.common().out {
        Some(path) => std::fs::write(path, &outcome.text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout()
            .write_all(outcome.text.as_bytes())
            .context("writing stdout"),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
