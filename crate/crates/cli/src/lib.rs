//! Command-line front end for `cycperm-core`: argument definitions, the
//! pattern grammar, block-parallel scans and report rendering.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod parallel;
pub mod report;
pub mod syntax;

pub use error::CliError;

use args::{Cli, Command};
use config::RunConfig;
use report::Report;

/// Runs a parsed command line and returns its report.
pub fn run(cli: &Cli) -> Result<(Report, RunConfig), CliError> {
    let cfg = RunConfig::new(cli.cap, cli.threads.unwrap_or_else(default_threads), cli.format.parse()?, cli.out.clone())?;
    let report = match &cli.command {
        Command::Count { patterns, min_n, max_n } => {
            commands::count(&syntax::parse_set(patterns)?, *min_n, *max_n, &cfg)?
        }
        Command::Genfun { patterns, stat, n } => {
            commands::genfun(&syntax::parse_set(patterns)?, stat.parse()?, *n, &cfg)?
        }
        Command::Verify { suite, max_n } => commands::verify(suite.parse()?, *max_n, &cfg)?,
        Command::Wilf { length, set_size, min_n, max_n, include_monotone_pair } => {
            commands::wilf(*length, *set_size, *min_n, *max_n, *include_monotone_pair, &cfg)?
        }
        Command::Tree { patterns, levels, rules } => {
            commands::tree(&syntax::parse_set(patterns)?, *levels, *rules, &cfg)?
        }
        Command::Es { m, n } => commands::es(*m, *n, &cfg)?,
        Command::Conjecture { id, order, convention } => {
            let conventions = if convention.is_empty() {
                cycperm_core::formulas::Convention::ALL.to_vec()
            } else {
                convention.iter().map(|c| c.parse()).collect::<Result<Vec<_>, _>>()?
            };
            commands::conjecture(id.parse()?, *order, &conventions, &cfg)?
        }
    };
    Ok((report, cfg))
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
