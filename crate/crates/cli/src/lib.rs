//! The `sop` command-line front end: ideal files in, JSON or CSV reports out.
//!
//! [`run`] does all the work and returns the exit code with the text for
//! standard output and standard error, so tests can drive it in-process.

mod args;
mod builtin;
pub mod commands;
pub mod report;
mod tables;

/// The command-line chapter of the book, compiled as doc-tests.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book {}

use std::ffi::OsString;

use clap::Parser;
use thiserror::Error;

pub use args::{Cli, Command, GlobalOpts};
pub use report::{Report, Table};

/// Exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const MALFORMED_INPUT: i32 = 1;
    pub const BUDGET_EXCEEDED: i32 = 2;
    pub const SEARCH_FAILED: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sop_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(sop_core::Error::BudgetExceeded { .. }) => exit::BUDGET_EXCEEDED,
            _ => exit::MALFORMED_INPUT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::MALFORMED_INPUT } else { exit::SUCCESS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution { code, stdout: String::new(), stderr: text }
            } else {
                Execution { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Execution { code, stdout, stderr: String::new() },
        Err(e) => Execution { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let g = &cli.global;
    if g.workers == 0 {
        return Err(CliError::Input("--workers must be at least 1".into()));
    }
    let (name, out) = dispatch(&cli.command, g)?;
    let text = if g.csv {
        out.table.to_csv()?
    } else {
        Report { command: name, version: env!("CARGO_PKG_VERSION"), seed: g.seed, budget: g.budget(), inputs: out.inputs, results: out.results }
            .to_json()
    };
    let code = if out.search_failed { exit::SEARCH_FAILED } else { exit::SUCCESS };
    Ok((text, code))
}

fn dispatch(cmd: &Command, g: &GlobalOpts) -> Result<(&'static str, commands::Outcome), CliError> {
    use commands as c;
    let load = |a: &args::IdealArg| c::load_ideal(&a.ideal);
    Ok(match cmd {
        Command::Prob { ideal, shape, trials } => ("prob", c::prob(&load(ideal)?, *shape, *trials, g)?),
        Command::ProbExact { ideal, shape } => ("prob-exact", c::prob_exact(&load(ideal)?, *shape, g)?),
        Command::Predict { ideal, shape, e_lin } => ("predict", c::predict(&load(ideal)?, *shape, *e_lin, g)?),
        Command::Zeta { ideal, s, e } => ("zeta", c::zeta(&load(ideal)?, *s, *e, g)?),
        Command::Points { ideal, e } => ("points", c::points(&load(ideal)?, *e, g)?),
        Command::Lines { ideal, m, list } => ("lines", c::lines(&load(ideal)?, *m, *list, g)?),
        Command::Hilbert { ideal, d, to } => ("hilbert", c::hilbert(&load(ideal)?, *d, *to)?),
        Command::Dim { ideal } => ("dim", c::dim(&load(ideal)?)?),
        Command::CheckParams { ideal, tuple } => ("check-params", c::check_params(&load(ideal)?, tuple)?),
        Command::Bound { ideal, shape, exact, trials } => ("bound", c::bound(&load(ideal)?, *shape, *exact, *trials, g)?),
        Command::FindSop { ideal, max_trials } => ("find-sop", c::find_sop(&load(ideal)?, *max_trials, g)?),
        Command::Lattice { preset, dmax, p, q, d, coeff_degree } => {
            ("lattice", c::lattice(*preset, *dmax, *p, *q, *d, *coeff_degree, &g.budget())?)
        }
        Command::PaperTables { example, trials } => ("paper-tables", tables::paper_tables(*example, *trials, g)?),
        Command::Ideals => ("ideals", c::ideals()),
    })
}
