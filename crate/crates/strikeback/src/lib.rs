//! File formats, reports, corpus runs and terminal play on top of
//! `strikeback-core`.

pub mod corpus;
pub mod io;
pub mod play;
pub mod report;
pub mod suites;

use strikeback_core::game::{SolveOptions, DEFAULT_BUDGET};

/// Environment variable overriding the solver's transition budget.
pub const BUDGET_VAR: &str = "STRIKEBACK_BUDGET";

/// Solver options with the budget taken from `explicit`, then the
/// environment, then the default. Unparsable values are an error.
pub fn solve_options(explicit: Option<u64>) -> Result<SolveOptions, String> {
    let budget = match explicit {
        Some(b) => b,
        None => match std::env::var(BUDGET_VAR) {
            Ok(v) => v.trim().parse().map_err(|_| format!("{BUDGET_VAR}={v:?} is not a transition count"))?,
            Err(_) => DEFAULT_BUDGET,
        },
    };
    Ok(SolveOptions { budget })
}
