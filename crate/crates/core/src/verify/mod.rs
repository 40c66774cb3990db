//! Named identity checks over catalog and random graphs.

mod checks;
mod result;
mod suite;

pub use checks::{is_check_name, run_check, CheckOptions, CHECK_NAMES};
pub use result::{CheckResult, Status};
pub use suite::{random_graphs, render_json, render_text, resolve_checks, run_suite, tally, SuiteOptions, Tally};
