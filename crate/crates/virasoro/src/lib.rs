//! Std companion to `virasoro-core`: JSON report documents, catalog input and
//! the `virasoro` command-line tool.

pub mod catalog;
pub mod cli;
pub mod report;

pub use virasoro_core as core;

pub use cli::{run, Cli, CliError, Command};
pub use report::{emit, Format, Outcome, Status};
