//! File formats, benchmark suites and the command-line driver for
//! `weightmatch`.

pub mod bench;
pub mod cli;
pub mod format;

pub use cli::{run, Cli, CliError};
