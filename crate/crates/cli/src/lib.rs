//! Expression parsing, verification suites and report output for the
//! `qyoung` command.

pub mod commands;
pub mod error;
pub mod eval;
pub mod expr;
pub mod field;
pub mod report;
pub mod suites;

pub use error::{CliError, Result};
