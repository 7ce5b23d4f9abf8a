//! Library side of the `macbax` command-line tool.

pub mod cache;
pub mod commands;
pub mod job;
pub mod json;
pub mod suites;
