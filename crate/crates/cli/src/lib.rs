//! Library side of the `shiftfree` command-line tool: argument definitions,
//! group and set parsing, and output documents.

pub mod commands;
pub mod report;
pub mod spec;
pub mod table;

pub use commands::{run, Cli, Outcome};
