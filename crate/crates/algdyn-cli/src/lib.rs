//! Library side of the `algdyn` command-line tool: input parsers, report
//! documents and the command implementations. The binary in `main.rs` is a
//! thin argument-handling wrapper so everything here is testable directly.

pub mod commands;
pub mod parse;
pub mod report;
