//! Library half of the command-line tool: argument definitions, command
//! handlers, report envelope, checkpoint files and input parsing. The binary
//! in `main.rs` is a thin shell over [`commands::run`].

pub mod args;
pub mod checkpoint;
pub mod commands;
pub mod report;
pub mod vecfile;
