//! Library side of the `ncalg` command-line tool: file-format parsing,
//! command implementations, check reports, and the built-in verification
//! suite. The binary in `main.rs` is a thin clap wrapper over this.

pub mod commands;
pub mod parse;
pub mod report;
pub mod verify;
