//! Command implementations and file formats for the `cohom1` binary.
//!
//! The library half exists so integration tests can drive the command
//! logic and the serializers directly; `main.rs` is a thin clap wrapper
//! that maps [`commands::CliFailure`] variants to process exit codes.

pub mod commands;
pub mod formats;

pub use commands::{CliFailure, CloudFormat, Suite};
