//! Command-line companion to the core library: file formats, table and JSON
//! rendering, and the process exit-code contract.
//!
//! Exit codes: 0 for success (including underdetermined solver outcomes,
//! which are reported on stdout), 1 for input and usage errors, 2 for an
//! inconsistent exact sequence, 3 for a chain-model verification mismatch.

pub mod cli;
pub mod commands;
pub mod error;
pub mod formats;

pub use cli::run;
pub use error::CliError;
