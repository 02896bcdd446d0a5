//! File formats and command implementations behind the `nspairs` binary.

pub mod commands;
pub mod error;
pub mod germfile;
pub mod lkm;

pub use error::{CliError, CliResult};
