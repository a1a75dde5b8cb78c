//! File formats, report generation and the `orbitcalc` command line on top
//! of [`orbitcalc_core`].

pub mod cli;
pub mod dot;
mod error;
pub mod poset_file;
pub mod report;
pub mod search;

pub use error::CliError;
