//! Command-line harness for the point model of free cyclic submodules of
//! `T^2`: enumeration, verification suites, classification and Plücker
//! coordinates, with JSON, CSV or text output.

pub mod commands;
pub mod config;
pub mod report;
pub mod suites;

pub use commands::{run, Outcome, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
pub use config::Cli;
