//! Command-line front end for the EGZ solver.
//!
//! Four subcommands: `solve` an instance, `verify` a certificate,
//! `gen` a reproducible random instance, `bench` the solver.

pub mod bench;
pub mod cli;
pub mod generate;
pub mod instance;
