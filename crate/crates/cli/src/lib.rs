//! Command-line front end, identity corpus and JSON reports for `nestrad`.

pub mod args;
pub mod commands;
pub mod corpus;
pub mod report;
mod text;

pub use args::Cli;
pub use commands::{run, Outcome};
