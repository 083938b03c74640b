//! Batch front end: a self-describing JSON document format, validation,
//! constructions, linear operations and enumeration reports.

pub mod commands;
pub mod convert;
pub mod doc;
pub mod error;

pub use commands::{run_construct, run_enumerate, run_linear, run_validate, Bounds, Outcome};
pub use doc::{canonical, parse, serialize, Document};
pub use error::CliError;
