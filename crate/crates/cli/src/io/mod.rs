//! File formats: deterministic JSON, CSV loops, and SVG projection plots.

pub mod building;
pub mod geometry;
pub mod json;
pub mod lattice;
pub mod svg;

pub use json::{fmt_f64, Json};

/// Schema-level failure: the file parsed as JSON/CSV but does not match the
/// expected shape. Maps to exit code 3 in the CLI.
#[derive(Debug)]
pub struct SchemaError(pub String);

impl std::fmt::Display for SchemaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "schema error: {}", self.0)
    }
}

impl std::error::Error for SchemaError {}

pub(crate) fn schema<T>(msg: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError(msg.into()))
}
