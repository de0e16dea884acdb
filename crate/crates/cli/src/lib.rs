//! IO companion of `torlink-core`: deterministic JSON and CSV formats, SVG
//! projection plots, and the command implementations behind the CLI.

pub mod commands;
pub mod io;
