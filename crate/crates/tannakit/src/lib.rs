//! File formats, report emitters and subcommands for the `tannakit` binary.

pub mod commands;
pub mod emit;
pub mod spec;

pub use commands::{run, CliError, Command, PosetQuery, RunConfig};
pub use emit::{Document, Format};
pub use spec::{parse_spec, InputSpec};

/// Reads and parses a spec file.
pub fn load(path: &std::path::Path) -> Result<InputSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
