//! Command implementations behind the `biharm` binary.

pub mod case;
pub mod commands;
pub mod error;
pub mod field;

pub use case::{parse_case, CaseFile, LoadedCase};
pub use error::{CliError, CliResult};
pub use field::{FieldFile, FieldHeader};
