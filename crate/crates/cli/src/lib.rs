//! Support code for the `toughcert` binary: graph file codecs and the
//! key-value report format. Kept as a library so the codecs and schemas are
//! testable outside the binary.

pub mod io;
pub mod report;

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Io(std::io::Error),
    /// Bad file contents or bad flag combinations.
    Parse(String),
    Core(toughcert::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "io: {e}"),
            CliError::Parse(msg) => write!(f, "parse: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

impl From<toughcert::Error> for CliError {
    fn from(e: toughcert::Error) -> CliError {
        CliError::Core(e)
    }
}

impl CliError {
    /// Process exit status: 2 for usage/parse/data problems, 3 when the
    /// eigensolver fails to converge.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(toughcert::Error::NonConvergence { .. }) => 3,
            _ => 2,
        }
    }
}
