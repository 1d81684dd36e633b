//! Command-line error type: parse-level failures plus pass-through of
//! library errors.
//!
//! Every error prints as `Name: detail` so scripts can match on the
//! leading name; library errors already follow the same convention and
//! are forwarded verbatim. Usage errors are separated from domain errors
//! because they exit with status 2 instead of 1.

use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub enum CliError {
    /// The expression text does not match the grammar.
    SyntaxError { offset: usize, expected: String },
    /// A symbol names neither a variable nor a basis element.
    UnknownSymbol { offset: usize, name: String },
    /// A variable symbol is outside the declared range.
    VariableOutOfRange { name: String, limit: usize },
    /// No `--at` assignment was given for a variable the point needs.
    MissingAssignment { var: String },
    /// The same variable received two `--at` assignments.
    DuplicateAssignment { var: String },
    /// A file could not be read or written.
    FileError { path: PathBuf, detail: String },
    /// The command line itself is malformed (exit status 2).
    Usage(String),
    /// An error raised by the library (already formatted as `Name: detail`).
    Lib(quapoly::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::SyntaxError { offset, expected } => {
                write!(f, "SyntaxError: at offset {offset}, expected {expected}")
            }
            CliError::UnknownSymbol { offset, name } => {
                write!(
                    f,
                    "UnknownSymbol: '{name}' at offset {offset} names neither a variable nor a basis element"
                )
            }
            CliError::VariableOutOfRange { name, limit } => {
                write!(f, "VariableOutOfRange: {name} is outside the declared range (limit {limit})")
            }
            CliError::MissingAssignment { var } => {
                write!(f, "MissingAssignment: no --at value for {var}")
            }
            CliError::DuplicateAssignment { var } => {
                write!(f, "DuplicateAssignment: {var} is assigned more than once")
            }
            CliError::FileError { path, detail } => {
                write!(f, "FileError: {}: {detail}", path.display())
            }
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<quapoly::Error> for CliError {
    fn from(e: quapoly::Error) -> Self {
        CliError::Lib(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
