//! Script sessions, command dispatch and report emission for the
//! `charkit` binary and the C interface.

mod commands;
mod report;
mod session;

use std::fmt;

pub use commands::{execute, run_args, Cli, Command, Outcome};
pub use report::{Format, Report};
pub use session::{module_over, Session};

use crate::dsl::{ParseError, Pos};
use crate::error::AlgebraError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Hypothesis,
    Resource,
    Io,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    /// Rows computed before a resource limit stopped the command.
    pub partial: Option<Box<Report>>,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into(), partial: None }
    }

    pub fn undeclared(what: &str, name: &str) -> Self {
        CliError::new(ErrorKind::Parse, format!("no {what} named `{name}` in the script"))
    }

    pub(crate) fn at(mut self, pos: Pos) -> Self {
        self.message = format!("at {pos}: {}", self.message);
        self
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Parse => EXIT_PARSE,
            ErrorKind::Hypothesis => EXIT_HYPOTHESIS,
            ErrorKind::Resource => EXIT_RESOURCE,
            ErrorKind::Io => EXIT_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(ErrorKind::Parse, e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        let kind = match &e {
            AlgebraError::ResourceLimit(_) | AlgebraError::ExponentOverflow => ErrorKind::Resource,
            AlgebraError::InvalidPrime(_) | AlgebraError::RingMismatch => ErrorKind::Parse,
            _ => ErrorKind::Hypothesis,
        };
        CliError::new(kind, e.to_string())
    }
}
