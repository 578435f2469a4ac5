//! Error taxonomy mapped to the exit-code contract:
//! 0 success, 1 parse/input error, 2 semantic error, 3 cap exceeded or
//! verdict inconclusive under the cap.

use crate::parse::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(ParseError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Semantic(String),
    #[error("{0}")]
    CapExceeded(String),
}

impl CliError {
    pub fn parse(line: usize, col: usize, message: impl Into<String>) -> Self {
        CliError::Parse(ParseError {
            pos: crate::parse::Pos {
                line: line as u32,
                col: col as u32,
            },
            message: message.into(),
        })
    }

    pub fn semantic(message: impl Into<String>) -> Self {
        CliError::Semantic(message.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Semantic(_) => 2,
            CliError::CapExceeded(_) => 3,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<novikov_core::Error> for CliError {
    fn from(e: novikov_core::Error) -> Self {
        CliError::Semantic(e.to_string())
    }
}
