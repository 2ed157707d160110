use std::fmt;

use coinstack::{DenominationError, Error};

pub const EXIT_NOT_REPRESENTABLE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;
pub const EXIT_INFINITE_GAP: u8 = 4;
pub const EXIT_MISMATCH: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}", self.message)
    }
}

impl From<DenominationError> for CliError {
    fn from(e: DenominationError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_limit() { EXIT_LIMIT } else { EXIT_INPUT };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}
