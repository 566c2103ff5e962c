//! Command-line front end for `rt-lens-core`: argument parsing, the four
//! subcommands and their text, JSON and CSV renderings.

pub mod args;
pub mod commands;
pub mod render;

use rt_lens_core::Error as CoreError;

/// Version tag written into every JSON document.
pub const SCHEMA: &str = "rt-lens/1";

pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("could not configure the thread pool: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_capacity() => exit::CAPACITY,
            CliError::Core(_) | CliError::Usage(_) => exit::INVALID_INPUT,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) | CliError::Threads(_) => exit::VERIFICATION_FAILED,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
