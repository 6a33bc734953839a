//! JSON I/O, command implementations and the reproducibility suites behind the `pcolor` binary.

pub mod commands;
pub mod io;
pub mod suites;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] pcolor::Error),
}

impl CliError {
    /// 1 for a negative verdict about valid input, 2 for anything wrong with the input itself.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_property_failure() => 1,
            _ => 2,
        }
    }
}
