use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error(transparent)]
    Core(#[from] apery_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 4,
            CliError::Core(e) if e.is_overflow() => 3,
            CliError::Core(e) if e.is_resource() => 4,
            CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
