use gspin_cover_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for usage and parse problems, 3 for resource bounds.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Bound(_) | CliError::Core(CoreError::SpaceTooLarge { .. }) => 3,
            _ => 2,
        }
    }
}
