use afflap_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("claim falsified at {location}: {detail}")]
    Falsified { location: String, detail: String },
    #[error("{0}")]
    Internal(String),
    #[error("cannot write {0}: {1}")]
    Io(String, std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Falsified { .. } | CliError::Internal(_) | CliError::Io(..) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidArgument(_) | CoreError::UnknownIdentity(_) | CoreError::IndexBelowCutoff { .. } => {
                CliError::Usage(e.to_string())
            }
            CoreError::ClaimFalsified { location, detail } => CliError::Falsified { location, detail },
            other => CliError::Internal(other.to_string()),
        }
    }
}
