use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An operator produced a generator index below the cutoff `k`.
    #[error("action leaves C_*(L_{k}): produced e_{index}")]
    IndexBelowCutoff { k: i64, index: i64 },

    /// A structural claim checked at runtime turned out false. Carries the
    /// block coordinates where it failed.
    #[error("claim falsified at {location}: {detail}")]
    ClaimFalsified { location: String, detail: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn falsified(location: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::ClaimFalsified {
            location: location.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
