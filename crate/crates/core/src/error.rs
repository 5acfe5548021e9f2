use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch")]
    RingMismatch,
    #[error("non-unit")]
    NonUnit,
    #[error("invalid ring descriptor: {0}")]
    BadRing(String),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rank too small: {0}")]
    RankTooSmall(String),
    #[error("not an inverse pair")]
    NotInverse,
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("not a ∧² column")]
    NotWedgeColumn,
    #[error("height: {0}")]
    Height(String),
    #[error("membership: matrix fails the ∧²GL_n criterion")]
    Membership,
    #[error("membership undecidable in this artifact")]
    MembershipUndecidable,
    #[error("modulus: {0}")]
    Modulus(String),
    #[error("construction step violated: {0}")]
    StepViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
