use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arc collection is empty")]
    Empty,

    #[error("arc {index} has zero angular extent")]
    ZeroExtent { index: usize },

    #[error("arc {index} has a non-finite angle")]
    NonFiniteAngle { index: usize },

    #[error("invalid arc collection: {0}")]
    InvalidCollection(String),

    #[error("rank {rank} is outside 0..{limit}")]
    RankOutOfRange { rank: usize, limit: usize },

    #[error("arc {0} is not an A-type arc")]
    NotATypeArc(usize),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("collection already has the maximal running count sum")]
    AlreadyMaximal,

    #[error("unknown graph format `{0}` (expected `edge-list` or `dot`)")]
    UnknownFormat(String),

    #[error("outside formula domain: {0}")]
    Domain(String),

    #[error("enumeration of n={n} exceeds the ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("malformed collection file: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a parameter triple or proportion outside a
    /// formula's or construction's regime.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::Infeasible(_) | Error::Domain(_) | Error::CeilingExceeded { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
