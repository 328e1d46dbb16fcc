use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported rank {rank} for type {family}")]
    UnsupportedRank { family: String, rank: usize },

    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("variant `{variant}` is not available for type {family}")]
    UnsupportedVariant { family: String, variant: String },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("polynomial is not divisible by {divisor}")]
    NotDivisible { divisor: String },

    #[error("coefficient of Z_{word} is {value}, which is not an integer")]
    NonIntegralExpansion { word: String, value: String },

    #[error("coefficient of Z_{word} is {coeff}, which is not divisible by {multiplier}")]
    NotDivisibleByMultiplier {
        multiplier: i64,
        word: String,
        coeff: String,
    },

    #[error("structure constant of Z_{word} is negative ({value})")]
    PositivityViolation { word: String, value: String },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid word `{word}`: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
