use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("unknown element `{token}` in group {group}")]
    UnknownElement { group: String, token: String },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("complex involution {0} does not have order 2")]
    IotaNotInvolution(String),

    #[error("complex involution {0} lies in the subgroup fixing K")]
    IotaInSubgroup(String),

    #[error("complex involution {0} is not central")]
    IotaNotCentral(String),

    #[error("invalid CM type: {0}")]
    InvalidCmType(String),

    #[error("unknown CM type class `{0}`")]
    UnknownCmClass(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported prime {0}: the census needs an odd prime")]
    UnsupportedPrime(u64),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("unknown table `{0}`")]
    UnknownTable(String),
}
