use thiserror::Error;

use crate::frames::RankReport;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero quaternion has no inverse")]
    ZeroQuaternion,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: &'static str },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("not a linear automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("frame is singular (rank {} of {})", .0.rank, .0.unknowns)]
    SingularFrame(Box<RankReport>),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
