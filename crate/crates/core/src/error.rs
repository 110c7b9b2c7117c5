use thiserror::Error;

use crate::coxeter::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("family {family} does not exist in rank {rank}")]
    BadRank { family: Family, rank: usize },
    #[error("elements belong to different Coxeter systems")]
    MixedSystems,
    #[error("parabolic subgroup is infinite")]
    InfiniteParabolic,
    #[error("element is not a minimal coset representative")]
    NotMinimalRep,
    #[error("group is infinite; give a length bound")]
    Unbounded,
    #[error("family {0} has no root system")]
    NoRoots(Family),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
