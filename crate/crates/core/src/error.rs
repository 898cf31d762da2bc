use thiserror::Error;

use crate::tuple::QuotientTuple;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quotient tuple must have r+s+t+m+n > 0")]
    EmptyTuple,

    #[error("value {0} is not a residue mod 4")]
    NotAResidue(i64),

    #[error("malformed labeling: {0}")]
    MalformedLabeling(String),

    #[error("labeling is not admissible (torsion-faithful and surjective)")]
    Inadmissible,

    #[error("labelings belong to different tuples {0} and {1}")]
    IncomparableLabelings(QuotientTuple, QuotientTuple),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("genus must be positive, got {0}")]
    InvalidGenus(i64),

    #[error("invalid genus range {from}..={to}")]
    InvalidRange { from: i64, to: i64 },

    #[error("state space of {tuple} has {states} torsion-faithful labelings, cap is {cap}")]
    StateSpaceOverflow {
        tuple: QuotientTuple,
        states: u128,
        cap: u64,
    },

    #[error("oracle failure: {0}")]
    Oracle(String),
}
