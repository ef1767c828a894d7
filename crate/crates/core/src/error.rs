//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),

    #[error("airframe file error: {0}")]
    Airframe(String),

    #[error("state outside model validity: {0}")]
    Envelope(String),

    #[error("singular system: {0}")]
    Singular(String),

    #[error("planner trapped: no safe candidate between hops")]
    Trapped,

    #[error("decision error: {0}")]
    Decision(String),

    #[error("illegal behavior transition: {0} -> {1}")]
    IllegalTransition(String, String),

    #[error("runtime invariant breach: {0}")]
    Invariant(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
