use thiserror::Error;

use crate::compositions::Composition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<u32>),

    #[error("subset element {element} is outside [1, {max}]")]
    SubsetOutOfRange { element: u32, max: u32 },

    #[error("subset elements must be strictly increasing, got {0:?}")]
    SubsetNotIncreasing(Vec<u32>),

    #[error("ambient size must be positive")]
    EmptyAmbient,

    #[error("{0} is not a peak composition (every part except the last must be at least 2)")]
    NotPeakComposition(Composition),

    #[error("{0} is not a strict partition (parts must be strictly decreasing)")]
    NotStrictPartition(Composition),

    #[error("composition {0} has repeated parts")]
    RepeatedParts(Composition),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("expected an unmarked filling, found marked entries")]
    MarkedEntry,

    #[error("entries must be positive")]
    ZeroEntry,

    #[error("weight is weak: value {0} is skipped")]
    WeakWeight(u32),

    #[error("not a peak composition tableau")]
    NotPct,

    #[error("not a marked peak composition tableau")]
    NotMpct,

    #[error("content is not exactly 1..{0}, each once")]
    NotStandard(usize),

    #[error("invalid index for {family}: {reason}")]
    InvalidIndex {
        family: &'static str,
        reason: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
