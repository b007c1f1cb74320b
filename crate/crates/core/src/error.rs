use thiserror::Error;

use crate::graph::Corner;

#[derive(Debug, Error)]
pub enum GasketError {
    #[error("level {level} is outside the supported range 1..={max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("operation needs a graph of level at most {max}, got {level}")]
    SizeLimit { level: u32, max: u32 },

    #[error("a level-1 graph has no sub-copies")]
    NoSubcopy,

    #[error("corner pair {from:?} -> {to:?} is invalid: endpoints must differ")]
    InvalidCorners { from: Corner, to: Corner },

    #[error("length {len} is outside the feasible range {min}..={max}")]
    LengthOutOfRange { len: usize, min: usize, max: usize },

    #[error("coordinate ({a}, {b}) is not a vertex of the graph")]
    MissingVertex { a: u32, b: u32 },

    #[error("vertex index {index} out of range (graph has {count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),

    #[error("illegal pebbling move {from} -> {to}: {reason}")]
    IllegalMove {
        from: usize,
        to: usize,
        reason: &'static str,
    },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("{0}")]
    Domain(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl GasketError {
    /// True for errors caused by size or budget ceilings rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            GasketError::LevelOutOfRange { .. }
                | GasketError::SizeLimit { .. }
                | GasketError::BudgetExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, GasketError>;
