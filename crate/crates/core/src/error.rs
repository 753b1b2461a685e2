use crate::ar_model::{Family, Indec};
use thiserror::Error;

/// Reason a quiver is rejected as not cluster-tilted of type A or D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    Loop { vertex: usize },
    TwoCycle { a: usize, b: usize },
    MultipleArrows { a: usize, b: usize },
    Disconnected,
    Empty,
    /// A chordless cycle that is not an oriented 3-cycle and fits no D shape.
    BadCycle { len: usize, oriented: bool },
    TooManyNeighbours { vertex: usize, count: usize },
    ThreeNeighbourViolation { vertex: usize },
    FourNeighbourViolation { vertex: usize },
    /// Connected, cycle-clean quiver that still matches no shape.
    NoShapeMatch,
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RejectReason::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            RejectReason::TwoCycle { a, b } => write!(f, "2-cycle forbidden between {a} and {b}"),
            RejectReason::MultipleArrows { a, b } => {
                write!(f, "multiple arrows from {a} to {b}")
            }
            RejectReason::Disconnected => write!(f, "quiver is not connected"),
            RejectReason::Empty => write!(f, "quiver has no vertices"),
            RejectReason::BadCycle { len, oriented } => {
                if *oriented {
                    write!(f, "oriented chordless cycle of length {len} fits no shape")
                } else {
                    write!(f, "non-oriented chordless cycle of length {len}")
                }
            }
            RejectReason::TooManyNeighbours { vertex, count } => {
                write!(f, "vertex {vertex} has {count} neighbours (at most 4 allowed)")
            }
            RejectReason::ThreeNeighbourViolation { vertex } => write!(
                f,
                "3-neighbour vertex {vertex} violates the two-on-one-cycle condition"
            ),
            RejectReason::FourNeighbourViolation { vertex } => write!(
                f,
                "4-neighbour vertex {vertex} does not sit on exactly two 3-cycles"
            ),
            RejectReason::NoShapeMatch => write!(f, "no quiver shape matches"),
        }
    }
}

/// Errors raised across the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid category spec: family {family:?} does not admit rank {rank}: {msg}")]
    InvalidSpec { family: Family, rank: u32, msg: String },

    #[error("{0} is not an indecomposable of this category")]
    NotMember(Indec),

    #[error("operation requires family {expected:?}, category has family {found:?}")]
    WrongFamily { expected: Family, found: Family },

    #[error("{0} is not an alpha-object")]
    NotAlpha(Indec),

    #[error("invalid triangle apex {top}: row {row} crosses the alpha rows")]
    InvalidApex { top: Indec, row: u32 },

    #[error("{a1} and {a2} are not tau-related alpha-objects (no 0 < k < rank works)")]
    NotTauRelated { a1: Indec, a2: Indec },

    #[error("set is not cluster-tilting: {reason}")]
    NotClusterTilting { reason: String },

    #[error("quiver is not cluster-tilted: {0}")]
    NotClusterTilted(RejectReason),

    #[error("invalid quiver document: {0}")]
    BadQuiver(String),

    #[error("quiver admits no valid presentation: {0}")]
    BadPresentation(String),

    #[error("integrity error (model bug): {0}")]
    Integrity(String),
}

impl Error {
    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}
