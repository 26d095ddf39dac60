use thiserror::Error;

use crate::complex::{Simplex, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0:?} is not a face of the complex")]
    FaceNotFound(Simplex),

    #[error("{{{0}, {1}}} is not an edge of the complex")]
    EdgeNotFound(VertexId, VertexId),

    /// The contracted edge lies in the induced 4-cycle `cycle`, listed in cycle order.
    #[error("edge {{{}, {}}} lies in the induced 4-cycle {cycle:?}", edge.0, edge.1)]
    InadmissibleContraction {
        edge: (VertexId, VertexId),
        cycle: [VertexId; 4],
    },

    #[error("complex is not flag: {0:?} is a missing face")]
    NotFlag(Simplex),

    #[error("complex is not pure")]
    NotPure,

    #[error("not a closed manifold: {0}")]
    NotManifold(String),

    #[error("expected a complex of dimension {expected}, found dimension {found}")]
    DimensionMismatch { expected: isize, found: isize },

    #[error("invalid flag connected sum: {0}")]
    ConnectedSumInvalid(String),

    #[error("handle sides too close: dist({u}, {v}) = {dist} < 4")]
    HandleTooClose {
        u: VertexId,
        v: VertexId,
        dist: usize,
    },

    #[error("invalid flag handle addition: {0}")]
    HandleInvalid(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
