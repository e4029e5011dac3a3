//! Finite cographs and the structures built on top of them: relation-preserving
//! maps with their dispersive/accretive factorization, directed cographs,
//! isolability objects on finite sets, stratification posets for the line and
//! its powers, truncated Ran categories, and set-level factorization checks
//! (ravioli spaces, Hecke families, Grassmannians).
//!
//! Everything here works at desk scale: vertex sets are small, carriers are
//! materialized, and every claimed identity is backed by a bounded exhaustive
//! check in [`laws`]. All values are immutable after construction and all
//! operations are pure functions.

pub mod cograph;
pub mod cotree;
pub mod factorization;
pub mod io;
pub mod isolability;
pub mod laws;
pub mod morphism;
pub mod onecograph;
pub mod partial;
pub mod poset;
pub mod rancat;
pub mod span;
pub mod stratline;

pub use cograph::{Cograph, CographClass, SumKind};
pub use cotree::{CographExpr, Flavor};
pub use morphism::{GraphMap, MapClass};
pub use partial::PartialGraphMap;
pub use span::{Span, SpanFlavor};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IsolaError {
    #[error("adjacency matrix is not symmetric")]
    NotSymmetric,
    #[error("relation is not a cograph: quadruple condition fails at ({0}, {1}, {2}, {3})")]
    NotCograph(usize, usize, usize, usize),
    #[error("expected a reflexive cograph")]
    NotReflexive,
    #[error("expected an irreflexive cograph")]
    NotIrreflexive,
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("too many vertices: {0} (limit {1})")]
    TooManyVertices(usize, usize),
    #[error("map does not preserve the relation at ({0}, {1})")]
    NotRelationPreserving(usize, usize),
    #[error("endpoints do not match: {0}")]
    EndpointMismatch(String),
    #[error("configuration is not in the carrier")]
    NotInCarrier,
    #[error("not a valid directed cograph: {0}")]
    NotOneCograph(String),
    #[error("not a poset: {0}")]
    NotPoset(String),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("unknown law id or pattern: {0}")]
    UnknownLaw(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, IsolaError>;
