//! Decision engine for edge ideals of weighted oriented graphs.
//!
//! A weighted oriented graph `D` is a finite simple directed graph together
//! with a positive integer weight on every vertex. Its edge ideal is generated
//! by one monomial `x_i * x_j^{w(x_j)}` per directed edge `(x_i, x_j)`. This
//! crate decides, by purely combinatorial procedures, whether that ideal is
//! unmixed (all associated primes of equal height) and whether the quotient is
//! Cohen-Macaulay, and it cross-validates those decisions against an
//! exhaustive strong-vertex-cover oracle.
//!
//! The work splits into five layers:
//!
//! * [`graph`]: the graph types, construction-time validation and weight
//!   normalization, vertex deletion, weight capping, ideal generators.
//! * [`covers`]: vertex covers, the `L1/L2/L3` partition of a cover, strong
//!   covers and their enumeration.
//! * [`matching`]: matchings, the perfect-matching exchange property, Koenig
//!   and (very) well-covered classification, girth and short-cycle probes.
//! * [`criteria`]: the matching-based deciders with their applicability
//!   gates, verdicts, and witness traces.
//! * [`oracle`]: ground truth by enumeration, seeded instance generation, and
//!   the cross-check harness used by the fuzzer.
//!
//! Everything downstream of subset enumeration takes an explicit vertex-count
//! bound (default [`DEFAULT_BOUND`]) and refuses larger inputs instead of
//! silently running for hours. Graphs are structurally capped at 64 vertices
//! so vertex sets fit in one machine word.

pub mod covers;
pub mod criteria;
pub mod exec;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod samples;
mod set;

pub use graph::{GraphSpec, MonomialGenerator, Normalization, SimpleGraph, WeightedOrientedGraph};
pub use set::VertexSet;

/// Default vertex-count ceiling for enumeration-backed operations.
pub const DEFAULT_BOUND: usize = 24;

/// Hard structural limit: vertex sets are single 64-bit words.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex index {index} out of range for graph with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("loop edge at {0:?}")]
    LoopEdge(String),
    #[error("duplicate edge {0:?} -> {1:?}")]
    DuplicateEdge(String, String),
    #[error("edge {0:?} -> {1:?} present in both orientations")]
    BothOrientations(String, String),
    #[error("vertex {label:?} has weight {weight}; weights must be at least 1")]
    InvalidWeight { label: String, weight: u32 },
    #[error("{role} {label:?} has weight {weight}; strict construction requires weight 1")]
    NotNormalized { role: &'static str, label: String, weight: u32 },
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("graph has {n} vertices, above the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("set {0:?} is not a vertex cover")]
    NotACover(VertexSet),
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("edge set is not a matching: vertex {0} is matched twice")]
    NotAMatching(usize),
    #[error("matching edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("cycle length {0} is below 3")]
    CycleLengthTooSmall(usize),
    #[error("girth-constrained generation failed after {attempts} attempts (n={n}, min_girth={min_girth})")]
    GenerationFailed { attempts: usize, n: usize, min_girth: usize },
    #[error("unknown instance family {0:?}")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

/// FNV-1a, 64-bit. Used for instance digests; unlike the std hasher its
/// output is pinned forever, so digests in golden reports stay stable.
pub(crate) fn fnv1a64(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}
