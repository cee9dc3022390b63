//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// `t` must be odd or the half-integer path lengths are not integers.
    #[error("t = {0} is even; all (odd*t + odd)/2 path lengths require odd t")]
    EvenT(u64),

    /// The index ranges of the catalog are empty or overlap for this `t`.
    #[error("t = {t} is too small: {reason}")]
    TooSmallT { t: u64, reason: String },

    /// The vertex budget is below the minimum the construction needs.
    #[error("vertex budget n = {n} is below n_t = {n_t}")]
    BudgetTooSmall { n: u128, n_t: u128 },

    /// `t` is not of the form `1260r + 169` and relaxed mode is off.
    #[error("t = {0} is not 1260r + 169 with r >= 1 (use relaxed mode for any odd t >= 801)")]
    NotCanonicalForm(u64),

    /// Asked for the chord geometry of a subgraph that has none.
    #[error("subgraph B_{0} is not a chorded-cycle family member")]
    NotChorded(u64),

    /// A chorded-cycle spec violates its own geometry invariants.
    #[error("chorded-cycle invariant breach: {0}")]
    InvariantBreach(String),

    /// Plain cycles of length 1 or 2 are not simple graphs.
    #[error("plain cycle of length {0} cannot be materialized as a simple graph")]
    Degenerate(u64),

    /// The descriptor has no explicit-graph realization (tail path slot).
    #[error("subgraph B_{0} is not materializable")]
    NotMaterializable(u64),

    /// The index is not in the catalog for these parameters.
    #[error("index {0} is not in the catalog")]
    UnknownIndex(u64),

    /// Materialization would exceed the configured vertex cap.
    #[error("materialization needs {needed} vertices, above the cap of {cap} (use streaming)")]
    VertexCapExceeded { needed: u128, cap: usize },

    /// Exact accounting overflowed 128-bit integers.
    #[error("arithmetic overflow in exact accounting")]
    ArithmeticOverflow,

    /// The edge sink failed mid-stream.
    #[error("edge sink failed after {edges_written} edges")]
    SinkFailure {
        edges_written: u128,
        #[source]
        source: std::io::Error,
    },

    /// Exhaustive search is only supported on a small vertex window.
    #[error("n = {0} is outside the supported exhaustive window 3..=8")]
    OutOfRange(u64),

    /// An edge-list file did not parse or failed validation.
    #[error("malformed edge list: {0}")]
    BadEdgeList(String),

    /// Plain i/o failure outside a streaming context.
    #[error("i/o: {0}")]
    Io(#[source] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
