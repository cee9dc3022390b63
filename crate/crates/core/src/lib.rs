//! Construction and verification of graphs in which no two cycles share a
//! length.
//!
//! The artifact has four cooperating parts:
//!
//! * [`params`] / [`catalog`] — validated parameters and the full catalog
//!   of subgraphs `B_i`, including the chord geometry of the four
//!   constructed families;
//! * [`ledger`] / [`bounds`] / [`table`] — the closed-form cycle-length
//!   ledger with its distinctness verdict, exact vertex/edge accounting,
//!   and the symbolic check of the printed 66-length table;
//! * [`graph`] / [`stream`] — explicit materialization of desk-scale
//!   subgraphs and a constant-memory streaming edge-list export with a
//!   matching reader;
//! * [`enumerate`] / [`extremal`] — the independent oracle: simple-cycle
//!   enumeration of arbitrary graphs and exhaustive extremal search for
//!   tiny vertex counts.
//!
//! The analytic path (catalog -> ledger) and the oracle path
//! (materialize -> enumerate) never share cycle-length computations, so
//! agreement between them is evidence, not tautology.
//!
//! ```
//! use dcl_core::*;
//!
//! let p = validate_params(ParamInput::R(1), None, Mode::Strict, false)?;
//! assert_eq!(p.t, 1429);
//!
//! let ledger = build_ledger(&p)?;
//! assert!(ledger.verdict.is_distinct());
//!
//! let totals = count_totals(&p)?;
//! assert_eq!(totals.edges - totals.vertices, 36 * 1429);
//!
//! // recount one subgraph from its raw edges
//! let d = descriptor_at(&p, 21 * p.t).unwrap();
//! let g = materialize_subgraph(&d, p.t)?;
//! let spectrum = enumerate_cycles(&g, 1_000);
//! assert_eq!(spectrum.lengths.len(), 3);
//! # Ok::<(), dcl_core::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod bounds;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod ledger;
pub mod params;
pub mod stream;
pub mod table;
pub mod verify;

pub use bounds::{bound_report, limit_constant, shi_bound, BoundReport};
pub use catalog::{
    chorded_spec, descriptor_at, descriptors, enumerate_subgraphs, kind_counts, Chord,
    ChordedCycleSpec, KindCounts, SubgraphDescriptor, SubgraphKind,
};
pub use enumerate::{enumerate_cycles, has_distinct_cycle_lengths, CycleSpectrum, DistinctVerdict};
pub use error::{Error, Result};
pub use extremal::{max_edges_distinct_cycles, ExtremalResult};
pub use graph::{
    materialize_full, materialize_subgraph, materialize_subgraph_capped, materialize_union, Graph,
    Role, VertexLabel, DEFAULT_VERTEX_CAP,
};
pub use ledger::{
    build_ledger, chord_cycle_count, count_totals, cycles_of_spec, n_t_by_summation, Collision,
    CycleLedger, LedgerEntry, Legs, Totals, Verdict,
};
pub use params::{
    catalog_size, contiguous_ranges, index_set_summary, n_t, validate_params, IndexSetInfo, Mode,
    ParamInput, Params,
};
pub use stream::{
    read_edge_list, stream_edges, stream_subgraph, write_graph, EdgeListMeta, StreamSummary,
};
pub use table::{table_fidelity, LinPoly, TableFidelityReport, TEN_CHORD_TABLE};
pub use verify::{verify, VerificationReport};
