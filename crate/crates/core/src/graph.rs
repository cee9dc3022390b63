//! Explicit simple graphs with structured vertex labels.
//!
//! Materialization is for desk-scale objects (single subgraphs, or whole
//! instances of hypothetical tiny parameters); it refuses anything above a
//! vertex cap instead of exhausting memory. Full-size instances go through
//! the streaming builder.

use serde::Serialize;

use crate::catalog::{chorded_spec, descriptors, SubgraphDescriptor, SubgraphKind};
use crate::error::{Error, Result};
use crate::params::Params;

/// Default refusal threshold for explicit materialization.
pub const DEFAULT_VERTEX_CAP: usize = 10_000_000;

/// Structural role of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "role", rename_all = "camelCase")]
pub enum Role {
    Hub,
    /// `position` edges along the main cycle from the hub.
    CycleVertex {
        position: u64,
    },
    /// Internal vertex of chord path `chord` (1-based; the tail path uses
    /// chord 0), `position` edges from the hub.
    PathVertex {
        chord: usize,
        position: u64,
    },
}

/// Which subgraph a vertex belongs to; the hub belongs to none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VertexLabel {
    pub subgraph: Option<u64>,
    #[serde(flatten)]
    pub role: Role,
}

/// A simple undirected graph with dense ids `0..vertex_count`.
///
/// Edges are stored normalized (`u < v`) and sorted. Labels are present on
/// materialized graphs and absent on graphs loaded from edge-list files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    /// Builds and validates a simple graph. Rejects loops, parallel edges,
    /// and out-of-range endpoints.
    pub fn new(vertex_count: usize, mut edges: Vec<(u32, u32)>) -> Result<Self> {
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(Error::BadEdgeList(format!("loop at vertex {}", e.0)));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.1 as usize >= vertex_count {
                return Err(Error::BadEdgeList(format!(
                    "edge ({}, {}) exceeds vertex count {}",
                    e.0, e.1, vertex_count
                )));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadEdgeList("parallel edge".into()));
        }
        Ok(Graph {
            vertex_count,
            edges,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }
}

/// Incremental builder used by both single-subgraph and whole-instance
/// materialization. Keeps the id layout identical to the streaming format:
/// hub first, then per subgraph its cycle vertices by position, then the
/// chord paths by index and position.
struct Builder {
    labels: Vec<VertexLabel>,
    edges: Vec<(u32, u32)>,
    cap: usize,
}

impl Builder {
    fn new(cap: usize) -> Self {
        let labels = vec![VertexLabel {
            subgraph: None,
            role: Role::Hub,
        }];
        Builder {
            labels,
            edges: Vec::new(),
            cap,
        }
    }

    fn push_vertex(&mut self, label: VertexLabel) -> Result<u32> {
        if self.labels.len() >= self.cap {
            return Err(Error::VertexCapExceeded {
                needed: self.labels.len() as u128 + 1,
                cap: self.cap,
            });
        }
        self.labels.push(label);
        Ok((self.labels.len() - 1) as u32)
    }

    fn edge(&mut self, u: u32, v: u32) {
        self.edges.push(if u < v { (u, v) } else { (v, u) });
    }

    /// Appends one subgraph sharing the hub (vertex 0).
    fn add_descriptor(&mut self, d: &SubgraphDescriptor, t: u64) -> Result<()> {
        match d.kind {
            SubgraphKind::TailPath { length } => {
                let mut prev = 0u32;
                for pos in 1..=length {
                    let v = self.push_vertex(VertexLabel {
                        subgraph: Some(d.index),
                        role: Role::PathVertex {
                            chord: 0,
                            position: pos as u64,
                        },
                    })?;
                    self.edge(prev, v);
                    prev = v;
                }
                Ok(())
            }
            SubgraphKind::PlainCycle { length } => {
                if length < 3 {
                    return Err(Error::Degenerate(length));
                }
                self.add_cycle_with_chords(d.index, length, &[])
            }
            _ => {
                let spec = chorded_spec(d, t)?;
                self.add_cycle_with_chords(d.index, spec.cycle_len, &spec.chords)
            }
        }
    }

    fn add_cycle_with_chords(
        &mut self,
        index: u64,
        cycle_len: u64,
        chords: &[crate::catalog::Chord],
    ) -> Result<()> {
        // cycle via hub: positions 1..cycle_len-1
        let mut cycle_ids = Vec::with_capacity(cycle_len as usize - 1);
        let mut prev = 0u32;
        for pos in 1..cycle_len {
            let v = self.push_vertex(VertexLabel {
                subgraph: Some(index),
                role: Role::CycleVertex { position: pos },
            })?;
            self.edge(prev, v);
            cycle_ids.push(v);
            prev = v;
        }
        self.edge(prev, 0);
        for (k, chord) in chords.iter().enumerate() {
            let target = cycle_ids[chord.attach as usize - 1];
            let mut prev = 0u32;
            for pos in 1..chord.path_len {
                let v = self.push_vertex(VertexLabel {
                    subgraph: Some(index),
                    role: Role::PathVertex {
                        chord: k + 1,
                        position: pos,
                    },
                })?;
                self.edge(prev, v);
                prev = v;
            }
            self.edge(prev, target);
        }
        Ok(())
    }

    fn finish(self) -> Result<Graph> {
        let count = self.labels.len();
        Ok(Graph::new(count, self.edges)?.with_labels(self.labels))
    }
}

/// Materializes one subgraph (plain cycle of length >= 3 or a chorded
/// family member) as an explicit graph with local ids, hub = 0.
pub fn materialize_subgraph(d: &SubgraphDescriptor, t: u64) -> Result<Graph> {
    materialize_subgraph_capped(d, t, DEFAULT_VERTEX_CAP)
}

pub fn materialize_subgraph_capped(d: &SubgraphDescriptor, t: u64, cap: usize) -> Result<Graph> {
    match d.kind {
        SubgraphKind::TailPath { .. } => return Err(Error::NotMaterializable(d.index)),
        SubgraphKind::PlainCycle { length } if length < 3 => return Err(Error::Degenerate(length)),
        _ => {}
    }
    let mut b = Builder::new(cap);
    b.add_descriptor(d, t)?;
    b.finish()
}

/// Materializes the whole instance (hub shared by every subgraph, tail
/// included). The strict-mode formal entries 1 and 2 are never realized,
/// so the result is always simple. No valid parameter set fits under a
/// sane cap at full `n`; the call exists for completeness and refuses
/// predictably. For oracle work on parts of an instance use
/// `materialize_union`.
pub fn materialize_full(params: &Params, cap: usize) -> Result<Graph> {
    let mut b = Builder::new(cap);
    for d in descriptors(params) {
        if matches!(d.kind, SubgraphKind::PlainCycle { length } if length < 3) {
            continue;
        }
        b.add_descriptor(&d, params.t)?;
    }
    b.finish()
}

/// Materializes the union of the subgraphs at the given catalog indices,
/// all sharing the hub (vertex 0) and otherwise disjoint, exactly as they
/// sit inside the full graph. Useful to let the enumerator confirm that
/// gluing subgraphs at a single vertex adds no cycles.
pub fn materialize_union(params: &Params, indices: &[u64], cap: usize) -> Result<Graph> {
    let mut b = Builder::new(cap);
    for &index in indices {
        let d = crate::catalog::descriptor_at(params, index).ok_or(Error::UnknownIndex(index))?;
        if matches!(d.kind, SubgraphKind::PlainCycle { length } if length < 3) {
            return Err(Error::Degenerate(index));
        }
        b.add_descriptor(&d, params.t)?;
    }
    b.finish()
}
