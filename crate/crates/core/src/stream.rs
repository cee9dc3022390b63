//! Streaming edge-list export and the matching reader.
//!
//! The text format is line-oriented: `#`-prefixed header lines carrying
//! format version, parameters, and counts, then one edge per line as
//! `u v` in decimal with `u < v`. Output is deterministic: descriptors in
//! ascending index order, edges in local canonical walk order, ids laid
//! out hub-first exactly like the materializer. Memory stays O(1) in the
//! graph size.
//!
//! Only the simple part of an instance is ever streamed; under strict
//! accounting the two formal entries are reported in the summary instead
//! (a loop and a doubled edge have no simple edge-list representation).

use std::io::{BufRead, Write};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::catalog::{chorded_spec, descriptors, SubgraphDescriptor, SubgraphKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{Mode, Params};

pub const FORMAT_LINE: &str = "# dcl edge list v1";

/// What a finished stream amounted to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StreamSummary {
    pub vertices: u128,
    pub edges: u128,
    /// SHA-256 of every byte written, hex.
    pub checksum: String,
    /// Formal accounting entries excluded from the stream (2 under strict
    /// accounting: the loop and the doubled edge; their 3 edges and 1
    /// vertex are likewise excluded from the counts above).
    pub formal_entries: u32,
}

struct TextSink<W: Write> {
    w: W,
    hasher: Sha256,
    edges_written: u128,
    buf: String,
}

impl<W: Write> TextSink<W> {
    fn new(w: W) -> Self {
        TextSink {
            w,
            hasher: Sha256::new(),
            edges_written: 0,
            buf: String::with_capacity(64),
        }
    }

    fn line(&mut self, s: &str) -> Result<()> {
        self.hasher.update(s.as_bytes());
        self.hasher.update(b"\n");
        self.w
            .write_all(s.as_bytes())
            .and_then(|_| self.w.write_all(b"\n"))
            .map_err(|e| Error::SinkFailure {
                edges_written: self.edges_written,
                source: e,
            })
    }

    fn edge(&mut self, a: u128, b: u128) -> Result<()> {
        use std::fmt::Write as _;
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.buf.clear();
        let _ = write!(self.buf, "{u} {v}");
        let s = std::mem::take(&mut self.buf);
        let r = self.line(&s);
        self.buf = s;
        self.edges_written += 1;
        r
    }

    fn checksum(self) -> String {
        let digest = self.hasher.finalize();
        let mut s = String::with_capacity(64);
        for b in digest {
            use std::fmt::Write as _;
            let _ = write!(s, "{b:02x}");
        }
        s
    }
}

/// Emits one descriptor's edges with its vertices starting at `base`;
/// returns the next free id. `base` = 1 for local (single-subgraph) ids.
fn emit_descriptor<W: Write>(
    sink: &mut TextSink<W>,
    d: &SubgraphDescriptor,
    t: u64,
    base: u128,
) -> Result<u128> {
    match d.kind {
        SubgraphKind::TailPath { length } => {
            let mut prev = 0u128;
            for off in 0..length {
                let v = base + off;
                sink.edge(prev, v)?;
                prev = v;
            }
            Ok(base + length)
        }
        SubgraphKind::PlainCycle { length } => {
            debug_assert!(length >= 3, "degenerate entries are never streamed");
            emit_cycle_with_chords(sink, length, &[], base)
        }
        _ => {
            let spec = chorded_spec(d, t)?;
            emit_cycle_with_chords(sink, spec.cycle_len, &spec.chords, base)
        }
    }
}

fn emit_cycle_with_chords<W: Write>(
    sink: &mut TextSink<W>,
    cycle_len: u64,
    chords: &[crate::catalog::Chord],
    base: u128,
) -> Result<u128> {
    // cycle positions 1..cycle_len-1 are ids base..base+cycle_len-2
    let mut prev = 0u128;
    for off in 0..cycle_len as u128 - 1 {
        let v = base + off;
        sink.edge(prev, v)?;
        prev = v;
    }
    sink.edge(prev, 0)?;
    let mut next = base + cycle_len as u128 - 1;
    for chord in chords {
        let target = base + chord.attach as u128 - 1;
        let mut prev = 0u128;
        for _ in 1..chord.path_len {
            sink.edge(prev, next)?;
            prev = next;
            next += 1;
        }
        sink.edge(prev, target)?;
    }
    Ok(next)
}

fn header<W: Write>(
    sink: &mut TextSink<W>,
    params: &Params,
    scope: &str,
    vertices: u128,
    edges: u128,
) -> Result<()> {
    sink.line(FORMAT_LINE)?;
    sink.line(&format!(
        "# t={} n={} mode={} scope={scope}",
        params.t, params.n, params.mode
    ))?;
    sink.line(&format!("# vertices={vertices} edges={edges}"))
}

/// Streams the entire instance `G` to the sink.
///
/// The body is the simple part (mode only changes the header and the
/// formal-entry note); summary counts equal the simple-mode totals.
pub fn stream_edges<W: Write>(params: &Params, w: W) -> Result<StreamSummary> {
    let simple = Params {
        mode: Mode::Simple,
        ..*params
    };
    let totals = crate::ledger::count_totals(&simple)?;
    let mut sink = TextSink::new(w);
    header(&mut sink, params, "full", totals.vertices, totals.edges)?;
    let mut next = 1u128;
    for d in descriptors(&simple) {
        next = emit_descriptor(&mut sink, &d, simple.t, next)?;
    }
    let edges = sink.edges_written;
    check_counts(next, edges, totals.vertices, totals.edges)?;
    Ok(StreamSummary {
        vertices: next,
        edges,
        checksum: sink.checksum(),
        formal_entries: match params.mode {
            Mode::Strict => 2,
            Mode::Simple => 0,
        },
    })
}

/// Streams one subgraph with local ids (hub = 0), loadable standalone.
pub fn stream_subgraph<W: Write>(
    params: &Params,
    d: &SubgraphDescriptor,
    w: W,
) -> Result<StreamSummary> {
    match d.kind {
        SubgraphKind::TailPath { .. } => return Err(Error::NotMaterializable(d.index)),
        SubgraphKind::PlainCycle { length } if length < 3 => return Err(Error::Degenerate(length)),
        _ => {}
    }
    let (v, e) = crate::ledger::contribution(&d.kind, params.t)?;
    let (vertices, edges) = (v + 1, e);
    let mut sink = TextSink::new(w);
    header(
        &mut sink,
        params,
        &format!("subgraph:{}", d.index),
        vertices,
        edges,
    )?;
    let next = emit_descriptor(&mut sink, d, params.t, 1)?;
    check_counts(next, sink.edges_written, vertices, edges)?;
    Ok(StreamSummary {
        vertices,
        edges,
        checksum: sink.checksum(),
        formal_entries: 0,
    })
}

/// Streamed counts must reproduce the analytic totals exactly.
fn check_counts(vertices: u128, edges: u128, want_v: u128, want_e: u128) -> Result<()> {
    if vertices != want_v || edges != want_e {
        return Err(Error::InvariantBreach(format!(
            "streamed counts v={vertices} e={edges} disagree with analytic totals v={want_v} e={want_e}"
        )));
    }
    Ok(())
}

/// Writes an arbitrary in-memory graph in the same format (fixtures, test
/// round-trips).
pub fn write_graph<W: Write>(graph: &Graph, w: W) -> Result<StreamSummary> {
    let mut sink = TextSink::new(w);
    sink.line(FORMAT_LINE)?;
    sink.line(&format!(
        "# vertices={} edges={}",
        graph.vertex_count(),
        graph.edge_count()
    ))?;
    for &(u, v) in graph.edges() {
        sink.edge(u as u128, v as u128)?;
    }
    Ok(StreamSummary {
        vertices: graph.vertex_count() as u128,
        edges: sink.edges_written,
        checksum: sink.checksum(),
        formal_entries: 0,
    })
}

/// Header metadata recovered by the reader.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeListMeta {
    pub t: Option<u64>,
    pub n: Option<u128>,
    pub mode: Option<String>,
    pub scope: Option<String>,
    pub vertices: Option<u128>,
    pub edges: Option<u128>,
}

/// Reads an edge list back into a `Graph`.
///
/// Header lines are optional (hand-made fixtures work); when counts are
/// declared they are enforced. `vertex_cap` bounds memory.
pub fn read_edge_list<R: BufRead>(r: R, vertex_cap: usize) -> Result<(Graph, EdgeListMeta)> {
    let mut meta = EdgeListMeta::default();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut max_id: u128 = 0;
    let mut saw_vertex = false;
    for (lineno, line) in r.lines().enumerate() {
        let line = line.map_err(Error::Io)?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            for tok in rest.split_whitespace() {
                if let Some((k, v)) = tok.split_once('=') {
                    match k {
                        "t" => meta.t = v.parse().ok(),
                        "n" => meta.n = v.parse().ok(),
                        "mode" => meta.mode = Some(v.to_string()),
                        "scope" => meta.scope = Some(v.to_string()),
                        "vertices" => meta.vertices = v.parse().ok(),
                        "edges" => meta.edges = v.parse().ok(),
                        _ => {}
                    }
                }
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::BadEdgeList(format!(
                    "line {}: expected 'u v', got '{line}'",
                    lineno + 1
                )))
            }
        };
        let u: u128 = u
            .parse()
            .map_err(|_| Error::BadEdgeList(format!("line {}: bad id '{u}'", lineno + 1)))?;
        let v: u128 = v
            .parse()
            .map_err(|_| Error::BadEdgeList(format!("line {}: bad id '{v}'", lineno + 1)))?;
        if u >= v {
            return Err(Error::BadEdgeList(format!(
                "line {}: ids must satisfy u < v, got {u} {v}",
                lineno + 1
            )));
        }
        if v >= vertex_cap as u128 || v > u32::MAX as u128 {
            return Err(Error::VertexCapExceeded {
                needed: v + 1,
                cap: vertex_cap,
            });
        }
        max_id = max_id.max(v);
        edges.push((u as u32, v as u32));
        saw_vertex = true;
    }
    let inferred = if saw_vertex { max_id + 1 } else { 0 };
    let vertex_count = meta.vertices.unwrap_or(inferred);
    if vertex_count > vertex_cap as u128 {
        return Err(Error::VertexCapExceeded {
            needed: vertex_count,
            cap: vertex_cap,
        });
    }
    if vertex_count < inferred {
        return Err(Error::BadEdgeList(format!(
            "declared vertices={vertex_count} below max id {max_id}"
        )));
    }
    if let Some(e) = meta.edges {
        if e != edges.len() as u128 {
            return Err(Error::BadEdgeList(format!(
                "declared edges={e} but found {}",
                edges.len()
            )));
        }
    }
    Ok((Graph::new(vertex_count as usize, edges)?, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::materialize_subgraph;
    use crate::params::{validate_params, ParamInput};

    fn params() -> Params {
        validate_params(ParamInput::R(1), None, Mode::Strict, false).unwrap()
    }

    fn desc(index: u64, kind: SubgraphKind) -> SubgraphDescriptor {
        SubgraphDescriptor { index, kind }
    }

    #[test]
    fn subgraph_stream_is_deterministic() {
        let p = params();
        let d = desc(38584, SubgraphKind::TenChord { i: 58 });
        let mut a = Vec::new();
        let mut b = Vec::new();
        let sa = stream_subgraph(&p, &d, &mut a).unwrap();
        let sb = stream_subgraph(&p, &d, &mut b).unwrap();
        assert_eq!(a, b);
        assert_eq!(sa, sb);
    }

    #[test]
    fn subgraph_stream_counts_match_contribution() {
        let p = params();
        for d in [
            desc(5, SubgraphKind::PlainCycle { length: 5 }),
            desc(21 * p.t + 1, SubgraphKind::ThreeCycleOdd { j: 0 }),
            desc(21 * p.t, SubgraphKind::ThreeCycleEven { j: 0 }),
            desc(23 * p.t + 1, SubgraphKind::ThreeCycleShift { j: 0 }),
            desc(38584, SubgraphKind::TenChord { i: 58 }),
        ] {
            let mut buf = Vec::new();
            let s = stream_subgraph(&p, &d, &mut buf).unwrap();
            let (v, e) = crate::ledger::contribution(&d.kind, p.t).unwrap();
            assert_eq!(s.vertices, v + 1);
            assert_eq!(s.edges, e);
        }
    }

    #[test]
    fn stream_round_trips_through_reader_and_matches_materializer() {
        let p = params();
        let d = desc(21 * p.t, SubgraphKind::ThreeCycleEven { j: 0 });
        let mut buf = Vec::new();
        let s = stream_subgraph(&p, &d, &mut buf).unwrap();
        let (g, meta) = read_edge_list(buf.as_slice(), 10_000_000).unwrap();
        assert_eq!(g.vertex_count() as u128, s.vertices);
        assert_eq!(g.edge_count() as u128, s.edges);
        assert_eq!(meta.t, Some(p.t));
        assert_eq!(
            meta.scope.as_deref(),
            Some(format!("subgraph:{}", d.index).as_str())
        );
        let m = materialize_subgraph(&d, p.t).unwrap();
        assert_eq!(g.edges(), m.edges());
    }

    #[test]
    fn tiny_relaxed_instance_streams_and_reloads() {
        // smallest valid t; stream a sample of subgraphs and reload them
        let p = validate_params(ParamInput::T(801), None, Mode::Simple, true).unwrap();
        for d in [
            desc(3, SubgraphKind::PlainCycle { length: 3 }),
            desc(23 * p.t + 1, SubgraphKind::ThreeCycleShift { j: 0 }),
            desc(27 * p.t + 1, SubgraphKind::TenChord { i: 58 }),
        ] {
            let mut buf = Vec::new();
            let s = stream_subgraph(&p, &d, &mut buf).unwrap();
            let (g, _) = read_edge_list(buf.as_slice(), 10_000_000).unwrap();
            assert_eq!(g.edge_count() as u128, s.edges);
            let m = materialize_subgraph(&d, p.t).unwrap();
            assert_eq!(g.edges(), m.edges());
        }
    }

    #[test]
    fn degenerates_and_tail_refuse_to_stream() {
        let p = params();
        let mut buf = Vec::new();
        assert!(stream_subgraph(
            &p,
            &desc(1, SubgraphKind::PlainCycle { length: 1 }),
            &mut buf
        )
        .is_err());
        assert!(
            stream_subgraph(&p, &desc(0, SubgraphKind::TailPath { length: 0 }), &mut buf).is_err()
        );
    }

    #[test]
    fn reader_rejects_malformed_lines() {
        assert!(read_edge_list("0 1 2\n".as_bytes(), 100).is_err());
        assert!(read_edge_list("1 0\n".as_bytes(), 100).is_err());
        assert!(read_edge_list("0 x\n".as_bytes(), 100).is_err());
        assert!(read_edge_list("# vertices=1\n0 1\n".as_bytes(), 100).is_err());
        assert!(read_edge_list("# edges=2\n0 1\n".as_bytes(), 100).is_err());
        // duplicate edge -> not simple
        assert!(read_edge_list("0 1\n0 1\n".as_bytes(), 100).is_err());
    }

    #[test]
    fn reader_accepts_headerless_fixture() {
        let (g, meta) = read_edge_list("0 1\n1 2\n0 2\n".as_bytes(), 100).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(meta.t, None);
    }

    #[test]
    fn write_graph_round_trip() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        let (h, _) = read_edge_list(buf.as_slice(), 100).unwrap();
        assert_eq!(g.edges(), h.edges());
        assert_eq!(g.vertex_count(), h.vertex_count());
    }

    #[test]
    fn sink_failure_reports_progress() {
        struct FailAfter(usize);
        impl Write for FailAfter {
            fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
                if self.0 == 0 {
                    Err(std::io::Error::other("full"))
                } else {
                    self.0 -= 1;
                    Ok(buf.len())
                }
            }
            fn flush(&mut self) -> std::io::Result<()> {
                Ok(())
            }
        }
        let p = params();
        let d = desc(10, SubgraphKind::PlainCycle { length: 10 });
        let err = stream_subgraph(&p, &d, FailAfter(10)).unwrap_err();
        assert!(matches!(err, Error::SinkFailure { .. }));
    }
}
