//! Closed-form cycle-length ledger and exact vertex/edge accounting.
//!
//! Nothing in this module materializes a graph. The cycle lengths of a
//! chorded subgraph are derived from its geometry, the ledger is the union
//! over the whole catalog, and the totals are exact 128-bit sums. The
//! lengths of the transcribed 66-length table are treated as a claim
//! to check (see `table`), never as an input here.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::{chorded_spec, descriptors, ChordedCycleSpec, SubgraphKind};
use crate::error::{Error, Result};
use crate::params::{Mode, Params};

/// Which pair of hub-legs forms a cycle inside one subgraph.
///
/// A subgraph's legs are its two cycle arcs at the hub plus one leg per
/// chord path; every simple cycle through the hub uses exactly two of
/// them, and the only hubless cycle is the full cycle itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "legs", rename_all = "camelCase")]
pub enum Legs {
    /// The subgraph's main cycle (also used for plain cycles).
    FullCycle,
    /// Chord `k` (1-based) closed through the ascending cycle arc.
    ChordAscending { chord: usize },
    /// Chord `k` closed through the descending cycle arc.
    ChordDescending { chord: usize },
    /// Two chords joined by the arc between their attachment points.
    ChordPair { first: usize, second: usize },
}

impl std::fmt::Display for Legs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Legs::FullCycle => write!(f, "full"),
            Legs::ChordAscending { chord } => write!(f, "chord{chord}.asc"),
            Legs::ChordDescending { chord } => write!(f, "chord{chord}.desc"),
            Legs::ChordPair { first, second } => write!(f, "chord{first}.chord{second}"),
        }
    }
}

/// Number of distinct cycles in a cycle with `d` hub chords: `(d+2 choose 2)`.
pub fn chord_cycle_count(d: u64) -> u64 {
    (d + 2) * (d + 1) / 2
}

/// The complete cycle-length multiset of one chorded subgraph.
///
/// For each chord `k`: `p_k + a_k` and `p_k + (L - a_k)`; for each pair
/// `j < k`: `p_j + p_k + (a_k - a_j)`; plus the full cycle `L`. Duplicates
/// are preserved: the output is a multiset.
pub fn cycles_of_spec(spec: &ChordedCycleSpec) -> Result<Vec<(u64, Legs)>> {
    spec.check()?;
    let d = spec.chords.len();
    let mut out = Vec::with_capacity(chord_cycle_count(d as u64) as usize);
    out.push((spec.cycle_len, Legs::FullCycle));
    for (k, c) in spec.chords.iter().enumerate() {
        out.push((c.path_len + c.attach, Legs::ChordAscending { chord: k + 1 }));
        out.push((
            c.path_len + (spec.cycle_len - c.attach),
            Legs::ChordDescending { chord: k + 1 },
        ));
    }
    for j in 0..d {
        for k in j + 1..d {
            let (cj, ck) = (&spec.chords[j], &spec.chords[k]);
            out.push((
                cj.path_len + ck.path_len + (ck.attach - cj.attach),
                Legs::ChordPair {
                    first: j + 1,
                    second: k + 1,
                },
            ));
        }
    }
    Ok(out)
}

/// One ledger row: a cycle length, the subgraph it lives in, and which
/// legs form it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LedgerEntry {
    pub length: u64,
    pub source: u64,
    #[serde(flatten)]
    pub legs: Legs,
}

/// A length shared by two or more cycles, with every source listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Collision {
    pub length: u64,
    pub sources: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum Verdict {
    Distinct,
    Collisions { collisions: Vec<Collision> },
}

impl Verdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct)
    }
}

/// The full multiset of cycle lengths of `G`, sorted by length (ties by
/// source index), with the distinctness verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleLedger {
    pub entries: Vec<LedgerEntry>,
    pub verdict: Verdict,
}

impl CycleLedger {
    /// Canonical CSV: header plus `length,source,legs` rows in ledger order.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("length,source,legs\n");
        for e in &self.entries {
            s.push_str(&format!("{},{},{}\n", e.length, e.source, e.legs));
        }
        s
    }

    fn from_entries(mut entries: Vec<LedgerEntry>) -> Self {
        entries.sort_unstable_by_key(|e| (e.length, e.source, e.legs));
        let mut collisions = Vec::new();
        let mut run = 0usize;
        for i in 1..=entries.len() {
            if i < entries.len() && entries[i].length == entries[run].length {
                continue;
            }
            if i - run > 1 {
                collisions.push(Collision {
                    length: entries[run].length,
                    sources: entries[run..i].iter().map(|e| e.source).collect(),
                });
            }
            run = i;
        }
        let verdict = if collisions.is_empty() {
            Verdict::Distinct
        } else {
            Verdict::Collisions { collisions }
        };
        CycleLedger { entries, verdict }
    }
}

/// Builds the complete ledger for the instance: one entry per plain cycle
/// (including the strict-mode formal lengths 1 and 2), the derived multiset
/// for every chorded family member, nothing for the tail.
pub fn build_ledger(params: &Params) -> Result<CycleLedger> {
    let mut entries = Vec::new();
    collect_entries(params, &mut entries)?;
    Ok(CycleLedger::from_entries(entries))
}

fn collect_entries(params: &Params, entries: &mut Vec<LedgerEntry>) -> Result<()> {
    for d in descriptors(params) {
        match d.kind {
            SubgraphKind::TailPath { .. } => {}
            SubgraphKind::PlainCycle { length } => {
                entries.push(LedgerEntry {
                    length,
                    source: d.index,
                    legs: Legs::FullCycle,
                });
            }
            _ => {
                let spec = chorded_spec(&d, params.t)?;
                for (length, legs) in cycles_of_spec(&spec)? {
                    entries.push(LedgerEntry {
                        length,
                        source: d.index,
                        legs,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Injects extra entries before the verdict is computed; lets callers and
/// tests exercise the collision reporting path on demand.
pub fn build_ledger_with_extra(params: &Params, extra: &[LedgerEntry]) -> Result<CycleLedger> {
    let mut entries = Vec::new();
    collect_entries(params, &mut entries)?;
    entries.extend_from_slice(extra);
    Ok(CycleLedger::from_entries(entries))
}

/// Exact global counts for the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Totals {
    pub vertices: u128,
    pub edges: u128,
    /// `edges - vertices + components`.
    pub cycle_rank: u128,
    pub components: u128,
    pub mode: Mode,
}

impl Totals {
    /// Single-row CSV matching the field order of the struct.
    pub fn to_csv(&self) -> String {
        format!(
            "vertices,edges,cycleRank,components,mode\n{},{},{},{},{}\n",
            self.vertices, self.edges, self.cycle_rank, self.components, self.mode
        )
    }
}

/// Vertex/edge contribution of one descriptor, hub excluded.
///
/// Plain cycle of length `L`: `L-1` vertices, `L` edges (so the formal
/// entries 1 and 2 contribute 0/1 and 1/2 respectively). Tail of length
/// `l`: `l` and `l`. Chorded: `L-1 + sum(p_k - 1)` and `L + sum(p_k)`.
pub fn contribution(kind: &SubgraphKind, t: u64) -> Result<(u128, u128)> {
    Ok(match *kind {
        SubgraphKind::TailPath { length } => (length, length),
        SubgraphKind::PlainCycle { length } => ((length - 1) as u128, length as u128),
        _ => {
            let d = crate::catalog::SubgraphDescriptor {
                index: 0,
                kind: *kind,
            };
            let spec = chorded_spec(&d, t)?;
            ((spec.vertex_count() - 1) as u128, spec.edge_count() as u128)
        }
    })
}

/// Sums per-descriptor contributions plus the hub. Exact, checked
/// arithmetic; overflow cannot occur below roughly `r = 10^15`.
pub fn count_totals(params: &Params) -> Result<Totals> {
    let mut vertices: u128 = 1; // hub
    let mut edges: u128 = 0;
    for d in descriptors(params) {
        let (v, e) = contribution(&d.kind, params.t)?;
        vertices = vertices.checked_add(v).ok_or(Error::ArithmeticOverflow)?;
        edges = edges.checked_add(e).ok_or(Error::ArithmeticOverflow)?;
    }
    let cycle_rank = edges
        .checked_add(1)
        .and_then(|x| x.checked_sub(vertices))
        .ok_or(Error::ArithmeticOverflow)?;
    Ok(Totals {
        vertices,
        edges,
        cycle_rank,
        components: 1,
        mode: params.mode,
    })
}

/// The strict-mode vertex total at tail length zero, by summation. This is
/// the number the closed form `n_t` claims; callers compare the two.
pub fn n_t_by_summation(t: u64) -> Result<u128> {
    let params = Params {
        r: None,
        t,
        n: crate::params::n_t(t)?,
        n_t: crate::params::n_t(t)?,
        mode: Mode::Strict,
        relaxed: true,
    };
    let mut vertices: u128 = 1;
    for d in descriptors(&params) {
        if matches!(d.kind, SubgraphKind::TailPath { .. }) {
            continue;
        }
        let (v, _) = contribution(&d.kind, t)?;
        vertices = vertices.checked_add(v).ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(vertices)
}

/// Distribution of entry counts per length, useful for diagnostics.
pub fn length_histogram(ledger: &CycleLedger) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for e in &ledger.entries {
        *h.entry(e.length).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Chord, SubgraphDescriptor};
    use crate::params::{validate_params, ParamInput};

    fn params(mode: Mode) -> Params {
        validate_params(ParamInput::R(1), None, mode, false).unwrap()
    }

    #[test]
    fn chord_cycle_count_examples() {
        assert_eq!(chord_cycle_count(10), 66);
        assert_eq!(chord_cycle_count(1), 3);
        assert_eq!(chord_cycle_count(0), 1);
    }

    #[test]
    fn three_cycle_odd_lengths_symbolic() {
        // lengths must be 21t+2j+1, 23t+2j, 25t+2j for a sample of (t, j)
        for (t, j) in [(1429u64, 0u64), (1429, 7), (801, 400), (2689, 1000)] {
            let d = SubgraphDescriptor {
                index: 21 * t + 2 * j + 1,
                kind: SubgraphKind::ThreeCycleOdd { j },
            };
            let spec = chorded_spec(&d, t).unwrap();
            let mut lens: Vec<u64> = cycles_of_spec(&spec).unwrap().iter().map(|x| x.0).collect();
            lens.sort_unstable();
            assert_eq!(
                lens,
                vec![21 * t + 2 * j + 1, 23 * t + 2 * j, 25 * t + 2 * j]
            );
        }
    }

    #[test]
    fn symmetric_chord_preserves_duplicates() {
        let spec = ChordedCycleSpec::new(
            6,
            vec![Chord {
                path_len: 2,
                attach: 3,
            }],
        )
        .unwrap();
        let mut lens: Vec<u64> = cycles_of_spec(&spec).unwrap().iter().map(|x| x.0).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![5, 5, 6]);
    }

    #[test]
    fn ten_chord_smallest_entry_is_its_index() {
        let d = SubgraphDescriptor {
            index: 38584,
            kind: SubgraphKind::TenChord { i: 58 },
        };
        let spec = chorded_spec(&d, 1429).unwrap();
        let cycles = cycles_of_spec(&spec).unwrap();
        assert_eq!(cycles.len(), 66);
        let min = cycles.iter().map(|x| x.0).min().unwrap();
        assert_eq!(min, 38584); // 27t + i - 57 at t=1429, i=58
    }

    #[test]
    fn ledger_distinct_and_sized_at_r1() {
        let p = params(Mode::Strict);
        let ledger = build_ledger(&p).unwrap();
        assert!(ledger.verdict.is_distinct());
        assert_eq!(ledger.entries.len() as u64, 93 * p.t - 43945);
        // canonical order
        assert!(ledger
            .entries
            .windows(2)
            .all(|w| (w[0].length, w[0].source) <= (w[1].length, w[1].source)));
        // strict mode carries the two formal entries
        assert_eq!(ledger.entries[0].length, 1);
        assert_eq!(ledger.entries[1].length, 2);
    }

    #[test]
    fn simple_mode_ledger_drops_formal_entries() {
        let p = params(Mode::Simple);
        let ledger = build_ledger(&p).unwrap();
        assert!(ledger.verdict.is_distinct());
        assert_eq!(ledger.entries.len() as u64, 93 * p.t - 43947);
        assert_eq!(ledger.entries[0].length, 3);
    }

    #[test]
    fn injected_duplicate_is_reported_with_all_sources() {
        let p = params(Mode::Strict);
        let dup = LedgerEntry {
            length: 26 * p.t,
            source: 999_999,
            legs: Legs::FullCycle,
        };
        let ledger = build_ledger_with_extra(&p, &[dup]).unwrap();
        match &ledger.verdict {
            Verdict::Collisions { collisions } => {
                assert_eq!(collisions.len(), 1);
                assert_eq!(collisions[0].length, 26 * p.t);
                assert_eq!(collisions[0].sources, vec![26 * p.t, 999_999]);
            }
            Verdict::Distinct => panic!("expected a collision"),
        }
    }

    #[test]
    fn totals_identity_strict_and_simple() {
        let strict = count_totals(&params(Mode::Strict)).unwrap();
        assert_eq!(strict.vertices, 1_228_323_094);
        assert_eq!(strict.edges - strict.vertices, 36 * 1429);
        assert_eq!(strict.cycle_rank, 36 * 1429 + 1);
        assert_eq!(strict.components, 1);

        let simple = count_totals(&params(Mode::Simple)).unwrap();
        assert_eq!(simple.vertices, 1_228_323_094);
        assert_eq!(simple.edges - simple.vertices, 36 * 1429 - 2);
    }

    #[test]
    fn totals_edge_counts_match_spec_examples() {
        assert_eq!(
            count_totals(&params(Mode::Strict)).unwrap().edges,
            1_228_374_538
        );
        assert_eq!(
            count_totals(&params(Mode::Simple)).unwrap().edges,
            1_228_374_536
        );
    }

    #[test]
    fn tail_neutrality() {
        let base = params(Mode::Strict);
        let bigger =
            validate_params(ParamInput::R(1), Some(base.n + 12345), Mode::Strict, false).unwrap();
        let t0 = count_totals(&base).unwrap();
        let t1 = count_totals(&bigger).unwrap();
        assert_eq!(t1.vertices - t0.vertices, 12345);
        assert_eq!(t1.edges - t0.edges, 12345);
        let l0 = build_ledger(&base).unwrap();
        let l1 = build_ledger(&bigger).unwrap();
        assert_eq!(l0, l1);
    }

    #[test]
    fn n_t_summation_matches_closed_form() {
        assert_eq!(
            n_t_by_summation(1429).unwrap(),
            crate::params::n_t(1429).unwrap()
        );
    }

    #[test]
    fn totals_csv_shape() {
        let t = count_totals(&params(Mode::Strict)).unwrap();
        let csv = t.to_csv();
        assert_eq!(
            csv,
            "vertices,edges,cycleRank,components,mode\n1228323094,1228374538,51445,1,strict\n"
        );
    }

    #[test]
    fn csv_shape() {
        let spec = ChordedCycleSpec::new(
            6,
            vec![Chord {
                path_len: 2,
                attach: 3,
            }],
        )
        .unwrap();
        let entries = cycles_of_spec(&spec)
            .unwrap()
            .into_iter()
            .map(|(length, legs)| LedgerEntry {
                length,
                source: 7,
                legs,
            })
            .collect();
        let ledger = CycleLedger::from_entries(entries);
        let csv = ledger.to_csv();
        assert!(csv.starts_with("length,source,legs\n"));
        assert!(csv.contains("5,7,chord1.asc\n"));
        assert!(csv.contains("6,7,full\n"));
        assert_eq!(csv.lines().count(), 4);
    }
}
