//! The subgraph catalog: which `B_i` exist and what each one is.
//!
//! Every index in the catalog yields exactly one subgraph. Index 0 is the
//! tail path; four index families carry a cycle-with-chord-paths
//! construction; every other listed index is a plain cycle of that length.
//! Two family index sets list one more index than the construction covers
//! (`22t-1` and `24t`); those default to plain cycles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{contiguous_ranges, Mode, Params};

/// What a catalog index `i` carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum SubgraphKind {
    /// The cycle-free path `B_0` hanging off the hub.
    TailPath { length: u128 },
    /// A cycle of the given length through the hub. Lengths 1 and 2 are
    /// formal accounting entries (strict mode only) and never materialize.
    PlainCycle { length: u64 },
    /// `B_{21t+2j+1}`: cycle `25t+2j` with one chord path.
    ThreeCycleOdd { j: u64 },
    /// `B_{21t+2j}`: cycle `25t+2j+1` with one chord path.
    ThreeCycleEven { j: u64 },
    /// `B_{23t+2j+1}`: cycle `26t+2j+2` with one chord path.
    ThreeCycleShift { j: u64 },
    /// `B_{27t+i-57}`: cycle `132t+11i+894` with ten chord paths.
    TenChord { i: u64 },
}

impl SubgraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            SubgraphKind::TailPath { .. } => "tailPath",
            SubgraphKind::PlainCycle { .. } => "plainCycle",
            SubgraphKind::ThreeCycleOdd { .. } => "threeCycleOdd",
            SubgraphKind::ThreeCycleEven { .. } => "threeCycleEven",
            SubgraphKind::ThreeCycleShift { .. } => "threeCycleShift",
            SubgraphKind::TenChord { .. } => "tenChord",
        }
    }
}

/// One catalog entry: the subscript of `B_index` and its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubgraphDescriptor {
    pub index: u64,
    #[serde(flatten)]
    pub kind: SubgraphKind,
}

/// One chord path: `path_len` edges from the hub to the cycle vertex
/// `attach` edges along the cycle from the hub.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chord {
    pub path_len: u64,
    pub attach: u64,
}

/// Hub-based cycle-with-chord-paths geometry. All quantities are edge
/// counts and exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordedCycleSpec {
    pub cycle_len: u64,
    /// Ordered by attachment point: `0 < a_1 < ... < a_d < cycle_len`.
    pub chords: Vec<Chord>,
}

impl ChordedCycleSpec {
    pub fn new(cycle_len: u64, chords: Vec<Chord>) -> Result<Self> {
        let spec = ChordedCycleSpec { cycle_len, chords };
        spec.check()?;
        Ok(spec)
    }

    /// Enforces the geometry invariants; a breach signals an invalid
    /// relaxed `t` (or a bad hand-built spec) rather than a code path bug.
    pub fn check(&self) -> Result<()> {
        let mut prev = 0u64;
        for (k, c) in self.chords.iter().enumerate() {
            if c.path_len < 2 {
                return Err(Error::InvariantBreach(format!(
                    "chord {} has path length {} < 2",
                    k + 1,
                    c.path_len
                )));
            }
            if c.attach <= prev || c.attach >= self.cycle_len {
                return Err(Error::InvariantBreach(format!(
                    "attachment {} of chord {} not strictly inside ({}, {})",
                    c.attach,
                    k + 1,
                    prev,
                    self.cycle_len
                )));
            }
            prev = c.attach;
        }
        Ok(())
    }

    /// Vertices of a materialization, hub included.
    pub fn vertex_count(&self) -> u64 {
        self.cycle_len + self.chords.iter().map(|c| c.path_len - 1).sum::<u64>()
    }

    /// Edges of a materialization.
    pub fn edge_count(&self) -> u64 {
        self.cycle_len + self.chords.iter().map(|c| c.path_len).sum::<u64>()
    }
}

/// `(odd * odd + odd) / 2` helper; the catalog guarantees evenness for odd
/// `t`, anything else is an invariant breach.
fn half(x: u64) -> Result<u64> {
    if !x.is_multiple_of(2) {
        return Err(Error::InvariantBreach(format!(
            "{x}/2 is not an integer (t must be odd)"
        )));
    }
    Ok(x / 2)
}

/// Chord geometry for the four constructed families, as exact formulas in
/// `(t, j)` resp. `(t, i)`. Errors with `NotChorded` for plain cycles and
/// the tail path.
pub fn chorded_spec(descriptor: &SubgraphDescriptor, t: u64) -> Result<ChordedCycleSpec> {
    match descriptor.kind {
        SubgraphKind::ThreeCycleOdd { j } => ChordedCycleSpec::new(
            25 * t + 2 * j,
            vec![Chord {
                path_len: half(19 * t + 2 * j + 1)?,
                attach: half(23 * t + 2 * j + 1)?,
            }],
        ),
        SubgraphKind::ThreeCycleEven { j } => ChordedCycleSpec::new(
            25 * t + 2 * j + 1,
            vec![Chord {
                path_len: 9 * t + j,
                attach: 12 * t + j,
            }],
        ),
        SubgraphKind::ThreeCycleShift { j } => ChordedCycleSpec::new(
            26 * t + 2 * j + 2,
            vec![Chord {
                path_len: half(21 * t + 2 * j + 1)?,
                attach: half(25 * t + 2 * j + 1)?,
            }],
        ),
        SubgraphKind::TenChord { i } => {
            let path_halves = [
                17 * t + 1,
                19 * t + 1,
                19 * t + 1,
                21 * t + 1,
                21 * t + 1,
                23 * t + 1,
                23 * t + 1,
                25 * t + 1,
                25 * t + 1,
                27 * t + 1,
            ];
            let attach_bases = [
                37 * t - 115,
                57 * t - 103,
                77 * t + 315,
                97 * t + 313,
                117 * t + 313,
                137 * t + 311,
                157 * t + 309,
                177 * t + 297,
                197 * t + 301,
                217 * t + 305,
            ];
            let mut chords = Vec::with_capacity(10);
            for k in 0..10 {
                chords.push(Chord {
                    path_len: half(path_halves[k])?,
                    attach: half(attach_bases[k])? + (k as u64 + 1) * i,
                });
            }
            ChordedCycleSpec::new(132 * t + 11 * i + 894, chords)
        }
        _ => Err(Error::NotChorded(descriptor.index)),
    }
}

/// Lazy ascending-index iterator over every descriptor of the catalog.
///
/// In simple mode the two degenerate indices 1 and 2 are omitted. The
/// iterator is the single source of truth consumed by the ledger, the
/// totals, and the streaming builder; it never materializes the catalog.
pub fn descriptors(params: &Params) -> impl Iterator<Item = SubgraphDescriptor> + '_ {
    let t = params.t;
    let mode = params.mode;
    let tail = params.tail_len();

    let head = std::iter::once(SubgraphDescriptor {
        index: 0,
        kind: SubgraphKind::TailPath { length: tail },
    });

    // 1..=21t-1: plain cycles; 1 and 2 exist only under strict accounting.
    let low_plain = (1..=21 * t - 1)
        .filter(move |&i| mode == Mode::Strict || i > 2)
        .map(plain);

    // [21t, 22t-1]: both parities listed. Odd offsets are ThreeCycleOdd,
    // even offsets are ThreeCycleEven except the leftover j = (t-1)/2.
    let band_a = (21 * t..=22 * t - 1).map(move |idx| {
        let off = idx - 21 * t;
        if off % 2 == 1 {
            SubgraphDescriptor {
                index: idx,
                kind: SubgraphKind::ThreeCycleOdd { j: (off - 1) / 2 },
            }
        } else if off / 2 <= (t - 3) / 2 {
            SubgraphDescriptor {
                index: idx,
                kind: SubgraphKind::ThreeCycleEven { j: off / 2 },
            }
        } else {
            plain(idx)
        }
    });

    // [22t, 23t-1]: only the ThreeCycleOdd parity continues.
    let band_b = ((t - 1) / 2..=t - 1).map(move |j| SubgraphDescriptor {
        index: 21 * t + 2 * j + 1,
        kind: SubgraphKind::ThreeCycleOdd { j },
    });

    // [23t+1, 24t] step 2: ThreeCycleShift, leftover 24t is plain.
    let band_c = (0..=(t - 1) / 2).map(move |j| {
        let idx = 23 * t + 2 * j + 1;
        if j <= (t - 3) / 2 {
            SubgraphDescriptor {
                index: idx,
                kind: SubgraphKind::ThreeCycleShift { j },
            }
        } else {
            plain(idx)
        }
    });

    let single = std::iter::once(plain(26 * t));

    // [27t, 28t+64]: the ten-chord family occupies 27t+1 ..= 28t-799, the
    // other 864 indices stay plain cycles.
    let band_d = (27 * t..=28 * t + 64).map(move |idx| {
        if idx > 27 * t && idx <= 28 * t - 799 {
            SubgraphDescriptor {
                index: idx,
                kind: SubgraphKind::TenChord {
                    i: idx - 27 * t + 57,
                },
            }
        } else {
            plain(idx)
        }
    });

    let high_plain = contiguous_ranges(t)[2..]
        .to_vec()
        .into_iter()
        .flat_map(|(lo, hi)| (lo..=hi).map(plain));

    head.chain(low_plain)
        .chain(band_a)
        .chain(band_b)
        .chain(band_c)
        .chain(single)
        .chain(band_d)
        .chain(high_plain)
}

fn plain(index: u64) -> SubgraphDescriptor {
    SubgraphDescriptor {
        index,
        kind: SubgraphKind::PlainCycle { length: index },
    }
}

/// Materialized catalog, ascending by index.
pub fn enumerate_subgraphs(params: &Params) -> Vec<SubgraphDescriptor> {
    descriptors(params).collect()
}

/// O(1) lookup of the descriptor at one index, `None` when the index is
/// not listed. Agrees with `descriptors` everywhere (tested by sweep).
pub fn descriptor_at(params: &Params, index: u64) -> Option<SubgraphDescriptor> {
    let t = params.t;
    let kind = if index == 0 {
        SubgraphKind::TailPath {
            length: params.tail_len(),
        }
    } else if index < 21 * t {
        if index <= 2 && params.mode == Mode::Simple {
            return None;
        }
        SubgraphKind::PlainCycle { length: index }
    } else if index < 23 * t {
        let off = index - 21 * t;
        if off % 2 == 1 {
            SubgraphKind::ThreeCycleOdd { j: (off - 1) / 2 }
        } else if off / 2 <= (t - 3) / 2 {
            SubgraphKind::ThreeCycleEven { j: off / 2 }
        } else if index == 22 * t - 1 {
            SubgraphKind::PlainCycle { length: index }
        } else {
            return None;
        }
    } else if index > 23 * t && index <= 24 * t {
        let off = index - 23 * t;
        if off.is_multiple_of(2) {
            return None;
        } else if (off - 1) / 2 <= (t - 3) / 2 {
            SubgraphKind::ThreeCycleShift { j: (off - 1) / 2 }
        } else {
            SubgraphKind::PlainCycle { length: index } // 24t
        }
    } else if index == 26 * t {
        SubgraphKind::PlainCycle { length: index }
    } else if (27 * t..=28 * t + 64).contains(&index) {
        if index > 27 * t && index <= 28 * t - 799 {
            SubgraphKind::TenChord {
                i: index - 27 * t + 57,
            }
        } else {
            SubgraphKind::PlainCycle { length: index }
        }
    } else if contiguous_ranges(t)[2..]
        .iter()
        .any(|&(lo, hi)| (lo..=hi).contains(&index))
    {
        SubgraphKind::PlainCycle { length: index }
    } else {
        return None;
    };
    Some(SubgraphDescriptor { index, kind })
}

/// Per-kind descriptor counts, in closed form (no iteration), so catalog
/// summaries stay O(1) even for astronomic `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KindCounts {
    pub tail_path: u64,
    pub plain_cycle: u64,
    pub three_cycle_odd: u64,
    pub three_cycle_even: u64,
    pub three_cycle_shift: u64,
    pub ten_chord: u64,
    pub total: u64,
}

pub fn kind_counts(t: u64, mode: Mode) -> KindCounts {
    let formal = if mode == Mode::Strict { 0 } else { 2 };
    let plain = 21 * t + 8792 - formal;
    let total = 24 * t + 7993 - formal;
    KindCounts {
        tail_path: 1,
        plain_cycle: plain,
        three_cycle_odd: t,
        three_cycle_even: (t - 1) / 2,
        three_cycle_shift: (t - 1) / 2,
        ten_chord: t - 799,
        total,
    }
}
