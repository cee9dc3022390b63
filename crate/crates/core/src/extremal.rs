//! Exhaustive search for the maximum edge count of a small graph with
//! pairwise-distinct cycle lengths.
//!
//! The window is 3..=8 vertices. For the maximum value it suffices to scan
//! connected graphs (bridging two components adds an edge and no cycle),
//! and the cycle-space dimension caps the useful edge count: a graph with
//! `m` edges has at least `m - n + 1` simple cycles and only `n - 2`
//! lengths are available, so `m <= 2n - 3`. Levels are scanned in
//! descending edge count; the first feasible level is the answer.

use serde::Serialize;

use crate::enumerate::enumerate_cycles;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of the search for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtremalResult {
    pub n: u64,
    pub max_edges: u64,
    pub witness: Graph,
    /// Spectrum of the witness per the general enumerator, ascending.
    pub witness_spectrum: Vec<u64>,
    /// False when the budget ran out; the result is then a lower bound.
    pub exhaustive: bool,
    pub graphs_examined: u64,
}

/// All vertex pairs of an `n`-vertex graph, lexicographic.
fn edge_slots(n: usize) -> Vec<(u8, u8)> {
    let mut slots = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as u8 {
        for v in u + 1..n as u8 {
            slots.push((u, v));
        }
    }
    slots
}

fn next_combination(idx: &mut [usize], n_slots: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if idx[i] != i + n_slots - k {
            break;
        }
    }
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

fn connected(n: usize, adj: &[u8]) -> bool {
    let all = (1u16 << n) - 1;
    let mut seen = 1u16;
    loop {
        let mut next = seen;
        let mut bits = seen;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v] as u16;
        }
        if next == seen {
            return seen == all;
        }
        seen = next;
    }
}

/// Cycle-length bitmask of a bitmask graph, or `None` on the first repeated
/// length. Enumerates each cycle once: minimum vertex first, the smaller
/// of the two second vertices fixes the orientation.
pub(crate) fn distinct_length_mask(n: usize, adj: &[u8]) -> Option<u16> {
    fn dfs(
        s: usize,
        cur: usize,
        second: usize,
        visited: u8,
        depth: u16,
        adj: &[u8],
        mask: &mut u16,
    ) -> bool {
        let mut nbrs = adj[cur];
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if w == s {
                if depth >= 3 && second < cur {
                    let bit = 1u16 << depth;
                    if *mask & bit != 0 {
                        return false;
                    }
                    *mask |= bit;
                }
            } else if w > s && visited & (1 << w) == 0 {
                let second = if depth == 1 { w } else { second };
                if !dfs(s, w, second, visited | (1 << w), depth + 1, adj, mask) {
                    return false;
                }
            }
        }
        true
    }

    let mut mask = 0u16;
    for s in 0..n {
        if !dfs(s, s, usize::MAX, 1 << s, 1, adj, &mut mask) {
            return None;
        }
    }
    Some(mask)
}

/// A guaranteed witness with `n` edges: a triangle with a pendant path.
fn fallback_witness(n: u64) -> Graph {
    let mut edges = vec![(0u32, 1u32), (1, 2), (0, 2)];
    for v in 3..n as u32 {
        edges.push((v - 1, v));
    }
    Graph::new(n as usize, edges).expect("fallback witness is simple")
}

/// Exhaustive search over connected labeled graphs, edge count descending.
///
/// `budget` is the number of candidate graphs examined before the search
/// gives up; when exceeded, the result is the trivial lower bound with
/// `exhaustive = false`.
pub fn max_edges_distinct_cycles(n: u64, budget: u64) -> Result<ExtremalResult> {
    if !(3..=8).contains(&n) {
        return Err(Error::OutOfRange(n));
    }
    let nv = n as usize;
    let slots = edge_slots(nv);
    let upper = slots.len().min(2 * nv - 3);
    let mut examined: u64 = 0;

    for m in (3..=upper).rev() {
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            if examined >= budget {
                let witness = fallback_witness(n);
                let spectrum = enumerate_cycles(&witness, 1 << 20);
                return Ok(ExtremalResult {
                    n,
                    max_edges: n,
                    witness_spectrum: spectrum.lengths,
                    witness,
                    exhaustive: false,
                    graphs_examined: examined,
                });
            }
            examined += 1;

            let mut adj = [0u8; 8];
            for &i in idx.iter() {
                let (u, v) = slots[i];
                adj[u as usize] |= 1 << v;
                adj[v as usize] |= 1 << u;
            }
            if connected(nv, &adj) && distinct_length_mask(nv, &adj).is_some() {
                let edges: Vec<(u32, u32)> = idx
                    .iter()
                    .map(|&i| (slots[i].0 as u32, slots[i].1 as u32))
                    .collect();
                let witness = Graph::new(nv, edges)?;
                let spectrum = enumerate_cycles(&witness, 1 << 20);
                debug_assert!(!spectrum.truncated);
                return Ok(ExtremalResult {
                    n,
                    max_edges: m as u64,
                    witness_spectrum: spectrum.lengths,
                    witness,
                    exhaustive: true,
                    graphs_examined: examined,
                });
            }
            if !next_combination(&mut idx, slots.len()) {
                break;
            }
        }
    }
    // unreachable for n >= 3: a triangle plus pendant path always works
    let witness = fallback_witness(n);
    let spectrum = enumerate_cycles(&witness, 1 << 20);
    Ok(ExtremalResult {
        n,
        max_edges: n,
        witness_spectrum: spectrum.lengths,
        witness,
        exhaustive: true,
        graphs_examined: examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_is_triangle() {
        let r = max_edges_distinct_cycles(3, u64::MAX).unwrap();
        assert_eq!(r.max_edges, 3);
        assert!(r.exhaustive);
        assert_eq!(r.witness_spectrum, vec![3]);
    }

    #[test]
    fn f4_is_four() {
        let r = max_edges_distinct_cycles(4, u64::MAX).unwrap();
        assert_eq!(r.max_edges, 4);
        assert!(r.exhaustive);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            max_edges_distinct_cycles(2, 100),
            Err(Error::OutOfRange(2))
        ));
        assert!(matches!(
            max_edges_distinct_cycles(9, 100),
            Err(Error::OutOfRange(9))
        ));
    }

    #[test]
    fn budget_exhaustion_returns_lower_bound() {
        let r = max_edges_distinct_cycles(6, 5).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.max_edges, 6);
        assert_eq!(r.witness_spectrum, vec![3]);
        assert_eq!(r.witness.vertex_count(), 6);
    }

    #[test]
    fn distinct_mask_agrees_with_enumerator_on_fixtures() {
        // K4: duplicates
        let mut adj = [0u8; 8];
        for (u, v) in [(0u8, 1u8), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        assert_eq!(distinct_length_mask(4, &adj), None);

        // theta(1,2,3): lengths 3,4,5
        let mut adj = [0u8; 8];
        for (u, v) in [(0u8, 1u8), (0, 2), (1, 2), (1, 4), (3, 4), (0, 3)] {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        assert_eq!(distinct_length_mask(5, &adj), Some(0b111000));
    }

    #[test]
    fn witness_spectra_have_no_repeats() {
        for n in 3..=6 {
            let r = max_edges_distinct_cycles(n, u64::MAX).unwrap();
            let mut lens = r.witness_spectrum.clone();
            lens.dedup();
            assert_eq!(lens.len(), r.witness_spectrum.len(), "n={n}");
            assert_eq!(r.witness.vertex_count() as u64, n);
            assert_eq!(r.witness.edge_count() as u64, r.max_edges);
        }
    }

    #[test]
    fn values_nondecreasing_and_at_least_n() {
        let mut prev = 0;
        for n in 3..=6 {
            let r = max_edges_distinct_cycles(n, u64::MAX).unwrap();
            assert!(r.exhaustive);
            assert!(r.max_edges >= prev, "f({n}) dropped");
            assert!(r.max_edges >= n, "f({n}) below the cycle-plus-tree floor");
            prev = r.max_edges;
        }
    }
}
