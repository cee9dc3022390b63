//! Test-side oracles, kept independent of the library's enumeration path.

use dcl_core::Graph;

/// Exhaustive subset-based cycle enumeration for tiny graphs.
///
/// For every vertex subset, counts the Hamiltonian cycles of the induced
/// subgraph by DFS path extension from the subset's minimum vertex (one
/// orientation kept: second vertex < last vertex). Exponential and
/// obviously correct; usable up to ~12 vertices.
pub fn naive_cycle_lengths(graph: &Graph) -> Vec<u64> {
    let n = graph.vertex_count();
    assert!(n <= 16, "naive oracle is for tiny graphs");
    let mut adj = vec![0u16; n];
    for &(u, v) in graph.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let mut lengths = Vec::new();
    for subset in 1u32..(1u32 << n) {
        let k = subset.count_ones() as usize;
        if k < 3 {
            continue;
        }
        let start = subset.trailing_zeros() as usize;
        let mut count = 0u64;
        ham_dfs(
            start,
            start,
            1u16 << start,
            subset as u16,
            1,
            k,
            usize::MAX,
            &adj,
            &mut count,
        );
        for _ in 0..count {
            lengths.push(k as u64);
        }
    }
    lengths.sort_unstable();
    lengths
}

#[allow(clippy::too_many_arguments)]
fn ham_dfs(
    start: usize,
    cur: usize,
    visited: u16,
    subset: u16,
    depth: usize,
    k: usize,
    second: usize,
    adj: &[u16],
    count: &mut u64,
) {
    if depth == k {
        if adj[cur] & (1 << start) != 0 && second < cur {
            *count += 1;
        }
        return;
    }
    let mut nbrs = adj[cur] & subset & !visited;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let second = if depth == 1 { w } else { second };
        ham_dfs(
            start,
            w,
            visited | (1 << w),
            subset,
            depth + 1,
            k,
            second,
            adj,
            count,
        );
    }
}

/// True when the tiny graph has pairwise distinct cycle lengths, by the
/// naive oracle.
#[allow(dead_code)] // each test target compiles its own copy
pub fn naive_distinct(graph: &Graph) -> bool {
    let lens = naive_cycle_lengths(graph);
    lens.windows(2).all(|w| w[0] != w[1])
}
