//! Deliberately simple reference implementations.
//!
//! Everything here recomputes an answer from the definition — subset
//! filters, breadth-first searches, colouring enumeration — without the
//! pruning, canonicalization, or bound machinery of the real solvers.  The
//! test suite compares solver output against these, and the command-line
//! verifier re-checks any counterexample against them before reporting it.

use crate::bitset::BitSet;
use crate::geom::{segments_cross, EdgeId, PointSet};
use crate::hypergraph::Hypergraph;
use crate::matroid::GraphSpec;

/// All `size`-element subsets of `0..universe` in lexicographic order.
fn subsets_of_size(universe: usize, size: usize) -> Vec<BitSet> {
    fn rec(universe: usize, next: usize, left: usize, current: BitSet, out: &mut Vec<BitSet>) {
        if left == 0 {
            out.push(current);
            return;
        }
        for e in next..universe {
            if universe - e < left {
                break;
            }
            rec(universe, e + 1, left - 1, current.with(e), out);
        }
    }
    let mut out = Vec::new();
    rec(universe, 0, size, BitSet::EMPTY, &mut out);
    out
}

/// Definition check: exactly `n - 1` distinct in-range edges, connected,
/// and no two edges properly crossing.
pub fn is_plane_spanning_tree(ps: &PointSet, edges: &[EdgeId]) -> bool {
    let n = ps.len();
    if edges.len() != n - 1 {
        return false;
    }
    if edges.iter().any(|e| e.b() >= n) {
        return false;
    }
    let mut sorted: Vec<EdgeId> = edges.to_vec();
    sorted.sort_by_key(|e| e.endpoints());
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if segments_cross(ps.segment(e), ps.segment(f)) {
                return false;
            }
        }
    }
    // connected with n - 1 edges = spanning tree
    let mut adjacent = vec![Vec::new(); n];
    for e in edges {
        adjacent[e.a()].push(e.b());
        adjacent[e.b()].push(e.a());
    }
    reachable_from(0, &adjacent) == n
}

fn reachable_from(start: usize, adjacent: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adjacent.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for &u in &adjacent[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    count
}

/// Every plane spanning tree, found by filtering all `C(E, n-1)` edge
/// subsets through [`is_plane_spanning_tree`].
pub fn plane_spanning_trees_by_filter(ps: &PointSet) -> Vec<BitSet> {
    subsets_of_size(ps.edge_count(), ps.len() - 1)
        .into_iter()
        .filter(|set| {
            let ids: Vec<EdgeId> = set.iter().map(|e| ps.edge_at(e)).collect();
            is_plane_spanning_tree(ps, &ids)
        })
        .collect()
}

/// All colour assignments of `1..=k` to `0..n` using every colour, one per
/// relabelling class (the first occurrence of colour `c` precedes the first
/// occurrence of `c + 1`).
fn surjective_assignments(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, k: u32, current: &mut Vec<u32>, used: u32, out: &mut Vec<Vec<u32>>) {
        if current.len() == n {
            if used == k {
                out.push(current.clone());
            }
            return;
        }
        // colours still missing must fit in the remaining positions
        let remaining = (n - current.len()) as u32;
        for colour in 1..=(used + 1).min(k) {
            let next_used = used.max(colour);
            if k - next_used <= remaining - 1 {
                current.push(colour);
                rec(n, k, current, next_used, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k >= 1 && k <= n {
        rec(n, k as u32, &mut Vec::new(), 0, &mut out);
    }
    out
}

fn assignment_leaves_no_rainbow(h: &Hypergraph, assignment: &[u32]) -> bool {
    h.hyperedges().iter().all(|edge| {
        let mut colours: Vec<u32> = edge.iter().map(|v| assignment[v]).collect();
        colours.sort_unstable();
        colours.windows(2).any(|w| w[0] == w[1])
    })
}

/// Heterochromatic number straight from the definition: one more than the
/// largest `k` admitting a surjective `k`-colouring without a rainbow
/// hyperedge.
pub fn heterochromatic_number_by_enumeration(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    for k in (1..=n).rev() {
        if surjective_assignments(n, k)
            .iter()
            .any(|a| assignment_leaves_no_rainbow(h, a))
        {
            return k + 1;
        }
    }
    unreachable!("a single colour never leaves a rainbow hyperedge in a loopless hypergraph")
}

/// Minimum double transversal by scanning subsets in size order; returns
/// the lexicographically first witness of minimum size.
pub fn min_double_transversal_by_subsets(h: &Hypergraph) -> (Vec<usize>, usize) {
    let n = h.vertex_count();
    for size in 0..=n {
        for set in subsets_of_size(n, size) {
            if h.hyperedges().iter().all(|e| e.intersection(set).len() >= 2) {
                return (set.to_vec(), size);
            }
        }
    }
    unreachable!("the full vertex set is always a double transversal")
}

fn component_count_without(g: &GraphSpec, removed: BitSet) -> usize {
    let n = g.vertex_count();
    let mut adjacent = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if !removed.contains(i) {
            adjacent[u].push(v);
            adjacent[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in &adjacent[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    components
}

/// Spanning trees of a connected graph by filtering all `(n-1)`-edge
/// subsets for connectivity.
pub fn spanning_trees_by_filter(g: &GraphSpec) -> Vec<BitSet> {
    let keep_all_but = |set: BitSet| BitSet::all_below(g.edge_count()).difference(set);
    subsets_of_size(g.edge_count(), g.vertex_count() - 1)
        .into_iter()
        .filter(|&set| component_count_without(g, keep_all_but(set)) == 1)
        .collect()
}

/// Smallest number of edges whose removal leaves at least three connected
/// components, by scanning removal subsets in size order.
pub fn gamma_by_edge_subsets(g: &GraphSpec) -> usize {
    for size in 0..=g.edge_count() {
        for removed in subsets_of_size(g.edge_count(), size) {
            if component_count_without(g, removed) >= 3 {
                return size;
            }
        }
    }
    unreachable!("removing every edge of a graph on >= 3 vertices leaves >= 3 components")
}
