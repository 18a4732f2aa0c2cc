//! Generic hypergraph solvers.
//!
//! A [`Hypergraph`] here is a finite list of hyperedges over vertices
//! `0..nu`, each hyperedge with at least two vertices.  Two exact solvers
//! live in this module:
//!
//! * [`min_double_transversal`] — the smallest vertex set meeting every
//!   hyperedge in at least two vertices, by branch and bound;
//! * [`heterochromatic_number_exact`] — the smallest number of colours that
//!   forces a rainbow (all colours distinct) hyperedge under every
//!   surjective colouring, by a memoised search over vertex partitions.
//!
//! The bridge between the two is [`lower_bound_colouring`]: colouring a
//! double transversal monochromatically and everything else with fresh
//! colours is rainbow-free, which shows the heterochromatic number always
//! exceeds `nu - tau + 1`.


use std::collections::HashSet;

use crate::bitset::{BitSet, MAX_UNIVERSE};

/// Default cap on `nu` for the exact heterochromatic number search, which
/// explores vertex partitions.
pub const DEFAULT_HC_CAP: usize = 12;

/// Default cap on `nu` for minimum double transversals; past this the
/// branch and bound can still run but is no longer guaranteed quick.
pub const DEFAULT_TAU_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypergraphError {
    #[error("hypergraph must have at least one hyperedge")]
    NoHyperedges,
    #[error("hyperedge {0} has fewer than 2 vertices")]
    HyperedgeTooSmall(usize),
    #[error("hyperedge {edge} mentions vertex {vertex}, outside 0..{nu}")]
    VertexOutOfRange { edge: usize, vertex: usize, nu: usize },
    #[error("vertex count {0} exceeds the supported maximum of {MAX_UNIVERSE}")]
    TooManyVertices(usize),
    #[error("instance size {size} exceeds cap {cap}; raise the cap to force the computation")]
    TooLarge { size: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColouringError {
    #[error("colouring must cover at least one vertex")]
    Empty,
    #[error("colour {0} at position {1} is not a positive colour id")]
    NonPositiveColour(u32, usize),
    #[error("colours are not surjective: colour {missing} unused although {max} appears")]
    NotSurjective { missing: u32, max: u32 },
}

/// A surjective assignment of colours `1..=k` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    assignment: Vec<u32>,
    k: u32,
}

impl Colouring {
    /// Validates that every colour in `1..=max` is used.
    pub fn new(assignment: Vec<u32>) -> Result<Colouring, ColouringError> {
        if assignment.is_empty() {
            return Err(ColouringError::Empty);
        }
        let mut max = 0;
        for (i, &c) in assignment.iter().enumerate() {
            if c == 0 {
                return Err(ColouringError::NonPositiveColour(c, i));
            }
            max = max.max(c);
        }
        let mut seen = vec![false; max as usize + 1];
        for &c in &assignment {
            seen[c as usize] = true;
        }
        if let Some(missing) = (1..=max).find(|&c| !seen[c as usize]) {
            return Err(ColouringError::NotSurjective { missing, max });
        }
        Ok(Colouring { assignment, k: max })
    }

    /// Number of vertices coloured.
    pub fn domain_size(&self) -> usize {
        self.assignment.len()
    }

    /// Number of colours, `k`.
    pub fn colour_count(&self) -> usize {
        self.k as usize
    }

    pub fn colour_of(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// True iff the members of `set` have pairwise distinct colours.
    pub fn all_distinct(&self, set: BitSet) -> bool {
        let mut used = BitSet::EMPTY;
        for v in set.iter() {
            let c = self.assignment[v] as usize - 1;
            if used.contains(c) {
                return false;
            }
            used.insert(c);
        }
        true
    }

    /// Smallest member of each colour class, ascending by colour.
    ///
    /// The result is heterochromatic by construction and has exactly one
    /// member per colour; it is the canonical transversal of the colour
    /// classes used by the rainbow constructions.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut rep = vec![usize::MAX; self.k as usize];
        for (v, &c) in self.assignment.iter().enumerate() {
            let slot = &mut rep[c as usize - 1];
            if *slot == usize::MAX {
                *slot = v;
            }
        }
        rep
    }
}

/// Vertices `0..nu` with a duplicate-free list of hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    nu: usize,
    edges: Vec<BitSet>,
}

impl Hypergraph {
    /// Validates ranges and sizes; duplicate hyperedges are dropped,
    /// keeping the first occurrence.
    pub fn new(nu: usize, edges: Vec<BitSet>) -> Result<Hypergraph, HypergraphError> {
        if nu > MAX_UNIVERSE {
            return Err(HypergraphError::TooManyVertices(nu));
        }
        if edges.is_empty() {
            return Err(HypergraphError::NoHyperedges);
        }
        let universe = BitSet::all_below(nu);
        for (i, &e) in edges.iter().enumerate() {
            if e.len() < 2 {
                return Err(HypergraphError::HyperedgeTooSmall(i));
            }
            if !e.is_subset_of(universe) {
                let vertex = e.difference(universe).min().unwrap();
                return Err(HypergraphError::VertexOutOfRange { edge: i, vertex, nu });
            }
        }
        let mut seen = HashSet::new();
        let edges = edges.into_iter().filter(|e| seen.insert(*e)).collect();
        Ok(Hypergraph { nu, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.nu
    }

    pub fn hyperedges(&self) -> &[BitSet] {
        &self.edges
    }

    /// Hyperedges that are not strict supersets of another hyperedge.
    ///
    /// Safe reduction for both solvers: a vertex pair inside a hyperedge is
    /// also inside every superset, so constraints on supersets are implied.
    /// Rainbow *detection* must not use this view, because it reports the
    /// position of the witness in the full list.
    fn minimal_edges(&self) -> Vec<BitSet> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| {
                !self
                    .edges
                    .iter()
                    .any(|&f| f != e && f.is_subset_of(e))
            })
            .collect()
    }
}

/// Position of the first hyperedge whose vertices have pairwise distinct
/// colours, if any.
///
/// `c` must colour exactly the vertex range of `h`.
pub fn has_rainbow_hyperedge(h: &Hypergraph, c: &Colouring) -> Option<usize> {
    assert_eq!(
        c.domain_size(),
        h.vertex_count(),
        "colouring domain must match the hypergraph vertex count"
    );
    h.edges.iter().position(|&e| c.all_distinct(e))
}

/// A set of vertices meeting every hyperedge at least twice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleTransversal {
    vertices: BitSet,
}

impl DoubleTransversal {
    /// Wraps `vertices`, checking that it meets every hyperedge of `h` at
    /// least twice.  Returns `None` otherwise.
    pub fn new(h: &Hypergraph, vertices: BitSet) -> Option<DoubleTransversal> {
        is_double_transversal(h, vertices).then_some(DoubleTransversal { vertices })
    }

    pub fn vertices(&self) -> BitSet {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// True iff every hyperedge of `h` contains at least two members of `set`.
pub fn is_double_transversal(h: &Hypergraph, set: BitSet) -> bool {
    h.edges.iter().all(|&e| e.intersection(set).len() >= 2)
}

/// Minimum double transversal, with its size, by branch and bound.
///
/// Deterministic: branches explore vertices in increasing order, so ties
/// resolve to the solution found first along that fixed order.
pub fn min_double_transversal(h: &Hypergraph) -> (DoubleTransversal, usize) {
    let (t, size, _) = tau_search(h, u64::MAX);
    (t.expect("unbounded search always completes"), size)
}

/// Budgeted variant: gives up after visiting `node_budget` search nodes and
/// returns `None` so callers can report an inconclusive probe.
pub fn min_double_transversal_budgeted(
    h: &Hypergraph,
    node_budget: u64,
) -> Option<(DoubleTransversal, usize)> {
    let (t, size, exhausted) = tau_search(h, node_budget);
    if exhausted {
        None
    } else {
        t.map(|t| (t, size))
    }
}

struct TauSearch {
    edges: Vec<BitSet>,
    best: BitSet,
    best_size: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

fn tau_search(h: &Hypergraph, budget: u64) -> (Option<DoubleTransversal>, usize, bool) {
    let edges = h.minimal_edges();
    let greedy = greedy_double_transversal(&edges, h.nu);
    let mut s = TauSearch {
        edges,
        best_size: greedy.len(),
        best: greedy,
        nodes: 0,
        budget,
        exhausted: false,
    };
    tau_branch(&mut s, BitSet::EMPTY, BitSet::EMPTY);
    let t = DoubleTransversal { vertices: s.best };
    (Some(t), s.best_size, s.exhausted)
}

/// Greedy upper bound: repeatedly take the vertex covering the most
/// remaining deficiency, lowest index on ties.
fn greedy_double_transversal(edges: &[BitSet], nu: usize) -> BitSet {
    let mut chosen = BitSet::EMPTY;
    loop {
        let deficient: Vec<BitSet> = edges
            .iter()
            .copied()
            .filter(|&e| e.intersection(chosen).len() < 2)
            .collect();
        if deficient.is_empty() {
            return chosen;
        }
        let pick = (0..nu)
            .filter(|&v| !chosen.contains(v))
            .max_by_key(|&v| {
                let gain = deficient.iter().filter(|e| e.contains(v)).count();
                (gain, std::cmp::Reverse(v))
            })
            .expect("a deficient hyperedge always has an unchosen vertex");
        chosen.insert(pick);
    }
}

fn tau_branch(s: &mut TauSearch, included: BitSet, excluded: BitSet) {
    if s.exhausted {
        return;
    }
    s.nodes += 1;
    if s.nodes > s.budget {
        s.exhausted = true;
        return;
    }
    // most-deficient unsatisfied hyperedge first, lowest index on ties
    let mut pick: Option<(usize, BitSet)> = None;
    let mut pick_deficiency = 0;
    for &e in &s.edges {
        let have = e.intersection(included).len();
        if have >= 2 {
            continue;
        }
        let deficiency = 2 - have;
        if deficiency > pick_deficiency {
            pick_deficiency = deficiency;
            pick = Some((have, e));
            if deficiency == 2 {
                break;
            }
        }
    }
    let Some((_, edge)) = pick else {
        if included.len() < s.best_size {
            s.best_size = included.len();
            s.best = included;
        }
        return;
    };
    if included.len() + tau_lower_bound(&s.edges, included, excluded) >= s.best_size {
        return;
    }
    let undecided = edge.difference(included).difference(excluded);
    let mut branch_excluded = excluded;
    for v in undecided.iter() {
        tau_branch(s, included.with(v), branch_excluded);
        branch_excluded.insert(v);
    }
}

/// Admissible completion bound: unsatisfied hyperedges with pairwise
/// disjoint undecided vertex sets need that many vertices each.
fn tau_lower_bound(edges: &[BitSet], included: BitSet, excluded: BitSet) -> usize {
    let mut taken = BitSet::EMPTY;
    let mut bound = 0;
    for &e in edges {
        let have = e.intersection(included).len();
        if have >= 2 {
            continue;
        }
        let undecided = e.difference(included).difference(excluded);
        let need = 2 - have;
        if undecided.len() < need {
            // this hyperedge can no longer be satisfied on this branch
            return usize::MAX / 2;
        }
        if !undecided.intersects(taken) {
            taken = taken.union(undecided);
            bound += need;
        }
    }
    bound
}

/// The rainbow-free certificate built from a double transversal: colour 1
/// on `t`, fresh colours everywhere else.  Uses exactly `nu - |t| + 1`
/// colours and admits no rainbow hyperedge because every hyperedge meets
/// `t`, hence colour 1, twice.
pub fn lower_bound_colouring(h: &Hypergraph, t: &DoubleTransversal) -> Colouring {
    assert!(
        is_double_transversal(h, t.vertices),
        "lower_bound_colouring requires a valid double transversal"
    );
    let mut next = 2;
    let assignment = (0..h.nu)
        .map(|v| {
            if t.vertices.contains(v) {
                1
            } else {
                let c = next;
                next += 1;
                c
            }
        })
        .collect();
    Colouring::new(assignment).expect("constructed colouring is surjective")
}

/// Exact heterochromatic number: the smallest `k` such that *every*
/// surjective `k`-colouring of the vertices leaves some hyperedge rainbow.
///
/// Colour names never matter, so the search runs over vertex partitions:
/// a colouring is rainbow-free iff every hyperedge has two vertices in one
/// class, and the answer is one more than the largest class count among
/// rainbow-free partitions.  The search merges a vertex pair inside some
/// unsatisfied hyperedge at each step, memoising partitions in canonical
/// (restricted growth) form.
pub fn heterochromatic_number_exact(
    h: &Hypergraph,
    cap: usize,
) -> Result<usize, HypergraphError> {
    if h.nu > cap {
        return Err(HypergraphError::TooLarge { size: h.nu, cap });
    }
    let edges = h.minimal_edges();
    let mut s = HcSearch {
        greedy_merges: 0,
        best_merges: 0,
        visited: HashSet::new(),
    };
    s.greedy_merges = greedy_rainbow_free_merges(&edges, h.nu);
    s.best_merges = s.greedy_merges;
    let classes: Vec<u32> = (0..h.nu as u32).collect();
    hc_branch(&mut s, &edges, classes, 0);
    Ok(h.nu - s.best_merges + 1)
}

struct HcSearch {
    greedy_merges: usize,
    best_merges: usize,
    visited: HashSet<Vec<u32>>,
}

/// Greedy incumbent: repeatedly merge the vertex pair lying in the most
/// still-unsatisfied hyperedges (lexicographically first on ties).
fn greedy_rainbow_free_merges(edges: &[BitSet], nu: usize) -> usize {
    let mut classes: Vec<u32> = (0..nu as u32).collect();
    let mut merges = 0;
    loop {
        let open: Vec<BitSet> = edges
            .iter()
            .copied()
            .filter(|&e| !has_mono_pair(&classes, e))
            .collect();
        if open.is_empty() {
            return merges;
        }
        let mut best: Option<(usize, usize, usize)> = None; // (count, u, v)
        for &e in &open {
            let members = e.to_vec();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if classes[u] == classes[v] {
                        continue;
                    }
                    let count = open
                        .iter()
                        .filter(|f| f.contains(u) && f.contains(v))
                        .count();
                    let better = match best {
                        None => true,
                        Some((c, bu, bv)) => count > c || (count == c && (u, v) < (bu, bv)),
                    };
                    if better {
                        best = Some((count, u, v));
                    }
                }
            }
        }
        let (_, u, v) = best.expect("an unsatisfied hyperedge has an unmerged pair");
        merge_classes(&mut classes, u, v);
        merges += 1;
    }
}

fn has_mono_pair(classes: &[u32], e: BitSet) -> bool {
    let mut seen = BitSet::EMPTY;
    for v in e.iter() {
        let c = classes[v] as usize;
        if seen.contains(c) {
            return true;
        }
        seen.insert(c);
    }
    false
}

fn merge_classes(classes: &mut [u32], u: usize, v: usize) {
    let (from, to) = (classes[u].max(classes[v]), classes[u].min(classes[v]));
    for c in classes.iter_mut() {
        if *c == from {
            *c = to;
        }
    }
}

/// Canonical restricted-growth relabelling: classes numbered by first
/// appearance.
fn canonical_partition(classes: &[u32]) -> Vec<u32> {
    let mut map = vec![u32::MAX; classes.len()];
    let mut next = 0;
    classes
        .iter()
        .map(|&c| {
            if map[c as usize] == u32::MAX {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect()
}

fn hc_branch(s: &mut HcSearch, edges: &[BitSet], classes: Vec<u32>, merges: usize) {
    let canon = canonical_partition(&classes);
    if !s.visited.insert(canon.clone()) {
        return;
    }
    // smallest open hyperedge first: fewest merge candidates
    let open = edges
        .iter()
        .copied()
        .filter(|&e| !has_mono_pair(&canon, e))
        .min_by_key(|e| e.len());
    let Some(edge) = open else {
        if merges < s.best_merges {
            s.best_merges = merges;
        }
        return;
    };
    if merges + hc_lower_bound(edges, &canon) >= s.best_merges {
        return;
    }
    let members = edge.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let mut next = canon.clone();
            merge_classes(&mut next, u, v);
            hc_branch(s, edges, next, merges + 1);
        }
    }
}

/// Admissible bound: open hyperedges whose class sets are pairwise disjoint
/// each need at least one dedicated merge.
fn hc_lower_bound(edges: &[BitSet], classes: &[u32]) -> usize {
    let mut taken = BitSet::EMPTY;
    let mut bound = 0;
    for &e in edges {
        if has_mono_pair(classes, e) {
            continue;
        }
        let class_set: BitSet = e.iter().map(|v| classes[v] as usize).collect();
        if !class_set.intersects(taken) {
            taken = taken.union(class_set);
            bound += 1;
        }
    }
    bound
}

/// All surjective colourings of `n` vertices with exactly `k` colours, one
/// per set partition, in restricted-growth order.  Colour ids are the class
/// labels shifted to `1..=k`.
pub fn canonical_colourings(n: usize, k: usize) -> Vec<Colouring> {
    let mut out = Vec::new();
    let mut rgs = vec![0u32; n];
    fn rec(rgs: &mut Vec<u32>, pos: usize, max_used: u32, k: u32, out: &mut Vec<Colouring>) {
        if pos == rgs.len() {
            if max_used + 1 == k {
                let assignment = rgs.iter().map(|&c| c + 1).collect();
                out.push(Colouring::new(assignment).expect("restricted growth strings are surjective"));
            }
            return;
        }
        let remaining = (rgs.len() - pos) as u32;
        for c in 0..=(max_used + 1).min(k - 1) {
            // prune branches that can no longer reach k classes
            let reach = (max_used + 1).max(c + 1) + remaining - 1;
            if reach < k {
                continue;
            }
            rgs[pos] = c;
            rec(rgs, pos + 1, max_used.max(c), k, out);
        }
    }
    if k == 0 || k > n {
        return out;
    }
    rgs[0] = 0;
    rec(&mut rgs, 1, 0, k as u32, &mut out);
    out
}
