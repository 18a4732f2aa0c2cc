//! Plane spanning trees of the complete geometric graph on a point set.
//!
//! A plane spanning tree uses straight-line edges between the points, spans
//! all of them, and has no two edges properly crossing.  This module
//! enumerates them, classifies them (star / caterpillar / geometric
//! caterpillar), searches for them inside restricted edge sets, builds the
//! two double-transversal constructions (hull edges for convex position,
//! hull edges plus a widest-angle pair at the unique interior point), and
//! runs the constructive rainbow-tree algorithms: given a colouring with
//! enough colours, produce a spanning tree whose edge colours are pairwise
//! distinct.
//!
//! Edges are referred to by their index in the lexicographic order of
//! [`EdgeId`] pairs over the point set, and edge sets live in a [`BitSet`]
//! over those indices.

use std::cmp::Ordering;

use crate::bitset::BitSet;
use crate::dsu::Dsu;
use crate::geom::{angle_compare, orientation_det, segments_cross, EdgeId, Point, PointSet};
use crate::hypergraph::{min_double_transversal_budgeted, Colouring, Hypergraph};

/// Default cap on point count for full tree enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("{n} points exceed the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("edge index {0} is out of range for this point set")]
    EdgeOutOfRange(usize),
    #[error("a spanning tree here needs {expected} edges, got {got}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("edge set is not a spanning tree (cycle or uncovered point)")]
    NotSpanningTree,
    #[error("edges {0} and {1} cross")]
    CrossingEdges(EdgeId, EdgeId),
    #[error("expected a point set in convex position, found {0} interior points")]
    NotConvexPosition(usize),
    #[error("expected exactly one interior point, found {0}")]
    WrongInteriorCount(usize),
    #[error("colouring uses {got} colours where {expected} are required")]
    WrongColourCount { expected: usize, got: usize },
    #[error("colouring covers {got} vertices but the point set has {expected} edges")]
    ColouringSizeMismatch { expected: usize, got: usize },
}

/// A spanning tree of the complete geometric graph with no crossing edges.
///
/// Stores the edge indices only; operations take the owning [`PointSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlaneTree {
    edges: BitSet,
}

impl PlaneTree {
    /// Validates `edges` as a plane spanning tree of `ps`.
    pub fn new(ps: &PointSet, edges: BitSet) -> Result<PlaneTree, TreeError> {
        let n = ps.len();
        if let Some(bad) = edges.iter().find(|&e| e >= ps.edge_count()) {
            return Err(TreeError::EdgeOutOfRange(bad));
        }
        if edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                expected: n - 1,
                got: edges.len(),
            });
        }
        let ids: Vec<EdgeId> = edges.iter().map(|e| ps.edge_at(e)).collect();
        for (i, &e) in ids.iter().enumerate() {
            for &f in &ids[i + 1..] {
                if segments_cross(ps.segment(e), ps.segment(f)) {
                    return Err(TreeError::CrossingEdges(e, f));
                }
            }
        }
        let mut dsu = Dsu::new(n);
        for &e in &ids {
            if !dsu.union(e.a(), e.b()) {
                return Err(TreeError::NotSpanningTree);
            }
        }
        // n - 1 acyclic edges necessarily connect all n points
        debug_assert_eq!(dsu.components(), 1);
        Ok(PlaneTree { edges })
    }

    pub fn edges(&self) -> BitSet {
        self.edges
    }

    pub fn contains(&self, edge_index: usize) -> bool {
        self.edges.contains(edge_index)
    }

    /// The tree's edges as endpoint pairs.
    pub fn edge_ids(&self, ps: &PointSet) -> Vec<EdgeId> {
        self.edges.iter().map(|e| ps.edge_at(e)).collect()
    }
}

/// How many tree edges touch each point.
fn vertex_degrees(ps: &PointSet, edges: BitSet) -> Vec<usize> {
    let mut deg = vec![0usize; ps.len()];
    for e in edges.iter() {
        let id = ps.edge_at(e);
        deg[id.a()] += 1;
        deg[id.b()] += 1;
    }
    deg
}

/// Backtracking search shared by enumeration and restricted search.
///
/// Branches on edge indices in increasing order, inclusion before exclusion,
/// so complete trees appear in lexicographic order of their sorted edge
/// index sequences.
struct TreeSearch<'a> {
    ps: &'a PointSet,
    /// Per edge index, the set of edge indices it properly crosses.
    crossings: Vec<BitSet>,
    allowed: BitSet,
    target: usize,
    collect_all: bool,
    out: Vec<PlaneTree>,
}

impl<'a> TreeSearch<'a> {
    fn new(ps: &'a PointSet, allowed: BitSet, collect_all: bool) -> TreeSearch<'a> {
        let ids: Vec<EdgeId> = ps.edges().collect();
        let mut crossings = vec![BitSet::EMPTY; ids.len()];
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if segments_cross(ps.segment(ids[i]), ps.segment(ids[j])) {
                    crossings[i].insert(j);
                    crossings[j].insert(i);
                }
            }
        }
        TreeSearch {
            ps,
            crossings,
            allowed,
            target: ps.len() - 1,
            collect_all,
            out: Vec::new(),
        }
    }

    fn run(&mut self) {
        let dsu = Dsu::new(self.ps.len());
        self.extend(BitSet::EMPTY, BitSet::EMPTY, 0, dsu);
    }

    /// `banned` holds edges that cross something already chosen.  Returns
    /// true when a first witness has been found and the search should stop.
    fn extend(&mut self, chosen: BitSet, banned: BitSet, next: usize, dsu: Dsu) -> bool {
        if chosen.len() == self.target {
            self.out.push(PlaneTree { edges: chosen });
            return !self.collect_all;
        }
        // feasibility: the undecided candidates must be able to connect
        // everything that is still split, and must be numerous enough
        let mut probe = dsu.clone();
        let mut available = 0;
        for e in next..self.ps.edge_count() {
            if self.allowed.contains(e) && !banned.contains(e) {
                available += 1;
                let id = self.ps.edge_at(e);
                probe.union(id.a(), id.b());
            }
        }
        if available < self.target - chosen.len() || probe.components() > 1 {
            return false;
        }
        if self.allowed.contains(next) && !banned.contains(next) {
            let id = self.ps.edge_at(next);
            let mut with_edge = dsu.clone();
            if with_edge.union(id.a(), id.b()) {
                let wider_ban = banned.union(self.crossings[next]);
                if self.extend(chosen.with(next), wider_ban, next + 1, with_edge) {
                    return true;
                }
            }
        }
        self.extend(chosen, banned, next + 1, dsu)
    }
}

/// All plane spanning trees of the complete geometric graph on `ps`, in
/// lexicographic order of their edge index sequences.
pub fn enumerate_plane_spanning_trees(
    ps: &PointSet,
    cap: usize,
) -> Result<Vec<PlaneTree>, TreeError> {
    if ps.len() > cap {
        return Err(TreeError::TooLarge { n: ps.len(), cap });
    }
    let mut search = TreeSearch::new(ps, BitSet::all_below(ps.edge_count()), true);
    search.run();
    Ok(search.out)
}

/// First plane spanning tree (in the fixed backtracking order) using only
/// `allowed` edges, or `None` when no such tree exists.
pub fn find_plane_tree_within(ps: &PointSet, allowed: BitSet) -> Option<PlaneTree> {
    let mut search = TreeSearch::new(ps, allowed, false);
    search.run();
    search.out.pop()
}

/// Plane spanning tree avoiding every edge of `t`, if one exists.
///
/// `None` occurs exactly when `t` is a star or a geometric caterpillar;
/// that equivalence is what the classification tests pin down.
pub fn complement_plane_tree(t: &PlaneTree, ps: &PointSet) -> Option<PlaneTree> {
    let allowed = BitSet::all_below(ps.edge_count()).difference(t.edges());
    find_plane_tree_within(ps, allowed)
}

/// Shape summary of a plane spanning tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeClass {
    pub is_star: bool,
    pub is_caterpillar: bool,
    pub is_geometric_caterpillar: bool,
}

/// Classifies `t` as star / caterpillar / geometric caterpillar.
///
/// The body of a caterpillar is what remains after deleting the leaves: it
/// must be a path (possibly a single vertex).  A geometric caterpillar
/// additionally keeps its whole body on the hull boundary and extends each
/// leg's supporting line without hitting the tree anywhere outside that
/// leg.
pub fn classify_tree(t: &PlaneTree, ps: &PointSet) -> TreeClass {
    let n = ps.len();
    let deg = vertex_degrees(ps, t.edges());
    let ids = t.edge_ids(ps);
    let is_star = deg.iter().any(|&d| d == n - 1);

    // body = vertices of degree >= 2; it is always a subtree, and a path
    // exactly when nobody has three body neighbours
    let mut is_caterpillar = true;
    for v in 0..n {
        if deg[v] < 2 {
            continue;
        }
        let body_neighbours = ids
            .iter()
            .filter(|id| id.touches(v))
            .map(|id| if id.a() == v { id.b() } else { id.a() })
            .filter(|&u| deg[u] >= 2)
            .count();
        if body_neighbours > 2 {
            is_caterpillar = false;
            break;
        }
    }

    let is_geometric_caterpillar = is_caterpillar && {
        let on_hull = |v: usize| ps.hull().contains(&v);
        let body_on_hull = (0..n).filter(|&v| deg[v] >= 2).all(on_hull)
            && ids
                .iter()
                .filter(|id| deg[id.a()] >= 2 && deg[id.b()] >= 2)
                .all(|&id| ps.is_hull_edge(id));
        body_on_hull && legs_have_clear_lines(ps, &ids, &deg)
    };

    TreeClass {
        is_star,
        is_caterpillar,
        is_geometric_caterpillar,
    }
}

/// True when, for every leg (edge with a leaf endpoint), the full line
/// through the leg meets every other tree edge only inside the leg itself.
fn legs_have_clear_lines(ps: &PointSet, ids: &[EdgeId], deg: &[usize]) -> bool {
    for &leg in ids {
        if deg[leg.a()] >= 2 && deg[leg.b()] >= 2 {
            continue; // body edge, not a leg
        }
        let (a, b) = ps.segment(leg);
        for &other in ids {
            if other == leg {
                continue;
            }
            let (p, q) = ps.segment(other);
            if line_meets_segment_outside(a, b, p, q) {
                return false;
            }
        }
    }
    true
}

/// Does the line through `a`, `b` meet the segment `pq` at a point outside
/// the closed segment `ab`?
///
/// Relies on general position: an endpoint of `pq` lying on the line must
/// be `a` or `b` itself, so grazes at shared endpoints never count as
/// violations.
fn line_meets_segment_outside(a: Point, b: Point, p: Point, q: Point) -> bool {
    let sp = orientation_det(a, b, p).signum();
    let sq = orientation_det(a, b, q).signum();
    if sp == 0 || sq == 0 || sp == sq {
        return false;
    }
    // pq crosses the line at the point a + t(b - a); solve for t by taking
    // cross products with q - p, and compare t to [0, 1] in integers
    let cross = |ux: i64, uy: i64, vx: i64, vy: i64| ux * vy - uy * vx;
    let mut den = cross(b.x - a.x, b.y - a.y, q.x - p.x, q.y - p.y);
    let mut num = cross(p.x - a.x, p.y - a.y, q.x - p.x, q.y - p.y);
    debug_assert_ne!(den, 0, "a crossing segment cannot be parallel to the line");
    if den < 0 {
        den = -den;
        num = -num;
    }
    num < 0 || num > den
}

/// Which double-transversal construction produced a [`TransversalQ`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransversalKind {
    HullOnly,
    HullPlusInterior,
}

/// An edge set guaranteed to meet every plane spanning tree at least twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalQ {
    edges: BitSet,
    kind: TransversalKind,
}

impl TransversalQ {
    pub fn edges(&self) -> BitSet {
        self.edges
    }

    pub fn kind(&self) -> TransversalKind {
        self.kind
    }

    pub fn edge_ids(&self, ps: &PointSet) -> Vec<EdgeId> {
        self.edges.iter().map(|e| ps.edge_at(e)).collect()
    }
}

/// The `n` hull edges of a convex-position point set; every plane spanning
/// tree keeps at least two of them.
pub fn hull_transversal(ps: &PointSet) -> Result<TransversalQ, TreeError> {
    if ps.interior_count() != 0 {
        return Err(TreeError::NotConvexPosition(ps.interior_count()));
    }
    Ok(TransversalQ {
        edges: ps.hull_edge_set(),
        kind: TransversalKind::HullOnly,
    })
}

/// For a point set with exactly one interior point `w`: the hull edges plus
/// the two edges `uw`, `vw` whose angle at `w` is largest, `n + 1` edges in
/// total.  Ties on the angle resolve to the lexicographically smallest
/// `(u, v)` pair.
pub fn interior_transversal(ps: &PointSet) -> Result<TransversalQ, TreeError> {
    if ps.interior_count() != 1 {
        return Err(TreeError::WrongInteriorCount(ps.interior_count()));
    }
    let w = ps.interior()[0];
    let apex = ps.point(w);
    let mut best: Option<(usize, usize)> = None;
    for u in 0..ps.len() {
        if u == w {
            continue;
        }
        for v in u + 1..ps.len() {
            if v == w {
                continue;
            }
            let wider = match best {
                None => true,
                Some((bu, bv)) => {
                    let current = (ps.point(bu), ps.point(bv));
                    angle_compare(apex, (ps.point(u), ps.point(v)), current)
                        .expect("points of a validated set are pairwise distinct")
                        == Ordering::Greater
                }
            };
            if wider {
                best = Some((u, v));
            }
        }
    }
    let (u, v) = best.expect("a point set has at least two non-interior points");
    let mut edges = ps.hull_edge_set();
    edges.insert(ps.edge_index(EdgeId::new(u, w)));
    edges.insert(ps.edge_index(EdgeId::new(v, w)));
    Ok(TransversalQ {
        edges,
        kind: TransversalKind::HullPlusInterior,
    })
}

fn check_colouring(ps: &PointSet, c: &Colouring, expected_colours: usize) -> Result<(), TreeError> {
    if c.domain_size() != ps.edge_count() {
        return Err(TreeError::ColouringSizeMismatch {
            expected: ps.edge_count(),
            got: c.domain_size(),
        });
    }
    if c.colour_count() != expected_colours {
        return Err(TreeError::WrongColourCount {
            expected: expected_colours,
            got: c.colour_count(),
        });
    }
    Ok(())
}

/// The lexicographic representative of each colour class, as an edge set.
fn representative_set(c: &Colouring) -> BitSet {
    c.class_representatives().into_iter().collect()
}

/// Rainbow plane spanning tree for convex position.
///
/// With `C(n,2) - n + 2` colours the representatives leave only `n - 2`
/// edges aside, too few to hold a spanning tree, so a plane spanning tree
/// within the representatives always exists and is heterochromatic.
pub fn rainbow_tree_convex(ps: &PointSet, c: &Colouring) -> Result<PlaneTree, TreeError> {
    if ps.interior_count() != 0 {
        return Err(TreeError::NotConvexPosition(ps.interior_count()));
    }
    check_colouring(ps, c, ps.edge_count() - ps.len() + 2)?;
    let x = representative_set(c);
    let tree = find_plane_tree_within(ps, x)
        .expect("discarding fewer than n - 1 edges always leaves a plane spanning tree");
    assert!(
        c.all_distinct(tree.edges()),
        "tree drawn from one-per-colour representatives must be rainbow"
    );
    Ok(tree)
}

/// Rainbow plane spanning tree for a point set with one interior point,
/// with `C(n,2) - n + 1` colours.
///
/// The discarded side `Y` (everything outside the colour representatives
/// `X`) has exactly `n - 1` edges.  If `Y` is not itself a plane spanning
/// tree, a tree inside `X` exists and is returned.  Otherwise `Y = S` is a
/// tree and the complement search decides: when `S` is neither a star nor a
/// geometric caterpillar its complement holds a plane spanning tree; when
/// `S` is a geometric caterpillar, one body edge is swapped against the
/// same-coloured representative and the search is re-run on the adjusted
/// set, which stays heterochromatic; for a star the swap is attempted over
/// every star edge and, should none free a tree, an exhaustive enumeration
/// fallback guarantees an answer (and logs that the swap argument was
/// bypassed).
pub fn rainbow_tree_one_interior(ps: &PointSet, c: &Colouring) -> Result<PlaneTree, TreeError> {
    if ps.interior_count() != 1 {
        return Err(TreeError::WrongInteriorCount(ps.interior_count()));
    }
    check_colouring(ps, c, ps.edge_count() - ps.len() + 1)?;
    let x = representative_set(c);
    let y = BitSet::all_below(ps.edge_count()).difference(x);
    debug_assert_eq!(y.len(), ps.len() - 1);

    let tree = match PlaneTree::new(ps, y) {
        Err(_) => find_plane_tree_within(ps, x)
            .expect("the discarded edges hold no spanning tree, so the representatives do"),
        Ok(s) => {
            let class = classify_tree(&s, ps);
            if !class.is_star && !class.is_geometric_caterpillar {
                complement_plane_tree(&s, ps).expect(
                    "a tree that is neither star nor geometric caterpillar leaves a plane tree in its complement",
                )
            } else if !class.is_star {
                let body_edge = first_body_edge(&s, ps)
                    .expect("a caterpillar that is not a star has a body edge");
                swapped_search(ps, c, x, body_edge)
                    .expect("swapping a body edge for its colour twin frees a plane spanning tree")
            } else {
                star_swap(ps, c, x, &s)
            }
        }
    };
    assert!(
        c.all_distinct(tree.edges()),
        "rainbow tree construction returned a repeated colour"
    );
    Ok(tree)
}

/// Lexicographically first tree edge whose endpoints both have degree >= 2.
fn first_body_edge(t: &PlaneTree, ps: &PointSet) -> Option<usize> {
    let deg = vertex_degrees(ps, t.edges());
    t.edges().iter().find(|&e| {
        let id = ps.edge_at(e);
        deg[id.a()] >= 2 && deg[id.b()] >= 2
    })
}

/// Replaces the representative sharing `swapped_out`'s colour by
/// `swapped_out` itself and searches the adjusted edge set.  The adjusted
/// set still holds exactly one edge of every colour.
fn swapped_search(
    ps: &PointSet,
    c: &Colouring,
    x: BitSet,
    swapped_out: usize,
) -> Option<PlaneTree> {
    let colour = c.colour_of(swapped_out);
    let twin = x
        .iter()
        .find(|&e| c.colour_of(e) == colour)
        .expect("every colour keeps a representative in the heterochromatic set");
    find_plane_tree_within(ps, x.without(twin).with(swapped_out))
}

/// Star case: try the colour swap with each star edge in turn; if no swap
/// frees a plane spanning tree, fall back to scanning the full enumeration
/// for a rainbow tree.
fn star_swap(ps: &PointSet, c: &Colouring, x: BitSet, s: &PlaneTree) -> PlaneTree {
    for star_edge in s.edges().iter() {
        if let Some(tree) = swapped_search(ps, c, x, star_edge) {
            return tree;
        }
    }
    log::warn!("no single star-edge swap freed a plane spanning tree; falling back to enumeration");
    enumerate_plane_spanning_trees(ps, ps.len())
        .expect("cap equals the instance size")
        .into_iter()
        .find(|t| c.all_distinct(t.edges()))
        .expect("a rainbow plane spanning tree exists at this colour count")
}

/// The hypergraph whose vertices are the edges of the complete geometric
/// graph on `ps` and whose hyperedges are its plane spanning trees.
pub fn plane_tree_hypergraph(ps: &PointSet, cap: usize) -> Result<Hypergraph, TreeError> {
    let trees = enumerate_plane_spanning_trees(ps, cap)?;
    let edges = trees.into_iter().map(|t| t.edges()).collect();
    Ok(Hypergraph::new(ps.edge_count(), edges)
        .expect("plane spanning trees are valid, distinct hyperedges"))
}

/// Outcome of probing one instance of the open question "is there always a
/// double transversal of plane spanning trees with `n + i(P)` edges?".
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub interior: usize,
    pub nu: usize,
    pub tree_count: usize,
    /// The conjectured bound `n + i(P)`.
    pub bound: usize,
    /// Exact minimum double transversal size, `None` if the node budget ran
    /// out before the search closed.
    pub tau: Option<usize>,
    /// Minimum transversal as endpoint pairs, when the search closed.
    pub witness: Option<Vec<(usize, usize)>>,
    /// `tau <= bound`, undecided (`None`) on budget exhaustion.
    pub holds: Option<bool>,
}

/// Computes the exact minimum double transversal of the plane-tree
/// hypergraph under a branch-and-bound node budget and compares it with the
/// conjectured `n + i(P)` bound.  Best effort: a `None` verdict only means
/// the budget was too small.
pub fn conjecture_scan(ps: &PointSet, budget: u64) -> Result<ConjectureReport, TreeError> {
    let h = plane_tree_hypergraph(ps, DEFAULT_ENUMERATION_CAP)?;
    let bound = ps.len() + ps.interior_count();
    let solved = min_double_transversal_budgeted(&h, budget);
    let (tau, witness, holds) = match solved {
        None => (None, None, None),
        Some((t, tau)) => (
            Some(tau),
            Some(t.vertices().iter().map(|e| ps.edge_at(e).endpoints()).collect()),
            Some(tau <= bound),
        ),
    };
    Ok(ConjectureReport {
        n: ps.len(),
        interior: ps.interior_count(),
        nu: h.vertex_count(),
        tree_count: h.hyperedges().len(),
        bound,
        tau,
        witness,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &[(i64, i64)] = &[(0, 0), (2, 0), (1, 2)];
    const SQUARE: &[(i64, i64)] = &[(0, 0), (4, 0), (4, 4), (0, 4)];
    /// Square with one interior point; edge indices (lexicographic):
    /// 0:(0,1) 1:(0,2) 2:(0,3) 3:(0,4) 4:(1,2) 5:(1,3) 6:(1,4) 7:(2,3)
    /// 8:(2,4) 9:(3,4).
    const SQUARE_W: &[(i64, i64)] = &[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)];
    /// Quadrilateral hull with interior point (2,2); the widest angle at
    /// the interior point is spanned by points 0 and 2.
    const HULL_W: &[(i64, i64)] = &[(0, 0), (5, 0), (6, 4), (1, 5), (2, 2)];

    fn pset(raw: &[(i64, i64)]) -> PointSet {
        PointSet::build(raw).unwrap()
    }

    fn parabola(n: usize) -> PointSet {
        let raw: Vec<(i64, i64)> = (0..n as i64).map(|i| (i, i * i)).collect();
        pset(&raw)
    }

    fn bits(indices: &[usize]) -> BitSet {
        indices.iter().copied().collect()
    }

    fn colouring(assignment: &[u32]) -> Colouring {
        Colouring::new(assignment.to_vec()).unwrap()
    }

    fn enumerate(ps: &PointSet) -> Vec<PlaneTree> {
        enumerate_plane_spanning_trees(ps, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn triangle_has_three_trees() {
        let ps = pset(TRIANGLE);
        let trees = enumerate(&ps);
        assert_eq!(trees.len(), 3);
        for t in &trees {
            assert_eq!(t.edges().len(), 2);
        }
    }

    #[test]
    fn convex_quadrilateral_has_twelve_trees() {
        let ps = pset(SQUARE);
        let trees = enumerate(&ps);
        assert_eq!(trees.len(), 12, "16 spanning trees minus 4 with both diagonals");
        // lexicographically first: the star at point 0
        assert_eq!(trees[0].edges(), bits(&[0, 1, 2]));
        assert_eq!(enumerate(&ps), trees, "enumeration is deterministic");
    }

    #[test]
    fn convex_counts_follow_closed_form() {
        // plane spanning trees of n points in convex position number
        // C(3n-3, n-1) / (2n-1)
        let closed_form = |n: u128| {
            let binom = |n: u128, k: u128| {
                let mut out = 1u128;
                for i in 0..k {
                    out = out * (n - i) / (i + 1);
                }
                out
            };
            binom(3 * n - 3, n - 1) / (2 * n - 1)
        };
        for n in 3..=6usize {
            let trees = enumerate(&parabola(n));
            assert_eq!(trees.len() as u128, closed_form(n as u128), "n = {n}");
        }
    }

    #[test]
    fn enumeration_respects_cap() {
        let ps = parabola(10);
        assert_eq!(
            enumerate_plane_spanning_trees(&ps, DEFAULT_ENUMERATION_CAP).unwrap_err(),
            TreeError::TooLarge { n: 10, cap: 9 }
        );
    }

    #[test]
    fn tree_validation_rejects_bad_sets() {
        let ps = pset(SQUARE);
        assert!(PlaneTree::new(&ps, bits(&[0, 1, 2])).is_ok());
        assert_eq!(
            PlaneTree::new(&ps, bits(&[0, 1])).unwrap_err(),
            TreeError::WrongEdgeCount { expected: 3, got: 2 }
        );
        // triangle on {0,1,2} leaves point 3 uncovered
        assert_eq!(
            PlaneTree::new(&ps, bits(&[0, 1, 3])).unwrap_err(),
            TreeError::NotSpanningTree
        );
        // both diagonals cross
        assert_eq!(
            PlaneTree::new(&ps, bits(&[1, 2, 4])).unwrap_err(),
            TreeError::CrossingEdges(EdgeId::new(0, 2), EdgeId::new(1, 3))
        );
        assert_eq!(
            PlaneTree::new(&ps, bits(&[0, 1, 99])).unwrap_err(),
            TreeError::EdgeOutOfRange(99)
        );
    }

    #[test]
    fn enumerated_trees_validate() {
        let ps = pset(SQUARE_W);
        for t in enumerate(&ps) {
            PlaneTree::new(&ps, t.edges()).unwrap();
        }
    }

    #[test]
    fn classify_star_and_hull_path() {
        let ps = pset(SQUARE);
        let star = PlaneTree::new(&ps, bits(&[0, 1, 2])).unwrap();
        let class = classify_tree(&star, &ps);
        assert!(class.is_star);
        assert!(class.is_caterpillar, "a star's body is a single vertex");
        assert!(class.is_geometric_caterpillar, "hull-centred star has clear leg lines");

        // hull path 0-1-2-3: edges (0,1), (1,2), (2,3)
        let path = PlaneTree::new(&ps, bits(&[0, 3, 5])).unwrap();
        let class = classify_tree(&path, &ps);
        assert!(!class.is_star);
        assert!(class.is_caterpillar);
        assert!(class.is_geometric_caterpillar);
    }

    #[test]
    fn classify_interior_structures() {
        let ps = pset(SQUARE_W);
        // star at the interior point: body vertex off the hull
        let star = PlaneTree::new(&ps, bits(&[3, 6, 8, 9])).unwrap();
        let class = classify_tree(&star, &ps);
        assert!(class.is_star);
        assert!(!class.is_geometric_caterpillar);

        // caterpillar whose body edge (1,4) leaves the hull
        let cat = PlaneTree::new(&ps, bits(&[0, 6, 8, 9])).unwrap();
        let class = classify_tree(&cat, &ps);
        assert!(!class.is_star);
        assert!(class.is_caterpillar);
        assert!(!class.is_geometric_caterpillar);
    }

    #[test]
    fn classify_leg_line_violation() {
        // body edge (0,1) on the hull, but the leg to the interior point
        // (5,4) extends onto the far side of the square
        let ps = pset(&[(0, 0), (10, 0), (10, 10), (0, 10), (5, 4)]);
        let tree = PlaneTree::new(&ps, bits(&[0, 2, 3, 4])).unwrap();
        let class = classify_tree(&tree, &ps);
        assert!(!class.is_star);
        assert!(class.is_caterpillar);
        assert!(!class.is_geometric_caterpillar);
    }

    #[test]
    fn classify_spider_is_no_caterpillar() {
        // three length-2 arms from a centre: deleting leaves keeps a
        // degree-3 vertex
        let ps = pset(&[(0, 0), (5, 1), (9, 3), (-3, 4), (-7, 7), (-1, -5), (-2, -9)]);
        let mut edges = BitSet::EMPTY;
        for (a, b) in [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)] {
            edges.insert(ps.edge_index(EdgeId::new(a, b)));
        }
        let tree = PlaneTree::new(&ps, edges).unwrap();
        let class = classify_tree(&tree, &ps);
        assert!(!class.is_star);
        assert!(!class.is_caterpillar);
        assert!(!class.is_geometric_caterpillar);
    }

    #[test]
    fn find_within_respects_allowed_set() {
        let ps = pset(SQUARE);
        let hull = ps.hull_edge_set();
        let tree = find_plane_tree_within(&ps, hull).unwrap();
        assert_eq!(tree.edges(), bits(&[0, 2, 3]), "first witness in lexicographic order");
        assert!(tree.edges().is_subset_of(hull));

        let diagonals = bits(&[1, 4]);
        assert_eq!(find_plane_tree_within(&ps, diagonals), None);
    }

    #[test]
    fn complement_search_matches_shape_classification() {
        let ps = pset(SQUARE);
        let hull_path = PlaneTree::new(&ps, bits(&[0, 3, 5])).unwrap();
        assert_eq!(complement_plane_tree(&hull_path, &ps), None);

        let convex5 = parabola(5);
        let star = PlaneTree::new(&convex5, bits(&[0, 1, 2, 3])).unwrap();
        assert_eq!(complement_plane_tree(&star, &convex5), None);

        let ps = pset(SQUARE_W);
        let free = PlaneTree::new(&ps, bits(&[0, 6, 8, 9])).unwrap();
        let class = classify_tree(&free, &ps);
        assert!(!class.is_star && !class.is_geometric_caterpillar);
        let found = complement_plane_tree(&free, &ps).unwrap();
        assert!(!found.edges().intersects(free.edges()));
    }

    #[test]
    fn hull_transversal_is_the_hull() {
        let ps = parabola(5);
        let q = hull_transversal(&ps).unwrap();
        assert_eq!(q.kind(), TransversalKind::HullOnly);
        assert_eq!(q.edges(), ps.hull_edge_set());
        assert_eq!(q.edges().len(), 5);

        assert_eq!(hull_transversal(&pset(TRIANGLE)).unwrap().edges().len(), 3);
        assert_eq!(
            hull_transversal(&pset(SQUARE_W)).unwrap_err(),
            TreeError::NotConvexPosition(1)
        );
    }

    #[test]
    fn interior_transversal_picks_widest_angle() {
        let ps = pset(HULL_W);
        let q = interior_transversal(&ps).unwrap();
        assert_eq!(q.kind(), TransversalKind::HullPlusInterior);
        assert_eq!(q.edges().len(), 6, "n + 1 edges");
        assert!(q.edges().contains(ps.edge_index(EdgeId::new(0, 4))));
        assert!(q.edges().contains(ps.edge_index(EdgeId::new(2, 4))));

        assert_eq!(
            interior_transversal(&parabola(4)).unwrap_err(),
            TreeError::WrongInteriorCount(0)
        );
    }

    #[test]
    fn interior_transversal_breaks_ties_lexicographically() {
        // both corner pairs (0,2) and (1,3) span the same angle at (2,1)
        let ps = pset(SQUARE_W);
        let q = interior_transversal(&ps).unwrap();
        assert!(q.edges().contains(3), "edge (0,4) from the lex-first pair");
        assert!(q.edges().contains(8), "edge (2,4) from the lex-first pair");
        assert!(!q.edges().contains(6));
        assert!(!q.edges().contains(9));
    }

    #[test]
    fn interior_transversal_on_four_points_omits_one_edge() {
        let ps = pset(&[(0, 0), (6, 0), (3, 5), (3, 2)]);
        let q = interior_transversal(&ps).unwrap();
        assert_eq!(q.edges().len(), ps.edge_count() - 1);
    }

    #[test]
    fn transversals_meet_every_tree_twice() {
        let convex = parabola(6);
        let hull = hull_transversal(&convex).unwrap();
        for t in enumerate(&convex) {
            assert!(t.edges().intersection(hull.edges()).len() >= 2);
        }
        let ps = pset(SQUARE_W);
        let q = interior_transversal(&ps).unwrap();
        for t in enumerate(&ps) {
            assert!(t.edges().intersection(q.edges()).len() >= 2);
        }
    }

    #[test]
    fn rainbow_convex_returns_distinct_colours() {
        let ps = pset(TRIANGLE);
        let tree = rainbow_tree_convex(&ps, &colouring(&[1, 2, 1])).unwrap();
        assert_eq!(tree.edges(), bits(&[0, 1]));

        let ps = pset(SQUARE);
        let c = colouring(&[1, 2, 3, 4, 1, 1]);
        let tree = rainbow_tree_convex(&ps, &c).unwrap();
        assert_eq!(tree.edges(), bits(&[0, 1, 2]), "star at 0 from the representatives");
        assert!(c.all_distinct(tree.edges()));
    }

    #[test]
    fn rainbow_convex_validates_inputs() {
        let ps = pset(SQUARE);
        assert_eq!(
            rainbow_tree_convex(&ps, &colouring(&[1, 2, 3, 1, 2, 3])).unwrap_err(),
            TreeError::WrongColourCount { expected: 4, got: 3 }
        );
        assert_eq!(
            rainbow_tree_convex(&ps, &colouring(&[1, 2, 3])).unwrap_err(),
            TreeError::ColouringSizeMismatch { expected: 6, got: 3 }
        );
        assert_eq!(
            rainbow_tree_convex(&pset(SQUARE_W), &colouring(&[1; 10])).unwrap_err(),
            TreeError::NotConvexPosition(1)
        );
    }

    #[test]
    fn rainbow_one_interior_discarded_side_not_a_tree() {
        let ps = pset(SQUARE_W);
        // representatives X = {0,1,4,6,7,8}; Y = {2,3,5,9} leaves point 2
        // uncovered, so the first branch searches X directly
        let c = colouring(&[1, 2, 1, 2, 3, 3, 4, 5, 6, 4]);
        let tree = rainbow_tree_one_interior(&ps, &c).unwrap();
        assert_eq!(tree.edges(), bits(&[0, 1, 6, 7]));
        assert!(c.all_distinct(tree.edges()));
    }

    #[test]
    fn rainbow_one_interior_swaps_caterpillar_body_edge() {
        let ps = pset(SQUARE_W);
        // Y = {2,4,7,8} is a geometric caterpillar with body edge (2,3);
        // the construction swaps it against representative 5 of colour 4
        let c = colouring(&[1, 2, 2, 3, 3, 4, 5, 4, 5, 6]);
        let y = BitSet::all_below(10).difference(representative_set(&c));
        assert_eq!(y, bits(&[2, 4, 7, 8]));
        let s = PlaneTree::new(&ps, y).unwrap();
        let class = classify_tree(&s, &ps);
        assert!(class.is_geometric_caterpillar && !class.is_star);

        let tree = rainbow_tree_one_interior(&ps, &c).unwrap();
        assert_eq!(tree.edges(), bits(&[0, 1, 3, 7]));
        assert!(tree.contains(7), "the swapped-in body edge is available again");
        assert!(c.all_distinct(tree.edges()));
    }

    #[test]
    fn rainbow_one_interior_handles_star() {
        let ps = pset(SQUARE_W);
        // Y = {3,6,8,9} is the star at the interior point
        let c = colouring(&[1, 2, 3, 1, 4, 5, 4, 6, 5, 6]);
        let y = BitSet::all_below(10).difference(representative_set(&c));
        assert_eq!(y, bits(&[3, 6, 8, 9]));
        assert!(classify_tree(&PlaneTree::new(&ps, y).unwrap(), &ps).is_star);

        let tree = rainbow_tree_one_interior(&ps, &c).unwrap();
        assert_eq!(tree.edges(), bits(&[1, 2, 3, 4]));
        assert!(c.all_distinct(tree.edges()));
    }

    #[test]
    fn rainbow_one_interior_validates_inputs() {
        let ps = pset(SQUARE_W);
        assert_eq!(
            rainbow_tree_one_interior(&parabola(5), &colouring(&[1; 10])).unwrap_err(),
            TreeError::WrongInteriorCount(0)
        );
        let seven = colouring(&[1, 2, 3, 4, 5, 6, 7, 1, 2, 3]);
        assert_eq!(
            rainbow_tree_one_interior(&ps, &seven).unwrap_err(),
            TreeError::WrongColourCount { expected: 6, got: 7 }
        );
    }

    #[test]
    fn hypergraph_mirrors_enumeration() {
        let ps = pset(SQUARE);
        let h = plane_tree_hypergraph(&ps, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.hyperedges().len(), 12);
    }

    #[test]
    fn conjecture_scan_reports_exact_tau() {
        let report = conjecture_scan(&parabola(5), 1 << 20).unwrap();
        assert_eq!(report.tree_count, 55);
        assert_eq!(report.nu, 10);
        assert_eq!(report.bound, 5);
        assert_eq!(report.tau, Some(5));
        assert_eq!(report.holds, Some(true));
        assert_eq!(report.witness.as_ref().map(Vec::len), Some(5));

        let report = conjecture_scan(&pset(SQUARE_W), 1 << 20).unwrap();
        assert_eq!(report.bound, 6);
        assert_eq!(report.tau, Some(6));
        assert_eq!(report.holds, Some(true));
    }

    #[test]
    fn conjecture_scan_reports_budget_exhaustion() {
        let report = conjecture_scan(&parabola(5), 0).unwrap();
        assert_eq!(report.tau, None);
        assert_eq!(report.holds, None);
        assert_eq!(report.witness, None);
    }
}
