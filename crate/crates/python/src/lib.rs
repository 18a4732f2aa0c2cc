//! Python bindings: thin `#[pyfunction]` wrappers over the core solvers,
//! exchanging plain tuples and lists so no Python-side types are needed.
//!
//! Conventions: points are `(x, y)` integer pairs, tree edges are vertex
//! pairs, hypergraph vertices and matroid elements are indices, colours are
//! positive integers.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hcn_core::hypergraph::{heterochromatic_number_exact, min_double_transversal};
use hcn_core::matroid::{
    enumerate_bases, gamma, make_graphic, make_uniform, rainbow_basis, tau_bases, GraphSpec,
    Matroid,
};
use hcn_core::plane_tree::{
    classify_tree, enumerate_plane_spanning_trees, hull_transversal, interior_transversal,
    plane_tree_hypergraph, rainbow_tree_convex, rainbow_tree_one_interior, PlaneTree,
};
use hcn_core::random::{random_convex, random_general, random_one_interior};
use hcn_core::{BitSet, Colouring, EdgeId, Hypergraph, PointSet};

fn val_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point_set(points: Vec<(i64, i64)>) -> PyResult<PointSet> {
    PointSet::build(&points).map_err(val_err)
}

fn colouring(colours: Vec<u32>) -> PyResult<Colouring> {
    Colouring::new(colours).map_err(val_err)
}

fn hypergraph(nu: usize, hyperedges: Vec<Vec<usize>>) -> PyResult<Hypergraph> {
    let mut edges = Vec::with_capacity(hyperedges.len());
    for e in &hyperedges {
        for &v in e {
            if v >= nu {
                return Err(val_err(format!("vertex {v} is outside 0..{nu}")));
            }
        }
        edges.push(e.iter().copied().collect::<BitSet>());
    }
    Hypergraph::new(nu, edges).map_err(val_err)
}

fn graph(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<GraphSpec> {
    GraphSpec::new(vertices, edges).map_err(val_err)
}

fn tree_pairs(ps: &PointSet, t: &PlaneTree) -> Vec<(usize, usize)> {
    t.edge_ids(ps).iter().map(|id| id.endpoints()).collect()
}

/// Validates a point set; returns (hull vertex cycle, interior vertices).
#[pyfunction]
fn build_point_set(points: Vec<(i64, i64)>) -> PyResult<(Vec<usize>, Vec<usize>)> {
    let ps = point_set(points)?;
    Ok((ps.hull().to_vec(), ps.interior().to_vec()))
}

/// All plane spanning trees, each an edge list of vertex pairs.
#[pyfunction]
fn enumerate_trees(points: Vec<(i64, i64)>) -> PyResult<Vec<Vec<(usize, usize)>>> {
    let ps = point_set(points)?;
    let trees = enumerate_plane_spanning_trees(&ps, 9).map_err(val_err)?;
    Ok(trees.iter().map(|t| tree_pairs(&ps, t)).collect())
}

/// (is_star, is_caterpillar, is_geometric_caterpillar) for one tree.
#[pyfunction]
fn classify(points: Vec<(i64, i64)>, edges: Vec<(usize, usize)>) -> PyResult<(bool, bool, bool)> {
    let ps = point_set(points)?;
    let mut set = BitSet::EMPTY;
    for &(a, b) in &edges {
        if a == b || a >= ps.len() || b >= ps.len() {
            return Err(val_err(format!("({a}, {b}) is not an edge of the point set")));
        }
        set.insert(ps.edge_index(EdgeId::new(a, b)));
    }
    let tree = PlaneTree::new(&ps, set).map_err(val_err)?;
    let class = classify_tree(&tree, &ps);
    Ok((class.is_star, class.is_caterpillar, class.is_geometric_caterpillar))
}

/// The edge set every plane spanning tree meets twice (hull edges, plus the
/// widest-angle pair at the interior point when there is one).
#[pyfunction]
fn transversal_edges(points: Vec<(i64, i64)>) -> PyResult<Vec<(usize, usize)>> {
    let ps = point_set(points)?;
    let q = match ps.interior_count() {
        0 => hull_transversal(&ps).map_err(val_err)?,
        1 => interior_transversal(&ps).map_err(val_err)?,
        i => return Err(val_err(format!("need at most one interior point, got {i}"))),
    };
    Ok(q.edge_ids(&ps).iter().map(|id| id.endpoints()).collect())
}

/// A plane spanning tree whose edges all receive distinct colours, for
/// point sets with at most one interior point.  `colours[i]` colours the
/// i-th edge in lexicographic vertex-pair order.
#[pyfunction]
fn rainbow_tree(points: Vec<(i64, i64)>, colours: Vec<u32>) -> PyResult<Vec<(usize, usize)>> {
    let ps = point_set(points)?;
    let c = colouring(colours)?;
    let tree = match ps.interior_count() {
        0 => rainbow_tree_convex(&ps, &c).map_err(val_err)?,
        1 => rainbow_tree_one_interior(&ps, &c).map_err(val_err)?,
        i => return Err(val_err(format!("need at most one interior point, got {i}"))),
    };
    Ok(tree_pairs(&ps, &tree))
}

/// The plane-spanning-tree hypergraph: (vertex count, hyperedges as lists
/// of edge indices in lexicographic vertex-pair order).
#[pyfunction]
fn tree_hypergraph(points: Vec<(i64, i64)>) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let ps = point_set(points)?;
    let h = plane_tree_hypergraph(&ps, 9).map_err(val_err)?;
    Ok((
        h.vertex_count(),
        h.hyperedges().iter().map(|e| e.to_vec()).collect(),
    ))
}

/// Exact heterochromatic number of an explicit hypergraph.
#[pyfunction]
#[pyo3(signature = (nu, hyperedges, cap = 12))]
fn heterochromatic_number(nu: usize, hyperedges: Vec<Vec<usize>>, cap: usize) -> PyResult<usize> {
    let h = hypergraph(nu, hyperedges)?;
    heterochromatic_number_exact(&h, cap).map_err(val_err)
}

/// Minimum double transversal of an explicit hypergraph: (vertices, size).
#[pyfunction]
fn double_transversal(nu: usize, hyperedges: Vec<Vec<usize>>) -> PyResult<(Vec<usize>, usize)> {
    let h = hypergraph(nu, hyperedges)?;
    let (t, tau) = min_double_transversal(&h);
    Ok((t.vertices().to_vec(), tau))
}

fn tau_of(m: &dyn Matroid) -> PyResult<usize> {
    tau_bases(m, 20).map_err(val_err)
}

/// Basis transversal number of the cycle matroid of a graph.
#[pyfunction]
fn graphic_tau(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<usize> {
    tau_of(&make_graphic(&graph(vertices, edges)?).map_err(val_err)?)
}

/// Basis transversal number of the uniform matroid U(r, m).
#[pyfunction]
fn uniform_tau(r: usize, m: usize) -> PyResult<usize> {
    tau_of(&make_uniform(r, m).map_err(val_err)?)
}

/// All spanning trees of a graph, as lists of edge indices.
#[pyfunction]
fn graphic_bases(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Vec<Vec<usize>>> {
    let m = make_graphic(&graph(vertices, edges)?).map_err(val_err)?;
    let bases = enumerate_bases(&m, 20).map_err(val_err)?;
    Ok(bases.iter().map(|b| b.elements().to_vec()).collect())
}

/// A basis with pairwise distinct colours in the cycle matroid of a graph.
#[pyfunction]
fn rainbow_basis_graphic(
    vertices: usize,
    edges: Vec<(usize, usize)>,
    colours: Vec<u32>,
) -> PyResult<Vec<usize>> {
    let m = make_graphic(&graph(vertices, edges)?).map_err(val_err)?;
    let b = rainbow_basis(&m, &colouring(colours)?, None).map_err(val_err)?;
    Ok(b.elements().to_vec())
}

/// A basis with pairwise distinct colours in the uniform matroid U(r, m).
#[pyfunction]
fn rainbow_basis_uniform(r: usize, m: usize, colours: Vec<u32>) -> PyResult<Vec<usize>> {
    let u = make_uniform(r, m).map_err(val_err)?;
    let b = rainbow_basis(&u, &colouring(colours)?, None).map_err(val_err)?;
    Ok(b.elements().to_vec())
}

/// Minimum number of edges whose removal leaves at least three components.
#[pyfunction]
fn cut_gamma(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<usize> {
    gamma(&graph(vertices, edges)?).map_err(val_err)
}

/// Seeded random point set: kind is "convex", "one-interior", or "general".
#[pyfunction]
fn random_points(kind: &str, n: usize, seed: u64) -> PyResult<Vec<(i64, i64)>> {
    let ps = match kind {
        "convex" => random_convex(n, seed).map_err(val_err)?,
        "one-interior" => random_one_interior(n, seed).map_err(val_err)?,
        "general" => random_general(n, seed).map_err(val_err)?,
        other => return Err(val_err(format!("unknown kind {other:?}"))),
    };
    Ok(ps.points().iter().map(|p| (p.x, p.y)).collect())
}

#[pymodule]
fn hcn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(build_point_set, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(transversal_edges, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_tree, m)?)?;
    m.add_function(wrap_pyfunction!(tree_hypergraph, m)?)?;
    m.add_function(wrap_pyfunction!(heterochromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(double_transversal, m)?)?;
    m.add_function(wrap_pyfunction!(graphic_tau, m)?)?;
    m.add_function(wrap_pyfunction!(uniform_tau, m)?)?;
    m.add_function(wrap_pyfunction!(graphic_bases, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_basis_graphic, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_basis_uniform, m)?)?;
    m.add_function(wrap_pyfunction!(cut_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(random_points, m)?)?;
    Ok(())
}
