//! Exact combinatorics of heterochromatic (rainbow) substructures.
//!
//! The crate answers questions of the form: how many colours force a rainbow
//! member of a hypergraph whose hyperedges are the plane spanning trees of a
//! point set, or the bases of a matroid?  Everything is exact: geometry uses
//! integer predicates, linear algebra uses modular or rational elimination,
//! and the solvers enumerate or branch-and-bound at desk scale.
//!
//! Module map:
//!
//! * [`geom`] — integer points, orientation/crossing predicates, convex
//!   hulls, and exact angle comparison.
//! * [`plane_tree`] — enumeration and classification of plane (non-crossing)
//!   spanning trees, double transversals of the tree hypergraph, and the
//!   constructive rainbow-tree algorithms.
//! * [`hypergraph`] — generic hypergraph solvers: minimum double
//!   transversals, exact heterochromatic numbers, rainbow detection.
//! * [`matroid`] — graphic / uniform / linear matroids behind one
//!   independence-oracle trait, basis enumeration, and the constructive
//!   rainbow-basis exchange algorithm.
//! * [`random`] — seeded generators for convex, one-interior and general
//!   position instances.
//! * [`formats`] — the JSON interchange formats understood by the CLI.
//! * [`naive`] — deliberately simple reference implementations used to
//!   cross-check the solvers and to audit reported counterexamples.

pub mod bitset;
mod dsu;
pub mod formats;
pub mod geom;
pub mod hypergraph;
pub mod matroid;
pub mod naive;
pub mod plane_tree;
pub mod random;

pub use bitset::BitSet;
pub use geom::{EdgeId, Point, PointSet};
pub use hypergraph::{Colouring, DoubleTransversal, Hypergraph};
pub use plane_tree::PlaneTree;
