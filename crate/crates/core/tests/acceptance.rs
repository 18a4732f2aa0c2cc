//! Acceptance gate.
//!
//! One test per shipped guarantee.  Each prints a single
//! `criterion N (...): pass|fail` line — run with `--nocapture` to see the
//! report — and fails the build when the guarantee does not hold.  Time
//! budgets are part of the contract and enforced with wall-clock checks.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hcn_core::hypergraph::{
    canonical_colourings, has_rainbow_hyperedge, heterochromatic_number_exact,
    lower_bound_colouring, min_double_transversal,
};
use hcn_core::matroid::{
    basis_hypergraph, gamma, make_graphic, make_linear, make_uniform, rainbow_basis, tau_bases,
    Field, GraphSpec, Matroid,
};
use hcn_core::naive;
use hcn_core::plane_tree::{
    classify_tree, complement_plane_tree, enumerate_plane_spanning_trees, hull_transversal,
    interior_transversal, plane_tree_hypergraph, rainbow_tree_one_interior,
};
use hcn_core::random::{
    random_convex, random_general, random_one_interior, random_surjective_colouring,
};
use hcn_core::{BitSet, DoubleTransversal, Hypergraph, PointSet};

fn report(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {number} ({name}): pass"),
        Err(why) => {
            println!("criterion {number} ({name}): fail — {why}");
            panic!("criterion {number} ({name}): {why}");
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Derives a per-trial colouring seed from an instance seed.
fn trial_seed(seed: u64, trial: u64) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(trial)
}

#[test]
fn criterion_1_convex_heterochromatic_number() {
    report(1, "convex exact heterochromatic number", || {
        for n in 3..=5usize {
            let expected = n * (n - 1) / 2 - n + 2;
            for seed in 0..20u64 {
                let start = Instant::now();
                let ps = random_convex(n, seed).map_err(err)?;
                let h = plane_tree_hypergraph(&ps, 9).map_err(err)?;
                let hc = heterochromatic_number_exact(&h, 12).map_err(err)?;
                if hc != expected {
                    return Err(format!("n={n} seed={seed}: h_c={hc}, expected {expected}"));
                }
                if start.elapsed() > Duration::from_secs(60) {
                    return Err(format!("n={n} seed={seed}: over the 60 s budget"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_2_one_interior_exact_values() {
    report(2, "one-interior n=5 exact h_c and transversal number", || {
        for seed in 0..20u64 {
            let start = Instant::now();
            let ps = random_one_interior(5, seed).map_err(err)?;
            let h = plane_tree_hypergraph(&ps, 9).map_err(err)?;
            let (_, tau) = min_double_transversal(&h);
            let hc = heterochromatic_number_exact(&h, 12).map_err(err)?;
            if hc != 6 || tau != 6 {
                return Err(format!("seed={seed}: h_c={hc}, tau={tau}, expected 6 and 6"));
            }
            if start.elapsed() > Duration::from_secs(60) {
                return Err(format!("seed={seed}: over the 60 s budget"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_one_interior_constructive_coverage() {
    report(3, "one-interior constructive coverage at n=6,7", || {
        let start = Instant::now();
        for n in 6..=7usize {
            let k = n * (n - 1) / 2 - n + 1;
            for seed in 0..3u64 {
                let ps = random_one_interior(n, seed).map_err(err)?;
                let h = plane_tree_hypergraph(&ps, 9).map_err(err)?;
                let q = interior_transversal(&ps).map_err(err)?;
                let t = DoubleTransversal::new(&h, q.edges())
                    .ok_or(format!("n={n} seed={seed}: transversal misses a tree twice"))?;
                let c = lower_bound_colouring(&h, &t);
                if let Some(i) = has_rainbow_hyperedge(&h, &c) {
                    return Err(format!(
                        "n={n} seed={seed}: lower-bound colouring leaves tree {i} rainbow"
                    ));
                }
                for trial in 0..1000u64 {
                    let c = random_surjective_colouring(ps.edge_count(), k, trial_seed(seed, trial));
                    let tree = rainbow_tree_one_interior(&ps, &c)
                        .map_err(|e| format!("n={n} seed={seed} trial={trial}: {e}"))?;
                    if !naive::is_plane_spanning_tree(&ps, &tree.edge_ids(&ps))
                        || !c.all_distinct(tree.edges())
                    {
                        return Err(format!("n={n} seed={seed} trial={trial}: bad witness"));
                    }
                }
            }
        }
        if start.elapsed() > Duration::from_secs(300) {
            return Err("over the 5 min budget".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_4_transversal_double_coverage() {
    report(4, "every tree meets the transversal set twice", || {
        let check = |ps: &PointSet, q: BitSet, label: &str| -> Result<(), String> {
            for t in enumerate_plane_spanning_trees(ps, 9).map_err(err)? {
                if t.edges().intersection(q).len() < 2 {
                    return Err(format!("{label}: tree {:?} meets Q once", t.edges().to_vec()));
                }
            }
            Ok(())
        };
        for n in 3..=8usize {
            for seed in 0..4u64 {
                let ps = random_convex(n, seed).map_err(err)?;
                let q = hull_transversal(&ps).map_err(err)?;
                check(&ps, q.edges(), &format!("convex n={n} seed={seed}"))?;
            }
        }
        for n in 4..=8usize {
            for seed in 0..4u64 {
                let ps = random_one_interior(n, seed).map_err(err)?;
                let q = interior_transversal(&ps).map_err(err)?;
                check(&ps, q.edges(), &format!("one-interior n={n} seed={seed}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_complement_tree_biconditional() {
    report(5, "complement tree exists iff not star or geometric caterpillar", || {
        let mut instances: Vec<(String, PointSet)> = Vec::new();
        for n in 3..=6usize {
            for seed in 0..2u64 {
                instances.push((format!("convex n={n} seed={seed}"), random_convex(n, seed).map_err(err)?));
            }
        }
        instances.push(("convex n=7 seed=0".into(), random_convex(7, 0).map_err(err)?));
        for n in 4..=6usize {
            for seed in 0..2u64 {
                instances.push((
                    format!("one-interior n={n} seed={seed}"),
                    random_one_interior(n, seed).map_err(err)?,
                ));
            }
        }
        instances.push(("one-interior n=7 seed=0".into(), random_one_interior(7, 0).map_err(err)?));
        for n in 6..=7usize {
            instances.push((format!("general n={n} seed=5"), random_general(n, 5).map_err(err)?));
        }
        for (label, ps) in &instances {
            for t in enumerate_plane_spanning_trees(ps, 9).map_err(err)? {
                let complement = complement_plane_tree(&t, ps);
                let class = classify_tree(&t, ps);
                let blocked = class.is_star || class.is_geometric_caterpillar;
                match complement {
                    None if !blocked => {
                        return Err(format!(
                            "{label}: no complement tree for unblocked tree {:?}",
                            t.edges().to_vec()
                        ));
                    }
                    Some(c) if blocked => {
                        return Err(format!(
                            "{label}: complement tree {:?} found for star/caterpillar {:?}",
                            c.edges().to_vec(),
                            t.edges().to_vec()
                        ));
                    }
                    Some(c) => {
                        if !c.edges().intersection(t.edges()).is_empty() {
                            return Err(format!("{label}: complement shares an edge"));
                        }
                    }
                    None => {}
                }
            }
        }
        Ok(())
    });
}

/// The six ground-set-at-most-six matroids exercised exhaustively: name,
/// oracle, expected basis transversal number.
fn small_matroids() -> Vec<(String, Box<dyn Matroid>, usize)> {
    let k4 = GraphSpec::complete(4);
    vec![
        ("graphic K4".into(), Box::new(make_graphic(&k4).unwrap()) as Box<dyn Matroid>, 5),
        ("U(2,4)".into(), Box::new(make_uniform(2, 4).unwrap()), 4),
        ("U(2,5)".into(), Box::new(make_uniform(2, 5).unwrap()), 5),
        ("U(3,5)".into(), Box::new(make_uniform(3, 5).unwrap()), 4),
        ("U(3,6)".into(), Box::new(make_uniform(3, 6).unwrap()), 5),
        (
            "binary 3-column".into(),
            Box::new(
                make_linear(Field::GfP(2), &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap(),
            ),
            3,
        ),
    ]
}

#[test]
fn criterion_6_rainbow_basis_on_all_canonical_colourings() {
    report(6, "rainbow basis on every canonical colouring", || {
        let start = Instant::now();
        for (name, m, expected_tau) in small_matroids() {
            let m: &dyn Matroid = &*m;
            let tau = tau_bases(m, 20).map_err(err)?;
            if tau != expected_tau {
                return Err(format!("{name}: tau={tau}, expected {expected_tau}"));
            }
            let k = m.ground_size() - tau + 2;
            let colourings = canonical_colourings(m.ground_size(), k);
            if colourings.is_empty() {
                return Err(format!("{name}: no canonical {k}-colourings generated"));
            }
            for c in &colourings {
                let b = rainbow_basis(m, c, Some(tau))
                    .map_err(|e| format!("{name} under {:?}: {e}", c.assignment()))?;
                if b.elements().len() != m.rank()
                    || !m.is_independent(b.elements())
                    || !c.all_distinct(b.elements())
                {
                    return Err(format!("{name} under {:?}: bad basis", c.assignment()));
                }
            }
        }
        if start.elapsed() > Duration::from_secs(120) {
            return Err("over the 2 min budget".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_7_basis_hypergraph_exact_values() {
    report(7, "basis hypergraph heterochromatic numbers", || {
        for (name, m, expected_tau) in small_matroids() {
            let m: &dyn Matroid = &*m;
            let h = basis_hypergraph(m, 20).map_err(err)?;
            let hc = heterochromatic_number_exact(&h, 12).map_err(err)?;
            let expected = m.ground_size() - expected_tau + 2;
            if hc != expected {
                return Err(format!("{name}: h_c={hc}, expected {expected}"));
            }
        }
        // Spanning-tree hypergraphs of complete graphs: h_c = C(n-2,2) + 2
        // with transversal number 2n - 3.
        for n in 4..=5usize {
            let g = GraphSpec::complete(n);
            let m = make_graphic(&g).map_err(err)?;
            let tau = tau_bases(&m, 20).map_err(err)?;
            let h = basis_hypergraph(&m, 20).map_err(err)?;
            let hc = heterochromatic_number_exact(&h, 12).map_err(err)?;
            let expected_tau = 2 * n - 3;
            let expected_hc = (n - 2) * (n - 3) / 2 + 2;
            if tau != expected_tau || hc != expected_hc {
                return Err(format!(
                    "K{n}: tau={tau} h_c={hc}, expected {expected_tau} and {expected_hc}"
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_cut_gamma_equals_basis_transversal() {
    report(8, "three-component cut number equals basis transversal number", || {
        let path = |n: usize| {
            GraphSpec::new(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap()
        };
        let cycle = |n: usize| {
            let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            e.push((0, n - 1));
            GraphSpec::new(n, e).unwrap()
        };
        let star = |n: usize| GraphSpec::new(n, (1..n).map(|i| (0, i)).collect()).unwrap();
        let k23 = GraphSpec::new(
            5,
            vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let kite = GraphSpec::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let graphs = vec![
            ("P3", path(3)),
            ("P4", path(4)),
            ("P5", path(5)),
            ("C3", cycle(3)),
            ("C4", cycle(4)),
            ("C5", cycle(5)),
            ("K4", GraphSpec::complete(4)),
            ("K5", GraphSpec::complete(5)),
            ("K(2,3)", k23),
            ("star K(1,3)", star(4)),
            ("kite", kite),
        ];
        for (name, g) in graphs {
            let by_cut = gamma(&g).map_err(err)?;
            let by_bases = tau_bases(&make_graphic(&g).map_err(err)?, 20).map_err(err)?;
            if by_cut != by_bases {
                return Err(format!("{name}: gamma={by_cut}, tau={by_bases}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_partition_search_matches_enumeration() {
    report(9, "partition search agrees with exhaustive enumeration", || {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut done = 0usize;
        while done < 50 {
            let nu = rng.random_range(3..=8usize);
            let edge_count = rng.random_range(1..=8usize);
            let edges: Vec<BitSet> = (0..edge_count)
                .map(|_| {
                    let size = rng.random_range(2..=nu);
                    rand::seq::index::sample(&mut rng, nu, size).into_iter().collect()
                })
                .collect();
            let h = Hypergraph::new(nu, edges).map_err(err)?;
            let fast = heterochromatic_number_exact(&h, 12).map_err(err)?;
            let slow = naive::heterochromatic_number_by_enumeration(&h);
            if fast != slow {
                return Err(format!(
                    "instance {done}: partition search {fast}, enumeration {slow}"
                ));
            }
            done += 1;
        }
        Ok(())
    });
}
