//! The nine verification suites behind `hcn verify`.
//!
//! Every suite runs its guarantee over exhaustive small structures plus
//! seeded random instances.  A failing check is re-examined with the
//! brute-force routines from [`hcn_core::naive`] and the audit verdict is
//! embedded in the counterexample payload, so a reported counterexample is
//! never an artifact of the solver under test.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use anyhow::{bail, Result};
use serde_json::{json, Value};

use hcn_core::formats::HypergraphFile;
use hcn_core::geom::EdgeId;
use hcn_core::hypergraph::{
    canonical_colourings, has_rainbow_hyperedge, heterochromatic_number_exact,
    lower_bound_colouring, min_double_transversal,
};
use hcn_core::matroid::{
    basis_hypergraph, enumerate_bases, gamma, make_graphic, make_linear, rainbow_basis, tau_bases,
    Field, GraphSpec,
};
use hcn_core::naive;
use hcn_core::plane_tree::{
    classify_tree, complement_plane_tree, enumerate_plane_spanning_trees, hull_transversal,
    interior_transversal, PlaneTree, TransversalQ, TreeError,
};
use hcn_core::random::{
    random_connected_graph, random_convex, random_general, random_hypergraph, random_one_interior,
    random_surjective_colouring, GenError,
};
use hcn_core::{BitSet, Colouring, PointSet};

use crate::io::{self, LoadedMatroid};
use crate::report::{SuiteRun, VerifyReport};
use crate::Suite;

pub struct SuiteParams {
    pub seed: u64,
    pub cap_nu: usize,
    pub n: Option<RangeInclusive<usize>>,
    pub trials: u64,
    pub matroid: Option<String>,
    pub exhaustive: bool,
}

impl SuiteParams {
    fn range_or(&self, default: RangeInclusive<usize>) -> RangeInclusive<usize> {
        self.n.clone().unwrap_or(default)
    }
}

pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<VerifyReport> {
    match suite {
        Suite::Lemma3 => coverage(p, "lemma3", false),
        Suite::Lemma4 => coverage(p, "lemma4", true),
        Suite::Urrutia => urrutia(p),
        Suite::Thm5 => rainbow_trees(p, "thm5", false),
        Suite::Thm6 => rainbow_trees(p, "thm6", true),
        Suite::Thm7 => rainbow_bases(p),
        Suite::JiangWest => complete_graph_values(p),
        Suite::GammaTau => gamma_tau(p),
        Suite::Bound => bound(p),
    }
}

fn instance_seed(base: u64, n: usize, idx: u64) -> u64 {
    base ^ ((n as u64) << 40) ^ idx.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn points_json(ps: &PointSet) -> Value {
    json!(ps.points().iter().map(|p| (p.x, p.y)).collect::<Vec<(i64, i64)>>())
}

fn pairs(ids: &[EdgeId]) -> Vec<(usize, usize)> {
    ids.iter().map(|id| id.endpoints()).collect()
}

type Generator = fn(usize, u64) -> Result<PointSet, GenError>;
type TransversalFn = fn(&PointSet) -> Result<TransversalQ, TreeError>;

/// lemma3 / lemma4: every plane spanning tree keeps at least two edges of
/// the hull transversal (convex position) or the interior transversal (one
/// interior point).
fn coverage(p: &SuiteParams, name: &str, one_interior: bool) -> Result<VerifyReport> {
    let (range, generate, transversal): (_, Generator, TransversalFn) = if one_interior {
        (p.range_or(4..=7), random_one_interior, interior_transversal)
    } else {
        (p.range_or(3..=7), random_convex, hull_transversal)
    };
    let mut run = SuiteRun::new(name);
    'outer: for n in range {
        for idx in 0..p.trials {
            let seed = instance_seed(p.seed, n, idx);
            let ps = generate(n, seed)?;
            let q = transversal(&ps)?;
            run.instance(format!("n={n} seed={seed}"));
            for tree in enumerate_plane_spanning_trees(&ps, 9)? {
                let hits = tree.edges().intersection(q.edges()).len();
                run.check(hits >= 2, || {
                    let ids = tree.edge_ids(&ps);
                    json!({
                        "n": n, "seed": seed,
                        "points": points_json(&ps),
                        "tree": pairs(&ids),
                        "transversal": pairs(&q.edge_ids(&ps)),
                        "hits": hits,
                        "audit_is_plane_spanning_tree":
                            naive::is_plane_spanning_tree(&ps, &ids),
                        "audit_hits_recounted": q
                            .edge_ids(&ps)
                            .iter()
                            .filter(|e| ids.contains(e))
                            .count(),
                    })
                });
                if run.failed() {
                    break 'outer;
                }
            }
        }
    }
    Ok(run.finish())
}

/// urrutia: a plane spanning tree has an edge-disjoint plane spanning tree
/// in the complement exactly when it is neither a star nor a geometric
/// caterpillar.
fn urrutia(p: &SuiteParams) -> Result<VerifyReport> {
    let mut run = SuiteRun::new("urrutia");
    'outer: for n in p.range_or(4..=6) {
        for idx in 0..p.trials {
            let seed = instance_seed(p.seed, n, idx);
            let mut instances = vec![
                ("convex", random_convex(n, seed)?),
                ("general", random_general(n, seed)?),
            ];
            if n >= 4 {
                instances.push(("one-interior", random_one_interior(n, seed)?));
            }
            for (kind, ps) in &instances {
                run.instance(format!("{kind} n={n} seed={seed}"));
                for tree in enumerate_plane_spanning_trees(ps, 9)? {
                    let class = classify_tree(&tree, ps);
                    let blocked = class.is_star || class.is_geometric_caterpillar;
                    let complement = complement_plane_tree(&tree, ps);
                    let consistent = match &complement {
                        Some(c) => {
                            !blocked && c.edges().intersection(tree.edges()).is_empty()
                        }
                        None => blocked,
                    };
                    run.check(consistent, || {
                        json!({
                            "kind": kind, "n": n, "seed": seed,
                            "points": points_json(ps),
                            "tree": pairs(&tree.edge_ids(ps)),
                            "is_star": class.is_star,
                            "is_geometric_caterpillar": class.is_geometric_caterpillar,
                            "complement_found": complement.is_some(),
                            "audit_disjoint_tree_exists": naive
                                ::plane_spanning_trees_by_filter(ps)
                                .iter()
                                .any(|s| s.intersection(tree.edges()).is_empty()),
                        })
                    });
                    if run.failed() {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(run.finish())
}

/// thm5 / thm6: the constructive searches return a verified rainbow plane
/// spanning tree for every surjective colouring at the critical colour
/// count.
fn rainbow_trees(p: &SuiteParams, name: &str, one_interior: bool) -> Result<VerifyReport> {
    let range = if one_interior { p.range_or(4..=7) } else { p.range_or(3..=7) };
    let mut run = SuiteRun::new(name);
    'outer: for n in range {
        for inst in 0..3u64 {
            let seed = instance_seed(p.seed, n, inst);
            let ps = if one_interior {
                random_one_interior(n, seed)?
            } else {
                random_convex(n, seed)?
            };
            let e = ps.edge_count();
            let k = e - n + 2 - usize::from(one_interior);
            run.instance(format!("n={n} seed={seed} colours={k}"));
            for trial in 0..p.trials {
                let c = random_surjective_colouring(
                    e,
                    k,
                    seed.wrapping_add(trial.wrapping_mul(0x9e37_79b9_7f4a_7c15)),
                );
                let outcome = if one_interior {
                    hcn_core::plane_tree::rainbow_tree_one_interior(&ps, &c)
                } else {
                    hcn_core::plane_tree::rainbow_tree_convex(&ps, &c)
                };
                let ok = matches!(
                    &outcome,
                    Ok(t) if naive::is_plane_spanning_tree(&ps, &t.edge_ids(&ps))
                        && c.all_distinct(t.edges())
                );
                run.check(ok, || {
                    json!({
                        "n": n, "seed": seed, "trial": trial,
                        "points": points_json(&ps),
                        "colouring": c.assignment(),
                        "outcome": format!("{:?}", outcome.as_ref().map(PlaneTree::edges)),
                    })
                });
                if run.failed() {
                    break 'outer;
                }
            }
        }
    }
    Ok(run.finish())
}

fn default_matroids() -> Result<Vec<LoadedMatroid>> {
    let mut out = vec![
        io::load_matroid("K4")?,
        io::load_matroid("U_2_4")?,
        io::load_matroid("U_2_5")?,
        io::load_matroid("U_3_5")?,
        io::load_matroid("U_3_6")?,
    ];
    out.push(LoadedMatroid {
        name: "binary 3-column".into(),
        oracle: Box::new(make_linear(Field::GfP(2), &[vec![1, 0], vec![0, 1], vec![1, 1]])?),
        graph: None,
    });
    Ok(out)
}

/// thm7: rainbow_basis returns a genuine basis with pairwise distinct
/// colours for every (m−τ+2)-colouring, exhaustively over canonical
/// colourings or on seeded random ones.
fn rainbow_bases(p: &SuiteParams) -> Result<VerifyReport> {
    let matroids = match &p.matroid {
        Some(selector) => vec![io::load_matroid(selector)?],
        None => default_matroids()?,
    };
    let mut run = SuiteRun::new("thm7");
    'outer: for lm in &matroids {
        let m = &*lm.oracle;
        if m.rank() < 2 {
            bail!("{}: rainbow bases need rank at least 2", lm.name);
        }
        let size = m.ground_size();
        let tau = tau_bases(m, 20)?;
        let k = size - tau + 2;
        if !(1..=size).contains(&k) {
            bail!("{}: colour count {k} is out of range", lm.name);
        }
        // Independent audit set: every claimed basis must reappear here.
        let known: HashSet<BitSet> =
            enumerate_bases(m, 20)?.iter().map(|b| b.elements()).collect();
        let colourings: Vec<Colouring> = if p.exhaustive {
            canonical_colourings(size, k)
        } else {
            (0..p.trials)
                .map(|t| random_surjective_colouring(size, k, instance_seed(p.seed, size, t)))
                .collect()
        };
        run.instance(format!(
            "{} (tau={tau}, colours={k}, {} colourings)",
            lm.name,
            colourings.len()
        ));
        for c in &colourings {
            let outcome = rainbow_basis(m, c, Some(tau));
            let ok = matches!(
                &outcome,
                Ok(b) if known.contains(&b.elements()) && c.all_distinct(b.elements())
            );
            run.check(ok, || {
                json!({
                    "matroid": lm.name,
                    "colouring": c.assignment(),
                    "outcome": format!(
                        "{:?}",
                        outcome.as_ref().map(|b| b.elements().to_vec())
                    ),
                })
            });
            if run.failed() {
                break 'outer;
            }
        }
    }
    Ok(run.finish())
}

/// jiang-west: the spanning-tree hypergraph of the complete graph attains
/// τ = 2n−3 and h_c = C(n−2,2) + 2.
fn complete_graph_values(p: &SuiteParams) -> Result<VerifyReport> {
    let mut run = SuiteRun::new("jiang-west");
    for n in p.range_or(4..=5) {
        if n < 3 {
            bail!("complete-graph values need n >= 3, got {n}");
        }
        let g = GraphSpec::complete(n);
        let m = make_graphic(&g)?;
        let h = basis_hypergraph(&m, 20)?;
        run.instance(format!("K{n} ({} spanning trees)", h.hyperedges().len()));
        let tau = tau_bases(&m, 20)?;
        let expected_tau = 2 * n - 3;
        run.check(tau == expected_tau, || {
            json!({
                "n": n, "tau": tau, "expected": expected_tau,
                "audit_subset_search": naive::min_double_transversal_by_subsets(&h).1,
            })
        });
        if run.failed() {
            break;
        }
        if h.vertex_count() <= p.cap_nu {
            let hc = heterochromatic_number_exact(&h, p.cap_nu)?;
            let expected_hc = (n - 2) * (n - 3) / 2 + 2;
            run.check(hc == expected_hc, || {
                json!({
                    "n": n, "h_c": hc, "expected": expected_hc,
                    "audit_enumeration": (h.vertex_count() <= 8)
                        .then(|| naive::heterochromatic_number_by_enumeration(&h)),
                })
            });
            if run.failed() {
                break;
            }
        }
    }
    Ok(run.finish())
}

fn named_graphs() -> Vec<(&'static str, GraphSpec)> {
    let path = |n: usize| GraphSpec::new(n, (0..n - 1).map(|i| (i, i + 1)).collect()).unwrap();
    let cycle = |n: usize| {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        GraphSpec::new(n, e).unwrap()
    };
    let k23 = GraphSpec::new(5, vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    vec![
        ("P3", path(3)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("K4", GraphSpec::complete(4)),
        ("K5", GraphSpec::complete(5)),
        ("K(2,3)", k23),
        ("star K(1,3)", GraphSpec::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap()),
    ]
}

/// gamma-tau: the smallest edge cut into three components equals the basis
/// transversal number of the cycle matroid.
fn gamma_tau(p: &SuiteParams) -> Result<VerifyReport> {
    let mut run = SuiteRun::new("gamma-tau");
    let check_graph = |run: &mut SuiteRun, label: String, g: &GraphSpec| -> Result<()> {
        run.instance(label.clone());
        let by_cut = gamma(g)?;
        let by_bases = tau_bases(&make_graphic(g)?, 20)?;
        run.check(by_cut == by_bases, || {
            json!({
                "graph": label,
                "edges": g.edges(),
                "gamma": by_cut,
                "tau_bases": by_bases,
                "audit_subset_scan": naive::gamma_by_edge_subsets(g),
            })
        });
        Ok(())
    };
    for (name, g) in named_graphs() {
        check_graph(&mut run, name.to_string(), &g)?;
        if run.failed() {
            return Ok(run.finish());
        }
    }
    'outer: for n in p.range_or(3..=5) {
        for idx in 0..p.trials {
            let seed = instance_seed(p.seed, n, idx);
            let g = random_connected_graph(n, seed)?;
            check_graph(&mut run, format!("random n={n} seed={seed}"), &g)?;
            if run.failed() {
                break 'outer;
            }
        }
    }
    Ok(run.finish())
}

/// bound: on random hypergraphs, the minimum-transversal colouring is
/// rainbow-free (certifying h_c ≥ ν−τ+2) and the partition search agrees
/// with exhaustive enumeration.
fn bound(p: &SuiteParams) -> Result<VerifyReport> {
    let nu_cap = p.cap_nu.min(8);
    let mut run = SuiteRun::new("bound");
    for idx in 0..p.trials {
        let h = random_hypergraph(nu_cap, instance_seed(p.seed, nu_cap, idx));
        let dump = || serde_json::to_value(HypergraphFile::from_hypergraph(&h)).unwrap();
        run.instance(format!(
            "random hypergraph {idx} (nu={}, {} hyperedges)",
            h.vertex_count(),
            h.hyperedges().len()
        ));
        let (dt, tau) = min_double_transversal(&h);
        let c = lower_bound_colouring(&h, &dt);
        let rainbow_free =
            c.colour_count() == h.vertex_count() - tau + 1 && has_rainbow_hyperedge(&h, &c).is_none();
        run.check(rainbow_free, || {
            json!({
                "hypergraph": dump(),
                "transversal": dt.vertices().to_vec(),
                "colouring": c.assignment(),
                "claim": "minimum-transversal colouring is rainbow-free",
            })
        });
        if run.failed() {
            break;
        }
        let hc = heterochromatic_number_exact(&h, p.cap_nu)?;
        let slow = naive::heterochromatic_number_by_enumeration(&h);
        run.check(hc >= h.vertex_count() - tau + 2 && hc == slow, || {
            json!({
                "hypergraph": dump(),
                "tau": tau,
                "h_c_partition_search": hc,
                "h_c_enumeration": slow,
            })
        });
        if run.failed() {
            break;
        }
    }
    Ok(run.finish())
}
