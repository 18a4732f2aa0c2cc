//! The non-suite subcommands: analyze, find, random, conjecture-scan.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use hcn_core::formats::{HypergraphFile, PointsFile};
use hcn_core::hypergraph::{heterochromatic_number_exact, min_double_transversal};
use hcn_core::matroid::{
    basis_hypergraph, check_supplied_tau, enumerate_bases, rainbow_basis, tau_bases, verify_axioms,
    MatroidError,
};
use hcn_core::plane_tree::{
    conjecture_scan, enumerate_plane_spanning_trees, plane_tree_hypergraph, rainbow_tree_convex,
    rainbow_tree_one_interior,
};
use hcn_core::random::{random_convex, random_general, random_one_interior};
use hcn_core::{Colouring, Hypergraph, PointSet};

use crate::io::{self, LoadedMatroid};
use crate::svg;
use crate::{Ctx, PointKind};

/// Largest point count for which analyze enumerates trees outright.
const ANALYZE_TREE_CAP: usize = 9;
/// Largest point count for which analyze solves the transversal number.
const ANALYZE_TAU_CAP: usize = 8;
/// Ground-set cap handed to the matroid solvers.
const GROUND_CAP: usize = 20;

/// Ordered key–value report rendered as text lines or one JSON object.
struct Report {
    lines: Vec<String>,
    json: serde_json::Map<String, Value>,
}

impl Report {
    fn new(kind: &str) -> Report {
        let mut r = Report {
            lines: Vec::new(),
            json: serde_json::Map::new(),
        };
        r.json.insert("kind".into(), json!(kind));
        r
    }

    fn put(&mut self, key: &str, shown: impl std::fmt::Display, value: Value) {
        self.lines.push(format!("{key}: {shown}"));
        self.json.insert(key.replace(' ', "_"), value);
    }

    fn emit(self, ctx: &Ctx) {
        if ctx.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&Value::Object(self.json))
                    .expect("reports serialize")
            );
        } else {
            for line in &self.lines {
                println!("{line}");
            }
        }
    }
}

pub fn cmd_analyze(
    ctx: &Ctx,
    input: &Path,
    emit_hypergraph: Option<&Path>,
    check_axioms: bool,
) -> Result<bool> {
    match io::load_input(input)? {
        io::Input::Points(ps) => analyze_points(ctx, &ps, emit_hypergraph),
        io::Input::Hypergraph(h) => analyze_hypergraph(ctx, &h, emit_hypergraph),
        io::Input::Matroid(m) => analyze_matroid(ctx, &m, emit_hypergraph, check_axioms),
    }
}

fn write_hypergraph(path: &Path, h: &Hypergraph) -> Result<()> {
    let text = serde_json::to_string_pretty(&HypergraphFile::from_hypergraph(h))?;
    io::write_text(Some(path), &text)
}

fn analyze_points(ctx: &Ctx, ps: &PointSet, emit: Option<&Path>) -> Result<bool> {
    let n = ps.len();
    let i = ps.interior_count();
    let mut r = Report::new("points");
    r.put("points", n, json!(n));
    r.put("hull", format!("{:?}", ps.hull()), json!(ps.hull()));
    r.put("interior points", i, json!(i));
    if i <= 1 {
        let predicted = n * (n - 1) / 2 - n + 2 - i;
        r.put("predicted heterochromatic number", predicted, json!(predicted));
    }
    if n <= ANALYZE_TREE_CAP {
        let trees = enumerate_plane_spanning_trees(ps, ANALYZE_TREE_CAP)?;
        r.put("plane spanning trees", trees.len(), json!(trees.len()));
        let h = plane_tree_hypergraph(ps, ANALYZE_TREE_CAP)?;
        if n <= ANALYZE_TAU_CAP {
            let (t, tau) = min_double_transversal(&h);
            let witness: Vec<(usize, usize)> =
                t.vertices().iter().map(|e| ps.edge_at(e).endpoints()).collect();
            r.put("transversal number", tau, json!(tau));
            r.put("transversal witness", format!("{witness:?}"), json!(witness));
        }
        if h.vertex_count() <= ctx.cap_nu {
            let hc = heterochromatic_number_exact(&h, ctx.cap_nu)?;
            r.put("exact heterochromatic number", hc, json!(hc));
        }
        if let Some(path) = emit {
            write_hypergraph(path, &h)?;
        }
    } else if emit.is_some() {
        bail!("emitting the tree hypergraph needs at most {ANALYZE_TREE_CAP} points, got {n}");
    }
    if let Some(path) = &ctx.svg {
        std::fs::write(path, svg::point_set_svg(ps, None))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    r.emit(ctx);
    Ok(true)
}

fn analyze_hypergraph(ctx: &Ctx, h: &Hypergraph, emit: Option<&Path>) -> Result<bool> {
    let mut r = Report::new("hypergraph");
    r.put("vertices", h.vertex_count(), json!(h.vertex_count()));
    r.put("hyperedges", h.hyperedges().len(), json!(h.hyperedges().len()));
    let (t, tau) = min_double_transversal(h);
    r.put("transversal number", tau, json!(tau));
    r.put(
        "transversal witness",
        format!("{:?}", t.vertices().to_vec()),
        json!(t.vertices().to_vec()),
    );
    let bound = h.vertex_count() - tau + 2;
    r.put("heterochromatic lower bound", bound, json!(bound));
    if h.vertex_count() <= ctx.cap_nu {
        let hc = heterochromatic_number_exact(h, ctx.cap_nu)?;
        r.put("exact heterochromatic number", hc, json!(hc));
    }
    if let Some(path) = emit {
        write_hypergraph(path, h)?;
    }
    if ctx.svg.is_some() {
        log::warn!("hypergraph inputs have no geometry; skipping the figure");
    }
    r.emit(ctx);
    Ok(true)
}

fn analyze_matroid(
    ctx: &Ctx,
    m: &LoadedMatroid,
    emit: Option<&Path>,
    check_axioms: bool,
) -> Result<bool> {
    let oracle = &*m.oracle;
    let mut r = Report::new("matroid");
    r.put("matroid", &m.name, json!(m.name));
    r.put("ground size", oracle.ground_size(), json!(oracle.ground_size()));
    r.put("rank", oracle.rank(), json!(oracle.rank()));
    if check_axioms {
        verify_axioms(oracle)?;
        r.put("axiom check", "passed", json!("passed"));
    }
    let bases = enumerate_bases(oracle, GROUND_CAP)?;
    r.put("bases", bases.len(), json!(bases.len()));
    let tau = tau_bases(oracle, GROUND_CAP)?;
    r.put("transversal number", tau, json!(tau));
    let expected = oracle.ground_size() - tau + 2;
    r.put("predicted heterochromatic number", expected, json!(expected));
    let h = basis_hypergraph(oracle, GROUND_CAP)?;
    if h.vertex_count() <= ctx.cap_nu {
        let hc = heterochromatic_number_exact(&h, ctx.cap_nu)?;
        r.put("exact heterochromatic number", hc, json!(hc));
    }
    if let Some(path) = emit {
        write_hypergraph(path, &h)?;
    }
    if let Some(path) = &ctx.svg {
        let all_one = Colouring::new(vec![1; oracle.ground_size()])
            .expect("constant assignments are valid colourings");
        let figure = match &m.graph {
            Some(g) => svg::graph_svg(g, &[], &all_one),
            None => svg::ground_set_svg(oracle.ground_size(), &[], &all_one),
        };
        std::fs::write(path, figure).with_context(|| format!("cannot write {}", path.display()))?;
    }
    r.emit(ctx);
    Ok(true)
}

pub fn cmd_find_tree(ctx: &Ctx, points: &Path, colours: &Path) -> Result<bool> {
    let ps = io::load_points(points)?;
    let c = io::load_colouring(colours)?;
    let tree = match ps.interior_count() {
        0 => rainbow_tree_convex(&ps, &c)?,
        1 => rainbow_tree_one_interior(&ps, &c)?,
        i => bail!("tree search needs at most one interior point, this set has {i}"),
    };
    let indices: Vec<usize> = tree.edges().iter().collect();
    let mut r = Report::new("tree");
    r.put("edges", indices.len(), json!(indices.len()));
    let endpoint_pairs: Vec<(usize, usize)> =
        indices.iter().map(|&e| ps.edge_at(e).endpoints()).collect();
    let witness_colours: Vec<u32> = indices.iter().map(|&e| c.colour_of(e)).collect();
    for (k, &e) in indices.iter().enumerate() {
        r.lines.push(format!(
            "  edge {e} = {:?}  colour {}",
            endpoint_pairs[k], witness_colours[k]
        ));
    }
    r.json.insert("edge_indices".into(), json!(indices));
    r.json.insert("edges_as_pairs".into(), json!(endpoint_pairs));
    r.json.insert("colours".into(), json!(witness_colours));
    if let Some(path) = &ctx.svg {
        std::fs::write(path, svg::point_set_svg(&ps, Some((&indices, &c))))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    r.emit(ctx);
    Ok(true)
}

pub fn cmd_find_basis(
    ctx: &Ctx,
    selector: &str,
    colours: &Path,
    supplied_tau: Option<usize>,
) -> Result<bool> {
    let m = io::load_matroid(selector)?;
    let oracle = &*m.oracle;
    let c = io::load_colouring(colours)?;
    if let Some(supplied) = supplied_tau {
        match check_supplied_tau(oracle, supplied, GROUND_CAP) {
            Ok(()) => {}
            Err(MatroidError::TauMismatch { supplied, computed }) => {
                println!(
                    "supplied transversal number {supplied} refuted: computed {computed}"
                );
                return Ok(false);
            }
            Err(e) => return Err(e.into()),
        }
    }
    let basis = rainbow_basis(oracle, &c, supplied_tau)?;
    let elements: Vec<usize> = basis.elements().iter().collect();
    let mut r = Report::new("basis");
    r.put("matroid", &m.name, json!(m.name));
    r.put("elements", elements.len(), json!(elements.len()));
    for &e in &elements {
        let shown = match &m.graph {
            Some(g) => format!("  element {e} = {:?}  colour {}", g.edges()[e], c.colour_of(e)),
            None => format!("  element {e}  colour {}", c.colour_of(e)),
        };
        r.lines.push(shown);
    }
    r.json.insert("element_indices".into(), json!(elements));
    r.json.insert(
        "colours".into(),
        json!(elements.iter().map(|&e| c.colour_of(e)).collect::<Vec<u32>>()),
    );
    if let Some(path) = &ctx.svg {
        let figure = match &m.graph {
            Some(g) => svg::graph_svg(g, &elements, &c),
            None => svg::ground_set_svg(oracle.ground_size(), &elements, &c),
        };
        std::fs::write(path, figure).with_context(|| format!("cannot write {}", path.display()))?;
    }
    r.emit(ctx);
    Ok(true)
}

pub fn cmd_random(ctx: &Ctx, kind: PointKind, n: usize, output: Option<&Path>) -> Result<bool> {
    let ps = match kind {
        PointKind::Convex => random_convex(n, ctx.seed)?,
        PointKind::OneInterior => random_one_interior(n, ctx.seed)?,
        PointKind::General => random_general(n, ctx.seed)?,
    };
    let text = serde_json::to_string_pretty(&PointsFile::from_point_set(&ps))?;
    io::write_text(output, &text)?;
    if let Some(path) = &ctx.svg {
        std::fs::write(path, svg::point_set_svg(&ps, None))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(true)
}

pub fn cmd_conjecture_scan(ctx: &Ctx, input: &Path, budget: u64) -> Result<bool> {
    let ps = io::load_points(input)?;
    let report = conjecture_scan(&ps, budget)?;
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!(
            "n={}, interior={}, plane spanning trees={}",
            report.n, report.interior, report.tree_count
        );
        println!("conjectured transversal bound n + i = {}", report.bound);
        match (report.tau, &report.witness) {
            (Some(tau), Some(witness)) => {
                println!("transversal number = {tau}, witness {witness:?}")
            }
            _ => println!("transversal search exhausted its {budget}-node budget"),
        }
        match report.holds {
            Some(true) => println!("bound holds: yes"),
            Some(false) => println!("bound holds: NO — counterexample instance"),
            None => println!("bound holds: inconclusive"),
        }
    }
    Ok(report.holds != Some(false))
}
