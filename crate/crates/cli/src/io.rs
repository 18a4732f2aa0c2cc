//! File ingestion and selector parsing.

use std::ops::RangeInclusive;
use std::path::Path;

use anyhow::{bail, Context, Result};

use hcn_core::formats::{ColouringFile, HypergraphFile, MatroidFile, PointsFile};
use hcn_core::matroid::{make_graphic, GraphSpec, Matroid};
use hcn_core::{Colouring, Hypergraph, PointSet};

/// A parsed input file; the kind is detected from its JSON fields.
pub enum Input {
    Points(PointSet),
    Hypergraph(Hypergraph),
    Matroid(LoadedMatroid),
}

/// A matroid oracle plus enough context to describe and draw it.
pub struct LoadedMatroid {
    pub name: String,
    pub oracle: Box<dyn Matroid>,
    /// Present for graphic matroids; used for figures and cut numbers.
    pub graph: Option<GraphSpec>,
}

fn read_json(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not valid JSON", path.display()))
}

/// Loads a points, hypergraph, or matroid file, telling them apart by their
/// distinguishing fields (`points`, `nu`, `type`).
pub fn load_input(path: &Path) -> Result<Input> {
    let value = read_json(path)?;
    let keys = value
        .as_object()
        .with_context(|| format!("{}: expected a JSON object", path.display()))?;
    if keys.contains_key("points") {
        let file: PointsFile = serde_json::from_value(value)?;
        return Ok(Input::Points(file.to_point_set()?));
    }
    if keys.contains_key("nu") {
        let file: HypergraphFile = serde_json::from_value(value)?;
        return Ok(Input::Hypergraph(file.to_hypergraph()?));
    }
    if keys.contains_key("type") {
        return Ok(Input::Matroid(matroid_from_file(path, value)?));
    }
    bail!(
        "{}: unrecognised input; expected a \"points\", \"nu\", or \"type\" field",
        path.display()
    );
}

pub fn load_points(path: &Path) -> Result<PointSet> {
    match load_input(path)? {
        Input::Points(ps) => Ok(ps),
        _ => bail!("{}: expected a points file", path.display()),
    }
}

pub fn load_colouring(path: &Path) -> Result<Colouring> {
    let file: ColouringFile = serde_json::from_value(read_json(path)?)?;
    Ok(file.to_colouring()?)
}

fn matroid_from_file(path: &Path, value: serde_json::Value) -> Result<LoadedMatroid> {
    let file: MatroidFile = serde_json::from_value(value)?;
    let oracle = file.to_matroid()?;
    let graph = match file.graph_spec() {
        Some(g) => Some(g?),
        None => None,
    };
    Ok(LoadedMatroid {
        name: path.display().to_string(),
        oracle,
        graph,
    })
}

/// Resolves a matroid selector: `K<n>` for a complete-graph cycle matroid,
/// `U_<r>_<m>` for a uniform matroid, anything else as a file path.
pub fn load_matroid(selector: &str) -> Result<LoadedMatroid> {
    if let Some(n) = selector
        .strip_prefix('K')
        .or_else(|| selector.strip_prefix('k'))
        .and_then(|rest| rest.parse::<usize>().ok())
    {
        let graph = GraphSpec::complete(n);
        return Ok(LoadedMatroid {
            name: format!("graphic K{n}"),
            oracle: Box::new(make_graphic(&graph)?),
            graph: Some(graph),
        });
    }
    let lower = selector.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("u_") {
        if let Some((r, m)) = rest.split_once('_') {
            let (r, m) = (
                r.parse::<usize>().context("uniform selector rank")?,
                m.parse::<usize>().context("uniform selector size")?,
            );
            return Ok(LoadedMatroid {
                name: format!("U({r},{m})"),
                oracle: Box::new(hcn_core::matroid::make_uniform(r, m)?),
                graph: None,
            });
        }
    }
    match load_input(Path::new(selector))? {
        Input::Matroid(m) => Ok(m),
        _ => bail!("{selector}: expected a matroid file"),
    }
}

/// Parses an inclusive size range: `4..7`, or a single size `5`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.parse().with_context(|| format!("bad range start in {text:?}"))?;
        let hi: usize = hi.parse().with_context(|| format!("bad range end in {text:?}"))?;
        if lo > hi {
            bail!("empty range {text:?}");
        }
        return Ok(lo..=hi);
    }
    let n: usize = text.parse().with_context(|| format!("bad size {text:?}"))?;
    Ok(n..=n)
}

pub fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
