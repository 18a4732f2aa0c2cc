//! JSON interchange formats shared with the command-line tool.
//!
//! Each `*File` struct mirrors one on-disk document and converts into the
//! corresponding validated core type.  Deserialization is plain serde; all
//! semantic validation (general position, surjectivity, matroid axioms on
//! parameters) happens in the conversion step so that error messages carry
//! the offending indices.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::bitset::MAX_UNIVERSE;
use crate::geom::{GeomError, PointSet};
use crate::hypergraph::{Colouring, ColouringError, Hypergraph, HypergraphError};
use crate::matroid::{
    make_graphic, make_linear, make_uniform, Field, GraphSpec, Matroid, MatroidError,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("unknown field {0:?}: expected \"rational\" or \"gf(p)\" with a prime p")]
    UnknownField(String),
}

/// `{"points": [[x, y], ...]}` with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsFile {
    pub points: Vec<(i64, i64)>,
}

impl PointsFile {
    pub fn from_point_set(ps: &PointSet) -> PointsFile {
        PointsFile {
            points: ps.points().iter().map(|p| (p.x, p.y)).collect(),
        }
    }

    pub fn to_point_set(&self) -> Result<PointSet, GeomError> {
        PointSet::build(&self.points)
    }
}

/// `{"colours": [c, ...]}` — one positive colour id per vertex, aligned to
/// the lexicographic edge order when colouring a point set's edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringFile {
    pub colours: Vec<u32>,
}

impl ColouringFile {
    pub fn from_colouring(c: &Colouring) -> ColouringFile {
        ColouringFile {
            colours: c.assignment().to_vec(),
        }
    }

    pub fn to_colouring(&self) -> Result<Colouring, ColouringError> {
        Colouring::new(self.colours.clone())
    }
}

/// `{"nu": n, "edges": [[v, ...], ...]}` with 0-based vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub nu: usize,
    pub edges: Vec<Vec<usize>>,
}

impl HypergraphFile {
    pub fn from_hypergraph(h: &Hypergraph) -> HypergraphFile {
        HypergraphFile {
            nu: h.vertex_count(),
            edges: h.hyperedges().iter().map(|e| e.to_vec()).collect(),
        }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph, HypergraphError> {
        if self.nu > MAX_UNIVERSE {
            return Err(HypergraphError::TooManyVertices(self.nu));
        }
        let mut sets = Vec::with_capacity(self.edges.len());
        for (i, edge) in self.edges.iter().enumerate() {
            let mut set = BitSet::EMPTY;
            for &v in edge {
                if v >= self.nu {
                    return Err(HypergraphError::VertexOutOfRange {
                        edge: i,
                        vertex: v,
                        nu: self.nu,
                    });
                }
                set.insert(v);
            }
            sets.push(set);
        }
        Hypergraph::new(self.nu, sets)
    }
}

/// Tagged matroid description:
/// `{"type":"graphic","vertices":n,"edges":[[u,v],...]}`,
/// `{"type":"uniform","r":r,"m":m}`, or
/// `{"type":"linear","field":"gf(p)"|"rational","columns":[[..],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidFile {
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        r: usize,
        m: usize,
    },
    Linear {
        field: String,
        columns: Vec<Vec<i64>>,
    },
}

impl MatroidFile {
    pub fn to_matroid(&self) -> Result<Box<dyn Matroid>, FormatError> {
        Ok(match self {
            MatroidFile::Graphic { vertices, edges } => {
                let spec = GraphSpec::new(*vertices, edges.clone())?;
                Box::new(make_graphic(&spec)?)
            }
            MatroidFile::Uniform { r, m } => Box::new(make_uniform(*r, *m)?),
            MatroidFile::Linear { field, columns } => {
                Box::new(make_linear(parse_field(field)?, columns)?)
            }
        })
    }

    /// The underlying graph for graphic descriptions, used for drawing and
    /// for the cut invariant.
    pub fn graph_spec(&self) -> Option<Result<GraphSpec, MatroidError>> {
        match self {
            MatroidFile::Graphic { vertices, edges } => {
                Some(GraphSpec::new(*vertices, edges.clone()))
            }
            _ => None,
        }
    }
}

fn parse_field(name: &str) -> Result<Field, FormatError> {
    if name == "rational" {
        return Ok(Field::Rational);
    }
    if let Some(body) = name.strip_prefix("gf(").and_then(|rest| rest.strip_suffix(')')) {
        if let Ok(p) = body.parse::<u64>() {
            return Ok(Field::GfP(p));
        }
    }
    Err(FormatError::UnknownField(name.to_string()))
}
