//! JSON forms of the combinatorial inputs.
//!
//! ```json
//! {"r": 3, "facets": [[1, 2], [2, 3]]}
//! {"r": 3, "edges": [[1, 2], [2, 3]]}
//! {"r": 3, "generators": [[1, 1, 0], [0, 2, 1]]}
//! ```

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Graph, Hypergraph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub r: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgesJson {
    pub r: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub r: usize,
    pub generators: Vec<Vec<u32>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(j: ComplexJson) -> Result<Self> {
        SimplicialComplex::from_lists(j.r, &j.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> Self {
        ComplexJson {
            r: c.r(),
            facets: c.facet_lists(),
        }
    }
}

impl TryFrom<EdgesJson> for Graph {
    type Error = Error;
    fn try_from(j: EdgesJson) -> Result<Self> {
        Graph::from_lists(j.r, &j.edges)
    }
}

impl From<Graph> for EdgesJson {
    fn from(g: Graph) -> Self {
        EdgesJson {
            r: g.r(),
            edges: g.edge_lists(),
        }
    }
}

impl TryFrom<EdgesJson> for Hypergraph {
    type Error = Error;
    fn try_from(j: EdgesJson) -> Result<Self> {
        Hypergraph::from_lists(j.r, &j.edges)
    }
}

impl From<Hypergraph> for EdgesJson {
    fn from(h: Hypergraph) -> Self {
        EdgesJson {
            r: h.r(),
            edges: h.edge_lists(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;
    fn try_from(j: IdealJson) -> Result<Self> {
        MonomialIdeal::new(j.r, j.generators)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(i: MonomialIdeal) -> Self {
        IdealJson {
            r: i.r(),
            generators: i.generators().to_vec(),
        }
    }
}

/// Parses JSON; syntax and type errors report their line and column.
pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("malformed input: {e}")))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    from_json_str(&text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("in-memory values always serialize")
}
