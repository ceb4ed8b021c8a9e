//! JSON files for complexes and facet orders.
//!
//! A complex is `{"ground": N | [v, ...], "facets": [[v, ...], ...],
//! "coords": [[c, r], ...]}` with 0-based vertex ids; `ground: N` stands for
//! `0..N`, and `coords` (optional) lists the 1-based square of each ground
//! vertex in ground order. Output is compact and canonically ordered, so
//! equal complexes serialize to equal bytes. `"facets": []` is the void
//! complex and `"facets": [[]]` the complex `{∅}`.

use serde::{Deserialize, Serialize};

use crate::board::BoardSpec;
use crate::complex::{Simplex, SimplicialComplex, Square, Vertex};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ground {
    Count(u32),
    List(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub ground: Ground,
    pub facets: Vec<Simplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[u32; 2]>>,
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let g = k.ground();
        let contiguous = g.iter().enumerate().all(|(i, &v)| v as usize == i);
        let ground = if contiguous { Ground::Count(g.len() as u32) } else { Ground::List(g.to_vec()) };
        let coords = k.coords().map(|cs| cs.iter().map(|s| [s.col, s.row]).collect());
        ComplexFile { ground, facets: k.facets().to_vec(), coords }
    }

    pub fn into_complex(self) -> Result<SimplicialComplex> {
        let ground: Vec<Vertex> = match self.ground {
            Ground::Count(n) => (0..n).collect(),
            Ground::List(list) => list,
        };
        let k = SimplicialComplex::with_ground(ground, self.facets)?;
        match self.coords {
            Some(cs) => k.with_coords(cs.into_iter().map(|[c, r]| Square::new(c, r)).collect()),
            None => Ok(k),
        }
    }
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexFile::from_complex(k)).expect("complex files always serialize")
}

pub fn complex_from_json(s: &str) -> Result<SimplicialComplex> {
    serde_json::from_str::<ComplexFile>(s)?.into_complex()
}

/// A facet order, optionally with the board it was built for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub board: Option<BoardSpec>,
    pub facets: Vec<Simplex>,
}

pub fn order_to_json(order: &OrderFile) -> String {
    serde_json::to_string(order).expect("order files always serialize")
}

pub fn order_from_json(s: &str) -> Result<OrderFile> {
    Ok(serde_json::from_str(s)?)
}
