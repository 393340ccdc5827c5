//! JSON documents for complexes, hand-built groupoids, puzzle states and
//! graph connections.
//!
//! ```json
//! {"kind":"simplicial","facets":[[0,1],[1,2],[0,2]]}
//! {"kind":"cubical","dim":2,"cubes":[{"00":0,"10":1,"01":2,"11":3}],"coords":[[0,0],[1,0],[0,1],[1,1]]}
//! {"kind":"groupoid","objects":3,"slots":8,"morphisms":[{"source":0,"target":1,"label":0,"map":[…]}]}
//! ```
//!
//! Character `i` of a corner key is coordinate `i` of the corner.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{CellComplex, ComplexError, CubicalComplex, SimplicialComplex};
use crate::games::LabelledState;
use crate::graphconn::{ConnectionError, ConnectionFile, GraphConnection};
use crate::groupoid::{ElemMorphism, Groupoid, GroupoidError};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error("coordinates: {0}")]
    Coordinates(String),
    #[error("morphism {0} is not a permutation of the slots")]
    BadMorphism(usize),
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        // serde_json appends the position, which is reported separately
        message: match e.to_string().rsplit_once(" at line ") {
            Some((m, _)) => m.to_string(),
            None => e.to_string(),
        },
    })
}

/// One morphism of a hand-built groupoid; `map[slot of source] = slot of
/// target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub source: usize,
    pub target: usize,
    pub label: usize,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComplexFile {
    Simplicial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        facets: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coords: Option<Vec<Vec<i64>>>,
    },
    Cubical {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        dim: usize,
        cubes: Vec<BTreeMap<String, usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coords: Option<Vec<Vec<i64>>>,
    },
    Groupoid {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        objects: usize,
        slots: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        object_names: Vec<String>,
        morphisms: Vec<MorphismEntry>,
    },
}

/// A validated document.
#[derive(Clone, Debug)]
pub enum Loaded {
    Simplicial(SimplicialComplex),
    Cubical(CubicalComplex),
    Groupoid(Groupoid),
}

impl Loaded {
    pub fn complex(&self) -> Option<&CellComplex> {
        match self {
            Loaded::Simplicial(k) => Some(k),
            Loaded::Cubical(k) => Some(k),
            Loaded::Groupoid(_) => None,
        }
    }

    pub fn groupoid(&self) -> Groupoid {
        match self {
            Loaded::Groupoid(g) => g.clone(),
            other => Groupoid::from_complex(other.complex().unwrap()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Simplicial(_) => "simplicial",
            Loaded::Cubical(_) => "cubical",
            Loaded::Groupoid(_) => "groupoid",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Document {
    pub name: Option<String>,
    pub coords: Option<Vec<Vec<i64>>>,
    pub body: Loaded,
}

impl ComplexFile {
    pub fn simplicial(k: &SimplicialComplex, name: Option<&str>) -> Self {
        ComplexFile::Simplicial {
            name: name.map(str::to_string),
            facets: k.facets().to_vec(),
            coords: None,
        }
    }

    pub fn cubical(k: &CubicalComplex, name: Option<&str>, coords: Option<Vec<Vec<i64>>>) -> Self {
        ComplexFile::Cubical {
            name: name.map(str::to_string),
            dim: k.dim(),
            cubes: k.corner_maps(),
            coords,
        }
    }

    pub fn groupoid(g: &Groupoid, name: Option<&str>, object_names: &[&str]) -> Self {
        let morphisms = g
            .morphisms()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i < g.inverse_of(i))
            .map(|(_, m)| MorphismEntry {
                source: m.source,
                target: m.target,
                label: m.label,
                map: m.map.images().to_vec(),
            })
            .collect();
        ComplexFile::Groupoid {
            name: name.map(str::to_string),
            objects: g.object_count(),
            slots: g.slot_count(),
            object_names: object_names.iter().map(|s| s.to_string()).collect(),
            morphisms,
        }
    }

    pub fn load(self) -> Result<Document, IoError> {
        match self {
            ComplexFile::Simplicial {
                name,
                facets,
                coords,
            } => {
                let k = SimplicialComplex::new(facets)?;
                check_coords(&coords, k.vertex_count())?;
                Ok(Document {
                    name,
                    coords,
                    body: Loaded::Simplicial(k),
                })
            }
            ComplexFile::Cubical {
                name,
                dim,
                cubes,
                coords,
            } => {
                let k = CubicalComplex::from_corner_maps(dim, &cubes)?;
                check_coords(&coords, k.vertex_count())?;
                Ok(Document {
                    name,
                    coords,
                    body: Loaded::Cubical(k),
                })
            }
            ComplexFile::Groupoid {
                name,
                objects,
                slots,
                morphisms,
                ..
            } => {
                let gens = morphisms
                    .into_iter()
                    .enumerate()
                    .map(|(i, m)| {
                        Ok(ElemMorphism {
                            source: m.source,
                            target: m.target,
                            label: m.label,
                            map: Perm::from_images(m.map).map_err(|_| IoError::BadMorphism(i))?,
                        })
                    })
                    .collect::<Result<Vec<_>, IoError>>()?;
                Ok(Document {
                    name,
                    coords: None,
                    body: Loaded::Groupoid(Groupoid::from_generators(objects, slots, None, gens)?),
                })
            }
        }
    }
}

fn check_coords(coords: &Option<Vec<Vec<i64>>>, vertices: usize) -> Result<(), IoError> {
    let Some(c) = coords else { return Ok(()) };
    if c.len() != vertices {
        return Err(IoError::Coordinates(format!(
            "{} points for {vertices} vertices",
            c.len()
        )));
    }
    if c.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(IoError::Coordinates("points of different lengths".into()));
    }
    Ok(())
}

pub fn parse_complex_file(text: &str) -> Result<ComplexFile, IoError> {
    parse(text)
}

pub fn parse_document(text: &str) -> Result<Document, IoError> {
    parse_complex_file(text)?.load()
}

pub fn parse_state(text: &str) -> Result<LabelledState, IoError> {
    parse(text)
}

pub fn parse_connection(text: &str) -> Result<GraphConnection, IoError> {
    let file: ConnectionFile = parse(text)?;
    Ok(GraphConnection::from_file(&file)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
