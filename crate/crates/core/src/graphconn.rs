//! Connections on regular graphs.
//!
//! `Star(x)` is the set of oriented edges leaving `x`, indexed by target
//! vertex in increasing order. A connection assigns to each oriented edge
//! `(x, y)` a bijection `∇_(x,y) : Star(x) → Star(y)` with
//! `∇_(x,y)(x, y) = (y, x)` and `∇_(y,x) = ∇_(x,y)⁻¹`. Vertices as objects
//! and these bijections as morphisms form a groupoid whose holonomy acts on
//! `Star(base)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::groupoid::{ElemMorphism, Groupoid};
use crate::holonomy::{holonomy_group, HolonomyError, HolonomyResult};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectionError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("connection is invalid on edge {edge:?}: {axiom}")]
    InvalidConnection { edge: (usize, usize), axiom: Axiom },
    #[error("graph is not connected")]
    NotConnected,
    #[error("bad connection table: {0}")]
    BadTable(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which condition a table entry breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// the table is not a bijection between the two stars
    Bijection,
    /// `∇_(x,y)(x, y) ≠ (y, x)`
    Reflection,
    /// `∇_(y,x) ≠ ∇_(x,y)⁻¹`
    Inverse,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axiom::Bijection => "not a bijection of stars",
            Axiom::Reflection => "(x,y) is not sent to (y,x)",
            Axiom::Inverse => "reverse edge is not the inverse",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphConnection {
    graph: Graph,
    /// `table[(x, y)][i] = j`: the `i`-th edge of `Star(x)` goes to the
    /// `j`-th edge of `Star(y)`; entries may be invalid until validated
    table: BTreeMap<(usize, usize), Vec<usize>>,
}

impl GraphConnection {
    /// A connection from explicit tables in star-position form.
    pub fn from_positions(graph: Graph, table: BTreeMap<(usize, usize), Vec<usize>>) -> Self {
        GraphConnection { graph, table }
    }

    /// Removes `y` from `Star(x)` and `x` from `Star(y)` and matches the
    /// rest in increasing order.
    pub fn order_preserving(graph: &Graph) -> Result<Self, ConnectionError> {
        Self::shifted(graph, 0)
    }

    /// Like [`GraphConnection::order_preserving`], but for `x < y` the
    /// remaining edges are matched after a cyclic shift by `shift`; the
    /// reverse edges get the inverse tables.
    pub fn rotation(graph: &Graph, shift: usize) -> Result<Self, ConnectionError> {
        Self::shifted(graph, shift)
    }

    fn shifted(graph: &Graph, shift: usize) -> Result<Self, ConnectionError> {
        let d = graph.regularity().ok_or(ConnectionError::NotRegular)?;
        let mut table = BTreeMap::new();
        for &(x, y) in graph.edges() {
            let (px, py) = (position(graph, x, y), position(graph, y, x));
            let rest_x: Vec<usize> = (0..d).filter(|&i| i != px).collect();
            let rest_y: Vec<usize> = (0..d).filter(|&j| j != py).collect();
            let mut forward = vec![0; d];
            forward[px] = py;
            for (k, &i) in rest_x.iter().enumerate() {
                forward[i] = rest_y[(k + shift) % rest_y.len().max(1)];
            }
            let mut backward = vec![0; d];
            for (i, &j) in forward.iter().enumerate() {
                backward[j] = i;
            }
            table.insert((x, y), forward);
            table.insert((y, x), backward);
        }
        Ok(GraphConnection {
            graph: graph.clone(),
            table,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Star of `x` as target vertices, in index order.
    pub fn star(&self, x: usize) -> &[usize] {
        self.graph.neighbors(x)
    }

    pub fn table(&self, x: usize, y: usize) -> Option<&[usize]> {
        self.table.get(&(x, y)).map(Vec::as_slice)
    }

    /// `∇_(x,y)` applied to the oriented edge `(x, z)`, as the target `w` of
    /// the image `(y, w)`.
    pub fn apply(&self, x: usize, y: usize, z: usize) -> Option<usize> {
        let i = self.graph.neighbors(x).binary_search(&z).ok()?;
        let j = *self.table.get(&(x, y))?.get(i)?;
        self.graph.neighbors(y).get(j).copied()
    }

    /// Overwrites one table entry; used to build invalid connections.
    pub fn set_entry(&mut self, x: usize, y: usize, i: usize, j: usize) {
        if let Some(t) = self.table.get_mut(&(x, y)) {
            if i < t.len() {
                t[i] = j;
            }
        }
    }

    pub fn from_file(file: &ConnectionFile) -> Result<Self, ConnectionError> {
        let n = file
            .edges
            .iter()
            .map(|&(a, b)| a.max(b) + 1)
            .max()
            .unwrap_or(0);
        let graph = Graph::new(n, file.edges.iter().copied())?;
        let bad = |s: String| ConnectionError::BadTable(s);
        let mut table = BTreeMap::new();
        for (key, entries) in &file.nabla {
            let (x, y) = parse_pair(key).ok_or_else(|| bad(format!("bad edge key {key:?}")))?;
            if x >= n || !graph.has_edge(x, y) {
                return Err(bad(format!("{key:?} is not an edge")));
            }
            let mut images = vec![usize::MAX; graph.degree(x)];
            for (from, to) in entries {
                let (a, z) = parse_pair(from).ok_or_else(|| bad(format!("bad star key {from:?}")))?;
                let (b, w) = parse_pair(to).ok_or_else(|| bad(format!("bad star value {to:?}")))?;
                if a != x || b != y {
                    return Err(bad(format!("{from:?} -> {to:?} does not go from Star({x}) to Star({y})")));
                }
                let i = graph.neighbors(x).binary_search(&z).map_err(|_| bad(format!("{from:?} is not in Star({x})")))?;
                let j = graph.neighbors(y).binary_search(&w).map_err(|_| bad(format!("{to:?} is not in Star({y})")))?;
                images[i] = j;
            }
            table.insert((x, y), images);
        }
        Ok(GraphConnection { graph, table })
    }

    pub fn to_file(&self) -> ConnectionFile {
        let nabla = self
            .table
            .iter()
            .map(|(&(x, y), images)| {
                let entries = images
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| j < self.graph.degree(y))
                    .map(|(i, &j)| {
                        (
                            format!("{x},{}", self.graph.neighbors(x)[i]),
                            format!("{y},{}", self.graph.neighbors(y)[j]),
                        )
                    })
                    .collect();
                (format!("{x},{y}"), entries)
            })
            .collect();
        ConnectionFile {
            edges: self.graph.edges().to_vec(),
            nabla,
        }
    }

    /// Vertex groupoid with one morphism per edge `x < y`, labelled by edge
    /// index; the connection must be valid.
    pub fn groupoid(&self) -> Result<Groupoid, ConnectionError> {
        let check = validate_connection(self)?;
        if let Some(v) = check.violation {
            return Err(ConnectionError::InvalidConnection {
                edge: v.edge,
                axiom: v.axiom,
            });
        }
        let d = self.graph.regularity().unwrap();
        let morphisms = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .map(|(label, &(x, y))| ElemMorphism {
                source: x,
                target: y,
                label,
                map: Perm::from_images(self.table[&(x, y)].clone()).unwrap(),
            })
            .collect();
        Ok(Groupoid::from_generators(self.graph.vertex_count(), d, None, morphisms).unwrap())
    }
}

fn position(g: &Graph, x: usize, y: usize) -> usize {
    g.neighbors(x).binary_search(&y).expect("y is a neighbor of x")
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// On-disk form: `{"edges":[[x,y],…],"nabla":{"x,y":{"x,z":"y,w",…},…}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionFile {
    pub edges: Vec<(usize, usize)>,
    pub nabla: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub edge: (usize, usize),
    pub axiom: Axiom,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionCheck {
    pub valid: bool,
    /// first failing oriented edge, in lexicographic order
    pub violation: Option<Violation>,
}

pub fn validate_connection(c: &GraphConnection) -> Result<ConnectionCheck, ConnectionError> {
    let g = c.graph();
    let d = g.regularity().ok_or(ConnectionError::NotRegular)?;
    let mut oriented: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .flat_map(|&(x, y)| [(x, y), (y, x)])
        .collect();
    oriented.sort_unstable();
    let fail = |edge, axiom| {
        Ok(ConnectionCheck {
            valid: false,
            violation: Some(Violation { edge, axiom }),
        })
    };
    for &(x, y) in &oriented {
        let Some(t) = c.table(x, y) else {
            return fail((x, y), Axiom::Bijection);
        };
        let mut hit = vec![false; d];
        if t.len() != d || t.iter().any(|&j| j >= d || std::mem::replace(&mut hit[j], true)) {
            return fail((x, y), Axiom::Bijection);
        }
        if t[position(g, x, y)] != position(g, y, x) {
            return fail((x, y), Axiom::Reflection);
        }
    }
    for &(x, y) in &oriented {
        let (t, back) = (c.table(x, y).unwrap(), c.table(y, x).unwrap());
        if (0..d).any(|i| back[t[i]] != i) {
            return fail((x, y), Axiom::Inverse);
        }
    }
    if c.table.len() != oriented.len() {
        let extra = c.table.keys().find(|&&(x, y)| !g.has_edge(x, y)).copied().unwrap();
        return fail(extra, Axiom::Bijection);
    }
    Ok(ConnectionCheck {
        valid: true,
        violation: None,
    })
}

/// Holonomy of a valid connection on `Star(base)`.
pub fn connection_holonomy(
    c: &GraphConnection,
    base: usize,
) -> Result<HolonomyResult, ConnectionError> {
    let g = c.groupoid()?;
    holonomy_group(&g, base).map_err(|e| match e {
        HolonomyError::NotConnected { .. } => ConnectionError::NotConnected,
        other => ConnectionError::BadTable(other.to_string()),
    })
}
