//! Two-coloring obstructions for cubical complexes, and colorings obtained
//! by transporting a base cell's coloring through the flip groupoid.
//!
//! `NaCl(K)` is 0 iff the 1-skeleton is bipartite. `I(K)` is 0 iff every
//! holonomy element, read as a signed permutation of the cube directions,
//! has an even number of sign changes. A proper 2-coloring restricts to the
//! corner-parity coloring on each cube, and flips carry it along, so
//! `I(K) ≤ NaCl(K)` always.

use serde::Serialize;
use thiserror::Error;

use crate::complex::{CellComplex, CellShape, ComplexError, CubicalComplex, SimplicialComplex};
use crate::groupoid::Groupoid;
use crate::holonomy::{component_holonomy, holonomy_group, HolonomyError, SpanningTree};
use crate::perm::{signed_parity, SignedPerm};

/// `NaCl(K)` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nacl {
    pub value: u8,
    /// proper 2-coloring of the vertices when `value == 0`
    pub coloring: Option<Vec<u8>>,
    /// closed walk of odd length when `value == 1`
    pub odd_cycle: Option<Vec<usize>>,
}

pub fn nacl(k: &CellComplex) -> Nacl {
    match k.one_skeleton().two_coloring() {
        Ok(coloring) => Nacl {
            value: 0,
            coloring: Some(coloring),
            odd_cycle: None,
        },
        Err(cycle) => Nacl {
            value: 1,
            coloring: None,
            odd_cycle: Some(cycle),
        },
    }
}

/// A holonomy loop whose signed permutation has an odd number of sign
/// changes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddLoop {
    pub base: usize,
    /// alternating `[facet, ridge, facet, …]`
    pub path: Vec<usize>,
    pub signed: SignedPerm,
}

/// `I(K)` with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IInvariant {
    pub value: u8,
    pub witness: Option<OddLoop>,
}

/// Evaluated on every strong component separately; the value is 1 as soon
/// as one component carries odd holonomy.
pub fn i_invariant(k: &CubicalComplex) -> IInvariant {
    let g = Groupoid::from_complex(k);
    let components = g.components();
    let mut seen = vec![false; components.iter().max().map_or(0, |&c| c + 1)];
    for base in 0..g.object_count() {
        if std::mem::replace(&mut seen[components[base]], true) {
            continue;
        }
        let h = component_holonomy(&g, base).expect("base exists");
        let signed = h.signed_generators().expect("cube flips act by signed permutations");
        if let Some(i) = signed.iter().position(|s| signed_parity(s) == 1) {
            return IInvariant {
                value: 1,
                witness: Some(OddLoop {
                    base,
                    path: h.loop_alternating(&g, i),
                    signed: signed[i].clone(),
                }),
            };
        }
    }
    IInvariant {
        value: 0,
        witness: None,
    }
}

/// Every vertex star is connected through flips across ridges containing
/// the vertex.
pub fn locally_strongly_connected(k: &CellComplex) -> bool {
    non_locally_connected_vertex(k).is_none()
}

fn non_locally_connected_vertex(k: &CellComplex) -> Option<usize> {
    let dual = k.facet_adjacency();
    (0..k.vertex_count()).find(|&v| {
        let star = k.star(v);
        let mut reached = vec![star[0]];
        let mut stack = vec![star[0]];
        while let Some(x) = stack.pop() {
            for &(e, y) in dual.incident(x) {
                let ridge = k.ridge(dual.edges()[e].ridge);
                if ridge.binary_search(&v).is_ok() && !reached.contains(&y) {
                    reached.push(y);
                    stack.push(y);
                }
            }
        }
        reached.len() != star.len()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub i: u8,
    pub nacl: u8,
    pub equal: bool,
    pub strongly_connected: bool,
    pub locally_strongly_connected: bool,
    pub witness_odd_cycle: Option<Vec<usize>>,
    pub witness_odd_loop: Option<OddLoop>,
}

impl InvariantRecord {
    /// Both connectivity hypotheses under which the invariants must agree.
    pub fn hypotheses_hold(&self) -> bool {
        self.strongly_connected && self.locally_strongly_connected
    }
}

pub fn compare_invariants(k: &CubicalComplex) -> InvariantRecord {
    let i = i_invariant(k);
    let n = nacl(k);
    InvariantRecord {
        i: i.value,
        nacl: n.value,
        equal: i.value == n.value,
        strongly_connected: k.is_strongly_connected(),
        locally_strongly_connected: locally_strongly_connected(k),
        witness_odd_cycle: n.odd_cycle,
        witness_odd_loop: i.witness,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("cannot identify a vertex with itself")]
    SameVertex,
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentVertices(usize, usize),
    #[error("vertices {u} and {v} both lie in facet {facet}")]
    SharedCell { u: usize, v: usize, facet: usize },
    #[error("identified complex is invalid: {0}")]
    Invalid(#[from] ComplexError),
}

/// `K / u ≈ v`: `v` is merged into `u` and vertex ids above `v` shift down
/// by one. Facet order and slot layout are kept, so the flip structure is
/// unchanged wherever the result is valid.
pub fn quotient_identify(k: &CellComplex, u: usize, v: usize) -> Result<CellComplex, QuotientError> {
    let n = k.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(QuotientError::NoSuchVertex(w));
        }
    }
    if u == v {
        return Err(QuotientError::SameVertex);
    }
    if k.one_skeleton().has_edge(u, v) {
        return Err(QuotientError::AdjacentVertices(u, v));
    }
    if let Some(facet) = (0..k.facet_count())
        .find(|&f| k.facet(f).contains(&u) && k.facet(f).contains(&v))
    {
        return Err(QuotientError::SharedCell { u, v, facet });
    }
    let rename = |w: usize| {
        let w = if w == v { u } else { w };
        if w > v {
            w - 1
        } else {
            w
        }
    };
    let facets: Vec<Vec<usize>> = k
        .facets()
        .iter()
        .map(|f| f.iter().map(|&w| rename(w)).collect())
        .collect();
    Ok(match k.shape() {
        CellShape::Simplex(_) => SimplicialComplex::new(facets)?.into_inner(),
        CellShape::Cube(d) => CubicalComplex::new(d, facets)?.into_inner(),
    })
}

/// How integer points are read when coloring by parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityForm {
    /// `±1` sign vectors: parity of the number of `−1` entries
    Zonotope,
    /// lattice points: parity of the coordinate sum
    Lattice,
}

pub fn lattice_parity_coloring(points: &[Vec<i64>], form: ParityForm) -> Vec<u8> {
    points
        .iter()
        .map(|p| match form {
            ParityForm::Zonotope => (p.iter().filter(|&&x| x < 0).count() % 2) as u8,
            ParityForm::Lattice => p.iter().sum::<i64>().rem_euclid(2) as u8,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransportColoringError {
    #[error("complex is not strongly connected")]
    NotConnected,
    #[error("holonomy has order {order}, transport is path dependent")]
    NontrivialHolonomy { order: String },
    #[error("holonomy contains an odd signed permutation")]
    OddHolonomy,
    #[error("star of vertex {0} is not connected through its ridges")]
    NotLocallyConnected(usize),
    #[error("vertex {vertex} receives different colors through facet {facet}")]
    InconsistentExtension { vertex: usize, facet: usize },
    #[error("expected a {0} complex")]
    WrongShape(&'static str),
}

fn require_connected(g: &Groupoid) -> Result<crate::holonomy::HolonomyResult, TransportColoringError> {
    holonomy_group(g, 0).map_err(|e| match e {
        HolonomyError::NotConnected { .. } => TransportColoringError::NotConnected,
        other => unreachable!("base 0 exists: {other}"),
    })
}

// colors every vertex through the tree transport and checks that all
// facets agree
fn extend_along_tree<C: Copy + PartialEq>(
    k: &CellComplex,
    tree: &SpanningTree,
    base_color: impl Fn(usize) -> C,
) -> Result<Vec<C>, TransportColoringError> {
    let mut color: Vec<Option<C>> = vec![None; k.vertex_count()];
    for &x in tree.objects() {
        let back = tree.transport_to(x).unwrap().inverse();
        for (slot, &vertex) in k.facet(x).iter().enumerate() {
            let c = base_color(back.apply(slot));
            match color[vertex] {
                None => color[vertex] = Some(c),
                Some(prev) if prev != c => {
                    return Err(TransportColoringError::InconsistentExtension { vertex, facet: x })
                }
                Some(_) => {}
            }
        }
    }
    Ok(color.into_iter().map(|c| c.expect("every vertex lies in a facet")).collect())
}

/// Colors the vertices of a simplicial complex with `d + 1` colors so that
/// every facet is rainbow, by transporting the base facet's slot coloring.
///
/// Hypotheses are checked in the order connectivity, trivial holonomy,
/// local connectivity; the extension is then verified cell by cell.
pub fn transport_coloring(k: &CellComplex) -> Result<Vec<usize>, TransportColoringError> {
    if !matches!(k.shape(), CellShape::Simplex(_)) {
        return Err(TransportColoringError::WrongShape("simplicial"));
    }
    let g = Groupoid::from_complex(k);
    let h = require_connected(&g)?;
    if !h.group.is_trivial() {
        return Err(TransportColoringError::NontrivialHolonomy {
            order: h.order().to_string(),
        });
    }
    if let Some(v) = non_locally_connected_vertex(k) {
        return Err(TransportColoringError::NotLocallyConnected(v));
    }
    extend_along_tree(k, &h.tree, |slot| slot)
}

/// Proper 2-coloring of a cubical complex obtained by transporting the
/// corner parity of the base cube. Needs only even holonomy, not trivial
/// holonomy: an even signed permutation preserves corner parity.
pub fn transport_parity_coloring(k: &CubicalComplex) -> Result<Vec<u8>, TransportColoringError> {
    let g = Groupoid::from_complex(k);
    let h = require_connected(&g)?;
    let signed = h.signed_generators().expect("cubical holonomy is signed");
    if signed.iter().any(|s| signed_parity(s) == 1) {
        return Err(TransportColoringError::OddHolonomy);
    }
    if let Some(v) = non_locally_connected_vertex(k) {
        return Err(TransportColoringError::NotLocallyConnected(v));
    }
    extend_along_tree(k, &h.tree, |address| (address.count_ones() % 2) as u8)
}

/// Every facet receives pairwise distinct colors.
pub fn is_rainbow(k: &CellComplex, colors: &[usize]) -> bool {
    k.facets().iter().all(|f| {
        let mut seen: Vec<usize> = f.iter().map(|&v| colors[v]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == f.len()
    })
}
