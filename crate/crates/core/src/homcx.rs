//! The cell complex `Hom(G, H)` of multivalued graph maps.
//!
//! A cell assigns to each vertex of `G` a nonempty set of vertices of `H`
//! such that every edge of `G` is sent to a complete bipartite set of edges
//! of `H`. Sets are bitmasks over the vertices of `H`; a cell's dimension
//! is `Σ (|η(i)| − 1)` and its faces are obtained by shrinking sets.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest number of candidate single-valued maps `|V_H|^|V_G|` enumerated.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;
/// Largest source graph accepted by the coloring search.
pub const COLORING_VERTEX_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("enumeration too large: {candidates} candidate maps exceed {limit}")]
    TooLarge { candidates: String, limit: u64 },
    #[error("edge {0:?} is not in the graph")]
    EdgeNotInGraph((usize, usize)),
    #[error("swap action needs the source graph K2")]
    NotK2,
    #[error("vertex map is not a graph homomorphism")]
    NotAHomomorphism,
    #[error("cell does not belong to this Hom complex")]
    ForeignCell,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HomCell {
    /// `eta[i]` is the bitmask of images of vertex `i`
    pub eta: Vec<u64>,
}

impl HomCell {
    pub fn dim(&self) -> usize {
        self.eta.iter().map(|m| m.count_ones() as usize - 1).sum()
    }

    /// Nonempty sets satisfying the edge condition.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        self.eta.len() == g.vertex_count()
            && self
                .eta
                .iter()
                .all(|&m| m != 0 && m >> h.vertex_count() == 0)
            && g.edges().iter().all(|&(i, j)| {
                members(self.eta[i]).all(|a| members(self.eta[j]).all(|b| h.has_edge(a, b)))
            })
    }

    /// `self ⊆ other` pointwise.
    pub fn is_face_of(&self, other: &HomCell) -> bool {
        self.eta.len() == other.eta.len()
            && self.eta.iter().zip(&other.eta).all(|(&a, &b)| a & !b == 0)
    }

    /// Faces of codimension one.
    pub fn boundary_faces(&self) -> Vec<HomCell> {
        let mut out = Vec::new();
        for (i, &m) in self.eta.iter().enumerate() {
            if m.count_ones() < 2 {
                continue;
            }
            for a in members(m) {
                let mut eta = self.eta.clone();
                eta[i] &= !(1 << a);
                out.push(HomCell { eta });
            }
        }
        out
    }

    /// Image sets as sorted vertex lists.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.eta.iter().map(|&m| members(m).collect()).collect()
    }
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// All cells of `Hom(G, H)`, sorted by dimension and lexicographically on
/// the bitmask tuples within a dimension.
#[derive(Clone, Debug)]
pub struct HomComplex {
    g: Graph,
    h: Graph,
    cells: Vec<HomCell>,
    index: HashMap<HomCell, usize>,
}

impl HomComplex {
    pub fn new(g: &Graph, h: &Graph) -> Result<Self, HomError> {
        let too_large = |candidates: String| HomError::TooLarge {
            candidates,
            limit: ENUMERATION_LIMIT,
        };
        let (nv, nh) = (g.vertex_count() as u32, h.vertex_count() as u64);
        if nh >= 64 {
            return Err(too_large(format!("{nh}^{nv}")));
        }
        match nh.checked_pow(nv) {
            Some(c) if c <= ENUMERATION_LIMIT => {}
            Some(c) => return Err(too_large(c.to_string())),
            None => return Err(too_large(format!("{nh}^{nv}"))),
        }
        // common neighbourhood of every vertex set
        let nbr: Vec<u64> = (0..h.vertex_count())
            .map(|a| h.neighbors(a).iter().fold(0, |m, &b| m | 1 << b))
            .collect();
        let full = if nh == 0 { 0 } else { (1u64 << nh) - 1 };
        let mut cells = Vec::new();
        let mut eta = vec![0u64; g.vertex_count()];
        extend(g, &nbr, full, 0, &mut eta, &mut cells);
        cells.sort_by_key(HomCell::dim);
        let index = cells.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(HomComplex {
            g: g.clone(),
            h: h.clone(),
            cells,
            index,
        })
    }

    pub fn source(&self) -> &Graph {
        &self.g
    }

    pub fn target(&self) -> &Graph {
        &self.h
    }

    pub fn cells(&self) -> &[HomCell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn find(&self, cell: &HomCell) -> Option<usize> {
        self.index.get(cell).copied()
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(HomCell::dim)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim()] += 1;
        }
        f
    }

    /// `Σ (−1)^dim` over all cells; 0 for the empty complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Every face of every cell is itself a cell.
    pub fn is_closed_under_faces(&self) -> bool {
        self.cells
            .iter()
            .all(|c| c.boundary_faces().iter().all(|f| self.index.contains_key(f)))
    }
}

// depth-first over vertices of G; sets for vertex i range over the nonempty
// submasks of the common neighbourhood of earlier neighbours' images
fn extend(
    g: &Graph,
    nbr: &[u64],
    full: u64,
    i: usize,
    eta: &mut Vec<u64>,
    out: &mut Vec<HomCell>,
) {
    if i == eta.len() {
        out.push(HomCell { eta: eta.clone() });
        return;
    }
    let mut allowed = full;
    for &j in g.neighbors(i) {
        if j < i {
            allowed &= members(eta[j]).fold(full, |m, b| m & nbr[b]);
        }
    }
    let mut s: u64 = 0;
    // increasing submasks of `allowed`
    loop {
        s = (s | !allowed).wrapping_add(1) & allowed;
        if s == 0 {
            break;
        }
        eta[i] = s;
        extend(g, nbr, full, i + 1, eta, out);
    }
    eta[i] = 0;
}

/// A proper `n`-coloring of `G`, found by backtracking, or `None`.
pub fn graph_hom_exists(g: &Graph, n: usize) -> Result<Option<Vec<usize>>, HomError> {
    if g.vertex_count() > COLORING_VERTEX_LIMIT {
        return Err(HomError::TooLarge {
            candidates: format!("{n}^{}", g.vertex_count()),
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut color = vec![usize::MAX; g.vertex_count()];
    Ok(color_from(g, n, 0, &mut color).then_some(color))
}

fn color_from(g: &Graph, n: usize, v: usize, color: &mut [usize]) -> bool {
    if v == color.len() {
        return true;
    }
    for c in 0..n {
        if g.neighbors(v).iter().all(|&w| w > v || color[w] != c) {
            color[v] = c;
            if color_from(g, n, v + 1, color) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}

/// The involution `η ↦ η ∘ swap` on `Hom(K₂, H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapAction {
    /// `images[i]` is the index of the swapped cell `i`
    pub images: Vec<usize>,
    pub fixed_points: Vec<usize>,
    pub involutive: bool,
    pub dimension_preserving: bool,
    pub face_preserving: bool,
}

impl SwapAction {
    pub fn is_free(&self) -> bool {
        self.fixed_points.is_empty()
    }
}

pub fn swap_cell(cell: &HomCell) -> HomCell {
    HomCell {
        eta: cell.eta.iter().rev().copied().collect(),
    }
}

pub fn induced_swap_action(hom: &HomComplex) -> Result<SwapAction, HomError> {
    if hom.source() != &Graph::complete(2) {
        return Err(HomError::NotK2);
    }
    let images: Vec<usize> = hom
        .cells()
        .iter()
        .map(|c| hom.find(&swap_cell(c)).ok_or(HomError::ForeignCell))
        .collect::<Result<_, _>>()?;
    let cells = hom.cells();
    Ok(SwapAction {
        fixed_points: (0..images.len()).filter(|&i| images[i] == i).collect(),
        involutive: (0..images.len()).all(|i| images[images[i]] == i),
        dimension_preserving: (0..images.len()).all(|i| cells[images[i]].dim() == cells[i].dim()),
        face_preserving: cells.iter().enumerate().all(|(i, c)| {
            c.boundary_faces()
                .iter()
                .all(|f| swap_cell(f).is_face_of(&cells[images[i]]))
        }),
        images,
    })
}

/// `φ_e`: the cell restricted to the endpoints of `e = (u, v)`, in that
/// order, as a cell of `Hom(K₂, H)`.
pub fn restriction_map(cell: &HomCell, g: &Graph, e: (usize, usize)) -> Result<HomCell, HomError> {
    let (u, v) = e;
    if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
        return Err(HomError::EdgeNotInGraph(e));
    }
    if cell.eta.len() != g.vertex_count() {
        return Err(HomError::ForeignCell);
    }
    Ok(HomCell {
        eta: vec![cell.eta[u], cell.eta[v]],
    })
}

/// Pulls a cell of `Hom(G, H)` back along a homomorphism `f : G′ → G`.
pub fn precompose(
    cell: &HomCell,
    g_prime: &Graph,
    g: &Graph,
    f: &[usize],
) -> Result<HomCell, HomError> {
    let is_hom = f.len() == g_prime.vertex_count()
        && f.iter().all(|&x| x < g.vertex_count())
        && g_prime.edges().iter().all(|&(a, b)| g.has_edge(f[a], f[b]));
    if !is_hom {
        return Err(HomError::NotAHomomorphism);
    }
    if cell.eta.len() != g.vertex_count() {
        return Err(HomError::ForeignCell);
    }
    Ok(HomCell {
        eta: f.iter().map(|&x| cell.eta[x]).collect(),
    })
}
