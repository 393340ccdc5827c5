//! Validated pure complexes: simplicial and cubical complexes, their face
//! posets, facet adjacency, and vertex maps between them.

mod map;
mod poset;
mod shape;

pub use map::{compose_maps, VertexMap};
pub use poset::{FacePoset, RankedPoset};
pub use shape::CellShape;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::ops::Deref;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has no facets")]
    Empty,
    #[error("facet {facet} has {found} vertices, expected {expected} (complex must be pure)")]
    NonPure {
        facet: usize,
        expected: usize,
        found: usize,
    },
    #[error("facet {0} repeats a vertex")]
    DegenerateFacet(usize),
    #[error("facet {0} is contained in facet {1}")]
    DominatedFacet(usize, usize),
    #[error("vertex {0} lies in no facet (vertex ids must be dense)")]
    UnusedVertex(usize),
    #[error("cubes must have dimension at least 1")]
    ZeroDimensionalCube,
    #[error("cube {cube}: {reason}")]
    MalformedCube { cube: usize, reason: String },
    #[error("cube {0} sends two corners to the same vertex")]
    CornerCollision(usize),
    #[error("cubes {0} and {1} meet in a vertex set that is not a common face")]
    SemilatticeViolation(usize, usize),
    #[error("cubes {0} and {1} are the same cell")]
    DuplicateCell(usize, usize),
    #[error("cover {lower} ⋖ {upper} does not raise the rank by one")]
    BadCover { lower: usize, upper: usize },
    #[error("vertex map is not total: expected {expected} images, got {found}")]
    PartialMap { expected: usize, found: usize },
    #[error("vertex map sends {vertex} outside the target (image {image})")]
    ImageOutOfRange { vertex: usize, image: usize },
}

/// A validated pure complex whose facets all have the same [`CellShape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    shape: CellShape,
    vertex_count: usize,
    /// vertex id by slot, per facet
    facets: Vec<Vec<usize>>,
    /// sorted vertex set of every ridge, indexed by ridge id
    ridges: Vec<Vec<usize>>,
    /// global ridge id of each local ridge, per facet
    facet_ridges: Vec<Vec<usize>>,
    /// (facet, local ridge index) incidences, per ridge id
    ridge_facets: Vec<Vec<(usize, usize)>>,
}

/// An edge of the dual multigraph: facets `a < b` sharing ridge `ridge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    pub ridge: usize,
    /// local ridge index of the shared ridge inside `a` and `b`
    pub a_side: usize,
    pub b_side: usize,
}

/// Facets as nodes, one edge per shared ridge per facet pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMultigraph {
    node_count: usize,
    edges: Vec<DualEdge>,
    /// (edge index, neighbor) sorted by ridge id then neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl DualMultigraph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    /// `(edge index, neighbor facet)` pairs around `facet`, by ridge id.
    pub fn incident(&self, facet: usize) -> &[(usize, usize)] {
        &self.adjacency[facet]
    }

    /// Component label per facet.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.node_count];
        let mut next = 0;
        for s in 0..self.node_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(_, w) in &self.adjacency[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }
}

impl CellComplex {
    fn build(shape: CellShape, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let vertex_count = facets.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let mut used = vec![false; vertex_count];
        for &v in facets.iter().flatten() {
            used[v] = true;
        }
        if let Some(v) = used.iter().position(|&u| !u) {
            return Err(ComplexError::UnusedVertex(v));
        }

        let local_ridges = shape.ridges();
        let mut ridge_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut ridges = Vec::new();
        let mut ridge_facets: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut facet_ridges = Vec::with_capacity(facets.len());
        // a 0-dimensional cell has only the empty ridge; points are never adjacent
        let has_ridges = shape.dim() > 0;
        for (f, facet) in facets.iter().enumerate() {
            let mut ids = Vec::new();
            if has_ridges {
                for (local, slots) in local_ridges.iter().enumerate() {
                    let mut key: Vec<usize> = slots.iter().map(|&s| facet[s]).collect();
                    key.sort_unstable();
                    let id = *ridge_ids.entry(key.clone()).or_insert_with(|| {
                        ridges.push(key);
                        ridge_facets.push(Vec::new());
                        ridges.len() - 1
                    });
                    ridge_facets[id].push((f, local));
                    ids.push(id);
                }
            }
            facet_ridges.push(ids);
        }
        Ok(CellComplex {
            shape,
            vertex_count,
            facets,
            ridges,
            facet_ridges,
            ridge_facets,
        })
    }

    pub fn shape(&self) -> CellShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    pub fn is_cubical(&self) -> bool {
        matches!(self.shape, CellShape::Cube(_))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Vertex ids of facet `i` by slot.
    pub fn facet(&self, i: usize) -> &[usize] {
        &self.facets[i]
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_vertex_set(&self, i: usize) -> Vec<usize> {
        let mut v = self.facets[i].clone();
        v.sort_unstable();
        v
    }

    pub fn slot_of(&self, facet: usize, vertex: usize) -> Option<usize> {
        self.facets[facet].iter().position(|&v| v == vertex)
    }

    /// Facet whose vertex set equals `vertices` (any order).
    pub fn find_facet(&self, vertices: &[usize]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        (0..self.facet_count()).find(|&f| self.facet_vertex_set(f) == key)
    }

    pub fn ridge_count(&self) -> usize {
        self.ridges.len()
    }

    /// Sorted vertex set of ridge `id`.
    pub fn ridge(&self, id: usize) -> &[usize] {
        &self.ridges[id]
    }

    /// Global ridge id of the local ridge `local` of `facet`.
    pub fn ridge_id(&self, facet: usize, local: usize) -> usize {
        self.facet_ridges[facet][local]
    }

    /// Local index of ridge `id` inside `facet`, if the facet contains it.
    pub fn local_ridge(&self, facet: usize, id: usize) -> Option<usize> {
        self.facet_ridges[facet].iter().position(|&r| r == id)
    }

    pub fn facet_adjacency(&self) -> DualMultigraph {
        let mut edges = Vec::new();
        for (ridge, inc) in self.ridge_facets.iter().enumerate() {
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    let (mut x, mut y) = (inc[i], inc[j]);
                    if x.0 > y.0 {
                        std::mem::swap(&mut x, &mut y);
                    }
                    edges.push(DualEdge {
                        a: x.0,
                        b: y.0,
                        ridge,
                        a_side: x.1,
                        b_side: y.1,
                    });
                }
            }
        }
        let mut adjacency = vec![Vec::new(); self.facet_count()];
        for (e, edge) in edges.iter().enumerate() {
            adjacency[edge.a].push((e, edge.b));
            adjacency[edge.b].push((e, edge.a));
        }
        for adj in &mut adjacency {
            adj.sort_by_key(|&(e, w)| (edges[e].ridge, w));
        }
        DualMultigraph {
            node_count: self.facet_count(),
            edges,
            adjacency,
        }
    }

    /// True iff any two facets are joined by a chain of ridge-adjacent facets.
    pub fn is_strongly_connected(&self) -> bool {
        self.facet_adjacency().is_connected()
    }

    /// The vertex-edge graph.
    pub fn one_skeleton(&self) -> Graph {
        let local = self.shape.edges();
        let mut edges = BTreeSet::new();
        for facet in &self.facets {
            for &(a, b) in &local {
                let (u, v) = (facet[a], facet[b]);
                edges.insert((u.min(v), u.max(v)));
            }
        }
        Graph::new(self.vertex_count, edges).expect("facet edges are simple")
    }

    /// Facets containing vertex `v`.
    pub fn star(&self, v: usize) -> Vec<usize> {
        (0..self.facet_count())
            .filter(|&f| self.facets[f].contains(&v))
            .collect()
    }

    pub fn face_poset(&self) -> FacePoset {
        let local_faces = self.shape.faces();
        // covering relation inside one cell, on local face indices
        let local_index: HashMap<&Vec<usize>, usize> =
            local_faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut local_covers = Vec::new();
        for (hi, face) in local_faces.iter().enumerate() {
            for (lo, sub) in local_faces.iter().enumerate() {
                if self.shape.face_dim(sub.len()) + 1 == self.shape.face_dim(face.len())
                    && sub.iter().all(|s| face.binary_search(s).is_ok())
                {
                    local_covers.push((lo, hi));
                }
            }
        }
        debug_assert_eq!(local_index.len(), local_faces.len());

        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut faces = Vec::new();
        let mut rank = Vec::new();
        let mut covers = HashSet::new();
        for facet in &self.facets {
            let global: Vec<usize> = local_faces
                .iter()
                .map(|slots| {
                    let mut key: Vec<usize> = slots.iter().map(|&s| facet[s]).collect();
                    key.sort_unstable();
                    *ids.entry(key.clone()).or_insert_with(|| {
                        rank.push(self.shape.face_dim(key.len()));
                        faces.push(key);
                        faces.len() - 1
                    })
                })
                .collect();
            for &(lo, hi) in &local_covers {
                covers.insert((global[lo], global[hi]));
            }
        }
        let mut covers: Vec<_> = covers.into_iter().collect();
        covers.sort_unstable();
        let poset = RankedPoset::new(rank, &covers).expect("face dimensions are consistent");
        FacePoset::from_parts(poset, faces)
    }
}

/// A pure simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex(CellComplex);

impl SimplicialComplex {
    /// Validates a list of facets. Each facet is stored with its vertices in
    /// increasing order, which fixes the slot numbering.
    pub fn new(facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let first = facets.first().ok_or(ComplexError::Empty)?;
        let size = first.len();
        if size == 0 {
            return Err(ComplexError::DegenerateFacet(0));
        }
        let mut sorted = Vec::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            if f.len() != size {
                return Err(ComplexError::NonPure {
                    facet: i,
                    expected: size,
                    found: f.len(),
                });
            }
            let mut s = f.clone();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DegenerateFacet(i));
            }
            sorted.push(s);
        }
        // with equal sizes, containment means equality
        let mut seen: HashMap<&Vec<usize>, usize> = HashMap::new();
        for (i, s) in sorted.iter().enumerate() {
            if let Some(&j) = seen.get(s) {
                return Err(ComplexError::DominatedFacet(i, j));
            }
            seen.insert(s, i);
        }
        CellComplex::build(CellShape::Simplex(size - 1), sorted).map(SimplicialComplex)
    }

    /// A graph as a pure 1-dimensional complex (isolated vertices are not
    /// allowed, since every vertex must lie in a facet).
    pub fn from_graph(g: &Graph) -> Result<Self, ComplexError> {
        SimplicialComplex::new(g.edges().iter().map(|&(u, v)| vec![u, v]).collect())
    }

    pub fn into_inner(self) -> CellComplex {
        self.0
    }
}

impl Deref for SimplicialComplex {
    type Target = CellComplex;
    fn deref(&self) -> &CellComplex {
        &self.0
    }
}

/// A pure cubical complex; each cube maps corner addresses to vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalComplex(CellComplex);

impl CubicalComplex {
    /// `cubes[c][address]` is the vertex at that corner; bit `i` of an
    /// address is coordinate `i`.
    pub fn new(dim: usize, cubes: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        if dim == 0 {
            return Err(ComplexError::ZeroDimensionalCube);
        }
        if cubes.is_empty() {
            return Err(ComplexError::Empty);
        }
        let corners = 1usize << dim;
        for (c, cube) in cubes.iter().enumerate() {
            if cube.len() != corners {
                return Err(ComplexError::MalformedCube {
                    cube: c,
                    reason: format!("expected {corners} corners, found {}", cube.len()),
                });
            }
            let distinct: HashSet<_> = cube.iter().collect();
            if distinct.len() != corners {
                return Err(ComplexError::CornerCollision(c));
            }
        }
        check_semilattice(dim, &cubes)?;
        CellComplex::build(CellShape::Cube(dim), cubes).map(CubicalComplex)
    }

    /// Builds from corner maps keyed by binary strings of length `dim`;
    /// character `i` of a key is coordinate `i`.
    pub fn from_corner_maps(
        dim: usize,
        cubes: &[BTreeMap<String, usize>],
    ) -> Result<Self, ComplexError> {
        let corners = 1usize << dim;
        let mut out = Vec::with_capacity(cubes.len());
        for (c, map) in cubes.iter().enumerate() {
            let malformed = |reason: String| ComplexError::MalformedCube { cube: c, reason };
            if map.len() != corners {
                return Err(malformed(format!("expected {corners} corners, found {}", map.len())));
            }
            let mut cube = vec![usize::MAX; corners];
            for (key, &v) in map {
                let address = parse_corner_key(key, dim)
                    .ok_or_else(|| malformed(format!("bad corner key {key:?}")))?;
                if cube[address] != usize::MAX {
                    return Err(malformed(format!("corner {key:?} given twice")));
                }
                cube[address] = v;
            }
            out.push(cube);
        }
        CubicalComplex::new(dim, out)
    }

    /// Corner maps keyed by binary strings, the inverse of
    /// [`CubicalComplex::from_corner_maps`].
    pub fn corner_maps(&self) -> Vec<BTreeMap<String, usize>> {
        let k = self.dim();
        self.facets()
            .iter()
            .map(|cube| {
                cube.iter()
                    .enumerate()
                    .map(|(address, &v)| (corner_key(address, k), v))
                    .collect()
            })
            .collect()
    }

    pub fn into_inner(self) -> CellComplex {
        self.0
    }
}

impl Deref for CubicalComplex {
    type Target = CellComplex;
    fn deref(&self) -> &CellComplex {
        &self.0
    }
}

impl TryFrom<CellComplex> for CubicalComplex {
    type Error = CellComplex;
    fn try_from(c: CellComplex) -> Result<Self, Self::Error> {
        if c.is_cubical() {
            Ok(CubicalComplex(c))
        } else {
            Err(c)
        }
    }
}

pub fn corner_key(address: usize, dim: usize) -> String {
    (0..dim)
        .map(|i| if address >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn parse_corner_key(key: &str, dim: usize) -> Option<usize> {
    if key.len() != dim {
        return None;
    }
    key.chars().enumerate().try_fold(0usize, |acc, (i, ch)| match ch {
        '0' => Some(acc),
        '1' => Some(acc | 1 << i),
        _ => None,
    })
}

/// Any two cells must meet in the vertex set of a single common face (with
/// the same face structure from both sides) or not at all.
fn check_semilattice(dim: usize, cubes: &[Vec<usize>]) -> Result<(), ComplexError> {
    let shape = CellShape::Cube(dim);
    let local_faces = shape.faces();
    let face_sets: Vec<HashSet<Vec<usize>>> = cubes
        .iter()
        .map(|cube| {
            local_faces
                .iter()
                .map(|slots| {
                    let mut key: Vec<usize> = slots.iter().map(|&s| cube[s]).collect();
                    key.sort_unstable();
                    key
                })
                .collect()
        })
        .collect();
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for (c, cube) in cubes.iter().enumerate() {
        for &v in cube {
            by_vertex.entry(v).or_default().push(c);
        }
    }
    let mut checked = HashSet::new();
    for cells in by_vertex.values() {
        for (i, &a) in cells.iter().enumerate() {
            for &b in &cells[i + 1..] {
                if !checked.insert((a, b)) {
                    continue;
                }
                let in_b: HashSet<usize> = cubes[b].iter().copied().collect();
                let mut common: Vec<usize> =
                    cubes[a].iter().copied().filter(|v| in_b.contains(v)).collect();
                common.sort_unstable();
                if common.len() == cubes[a].len() {
                    return Err(ComplexError::DuplicateCell(a, b));
                }
                if !face_sets[a].contains(&common) || !face_sets[b].contains(&common) {
                    return Err(ComplexError::SemilatticeViolation(a, b));
                }
                let below = |set: &HashSet<Vec<usize>>| -> BTreeSet<Vec<usize>> {
                    set.iter()
                        .filter(|f| f.iter().all(|v| common.binary_search(v).is_ok()))
                        .cloned()
                        .collect()
                };
                if below(&face_sets[a]) != below(&face_sets[b]) {
                    return Err(ComplexError::SemilatticeViolation(a, b));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> CubicalComplex {
        CubicalComplex::new(2, vec![vec![0, 1, 2, 3]]).unwrap()
    }

    fn grid2x2() -> CubicalComplex {
        // vertices r*3+c for r,c in 0..3; square (r,c) with x along c, y along r
        let cubes = (0..2)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .map(|(r, c)| {
                let v = |dr: usize, dc: usize| (r + dr) * 3 + c + dc;
                vec![v(0, 0), v(0, 1), v(1, 0), v(1, 1)]
            })
            .collect();
        CubicalComplex::new(2, cubes).unwrap()
    }

    fn tetrahedron_boundary() -> SimplicialComplex {
        SimplicialComplex::new(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn simplicial_builds() {
        let t = SimplicialComplex::new(vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(t.dim(), 2);
        let c3 = SimplicialComplex::new(vec![vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap();
        assert_eq!(c3.dim(), 1);
        assert_eq!(c3.facet(2), &[0, 2]);
    }

    #[test]
    fn simplicial_errors() {
        assert_eq!(
            SimplicialComplex::new(vec![vec![0, 1, 2], vec![0, 1]]),
            Err(ComplexError::NonPure {
                facet: 1,
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            SimplicialComplex::new(vec![vec![0, 1, 1]]),
            Err(ComplexError::DegenerateFacet(0))
        );
        assert_eq!(
            SimplicialComplex::new(vec![vec![0, 1], vec![1, 0]]),
            Err(ComplexError::DominatedFacet(1, 0))
        );
        assert_eq!(SimplicialComplex::new(vec![]), Err(ComplexError::Empty));
        assert_eq!(
            SimplicialComplex::new(vec![vec![0, 2]]),
            Err(ComplexError::UnusedVertex(1))
        );
    }

    #[test]
    fn cubical_builds() {
        let sq = square();
        assert_eq!(sq.dim(), 2);
        assert_eq!(sq.facet_count(), 1);
        let g = grid2x2();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.one_skeleton().edge_count(), 12);
    }

    #[test]
    fn diagonal_meeting_is_rejected() {
        // the squares share only the diagonal {0,3}
        let err = CubicalComplex::new(2, vec![vec![0, 1, 2, 3], vec![0, 4, 5, 3]]).unwrap_err();
        assert_eq!(err, ComplexError::SemilatticeViolation(0, 1));
    }

    #[test]
    fn twisted_face_structure_is_rejected() {
        // same vertex set {0,1,2,3} glued with a different edge structure
        let err = CubicalComplex::new(
            3,
            vec![vec![0, 1, 2, 3, 4, 5, 6, 7], vec![0, 1, 3, 2, 8, 9, 10, 11]],
        )
        .unwrap_err();
        assert_eq!(err, ComplexError::SemilatticeViolation(0, 1));
    }

    #[test]
    fn corner_collision_and_keys() {
        assert_eq!(
            CubicalComplex::new(2, vec![vec![0, 1, 1, 2]]),
            Err(ComplexError::CornerCollision(0))
        );
        let map: BTreeMap<String, usize> =
            [("00", 0), ("01", 1), ("10", 2), ("11", 3)].map(|(k, v)| (k.to_string(), v)).into();
        let c = CubicalComplex::from_corner_maps(2, std::slice::from_ref(&map)).unwrap();
        // key "01" is coordinate 1 set, address 2
        assert_eq!(c.facet(0), &[0, 2, 1, 3]);
        assert_eq!(c.corner_maps(), vec![map]);
        let mut bad = BTreeMap::new();
        bad.insert("0".to_string(), 0);
        assert!(CubicalComplex::from_corner_maps(2, &[bad]).is_err());
    }

    #[test]
    fn face_poset_counts() {
        let t = SimplicialComplex::new(vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(t.face_poset().len(), 7);
        assert_eq!(square().face_poset().len(), 9);
        let fp = tetrahedron_boundary().face_poset();
        assert_eq!(fp.len(), 14);
        assert_eq!(fp.f_vector(), vec![4, 6, 4]);
        assert_eq!(fp.poset.depth(), 2);
        assert!(fp.poset.maximal_elements().iter().all(|&x| fp.poset.rank(x) == 2));
    }

    #[test]
    fn dual_graph_examples() {
        let d = tetrahedron_boundary().facet_adjacency();
        assert_eq!(d.node_count(), 4);
        assert_eq!(d.edges().len(), 6);
        let cube = CubicalComplex::new(3, vec![(0..8).collect()]).unwrap();
        let d = cube.facet_adjacency();
        assert_eq!((d.node_count(), d.edges().len()), (1, 0));
        // triangle with a pendant edge: ridges are vertices
        let g = SimplicialComplex::new(vec![vec![0, 1], vec![1, 2], vec![2, 0], vec![0, 3]]).unwrap();
        let d = g.facet_adjacency();
        // vertex 0 lies in 3 edges (3 pairs), vertices 1 and 2 in 2 each
        assert_eq!(d.edges().len(), 5);
        for e in d.edges() {
            let ridge = g.ridge(e.ridge);
            assert_eq!(ridge.len(), 1);
            assert!(g.facet(e.a).contains(&ridge[0]) && g.facet(e.b).contains(&ridge[0]));
        }
    }

    #[test]
    fn strong_connectivity() {
        assert!(tetrahedron_boundary().is_strongly_connected());
        let two = SimplicialComplex::new(vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(!two.is_strongly_connected());
        let bowtie = SimplicialComplex::new(vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(!bowtie.is_strongly_connected());
    }
}
