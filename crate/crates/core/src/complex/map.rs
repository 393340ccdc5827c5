use super::{CellComplex, ComplexError};

/// A vertex assignment between two complexes.
#[derive(Clone, Debug)]
pub struct VertexMap<'a> {
    source: &'a CellComplex,
    target: &'a CellComplex,
    assignment: Vec<usize>,
}

impl<'a> VertexMap<'a> {
    pub fn new(
        source: &'a CellComplex,
        target: &'a CellComplex,
        assignment: Vec<usize>,
    ) -> Result<Self, ComplexError> {
        if assignment.len() != source.vertex_count() {
            return Err(ComplexError::PartialMap {
                expected: source.vertex_count(),
                found: assignment.len(),
            });
        }
        if let Some((vertex, &image)) = assignment
            .iter()
            .enumerate()
            .find(|(_, &w)| w >= target.vertex_count())
        {
            return Err(ComplexError::ImageOutOfRange { vertex, image });
        }
        Ok(VertexMap {
            source,
            target,
            assignment,
        })
    }

    pub fn source(&self) -> &'a CellComplex {
        self.source
    }

    pub fn target(&self) -> &'a CellComplex {
        self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// First face (as a sorted source vertex set) whose down-set is not
    /// mapped isomorphically onto the down-set of a target face, or `None`
    /// when the map is non-degenerate.
    ///
    /// Every face of every facet must go injectively onto a target face of
    /// the same dimension, and each facet's faces must match the target
    /// face count dimension by dimension.
    pub fn degeneracy_witness(&self) -> Option<Vec<usize>> {
        let target_faces = self.target.face_poset();
        let source_shape = self.source.shape();
        let local_faces = source_shape.faces();
        for facet in self.source.facets() {
            for slots in &local_faces {
                let mut face: Vec<usize> = slots.iter().map(|&s| facet[s]).collect();
                face.sort_unstable();
                let mut image: Vec<usize> = face.iter().map(|&v| self.assignment[v]).collect();
                image.sort_unstable();
                image.dedup();
                let same_dim = image.len() == face.len()
                    && target_faces.find(&image).is_some_and(|y| {
                        target_faces.poset.rank(y) == source_shape.face_dim(face.len())
                            && target_faces.poset.down_set(y).len() == {
                                let d = source_shape.face_dim(face.len());
                                local_face_count(source_shape, d)
                            }
                    });
                if !same_dim {
                    return Some(face);
                }
            }
        }
        None
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.degeneracy_witness().is_none()
    }
}

/// Number of nonempty faces of a cell of this shape family in dimension `d`.
fn local_face_count(shape: super::CellShape, d: usize) -> usize {
    match shape {
        super::CellShape::Simplex(_) => (1usize << (d + 1)) - 1,
        super::CellShape::Cube(_) => 3usize.pow(d as u32),
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose_maps<'a>(
    f: &VertexMap<'a>,
    g: &VertexMap<'a>,
) -> Result<VertexMap<'a>, ComplexError> {
    let assignment = f.assignment.iter().map(|&v| g.apply(v)).collect();
    VertexMap::new(f.source, g.target, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::graph::Graph;

    fn cycle(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_graph(&Graph::cycle(n)).unwrap()
    }

    #[test]
    fn identity_is_nondegenerate() {
        let c3 = cycle(3);
        let f = VertexMap::new(&c3, &c3, vec![0, 1, 2]).unwrap();
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn covering_map_is_nondegenerate() {
        let (c6, c3) = (cycle(6), cycle(3));
        let f = VertexMap::new(&c6, &c3, (0..6).map(|i| i % 3).collect()).unwrap();
        assert!(f.is_nondegenerate());
    }

    #[test]
    fn collapsing_odd_cycle_fails() {
        let c3 = cycle(3);
        let k2 = SimplicialComplex::new(vec![vec![0, 1]]).unwrap();
        let f = VertexMap::new(&c3, &k2, vec![0, 1, 0]).unwrap();
        assert_eq!(f.degeneracy_witness(), Some(vec![0, 2]));
    }

    #[test]
    fn non_edge_image_fails() {
        // C4 -> C5 sending the 4-cycle onto a path misses the closing edge
        let (c4, c5) = (cycle(4), cycle(5));
        let f = VertexMap::new(&c4, &c5, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(f.degeneracy_witness(), Some(vec![0, 3]));
    }

    #[test]
    fn rejects_partial_maps() {
        let c3 = cycle(3);
        assert!(VertexMap::new(&c3, &c3, vec![0, 1]).is_err());
        assert!(VertexMap::new(&c3, &c3, vec![0, 1, 5]).is_err());
    }
}
