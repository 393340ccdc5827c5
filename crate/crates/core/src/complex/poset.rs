use std::collections::{BTreeSet, HashMap};

use super::ComplexError;

/// A finite ranked poset given by its covering relation.
///
/// Every cover `x ⋖ y` raises the rank by exactly one, which also rules out
/// cycles in the order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPoset {
    rank: Vec<usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl RankedPoset {
    pub fn new(rank: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self, ComplexError> {
        let n = rank.len();
        let mut lower = vec![BTreeSet::new(); n];
        let mut upper = vec![BTreeSet::new(); n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n || rank[hi] != rank[lo] + 1 {
                return Err(ComplexError::BadCover { lower: lo, upper: hi });
            }
            lower[hi].insert(lo);
            upper[lo].insert(hi);
        }
        Ok(RankedPoset {
            rank,
            lower: lower.into_iter().map(|s| s.into_iter().collect()).collect(),
            upper: upper.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// Largest rank attained.
    pub fn depth(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// `P_{≤x}`, sorted.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        let mut seen = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &z in &self.lower[y] {
                if seen.insert(z) {
                    stack.push(z);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.rank[a] <= self.rank[b] && self.down_set(b).binary_search(&a).is_ok()
    }

    /// Number of elements of each rank in `P_{≤x}`.
    pub fn rank_profile_below(&self, x: usize) -> Vec<usize> {
        let mut counts = vec![0; self.rank[x] + 1];
        for y in self.down_set(x) {
            counts[self.rank[y]] += 1;
        }
        counts
    }
}

/// The face poset of a complex: faces are identified by their vertex sets.
#[derive(Clone, Debug)]
pub struct FacePoset {
    pub poset: RankedPoset,
    /// Sorted vertex set of each element.
    pub faces: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl FacePoset {
    pub(crate) fn from_parts(poset: RankedPoset, faces: Vec<Vec<usize>>) -> Self {
        let index = faces.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        FacePoset { poset, faces, index }
    }

    /// Element id of the face with the given (sorted) vertex set.
    pub fn find(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of faces of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.poset.depth() + 1];
        for x in 0..self.len() {
            f[self.poset.rank(x)] += 1;
        }
        f
    }
}
