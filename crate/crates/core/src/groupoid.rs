//! Combinatorial groupoids generated by elementary morphisms.
//!
//! Objects carry a fixed number of vertex *slots*; an elementary morphism is
//! a slot bijection `source → target`. For a pure complex the objects are
//! the facets and the elementary morphisms are the flips across shared
//! ridges, each fixing its ridge pointwise. Paths compose left to right, in
//! walking order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{CellComplex, CellShape};
use crate::perm::{Perm, SignedPerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("facets {a} and {b} do not share ridge {ridge}")]
    NotAdjacent { a: usize, b: usize, ridge: usize },
    #[error("path is broken at step {step}: no morphism from {from} labelled {label} to {to}")]
    BrokenPath {
        step: usize,
        from: usize,
        label: usize,
        to: usize,
    },
    #[error("pattern is based at object {found}, transport starts at {expected}")]
    BaseMismatch { expected: usize, found: usize },
    #[error("object {0} does not exist")]
    NoSuchObject(usize),
    #[error("morphism map must be a bijection on {0} slots")]
    BadMorphism(usize),
    #[error("alternating path must have odd length")]
    MalformedPath,
}

/// A directed elementary morphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemMorphism {
    pub source: usize,
    pub target: usize,
    /// ridge id for flips; an arbitrary label for hand-built groupoids
    pub label: usize,
    /// `map[slot of source] = slot of target`
    pub map: Perm,
}

impl ElemMorphism {
    /// The bijection as `(source vertex, target vertex)` pairs.
    pub fn vertex_pairs(&self, complex: &CellComplex) -> Vec<(usize, usize)> {
        let (s, t) = (complex.facet(self.source), complex.facet(self.target));
        (0..s.len()).map(|i| (s[i], t[self.map.apply(i)])).collect()
    }
}

/// All isomorphisms `σ₁ → σ₂` fixing the shared ridge pointwise.
///
/// For simplices and cubes the extension across a ridge is forced, so the
/// result has exactly one element; the sequence return type leaves room for
/// cell families where it is not.
pub fn elementary_morphisms(
    complex: &CellComplex,
    source: usize,
    target: usize,
    ridge: usize,
) -> Result<Vec<ElemMorphism>, GroupoidError> {
    let not_adjacent = GroupoidError::NotAdjacent {
        a: source,
        b: target,
        ridge,
    };
    if source == target || source >= complex.facet_count() || target >= complex.facet_count() {
        return Err(not_adjacent);
    }
    let (Some(ls), Some(lt)) = (
        complex.local_ridge(source, ridge),
        complex.local_ridge(target, ridge),
    ) else {
        return Err(not_adjacent);
    };
    let map = complex
        .shape()
        .flip_map(complex.facet(source), ls, complex.facet(target), lt);
    Ok(vec![ElemMorphism {
        source,
        target,
        label: ridge,
        map: Perm::from_images(map).expect("flip is a bijection"),
    }])
}

/// A groupoid presented by objects and elementary morphisms (closed under
/// inverses).
#[derive(Clone, Debug)]
pub struct Groupoid {
    object_count: usize,
    slot_count: usize,
    shape: Option<CellShape>,
    morphisms: Vec<ElemMorphism>,
    inverse: Vec<usize>,
    /// outgoing morphism indices, sorted by (label, target)
    out: Vec<Vec<usize>>,
}

impl Groupoid {
    /// The flip groupoid of a pure complex: facets as objects, one flip per
    /// shared ridge in each direction.
    pub fn from_complex(complex: &CellComplex) -> Self {
        let mut morphisms = Vec::new();
        let mut inverse = Vec::new();
        for edge in complex.facet_adjacency().edges() {
            let forward = complex.shape().flip_map(
                complex.facet(edge.a),
                edge.a_side,
                complex.facet(edge.b),
                edge.b_side,
            );
            let backward = complex.shape().flip_map(
                complex.facet(edge.b),
                edge.b_side,
                complex.facet(edge.a),
                edge.a_side,
            );
            let i = morphisms.len();
            morphisms.push(ElemMorphism {
                source: edge.a,
                target: edge.b,
                label: edge.ridge,
                map: Perm::from_images(forward).expect("flip is a bijection"),
            });
            morphisms.push(ElemMorphism {
                source: edge.b,
                target: edge.a,
                label: edge.ridge,
                map: Perm::from_images(backward).expect("flip is a bijection"),
            });
            inverse.push(i + 1);
            inverse.push(i);
        }
        Groupoid::assemble(
            complex.facet_count(),
            complex.shape().slot_count(),
            Some(complex.shape()),
            morphisms,
            inverse,
        )
    }

    /// Builds a groupoid from one direction of each elementary morphism; the
    /// inverses are added automatically.
    pub fn from_generators(
        object_count: usize,
        slot_count: usize,
        shape: Option<CellShape>,
        generators: Vec<ElemMorphism>,
    ) -> Result<Self, GroupoidError> {
        let mut morphisms = Vec::new();
        let mut inverse = Vec::new();
        for m in generators {
            if m.source >= object_count {
                return Err(GroupoidError::NoSuchObject(m.source));
            }
            if m.target >= object_count {
                return Err(GroupoidError::NoSuchObject(m.target));
            }
            if m.map.degree() != slot_count {
                return Err(GroupoidError::BadMorphism(slot_count));
            }
            let i = morphisms.len();
            let back = ElemMorphism {
                source: m.target,
                target: m.source,
                label: m.label,
                map: m.map.inverse(),
            };
            morphisms.push(m);
            morphisms.push(back);
            inverse.push(i + 1);
            inverse.push(i);
        }
        Ok(Groupoid::assemble(object_count, slot_count, shape, morphisms, inverse))
    }

    fn assemble(
        object_count: usize,
        slot_count: usize,
        shape: Option<CellShape>,
        morphisms: Vec<ElemMorphism>,
        inverse: Vec<usize>,
    ) -> Self {
        let mut out = vec![Vec::new(); object_count];
        for (i, m) in morphisms.iter().enumerate() {
            out[m.source].push(i);
        }
        for list in &mut out {
            list.sort_by_key(|&i| (morphisms[i].label, morphisms[i].target, i));
        }
        Groupoid {
            object_count,
            slot_count,
            shape,
            morphisms,
            inverse,
            out,
        }
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn slot_count(&self) -> usize {
        self.slot_count
    }

    /// Cell shape of the objects when the groupoid comes from a complex.
    pub fn shape(&self) -> Option<CellShape> {
        self.shape
    }

    pub fn morphisms(&self) -> &[ElemMorphism] {
        &self.morphisms
    }

    pub fn morphism(&self, i: usize) -> &ElemMorphism {
        &self.morphisms[i]
    }

    /// Index of the inverse of morphism `i`.
    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Outgoing morphism indices of `object`, by label then target.
    pub fn outgoing(&self, object: usize) -> &[usize] {
        &self.out[object]
    }

    /// Number of elementary morphisms counted once per inverse pair.
    pub fn move_pair_count(&self) -> usize {
        self.morphisms.len() / 2
    }

    /// The elementary morphism `source → target` with the given label.
    pub fn find(&self, source: usize, label: usize, target: usize) -> Option<usize> {
        self.out
            .get(source)?
            .iter()
            .copied()
            .find(|&i| self.morphisms[i].label == label && self.morphisms[i].target == target)
    }

    /// Component label per object.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.object_count];
        let mut next = 0;
        for s in 0..self.object_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &m in &self.out[u] {
                    let w = self.morphisms[m].target;
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
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

    /// Composite slot map of a walk given as morphism indices, starting at
    /// `start`.
    pub fn walk_map(&self, start: usize, walk: &[usize]) -> Result<Perm, GroupoidError> {
        let mut at = start;
        let mut acc = Perm::identity(self.slot_count);
        for (step, &m) in walk.iter().enumerate() {
            let morphism = &self.morphisms[m];
            if morphism.source != at {
                return Err(GroupoidError::BrokenPath {
                    step,
                    from: at,
                    label: morphism.label,
                    to: morphism.target,
                });
            }
            acc = acc.then_unchecked(&morphism.map);
            at = morphism.target;
        }
        Ok(acc)
    }

    /// Transport along `steps`, each step a `(label, next object)` pair.
    pub fn transport(
        &self,
        start: usize,
        steps: &[(usize, usize)],
    ) -> Result<TransportPath, GroupoidError> {
        if start >= self.object_count {
            return Err(GroupoidError::NoSuchObject(start));
        }
        let mut objects = vec![start];
        let mut labels = Vec::new();
        let mut map = Perm::identity(self.slot_count);
        for (step, &(label, next)) in steps.iter().enumerate() {
            let at = *objects.last().unwrap();
            let m = self.find(at, label, next).ok_or(GroupoidError::BrokenPath {
                step,
                from: at,
                label,
                to: next,
            })?;
            map = map.then_unchecked(&self.morphisms[m].map);
            objects.push(next);
            labels.push(label);
        }
        Ok(TransportPath {
            objects,
            labels,
            map,
        })
    }

    /// Transport along an alternating `[object, label, object, …]` list.
    pub fn transport_alternating(&self, path: &[usize]) -> Result<TransportPath, GroupoidError> {
        if path.len().is_multiple_of(2) {
            return Err(GroupoidError::MalformedPath);
        }
        let steps: Vec<(usize, usize)> = path[1..].chunks(2).map(|c| (c[0], c[1])).collect();
        self.transport(path[0], &steps)
    }

    /// Moves a pattern along a transport path.
    pub fn transport_pattern(
        &self,
        pattern: &Pattern,
        path: &TransportPath,
    ) -> Result<Pattern, GroupoidError> {
        pattern.transport(path)
    }
}

/// A walk in a groupoid together with its composite slot bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportPath {
    objects: Vec<usize>,
    labels: Vec<usize>,
    map: Perm,
}

impl TransportPath {
    pub fn source(&self) -> usize {
        self.objects[0]
    }

    pub fn target(&self) -> usize {
        *self.objects.last().unwrap()
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `map[slot of source] = slot of target`.
    pub fn map(&self) -> &Perm {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.source() == self.target()
    }

    /// The path walked backwards, recomposed from the groupoid's morphisms.
    pub fn reversed(&self, groupoid: &Groupoid) -> Result<TransportPath, GroupoidError> {
        let steps: Vec<(usize, usize)> = (0..self.len())
            .rev()
            .map(|i| (self.labels[i], self.objects[i]))
            .collect();
        groupoid.transport(self.target(), &steps)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &TransportPath) -> Result<TransportPath, GroupoidError> {
        if self.target() != other.source() {
            return Err(GroupoidError::BaseMismatch {
                expected: self.target(),
                found: other.source(),
            });
        }
        let mut objects = self.objects.clone();
        objects.extend_from_slice(&other.objects[1..]);
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Ok(TransportPath {
            objects,
            labels,
            map: self.map.then_unchecked(&other.map),
        })
    }

    /// `[σ₀, r₁, σ₁, r₂, …, σ_m]`.
    pub fn to_alternating(&self) -> Vec<usize> {
        let mut out = vec![self.objects[0]];
        for i in 0..self.len() {
            out.push(self.labels[i]);
            out.push(self.objects[i + 1]);
        }
        out
    }
}

/// A symmetry-breaking pattern: a labelling of an object's slots by the
/// slots of a reference frame.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pattern {
    pub object: usize,
    /// `labelling[reference slot] = slot of object`
    pub labelling: Perm,
}

impl Pattern {
    /// The reference frame itself, placed on `object`.
    pub fn identity(object: usize, slots: usize) -> Self {
        Pattern {
            object,
            labelling: Perm::identity(slots),
        }
    }

    pub fn transport(&self, path: &TransportPath) -> Result<Pattern, GroupoidError> {
        if path.source() != self.object {
            return Err(GroupoidError::BaseMismatch {
                expected: path.source(),
                found: self.object,
            });
        }
        Ok(Pattern {
            object: path.target(),
            labelling: self
                .labelling
                .then(path.map())
                .map_err(|_| GroupoidError::BadMorphism(path.map().degree()))?,
        })
    }

    /// Vertex carrying each reference label.
    pub fn vertex_labels(&self, complex: &CellComplex) -> Vec<usize> {
        let facet = complex.facet(self.object);
        self.labelling.images().iter().map(|&s| facet[s]).collect()
    }
}

/// Objects of the tribar groupoid.
pub const TRIBAR_OBJECTS: [&str; 3] = ["A", "B", "C"];

/// Rotation of the parallelepiped by a quarter turn about its long axis
/// (coordinate 0): `(x₀, x₁, x₂) ↦ (x₀, x₂, 1 − x₁)` on corner addresses.
pub fn tribar_quarter_turn() -> SignedPerm {
    SignedPerm::new(Perm::from_images(vec![0, 2, 1]).unwrap(), vec![1, -1, 1]).unwrap()
}

/// The groupoid of the three congruent sides `A`, `B`, `C` of the
/// impossible tribar.
///
/// Each side is a combinatorial parallelepiped with 8 corner slots (corner
/// addresses in `{0,1}³`, coordinate 0 along the long axis). The local
/// symmetries are `α_BA : A → B` (label 0), `α_CB : B → C` (label 1) and
/// `α_AC : C → A` (label 2). `α_BA` matches corners directly, `α_CB` is a
/// half turn about coordinate 1, and `α_AC` closes the loop so that
/// `α_BA ∗ α_CB ∗ α_AC` is the quarter turn about the long axis.
pub fn tribar_groupoid() -> Groupoid {
    let alpha_ba = SignedPerm::identity(3);
    let alpha_cb = SignedPerm::new(Perm::identity(3), vec![-1, 1, -1]).unwrap();
    let alpha_ac = alpha_ba
        .then(&alpha_cb)
        .unwrap()
        .inverse()
        .then(&tribar_quarter_turn())
        .unwrap();
    let morphisms = [(0, 1, alpha_ba), (1, 2, alpha_cb), (2, 0, alpha_ac)]
        .into_iter()
        .enumerate()
        .map(|(label, (source, target, s))| ElemMorphism {
            source,
            target,
            label,
            map: s.corner_action(),
        })
        .collect();
    Groupoid::from_generators(3, 8, Some(CellShape::Cube(3)), morphisms).expect("tribar is well formed")
}
