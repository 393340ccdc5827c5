//! Holonomy groups of connected groupoids.
//!
//! The vertex group at a base object is generated by one loop per non-tree
//! elementary morphism of a spanning tree: walk the tree out to the source,
//! cross the morphism, walk the tree back. Loop maps act on the base
//! object's slots.

use std::collections::VecDeque;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{CellComplex, CellShape, VertexMap};
use crate::groupoid::Groupoid;
use crate::perm::{GroupTag, Perm, PermGroup, SignedPerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HolonomyError {
    #[error("groupoid is not connected: {reached} of {total} objects reachable from {base}")]
    NotConnected {
        base: usize,
        reached: usize,
        total: usize,
    },
    #[error("base object {0} does not exist")]
    NoSuchBase(usize),
    #[error("map is degenerate on face {witness:?}")]
    NotNondegenerate { witness: Vec<usize> },
    #[error("source has dimension {source_dim}, target {target_dim}")]
    DimensionMismatch { source_dim: usize, target_dim: usize },
}

/// A spanning tree of the component of `root`, with the transport from the
/// root to every reached object.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: usize,
    /// (morphism entering the object, parent object)
    parent: Vec<Option<(usize, usize)>>,
    /// `transport[x][root slot] = slot of x`
    transport: Vec<Option<Perm>>,
    order: Vec<usize>,
}

impl SpanningTree {
    fn seed(g: &Groupoid, root: usize) -> Result<Self, HolonomyError> {
        if root >= g.object_count() {
            return Err(HolonomyError::NoSuchBase(root));
        }
        let n = g.object_count();
        let mut transport = vec![None; n];
        transport[root] = Some(Perm::identity(g.slot_count()));
        Ok(SpanningTree {
            root,
            parent: vec![None; n],
            transport,
            order: vec![root],
        })
    }

    // attaches the target of `m` if it is new; true when attached
    fn attach(&mut self, g: &Groupoid, m: usize) -> bool {
        let morphism = g.morphism(m);
        if self.transport[morphism.target].is_some() {
            return false;
        }
        let t = self.transport[morphism.source]
            .as_ref()
            .expect("morphism leaves the tree")
            .then_unchecked(&morphism.map);
        self.transport[morphism.target] = Some(t);
        self.parent[morphism.target] = Some((m, morphism.source));
        self.order.push(morphism.target);
        true
    }

    /// Breadth-first tree; ties are broken by lowest label, then target.
    pub fn bfs(g: &Groupoid, root: usize) -> Result<Self, HolonomyError> {
        let mut tree = Self::seed(g, root)?;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &m in g.outgoing(x) {
                if tree.attach(g, m) {
                    queue.push_back(g.morphism(m).target);
                }
            }
        }
        Ok(tree)
    }

    /// A tree grown by attaching a uniformly chosen frontier morphism at
    /// each step.
    pub fn random(g: &Groupoid, root: usize, seed: u64) -> Result<Self, HolonomyError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tree = Self::seed(g, root)?;
        let mut frontier = g.outgoing(root).to_vec();
        while !frontier.is_empty() {
            let m = frontier.swap_remove(rng.gen_range(0..frontier.len()));
            if tree.attach(g, m) {
                frontier.extend_from_slice(g.outgoing(g.morphism(m).target));
            }
        }
        Ok(tree)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Objects in the order they joined the tree.
    pub fn objects(&self) -> &[usize] {
        &self.order
    }

    pub fn contains(&self, object: usize) -> bool {
        self.transport.get(object).is_some_and(Option::is_some)
    }

    /// Morphism entering `object` from its parent.
    pub fn parent_morphism(&self, object: usize) -> Option<usize> {
        self.parent[object].map(|(m, _)| m)
    }

    pub fn is_tree_morphism(&self, g: &Groupoid, m: usize) -> bool {
        let t = g.morphism(m).target;
        let s = g.morphism(m).source;
        self.parent_morphism(t) == Some(m) || self.parent_morphism(s) == Some(g.inverse_of(m))
    }

    /// Root slots to the slots of `object`.
    pub fn transport_to(&self, object: usize) -> Option<&Perm> {
        self.transport.get(object)?.as_ref()
    }

    /// Morphism indices walking from the root to `object`.
    pub fn path_from_root(&self, object: usize) -> Vec<usize> {
        let mut walk = Vec::new();
        let mut at = object;
        while let Some((m, up)) = self.parent[at] {
            walk.push(m);
            at = up;
        }
        walk.reverse();
        walk
    }

    /// Morphism indices walking from `object` back to the root.
    pub fn path_to_root(&self, g: &Groupoid, object: usize) -> Vec<usize> {
        self.path_from_root(object)
            .into_iter()
            .rev()
            .map(|m| g.inverse_of(m))
            .collect()
    }
}

/// Holonomy group at a base object, with the loops that generate it.
#[derive(Clone, Debug)]
pub struct HolonomyResult {
    pub base: usize,
    /// loop maps on the base slots, one per non-tree morphism pair
    pub generators: Vec<Perm>,
    /// the closed walk (morphism indices) behind each generator
    pub loops: Vec<Vec<usize>>,
    pub group: PermGroup,
    pub tree: SpanningTree,
    shape: Option<CellShape>,
}

impl HolonomyResult {
    pub fn order(&self) -> &BigUint {
        self.group.order()
    }

    pub fn tag(&self) -> GroupTag {
        self.group.recognize()
    }

    /// Generators as signed permutations of the cube directions, for cubical
    /// groupoids.
    pub fn signed_generators(&self) -> Option<Vec<SignedPerm>> {
        let Some(CellShape::Cube(k)) = self.shape else {
            return None;
        };
        self.generators
            .iter()
            .map(|g| SignedPerm::from_corner_action(g, k))
            .collect()
    }

    /// Loop `i` as an alternating `[object, label, object, …]` list.
    pub fn loop_alternating(&self, g: &Groupoid, i: usize) -> Vec<usize> {
        let mut out = vec![self.base];
        for &m in &self.loops[i] {
            out.push(g.morphism(m).label);
            out.push(g.morphism(m).target);
        }
        out
    }

    pub fn summary(&self, g: &Groupoid) -> HolonomySummary {
        HolonomySummary {
            base: self.base,
            order: self.order().to_string(),
            tag: self.tag(),
            degree: self.group.degree(),
            generators: self.generators.iter().map(|p| p.images().to_vec()).collect(),
            loops: (0..self.loops.len())
                .map(|i| self.loop_alternating(g, i))
                .collect(),
        }
    }
}

/// Serializable view of a holonomy computation; the order is a decimal
/// string so that large groups survive JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolonomySummary {
    pub base: usize,
    pub order: String,
    pub tag: GroupTag,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub loops: Vec<Vec<usize>>,
}

/// Holonomy from a given spanning tree; covers the tree's component only.
pub fn holonomy_with_tree(g: &Groupoid, tree: SpanningTree) -> HolonomyResult {
    let base = tree.root();
    let mut generators = Vec::new();
    let mut loops = Vec::new();
    for (m, morphism) in g.morphisms().iter().enumerate() {
        if m > g.inverse_of(m) || !tree.contains(morphism.source) || tree.is_tree_morphism(g, m) {
            continue;
        }
        let to_source = tree.transport_to(morphism.source).unwrap();
        let to_target = tree.transport_to(morphism.target).unwrap();
        generators.push(
            to_source
                .then_unchecked(&morphism.map)
                .then_unchecked(&to_target.inverse()),
        );
        let mut walk = tree.path_from_root(morphism.source);
        walk.push(m);
        walk.extend(tree.path_to_root(g, morphism.target));
        loops.push(walk);
    }
    let group =
        PermGroup::new(g.slot_count(), generators.clone()).expect("loop maps share the slot degree");
    HolonomyResult {
        base,
        generators,
        loops,
        group,
        tree,
        shape: g.shape(),
    }
}

/// Holonomy at `base` of the component containing it.
pub fn component_holonomy(g: &Groupoid, base: usize) -> Result<HolonomyResult, HolonomyError> {
    Ok(holonomy_with_tree(g, SpanningTree::bfs(g, base)?))
}

/// Holonomy at `base`; the whole groupoid must be connected.
pub fn holonomy_group(g: &Groupoid, base: usize) -> Result<HolonomyResult, HolonomyError> {
    let tree = SpanningTree::bfs(g, base)?;
    if tree.objects().len() != g.object_count() {
        return Err(HolonomyError::NotConnected {
            base,
            reached: tree.objects().len(),
            total: g.object_count(),
        });
    }
    Ok(holonomy_with_tree(g, tree))
}

/// Group of projectivities of a pure complex at a base facet.
pub fn complex_holonomy(k: &CellComplex, base: usize) -> Result<HolonomyResult, HolonomyError> {
    holonomy_group(&Groupoid::from_complex(k), base)
}

/// Facets pairwise joined by chains of ridge-adjacent facets.
pub fn is_strongly_connected(k: &CellComplex) -> bool {
    k.is_strongly_connected()
}

/// True iff every base object and every listed random tree seed give the
/// same holonomy order and recognition tag. Disconnected groupoids fail.
pub fn holonomy_order_invariance(g: &Groupoid, seeds: &[u64]) -> bool {
    let Ok(reference) = holonomy_group(g, 0) else {
        return false;
    };
    let (order, tag) = (reference.order().clone(), reference.tag());
    (0..g.object_count()).all(|base| {
        let bfs = holonomy_with_tree(g, SpanningTree::bfs(g, base).unwrap());
        bfs.order() == &order
            && bfs.tag() == tag
            && seeds.iter().all(|&s| {
                let r = holonomy_with_tree(g, SpanningTree::random(g, base, s).unwrap());
                r.order() == &order && r.tag() == tag
            })
    })
}

/// Outcome of comparing the holonomy of a complex with that of its image
/// under a non-degenerate map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub source_base: usize,
    pub target_base: usize,
    pub source_order: String,
    pub target_order: String,
    pub image_order: String,
    /// every renamed source generator lies in the target holonomy
    pub generators_land: bool,
    /// image order equals source order, so the induced map is injective
    pub injective: bool,
    /// every flip of the source maps to the flip of the image facets
    pub flips_commute: bool,
    pub embedded: bool,
}

/// Checks that a non-degenerate map induces an injective homomorphism from
/// the source holonomy (at facet 0) into the target holonomy at the image
/// facet.
pub fn induced_embedding_check(f: &VertexMap) -> Result<EmbeddingReport, HolonomyError> {
    let (p, q) = (f.source(), f.target());
    if p.shape() != q.shape() {
        return Err(HolonomyError::DimensionMismatch {
            source_dim: p.dim(),
            target_dim: q.dim(),
        });
    }
    if let Some(witness) = f.degeneracy_witness() {
        return Err(HolonomyError::NotNondegenerate { witness });
    }
    let image_facet = |x: usize| {
        let mut image: Vec<usize> = p.facet(x).iter().map(|&v| f.apply(v)).collect();
        image.sort_unstable();
        q.find_facet(&image).expect("non-degenerate maps send facets to facets")
    };
    // slots of x to slots of its image
    let rename = |x: usize, fx: usize| {
        let images = p
            .facet(x)
            .iter()
            .map(|&v| q.slot_of(fx, f.apply(v)).unwrap())
            .collect();
        Perm::from_images(images).unwrap()
    };

    let gp = Groupoid::from_complex(p);
    let gq = Groupoid::from_complex(q);
    let base = 0;
    let target_base = image_facet(base);
    let hp = holonomy_group(&gp, base)?;
    let hq = holonomy_group(&gq, target_base)?;
    let rho = rename(base, target_base);
    let images: Vec<Perm> = hp
        .generators
        .iter()
        .map(|g| g.relabel(&rho).unwrap())
        .collect();
    let generators_land = images.iter().all(|g| hq.group.contains(g).unwrap());
    let image = PermGroup::new(q.shape().slot_count(), images).unwrap();
    let injective = image.order() == hp.order();

    let flips_commute = gp.morphisms().iter().all(|m| {
        let (fa, fb) = (image_facet(m.source), image_facet(m.target));
        let mut ridge: Vec<usize> = p.ridge(m.label).iter().map(|&v| f.apply(v)).collect();
        ridge.sort_unstable();
        (0..q.ridge_count())
            .find(|&r| q.ridge(r) == ridge.as_slice())
            .and_then(|r| gq.find(fa, r, fb))
            .is_some_and(|n| {
                m.map.then_unchecked(&rename(m.target, fb))
                    == rename(m.source, fa).then_unchecked(&gq.morphism(n).map)
            })
    });

    Ok(EmbeddingReport {
        source_base: base,
        target_base,
        source_order: hp.order().to_string(),
        target_order: hq.order().to_string(),
        image_order: image.order().to_string(),
        generators_land,
        injective,
        flips_commute,
        embedded: generators_land && injective && flips_commute,
    })
}
