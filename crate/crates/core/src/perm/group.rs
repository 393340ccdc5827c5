//! Permutation groups via a deterministic Schreier–Sims stabilizer chain.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use super::{Perm, PermError};

/// Upper bound on the number of elements `closure_small` will enumerate.
pub const CLOSURE_LIMIT: usize = 1_000_000;

/// Groups at or below this order are enumerated when testing cyclicity.
const CYCLIC_SCAN_LIMIT: u64 = 100_000;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Perm>>,
    transversal_inv: Vec<Option<Perm>>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            transversal_inv: vec![None; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal_inv = vec![None; degree];
        self.orbit.clear();
        let id = Perm::identity(degree);
        self.transversal[self.base_point] = Some(id.clone());
        self.transversal_inv[self.base_point] = Some(id);
        self.orbit.push(self.base_point);
        let mut queue = VecDeque::from([self.base_point]);
        while let Some(b) = queue.pop_front() {
            for g in &self.gens {
                let c = g.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().then_unchecked(g);
                    self.transversal_inv[c] = Some(u.inverse());
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                    queue.push_back(c);
                }
            }
        }
    }
}

/// A permutation group given by generators, with its base and strong
/// generating set computed at construction.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let levels = build_chain(degree, &generators);
        let order = levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
        Ok(PermGroup {
            degree,
            generators,
            levels,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("no generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Sizes of the fundamental orbits along the stabilizer chain.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All strong generators, deduplicated, in level order.
    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if seen.insert(g.clone()) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (residue, level) = strip(&self.levels, p.clone(), 0);
        Ok(level == self.levels.len() && residue.is_identity())
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    /// True iff every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool, PermError> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn recognize(&self) -> GroupTag {
        recognize(self)
    }
}

/// Builds the group generated by `gens` on `degree` points.
pub fn schreier_sims(degree: usize, gens: &[Perm]) -> Result<PermGroup, PermError> {
    PermGroup::new(degree, gens.to_vec())
}

fn strip(levels: &[Level], mut g: Perm, start: usize) -> (Perm, usize) {
    for (l, level) in levels.iter().enumerate().skip(start) {
        let b = g.apply(level.base_point);
        match &level.transversal_inv[b] {
            None => return (g, l),
            Some(u_inv) => g = g.then_unchecked(u_inv),
        }
    }
    (g, levels.len())
}

fn build_chain(degree: usize, generators: &[Perm]) -> Vec<Level> {
    let mut gens: Vec<Perm> = Vec::new();
    for g in generators {
        if !g.is_identity() && !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    if gens.is_empty() {
        return Vec::new();
    }

    // initial base: no generator may fix every base point
    let mut base: Vec<usize> = Vec::new();
    for g in &gens {
        if base.iter().all(|&b| g.apply(b) == b) {
            base.push(g.first_moved_point().unwrap());
        }
    }
    let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(degree, b)).collect();
    for g in &gens {
        for level in &mut levels {
            level.gens.push(g.clone());
            if g.apply(level.base_point) != level.base_point {
                break;
            }
        }
    }
    for level in &mut levels {
        level.rebuild_orbit();
    }

    let mut i = levels.len() as isize - 1;
    while i >= 0 {
        let lvl = i as usize;
        let mut restart: Option<usize> = None;
        'pairs: for oi in 0..levels[lvl].orbit.len() {
            let beta = levels[lvl].orbit[oi];
            for gi in 0..levels[lvl].gens.len() {
                let x = &levels[lvl].gens[gi];
                let gamma = x.apply(beta);
                let y = levels[lvl].transversal[beta]
                    .as_ref()
                    .unwrap()
                    .then_unchecked(x)
                    .then_unchecked(levels[lvl].transversal_inv[gamma].as_ref().unwrap());
                if y.is_identity() {
                    continue;
                }
                let (h, j) = strip(&levels, y, lvl + 1);
                if j < levels.len() || !h.is_identity() {
                    if j == levels.len() {
                        let point = h.first_moved_point().unwrap();
                        levels.push(Level::new(degree, point));
                    }
                    for level in levels.iter_mut().take(j + 1).skip(lvl + 1) {
                        level.gens.push(h.clone());
                        level.rebuild_orbit();
                    }
                    restart = Some(j);
                    break 'pairs;
                }
            }
        }
        match restart {
            Some(j) => i = j as isize,
            None => i -= 1,
        }
    }
    levels
}

/// Enumerates every element of `⟨gens⟩` by breadth-first multiplication.
///
/// Intended as an independent oracle for small groups; refuses to go past
/// [`CLOSURE_LIMIT`] elements.
pub fn closure_small(degree: usize, gens: &[Perm]) -> Result<HashSet<Perm>, PermError> {
    for g in gens {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then_unchecked(g);
            if seen.insert(q.clone()) {
                if seen.len() > CLOSURE_LIMIT {
                    return Err(PermError::ClosureTooLarge {
                        limit: CLOSURE_LIMIT,
                    });
                }
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

/// Coarse identification of a permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupTag {
    Trivial,
    Cyclic(u64),
    /// Alternating group on all `n` points of the degree.
    Alternating(usize),
    /// Symmetric group on all `n` points of the degree.
    Symmetric(usize),
    Other,
}

impl GroupTag {
    pub fn is_cyclic_of(&self, k: u64) -> bool {
        matches!(self, GroupTag::Cyclic(m) if *m == k) || (k == 1 && *self == GroupTag::Trivial)
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Trivial => write!(f, "trivial"),
            GroupTag::Cyclic(k) => write!(f, "cyclic({k})"),
            GroupTag::Alternating(n) => write!(f, "alternating({n})"),
            GroupTag::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupTag::Other => write!(f, "other"),
        }
    }
}

impl Serialize for GroupTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn recognize(group: &PermGroup) -> GroupTag {
    let order = group.order();
    if order.is_one() {
        return GroupTag::Trivial;
    }
    if let Some(ord) = order.to_u64() {
        let ord128 = ord as u128;
        if group.generators.iter().any(|g| g.order() == ord128) {
            return GroupTag::Cyclic(ord);
        }
        if ord <= CYCLIC_SCAN_LIMIT {
            if let Ok(elements) = closure_small(group.degree, &group.generators) {
                if elements.iter().any(|e| e.order() == ord128) {
                    return GroupTag::Cyclic(ord);
                }
            }
        }
    }
    let n = group.degree;
    let full = factorial(n);
    if *order == full && n >= 2 && group.contains(&Perm::transposition(n, 0, 1)) == Ok(true) {
        return GroupTag::Symmetric(n);
    }
    if n >= 3 && order * 2u32 == full {
        let three_cycle = Perm::from_cycles(n, &[&[0, 1, 2]]).unwrap();
        if group.generators.iter().all(Perm::is_even)
            && group.contains(&three_cycle) == Ok(true)
        {
            return GroupTag::Alternating(n);
        }
    }
    GroupTag::Other
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Perm {
        Perm::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn small_closures() {
        assert_eq!(closure_small(2, &[cyc(2, &[0, 1])]).unwrap().len(), 2);
        let s3 = closure_small(3, &[cyc(3, &[0, 1]), cyc(3, &[0, 1, 2])]).unwrap();
        assert_eq!(s3.len(), 6);
        assert_eq!(closure_small(4, &[]).unwrap().len(), 1);
    }

    #[test]
    fn closure_guard_trips() {
        // S_10 has 3,628,800 elements
        let gens = [cyc(10, &[0, 1]), cyc(10, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9])];
        assert_eq!(
            closure_small(10, &gens),
            Err(PermError::ClosureTooLarge {
                limit: CLOSURE_LIMIT
            })
        );
    }

    #[test]
    fn symmetric_15_order() {
        let n = 15;
        let cycle: Vec<usize> = (0..n).collect();
        let g = schreier_sims(n, &[cyc(n, &[0, 1]), cyc(n, &cycle)]).unwrap();
        assert_eq!(g.order(), &BigUint::from(1_307_674_368_000u64));
        assert_eq!(g.recognize(), GroupTag::Symmetric(15));
    }

    #[test]
    fn a4_from_three_cycles() {
        let g = schreier_sims(4, &[cyc(4, &[0, 1, 2]), cyc(4, &[1, 2, 3])]).unwrap();
        assert_eq!(g.order(), &BigUint::from(12u32));
        assert_eq!(
            closure_small(4, g.generators()).unwrap().len(),
            12
        );
        assert_eq!(g.recognize(), GroupTag::Alternating(4));
    }

    #[test]
    fn empty_generators() {
        let g = schreier_sims(5, &[]).unwrap();
        assert_eq!(g.order(), &BigUint::one());
        assert_eq!(g.recognize(), GroupTag::Trivial);
        assert!(g.contains(&Perm::identity(5)).unwrap());
        assert!(!g.contains(&cyc(5, &[0, 1])).unwrap());
    }

    #[test]
    fn alternating_15_membership() {
        let n = 15;
        // A_n is generated by the 3-cycles (0 1 k)
        let gens: Vec<Perm> = (2..n).map(|k| cyc(n, &[0, 1, k])).collect();
        let g = schreier_sims(n, &gens).unwrap();
        assert_eq!(g.order(), &BigUint::from(653_837_184_000u64));
        assert!(g.contains(&cyc(n, &[3, 7, 11])).unwrap());
        assert!(!g.contains(&cyc(n, &[13, 14])).unwrap());
        assert!(g.contains(&Perm::identity(n)).unwrap());
        assert_eq!(g.recognize(), GroupTag::Alternating(15));
        assert!(g.contains(&Perm::identity(4)).is_err());
    }

    #[test]
    fn cyclic_recognition() {
        let g = schreier_sims(4, &[cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert_eq!(g.recognize(), GroupTag::Cyclic(4));
        // Z2 x Z3 on disjoint supports is cyclic of order 6 but no generator shows it
        let g = schreier_sims(5, &[cyc(5, &[0, 1]), cyc(5, &[2, 3, 4])]).unwrap();
        assert_eq!(g.recognize(), GroupTag::Cyclic(6));
        // Klein four-group is not cyclic
        let v4 = schreier_sims(
            4,
            &[
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(v4.recognize(), GroupTag::Other);
    }

    #[test]
    fn subgroup_check() {
        let a4 = schreier_sims(4, &[cyc(4, &[0, 1, 2]), cyc(4, &[1, 2, 3])]).unwrap();
        let s4 = schreier_sims(4, &[cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert!(a4.is_subgroup_of(&s4).unwrap());
        assert!(!s4.is_subgroup_of(&a4).unwrap());
    }
}
