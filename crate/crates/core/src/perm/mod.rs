//! Permutations and signed permutations.
//!
//! Composition follows the left-to-right convention used throughout the crate:
//! `a.then(&b)` applies `a` first and `b` second, so `(x)(a ∗ b) = b(a(x))`.
//! Holonomy and transport code composes paths in the order they are walked,
//! which is exactly this convention.

mod group;
mod signed;

pub use group::{closure_small, schreier_sims, GroupTag, PermGroup, CLOSURE_LIMIT};
pub use signed::{all_in_even_subgroup, signed_parity, SignedPerm};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image array is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("group closure exceeds {limit} elements")]
    ClosureTooLarge { limit: usize },
    #[error("sign vector must have length {expected} with entries ±1")]
    BadSigns { expected: usize },
}

/// A permutation of `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(n));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from cycles, applied as a product of disjoint
    /// cycles. Overlapping cycles are rejected.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(PermError::NotABijection(degree));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self ∗ other`: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &j)| i != j)
    }

    /// Nontrivial cycles in increasing order of their smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Element order (lcm of the cycle lengths).
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| {
            let len = c.len() as u128;
            acc / gcd(acc, len) * len
        })
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn pow(&self, mut k: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then_unchecked(&base);
            }
            base = base.then_unchecked(&base);
            k >>= 1;
        }
        acc
    }

    /// Conjugates by a relabelling `rename`: the result acts on the renamed
    /// points as `self` acts on the originals, i.e. `rename⁻¹ ∗ self ∗ rename`.
    pub fn relabel(&self, rename: &Perm) -> Result<Perm, PermError> {
        rename.inverse().then(self)?.then(rename)
    }
}

/// `a ∗ b` in the left-to-right convention.
pub fn compose(a: &Perm, b: &Perm) -> Result<Perm, PermError> {
    a.then(b)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = PermError;
    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::from_images(images)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.images
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_left_to_right() {
        // (0 1) then (1 2): 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.images(), &[2, 0, 1]);
        // the right-to-left product would give 0 -> 1, which we must not produce
        let ba = compose(&b, &a).unwrap();
        assert_eq!(ba.images(), &[1, 2, 0]);
    }

    #[test]
    fn inverse_and_identity() {
        let a = Perm::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(a.then(&a.inverse()).unwrap().is_identity());
        let id = Perm::identity(4);
        assert_eq!(id.then(&a).unwrap(), a);
    }

    #[test]
    fn degree_mismatch() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert_eq!(
            a.then(&b),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
        assert!(serde_json::from_str::<Perm>("[1,1]").is_err());
    }

    #[test]
    fn order_parity_and_cycles() {
        let p = Perm::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
    }

    #[test]
    fn relabel_conjugates() {
        let p = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let r = Perm::from_cycles(3, &[&[0, 2]]).unwrap();
        // the swap of 0,1 renamed through 0<->2 is the swap of 2,1
        assert_eq!(p.relabel(&r).unwrap(), Perm::from_cycles(3, &[&[1, 2]]).unwrap());
    }
}
