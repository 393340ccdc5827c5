//! Signed permutations: the hyperoctahedral group `B_k` of symmetries of the
//! `k`-cube, and its even subgroup.

use serde::{Deserialize, Serialize};

use super::{Perm, PermError};

/// A signed permutation matrix of size `k`.
///
/// Column `i` has its single nonzero entry `signs[i]` in row `perm(i)`. On
/// `{±1}^k` coordinates this is `s ↦ s'` with `s'[perm(i)] = signs[i] * s[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSigned", into = "RawSigned")]
pub struct SignedPerm {
    perm: Perm,
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct RawSigned {
    perm: Perm,
    signs: Vec<i8>,
}

impl TryFrom<RawSigned> for SignedPerm {
    type Error = PermError;
    fn try_from(raw: RawSigned) -> Result<Self, Self::Error> {
        SignedPerm::new(raw.perm, raw.signs)
    }
}

impl From<SignedPerm> for RawSigned {
    fn from(s: SignedPerm) -> Self {
        RawSigned {
            perm: s.perm,
            signs: s.signs,
        }
    }
}

impl SignedPerm {
    pub fn new(perm: Perm, signs: Vec<i8>) -> Result<Self, PermError> {
        if signs.len() != perm.degree() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(PermError::BadSigns {
                expected: perm.degree(),
            });
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn identity(k: usize) -> Self {
        SignedPerm {
            perm: Perm::identity(k),
            signs: vec![1; k],
        }
    }

    /// The reflection negating coordinate `axis`.
    pub fn reflection(k: usize, axis: usize) -> Self {
        let mut s = SignedPerm::identity(k);
        s.signs[axis] = -1;
        s
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    /// Number of `-1` entries.
    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &SignedPerm) -> Result<SignedPerm, PermError> {
        let perm = self.perm.then(&other.perm)?;
        let signs = (0..self.degree())
            .map(|i| self.signs[i] * other.signs[self.perm.apply(i)])
            .collect();
        Ok(SignedPerm { perm, signs })
    }

    pub fn inverse(&self) -> SignedPerm {
        let perm = self.perm.inverse();
        let mut signs = vec![1; self.degree()];
        for i in 0..self.degree() {
            signs[self.perm.apply(i)] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Recovers the signed permutation from its action on the `2^k` corner
    /// addresses of a cube, where bit `i` of an address is coordinate `i`.
    ///
    /// Returns `None` when `action` is not a symmetry of the cube.
    pub fn from_corner_action(action: &Perm, k: usize) -> Option<SignedPerm> {
        if action.degree() != 1 << k {
            return None;
        }
        let t = action.apply(0);
        let mut images = vec![0; k];
        for (i, image) in images.iter_mut().enumerate() {
            let e = action.apply(1 << i) ^ t;
            if e.count_ones() != 1 {
                return None;
            }
            *image = e.trailing_zeros() as usize;
        }
        let perm = Perm::from_images(images).ok()?;
        let signs = (0..k)
            .map(|i| if t >> perm.apply(i) & 1 == 1 { -1 } else { 1 })
            .collect();
        let s = SignedPerm { perm, signs };
        (s.corner_action() == *action).then_some(s)
    }

    /// The induced permutation of corner addresses: coordinate `i` of a
    /// corner moves to coordinate `perm(i)` and is complemented when the
    /// sign is negative.
    pub fn corner_action(&self) -> Perm {
        let k = self.degree();
        let images = (0..1usize << k)
            .map(|x| {
                let mut y = 0;
                for i in 0..k {
                    let bit = (x >> i & 1) ^ usize::from(self.signs[i] < 0);
                    y |= bit << self.perm.apply(i);
                }
                y
            })
            .collect();
        Perm::from_images(images).expect("cube symmetry is a bijection")
    }
}

/// 0 when the number of `-1` entries is even, 1 otherwise.
pub fn signed_parity(s: &SignedPerm) -> u8 {
    (s.negative_count() % 2) as u8
}

/// True iff every generator lies in `B_k^even`. Parity is a homomorphism to
/// `ℤ₂`, so checking generators decides membership of the whole group.
pub fn all_in_even_subgroup(gens: &[SignedPerm]) -> bool {
    gens.iter().all(|g| signed_parity(g) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        assert_eq!(signed_parity(&SignedPerm::identity(3)), 0);
        let r0 = SignedPerm::reflection(3, 0);
        let r1 = SignedPerm::reflection(3, 1);
        assert_eq!(signed_parity(&r0), 1);
        assert_eq!(signed_parity(&r0.then(&r1).unwrap()), 0);
    }

    #[test]
    fn even_subgroup_generators() {
        let sign_free = SignedPerm::new(Perm::from_cycles(3, &[&[0, 1]]).unwrap(), vec![1; 3]).unwrap();
        assert!(all_in_even_subgroup(&[sign_free.clone(), SignedPerm::identity(3)]));
        assert!(!all_in_even_subgroup(&[sign_free, SignedPerm::reflection(3, 2)]));
        let two_neg = SignedPerm::new(Perm::identity(3), vec![-1, -1, 1]).unwrap();
        let two_neg_b = SignedPerm::new(Perm::from_cycles(3, &[&[0, 2]]).unwrap(), vec![1, -1, -1]).unwrap();
        assert!(all_in_even_subgroup(&[two_neg, two_neg_b]));
    }

    #[test]
    fn corner_action_roundtrip() {
        let s = SignedPerm::new(Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(), vec![1, -1, 1]).unwrap();
        let action = s.corner_action();
        assert_eq!(SignedPerm::from_corner_action(&action, 3), Some(s));
        // a swap of two corners is not a cube symmetry
        let bad = Perm::transposition(8, 0, 7);
        assert_eq!(SignedPerm::from_corner_action(&bad, 3), None);
    }

    #[test]
    fn corner_action_is_homomorphism() {
        let a = SignedPerm::new(Perm::from_cycles(3, &[&[0, 1]]).unwrap(), vec![-1, 1, 1]).unwrap();
        let b = SignedPerm::new(Perm::from_cycles(3, &[&[1, 2]]).unwrap(), vec![1, 1, -1]).unwrap();
        let ab = a.then(&b).unwrap();
        assert_eq!(ab.corner_action(), a.corner_action().then(&b.corner_action()).unwrap());
        assert!(a.then(&a.inverse()).unwrap() == SignedPerm::identity(3));
    }

    #[test]
    fn json_shape() {
        let s = SignedPerm::reflection(2, 1);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"perm":[0,1],"signs":[1,-1]}"#);
        assert!(serde_json::from_str::<SignedPerm>(r#"{"perm":[0,1],"signs":[1,2]}"#).is_err());
    }
}
