//! The Weyl group `W_n` of type `B_n`, as signed permutations of
//! `ε_2..ε_{n+1}` (`ε_1` is fixed).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{
    ambient_simple_root, positive_roots, simple_coroot_vector, AlphaTorus, Root, SignedRoot,
};
use crate::localfield::FieldElement;
use crate::{Error, Result};

/// Largest rank accepted by [`weyl_enumerate`].
pub const WEYL_RANK_BOUND: usize = 6;

/// `images[p] = ±(q+1)` means `ε_{p+2} ↦ ±ε_{q+2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<i8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        WeylElement {
            images: (1..=n as i8).collect(),
        }
    }

    /// `w₀ = -1` on `ε_2..ε_{n+1}`.
    pub fn longest(n: usize) -> WeylElement {
        WeylElement {
            images: (1..=n as i8).map(|k| -k).collect(),
        }
    }

    /// The simple reflection `w_{α_k}`, `2 ≤ k ≤ n+1`.
    pub fn simple(n: usize, k: usize) -> Result<WeylElement> {
        if k < 2 || k > n + 1 {
            return Err(Error::SimpleIndexOutOfRange {
                index: k,
                max: n + 1,
            });
        }
        let mut w = WeylElement::identity(n);
        let p = k - 2;
        if k == n + 1 {
            w.images[p] = -w.images[p];
        } else {
            w.images.swap(p, p + 1);
        }
        Ok(w)
    }

    /// `w_{k_1} w_{k_2} ⋯ w_{k_m}` (indices `2..=n+1`).
    pub fn from_word(n: usize, word: &[usize]) -> Result<WeylElement> {
        let mut w = WeylElement::identity(n);
        for &k in word {
            let s = WeylElement::simple(n, k).map_err(|_| {
                Error::InvalidWord(format!(
                    "letter {k} is not a simple reflection of W_{n} (use 2..={})",
                    n + 1
                ))
            })?;
            w = w.compose(&s);
        }
        Ok(w)
    }

    /// Signed images, `±(q+1)` for `ε_{p+2} ↦ ±ε_{q+2}`.
    pub fn signed_images(&self) -> &[i8] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let images = other
            .images
            .iter()
            .map(|&img| {
                let mid = self.images[img.unsigned_abs() as usize - 1];
                if img < 0 {
                    -mid
                } else {
                    mid
                }
            })
            .collect();
        WeylElement { images }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut images = vec![0i8; self.rank()];
        for (p, &img) in self.images.iter().enumerate() {
            let q = img.unsigned_abs() as usize - 1;
            images[q] = if img < 0 { -(p as i8 + 1) } else { p as i8 + 1 };
        }
        WeylElement { images }
    }

    /// Action on an ambient `ε` (or `ε^∨`) vector of length `n+1`.
    pub fn apply_vector(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        out[0] = v[0];
        for (p, &img) in self.images.iter().enumerate() {
            let q = img.unsigned_abs() as usize;
            out[q] = if img < 0 { -v[p + 1] } else { v[p + 1] };
        }
        out
    }

    pub fn apply(&self, root: Root) -> SignedRoot {
        let n = self.rank();
        Root::from_epsilon_vector(&self.apply_vector(&root.epsilon_vector(n)))
            .expect("Weyl images of roots are roots")
    }

    pub fn apply_signed(&self, root: SignedRoot) -> SignedRoot {
        let mut r = self.apply(root.root);
        r.negative ^= root.negative;
        r
    }

    /// `{α > 0 : wα < 0}`.
    pub fn inversion_set(&self) -> Vec<Root> {
        positive_roots(self.rank())
            .into_iter()
            .filter(|&r| self.apply(r).negative)
            .collect()
    }

    pub fn length(&self) -> usize {
        self.inversion_set().len()
    }

    /// A reduced word by greedy removal of right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut cur = self.clone();
        let mut word = Vec::new();
        while !cur.is_identity() {
            let k = (2..=n + 1)
                .find(|&k| {
                    cur.apply(ambient_simple_root(n, k).expect("in range"))
                        .negative
                })
                .expect("a non-identity element has a right descent");
            cur = cur.compose(&WeylElement::simple(n, k).expect("in range"));
            word.push(k);
        }
        word.reverse();
        word
    }

    /// Matrix `M` with `w·α_j^∨ = Σ_i M[i][j] α_i^∨` over the ambient
    /// simple coroots `α_1^∨..α_{n+1}^∨`.
    pub fn coroot_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0; n + 1]; n + 1];
        for j in 1..=n + 1 {
            let image = self.apply_vector(&simple_coroot_vector(n, j).expect("in range"));
            let coeffs = epsilon_to_alpha_coroot(&image);
            for i in 0..=n {
                m[i][j - 1] = coeffs[i];
            }
        }
        m
    }

    /// `w t w^{-1}` on the torus, through [`WeylElement::coroot_matrix`].
    pub fn act_on_torus(&self, t: &AlphaTorus) -> AlphaTorus {
        let m = self.coroot_matrix();
        let coords = m
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, &e)| t.coord(j + 1).pow(e))
                    .product::<FieldElement>()
            })
            .collect();
        AlphaTorus::new(coords)
    }
}

/// Writes an `ε^∨` vector in the `α^∨` basis; the vector must lie in the
/// coroot lattice.
fn epsilon_to_alpha_coroot(c: &[i64]) -> Vec<i64> {
    let n = c.len() - 1;
    let mut m = vec![0; n + 1];
    let mut acc = 0;
    for i in 0..n {
        acc += c[i];
        m[i] = acc;
    }
    let total: i64 = c.iter().sum();
    debug_assert!(total % 2 == 0, "not in the coroot lattice");
    m[n] = total / 2;
    m
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.reduced_word();
        if word.is_empty() {
            return f.write_str("id");
        }
        for (k, l) in word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

/// All `2^n n!` elements of `W_n`, `n ≤` [`WEYL_RANK_BOUND`].
pub fn weyl_enumerate(n: usize) -> Result<Vec<WeylElement>> {
    if n > WEYL_RANK_BOUND {
        return Err(Error::SpaceTooLarge {
            size: (1u128 << n) * (1..=n as u128).product::<u128>(),
            bound: (1u128 << WEYL_RANK_BOUND) * (1..=WEYL_RANK_BOUND as u128).product::<u128>(),
        });
    }
    let mut perms: Vec<Vec<i8>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for q in 1..=n as i8 {
                if !p.iter().any(|&x| x.abs() == q) {
                    for s in [q, -q] {
                        let mut p = p.clone();
                        p.push(s);
                        next.push(p);
                    }
                }
            }
        }
        perms = next;
    }
    Ok(perms
        .into_iter()
        .map(|images| WeylElement { images })
        .collect())
}
