//! Root datum of `G_n = GSpin(2n+1)` inside the ambient `G'_{n+1}` of type
//! `B_{n+1}`.
//!
//! Ambient simple roots are `α_i = ε_i − ε_{i+1}` for `i ≤ n` and
//! `α_{n+1} = ε_{n+1}`, with coroots `α_i^∨ = ε_i^∨ − ε_{i+1}^∨` and
//! `α_{n+1}^∨ = 2ε_{n+1}^∨`. The roots of `G_n` only involve `ε_2..ε_{n+1}`;
//! `α_1` is ambient-only.

mod torus;
mod weyl;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::localfield::FieldElement;
use crate::{Error, Result};

pub use torus::{
    center_element, delta_b, embed_levi, upsilon, w0_conjugate, w0_conjugate_alpha, AlphaTorus,
    ConvenientTorus, TorusElement,
};
pub use weyl::{weyl_enumerate, WeylElement, WEYL_RANK_BOUND};

/// A root in `ε` coordinates (ambient indices, so `G_n` roots use `2..=n+1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `ε_i − ε_j`, `i < j`.
    Diff(usize, usize),
    /// `ε_i + ε_j`, `i < j`.
    Sum(usize, usize),
    /// `ε_i`.
    Short(usize),
}

/// `±α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub negative: bool,
    pub root: Root,
}

impl Root {
    /// Checks that this is a root of `G_n`.
    pub fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            Root::Diff(i, j) | Root::Sum(i, j) => 2 <= i && i < j && j <= n + 1,
            Root::Short(i) => 2 <= i && i <= n + 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::RootOutOfRange {
                n,
                detail: format!("{self}"),
            })
        }
    }

    pub fn is_long(self) -> bool {
        !matches!(self, Root::Short(_))
    }

    /// Coefficients in `ε_1..ε_{n+1}`.
    pub fn epsilon_vector(self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n + 1];
        match self {
            Root::Diff(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = -1;
            }
            Root::Sum(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = 1;
            }
            Root::Short(i) => v[i - 1] = 1,
        }
        v
    }

    /// The coroot in `ε^∨_1..ε^∨_{n+1}` coordinates.
    pub fn coroot_epsilon_vector(self, n: usize) -> Vec<i64> {
        let mut v = self.epsilon_vector(n);
        if let Root::Short(i) = self {
            v[i - 1] = 2;
        }
        v
    }

    /// Recovers `±α` from an `ε` vector; `None` if it is not a root.
    pub fn from_epsilon_vector(v: &[i64]) -> Option<SignedRoot> {
        let support: Vec<(usize, i64)> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        let (negative, root) = match support.as_slice() {
            [(i, 1)] => (false, Root::Short(*i)),
            [(i, -1)] => (true, Root::Short(*i)),
            [(i, 1), (j, -1)] => (false, Root::Diff(*i, *j)),
            [(i, -1), (j, 1)] => (true, Root::Diff(*i, *j)),
            [(i, 1), (j, 1)] => (false, Root::Sum(*i, *j)),
            [(i, -1), (j, -1)] => (true, Root::Sum(*i, *j)),
            _ => return None,
        };
        Some(SignedRoot { negative, root })
    }

    /// Coefficients of the root in the ambient simple roots `α_1..α_{n+1}`.
    pub fn simple_root_coefficients(self, n: usize) -> Vec<i64> {
        let mut c = vec![0; n + 1];
        let short = |i: usize, c: &mut Vec<i64>| {
            for l in i..=n + 1 {
                c[l - 1] += 1;
            }
        };
        match self {
            Root::Diff(i, j) => {
                for l in i..j {
                    c[l - 1] += 1;
                }
            }
            Root::Sum(i, j) => {
                short(i, &mut c);
                short(j, &mut c);
            }
            Root::Short(i) => short(i, &mut c),
        }
        c
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Short(i) => write!(f, "e{i}"),
        }
    }
}

impl fmt::Display for SignedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-({})", self.root)
        } else {
            write!(f, "{}", self.root)
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Accepts `e2-e3`, `e2+e3` and `e2`.
    fn from_str(s: &str) -> Result<Root> {
        let bad = || Error::RootOutOfRange {
            n: 0,
            detail: format!("cannot parse root `{s}`"),
        };
        let idx = |t: &str| -> Result<usize> {
            t.trim()
                .strip_prefix('e')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(bad)
        };
        let t = s.trim();
        let root = if let Some((a, b)) = t.split_once('-') {
            Root::Diff(idx(a)?, idx(b)?)
        } else if let Some((a, b)) = t.split_once('+') {
            Root::Sum(idx(a)?, idx(b)?)
        } else {
            Root::Short(idx(t)?)
        };
        match root {
            Root::Diff(i, j) | Root::Sum(i, j) if i >= j => Err(bad()),
            _ => Ok(root),
        }
    }
}

/// `Σ⁺` of `G_n` (type `B_n`); there are `n²` of them.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(n * n);
    for i in 2..=n + 1 {
        for j in i + 1..=n + 1 {
            out.push(Root::Diff(i, j));
        }
        for j in i + 1..=n + 1 {
            out.push(Root::Sum(i, j));
        }
    }
    out.extend((2..=n + 1).map(Root::Short));
    out
}

/// The ambient simple root `α_i`, `1 ≤ i ≤ n+1`.
pub fn ambient_simple_root(n: usize, i: usize) -> Result<Root> {
    if i == 0 || i > n + 1 {
        return Err(Error::SimpleIndexOutOfRange {
            index: i,
            max: n + 1,
        });
    }
    Ok(if i == n + 1 {
        Root::Short(i)
    } else {
        Root::Diff(i, i + 1)
    })
}

/// Simple roots of `G_n`: `α_2..α_{n+1}` with their ambient indices.
pub fn simple_roots(n: usize) -> Vec<(usize, Root)> {
    (2..=n + 1)
        .map(|i| (i, ambient_simple_root(n, i).expect("index in range")))
        .collect()
}

/// `𝔩(α)`: 2 for long roots when `n > 1`, else 1.
pub fn length_tag(n: usize, root: Root) -> u8 {
    if root.is_long() && n > 1 {
        2
    } else {
        1
    }
}

/// `α_j^∨` in `ε^∨_1..ε^∨_{n+1}` coordinates.
pub fn simple_coroot_vector(n: usize, j: usize) -> Result<Vec<i64>> {
    Ok(ambient_simple_root(n, j)?.coroot_epsilon_vector(n))
}

/// `⟨α, α_j^∨⟩` in the ambient root system of type `B_{n+1}`.
pub fn pairing(n: usize, root: Root, j: usize) -> Result<i64> {
    let coroot = simple_coroot_vector(n, j)?;
    Ok(root
        .epsilon_vector(n)
        .iter()
        .zip(&coroot)
        .map(|(a, b)| a * b)
        .sum())
}

/// Cartan entry `⟨α_i, α_j^∨⟩` of type `B_{n+1}`, from the Dynkin diagram.
pub fn cartan(n: usize, i: usize, j: usize) -> Result<i64> {
    for k in [i, j] {
        if k == 0 || k > n + 1 {
            return Err(Error::SimpleIndexOutOfRange {
                index: k,
                max: n + 1,
            });
        }
    }
    Ok(if i == j {
        2
    } else if i.abs_diff(j) > 1 {
        0
    } else if i == n && j == n + 1 {
        -2
    } else {
        -1
    })
}

/// Exponents `m_l` with `α^∨(x) = ∏_l α_l^∨(x^{m_l})`.
pub fn coroot_coefficients(n: usize, root: Root) -> Result<Vec<i64>> {
    root.validate(n)?;
    let mut m = vec![0; n + 1];
    let short = |i: usize, m: &mut Vec<i64>| {
        for l in i..=n {
            m[l - 1] += 2;
        }
        m[n] += 1;
    };
    match root {
        Root::Diff(i, j) => {
            for l in i..j {
                m[l - 1] += 1;
            }
        }
        Root::Short(i) => short(i, &mut m),
        Root::Sum(i, j) => {
            for l in i..j {
                m[l - 1] += 1;
            }
            short(j, &mut m);
        }
    }
    Ok(m)
}

/// `α^∨(x)` in the `α^∨` basis.
pub fn coroot_word(n: usize, root: Root, x: FieldElement) -> Result<AlphaTorus> {
    let m = coroot_coefficients(n, root)?;
    Ok(AlphaTorus::new(m.iter().map(|&e| x.pow(e)).collect()))
}

/// The ambient index of a simple root label (for messages and the CLI).
pub fn describe_simple(n: usize, i: usize) -> Result<String> {
    Ok(format!("alpha_{i} = {}", ambient_simple_root(n, i)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn positive_root_examples() {
        assert!(positive_roots(0).is_empty());
        assert_eq!(positive_roots(1), vec![Root::Short(2)]);
        assert_eq!(
            positive_roots(2),
            vec![
                Root::Diff(2, 3),
                Root::Sum(2, 3),
                Root::Short(2),
                Root::Short(3)
            ]
        );
        for n in 0..=6 {
            assert_eq!(positive_roots(n).len(), n * n);
        }
    }

    #[test]
    fn pairing_examples() {
        for n in 1..=5 {
            for i in 1..=n + 1 {
                assert_eq!(
                    pairing(n, ambient_simple_root(n, i).unwrap(), i).unwrap(),
                    2
                );
                for j in 1..=n + 1 {
                    let a = ambient_simple_root(n, i).unwrap();
                    assert_eq!(pairing(n, a, j).unwrap(), cartan(n, i, j).unwrap());
                }
            }
            assert_eq!(
                pairing(n, ambient_simple_root(n, n).unwrap(), n + 1).unwrap(),
                -2
            );
        }
        assert!(pairing(2, Root::Short(2), 4).is_err());
        assert!(cartan(2, 0, 1).is_err());
    }

    #[test]
    fn coroot_word_examples() {
        let x = FieldElement::new(1, true);
        let t = coroot_word(3, Root::Diff(2, 3), x).unwrap();
        assert_eq!(
            t.coords(),
            &[
                FieldElement::one(),
                x,
                FieldElement::one(),
                FieldElement::one()
            ]
        );
        let pi = FieldElement::uniformizer();
        let t = coroot_word(3, Root::Short(4), pi).unwrap();
        assert_eq!(t.coord(4), pi);
        assert!((1..=3).all(|i| t.coord(i).is_one()));
        // (ε₂+ε₃)^∨ = α₂^∨ + α₃^∨ for n = 2.
        let x2 = x.square();
        let t = coroot_word(2, Root::Sum(2, 3), x2).unwrap();
        assert_eq!(t.coords(), &[FieldElement::one(), x2, x2]);
        assert!(coroot_word(2, Root::Diff(1, 2), x).is_err());
    }

    #[test]
    fn coroot_coefficients_match_epsilon_coroots() {
        for n in 1..=5 {
            for r in positive_roots(n) {
                let m = coroot_coefficients(n, r).unwrap();
                let mut eps = vec![0i64; n + 1];
                for (l, &ml) in m.iter().enumerate() {
                    let v = simple_coroot_vector(n, l + 1).unwrap();
                    for (e, c) in eps.iter_mut().zip(v) {
                        *e += ml * c;
                    }
                }
                assert_eq!(eps, r.coroot_epsilon_vector(n), "{r}");
            }
        }
    }

    #[test]
    fn pairing_agrees_with_simple_expansion() {
        for n in 1..=5 {
            for r in positive_roots(n) {
                let c = r.simple_root_coefficients(n);
                for j in 1..=n + 1 {
                    let via_cartan: i64 = (1..=n + 1)
                        .map(|i| c[i - 1] * cartan(n, i, j).unwrap())
                        .sum();
                    assert_eq!(pairing(n, r, j).unwrap(), via_cartan);
                }
            }
        }
    }

    #[test]
    fn length_tags() {
        assert_eq!(length_tag(1, Root::Short(2)), 1);
        assert_eq!(length_tag(2, Root::Diff(2, 3)), 2);
        assert_eq!(length_tag(2, Root::Short(3)), 1);
    }

    #[test]
    fn root_parsing() {
        for n in 1..=4 {
            for r in positive_roots(n) {
                assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
            }
        }
        assert!("e3-e2".parse::<Root>().is_err());
        assert!("x2".parse::<Root>().is_err());
    }
}
