//! Coordinates on the maximal torus `T_{n+1}` of `G_n`.
//!
//! The `α^∨` basis writes `t = ∏ α_i^∨(t_i)`. The convenient basis writes
//! `t = ∏ η_i^∨(a_i) · β₁^∨(t₁)`, where the `a_i` are the coordinates of the
//! `GL_n` part and `t₁` the coordinate on `β₁^∨`. The conversion is
//! `t_i = (∏_{j≥i} a_j^{-1}) t₁²` for `i ≤ n` and `t_{n+1} = t₁`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_rational::Ratio;

use crate::localfield::{CharacterValue, FieldElement};
use crate::{Error, Result};

/// `∏_{i=1}^{n+1} α_i^∨(t_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaTorus(Vec<FieldElement>);

/// `∏_{i=1}^{n} η_i^∨(a_i) · β₁^∨(t₁)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvenientTorus {
    a: Vec<FieldElement>,
    t1: FieldElement,
}

/// A torus element tagged with its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TorusElement {
    Alpha(AlphaTorus),
    Convenient(ConvenientTorus),
}

impl AlphaTorus {
    /// `coords` are `t_1..t_{n+1}`; must be nonempty.
    pub fn new(coords: Vec<FieldElement>) -> AlphaTorus {
        assert!(!coords.is_empty(), "a torus of rank n has n+1 coordinates");
        AlphaTorus(coords)
    }

    pub fn identity(n: usize) -> AlphaTorus {
        AlphaTorus(alloc::vec![FieldElement::one(); n + 1])
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    /// `t_i`, 1-based.
    pub fn coord(&self, i: usize) -> FieldElement {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|x| x.is_one())
    }

    pub fn inverse(&self) -> AlphaTorus {
        AlphaTorus(self.0.iter().map(|x| x.inverse()).collect())
    }

    pub fn to_convenient(&self) -> ConvenientTorus {
        let n = self.rank();
        let b = self.0[n];
        let big: Vec<FieldElement> = (0..n).map(|i| self.0[i] * b.pow(-2)).collect();
        let a = (0..n)
            .map(|i| {
                if i + 1 == n {
                    big[i].inverse()
                } else {
                    big[i + 1] * big[i].inverse()
                }
            })
            .collect();
        ConvenientTorus { a, t1: b }
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: self.rank(),
            });
        }
        Ok(())
    }
}

impl Mul<&AlphaTorus> for &AlphaTorus {
    type Output = AlphaTorus;
    fn mul(self, rhs: &AlphaTorus) -> AlphaTorus {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in torus product");
        AlphaTorus(self.0.iter().zip(&rhs.0).map(|(x, y)| *x * *y).collect())
    }
}

impl fmt::Display for AlphaTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl ConvenientTorus {
    pub fn new(a: Vec<FieldElement>, t1: FieldElement) -> ConvenientTorus {
        ConvenientTorus { a, t1 }
    }

    pub fn identity(n: usize) -> ConvenientTorus {
        ConvenientTorus {
            a: alloc::vec![FieldElement::one(); n],
            t1: FieldElement::one(),
        }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[FieldElement] {
        &self.a
    }

    /// `a_i`, 1-based.
    pub fn a_i(&self, i: usize) -> FieldElement {
        self.a[i - 1]
    }

    pub fn t1(&self) -> FieldElement {
        self.t1
    }

    pub fn det(&self) -> FieldElement {
        self.a.iter().copied().product()
    }

    pub fn inverse(&self) -> ConvenientTorus {
        ConvenientTorus {
            a: self.a.iter().map(|x| x.inverse()).collect(),
            t1: self.t1.inverse(),
        }
    }

    pub fn to_alpha(&self) -> AlphaTorus {
        let n = self.rank();
        let mut coords = Vec::with_capacity(n + 1);
        let t1sq = self.t1.square();
        for i in 0..n {
            let tail: FieldElement = self.a[i..].iter().copied().product();
            coords.push(tail.inverse() * t1sq);
        }
        coords.push(self.t1);
        AlphaTorus(coords)
    }
}

impl Mul<&ConvenientTorus> for &ConvenientTorus {
    type Output = ConvenientTorus;
    fn mul(self, rhs: &ConvenientTorus) -> ConvenientTorus {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in torus product");
        ConvenientTorus {
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| *x * *y).collect(),
            t1: self.t1 * rhs.t1,
        }
    }
}

impl fmt::Display for ConvenientTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.a.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "; {})", self.t1)
    }
}

impl TorusElement {
    /// The same element in the other basis.
    pub fn convert_coords(&self) -> TorusElement {
        match self {
            TorusElement::Alpha(t) => TorusElement::Convenient(t.to_convenient()),
            TorusElement::Convenient(t) => TorusElement::Alpha(t.to_alpha()),
        }
    }

    pub fn to_alpha(&self) -> AlphaTorus {
        match self {
            TorusElement::Alpha(t) => t.clone(),
            TorusElement::Convenient(t) => t.to_alpha(),
        }
    }

    pub fn to_convenient(&self) -> ConvenientTorus {
        match self {
            TorusElement::Alpha(t) => t.to_convenient(),
            TorusElement::Convenient(t) => t.clone(),
        }
    }
}

/// Conjugation by `w₀` in convenient coordinates:
/// `a_i ↦ a_i^{-1}`, `t₁ ↦ (∏a_i)^{-1} t₁`.
pub fn w0_conjugate(t: &ConvenientTorus) -> ConvenientTorus {
    ConvenientTorus {
        a: t.a.iter().map(|x| x.inverse()).collect(),
        t1: t.det().inverse() * t.t1,
    }
}

/// Conjugation by `w₀` in the `α^∨` basis:
/// `∏ α_i^∨(t_i^{-1}) · ∏_{i≤n} α_i^∨(t_1²) · α_{n+1}^∨(t_1)`. For `n = 0`
/// the Weyl group is trivial and `t` is returned unchanged.
pub fn w0_conjugate_alpha(t: &AlphaTorus) -> AlphaTorus {
    let n = t.rank();
    if n == 0 {
        return t.clone();
    }
    let t1 = t.coord(1);
    let mut coords: Vec<FieldElement> = t.0.iter().map(|x| x.inverse()).collect();
    for c in coords.iter_mut().take(n) {
        *c = *c * t1.square();
    }
    coords[n] = coords[n] * t1;
    AlphaTorus(coords)
}

/// `Υ(t) = t₁^{-2} ∏ a_i`.
pub fn upsilon(t: &ConvenientTorus) -> FieldElement {
    t.t1.pow(-2) * t.det()
}

/// The modulus character `δ_B(t) = ∏ |a_i|^{2(n-i)+1}`.
pub fn delta_b(t: &ConvenientTorus) -> CharacterValue {
    let n = t.rank() as i64;
    let e: i64 =
        t.a.iter()
            .enumerate()
            .map(|(k, x)| -x.valuation() * (2 * (n - (k as i64 + 1)) + 1))
            .sum();
    CharacterValue::q_power(Ratio::from_integer(e))
}

/// Image of `(b, h) ∈ GL_k × G_{n-k}` in `T_{n+1}`. `b` are the `η_i^∨`
/// coordinates of the `GL_k` torus and `h` the `α^∨` coordinates
/// `t_1..t_{n-k+1}` of the `G_{n-k}` torus.
pub fn embed_levi(
    n: usize,
    k: usize,
    b: &[FieldElement],
    h: &[FieldElement],
) -> Result<AlphaTorus> {
    if k > n {
        return Err(Error::InvalidLevi(format!(
            "block size {k} exceeds rank {n}"
        )));
    }
    if b.len() != k || h.len() != n - k + 1 {
        return Err(Error::InvalidLevi(format!(
            "expected {k} GL coordinates and {} G coordinates, got {} and {}",
            n - k + 1,
            b.len(),
            h.len()
        )));
    }
    let mut coords = alloc::vec![FieldElement::one(); n + 1];
    for i in 0..k {
        let tail: FieldElement = b[i..].iter().copied().product();
        coords[i] = tail.inverse();
    }
    let t1 = h[0];
    if k < n {
        for c in coords.iter_mut().take(k) {
            *c = *c * t1;
        }
        for (i, &hi) in h.iter().enumerate() {
            coords[k + i] = coords[k + i] * hi;
        }
    } else {
        for c in coords.iter_mut().take(n) {
            *c = *c * t1.square();
        }
        coords[n] = coords[n] * t1;
    }
    Ok(AlphaTorus(coords))
}

/// The central element `∏_{i≤n} α_i^∨(x²) · α_{n+1}^∨(x)`.
pub fn center_element(n: usize, x: FieldElement) -> AlphaTorus {
    let mut coords = alloc::vec![x.square(); n + 1];
    coords[n] = x;
    AlphaTorus(coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    const PI: FieldElement = FieldElement::uniformizer();
    const ONE: FieldElement = FieldElement::one();

    fn all_convenient(n: usize) -> Vec<ConvenientTorus> {
        let reps: Vec<FieldElement> = (0..4).map(FieldElement::from_square_class_code).collect();
        let mut out = vec![ConvenientTorus::identity(n)];
        for slot in 0..=n {
            let mut next = Vec::new();
            for t in &out {
                for &r in &reps {
                    let mut t = t.clone();
                    if slot < n {
                        t.a[slot] = r;
                    } else {
                        t.t1 = r;
                    }
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn conversion_examples() {
        let a = FieldElement::new(1, true);
        let b = FieldElement::new(-1, false);
        let t = ConvenientTorus::new(vec![a], b).to_alpha();
        assert_eq!(t.coords(), &[a.inverse() * b.square(), b]);
        assert!(ConvenientTorus::identity(3).to_alpha().is_identity());
        let t = ConvenientTorus::new(vec![PI, ONE], ONE).to_alpha();
        assert_eq!(t.coords(), &[PI.inverse(), ONE, ONE]);
    }

    #[test]
    fn conversion_round_trips() {
        for n in 0..=4 {
            for t in all_convenient(n) {
                let alpha = TorusElement::Convenient(t.clone()).convert_coords();
                assert_eq!(alpha.convert_coords(), TorusElement::Convenient(t.clone()));
                let alpha = t.to_alpha();
                assert_eq!(alpha.to_convenient().to_alpha(), alpha);
            }
        }
    }

    #[test]
    fn w0_examples_and_cross_check() {
        let a = FieldElement::new(1, true);
        let b = FieldElement::new(0, true);
        let t = ConvenientTorus::new(vec![a], b);
        assert_eq!(
            w0_conjugate(&t),
            ConvenientTorus::new(vec![a.inverse()], a.inverse() * b)
        );
        assert_eq!(
            w0_conjugate(&ConvenientTorus::identity(2)),
            ConvenientTorus::identity(2)
        );
        for n in 0..=3 {
            for t in all_convenient(n) {
                let once = w0_conjugate(&t);
                assert_eq!(w0_conjugate(&once), t);
                assert_eq!(once.to_alpha(), w0_conjugate_alpha(&t.to_alpha()));
            }
        }
    }

    #[test]
    fn upsilon_and_delta() {
        let x = FieldElement::new(1, true);
        assert_eq!(upsilon(&ConvenientTorus::new(vec![], x)), x.pow(-2));
        let a = vec![PI, FieldElement::new(2, true)];
        assert_eq!(upsilon(&ConvenientTorus::new(a.clone(), ONE)), a[0] * a[1]);
        assert!(upsilon(&ConvenientTorus::identity(3)).is_one());

        assert_eq!(
            delta_b(&ConvenientTorus::new(vec![PI, ONE], ONE)).to_string(),
            "q^-3"
        );
        assert!(delta_b(&ConvenientTorus::new(vec![ONE, ONE], x)).is_one());
        assert_eq!(
            delta_b(&ConvenientTorus::new(vec![PI.square()], ONE)).to_string(),
            "q^-2"
        );

        for n in 1..=2 {
            let all = all_convenient(n);
            for s in &all {
                for t in &all {
                    assert_eq!(upsilon(&(s * t)), upsilon(s) * upsilon(t));
                    assert_eq!(delta_b(&(s * t)), delta_b(s) * delta_b(t));
                }
            }
        }
    }

    #[test]
    fn levi_examples() {
        let a = vec![PI, FieldElement::new(1, true)];
        let t = embed_levi(2, 2, &a, &[ONE]).unwrap();
        assert_eq!(t.coords(), &[(a[0] * a[1]).inverse(), a[1].inverse(), ONE]);

        let x = FieldElement::new(1, true);
        assert_eq!(
            embed_levi(3, 3, &[ONE; 3], &[x]).unwrap(),
            center_element(3, x)
        );

        let h = vec![PI, x, ONE];
        assert_eq!(embed_levi(2, 0, &[], &h).unwrap().coords(), h.as_slice());

        assert!(embed_levi(2, 3, &[ONE; 3], &[]).is_err());
        assert!(embed_levi(2, 1, &[ONE], &[ONE]).is_err());
    }

    #[test]
    fn gl_part_matches_convenient_coordinates() {
        // Embedding b alone agrees with the convenient element (b; 1) extended by 1's.
        for n in 1..=3 {
            for t in all_convenient(n) {
                let lhs = embed_levi(n, n, t.a(), &[ONE]).unwrap();
                let rhs = ConvenientTorus::new(t.a().to_vec(), ONE).to_alpha();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
