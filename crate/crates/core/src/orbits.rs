//! Unipotent orbits of `SO(2n+1)` as partitions of `2n+1`, the dominance
//! order, `h`-weights and the unipotent groups `V(O)` attached to the
//! orbits `O₀` and `O₁`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::localfield::FieldElement;
use crate::rootdata::{positive_roots, Root};
use crate::{Error, Result};

/// Largest `n` for which [`admissible_partitions`] will enumerate.
pub const PARTITION_RANK_BOUND: usize = 12;

/// A partition, stored in non-increasing order without zero parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Even parts occur with even multiplicity.
    pub fn is_orthogonal(&self) -> bool {
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.multiplicity(p);
            if p.is_multiple_of(2) && m % 2 == 1 {
                return false;
            }
            i += m;
        }
        true
    }

    /// Dominance: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0usize, 0usize);
        for k in 0..len {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn compare(&self, other: &Partition) -> Option<Ordering> {
        match (self.dominates(other), other.dominates(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// `self` is strictly greater than, or not comparable with, `other`.
    pub fn greater_or_not_comparable(&self, other: &Partition) -> bool {
        !other.dominates(self)
    }
}

impl fmt::Display for Partition {
    /// Exponential notation, e.g. `3 2^2 1^2`; the empty partition is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.multiplicity(p);
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
            i += m;
        }
        Ok(())
    }
}

impl core::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `3 2^2 1^2`, `3,2,2,1,1` or `[3,2,2,1,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPartition(s.to_string());
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in body.split([',', ' ']).filter(|t| !t.is_empty()) {
            let (p, m) = match tok.split_once('^') {
                Some((p, m)) => (p, m.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p = p.parse::<usize>().map_err(|_| bad())?;
            parts.extend(core::iter::repeat_n(p, m));
        }
        Ok(Partition::new(parts))
    }
}

fn partitions_into(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        partitions_into(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All orthogonal partitions of `2n+1`, in reverse lexicographic order
/// (regular orbit first).
pub fn admissible_partitions(n: usize) -> Result<Vec<Partition>> {
    if n > PARTITION_RANK_BOUND {
        return Err(Error::SpaceTooLarge {
            size: n as u128,
            bound: PARTITION_RANK_BOUND as u128,
        });
    }
    let mut all = Vec::new();
    partitions_into(2 * n + 1, 2 * n + 1, &mut Vec::new(), &mut all);
    all.retain(Partition::is_orthogonal);
    Ok(all)
}

/// Covering relations `(upper, lower)` of the dominance order on
/// [`admissible_partitions`], as index pairs.
pub fn hasse_edges(parts: &[Partition]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            if i == j || !a.dominates(b) || a == b {
                continue;
            }
            let covered = parts.iter().enumerate().any(|(k, c)| {
                k != i && k != j && a.dominates(c) && c.dominates(b) && c != a && c != b
            });
            if !covered {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// `O₀`: `(2^n, 1)` for even `n`, `(2^{n-1}, 1^3)` for odd `n`.
pub fn orbit_o0(n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidPartition("O0 needs n >= 1".into()));
    }
    let mut parts = alloc::vec![2; if n.is_multiple_of(2) { n } else { n - 1 }];
    parts.extend(core::iter::repeat_n(
        1,
        if n.is_multiple_of(2) { 1 } else { 3 },
    ));
    Ok(Partition(parts))
}

/// `O₁ = (3, 1^{2n-2})`.
pub fn orbit_o1(n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidPartition("O1 needs n >= 1".into()));
    }
    let mut parts = alloc::vec![3];
    parts.extend(core::iter::repeat_n(1, 2 * n - 2));
    Ok(Partition(parts))
}

/// The first `n` entries of the non-increasing multiset
/// `{r - 2j + 1 : r ∈ O, 1 ≤ j ≤ r}`; the remaining entries are their
/// negatives and a single zero.
pub fn h_weights(n: usize, orbit: &Partition) -> Result<Vec<i64>> {
    if orbit.size() != 2 * n + 1 {
        return Err(Error::InvalidPartition(format!(
            "{orbit} is not a partition of {}",
            2 * n + 1
        )));
    }
    let mut all: Vec<i64> = orbit
        .parts()
        .iter()
        .flat_map(|&r| (1..=r).map(move |j| r as i64 - 2 * j as i64 + 1))
        .collect();
    all.sort_unstable_by(|a, b| b.cmp(a));
    all.truncate(n);
    Ok(all)
}

/// `α(h)` where `ε_{k+2}` carries `weights[k]`.
pub fn root_weight(weights: &[i64], alpha: Root) -> i64 {
    match alpha {
        Root::Diff(i, j) => weights[i - 2] - weights[j - 2],
        Root::Sum(i, j) => weights[i - 2] + weights[j - 2],
        Root::Short(i) => weights[i - 2],
    }
}

/// Positive roots with `α(h_O) ≥ 2`, spanning `Lie V(O)`.
pub fn v_orbit(n: usize, orbit: &Partition) -> Result<Vec<Root>> {
    let h = h_weights(n, orbit)?;
    Ok(positive_roots(n)
        .into_iter()
        .filter(|&a| root_weight(&h, a) >= 2)
        .collect())
}

/// Roots grouped by `α(h)`, highest weight first, zero and negative omitted.
pub fn graded_roots(n: usize, orbit: &Partition) -> Result<Vec<(i64, Vec<Root>)>> {
    let h = h_weights(n, orbit)?;
    let mut out: Vec<(i64, Vec<Root>)> = Vec::new();
    for a in positive_roots(n) {
        let w = root_weight(&h, a);
        if w <= 0 {
            continue;
        }
        match out.iter_mut().find(|(k, _)| *k == w) {
            Some((_, v)) => v.push(a),
            None => out.push((w, alloc::vec![a])),
        }
    }
    out.sort_by_key(|(k, _)| core::cmp::Reverse(*k));
    Ok(out)
}

/// One factor of the reductive part of a stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabFactor {
    B(usize),
    C(usize),
    D(usize),
}

impl fmt::Display for StabFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabFactor::B(r) => write!(f, "B{r}"),
            StabFactor::C(r) => write!(f, "C{r}"),
            StabFactor::D(1) => f.write_str("D1 (torus GL1)"),
            StabFactor::D(r) => write!(f, "D{r}"),
        }
    }
}

/// Type of the stabilizer of a vector `ψ` in `M = SO(m)` when `ψ` is a
/// sum of `o` orthogonal-type and `e` symplectic-type coordinates:
/// `B_{(o-1)/2} × C_{e/2} × D_{(m-o-e)/2}` for odd `o`, and
/// `D_{o/2} × C_{e/2} × D_{(m-o-e-1)/2}` for even `o`.
/// Factors of rank zero are dropped.
pub fn stabilizer_type(m: usize, o: usize, e: usize) -> Result<Vec<StabFactor>> {
    if e % 2 == 1 {
        return Err(Error::InvalidShape(format!("e = {e} must be even")));
    }
    let rest = m
        .checked_sub(o + e + usize::from(o.is_multiple_of(2)))
        .ok_or_else(|| Error::InvalidShape(format!("o + e exceeds m = {m}")))?;
    let mut out = Vec::new();
    if o % 2 == 1 {
        out.push(StabFactor::B((o - 1) / 2));
    } else {
        out.push(StabFactor::D(o / 2));
    }
    out.push(StabFactor::C(e / 2));
    out.push(StabFactor::D(rest / 2));
    out.retain(|f| !matches!(f, StabFactor::B(0) | StabFactor::C(0) | StabFactor::D(0)));
    Ok(out)
}

pub fn render_stabilizer(factors: &[StabFactor]) -> String {
    if factors.is_empty() {
        return "trivial".into();
    }
    factors
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" x ")
}

/// The quadratic form `Σ b_i b_{l+1-i}` for `ψ(v) = ψ(Σ b_i v_{ε_1-ε_{i+1}})`,
/// reduced to its square class (`None` when it vanishes).
pub fn length_form(b: &[BigRational], p: u64) -> Option<FieldElement> {
    let l = b.len();
    let mut s = BigRational::zero();
    for i in 0..l {
        s += &b[i] * &b[l - 1 - i];
    }
    if s.is_zero() {
        return None;
    }
    Some(rational_square_class(&s, p))
}

/// Square class of a nonzero rational in `Q_p` (`p` odd).
pub fn rational_square_class(x: &BigRational, p: u64) -> FieldElement {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let pb = BigInt::from(p);
    let strip = |mut m: BigInt| -> (i64, BigInt) {
        let mut v = 0;
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                return (v, m);
            }
            m = q;
            v += 1;
        }
    };
    let (vn, un) = strip(x.numer().abs());
    let (vd, ud) = strip(x.denom().abs());
    let mut unit = (&un * &ud).mod_floor(&pb);
    if x.is_negative() {
        unit = (&pb - unit).mod_floor(&pb);
    }
    let u: u64 = unit.try_into().expect("residue fits");
    let residue = crate::localfield::legendre(u as i64, p) == 1;
    FieldElement::new(vn - vd, !residue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| admissible_partitions(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 7, 13, 21]);
        assert_eq!(admissible_partitions(2).unwrap()[0], part("5"));
        assert!(admissible_partitions(13).is_err());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(part("3,2,2,1,1").to_string(), "3 2^2 1^2");
        assert_eq!(part("3 2^2 1^2"), part("[3,2,2,1,1]"));
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance() {
        assert!(part("5").dominates(&part("3 1^2")));
        assert!(!part("3 1^2").dominates(&part("5")));
        assert_eq!(part("3 3 1").compare(&part("5 1 1")), Some(Ordering::Less));
        assert_eq!(part("4 2").compare(&part("3 3")), Some(Ordering::Greater));
        assert_eq!(part("3 1 1 1").compare(&part("2 2 2")), None);
        assert_eq!(part("4 1 1").compare(&part("3 3")), None);
        assert!(part("3 1 1 1").greater_or_not_comparable(&part("2 2 2")));
        assert!(!part("3 1").greater_or_not_comparable(&part("3 1")));
    }

    #[test]
    fn orbits_o0_o1() {
        assert_eq!(orbit_o0(2).unwrap(), part("2 2 1"));
        assert_eq!(orbit_o0(3).unwrap(), part("2 2 1 1 1"));
        assert_eq!(orbit_o1(3).unwrap(), part("3 1^4"));
        assert!(orbit_o0(0).is_err());
        for n in 1..=6 {
            let o0 = orbit_o0(n).unwrap();
            assert!(o0.is_orthogonal());
            assert_eq!(o0.size(), 2 * n + 1);
        }
    }

    #[test]
    fn h_weights_examples() {
        assert_eq!(h_weights(3, &orbit_o1(3).unwrap()).unwrap(), vec![2, 0, 0]);
        assert_eq!(h_weights(2, &part("5")).unwrap(), vec![4, 2]);
        assert_eq!(h_weights(2, &part("2 2 1")).unwrap(), vec![1, 1]);
        assert!(h_weights(2, &part("3")).is_err());
    }

    #[test]
    fn v_o1_is_roots_through_e2() {
        for n in 1..=5 {
            let v = v_orbit(n, &orbit_o1(n).unwrap()).unwrap();
            let expected: Vec<Root> = positive_roots(n)
                .into_iter()
                .filter(|a| a.epsilon_vector(n)[1] != 0)
                .collect();
            assert_eq!(v, expected);
            assert_eq!(v.len(), 2 * n - 1);
        }
    }

    #[test]
    fn hasse_small() {
        let p = admissible_partitions(2).unwrap();
        let edges = hasse_edges(&p);
        assert_eq!(edges.len(), 3);
        assert!(edges.iter().all(|&(a, b)| p[a].dominates(&p[b])));
    }

    #[test]
    fn stabilizer_examples() {
        let r = |m, o, e| render_stabilizer(&stabilizer_type(m, o, e).unwrap());
        assert_eq!(r(4, 1, 0), "D1 (torus GL1)");
        assert_eq!(r(5, 3, 2), "B1 x C1");
        assert_eq!(r(7, 2, 0), "D1 (torus GL1) x D2");
        assert_eq!(r(1, 1, 0), "trivial");
        assert!(stabilizer_type(5, 1, 1).is_err());
        assert!(stabilizer_type(3, 3, 2).is_err());
    }

    #[test]
    fn length_form_classes() {
        let q = |a: i64| BigRational::from_integer(a.into());
        assert_eq!(
            length_form(&[q(1), q(0), q(1)], 3),
            Some(FieldElement::new(0, true))
        );
        assert_eq!(
            length_form(&[q(1), q(0), q(-1)], 3),
            Some(FieldElement::new(0, false))
        );
        assert_eq!(length_form(&[q(1), q(0), q(0), q(0)], 5), None);
        assert_eq!(length_form(&[q(3)], 3), Some(FieldElement::new(2, false)));
        let half = BigRational::new(1.into(), 3.into());
        assert_eq!(length_form(&[half], 3), Some(FieldElement::new(-2, false)));
    }
}
