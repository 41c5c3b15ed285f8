//! Distinguished subgroups of the covered torus and brute-force
//! centralizers at square-class resolution.
//!
//! Membership is tested in convenient coordinates `(a_1..a_n; t₁)`.
//! Commutators in brute-force searches are computed as `σ(t,s)σ(s,t)`
//! straight from the torus cocycle.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::covertorus::sigma_torus;
use crate::localfield::{FieldElement, LocalField, Sign};
use crate::rootdata::{AlphaTorus, ConvenientTorus};
use crate::{Error, Result};

/// Largest number of torus classes a brute-force search will visit.
pub const SEARCH_BOUND: usize = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupTag {
    /// `T²`: all `a_i` squares, `t₁` free.
    T2,
    /// `Tᵐ`: `a_{n-2i}^{-1} a_{n-2i-1}` square for `0 ≤ i < ⌊n/2⌋`.
    Tm,
    /// Center of the covered torus: `a_i = a_i'² d` with
    /// `d ∈ (F*)^{2/gcd(2,n+1)}`.
    CenterTorus,
    /// Center of `G_n`: the image of `β₁^∨`.
    CenterGroup,
    /// Centralizer of the unit-coordinate torus:
    /// `a_i ∈ O*F*²·d` with `d ∈ O*(F*)^{2/gcd(2,n+1)}`.
    CentralizerK,
}

impl SubgroupTag {
    pub const ALL: [SubgroupTag; 5] = [
        SubgroupTag::T2,
        SubgroupTag::Tm,
        SubgroupTag::CenterTorus,
        SubgroupTag::CenterGroup,
        SubgroupTag::CentralizerK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubgroupTag::T2 => "T2",
            SubgroupTag::Tm => "Tm",
            SubgroupTag::CenterTorus => "center-torus",
            SubgroupTag::CenterGroup => "center-group",
            SubgroupTag::CentralizerK => "centralizer-k",
        }
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubgroupTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubgroupTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidElement(format!("unknown subgroup `{s}`")))
    }
}

/// A subgroup of `T_{n+1}` given by a membership predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSpec {
    pub tag: SubgroupTag,
    pub n: usize,
}

impl SubgroupSpec {
    pub fn new(tag: SubgroupTag, n: usize) -> Self {
        SubgroupSpec { tag, n }
    }

    pub fn contains(&self, t: &ConvenientTorus) -> Result<bool> {
        if t.rank() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: t.rank(),
            });
        }
        Ok(match self.tag {
            SubgroupTag::T2 => in_t2(t),
            SubgroupTag::Tm => in_tm(t),
            SubgroupTag::CenterTorus => center_torus_membership(t),
            SubgroupTag::CenterGroup => center_group_membership(t),
            SubgroupTag::CentralizerK => centralizer_k_membership(t),
        })
    }
}

pub fn in_t2(t: &ConvenientTorus) -> bool {
    t.a().iter().all(|x| x.is_square())
}

/// `T²` read off `α^∨` coordinates: `t_i` square for `i ≤ n`.
pub fn in_t2_alpha(t: &AlphaTorus) -> bool {
    t.coords()[..t.rank()].iter().all(|x| x.is_square())
}

pub fn in_tm(t: &ConvenientTorus) -> bool {
    let n = t.rank();
    (0..n / 2).all(|i| (t.a_i(n - 2 * i).inverse() * t.a_i(n - 2 * i - 1)).is_square())
}

pub fn center_torus_membership(t: &ConvenientTorus) -> bool {
    let n = t.rank();
    if n.is_multiple_of(2) {
        in_t2(t)
    } else {
        let a = t.a();
        a.iter().all(|&x| (x * a[0].inverse()).is_square())
    }
}

/// Membership in the center of `G_n`, modulo unit squares: every `a_i` trivial.
pub fn center_group_membership(t: &ConvenientTorus) -> bool {
    t.a().iter().all(|x| x.is_one())
}

pub fn centralizer_k_membership(t: &ConvenientTorus) -> bool {
    let n = t.rank();
    let parity = |x: &FieldElement| x.valuation().rem_euclid(2);
    if n.is_multiple_of(2) {
        t.a().iter().all(|x| parity(x) == 0)
    } else {
        t.a().iter().all(|x| parity(x) == parity(&t.a()[0]))
    }
}

/// The convenient-coordinate torus with every coordinate running over one
/// representative per square class among `field.elements_with_valuations(valuations)`.
pub fn square_class_torus(
    field: &LocalField,
    n: usize,
    valuations: &[i64],
) -> Result<Vec<ConvenientTorus>> {
    let mut reps: Vec<FieldElement> = Vec::new();
    for x in field.elements_with_valuations(valuations) {
        if !reps
            .iter()
            .any(|r| r.square_class_code() == x.square_class_code())
        {
            reps.push(x);
        }
    }
    let size = (reps.len() as u128).pow(n as u32 + 1);
    if size > SEARCH_BOUND as u128 {
        return Err(Error::SpaceTooLarge {
            size,
            bound: SEARCH_BOUND as u128,
        });
    }
    let mut coords: Vec<Vec<FieldElement>> = vec![Vec::new()];
    for _ in 0..=n {
        let mut next = Vec::with_capacity(coords.len() * reps.len());
        for c in &coords {
            for &r in &reps {
                let mut c = c.clone();
                c.push(r);
                next.push(c);
            }
        }
        coords = next;
    }
    Ok(coords
        .into_iter()
        .map(|mut c| {
            let t1 = c.pop().expect("n+1 coordinates");
            ConvenientTorus::new(c, t1)
        })
        .collect())
}

/// The model of `T ∩ K*`: all coordinates units.
pub fn unit_torus(field: &LocalField, n: usize) -> Result<Vec<ConvenientTorus>> {
    square_class_torus(field, n, &[0])
}

/// `σ(t,s)σ(s,t)`: `+1` iff the lifts of `t` and `s` commute.
pub fn commutes(field: &LocalField, t: &ConvenientTorus, s: &ConvenientTorus) -> Result<bool> {
    let (ta, sa) = (t.to_alpha(), s.to_alpha());
    Ok(sigma_torus(field, &ta, &sa)? * sigma_torus(field, &sa, &ta)? == Sign::Plus)
}

/// Square-class torus elements commuting with every element of `s`.
pub fn brute_centralizer(
    field: &LocalField,
    n: usize,
    s: &[ConvenientTorus],
    valuations: &[i64],
) -> Result<Vec<ConvenientTorus>> {
    let mut out = Vec::new();
    'outer: for t in square_class_torus(field, n, valuations)? {
        for x in s {
            if !commutes(field, &t, x)? {
                continue 'outer;
            }
        }
        out.push(t);
    }
    Ok(out)
}

/// Outcome of a maximality search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub members: usize,
    pub abelian: bool,
    pub maximal: bool,
    /// A pair of members whose lifts do not commute.
    pub noncommuting: Option<(ConvenientTorus, ConvenientTorus)>,
    /// A non-member commuting with every member.
    pub extension: Option<ConvenientTorus>,
}

/// Decides whether `{t : pred(t)}` is a maximal abelian subgroup of the
/// square-class covered torus: it must be abelian and equal its own
/// centralizer.
pub fn is_maximal_abelian<P>(
    field: &LocalField,
    n: usize,
    valuations: &[i64],
    pred: P,
) -> Result<MaximalityReport>
where
    P: Fn(&ConvenientTorus) -> bool,
{
    let all = square_class_torus(field, n, valuations)?;
    let members: Vec<&ConvenientTorus> = all.iter().filter(|t| pred(t)).collect();
    let mut noncommuting = None;
    'pairs: for (i, x) in members.iter().enumerate() {
        for y in &members[i + 1..] {
            if !commutes(field, x, y)? {
                noncommuting = Some(((*x).clone(), (*y).clone()));
                break 'pairs;
            }
        }
    }
    let mut extension = None;
    'ext: for t in all.iter().filter(|t| !pred(t)) {
        for m in &members {
            if !commutes(field, t, m)? {
                continue 'ext;
            }
        }
        extension = Some(t.clone());
        break;
    }
    let abelian = noncommuting.is_none();
    Ok(MaximalityReport {
        members: members.len(),
        abelian,
        maximal: abelian && extension.is_none(),
        noncommuting,
        extension,
    })
}

/// `|T| / |C_T|` at square-class resolution, from the brute-force center.
pub fn center_index(field: &LocalField, n: usize) -> Result<(usize, usize)> {
    let all = square_class_torus(field, n, &[0, 1])?;
    let center = brute_centralizer(field, n, &all, &[0, 1])?;
    Ok((all.len(), center.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE: FieldElement = FieldElement::one();
    const PI: FieldElement = FieldElement::uniformizer();
    const U: FieldElement = FieldElement::nonsquare_unit();

    fn f3() -> LocalField {
        LocalField::p_adic(3, None, None).unwrap()
    }

    #[test]
    fn t2_examples() {
        assert!(in_t2(&ConvenientTorus::new(vec![ONE, ONE], PI)));
        assert!(!in_t2(&ConvenientTorus::new(vec![PI], ONE)));
        assert!(!in_t2(&ConvenientTorus::new(vec![U * PI.square()], U)));
        for t in square_class_torus(&f3(), 3, &[0, 1]).unwrap() {
            assert_eq!(in_t2(&t), in_t2_alpha(&t.to_alpha()));
        }
    }

    #[test]
    fn tm_examples() {
        assert!(in_tm(&ConvenientTorus::new(vec![PI, PI], U)));
        assert!(!in_tm(&ConvenientTorus::new(vec![PI, ONE], ONE)));
        for t in square_class_torus(&f3(), 1, &[0, 1]).unwrap() {
            assert!(in_tm(&t));
        }
    }

    #[test]
    fn center_torus_examples() {
        assert!(center_torus_membership(&ConvenientTorus::new(
            vec![PI; 3],
            U
        )));
        assert!(!center_torus_membership(&ConvenientTorus::new(
            vec![PI; 2],
            ONE
        )));
        for n in [2, 4] {
            for t in square_class_torus(&f3(), n, &[0, 1]).unwrap() {
                assert_eq!(center_torus_membership(&t), in_t2(&t));
            }
        }
    }

    #[test]
    fn center_group_examples() {
        let f = f3();
        assert!(center_group_membership(&ConvenientTorus::new(
            vec![ONE; 2],
            PI * U
        )));
        assert!(!center_group_membership(&ConvenientTorus::new(
            vec![PI, ONE],
            ONE
        )));
        for n in 1..=3 {
            let all = square_class_torus(&f, n, &[0, 1]).unwrap();
            for z in all.iter().filter(|t| center_group_membership(t)) {
                for t in &all {
                    assert!(commutes(&f, z, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn predicates_are_subgroups() {
        let f = f3();
        for n in 0..=3 {
            let all = square_class_torus(&f, n, &[0, 1]).unwrap();
            for tag in SubgroupTag::ALL {
                let sub = SubgroupSpec::new(tag, n);
                let members: Vec<_> = all.iter().filter(|t| sub.contains(t).unwrap()).collect();
                assert!(sub.contains(&ConvenientTorus::identity(n)).unwrap());
                for x in &members {
                    assert!(sub.contains(&x.inverse()).unwrap());
                    for y in &members {
                        assert!(sub.contains(&(*x * *y)).unwrap(), "{tag} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn containment_chain() {
        let f = LocalField::p_adic(5, None, None).unwrap();
        for n in 0..=3 {
            for t in square_class_torus(&f, n, &[0, 1]).unwrap() {
                if center_group_membership(&t) {
                    assert!(in_t2(&t));
                }
                if in_t2(&t) {
                    assert!(center_torus_membership(&t));
                }
                if center_torus_membership(&t) {
                    assert!(in_tm(&t));
                }
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let f = f3();
        for n in 1..=3 {
            let all = square_class_torus(&f, n, &[0, 1]).unwrap();
            assert_eq!(brute_centralizer(&f, n, &[], &[0, 1]).unwrap(), all);
            let units = unit_torus(&f, n).unwrap();
            let got = brute_centralizer(&f, n, &units, &[0, 1]).unwrap();
            let expected: Vec<_> = all
                .iter()
                .filter(|t| centralizer_k_membership(t))
                .cloned()
                .collect();
            assert_eq!(got, expected, "n={n}");
        }
    }

    #[test]
    fn maximality_examples() {
        let f = f3();
        let r = is_maximal_abelian(&f, 2, &[0, 1], in_tm).unwrap();
        assert!(r.abelian && r.maximal);
        let r = is_maximal_abelian(&f, 2, &[0, 1], in_t2).unwrap();
        assert!(r.abelian);
        let r = is_maximal_abelian(&f, 2, &[0, 1], |_| true).unwrap();
        assert!(!r.abelian && r.noncommuting.is_some());
        assert!(
            is_maximal_abelian(&f, 1, &[0, 1], |_| true)
                .unwrap()
                .maximal
        );
    }

    #[test]
    fn tag_parsing_and_bounds() {
        assert_eq!("tm".parse::<SubgroupTag>().unwrap(), SubgroupTag::Tm);
        assert!("bogus".parse::<SubgroupTag>().is_err());
        assert!(square_class_torus(&f3(), 6, &[0, 1]).is_err());
        let (t, c) = center_index(&f3(), 1).unwrap();
        assert_eq!((t, c), (16, 16));
    }
}
