//! Laurent polynomials and rational functions in one variable `q` with
//! integer coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `Σ c_e q^e`, only nonzero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, BigInt::from(c));
        }
        LaurentPoly { terms }
    }

    /// `1 - c q^e`.
    pub fn one_minus(c: i64, e: i64) -> Self {
        &LaurentPoly::one() - &LaurentPoly::monomial(c, e)
    }

    pub fn from_terms<I: IntoIterator<Item = (BigInt, i64)>>(terms: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (c, e) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == LaurentPoly::one()
    }

    /// `(coefficient, exponent)` pairs in decreasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, i64)> {
        self.terms.iter().rev().map(|(e, c)| (c, *e))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale_div(&self, d: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / d)).collect(),
        }
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let qe = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), e.unsigned_abs() as usize)
            };
            acc += qe * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Dense ascending coefficients of `self · q^{-min}`.
    fn to_dense(&self) -> Vec<BigInt> {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Vec::new();
        };
        let mut v = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: &[BigInt]) -> Self {
        LaurentPoly::from_terms(v.iter().enumerate().map(|(k, c)| (c.clone(), k as i64)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn fmt_terms(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return String::from("0");
    }
    let mut s = String::new();
    for (k, (c, e)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let var = match e {
            0 => String::new(),
            1 => String::from("q"),
            e => format!("q^{e}"),
        };
        if var.is_empty() {
            s.push_str(&format!("{abs}"));
        } else if abs.is_one() {
            s.push_str(&var);
        } else {
            s.push_str(&format!("{abs}*{var}"));
        }
    }
    s
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_terms(self))
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(v);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if v.last().is_some_and(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    v.iter().map(|x| x / &c * &sign).collect()
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[dr - db + k] -= &lr * bk;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd of two integer polynomials (dense ascending), positive leading coefficient.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    primitive(&a)
}

/// Exact quotient `a / b` over the integers; `None` if `b` does not divide `a`.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    let db = b.len() - 1;
    if r.len() - 1 < db {
        return None;
    }
    let mut q = alloc::vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (quot, rem) = r[dr].div_rem(&b[db]);
        if !rem.is_zero() {
            return None;
        }
        for (k, bk) in b.iter().enumerate() {
            r[dr - db + k] -= &quot * bk;
        }
        q[dr - db] = quot;
        trim(&mut r);
    }
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

/// A reduced quotient `num / den` of Laurent polynomials. The canonical
/// form has polynomial gcd 1, coprime contents, a denominator with lowest
/// exponent 0 and positive leading coefficient; equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentRational {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidCharacter(
                "zero denominator in rational function".into(),
            ));
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::reduce(p, LaurentPoly::one())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// `q^e`.
    pub fn q_power(e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(1, e))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The exponent `e` if this is exactly `q^e`.
    pub fn as_q_power(&self) -> Option<i64> {
        if !self.den.is_one() || self.num.terms.len() != 1 {
            return None;
        }
        let (c, e) = self.num.terms().next()?;
        c.is_one().then_some(e)
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(q) / d)
        }
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return LaurentRational {
                num,
                den: LaurentPoly::one(),
            };
        }
        let (nlo, dlo) = (
            num.min_exponent().expect("nonzero"),
            den.min_exponent().expect("nonzero"),
        );
        let nd = num.to_dense();
        let dd = den.to_dense();
        let g = poly_gcd(&nd, &dd);
        let mut nq = poly_div_exact(&nd, &g).expect("gcd divides numerator");
        let mut dq = poly_div_exact(&dd, &g).expect("gcd divides denominator");
        trim(&mut nq);
        trim(&mut dq);
        let c = dense_content(&nq).gcd(&dense_content(&dq));
        let sign = if dq.last().expect("nonzero").is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let factor = c * sign;
        let num = LaurentPoly::from_dense(&nq).scale_div(&factor);
        let den = LaurentPoly::from_dense(&dq).scale_div(&factor);
        // Shift so that den has lowest exponent 0.
        let dshift = den.min_exponent().expect("nonzero");
        LaurentRational {
            num: num.shift(nlo - dlo - dshift),
            den: den.shift(-dshift),
        }
    }
}

impl Mul for &LaurentRational {
    type Output = LaurentRational;
    fn mul(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for &LaurentRational {
    type Output = LaurentRational;
    fn add(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.terms.len() > 1 {
                format!("({p})")
            } else {
                format!("{p}")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn r(num: LaurentPoly, den: LaurentPoly) -> LaurentRational {
        LaurentRational::new(num, den).unwrap()
    }

    #[test]
    fn display() {
        let p = &LaurentPoly::one_minus(1, -2) + &LaurentPoly::monomial(3, 2);
        assert_eq!(p.to_string(), "3*q^2 + 1 - q^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(-1, 1).to_string(), "-q");
    }

    #[test]
    fn reduction() {
        let x = r(LaurentPoly::one_minus(1, -2), LaurentPoly::one_minus(1, -1));
        assert_eq!(x.to_string(), "1 + q^-1");
        assert_eq!(
            x,
            LaurentRational::from_poly(&LaurentPoly::one() + &LaurentPoly::monomial(1, -1))
        );
        let y = r(LaurentPoly::monomial(4, 3), LaurentPoly::monomial(-6, 1));
        assert_eq!(y.to_string(), "-2*q^2/3");
        let z = r(LaurentPoly::one_minus(1, 1), LaurentPoly::one_minus(1, 2));
        assert_eq!(z.to_string(), "1/(q + 1)");
        assert!(LaurentRational::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
        assert_eq!(LaurentRational::q_power(-3).as_q_power(), Some(-3));
        assert_eq!(x.as_q_power(), None);
    }

    #[test]
    fn field_operations() {
        let a = r(LaurentPoly::one_minus(1, -3), LaurentPoly::one_minus(1, -1));
        let b = r(LaurentPoly::one_minus(1, -1), LaurentPoly::one_minus(1, -3));
        assert!((&a * &b).is_one());
        assert_eq!(&(&a * &a.inverse().unwrap()), &LaurentRational::one());
        let q = BigRational::from_integer(BigInt::from(5));
        let s = &a + &b;
        assert_eq!(
            s.eval(&q).unwrap(),
            a.eval(&q).unwrap() + b.eval(&q).unwrap()
        );
    }
}
