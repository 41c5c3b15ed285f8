//! Local fields at square-class resolution.
//!
//! A [`FieldElement`] is `ϖ^v · u^e` modulo squares of units, where `ϖ` is a
//! uniformizer and `u` the configured non-square unit. Over the reals an
//! element is just a sign.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::iter::Product;
use core::ops::{Mul, Neg};
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// An element of `μ₂ = {±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^bit`.
    pub fn from_parity(bit: i64) -> Sign {
        if bit.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A fourth root of unity `i^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mu4(u8);

impl Mu4 {
    pub const ONE: Mu4 = Mu4(0);
    pub const I: Mu4 = Mu4(1);
    pub const MINUS_ONE: Mu4 = Mu4(2);
    pub const MINUS_I: Mu4 = Mu4(3);
    pub const ALL: [Mu4; 4] = [Mu4::ONE, Mu4::I, Mu4::MINUS_ONE, Mu4::MINUS_I];

    pub fn from_exponent(k: i64) -> Mu4 {
        Mu4(k.rem_euclid(4) as u8)
    }

    /// The exponent `k` in `i^k`, in `0..4`.
    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn pow(self, k: i64) -> Mu4 {
        Mu4::from_exponent(self.0 as i64 * k)
    }

    pub fn inverse(self) -> Mu4 {
        self.pow(-1)
    }

    pub fn as_sign(self) -> Option<Sign> {
        match self.0 {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl From<Sign> for Mu4 {
    fn from(s: Sign) -> Mu4 {
        match s {
            Sign::Plus => Mu4::ONE,
            Sign::Minus => Mu4::MINUS_ONE,
        }
    }
}

impl Mul for Mu4 {
    type Output = Mu4;
    fn mul(self, rhs: Mu4) -> Mu4 {
        Mu4((self.0 + rhs.0) % 4)
    }
}

impl Product for Mu4 {
    fn product<I: Iterator<Item = Mu4>>(iter: I) -> Mu4 {
        iter.fold(Mu4::ONE, Mul::mul)
    }
}

impl fmt::Display for Mu4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "-1", "-i"][self.0 as usize])
    }
}

impl FromStr for Mu4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mu4> {
        match s.trim() {
            "1" | "+1" => Ok(Mu4::ONE),
            "i" | "+i" => Ok(Mu4::I),
            "-1" => Ok(Mu4::MINUS_ONE),
            "-i" => Ok(Mu4::MINUS_I),
            other => Err(Error::InvalidElement(format!(
                "`{other}` is not one of 1, -1, i, -i"
            ))),
        }
    }
}

/// `ϖ^valuation · u^unit` modulo unit squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    valuation: i64,
    unit: bool,
}

impl FieldElement {
    /// `nonsquare_unit` selects the class of `u` (over the reals: the sign `-1`).
    pub const fn new(valuation: i64, nonsquare_unit: bool) -> FieldElement {
        FieldElement {
            valuation,
            unit: nonsquare_unit,
        }
    }

    pub const fn one() -> FieldElement {
        FieldElement::new(0, false)
    }

    pub const fn uniformizer() -> FieldElement {
        FieldElement::new(1, false)
    }

    pub const fn nonsquare_unit() -> FieldElement {
        FieldElement::new(0, true)
    }

    pub fn valuation(self) -> i64 {
        self.valuation
    }

    pub fn has_nonsquare_unit(self) -> bool {
        self.unit
    }

    pub fn is_square(self) -> bool {
        self.valuation % 2 == 0 && !self.unit
    }

    pub fn is_one(self) -> bool {
        self.valuation == 0 && !self.unit
    }

    /// Two-bit code of the square class: bit 0 is the valuation parity, bit 1
    /// the unit class. Products correspond to XOR of codes.
    pub fn square_class_code(self) -> u8 {
        (self.valuation.rem_euclid(2) as u8) | ((self.unit as u8) << 1)
    }

    /// The representative with valuation in `{0, 1}` of the given code.
    pub fn from_square_class_code(code: u8) -> FieldElement {
        FieldElement::new((code & 1) as i64, code & 2 != 0)
    }

    pub fn inverse(self) -> FieldElement {
        FieldElement::new(-self.valuation, self.unit)
    }

    pub fn pow(self, k: i64) -> FieldElement {
        FieldElement::new(self.valuation * k, self.unit && k.rem_euclid(2) == 1)
    }

    pub fn square(self) -> FieldElement {
        self.pow(2)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        FieldElement::new(self.valuation + rhs.valuation, self.unit ^ rhs.unit)
    }
}

impl Product for FieldElement {
    fn product<I: Iterator<Item = FieldElement>>(iter: I) -> FieldElement {
        iter.fold(FieldElement::one(), Mul::mul)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.unit, self.valuation) {
            (false, 0) => f.write_str("1"),
            (true, 0) => f.write_str("u"),
            (u, 1) => write!(f, "{}pi", if u { "u*" } else { "" }),
            (u, v) => write!(f, "{}pi^{v}", if u { "u*" } else { "" }),
        }
    }
}

/// Exact value `q^a · ζ · z^k` with `a` rational, `ζ ∈ μ₄` and `z` a formal
/// symbol standing for `η(ϖ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterValue {
    pub q_exp: Ratio<i64>,
    pub zeta: Mu4,
    pub z_exp: i64,
}

impl CharacterValue {
    pub fn one() -> CharacterValue {
        CharacterValue {
            q_exp: Ratio::zero(),
            zeta: Mu4::ONE,
            z_exp: 0,
        }
    }

    pub fn q_power(e: Ratio<i64>) -> CharacterValue {
        CharacterValue {
            q_exp: e,
            ..CharacterValue::one()
        }
    }

    pub fn root_of_unity(zeta: Mu4) -> CharacterValue {
        CharacterValue {
            zeta,
            ..CharacterValue::one()
        }
    }

    pub fn z_power(k: i64) -> CharacterValue {
        CharacterValue {
            z_exp: k,
            ..CharacterValue::one()
        }
    }

    pub fn is_one(&self) -> bool {
        *self == CharacterValue::one()
    }

    pub fn inverse(&self) -> CharacterValue {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> CharacterValue {
        CharacterValue {
            q_exp: self.q_exp * k,
            zeta: self.zeta.pow(k),
            z_exp: self.z_exp * k,
        }
    }
}

impl Mul for CharacterValue {
    type Output = CharacterValue;
    fn mul(self, rhs: CharacterValue) -> CharacterValue {
        &self * &rhs
    }
}

impl Mul<&CharacterValue> for &CharacterValue {
    type Output = CharacterValue;
    fn mul(self, rhs: &CharacterValue) -> CharacterValue {
        CharacterValue {
            q_exp: self.q_exp + rhs.q_exp,
            zeta: self.zeta * rhs.zeta,
            z_exp: self.z_exp + rhs.z_exp,
        }
    }
}

impl Mul<Mu4> for CharacterValue {
    type Output = CharacterValue;
    fn mul(mut self, rhs: Mu4) -> CharacterValue {
        self.zeta = self.zeta * rhs;
        self
    }
}

impl Product for CharacterValue {
    fn product<I: Iterator<Item = CharacterValue>>(iter: I) -> CharacterValue {
        iter.fold(CharacterValue::one(), Mul::mul)
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<String> = Vec::new();
        if !self.q_exp.is_zero() {
            if self.q_exp.is_one() {
                pieces.push("q".to_string());
            } else {
                pieces.push(format!("q^{}", self.q_exp));
            }
        }
        match self.z_exp {
            0 => {}
            1 => pieces.push("z".to_string()),
            k => pieces.push(format!("z^{k}")),
        }
        if pieces.is_empty() {
            return write!(f, "{}", self.zeta);
        }
        let body = pieces.join("*");
        match self.zeta {
            Mu4::ONE => f.write_str(&body),
            Mu4::MINUS_ONE => write!(f, "-{body}"),
            z => write!(f, "{z}*{body}"),
        }
    }
}

/// A character of `F*` that factors through `F*/(O*)²`: it is fixed by its
/// value on `ϖ` and a sign on the non-square unit class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClassCharacter {
    at_uniformizer: CharacterValue,
    at_unit: Sign,
}

impl SquareClassCharacter {
    /// `at_unit` must be `±1`: a character of order dividing two on `O*/(O*)²`.
    pub fn new(at_uniformizer: CharacterValue, at_unit: Mu4) -> Result<Self> {
        let at_unit = at_unit.as_sign().ok_or_else(|| {
            Error::InvalidCharacter(format!(
                "value {at_unit} on the unit class has order 4, but the unit square classes form a group of order 2"
            ))
        })?;
        Ok(SquareClassCharacter {
            at_uniformizer,
            at_unit,
        })
    }

    pub fn trivial() -> Self {
        SquareClassCharacter {
            at_uniformizer: CharacterValue::one(),
            at_unit: Sign::Plus,
        }
    }

    /// `ϖ ↦ z`, trivial on units.
    pub fn unramified() -> Self {
        SquareClassCharacter {
            at_uniformizer: CharacterValue::z_power(1),
            at_unit: Sign::Plus,
        }
    }

    pub fn at_uniformizer(&self) -> &CharacterValue {
        &self.at_uniformizer
    }

    pub fn at_unit(&self) -> Sign {
        self.at_unit
    }
}

/// Where the field lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    PAdic { p: u64 },
    Real,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalField {
    place: Place,
    nonresidue: u64,
    gamma_pi: Mu4,
}

/// `a^((p-1)/2) mod p` as `±1` (or 0).
pub fn legendre(a: i64, p: u64) -> i8 {
    let p_i = p as i128;
    let base = (a as i128).rem_euclid(p_i);
    if base == 0 {
        return 0;
    }
    let mut result: i128 = 1;
    let mut b = base;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % p_i;
        }
        b = b * b % p_i;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl LocalField {
    /// A finite extension of `Q_p` is modeled only through `p` (so `q = p`).
    /// `nonresidue` defaults to the least quadratic non-residue and
    /// `gamma_pi` to [`LocalField::default_gamma_pi`].
    pub fn p_adic(p: u64, nonresidue: Option<u64>, gamma_pi: Option<Mu4>) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let u = match nonresidue {
            Some(u) => {
                if legendre(u as i64, p) != -1 {
                    return Err(Error::NotNonResidue { p, u });
                }
                u
            }
            None => (2..p)
                .find(|&u| legendre(u as i64, p) == -1)
                .expect("every odd prime has a non-residue"),
        };
        let kappa = gamma_pi.unwrap_or_else(|| Self::default_gamma_pi(p));
        let expected = Sign::from_parity(((p - 1) / 2) as i64);
        if kappa * kappa != Mu4::from(expected) {
            return Err(Error::GammaConstraint {
                kappa: kappa.to_string(),
                expected: expected.as_i8(),
            });
        }
        Ok(LocalField {
            place: Place::PAdic { p },
            nonresidue: u,
            gamma_pi: kappa,
        })
    }

    pub fn real() -> Self {
        LocalField {
            place: Place::Real,
            nonresidue: 0,
            gamma_pi: Mu4::ONE,
        }
    }

    /// The normalized quadratic Gauss sum `p^{-1/2} Σ_x e^{2πi x²/p}`:
    /// `1` for `p ≡ 1 (mod 4)` and `i` for `p ≡ 3 (mod 4)`.
    pub fn default_gamma_pi(p: u64) -> Mu4 {
        if p % 4 == 1 {
            Mu4::ONE
        } else {
            Mu4::I
        }
    }

    /// Both admissible values of `γ(ϖ)` for this prime.
    pub fn admissible_gamma_pi(p: u64) -> [Mu4; 2] {
        if p % 4 == 1 {
            [Mu4::ONE, Mu4::MINUS_ONE]
        } else {
            [Mu4::I, Mu4::MINUS_I]
        }
    }

    pub fn place(&self) -> Place {
        self.place
    }

    pub fn p(&self) -> Option<u64> {
        match self.place {
            Place::PAdic { p } => Some(p),
            Place::Real => None,
        }
    }

    pub fn is_real(&self) -> bool {
        self.place == Place::Real
    }

    /// The integer representing the non-square unit class.
    pub fn nonresidue(&self) -> Option<u64> {
        self.p().map(|_| self.nonresidue)
    }

    pub fn gamma_pi(&self) -> Mu4 {
        self.gamma_pi
    }

    pub fn validate(&self, x: FieldElement) -> Result<()> {
        if self.is_real() && x.valuation() != 0 {
            return Err(Error::InvalidElement(format!(
                "real elements are signs; got valuation {}",
                x.valuation()
            )));
        }
        Ok(())
    }

    /// Number of square classes: 4 for odd p, 2 over the reals.
    pub fn square_class_count(&self) -> usize {
        if self.is_real() {
            2
        } else {
            4
        }
    }

    /// Bits needed to encode a square class.
    pub fn square_class_bits(&self) -> u32 {
        if self.is_real() {
            1
        } else {
            2
        }
    }

    /// One representative per square class, valuations in `{0, 1}`.
    pub fn square_class_reps(&self) -> Vec<FieldElement> {
        if self.is_real() {
            vec![FieldElement::one(), FieldElement::nonsquare_unit()]
        } else {
            (0..4).map(FieldElement::from_square_class_code).collect()
        }
    }

    /// Both unit classes at every listed valuation (over the reals, only
    /// valuation 0 is meaningful).
    pub fn elements_with_valuations(&self, valuations: &[i64]) -> Vec<FieldElement> {
        let mut out = Vec::new();
        for &v in valuations {
            if self.is_real() && v != 0 {
                continue;
            }
            out.push(FieldElement::new(v, false));
            out.push(FieldElement::new(v, true));
        }
        out
    }

    /// The square class of a nonzero integer.
    pub fn element_from_integer(&self, x: i64) -> Result<FieldElement> {
        if x == 0 {
            return Err(Error::InvalidElement("zero is not invertible".into()));
        }
        match self.place {
            Place::Real => Ok(FieldElement::new(0, x < 0)),
            Place::PAdic { p } => {
                let p = p as i64;
                let mut m = x;
                let mut v = 0;
                while m % p == 0 {
                    m /= p;
                    v += 1;
                }
                Ok(FieldElement::new(v, legendre(m, p as u64) == -1))
            }
        }
    }

    /// `(ϖ, ϖ) = (-1)^{(p-1)/2}`.
    pub fn uniformizer_self_symbol(&self) -> Result<Sign> {
        match self.place {
            Place::PAdic { p } => Ok(Sign::from_parity(((p - 1) / 2) as i64)),
            Place::Real => Err(Error::UnsupportedOnReal("uniformizer_self_symbol")),
        }
    }

    /// The quadratic Hilbert symbol `(x, y)₂`.
    pub fn hilbert(&self, x: FieldElement, y: FieldElement) -> Sign {
        match self.place {
            Place::Real => {
                if x.has_nonsquare_unit() && y.has_nonsquare_unit() {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
            Place::PAdic { p } => {
                let (a, b) = (x.valuation(), y.valuation());
                let eps = ((p - 1) / 2) as i64;
                let e = x.has_nonsquare_unit() as i64;
                let f = y.has_nonsquare_unit() as i64;
                Sign::from_parity(
                    (a.rem_euclid(2) * b.rem_euclid(2) * eps)
                        + e * b.rem_euclid(2)
                        + f * a.rem_euclid(2),
                )
            }
        }
    }

    /// The Weil factor `γ_ψ(x)` of an unramified additive character:
    /// trivial on units, `γ(ϖ) = κ`, extended through
    /// `γ(xy) = γ(x)γ(y)(x,y)₂`.
    pub fn weil_factor(&self, x: FieldElement) -> Result<Mu4> {
        if self.is_real() {
            return Err(Error::UnsupportedOnReal("weil_factor"));
        }
        if x.valuation().rem_euclid(2) == 0 {
            Ok(Mu4::ONE)
        } else {
            let unit_sign = if x.has_nonsquare_unit() {
                Sign::Minus
            } else {
                Sign::Plus
            };
            Ok(self.gamma_pi * Mu4::from(unit_sign))
        }
    }

    /// `|x| = q^{-v(x)}`.
    pub fn abs_value(&self, x: FieldElement) -> CharacterValue {
        CharacterValue::q_power(Ratio::from_integer(-x.valuation()))
    }

    pub fn apply_character(&self, eta: &SquareClassCharacter, x: FieldElement) -> CharacterValue {
        let unit = if x.has_nonsquare_unit() {
            eta.at_unit
        } else {
            Sign::Plus
        };
        eta.at_uniformizer.pow(x.valuation()) * Mu4::from(unit)
    }

    /// Configurations of `γ(ϖ)` for this prime, as ready fields.
    pub fn with_gamma_pi(&self, kappa: Mu4) -> Result<Self> {
        match self.place {
            Place::PAdic { p } => LocalField::p_adic(p, Some(self.nonresidue), Some(kappa)),
            Place::Real => Err(Error::UnsupportedOnReal("with_gamma_pi")),
        }
    }
}

impl fmt::Display for LocalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.place {
            Place::Real => f.write_str("R"),
            Place::PAdic { p } => write!(
                f,
                "Q_{p} (u = {}, gamma(pi) = {})",
                self.nonresidue, self.gamma_pi
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> LocalField {
        LocalField::p_adic(3, None, None).unwrap()
    }

    #[test]
    fn configuration_checks() {
        assert_eq!(
            LocalField::p_adic(9, None, None),
            Err(Error::NotOddPrime(9))
        );
        assert_eq!(
            LocalField::p_adic(2, None, None),
            Err(Error::NotOddPrime(2))
        );
        assert_eq!(
            LocalField::p_adic(5, Some(4), None),
            Err(Error::NotNonResidue { p: 5, u: 4 })
        );
        assert!(LocalField::p_adic(3, None, Some(Mu4::ONE)).is_err());
        assert!(LocalField::p_adic(5, None, Some(Mu4::I)).is_err());
        assert_eq!(f3().nonresidue(), Some(2));
        assert_eq!(
            LocalField::p_adic(7, None, None).unwrap().nonresidue(),
            Some(3)
        );
    }

    #[test]
    fn hilbert_examples() {
        let f = f3();
        let pi = FieldElement::uniformizer();
        assert_eq!(f.hilbert(pi, pi), Sign::Minus);
        for y in f.elements_with_valuations(&[-1, 0, 1]) {
            for x in f.elements_with_valuations(&[-1, 0, 1]) {
                assert_eq!(f.hilbert(x.square(), y), Sign::Plus);
            }
        }
        let r = LocalField::real();
        let m = FieldElement::nonsquare_unit();
        assert_eq!(r.hilbert(m, m), Sign::Minus);
        assert_eq!(r.hilbert(m, FieldElement::one()), Sign::Plus);
    }

    #[test]
    fn weil_examples() {
        let f = LocalField::p_adic(3, None, Some(Mu4::I)).unwrap();
        let pi = FieldElement::uniformizer();
        let lhs = f.weil_factor(pi * pi).unwrap();
        let rhs =
            f.weil_factor(pi).unwrap() * f.weil_factor(pi).unwrap() * Mu4::from(f.hilbert(pi, pi));
        assert_eq!(lhs, Mu4::ONE);
        assert_eq!(lhs, rhs);
        assert_eq!(
            f.weil_factor(FieldElement::nonsquare_unit()).unwrap(),
            Mu4::ONE
        );
        assert!(LocalField::real().weil_factor(FieldElement::one()).is_err());
    }

    #[test]
    fn abs_and_characters() {
        let f = f3();
        assert!(f.abs_value(FieldElement::nonsquare_unit()).is_one());
        assert_eq!(f.abs_value(FieldElement::uniformizer()).to_string(), "q^-1");
        assert_eq!(f.abs_value(FieldElement::new(-2, false)).to_string(), "q^2");

        let x = FieldElement::new(3, false);
        assert!(f
            .apply_character(&SquareClassCharacter::trivial(), x)
            .is_one());
        assert_eq!(
            f.apply_character(&SquareClassCharacter::unramified(), x)
                .to_string(),
            "z^3"
        );
        let eta = SquareClassCharacter::new(CharacterValue::z_power(1), Mu4::MINUS_ONE).unwrap();
        assert_eq!(
            f.apply_character(&eta, FieldElement::new(1, true))
                .to_string(),
            "-z"
        );
        assert!(SquareClassCharacter::new(CharacterValue::one(), Mu4::I).is_err());
    }

    #[test]
    fn integer_classes() {
        let f = LocalField::p_adic(5, None, None).unwrap();
        assert_eq!(
            f.element_from_integer(50).unwrap(),
            FieldElement::new(2, true)
        );
        assert_eq!(
            f.element_from_integer(100).unwrap(),
            FieldElement::new(2, false)
        );
        assert_eq!(
            f.element_from_integer(2).unwrap(),
            FieldElement::new(0, true)
        );
        assert_eq!(f.element_from_integer(-1).unwrap(), FieldElement::one());
        assert!(f.element_from_integer(0).is_err());
    }

    #[test]
    fn default_gamma_matches_gauss_sum() {
        for p in [3u64, 5, 7, 11, 13, 17, 19] {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for x in 0..p {
                let theta = 2.0 * core::f64::consts::PI * ((x * x) % p) as f64 / p as f64;
                re += theta.cos();
                im += theta.sin();
            }
            let s = (p as f64).sqrt();
            let got = match (re / s, im / s) {
                (r, i) if (r - 1.0).abs() < 1e-9 && i.abs() < 1e-9 => Mu4::ONE,
                (r, i) if r.abs() < 1e-9 && (i - 1.0).abs() < 1e-9 => Mu4::I,
                other => panic!("unexpected Gauss sum {other:?}"),
            };
            assert_eq!(got, LocalField::default_gamma_pi(p), "p = {p}");
        }
    }

    #[test]
    fn character_value_display() {
        let v = CharacterValue {
            q_exp: Ratio::new(-3, 2),
            zeta: Mu4::I,
            z_exp: 2,
        };
        assert_eq!(v.to_string(), "i*q^-3/2*z^2");
        assert_eq!(
            CharacterValue::root_of_unity(Mu4::MINUS_I).to_string(),
            "-i"
        );
        assert!((v.clone() * v.inverse()).is_one());
    }
}
