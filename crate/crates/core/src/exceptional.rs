//! Exceptional characters of the center of the covered torus, the
//! Gindikin-Karpelevich constant `c(w, χ)` and pole counts of its global
//! analogue.
//!
//! Torus elements are given in convenient coordinates `(a_1..a_n; t₁)`.
//! On `T²` the entries `a_i` are the squares themselves, so
//! `|√a_i|^{n-i+1} = q^{-(n-i+1) v(a_i)/2}`.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::covertorus::sigma_torus;
use crate::laurent::{LaurentPoly, LaurentRational};
use crate::localfield::{CharacterValue, FieldElement, LocalField, Mu4, SquareClassCharacter};
use crate::rootdata::{
    coroot_word, length_tag, positive_roots, simple_roots, upsilon, ConvenientTorus, Root,
    WeylElement,
};
use crate::subgroups::{center_torus_membership, in_t2, in_tm};
use crate::{Error, Result};

/// `χ₀`, its genuine extensions to the center and to `Tᵐ`, parameterized by
/// `η` and the field's `γ(ϖ)`. `exponents[i-1]` is the exponent of `|a_i|`,
/// `n - i + 1` for the genuine construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalCharacter {
    n: usize,
    eta: SquareClassCharacter,
    exponents: Vec<Ratio<i64>>,
}

impl ExceptionalCharacter {
    pub fn new(n: usize, eta: SquareClassCharacter) -> Self {
        let exponents = (1..=n)
            .map(|i| Ratio::from_integer((n - i + 1) as i64))
            .collect();
        ExceptionalCharacter { n, eta, exponents }
    }

    /// Same `η` but arbitrary exponents (used for negative controls).
    pub fn with_exponents(
        n: usize,
        eta: SquareClassCharacter,
        exponents: Vec<Ratio<i64>>,
    ) -> Result<Self> {
        if exponents.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: exponents.len(),
            });
        }
        Ok(ExceptionalCharacter { n, eta, exponents })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn eta(&self) -> &SquareClassCharacter {
        &self.eta
    }

    pub fn exponents(&self) -> &[Ratio<i64>] {
        &self.exponents
    }

    fn check(&self, t: &ConvenientTorus) -> Result<()> {
        if t.rank() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: t.rank(),
            });
        }
        Ok(())
    }

    /// `χ₀(t) = ∏ |√a_i|^{n-i+1} · η(Υ(t))` on `T²`.
    pub fn chi0_eval(&self, field: &LocalField, t: &ConvenientTorus) -> Result<CharacterValue> {
        self.check(t)?;
        if !in_t2(t) {
            return Err(Error::NotInSubgroup("T2"));
        }
        let e: Ratio<i64> = t
            .a()
            .iter()
            .zip(&self.exponents)
            .map(|(x, k)| -k * Ratio::new(x.valuation(), 2))
            .sum();
        Ok(CharacterValue::q_power(e) * field.apply_character(&self.eta, upsilon(t)))
    }

    /// `χ₀(t) |d|^{n(n+1)/4} η(d)^n γ(d)^{⌈n/2⌉}` on the central element
    /// `∏ η_i^∨(a_i d) β₁^∨(t₁)`; `t ∈ T²` carries the `a_i`.
    pub fn chi_center_eval(
        &self,
        field: &LocalField,
        t: &ConvenientTorus,
        d: FieldElement,
    ) -> Result<CharacterValue> {
        let n = self.n as i64;
        if n % 2 == 0 && !d.is_square() {
            return Err(Error::NotInSubgroup(
                "(F*)^2 (d must be a square for even n)",
            ));
        }
        let base = self.chi0_eval(field, t)?;
        let abs_d = CharacterValue::q_power(Ratio::new(-d.valuation() * n * (n + 1), 4));
        let eta_d = field.apply_character(&self.eta, d).pow(n);
        let gamma = field.weil_factor(d)?.pow((n + 1) / 2);
        Ok(base * abs_d * eta_d * gamma)
    }

    /// Splits a central torus element as `(t, d)` with `d` the
    /// valuation-`{0,1}` representative of the class of `a_1` (or `1` for even
    /// `n`), then evaluates [`ExceptionalCharacter::chi_center_eval`].
    pub fn chi_center_on_torus(
        &self,
        field: &LocalField,
        z: &ConvenientTorus,
    ) -> Result<CharacterValue> {
        self.check(z)?;
        if !center_torus_membership(z) {
            return Err(Error::NotInSubgroup("the center of the covered torus"));
        }
        let d = if self.n % 2 == 1 {
            FieldElement::from_square_class_code(z.a_i(1).square_class_code())
        } else {
            FieldElement::one()
        };
        let a = z.a().iter().map(|&x| x * d.inverse()).collect();
        self.chi_center_eval(field, &ConvenientTorus::new(a, z.t1()), d)
    }

    /// `χ'(t) = ∏ |a_i|^{(n-i+1)/2} η(Υ(t)) ∏_{i<⌈n/2⌉} γ(a_{n-2i})` on `Tᵐ`.
    pub fn chi_prime_eval(
        &self,
        field: &LocalField,
        t: &ConvenientTorus,
    ) -> Result<CharacterValue> {
        self.check(t)?;
        if !in_tm(t) {
            return Err(Error::NotInSubgroup("Tm"));
        }
        let n = self.n;
        let e: Ratio<i64> = t
            .a()
            .iter()
            .zip(&self.exponents)
            .map(|(x, k)| -k * Ratio::new(x.valuation(), 2))
            .sum();
        let mut gamma = Mu4::ONE;
        for i in 0..n.div_ceil(2) {
            gamma = gamma * field.weil_factor(t.a_i(n - 2 * i))?;
        }
        Ok(CharacterValue::q_power(e) * field.apply_character(&self.eta, upsilon(t)) * gamma)
    }

    /// First simple root and argument where `χ(α^∨(x^{𝔩(α)})) ≠ |x|`, checked
    /// through both `χ₀` and `χ'` over every square class at valuations
    /// `-1..=2`.
    pub fn exceptionality_witness(
        &self,
        field: &LocalField,
    ) -> Result<Option<(Root, FieldElement)>> {
        let n = self.n;
        for (_, alpha) in simple_roots(n) {
            let l = length_tag(n, alpha) as i64;
            for x in field.elements_with_valuations(&[-1, 0, 1, 2]) {
                let t = coroot_word(n, alpha, x.pow(l))?.to_convenient();
                let expected = field.abs_value(x);
                if self.chi0_eval(field, &t)? != expected
                    || self.chi_prime_eval(field, &t)? != expected
                {
                    return Ok(Some((alpha, x)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_exceptional(&self, field: &LocalField) -> Result<bool> {
        Ok(self.exceptionality_witness(field)?.is_none())
    }

    /// `χ(a_α)` derived from `χ₀` evaluated on `α^∨(ϖ^{𝔩(α)})`.
    pub fn chi_a_alpha_from_character(
        &self,
        field: &LocalField,
        alpha: Root,
    ) -> Result<CharacterValue> {
        let l = length_tag(self.n, alpha) as i64;
        let t = coroot_word(self.n, alpha, FieldElement::uniformizer().pow(l))?.to_convenient();
        self.chi0_eval(field, &t)
    }
}

/// Checks `χ(x)χ(y) = σ(x,y) χ(xy)` for a partial character on a list of
/// torus elements (`None` means outside the domain).
pub fn genuine_character_witness<F>(
    field: &LocalField,
    elements: &[ConvenientTorus],
    chi: F,
) -> Result<Option<(ConvenientTorus, ConvenientTorus)>>
where
    F: Fn(&ConvenientTorus) -> Result<CharacterValue>,
{
    for x in elements {
        let cx = chi(x)?;
        for y in elements {
            let xy = x * y;
            let s = sigma_torus(field, &x.to_alpha(), &y.to_alpha())?;
            if &cx * &chi(y)? != chi(&xy)? * Mu4::from(s) {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// `log_q χ(a_α)` for the unramified exceptional character:
/// `i - j` for `ε_i - ε_j`, `i + j - 2(n+2)` for `ε_i + ε_j`, `i - n - 2` for `ε_i`.
pub fn chi_a_alpha_exponent(n: usize, alpha: Root) -> Result<i64> {
    alpha.validate(n)?;
    let m = n as i64 + 2;
    Ok(match alpha {
        Root::Diff(i, j) => i as i64 - j as i64,
        Root::Sum(i, j) => (i + j) as i64 - 2 * m,
        Root::Short(i) => i as i64 - m,
    })
}

pub fn chi_a_alpha(n: usize, alpha: Root) -> Result<LaurentRational> {
    Ok(LaurentRational::q_power(chi_a_alpha_exponent(n, alpha)?))
}

/// The weight `λ = (λ_2..λ_{n+1})`, `λ_i = i - n - 2`, with `χ(a_α) = q^{⟨λ,α⟩}`.
pub fn exceptional_weight(n: usize) -> Vec<i64> {
    (2..=n + 1).map(|i| i as i64 - n as i64 - 2).collect()
}

/// `⟨λ, α⟩` for `λ` in `ε_2..ε_{n+1}` coordinates.
pub fn weight_pairing(lambda: &[i64], alpha: Root) -> i64 {
    let n = lambda.len();
    alpha.epsilon_vector(n)[1..]
        .iter()
        .zip(lambda)
        .map(|(a, b)| a * b)
        .sum()
}

/// `(1 - q^{e-1}) / (1 - q^e)`, the factor contributed by `χ(a_α) = q^e`.
pub fn gk_factor(e: i64) -> Result<LaurentRational> {
    if e == 0 {
        return Err(Error::InvalidCharacter(
            "chi(a_alpha) = 1 gives a zero denominator".into(),
        ));
    }
    LaurentRational::new(
        LaurentPoly::one_minus(1, e - 1),
        LaurentPoly::one_minus(1, e),
    )
}

/// Exponents `e_α` for `α ∈ {α > 0 : wα < 0}` in root-list order.
pub fn gk_exponents(n: usize, w: &WeylElement) -> Result<Vec<(Root, i64)>> {
    check_weyl(n, w)?;
    w.inversion_set()
        .into_iter()
        .map(|a| Ok((a, chi_a_alpha_exponent(n, a)?)))
        .collect()
}

fn check_weyl(n: usize, w: &WeylElement) -> Result<()> {
    if w.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: w.rank(),
        });
    }
    Ok(())
}

/// `c(w, χ) = ∏_{α>0, wα<0} (1 - q^{-1}χ(a_α)) / (1 - χ(a_α))`.
pub fn gk_constant(n: usize, w: &WeylElement) -> Result<LaurentRational> {
    let mut acc = LaurentRational::one();
    for (_, e) in gk_exponents(n, w)? {
        acc = &acc * &gk_factor(e)?;
    }
    Ok(acc)
}

/// `c(w, χ)` for the unramified character with `χ(a_α) = q^{⟨λ,α⟩}`.
pub fn gk_constant_for_weight(w: &WeylElement, lambda: &[i64]) -> Result<LaurentRational> {
    check_weyl(lambda.len(), w)?;
    let mut acc = LaurentRational::one();
    for a in w.inversion_set() {
        acc = &acc * &gk_factor(weight_pairing(lambda, a))?;
    }
    Ok(acc)
}

/// `w·λ` for `λ` in `ε_2..ε_{n+1}` coordinates.
pub fn weyl_act_on_weight(w: &WeylElement, lambda: &[i64]) -> Vec<i64> {
    let mut v = alloc::vec![0];
    v.extend_from_slice(lambda);
    w.apply_vector(&v)[1..].to_vec()
}

/// The closed form of `c(w₀, χ)`:
/// `∏_{i<j} (1-q^{-1-j+i})(1-q^{-1+j+i-2(n+2)}) / ((1-q^{-j+i})(1-q^{j+i-2(n+2)}))
///  · ∏_i (1-q^{-1-n-2+i}) / (1-q^{-n-2+i})`.
pub fn gk_w0_closed_form(n: usize) -> Result<LaurentRational> {
    let m = n as i64 + 2;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 2..=m - 1 {
        for j in i + 1..=m - 1 {
            num = &num * &LaurentPoly::one_minus(1, -1 - j + i);
            num = &num * &LaurentPoly::one_minus(1, -1 + j + i - 2 * m);
            den = &den * &LaurentPoly::one_minus(1, -j + i);
            den = &den * &LaurentPoly::one_minus(1, j + i - 2 * m);
        }
        num = &num * &LaurentPoly::one_minus(1, -1 - m + i);
        den = &den * &LaurentPoly::one_minus(1, -m + i);
    }
    LaurentRational::new(num, den)
}

/// The affine form `L_α(s) = constant + Σ coeffs[k] s_{k+2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineExponent {
    pub constant: i64,
    pub coeffs: Vec<i64>,
}

impl AffineExponent {
    pub fn at_zero(&self) -> i64 {
        self.constant
    }

    pub fn eval(&self, s: &[i64]) -> i64 {
        self.constant + self.coeffs.iter().zip(s).map(|(a, b)| a * b).sum::<i64>()
    }
}

/// `L_α(s)`: `j-i+s_j-s_i`, `2(n+2)-i-j+s_i+s_j` or `n+2-i+s_i`.
pub fn affine_exponent(n: usize, alpha: Root) -> Result<AffineExponent> {
    alpha.validate(n)?;
    let mut coeffs = alloc::vec![0; n];
    let m = n as i64 + 2;
    let constant = match alpha {
        Root::Diff(i, j) => {
            coeffs[j - 2] += 1;
            coeffs[i - 2] -= 1;
            j as i64 - i as i64
        }
        Root::Sum(i, j) => {
            coeffs[i - 2] += 1;
            coeffs[j - 2] += 1;
            2 * m - (i + j) as i64
        }
        Root::Short(i) => {
            coeffs[i - 2] += 1;
            m - i as i64
        }
    };
    Ok(AffineExponent { constant, coeffs })
}

/// Poles and zeros of `∏ ζ(L_α(s)) / ζ(L_α(s) + 1)` at `s = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleReport {
    /// Roots with `L_α(0) = 1` (numerator poles).
    pub numerator_poles: Vec<Root>,
    /// Roots with `L_α(0) = 0` (denominator poles).
    pub denominator_poles: Vec<Root>,
}

impl PoleReport {
    pub fn order(&self) -> i64 {
        self.numerator_poles.len() as i64 - self.denominator_poles.len() as i64
    }
}

pub fn pole_analysis(n: usize, w: &WeylElement) -> Result<PoleReport> {
    check_weyl(n, w)?;
    let mut numerator_poles = Vec::new();
    let mut denominator_poles = Vec::new();
    for a in w.inversion_set() {
        match affine_exponent(n, a)?.at_zero() {
            1 => numerator_poles.push(a),
            0 => denominator_poles.push(a),
            _ => {}
        }
    }
    Ok(PoleReport {
        numerator_poles,
        denominator_poles,
    })
}

/// Pole order at `s = 0`; for the exceptional character the denominator
/// contributes nothing, which is asserted.
pub fn pole_order(n: usize, w: &WeylElement) -> Result<i64> {
    let r = pole_analysis(n, w)?;
    if !r.denominator_poles.is_empty() {
        return Err(Error::InvalidCharacter(format!(
            "denominator zeta poles at {} roots; the character is not exceptional",
            r.denominator_poles.len()
        )));
    }
    Ok(r.order())
}

/// Every positive root with its `χ(a_α)` exponent, for display.
pub fn chi_a_alpha_table(n: usize) -> Result<Vec<(Root, i64)>> {
    positive_roots(n)
        .into_iter()
        .map(|a| Ok((a, chi_a_alpha_exponent(n, a)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    const ONE: FieldElement = FieldElement::one();
    const PI: FieldElement = FieldElement::uniformizer();

    fn f3i() -> LocalField {
        LocalField::p_adic(3, None, Some(Mu4::I)).unwrap()
    }

    #[test]
    fn chi0_examples() {
        let f = f3i();
        let e = ExceptionalCharacter::new(2, SquareClassCharacter::trivial());
        let t = ConvenientTorus::new(vec![PI.square(), ONE], ONE);
        assert_eq!(e.chi0_eval(&f, &t).unwrap().to_string(), "q^-2");
        assert!(e
            .chi0_eval(&f, &ConvenientTorus::identity(2))
            .unwrap()
            .is_one());
        let e = ExceptionalCharacter::new(2, SquareClassCharacter::unramified());
        let t = ConvenientTorus::new(vec![ONE, ONE], PI);
        assert_eq!(e.chi0_eval(&f, &t).unwrap().to_string(), "z^-2");
        assert!(e
            .chi0_eval(&f, &ConvenientTorus::new(vec![PI, ONE], ONE))
            .is_err());
    }

    #[test]
    fn chi_center_examples() {
        let f = f3i();
        let e = ExceptionalCharacter::new(3, SquareClassCharacter::trivial());
        let v = e
            .chi_center_eval(&f, &ConvenientTorus::identity(3), PI)
            .unwrap();
        assert_eq!(
            v,
            CharacterValue::q_power(Ratio::from_integer(-3)) * (Mu4::I * Mu4::I)
        );
        let e2 = ExceptionalCharacter::new(2, SquareClassCharacter::trivial());
        assert!(e2
            .chi_center_eval(&f, &ConvenientTorus::identity(2), PI)
            .is_err());
        let d = PI.square();
        let t = ConvenientTorus::new(vec![ONE, ONE], ONE);
        let direct = e2
            .chi0_eval(&f, &ConvenientTorus::new(vec![d, d], ONE))
            .unwrap();
        assert_eq!(e2.chi_center_eval(&f, &t, d).unwrap(), direct);
    }

    #[test]
    fn chi_prime_examples() {
        let f = f3i();
        for n in 1..=4 {
            let e = ExceptionalCharacter::new(n, SquareClassCharacter::trivial());
            let t = ConvenientTorus::new(vec![PI.square(); n], ONE);
            let expected =
                CharacterValue::q_power(Ratio::from_integer(-((n * (n + 1) / 2) as i64)));
            assert_eq!(e.chi_prime_eval(&f, &t).unwrap(), expected);
            assert_eq!(e.chi0_eval(&f, &t).unwrap(), expected);
        }
    }

    #[test]
    fn exceptional_examples() {
        let f = f3i();
        for n in 0..=3 {
            assert!(
                ExceptionalCharacter::new(n, SquareClassCharacter::unramified())
                    .is_exceptional(&f)
                    .unwrap()
            );
        }
        let bad = ExceptionalCharacter::with_exponents(
            2,
            SquareClassCharacter::trivial(),
            vec![Ratio::from_integer(1), Ratio::from_integer(0)],
        )
        .unwrap();
        assert!(!bad.is_exceptional(&f).unwrap());
    }

    #[test]
    fn chi_a_alpha_examples() {
        assert_eq!(
            chi_a_alpha(3, Root::Diff(2, 3)).unwrap().as_q_power(),
            Some(-1)
        );
        for n in 1..=4 {
            assert_eq!(
                chi_a_alpha(n, Root::Short(n + 1)).unwrap().as_q_power(),
                Some(-1)
            );
            for (_, a) in simple_roots(n) {
                assert_eq!(chi_a_alpha_exponent(n, a).unwrap(), -1);
            }
        }
        assert_eq!(
            chi_a_alpha(3, Root::Sum(3, 4)).unwrap().as_q_power(),
            Some(-3)
        );
        assert!(chi_a_alpha(2, Root::Short(4)).is_err());
    }

    #[test]
    fn chi_a_alpha_two_paths() {
        let f = f3i();
        for n in 1..=4 {
            let e = ExceptionalCharacter::new(n, SquareClassCharacter::unramified());
            let lambda = exceptional_weight(n);
            for a in positive_roots(n) {
                let table = chi_a_alpha_exponent(n, a).unwrap();
                let via = e.chi_a_alpha_from_character(&f, a).unwrap();
                assert_eq!(
                    via,
                    CharacterValue::q_power(Ratio::from_integer(table)),
                    "{a}"
                );
                assert_eq!(weight_pairing(&lambda, a), table);
            }
        }
    }

    #[test]
    fn gk_examples() {
        let w0 = WeylElement::longest(1);
        let c = gk_constant(1, &w0).unwrap();
        let expected =
            LaurentRational::new(LaurentPoly::one_minus(1, -2), LaurentPoly::one_minus(1, -1))
                .unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.to_string(), "1 + q^-1");
        assert!(gk_constant(2, &WeylElement::identity(2)).unwrap().is_one());
        for n in 1..=3 {
            assert_eq!(
                gk_constant(n, &WeylElement::longest(n)).unwrap(),
                gk_w0_closed_form(n).unwrap()
            );
        }
    }

    #[test]
    fn pole_examples() {
        for n in 1..=3 {
            assert_eq!(pole_order(n, &WeylElement::longest(n)).unwrap(), n as i64);
            assert_eq!(pole_order(n, &WeylElement::identity(n)).unwrap(), 0);
        }
        let s3 = WeylElement::simple(2, 3).unwrap();
        assert_eq!(pole_order(2, &s3).unwrap(), 1);
        let l = affine_exponent(3, Root::Sum(2, 4)).unwrap();
        assert_eq!(l.at_zero(), 4);
        assert_eq!(l.eval(&[1, 0, 2]), 7);
    }

    #[test]
    fn extensions_are_genuine() {
        for (p, k) in [
            (3, Mu4::I),
            (3, Mu4::MINUS_I),
            (5, Mu4::ONE),
            (5, Mu4::MINUS_ONE),
        ] {
            let f = LocalField::p_adic(p, None, Some(k)).unwrap();
            for n in 1..=3 {
                let all = crate::subgroups::square_class_torus(&f, n, &[0, 1]).unwrap();
                for eta in [
                    SquareClassCharacter::trivial(),
                    SquareClassCharacter::unramified(),
                ] {
                    let e = ExceptionalCharacter::new(n, eta);
                    let center: Vec<_> = all
                        .iter()
                        .filter(|t| center_torus_membership(t))
                        .cloned()
                        .collect();
                    let tm: Vec<_> = all.iter().filter(|t| in_tm(t)).cloned().collect();
                    assert!(
                        genuine_character_witness(&f, &center, |t| e.chi_center_on_torus(&f, t))
                            .unwrap()
                            .is_none(),
                        "center p={p} n={n}"
                    );
                    assert!(
                        genuine_character_witness(&f, &tm, |t| e.chi_prime_eval(&f, t))
                            .unwrap()
                            .is_none(),
                        "Tm p={p} n={n}"
                    );
                }
            }
        }
    }
}
