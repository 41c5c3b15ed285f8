//! The double cover restricted to the torus.
//!
//! Lifts are written `ζ·𝔰(t)` with `𝔰(t) = ∏_{i≤n+1} c_{α_i}(t_i,t_i) ·
//! α_{n+1}^∨*(t_{n+1}) ⋯ α_1^∨*(t_1)`. The symbol `c_{α_i}` is the Hilbert
//! symbol for `i ≤ n` (when `n > 0`) and `c(x², y) = 1` for `α_{n+1}`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::localfield::{FieldElement, LocalField, Sign};
use crate::rootdata::{cartan, upsilon, AlphaTorus, ConvenientTorus, WeylElement};
use crate::{Error, Result};

/// Largest number of triples [`verify_cocycle`] will visit.
pub const COCYCLE_TRIPLE_BOUND: u128 = 50_000_000;

/// `phase · 𝔰(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverTorusElement {
    pub t: AlphaTorus,
    pub phase: Sign,
}

impl CoverTorusElement {
    pub fn new(t: AlphaTorus, phase: Sign) -> Self {
        CoverTorusElement { t, phase }
    }

    /// `𝔰(t)`.
    pub fn lift(t: AlphaTorus) -> Self {
        CoverTorusElement {
            t,
            phase: Sign::Plus,
        }
    }

    pub fn identity(n: usize) -> Self {
        CoverTorusElement::lift(AlphaTorus::identity(n))
    }

    /// `(-1, 1)`.
    pub fn central_sign(n: usize) -> Self {
        CoverTorusElement::new(AlphaTorus::identity(n), Sign::Minus)
    }

    pub fn rank(&self) -> usize {
        self.t.rank()
    }

    /// `(t, ζ)(t', ζ') = (tt', σ(t,t') ζζ')`.
    pub fn multiply(&self, field: &LocalField, other: &Self) -> Result<Self> {
        let s = sigma_torus(field, &self.t, &other.t)?;
        Ok(CoverTorusElement {
            t: &self.t * &other.t,
            phase: s * self.phase * other.phase,
        })
    }

    pub fn inverse(&self, field: &LocalField) -> Self {
        let inv = self.t.inverse();
        let s = sigma_torus(field, &self.t, &inv).expect("ranks agree");
        CoverTorusElement {
            t: inv,
            phase: self.phase * s,
        }
    }
}

impl fmt::Display for CoverTorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} s{}", self.phase, self.t)
    }
}

/// One Hilbert-symbol factor of `σ(t, t')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaFactor {
    pub label: String,
    pub x: FieldElement,
    pub y: FieldElement,
    pub value: Sign,
}

fn same_rank(t: &AlphaTorus, u: &AlphaTorus) -> Result<()> {
    if t.rank() != u.rank() {
        return Err(Error::RankMismatch {
            expected: t.rank(),
            got: u.rank(),
        });
    }
    Ok(())
}

/// The factors of
/// `σ(t,t') = c(t_{n+1}², t'_{n+1}) c(t_n, t'_{n+1}^{-2}) ∏_{i≤n} c(t_i,t'_i) ∏_{i<n} c(t_i, t'_{i+1}^{-1})`.
pub fn sigma_factors(
    field: &LocalField,
    t: &AlphaTorus,
    u: &AlphaTorus,
) -> Result<Vec<SigmaFactor>> {
    same_rank(t, u)?;
    let n = t.rank();
    let mut out = Vec::with_capacity(2 * n + 1);
    let mut push = |label: String, x: FieldElement, y: FieldElement| {
        out.push(SigmaFactor {
            label,
            x,
            y,
            value: field.hilbert(x, y),
        })
    };
    let last = n + 1;
    push(
        format!("c(t{last}^2, t'{last})"),
        t.coord(last).square(),
        u.coord(last),
    );
    if n >= 1 {
        push(
            format!("c(t{n}, t'{last}^-2)"),
            t.coord(n),
            u.coord(last).pow(-2),
        );
    }
    for i in 1..=n {
        push(format!("c(t{i}, t'{i})"), t.coord(i), u.coord(i));
    }
    for i in 1..n {
        push(
            format!("c(t{i}, t'{}^-1)", i + 1),
            t.coord(i),
            u.coord(i + 1).inverse(),
        );
    }
    Ok(out)
}

/// The 2-cocycle of the section on `T_{n+1}` (`α^∨` coordinates).
pub fn sigma_torus(field: &LocalField, t: &AlphaTorus, u: &AlphaTorus) -> Result<Sign> {
    same_rank(t, u)?;
    let n = t.rank();
    let c = |x: FieldElement, y: FieldElement| field.hilbert(x, y);
    let last = n + 1;
    let mut s = c(t.coord(last).square(), u.coord(last));
    if n >= 1 {
        s = s * c(t.coord(n), u.coord(last).pow(-2));
    }
    for i in 1..=n {
        s = s * c(t.coord(i), u.coord(i));
    }
    for i in 1..n {
        s = s * c(t.coord(i), u.coord(i + 1).inverse());
    }
    Ok(s)
}

/// `[b,b']_σ = ∏ c(b_i,b'_i) · c(∏b_i, ∏b'_i)`.
pub fn commutator(field: &LocalField, b: &ConvenientTorus, b2: &ConvenientTorus) -> Result<Sign> {
    if b.rank() != b2.rank() {
        return Err(Error::RankMismatch {
            expected: b.rank(),
            got: b2.rank(),
        });
    }
    let diag: Sign = b
        .a()
        .iter()
        .zip(b2.a())
        .map(|(&x, &y)| field.hilbert(x, y))
        .product();
    Ok(diag * field.hilbert(b.det(), b2.det()))
}

/// `σ` in convenient coordinates: `c(det a, det a') ∏_{i<j} c(a_i, a'_j)^{-1}`.
pub fn sigma_convenient(
    field: &LocalField,
    x: &ConvenientTorus,
    y: &ConvenientTorus,
) -> Result<Sign> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch {
            expected: x.rank(),
            got: y.rank(),
        });
    }
    Ok(gl_sigma(field, x.a(), y.a()))
}

/// The cocycle on the diagonal torus of `GL_k`:
/// `c(det b, det b') ∏_{i<j} c(b_i, b'_j)^{-1}`.
pub fn gl_sigma(field: &LocalField, b: &[FieldElement], b2: &[FieldElement]) -> Sign {
    let det = |v: &[FieldElement]| v.iter().copied().product::<FieldElement>();
    let mut s = field.hilbert(det(b), det(b2));
    for (i, &x) in b.iter().enumerate() {
        for &y in b2.iter().skip(i + 1) {
            s = s * field.hilbert(x, y);
        }
    }
    s
}

fn check_levi(n: usize, k: usize, gl: &[FieldElement], g: &[FieldElement]) -> Result<()> {
    if k > n {
        return Err(Error::InvalidLevi(format!(
            "block size {k} exceeds rank {n}"
        )));
    }
    if gl.len() != k || g.len() != n - k + 1 {
        return Err(Error::InvalidLevi(format!(
            "expected {k} GL coordinates and {} G coordinates",
            n - k + 1
        )));
    }
    Ok(())
}

/// `(σ(a,t), σ(t,a))` for `a ∈ GL_k` and `t ∈ G_{n-k}`, from the closed
/// form: `σ(a,t) = 1` and `σ(t,a) = c(t_1^{1 or 2}, det a^{-1})`, squared
/// when `k = n`.
pub fn sigma_mixed(
    field: &LocalField,
    n: usize,
    k: usize,
    a: &[FieldElement],
    t: &[FieldElement],
) -> Result<(Sign, Sign)> {
    check_levi(n, k, a, t)?;
    let det: FieldElement = a.iter().copied().product();
    let t1 = if k < n { t[0] } else { t[0].square() };
    Ok((Sign::Plus, field.hilbert(t1, det.inverse())))
}

/// `σ(bh, b'h')` for `b, b' ∈ GL_k`, `h, h' ∈ G_{n-k}`, through the block
/// formula `σ_{GL_k}(b,b') · σ_{G_{n-k}}(h,h') · c(Υ(h), det b')`.
#[allow(clippy::too_many_arguments)]
pub fn block_sigma(
    field: &LocalField,
    n: usize,
    k: usize,
    b: &[FieldElement],
    h: &[FieldElement],
    b2: &[FieldElement],
    h2: &[FieldElement],
) -> Result<Sign> {
    if k == 0 {
        return Err(Error::InvalidLevi("block size must be positive".into()));
    }
    check_levi(n, k, b, h)?;
    check_levi(n, k, b2, h2)?;
    let h_t = AlphaTorus::new(h.to_vec());
    let h2_t = AlphaTorus::new(h2.to_vec());
    let det2: FieldElement = b2.iter().copied().product();
    Ok(gl_sigma(field, b, b2)
        * sigma_torus(field, &h_t, &h2_t)?
        * field.hilbert(upsilon(&h_t.to_convenient()), det2))
}

/// `c_{α_i}` for the ambient simple root `α_i` of rank `n`.
fn c_alpha(field: &LocalField, n: usize, i: usize, x: FieldElement, y: FieldElement) -> Sign {
    if n > 0 && i <= n {
        field.hilbert(x, y)
    } else {
        field.hilbert(x.square(), y)
    }
}

fn section_correction(field: &LocalField, t: &AlphaTorus) -> Sign {
    let n = t.rank();
    (1..=n + 1)
        .map(|i| c_alpha(field, n, i, t.coord(i), t.coord(i)))
        .product()
}

/// Normalizes `phase · ∏ α_{i}^∨*(x)` (letters `(i, x)` left to right) to
/// `ζ·𝔰(s)`, using `α_i^∨*(x)α_i^∨*(y) = c_{α_i}(x,y) α_i^∨*(xy)` and
/// `α_i^∨*(x)α_j^∨*(y) = c_{α_i}(x, y^{⟨α_i,α_j^∨⟩}) α_j^∨*(y)α_i^∨*(x)`.
pub fn normalize_word(
    field: &LocalField,
    n: usize,
    phase: Sign,
    letters: &[(usize, FieldElement)],
) -> Result<CoverTorusElement> {
    let mut word = letters.to_vec();
    for &(i, _) in &word {
        if i == 0 || i > n + 1 {
            return Err(Error::SimpleIndexOutOfRange {
                index: i,
                max: n + 1,
            });
        }
    }
    let mut phase = phase;
    // Bubble sort into descending index order.
    let len = word.len();
    for pass in 0..len {
        let mut swapped = false;
        for p in 0..len.saturating_sub(pass + 1) {
            let (i, x) = word[p];
            let (j, y) = word[p + 1];
            if i < j {
                let e = cartan(n, i, j)?;
                phase = phase * c_alpha(field, n, i, x, y.pow(e));
                word.swap(p, p + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let mut coords = vec![FieldElement::one(); n + 1];
    let mut seen = vec![false; n + 1];
    for (i, x) in word {
        if seen[i - 1] {
            phase = phase * c_alpha(field, n, i, coords[i - 1], x);
            coords[i - 1] = coords[i - 1] * x;
        } else {
            coords[i - 1] = x;
            seen[i - 1] = true;
        }
    }
    let s = AlphaTorus::new(coords);
    let phase = phase * section_correction(field, &s);
    Ok(CoverTorusElement { t: s, phase })
}

/// The letters of `ζ·𝔰(t)` together with its leading phase.
pub fn section_word(
    field: &LocalField,
    x: &CoverTorusElement,
) -> (Sign, Vec<(usize, FieldElement)>) {
    let n = x.rank();
    let letters = (1..=n + 1).rev().map(|i| (i, x.t.coord(i))).collect();
    (x.phase * section_correction(field, &x.t), letters)
}

/// `𝔰(w_{α_k}) · x · 𝔰(w_{α_k})^{-1}` for a simple root `α_k` of `G_n`
/// (`2 ≤ k ≤ n+1`), via `w_k α_j^∨*(y) w_k^{-1} = α_k^∨*(y^{-⟨α_k,α_j^∨⟩}) α_j^∨*(y)`.
pub fn conjugate_by_simple(
    field: &LocalField,
    k: usize,
    x: &CoverTorusElement,
) -> Result<CoverTorusElement> {
    let n = x.rank();
    if k == 1 && n >= 1 {
        return Err(Error::SimpleIndexOutOfRange {
            index: k,
            max: n + 1,
        });
    }
    if k < 2 || k > n + 1 {
        return Err(Error::SimpleIndexOutOfRange {
            index: k,
            max: n + 1,
        });
    }
    let (phase, letters) = section_word(field, x);
    let mut conj = Vec::with_capacity(2 * letters.len());
    for (j, y) in letters {
        conj.push((k, y.pow(-cartan(n, k, j)?)));
        conj.push((j, y));
    }
    normalize_word(field, n, phase, &conj)
}

/// Conjugation along a word `w_{k_1} ⋯ w_{k_m}`: the last letter acts first.
pub fn conjugate_by_word(
    field: &LocalField,
    word: &[usize],
    x: &CoverTorusElement,
) -> Result<CoverTorusElement> {
    let mut cur = x.clone();
    for &k in word.iter().rev() {
        cur = conjugate_by_simple(field, k, &cur)?;
    }
    Ok(cur)
}

/// Conjugation by the representative of `w` along its greedy reduced word.
pub fn conjugate_by_weyl(
    field: &LocalField,
    w: &WeylElement,
    x: &CoverTorusElement,
) -> Result<CoverTorusElement> {
    if w.rank() != x.rank() {
        return Err(Error::RankMismatch {
            expected: x.rank(),
            got: w.rank(),
        });
    }
    conjugate_by_word(field, &w.reduced_word(), x)
}

/// Index of the square class of `t` (base `square_class_count`, `t_1` least significant).
pub fn torus_class_index(field: &LocalField, t: &AlphaTorus) -> usize {
    let bits = field.square_class_bits();
    t.coords()
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let code = if field.is_real() {
                x.has_nonsquare_unit() as usize
            } else {
                x.square_class_code() as usize
            };
            code << (bits as usize * k)
        })
        .sum()
}

/// Square-class torus elements: every coordinate runs over
/// `field.elements_with_valuations(valuations)`, one representative per class.
pub fn square_class_torus(field: &LocalField, n: usize, valuations: &[i64]) -> Vec<AlphaTorus> {
    let mut reps: Vec<FieldElement> = Vec::new();
    let mut codes: Vec<u8> = Vec::new();
    for x in field.elements_with_valuations(valuations) {
        let code = x.square_class_code();
        if !codes.contains(&code) {
            codes.push(code);
            reps.push(x);
        }
    }
    let mut out = vec![Vec::new()];
    for _ in 0..=n {
        let mut next = Vec::with_capacity(out.len() * reps.len());
        for prefix in &out {
            for &r in &reps {
                let mut v: Vec<FieldElement> = prefix.clone();
                v.push(r);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(AlphaTorus::new).collect()
}

/// Outcome of an exhaustive cocycle check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    pub n: usize,
    pub classes: usize,
    pub triples_checked: u64,
    pub counterexample: Option<[AlphaTorus; 3]>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `σ(t,t')σ(tt',t'') = σ(t,t't'')σ(t',t'')` on every triple of
/// square-class torus elements. `sigma` is evaluated once per pair of
/// classes, so it must factor through square classes.
pub fn verify_cocycle<F>(
    field: &LocalField,
    n: usize,
    valuations: &[i64],
    sigma: F,
) -> Result<CocycleReport>
where
    F: Fn(&AlphaTorus, &AlphaTorus) -> Result<Sign>,
{
    let elems = square_class_torus(field, n, valuations);
    let size = elems.len() as u128;
    if size.pow(3) > COCYCLE_TRIPLE_BOUND {
        return Err(Error::SpaceTooLarge {
            size: size.pow(3),
            bound: COCYCLE_TRIPLE_BOUND,
        });
    }
    let m = elems.len();
    // Elements indexed by class; products are XOR of indices.
    let mut by_index: Vec<Option<&AlphaTorus>> =
        vec![None; 1 << (field.square_class_bits() as usize * (n + 1))];
    for t in &elems {
        by_index[torus_class_index(field, t)] = Some(t);
    }
    if by_index.iter().any(|x| x.is_none()) {
        // The valuations miss some classes; fall back to a direct check.
        return verify_cocycle_direct(field, n, &elems, &sigma);
    }
    let by_index: Vec<&AlphaTorus> = by_index.into_iter().map(|x| x.expect("checked")).collect();
    let mut table = vec![false; m * m];
    for (i, ti) in by_index.iter().enumerate() {
        for (j, tj) in by_index.iter().enumerate() {
            table[i * m + j] = sigma(ti, tj)? == Sign::Minus;
        }
    }
    let mut triples = 0u64;
    for a in 0..m {
        for b in 0..m {
            let ab = table[a * m + b];
            let prod = a ^ b;
            for c in 0..m {
                triples += 1;
                let lhs = ab ^ table[prod * m + c];
                let rhs = table[a * m + (b ^ c)] ^ table[b * m + c];
                if lhs != rhs {
                    return Ok(CocycleReport {
                        n,
                        classes: m,
                        triples_checked: triples,
                        counterexample: Some([
                            by_index[a].clone(),
                            by_index[b].clone(),
                            by_index[c].clone(),
                        ]),
                    });
                }
            }
        }
    }
    Ok(CocycleReport {
        n,
        classes: m,
        triples_checked: triples,
        counterexample: None,
    })
}

fn verify_cocycle_direct<F>(
    field: &LocalField,
    n: usize,
    elems: &[AlphaTorus],
    sigma: &F,
) -> Result<CocycleReport>
where
    F: Fn(&AlphaTorus, &AlphaTorus) -> Result<Sign>,
{
    let _ = field;
    let mut triples = 0u64;
    for a in elems {
        for b in elems {
            let ab = a * b;
            let s_ab = sigma(a, b)?;
            for c in elems {
                triples += 1;
                let lhs = s_ab * sigma(&ab, c)?;
                let rhs = sigma(a, &(b * c))? * sigma(b, c)?;
                if lhs != rhs {
                    return Ok(CocycleReport {
                        n,
                        classes: elems.len(),
                        triples_checked: triples,
                        counterexample: Some([a.clone(), b.clone(), c.clone()]),
                    });
                }
            }
        }
    }
    Ok(CocycleReport {
        n,
        classes: elems.len(),
        triples_checked: triples,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{center_element, embed_levi, w0_conjugate_alpha};

    const ONE: FieldElement = FieldElement::one();
    const PI: FieldElement = FieldElement::uniformizer();
    const U: FieldElement = FieldElement::nonsquare_unit();

    fn f3() -> LocalField {
        LocalField::p_adic(3, None, None).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let f = f3();
        let t = AlphaTorus::new(vec![PI, ONE]);
        assert_eq!(sigma_torus(&f, &t, &t).unwrap(), Sign::Minus);
        for x in f.square_class_reps() {
            for y in f.square_class_reps() {
                let t = AlphaTorus::new(vec![x]);
                let u = AlphaTorus::new(vec![y]);
                assert_eq!(sigma_torus(&f, &t, &u).unwrap(), Sign::Plus);
            }
        }
        let sq = AlphaTorus::new(vec![PI.square(), U.square(), U]);
        let any = AlphaTorus::new(vec![PI, U, PI * U]);
        assert_eq!(sigma_torus(&f, &sq, &any).unwrap(), Sign::Plus);
        assert!(sigma_torus(&f, &t, &AlphaTorus::identity(2)).is_err());
        let product: Sign = sigma_factors(&f, &any, &sq)
            .unwrap()
            .iter()
            .map(|x| x.value)
            .product();
        assert_eq!(product, sigma_torus(&f, &any, &sq).unwrap());
    }

    #[test]
    fn multiply_examples() {
        let f = f3();
        let x = CoverTorusElement::lift(AlphaTorus::new(vec![PI, ONE]));
        let xx = x.multiply(&f, &x).unwrap();
        assert_eq!(
            xx,
            CoverTorusElement::new(AlphaTorus::new(vec![PI.square(), ONE]), Sign::Minus)
        );
        let y = CoverTorusElement::new(AlphaTorus::new(vec![PI * U, U, PI]), Sign::Minus);
        assert_eq!(
            y.multiply(&f, &y.inverse(&f)).unwrap(),
            CoverTorusElement::identity(2)
        );
        let z = CoverTorusElement::central_sign(2);
        assert_eq!(z.multiply(&f, &y).unwrap(), y.multiply(&f, &z).unwrap());
    }

    #[test]
    fn commutator_examples() {
        let f = f3();
        let b = ConvenientTorus::new(vec![PI, ONE, ONE], ONE);
        let b2 = ConvenientTorus::new(vec![ONE, U, ONE], ONE);
        assert_eq!(commutator(&f, &b, &b2).unwrap(), Sign::Minus);
        let sq = ConvenientTorus::new(vec![PI.square(), ONE, U.square()], PI);
        let sq2 = ConvenientTorus::new(vec![ONE, PI.square(), ONE], U);
        assert_eq!(commutator(&f, &sq, &sq2).unwrap(), Sign::Plus);
    }

    #[test]
    fn convenient_examples() {
        let f = f3();
        let x = ConvenientTorus::new(vec![PI, ONE], ONE);
        assert_eq!(
            sigma_convenient(&f, &x, &ConvenientTorus::new(vec![ONE, U], ONE)).unwrap(),
            Sign::Plus
        );
        assert_eq!(
            sigma_convenient(&f, &x, &ConvenientTorus::new(vec![U, ONE], ONE)).unwrap(),
            Sign::Minus
        );
    }

    #[test]
    fn mixed_examples() {
        let f = f3();
        assert_eq!(
            sigma_mixed(&f, 2, 1, &[U], &[PI, ONE]).unwrap(),
            (Sign::Plus, Sign::Minus)
        );
        assert_eq!(
            sigma_mixed(&f, 2, 2, &[U, PI], &[PI]).unwrap(),
            (Sign::Plus, Sign::Plus)
        );
        assert!(sigma_mixed(&f, 2, 3, &[U, PI, ONE], &[]).is_err());
    }

    #[test]
    fn block_g0_factor_is_trivial() {
        let f = f3();
        for t1 in f.square_class_reps() {
            for d in f.square_class_reps() {
                let ups = upsilon(&AlphaTorus::new(vec![t1]).to_convenient());
                assert_eq!(f.hilbert(ups, d), Sign::Plus);
            }
        }
        assert!(block_sigma(&f, 2, 0, &[], &[ONE; 3], &[], &[ONE; 3]).is_err());
    }

    #[test]
    fn word_normalization_reproduces_sigma() {
        for p in [3, 5] {
            let f = LocalField::p_adic(p, None, None).unwrap();
            for n in 0..=2 {
                let all = square_class_torus(&f, n, &[0, 1]);
                for t in &all {
                    for u in &all {
                        let (p1, mut w1) = section_word(&f, &CoverTorusElement::lift(t.clone()));
                        let (p2, w2) = section_word(&f, &CoverTorusElement::lift(u.clone()));
                        w1.extend(w2);
                        let got = normalize_word(&f, n, p1 * p2, &w1).unwrap();
                        assert_eq!(got.t, t * u);
                        assert_eq!(
                            got.phase,
                            sigma_torus(&f, t, u).unwrap(),
                            "n={n} t={t} u={u}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn simple_conjugation_examples() {
        let f = f3();
        for n in 1..=3 {
            for x in f.square_class_reps() {
                let z = CoverTorusElement::lift(center_element(n, x));
                for k in 2..=n + 1 {
                    assert_eq!(conjugate_by_simple(&f, k, &z).unwrap(), z);
                }
                let mut y = AlphaTorus::identity(n).coords().to_vec();
                y[n] = x;
                let got = conjugate_by_simple(
                    &f,
                    n + 1,
                    &CoverTorusElement::lift(AlphaTorus::new(y.clone())),
                )
                .unwrap();
                y[n] = x.inverse();
                assert_eq!(got, CoverTorusElement::lift(AlphaTorus::new(y)));
            }
            assert!(conjugate_by_simple(&f, 1, &CoverTorusElement::identity(n)).is_err());
            assert!(conjugate_by_simple(&f, n + 2, &CoverTorusElement::identity(n)).is_err());
        }
    }

    #[test]
    fn gl_generators_fix_the_g_factor() {
        let f = LocalField::p_adic(5, None, None).unwrap();
        for n in 2..=3 {
            for k in 1..n {
                let hs = square_class_torus(&f, n - k, &[0, 1]);
                for h in &hs {
                    let t = embed_levi(n, k, &vec![ONE; k], h.coords()).unwrap();
                    let x = CoverTorusElement::lift(t);
                    for i in 2..=k {
                        assert_eq!(conjugate_by_simple(&f, i, &x).unwrap(), x);
                    }
                }
            }
        }
    }

    #[test]
    fn w0_word_matches_torus_formula() {
        let f = f3();
        for n in 0..=3 {
            let w0 = WeylElement::longest(n);
            for t in square_class_torus(&f, n, &[0, 1]) {
                let got = conjugate_by_weyl(&f, &w0, &CoverTorusElement::lift(t.clone())).unwrap();
                assert_eq!(got.t, w0_conjugate_alpha(&t));
                assert_eq!(got.t, w0.act_on_torus(&t));
            }
        }
    }

    #[test]
    fn cocycle_small() {
        let f = f3();
        let r = verify_cocycle(&f, 1, &[0, 1], |a, b| sigma_torus(&f, a, b)).unwrap();
        assert!(r.passed());
        assert_eq!(r.triples_checked, 16u64.pow(3));
        let flip = AlphaTorus::new(vec![PI, U]);
        let bad = verify_cocycle(&f, 1, &[0, 1], |a, b| {
            let s = sigma_torus(&f, a, b)?;
            Ok(if a.is_identity() && *b == flip { -s } else { s })
        })
        .unwrap();
        assert!(!bad.passed());
        assert!(verify_cocycle(&f, 4, &[0, 1], |a, b| sigma_torus(&f, a, b)).is_err());
        let direct = verify_cocycle(&f, 1, &[0], |a, b| sigma_torus(&f, a, b)).unwrap();
        assert!(direct.passed());
        assert_eq!(direct.classes, 4);
    }
}
