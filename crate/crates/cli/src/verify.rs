//! Exhaustive verification suites behind `verify`.

use std::time::Instant;

use gspin_cover_core::covertorus::{
    block_sigma, commutator, sigma_mixed, sigma_torus,
    square_class_torus as alpha_square_class_torus, verify_cocycle,
};
use gspin_cover_core::exceptional::{
    exceptional_weight, genuine_character_witness, gk_constant, gk_constant_for_weight,
    gk_w0_closed_form, pole_order, weyl_act_on_weight, ExceptionalCharacter,
};
use gspin_cover_core::localfield::{
    CharacterValue, FieldElement, LocalField, Mu4, Sign, SquareClassCharacter,
};
use gspin_cover_core::oracle::{conic_hilbert, real_grid_hilbert};
use gspin_cover_core::orbits::{admissible_partitions, orbit_o0, orbit_o1, v_orbit};
use gspin_cover_core::rootdata::{
    embed_levi, positive_roots, weyl_enumerate, AlphaTorus, Root, WeylElement,
};
use gspin_cover_core::subgroups::{
    brute_centralizer, center_torus_membership, in_t2, in_tm, is_maximal_abelian,
    square_class_torus,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{Fault, VerifyArgs};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Report;

/// Largest rank accepted by the exhaustive suites.
pub const EXHAUSTIVE_RANK_BOUND: usize = 6;
pub const DEFAULT_VERIFY_RANK: usize = 3;
pub const DEFAULT_SAMPLES: u64 = 2000;

/// Suite names and the largest rank each enumerates exhaustively.
pub const SUITES: [(&str, usize); 12] = [
    ("cocycle", 3),
    ("commutator", 3),
    ("center", 4),
    ("block", 3),
    ("maximal-abelian", 3),
    ("exceptional", 4),
    ("gk", 3),
    ("poles", 3),
    ("orbit-reduction", 6),
    ("vorbit", 6),
    ("hilbert", 0),
    ("weil", 0),
];

const P_ADIC_ONLY: [&str; 4] = ["center", "maximal-abelian", "exceptional", "weil"];

#[derive(Debug)]
pub struct SuiteOutcome {
    pub name: String,
    pub ranks: Vec<usize>,
    pub checked: u64,
    pub passed: bool,
    pub skipped: Option<String>,
    pub witness: Option<String>,
    pub millis: u128,
}

impl SuiteOutcome {
    fn json(&self) -> Value {
        json!({
            "name": self.name,
            "ranks": self.ranks,
            "checked": self.checked,
            "passed": self.passed,
            "skipped": self.skipped,
            "witness": self.witness,
            "millis": self.millis as u64,
        })
    }

    fn line(&self) -> String {
        let status = match (&self.skipped, self.passed) {
            (Some(_), _) => "SKIP",
            (None, true) => "PASS",
            (None, false) => "FAIL",
        };
        let mut s = format!("{status} {:<16}", self.name);
        if !self.ranks.is_empty() {
            s += &format!(" n in {:?}", self.ranks);
        }
        s += &format!(" checked {} ({} ms)", self.checked, self.millis);
        if let Some(r) = &self.skipped {
            s += &format!(": {r}");
        }
        if let Some(w) = &self.witness {
            s += &format!("\n     witness: {w}");
        }
        s
    }
}

/// Accumulates counts and the first failure of a suite.
#[derive(Default)]
struct Tally {
    checked: u64,
    witness: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(describe());
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }
}

/// σ, optionally negated on one pair of classes.
#[derive(Clone, Copy)]
struct Sigma<'a> {
    field: &'a LocalField,
    flip: bool,
}

impl Sigma<'_> {
    fn eval(&self, t: &AlphaTorus, u: &AlphaTorus) -> gspin_cover_core::Result<Sign> {
        let s = sigma_torus(self.field, t, u)?;
        let target = FieldElement::uniformizer();
        if self.flip && t.coord(1) == target && u.coord(1) == target && t == u {
            return Ok(-s);
        }
        Ok(s)
    }
}

pub fn run(cfg: &RunConfig, args: &VerifyArgs) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_VERIFY_RANK);
    let sampled = args.samples.is_some() || (n > EXHAUSTIVE_RANK_BOUND && cfg.seed.is_some());
    if n > EXHAUSTIVE_RANK_BOUND && !sampled {
        return Err(CliError::Bound(format!(
            "exhaustive suites support n <= {EXHAUSTIVE_RANK_BOUND}, got n = {n}; pass --seed for a sampled run"
        )));
    }
    let selected: Vec<&str> = if args.suite.is_empty() {
        SUITES.iter().map(|(s, _)| *s).collect()
    } else {
        let mut v = Vec::new();
        for s in &args.suite {
            let s = s.trim();
            if !SUITES.iter().any(|(name, _)| *name == s) {
                let names: Vec<&str> = SUITES.iter().map(|(s, _)| *s).collect();
                return Err(CliError::Usage(format!(
                    "unknown suite `{s}`; known: {}",
                    names.join(", ")
                )));
            }
            v.push(s);
        }
        v
    };
    let sigma = Sigma {
        field: &cfg.field,
        flip: args.fault == Some(Fault::FlipSigma),
    };
    let mut outcomes = Vec::new();
    if n <= EXHAUSTIVE_RANK_BOUND {
        for (name, cap) in SUITES {
            if !selected.contains(&name) {
                continue;
            }
            let ranks: Vec<usize> = match name {
                "hilbert" | "weil" => Vec::new(),
                "vorbit" => (2..=n.min(cap)).collect(),
                _ => (1..=n.min(cap)).collect(),
            };
            outcomes.push(run_suite(cfg, name, ranks, sigma)?);
        }
    }
    if sampled {
        let seed = cfg.seed.unwrap_or(0);
        let samples = args.samples.unwrap_or(DEFAULT_SAMPLES);
        outcomes.push(sampled_cocycle(n, seed, samples, sigma)?);
    }
    let passed = outcomes.iter().all(|o| o.passed);
    let mut text = String::new();
    for o in &outcomes {
        text += &o.line();
        text.push('\n');
    }
    text += if passed {
        "all suites passed\n"
    } else {
        "verification FAILED\n"
    };
    let body = json!({
        "passed": passed,
        "fault": args.fault.map(|_| "flip-sigma"),
        "seed": cfg.seed,
        "suites": outcomes.iter().map(SuiteOutcome::json).collect::<Vec<_>>(),
    });
    let r = Report::new("verify", Some(n), body, text);
    Ok(if passed { r } else { r.failed() })
}

fn run_suite(
    cfg: &RunConfig,
    name: &str,
    ranks: Vec<usize>,
    sigma: Sigma<'_>,
) -> Result<SuiteOutcome, CliError> {
    let start = Instant::now();
    let f = &cfg.field;
    if f.is_real() && P_ADIC_ONLY.contains(&name) {
        return Ok(SuiteOutcome {
            name: name.into(),
            ranks,
            checked: 0,
            passed: true,
            skipped: Some("needs a p-adic field".into()),
            witness: None,
            millis: 0,
        });
    }
    let mut tally = Tally::default();
    match name {
        "cocycle" => {
            for &n in &ranks {
                let rep = verify_cocycle(f, n, &[0, 1], |t, u| sigma.eval(t, u))?;
                tally.checked += rep.triples_checked;
                if let Some([a, b, c]) = rep.counterexample {
                    tally.check(false, || format!("n={n}: t={a}, t'={b}, t''={c}"));
                }
            }
        }
        "commutator" => {
            for &n in &ranks {
                let all = alpha_square_class_torus(f, n, &[0, 1]);
                for x in &all {
                    for y in &all {
                        let direct = sigma.eval(x, y)? * sigma.eval(y, x)?;
                        let closed = commutator(f, &x.to_convenient(), &y.to_convenient())?;
                        tally.check(direct == closed, || format!("n={n}: b={x}, b'={y}"));
                    }
                }
            }
        }
        "center" => suite_center(f, &ranks, &mut tally)?,
        "block" => suite_block(f, &ranks, &mut tally)?,
        "maximal-abelian" => {
            for &n in &ranks {
                let rep = is_maximal_abelian(f, n, &[0, 1], in_tm)?;
                tally.check(rep.abelian && rep.maximal, || {
                    format!(
                        "n={n}: noncommuting {:?}, extension {:?}",
                        rep.noncommuting, rep.extension
                    )
                });
            }
        }
        "exceptional" => suite_exceptional(f, &ranks, &mut tally)?,
        "gk" => suite_gk(&ranks, &mut tally)?,
        "poles" => {
            for &n in &ranks {
                let w0 = WeylElement::longest(n);
                for w in weyl_enumerate(n)? {
                    let order = pole_order(n, &w)?;
                    let ok = if w == w0 {
                        order == n as i64
                    } else {
                        order < n as i64
                    };
                    tally.check(ok, || format!("n={n}: w={w} has pole order {order}"));
                }
            }
        }
        "orbit-reduction" => {
            for &n in &ranks {
                let (o0, o1) = (orbit_o0(n)?, orbit_o1(n)?);
                for o in admissible_partitions(n)? {
                    if o.greater_or_not_comparable(&o0) {
                        tally.check(o.dominates(&o1), || format!("n={n}: O={o}"));
                    }
                }
            }
        }
        "vorbit" => {
            for &n in &ranks {
                let v = v_orbit(n, &orbit_o1(n)?)?;
                let u1: Vec<Root> = positive_roots(n)
                    .into_iter()
                    .filter(|a| a.epsilon_vector(n)[1] != 0)
                    .collect();
                tally.check(v == u1, || {
                    format!("n={n}: V(O1) has {} roots, U1 has {}", v.len(), u1.len())
                });
            }
        }
        "hilbert" => suite_hilbert(f, &mut tally)?,
        "weil" => suite_weil(f, &mut tally)?,
        _ => unreachable!("suite names are validated"),
    }
    Ok(SuiteOutcome {
        name: name.into(),
        ranks,
        checked: tally.checked,
        passed: !tally.failed(),
        skipped: None,
        witness: tally.witness,
        millis: start.elapsed().as_millis(),
    })
}

fn suite_center(f: &LocalField, ranks: &[usize], tally: &mut Tally) -> Result<(), CliError> {
    for &n in ranks {
        let all = square_class_torus(f, n, &[0, 1])?;
        let brute = brute_centralizer(f, n, &all, &[0, 1])?;
        let closed: Vec<_> = all
            .iter()
            .filter(|t| center_torus_membership(t))
            .cloned()
            .collect();
        tally.check(brute == closed, || {
            format!(
                "n={n}: centralizer {} vs closed form {}",
                brute.len(),
                closed.len()
            )
        });
        if n % 2 == 0 {
            let t2: Vec<_> = all.iter().filter(|t| in_t2(t)).cloned().collect();
            tally.check(brute == t2, || {
                format!("n={n}: centralizer differs from T2")
            });
        }
    }
    Ok(())
}

/// Every tuple of `len` square-class representatives.
fn tuples(f: &LocalField, len: usize) -> Vec<Vec<FieldElement>> {
    let reps = f.square_class_reps();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                reps.iter().map(move |&r| {
                    let mut v = v.clone();
                    v.push(r);
                    v
                })
            })
            .collect();
    }
    out
}

fn suite_block(f: &LocalField, ranks: &[usize], tally: &mut Tally) -> Result<(), CliError> {
    for &n in ranks {
        for k in 1..=n {
            let bs = tuples(f, k);
            let hs = tuples(f, n - k + 1);
            let id_b = vec![FieldElement::one(); k];
            let id_h = vec![FieldElement::one(); n - k + 1];
            let pairs: Vec<(&Vec<FieldElement>, &Vec<FieldElement>)> = bs
                .iter()
                .flat_map(|b| hs.iter().map(move |h| (b, h)))
                .collect();
            for (b, h) in &pairs {
                let x = embed_levi(n, k, b, h)?;
                for (b2, h2) in &pairs {
                    let y = embed_levi(n, k, b2, h2)?;
                    let lhs = block_sigma(f, n, k, b, h, b2, h2)?;
                    let rhs = sigma_torus(f, &x, &y)?;
                    tally.check(lhs == rhs, || {
                        format!("n={n}, k={k}: b={b:?} h={h:?} b'={b2:?} h'={h2:?}")
                    });
                }
                // σ(a, t) and σ(t, a) with a = b in GL_k and t = h in G_{n-k}.
                let a = embed_levi(n, k, b, &id_h)?;
                let t = embed_levi(n, k, &id_b, h)?;
                let (s_at, s_ta) = sigma_mixed(f, n, k, b, h)?;
                tally.check(
                    s_at == Sign::Plus && sigma_torus(f, &a, &t)? == Sign::Plus,
                    || format!("n={n}, k={k}: sigma(a,t) != 1 for a={b:?}, t={h:?}"),
                );
                tally.check(sigma_torus(f, &t, &a)? == s_ta, || {
                    format!("n={n}, k={k}: sigma(t,a) mismatch for a={b:?}, t={h:?}")
                });
            }
        }
    }
    Ok(())
}

/// Every square-class character `η` with `η(ϖ) ∈ μ₄ ∪ μ₄·z`.
pub fn all_etas() -> Vec<SquareClassCharacter> {
    let mut out = Vec::new();
    for zeta in Mu4::ALL {
        for z in [0, 1] {
            for unit in [Mu4::ONE, Mu4::MINUS_ONE] {
                let at_pi = CharacterValue::z_power(z) * zeta;
                out.push(SquareClassCharacter::new(at_pi, unit).expect("unit value is a sign"));
            }
        }
    }
    out
}

fn suite_exceptional(f: &LocalField, ranks: &[usize], tally: &mut Tally) -> Result<(), CliError> {
    let p = f.p().expect("p-adic");
    for kappa in LocalField::admissible_gamma_pi(p) {
        let fk = f.with_gamma_pi(kappa)?;
        for eta in all_etas() {
            for &n in ranks {
                let chi = ExceptionalCharacter::new(n, eta.clone());
                tally.check(chi.is_exceptional(&fk)?, || {
                    format!("n={n}, kappa={kappa}: not exceptional")
                });
                let perturbed: Vec<Ratio<i64>> = (1..=n)
                    .map(|i| Ratio::from_integer((n - i) as i64))
                    .collect();
                let bad = ExceptionalCharacter::with_exponents(n, eta.clone(), perturbed)?;
                tally.check(!bad.is_exceptional(&fk)?, || {
                    format!("n={n}, kappa={kappa}: perturbed exponents pass")
                });
                if n <= 3 {
                    let all = square_class_torus(&fk, n, &[0, 1])?;
                    let center: Vec<_> = all
                        .iter()
                        .filter(|t| center_torus_membership(t))
                        .cloned()
                        .collect();
                    let tm: Vec<_> = all.iter().filter(|t| in_tm(t)).cloned().collect();
                    let w = genuine_character_witness(&fk, &center, |t| {
                        chi.chi_center_on_torus(&fk, t)
                    })?;
                    tally.check(w.is_none(), || {
                        format!("n={n}, kappa={kappa}: central character not genuine at {w:?}")
                    });
                    let w = genuine_character_witness(&fk, &tm, |t| chi.chi_prime_eval(&fk, t))?;
                    tally.check(w.is_none(), || {
                        format!("n={n}, kappa={kappa}: chi' not genuine at {w:?}")
                    });
                }
            }
        }
    }
    Ok(())
}

fn suite_gk(ranks: &[usize], tally: &mut Tally) -> Result<(), CliError> {
    for &n in ranks {
        let w0 = WeylElement::longest(n);
        tally.check(gk_constant(n, &w0)? == gk_w0_closed_form(n)?, || {
            format!("n={n}: c(w0) differs from the closed form")
        });
        let lambda = exceptional_weight(n);
        for w in weyl_enumerate(n)?.into_iter().filter(|w| w.length() == 2) {
            let word = w.reduced_word();
            let (a, b) = (
                WeylElement::simple(n, word[0])?,
                WeylElement::simple(n, word[1])?,
            );
            let lhs = gk_constant_for_weight(&w, &lambda)?;
            let rhs = &gk_constant_for_weight(&a, &weyl_act_on_weight(&b, &lambda))?
                * &gk_constant_for_weight(&b, &lambda)?;
            tally.check(lhs == rhs, || format!("n={n}: c({w}) does not factor"));
        }
    }
    Ok(())
}

fn suite_hilbert(f: &LocalField, tally: &mut Tally) -> Result<(), CliError> {
    match f.p() {
        Some(p) => {
            let u = f.nonresidue().expect("p-adic") as i64;
            let ints: Vec<i64> = [1, u, p as i64, u * p as i64].to_vec();
            for &x in &ints {
                for &y in &ints {
                    let closed = f.hilbert(f.element_from_integer(x)?, f.element_from_integer(y)?);
                    tally.check(closed == conic_hilbert(p, x, y), || {
                        format!("({x}, {y})_{p}")
                    });
                }
            }
        }
        None => {
            for x in [-3i64, -2, -1, 1, 2, 3] {
                for y in [-3i64, -2, -1, 1, 2, 3] {
                    let closed = f.hilbert(f.element_from_integer(x)?, f.element_from_integer(y)?);
                    tally.check(closed == real_grid_hilbert(x, y), || {
                        format!("({x}, {y})_R")
                    });
                }
            }
        }
    }
    Ok(())
}

fn suite_weil(f: &LocalField, tally: &mut Tally) -> Result<(), CliError> {
    let p = f.p().expect("p-adic");
    for kappa in LocalField::admissible_gamma_pi(p) {
        let fk = f.with_gamma_pi(kappa)?;
        let xs = fk.elements_with_valuations(&[-1, 0, 1, 2]);
        for &x in &xs {
            let gx = fk.weil_factor(x)?;
            tally.check(fk.weil_factor(x.square())? == Mu4::ONE, || {
                format!("kappa={kappa}: gamma({x}^2)")
            });
            tally.check(fk.weil_factor(x.inverse())? == gx, || {
                format!("kappa={kappa}: gamma({x}^-1)")
            });
            for &y in &xs {
                let lhs = fk.weil_factor(x * y)?;
                let rhs = gx * fk.weil_factor(y)? * Mu4::from(fk.hilbert(x, y));
                tally.check(lhs == rhs, || format!("kappa={kappa}: gamma({x} * {y})"));
            }
        }
    }
    Ok(())
}

fn sampled_cocycle(
    n: usize,
    seed: u64,
    samples: u64,
    sigma: Sigma<'_>,
) -> Result<SuiteOutcome, CliError> {
    let start = Instant::now();
    let f = sigma.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        AlphaTorus::new(
            (0..=n)
                .map(|_| {
                    let v = if f.is_real() {
                        0
                    } else {
                        rng.gen_range(-2..=2)
                    };
                    FieldElement::new(v, rng.gen_bool(0.5))
                })
                .collect(),
        )
    };
    let mut tally = Tally::default();
    for _ in 0..samples {
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let lhs = sigma.eval(&a, &b)? * sigma.eval(&(&a * &b), &c)?;
        let rhs = sigma.eval(&a, &(&b * &c))? * sigma.eval(&b, &c)?;
        tally.check(lhs == rhs, || format!("n={n}: t={a}, t'={b}, t''={c}"));
        let direct = sigma.eval(&a, &b)? * sigma.eval(&b, &a)?;
        let closed = commutator(f, &a.to_convenient(), &b.to_convenient())?;
        tally.check(direct == closed, || {
            format!("n={n}: commutator at b={a}, b'={b}")
        });
    }
    Ok(SuiteOutcome {
        name: "cocycle-sampled".into(),
        ranks: vec![n],
        checked: tally.checked,
        passed: !tally.failed(),
        skipped: None,
        witness: tally.witness,
        millis: start.elapsed().as_millis(),
    })
}
