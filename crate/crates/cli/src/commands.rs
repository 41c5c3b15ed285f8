use std::fmt::Write as _;

use gspin_cover_core::covertorus::{commutator as closed_commutator, sigma_factors, sigma_torus};
use gspin_cover_core::exceptional::{
    chi_a_alpha_exponent, gk_constant, gk_exponents, gk_w0_closed_form, pole_analysis,
    ExceptionalCharacter,
};
use gspin_cover_core::laurent::LaurentPoly;
use gspin_cover_core::localfield::{CharacterValue, Sign};
use gspin_cover_core::orbits::{
    admissible_partitions, graded_roots, h_weights, hasse_edges, orbit_o0, orbit_o1,
    render_stabilizer, stabilizer_type, v_orbit,
};
use gspin_cover_core::rootdata::{
    cartan, coroot_coefficients, describe_simple, positive_roots, simple_roots, AlphaTorus,
    ConvenientTorus,
};
use gspin_cover_core::subgroups::{
    brute_centralizer, center_torus_membership, in_t2, is_maximal_abelian, square_class_torus,
    SubgroupSpec, SubgroupTag,
};
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::args::{CharacterArgs, Coords, Tag, TorusArg, Which};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{poly_json, rational_json, yes_no, Report};
use crate::parse::{
    parse_elements, parse_eta, parse_orbit, parse_torus, parse_valuations, parse_weyl,
};

const DEFAULT_RANK: usize = 1;

/// The rank from `--n`, or else from the number of coordinates given.
fn rank_for(cfg: &RunConfig, tokens: &[String]) -> Result<usize, CliError> {
    if let Some(n) = cfg.n {
        return Ok(n);
    }
    let count = parse_elements(&cfg.field, tokens)?.len();
    count
        .checked_sub(1)
        .ok_or_else(|| CliError::Usage("a torus element needs at least one coordinate".into()))
}

fn sign_json(s: Sign) -> Value {
    json!(s.as_i8())
}

fn value_json(v: &CharacterValue) -> Value {
    json!({
        "text": v.to_string(),
        "q_exp": v.q_exp.to_string(),
        "root_of_unity": v.zeta.to_string(),
        "z_exp": v.z_exp,
    })
}

pub fn roots(cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_RANK);
    let mut text = String::new();
    let mut pos = Vec::new();
    writeln!(text, "positive roots of G_{n} ({}):", n * n).ok();
    for a in positive_roots(n) {
        let coroot = coroot_coefficients(n, a)?;
        writeln!(
            text,
            "  {a:<8} {}  coroot word {:?}",
            if a.is_long() { "long " } else { "short" },
            coroot
        )
        .ok();
        pos.push(json!({
            "root": a.to_string(),
            "long": a.is_long(),
            "simple_coefficients": a.simple_root_coefficients(n),
            "coroot_coefficients": coroot,
        }));
    }
    let mut simple = Vec::new();
    writeln!(text, "ambient simple roots:").ok();
    for i in 1..=n + 1 {
        let d = describe_simple(n, i)?;
        writeln!(text, "  {d}").ok();
        simple.push(json!(d));
    }
    let cm: Vec<Vec<i64>> = (1..=n + 1)
        .map(|i| {
            (1..=n + 1)
                .map(|j| cartan(n, i, j))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    writeln!(text, "ambient Cartan matrix <alpha_i, alpha_j^v>:").ok();
    for row in &cm {
        writeln!(text, "  {row:?}").ok();
    }
    let g_simple: Vec<String> = simple_roots(n)
        .into_iter()
        .map(|(_, a)| a.to_string())
        .collect();
    Ok(Report::new(
        "roots",
        Some(n),
        json!({ "positive_roots": pos, "ambient_simple_roots": simple, "simple_roots": g_simple, "cartan": cm }),
        text,
    ))
}

fn two_tori(
    cfg: &RunConfig,
    t: &[String],
    t2: &[String],
    coords: Coords,
) -> Result<(usize, AlphaTorus, AlphaTorus), CliError> {
    let n = rank_for(cfg, t)?;
    Ok((
        n,
        parse_torus(&cfg.field, n, t, coords)?,
        parse_torus(&cfg.field, n, t2, coords)?,
    ))
}

pub fn sigma(
    cfg: &RunConfig,
    t: &[String],
    t2: &[String],
    coords: Coords,
) -> Result<Report, CliError> {
    let f = &cfg.field;
    let (n, x, y) = two_tori(cfg, t, t2, coords)?;
    let s = sigma_torus(f, &x, &y)?;
    let s_rev = sigma_torus(f, &y, &x)?;
    let factors = sigma_factors(f, &x, &y)?;
    let mut text = format!("sigma({x}, {y}) = {s}\n");
    writeln!(text, "commutator [t, t'] = {}", s * s_rev).ok();
    for fac in &factors {
        writeln!(
            text,
            "  {} = ({}, {}) = {}",
            fac.label, fac.x, fac.y, fac.value
        )
        .ok();
    }
    let body = json!({
        "t": x.to_string(),
        "t2": y.to_string(),
        "sigma": sign_json(s),
        "commutator": sign_json(s * s_rev),
        "factors": factors.iter().map(|fac| json!({
            "label": fac.label,
            "x": fac.x.to_string(),
            "y": fac.y.to_string(),
            "value": sign_json(fac.value),
        })).collect::<Vec<_>>(),
    });
    Ok(Report::new("sigma", Some(n), body, text))
}

pub fn commutator(
    cfg: &RunConfig,
    t: &[String],
    t2: &[String],
    coords: Coords,
) -> Result<Report, CliError> {
    let f = &cfg.field;
    let (n, x, y) = two_tori(cfg, t, t2, coords)?;
    let closed = closed_commutator(f, &x.to_convenient(), &y.to_convenient())?;
    let direct = sigma_torus(f, &x, &y)? * sigma_torus(f, &y, &x)?;
    let text = format!(
        "[b, b'] for b = {}, b' = {}\n  closed form        {closed}\n  sigma(b,b')sigma(b',b) {direct}\n  agree: {}\n",
        x.to_convenient(),
        y.to_convenient(),
        yes_no(closed == direct)
    );
    let body = json!({
        "b": x.to_convenient().to_string(),
        "b2": y.to_convenient().to_string(),
        "closed_form": sign_json(closed),
        "direct": sign_json(direct),
        "agree": closed == direct,
    });
    let r = Report::new("commutator", Some(n), body, text);
    Ok(if closed == direct { r } else { r.failed() })
}

fn tag_of(t: Tag) -> SubgroupTag {
    match t {
        Tag::T2 => SubgroupTag::T2,
        Tag::Tm => SubgroupTag::Tm,
        Tag::CenterTorus => SubgroupTag::CenterTorus,
        Tag::CenterGroup => SubgroupTag::CenterGroup,
        Tag::CentralizerK => SubgroupTag::CentralizerK,
    }
}

fn convenient_of(cfg: &RunConfig, torus: &TorusArg) -> Result<(usize, ConvenientTorus), CliError> {
    let n = rank_for(cfg, &torus.t)?;
    Ok((
        n,
        parse_torus(&cfg.field, n, &torus.t, torus.coords)?.to_convenient(),
    ))
}

pub fn subgroup_member(cfg: &RunConfig, tag: Tag, torus: &TorusArg) -> Result<Report, CliError> {
    let (n, t) = convenient_of(cfg, torus)?;
    let tag = tag_of(tag);
    let member = SubgroupSpec::new(tag, n).contains(&t)?;
    let text = format!("{t} in {tag}: {}\n", yes_no(member));
    Ok(Report::new(
        "subgroup member",
        Some(n),
        json!({ "element": t.to_string(), "subgroup": tag.name(), "member": member }),
        text,
    ))
}

pub fn subgroup_centralizer(cfg: &RunConfig, valuations: &str) -> Result<Report, CliError> {
    let f = &cfg.field;
    let n = cfg.rank_or(DEFAULT_RANK);
    let vals = parse_valuations(valuations)?;
    let all = square_class_torus(f, n, &vals)?;
    let brute = brute_centralizer(f, n, &all, &vals)?;
    let closed: Vec<ConvenientTorus> = all
        .iter()
        .filter(|t| center_torus_membership(t))
        .cloned()
        .collect();
    let equal = brute == closed;
    let mut text = format!(
        "square-class torus: {} elements\nbrute-force centralizer: {}\nparametric center: {}\nequal: {}\n",
        all.len(),
        brute.len(),
        closed.len(),
        yes_no(equal)
    );
    let mut body = json!({
        "valuations": vals,
        "torus_size": all.len(),
        "centralizer_size": brute.len(),
        "closed_form_size": closed.len(),
        "equal": equal,
    });
    let mut ok = equal;
    if n.is_multiple_of(2) {
        let t2: Vec<ConvenientTorus> = all.iter().filter(|t| in_t2(t)).cloned().collect();
        let eq_t2 = brute == t2;
        ok &= eq_t2;
        writeln!(text, "equals T2 (even n): {}", yes_no(eq_t2)).ok();
        body["equals_t2"] = json!(eq_t2);
    }
    if !equal {
        let diff = brute
            .iter()
            .find(|t| !closed.contains(t))
            .or_else(|| closed.iter().find(|t| !brute.contains(t)));
        if let Some(d) = diff {
            writeln!(text, "first difference: {d}").ok();
            body["witness"] = json!(d.to_string());
        }
    }
    let r = Report::new("subgroup centralizer", Some(n), body, text);
    Ok(if ok { r } else { r.failed() })
}

pub fn subgroup_maximal(cfg: &RunConfig, tag: Tag, valuations: &str) -> Result<Report, CliError> {
    let f = &cfg.field;
    let n = cfg.rank_or(DEFAULT_RANK);
    let vals = parse_valuations(valuations)?;
    let sub = SubgroupSpec::new(tag_of(tag), n);
    let rep = is_maximal_abelian(f, n, &vals, |t| sub.contains(t).unwrap_or(false))?;
    let mut text = format!(
        "{}: {} elements, abelian {}, maximal abelian {}\n",
        sub.tag,
        rep.members,
        yes_no(rep.abelian),
        yes_no(rep.maximal)
    );
    if let Some((a, b)) = &rep.noncommuting {
        writeln!(text, "non-commuting pair: {a}, {b}").ok();
    }
    if let Some(e) = &rep.extension {
        writeln!(text, "commuting non-member: {e}").ok();
    }
    let body = json!({
        "subgroup": sub.tag.name(),
        "valuations": vals,
        "members": rep.members,
        "abelian": rep.abelian,
        "maximal": rep.maximal,
        "noncommuting": rep.noncommuting.as_ref().map(|(a, b)| json!([a.to_string(), b.to_string()])),
        "extension": rep.extension.as_ref().map(ToString::to_string),
    });
    Ok(Report::new("subgroup maximal-abelian", Some(n), body, text))
}

pub fn chi_eval(
    cfg: &RunConfig,
    which: Which,
    torus: &TorusArg,
    eta: &CharacterArgs,
) -> Result<Report, CliError> {
    let f = &cfg.field;
    let (n, t) = convenient_of(cfg, torus)?;
    let chi = ExceptionalCharacter::new(n, parse_eta(eta)?);
    let (name, v) = match which {
        Which::Chi0 => ("chi0", chi.chi0_eval(f, &t)?),
        Which::Center => ("chi_center", chi.chi_center_on_torus(f, &t)?),
        Which::Prime => ("chi_prime", chi.chi_prime_eval(f, &t)?),
    };
    let text = format!("{name}({t}) = {v}\n");
    Ok(Report::new(
        "chi eval",
        Some(n),
        json!({ "character": name, "element": t.to_string(), "value": value_json(&v) }),
        text,
    ))
}

pub fn chi_table(cfg: &RunConfig, eta: &CharacterArgs) -> Result<Report, CliError> {
    let f = &cfg.field;
    let n = cfg.rank_or(DEFAULT_RANK);
    let chi = ExceptionalCharacter::new(n, parse_eta(eta)?);
    let mut rows = Vec::new();
    let mut text = String::from("root      table   via chi0   agree\n");
    let mut all_agree = true;
    for a in positive_roots(n) {
        let e = chi_a_alpha_exponent(n, a)?;
        let via = chi.chi_a_alpha_from_character(f, a)?;
        let agree = via == CharacterValue::q_power(Ratio::from_integer(e));
        all_agree &= agree;
        writeln!(
            text,
            "{:<9} q^{:<5} {:<10} {}",
            a.to_string(),
            e,
            via.to_string(),
            yes_no(agree)
        )
        .ok();
        rows.push(json!({ "root": a.to_string(), "exponent": e, "via_character": value_json(&via), "agree": agree }));
    }
    let r = Report::new(
        "chi table",
        Some(n),
        json!({ "rows": rows, "agree": all_agree }),
        text,
    );
    Ok(if all_agree { r } else { r.failed() })
}

pub fn chi_check(
    cfg: &RunConfig,
    eta: &CharacterArgs,
    exponents: Option<&str>,
) -> Result<Report, CliError> {
    let f = &cfg.field;
    let n = cfg.rank_or(DEFAULT_RANK);
    let eta = parse_eta(eta)?;
    let chi = match exponents {
        None => ExceptionalCharacter::new(n, eta),
        Some(s) => {
            let ex: Vec<Ratio<i64>> = s
                .split(',')
                .map(|t| t.trim().parse::<Ratio<i64>>())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("bad exponent list `{s}`")))?;
            ExceptionalCharacter::with_exponents(n, eta, ex)
                .map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    let witness = chi.exceptionality_witness(f)?;
    let mut text = format!("exceptional: {}\n", yes_no(witness.is_none()));
    if let Some((a, x)) = &witness {
        writeln!(text, "fails at root {a}, x = {x}").ok();
    }
    let exps: Vec<String> = chi.exponents().iter().map(ToString::to_string).collect();
    let body = json!({
        "exponents": exps,
        "exceptional": witness.is_none(),
        "witness": witness.map(|(a, x)| json!({ "root": a.to_string(), "x": x.to_string() })),
    });
    Ok(Report::new("chi check", Some(n), body, text))
}

fn one_minus_text(e: i64) -> String {
    match e {
        0 => "0".into(),
        1 => "(1-q)".into(),
        _ => format!("(1-q^{e})"),
    }
}

/// `∏(1-q^{e-1}) / ∏(1-q^e)` written factor by factor.
fn product_text(exps: &[i64]) -> String {
    if exps.is_empty() {
        return "1".into();
    }
    let num: String = exps.iter().map(|e| one_minus_text(e - 1)).collect();
    let den: String = exps.iter().map(|&e| one_minus_text(e)).collect();
    if exps.len() == 1 {
        format!("{num}/{den}")
    } else {
        format!("{num}/({den})")
    }
}

pub fn gk(cfg: &RunConfig, w: &[String]) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_RANK);
    let w = parse_weyl(n, w)?;
    let exps = gk_exponents(n, &w)?;
    let just: Vec<i64> = exps.iter().map(|(_, e)| *e).collect();
    let (mut num, mut den) = (LaurentPoly::one(), LaurentPoly::one());
    for &e in &just {
        num = &num * &LaurentPoly::one_minus(1, e - 1);
        den = &den * &LaurentPoly::one_minus(1, e);
    }
    let reduced = gk_constant(n, &w)?;
    let poles = pole_analysis(n, &w)?;
    let product = product_text(&just);
    let mut text = format!(
        "c({w}, chi) = {product}\n          = {reduced}\npole order {}\n",
        poles.order()
    );
    let mut body = json!({
        "w": w.to_string(),
        "reduced_word": w.reduced_word(),
        "length": w.length(),
        "factors": exps.iter().map(|(a, e)| json!({ "root": a.to_string(), "chi_exponent": e })).collect::<Vec<_>>(),
        "product": product,
        "unreduced": { "num": poly_json(&num), "den": poly_json(&den) },
        "reduced": rational_json(&reduced),
        "reduced_text": reduced.to_string(),
        "pole_order": poles.order(),
    });
    let mut ok = true;
    if w == gspin_cover_core::rootdata::WeylElement::longest(n) {
        let agrees = gk_w0_closed_form(n)? == reduced;
        ok = agrees;
        writeln!(text, "matches closed form for w0: {}", yes_no(agrees)).ok();
        body["closed_form_agrees"] = json!(agrees);
    }
    let r = Report::new("gk", Some(n), body, text);
    Ok(if ok { r } else { r.failed() })
}

pub fn pole_order(cfg: &RunConfig, w: &[String]) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_RANK);
    let w = parse_weyl(n, w)?;
    let rep = pole_analysis(n, &w)?;
    let names = |v: &[gspin_cover_core::rootdata::Root]| {
        v.iter().map(ToString::to_string).collect::<Vec<_>>()
    };
    let mut text = format!("pole order of {w} at s = 0: {}\n", rep.order());
    writeln!(
        text,
        "  numerator poles (L = 1): {}",
        names(&rep.numerator_poles).join(", ")
    )
    .ok();
    writeln!(
        text,
        "  denominator poles (L = 0): {}",
        rep.denominator_poles.len()
    )
    .ok();
    let body = json!({
        "w": w.to_string(),
        "pole_order": rep.order(),
        "numerator_poles": names(&rep.numerator_poles),
        "denominator_poles": names(&rep.denominator_poles),
    });
    let r = Report::new("pole-order", Some(n), body, text);
    Ok(if rep.denominator_poles.is_empty() {
        r
    } else {
        r.failed()
    })
}

pub fn orbits_list(cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_RANK);
    let parts = admissible_partitions(n)?;
    let (o0, o1) = if n >= 1 {
        (Some(orbit_o0(n)?), Some(orbit_o1(n)?))
    } else {
        (None, None)
    };
    let mut text = format!(
        "orthogonal partitions of {} ({}):\n",
        2 * n + 1,
        parts.len()
    );
    let mut rows = Vec::new();
    for p in &parts {
        let h = h_weights(n, p)?;
        let not_below_o0 = o0.as_ref().map(|o| p.greater_or_not_comparable(o));
        let above_o1 = o1.as_ref().map(|o| p.dominates(o));
        writeln!(text, "  {:<16} h = {:?}", p.to_string(), h).ok();
        rows.push(json!({
            "partition": p.to_string(),
            "parts": p.parts(),
            "h": h,
            "greater_or_not_comparable_to_o0": not_below_o0,
            "dominates_o1": above_o1,
        }));
    }
    Ok(Report::new(
        "orbits list",
        Some(n),
        json!({ "partitions": rows }),
        text,
    ))
}

pub fn orbits_hasse(cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_RANK);
    let parts = admissible_partitions(n)?;
    let edges = hasse_edges(&parts);
    let mut text = String::new();
    for &(a, b) in &edges {
        writeln!(text, "{} > {}", parts[a], parts[b]).ok();
    }
    let body = json!({
        "nodes": parts.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "edges": edges.iter().map(|&(a, b)| json!({ "from": parts[a].to_string(), "to": parts[b].to_string() })).collect::<Vec<_>>(),
    });
    Ok(Report::new("orbits hasse", Some(n), body, text))
}

pub fn orbits_vorbit(cfg: &RunConfig, orbit: &str) -> Result<Report, CliError> {
    let n = cfg.rank_or(DEFAULT_RANK);
    let o = parse_orbit(n, orbit)?;
    let h = h_weights(n, &o)?;
    let v = v_orbit(n, &o)?;
    let graded = graded_roots(n, &o)?;
    let mut text = format!("O = {o}, h = {h:?}\nV(O) roots ({}):", v.len());
    for a in &v {
        write!(text, " {a}").ok();
    }
    text.push('\n');
    for (w, roots) in &graded {
        let names: Vec<String> = roots.iter().map(ToString::to_string).collect();
        writeln!(text, "  weight {w}: {}", names.join(" ")).ok();
    }
    let body = json!({
        "orbit": o.to_string(),
        "h": h,
        "roots": v.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "graded": graded.iter().map(|(w, r)| json!({ "weight": w, "roots": r.iter().map(ToString::to_string).collect::<Vec<_>>() })).collect::<Vec<_>>(),
    });
    Ok(Report::new("orbits vorbit", Some(n), body, text))
}

pub fn orbits_stab_type(m: usize, o: usize, e: usize) -> Result<Report, CliError> {
    let factors = stabilizer_type(m, o, e).map_err(|err| CliError::Usage(err.to_string()))?;
    let rendered = render_stabilizer(&factors);
    Ok(Report::new(
        "orbits stab-type",
        None,
        json!({ "m": m, "o": o, "e": e, "type": rendered, "factors": factors.iter().map(ToString::to_string).collect::<Vec<_>>() }),
        format!("{rendered}\n"),
    ))
}
