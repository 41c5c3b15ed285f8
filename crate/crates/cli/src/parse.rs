//! Parsing of CLI tokens into library values.

use gspin_cover_core::localfield::{
    CharacterValue, FieldElement, LocalField, Mu4, SquareClassCharacter,
};
use gspin_cover_core::orbits::{orbit_o0, orbit_o1, Partition};
use gspin_cover_core::rootdata::{AlphaTorus, ConvenientTorus, WeylElement};

use crate::args::{CharacterArgs, Coords};
use crate::error::CliError;

/// `v:k` with `k` the 1-based unit class, or a plain nonzero integer.
pub fn parse_element(field: &LocalField, token: &str) -> Result<FieldElement, CliError> {
    let tok = token.trim();
    let bad = |why: &str| CliError::Usage(format!("bad coordinate `{tok}`: {why}"));
    let Some((v, k)) = tok.split_once(':') else {
        let x: i64 = tok.parse().map_err(|_| bad("expected v:k or an integer"))?;
        return field
            .element_from_integer(x)
            .map_err(|e| bad(&e.to_string()));
    };
    let v: i64 = v
        .trim()
        .parse()
        .map_err(|_| bad("valuation is not an integer"))?;
    let k: u8 = k
        .trim()
        .parse()
        .map_err(|_| bad("class index is not an integer"))?;
    let nonsquare = match k {
        1 => false,
        2 => true,
        _ => {
            return Err(bad(
                "class index must be 1 (square unit) or 2 (non-square unit)",
            ))
        }
    };
    let x = FieldElement::new(v, nonsquare);
    field.validate(x).map_err(|e| bad(&e.to_string()))?;
    Ok(x)
}

/// Splits every argument on commas and whitespace as well.
fn flatten(tokens: &[String]) -> Vec<&str> {
    tokens
        .iter()
        .flat_map(|t| t.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .collect()
}

pub fn parse_elements(
    field: &LocalField,
    tokens: &[String],
) -> Result<Vec<FieldElement>, CliError> {
    flatten(tokens)
        .into_iter()
        .map(|t| parse_element(field, t))
        .collect()
}

/// A torus element of rank `n` (`n + 1` coordinates).
pub fn parse_torus(
    field: &LocalField,
    n: usize,
    tokens: &[String],
    coords: Coords,
) -> Result<AlphaTorus, CliError> {
    let xs = parse_elements(field, tokens)?;
    if xs.len() != n + 1 {
        return Err(CliError::Usage(format!(
            "expected {} coordinates for n = {n}, got {}",
            n + 1,
            xs.len()
        )));
    }
    Ok(match coords {
        Coords::Alpha => AlphaTorus::new(xs),
        Coords::Convenient => {
            let mut a = xs;
            let t1 = a.pop().expect("n+1 coordinates");
            ConvenientTorus::new(a, t1).to_alpha()
        }
    })
}

/// `w0`, `id`, or simple reflections `s2 s3 ..` (also `2,3`).
pub fn parse_weyl(n: usize, tokens: &[String]) -> Result<WeylElement, CliError> {
    let parts = flatten(tokens);
    match parts.as_slice() {
        [w] if w.eq_ignore_ascii_case("w0") => return Ok(WeylElement::longest(n)),
        [w] if ["id", "e", "1"].contains(&w.to_ascii_lowercase().as_str()) => {
            return Ok(WeylElement::identity(n))
        }
        _ => {}
    }
    let mut word = Vec::with_capacity(parts.len());
    for p in parts {
        let digits = p.strip_prefix('s').unwrap_or(p);
        let k: usize = digits.parse().map_err(|_| {
            CliError::Usage(format!(
                "bad Weyl letter `{p}`; use w0, id or s2..s{}",
                n + 1
            ))
        })?;
        word.push(k);
    }
    WeylElement::from_word(n, &word).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_valuations(s: &str) -> Result<Vec<i64>, CliError> {
    let vals: Result<Vec<i64>, _> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect();
    match vals {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(CliError::Usage(format!("bad valuation list `{s}`"))),
    }
}

pub fn parse_orbit(n: usize, s: &str) -> Result<Partition, CliError> {
    let t = s.trim();
    let o = if t.eq_ignore_ascii_case("o0") {
        orbit_o0(n)?
    } else if t.eq_ignore_ascii_case("o1") {
        orbit_o1(n)?
    } else {
        t.parse::<Partition>()?
    };
    if !o.is_orthogonal() || o.size() != 2 * n + 1 {
        return Err(CliError::Usage(format!(
            "{o} is not an orthogonal partition of {}",
            2 * n + 1
        )));
    }
    Ok(o)
}

/// `ζ`, `z`, `ζz` or `ζ*z` with `ζ` a fourth root of unity.
pub fn parse_character_value(s: &str) -> Result<CharacterValue, CliError> {
    let t = s.trim();
    let bad = || CliError::Usage(format!("bad character value `{s}`"));
    let (root, has_z) = match t.strip_suffix('z') {
        Some(r) => (r.trim_end_matches('*'), true),
        None => (t, false),
    };
    let zeta = match root {
        "" | "+" => Mu4::ONE,
        "-" => Mu4::MINUS_ONE,
        r => r.parse::<Mu4>().map_err(|_| bad())?,
    };
    let base = if has_z {
        CharacterValue::z_power(1)
    } else {
        CharacterValue::one()
    };
    Ok(base * zeta)
}

pub fn parse_eta(args: &CharacterArgs) -> Result<SquareClassCharacter, CliError> {
    let at_pi = parse_character_value(&args.eta_pi)?;
    let at_u: Mu4 = args
        .eta_u
        .parse()
        .map_err(|e: gspin_cover_core::Error| CliError::Usage(e.to_string()))?;
    SquareClassCharacter::new(at_pi, at_u).map_err(|e| CliError::Usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> LocalField {
        LocalField::p_adic(3, None, None).unwrap()
    }

    #[test]
    fn elements() {
        let f = f3();
        assert_eq!(
            parse_element(&f, "1:1").unwrap(),
            FieldElement::uniformizer()
        );
        assert_eq!(
            parse_element(&f, "-2:2").unwrap(),
            FieldElement::new(-2, true)
        );
        assert_eq!(parse_element(&f, "6").unwrap(), FieldElement::new(1, true));
        assert!(parse_element(&f, "1:3").is_err());
        assert!(parse_element(&f, "x:1").is_err());
        assert!(parse_element(&f, "0").is_err());
        assert!(parse_element(&LocalField::real(), "1:1").is_err());
        assert_eq!(
            parse_element(&LocalField::real(), "0:2").unwrap(),
            FieldElement::nonsquare_unit()
        );
    }

    #[test]
    fn torus_shapes() {
        let f = f3();
        let t = parse_torus(&f, 1, &["1:1".into(), "0:1".into()], Coords::Alpha).unwrap();
        assert_eq!(
            t.coords(),
            &[FieldElement::uniformizer(), FieldElement::one()]
        );
        assert!(parse_torus(&f, 2, &["1:1,0:1".into()], Coords::Alpha).is_err());
        let c = parse_torus(&f, 1, &["1:1 0:1".into()], Coords::Convenient).unwrap();
        assert_eq!(c.to_convenient().a(), &[FieldElement::uniformizer()]);
    }

    #[test]
    fn weyl_words() {
        assert_eq!(
            parse_weyl(2, &["w0".into()]).unwrap(),
            WeylElement::longest(2)
        );
        assert!(parse_weyl(2, &["id".into()]).unwrap().is_identity());
        assert_eq!(
            parse_weyl(2, &["s2".into(), "s3".into()]).unwrap().length(),
            2
        );
        assert_eq!(parse_weyl(2, &["2,3".into()]).unwrap().length(), 2);
        assert!(parse_weyl(2, &["s5".into()]).is_err());
        assert!(parse_weyl(2, &["t2".into()]).is_err());
    }

    #[test]
    fn character_values() {
        assert_eq!(
            parse_character_value("z").unwrap(),
            CharacterValue::z_power(1)
        );
        assert_eq!(
            parse_character_value("-z").unwrap(),
            CharacterValue::z_power(1) * Mu4::MINUS_ONE
        );
        assert_eq!(
            parse_character_value("i*z").unwrap(),
            CharacterValue::z_power(1) * Mu4::I
        );
        assert_eq!(
            parse_character_value("-1").unwrap(),
            CharacterValue::one() * Mu4::MINUS_ONE
        );
        assert!(parse_character_value("w").is_err());
    }

    #[test]
    fn orbits() {
        assert_eq!(parse_orbit(3, "O1").unwrap().to_string(), "3 1^4");
        assert!(parse_orbit(2, "2 1 1 1").is_err());
        assert!(parse_orbit(2, "3 1").is_err());
    }
}
