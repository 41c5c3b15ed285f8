//! Run configuration: flags override the optional key=value file, which
//! overrides the built-in defaults.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use gspin_cover_core::localfield::{LocalField, Mu4};
use serde_json::{json, Value};

use crate::args::{Format, GlobalArgs};
use crate::error::CliError;

pub const DEFAULT_P: u64 = 3;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub field: LocalField,
    pub n: Option<usize>,
    pub format: Format,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn rank_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    pub fn field_json(&self) -> Value {
        match self.field.p() {
            Some(p) => json!({
                "p": p,
                "nonresidue": self.field.nonresidue(),
                "gamma_pi": self.field.gamma_pi().to_string(),
            }),
            None => json!({ "p": "real" }),
        }
    }
}

const KEYS: [&str; 6] = ["p", "n", "nonresidue", "gamma_pi", "format", "seed"];

/// Reads `key = value` lines; `#` starts a comment. `gamma-pi` is accepted
/// as a spelling of `gamma_pi`.
pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("config line {}: expected key=value", lineno + 1))
        })?;
        let key = k.trim().replace('-', "_");
        if !KEYS.contains(&key.as_str()) {
            return Err(CliError::Usage(format!(
                "config line {}: unknown key `{}`",
                lineno + 1,
                k.trim()
            )));
        }
        out.insert(key, v.trim().trim_matches('"').to_string());
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse()
        .map_err(|_| CliError::Usage(format!("invalid value `{v}` for {key}")))
}

pub fn resolve(global: &GlobalArgs) -> Result<RunConfig, CliError> {
    let file = match &global.config {
        Some(path) => read_config_file(path)?,
        None => BTreeMap::new(),
    };
    let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).cloned());

    let p = pick(global.p.clone(), "p");
    let nonresidue = match pick(global.nonresidue.map(|x| x.to_string()), "nonresidue") {
        Some(v) => Some(parse_num::<u64>("nonresidue", &v)?),
        None => None,
    };
    let gamma_pi = match pick(global.gamma_pi.clone(), "gamma_pi") {
        Some(v) => Some(
            v.parse::<Mu4>()
                .map_err(|e| CliError::Usage(e.to_string()))?,
        ),
        None => None,
    };
    let field = match p.as_deref().map(str::trim) {
        Some(s) if s.eq_ignore_ascii_case("real") => {
            if nonresidue.is_some() || gamma_pi.is_some() {
                return Err(CliError::Usage(
                    "nonresidue and gamma-pi do not apply over the reals".into(),
                ));
            }
            LocalField::real()
        }
        other => {
            let p = match other {
                Some(s) => parse_num::<u64>("p", s)?,
                None => DEFAULT_P,
            };
            LocalField::p_adic(p, nonresidue, gamma_pi)
                .map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    let n = match pick(global.n.map(|x| x.to_string()), "n") {
        Some(v) => Some(parse_num::<usize>("n", &v)?),
        None => None,
    };
    let format = match global.format {
        Some(f) => f,
        None => match file.get("format").map(|s| s.to_ascii_lowercase()) {
            Some(s) if s == "json" => Format::Json,
            Some(s) if s == "text" => Format::Text,
            Some(s) => return Err(CliError::Usage(format!("invalid format `{s}`"))),
            None => Format::Text,
        },
    };
    let seed = match pick(global.seed.map(|x| x.to_string()), "seed") {
        Some(v) => Some(parse_num::<u64>("seed", &v)?),
        None => None,
    };
    Ok(RunConfig {
        field,
        n,
        format,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines() {
        let m = parse_config("# defaults\np = 5\ngamma-pi = -1 # comment\n\nn=2\n").unwrap();
        assert_eq!(m["p"], "5");
        assert_eq!(m["gamma_pi"], "-1");
        assert_eq!(m["n"], "2");
        assert!(parse_config("q = 3").is_err());
        assert!(parse_config("p 3").is_err());
    }

    #[test]
    fn flags_override_defaults() {
        let g = GlobalArgs {
            p: Some("5".into()),
            gamma_pi: Some("-1".into()),
            ..Default::default()
        };
        let c = resolve(&g).unwrap();
        assert_eq!(c.field.p(), Some(5));
        assert_eq!(c.field.gamma_pi(), Mu4::MINUS_ONE);
        assert!(resolve(&GlobalArgs {
            p: Some("5".into()),
            gamma_pi: Some("i".into()),
            ..Default::default()
        })
        .is_err());
        assert!(resolve(&GlobalArgs::default()).unwrap().field.p() == Some(DEFAULT_P));
    }
}
