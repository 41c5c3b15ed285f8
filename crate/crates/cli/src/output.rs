use gspin_cover_core::laurent::{LaurentPoly, LaurentRational};
use serde_json::{json, Value};

use crate::args::Format;
use crate::config::RunConfig;

pub const SCHEMA: &str = "gspin-cover-kit/1";

/// Result of one command: a JSON body, its text rendering and whether a
/// verification failed.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub n: Option<usize>,
    pub body: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    pub fn new(command: &'static str, n: Option<usize>, body: Value, text: String) -> Self {
        Report {
            command,
            n,
            body,
            text,
            ok: true,
        }
    }

    pub fn failed(mut self) -> Self {
        self.ok = false;
        self
    }

    pub fn to_json(&self, cfg: &RunConfig) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "field": cfg.field_json(),
            "n": self.n,
            "ok": self.ok,
            "result": self.body,
        })
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        match cfg.format {
            Format::Json => {
                serde_json::to_string_pretty(&self.to_json(cfg)).expect("values serialize")
            }
            Format::Text => self.text.trim_end().to_string(),
        }
    }
}

pub fn error_json(message: &str, exit_code: i32) -> String {
    serde_json::to_string_pretty(&json!({
        "schema": SCHEMA,
        "error": message,
        "exit_code": exit_code,
    }))
    .expect("values serialize")
}

/// `[[coeff, exponent], ...]`, highest exponent first. Coefficients that
/// do not fit in an `i64` are written as decimal strings.
pub fn poly_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(c, e)| {
                let c = match i64::try_from(c) {
                    Ok(v) => json!(v),
                    Err(_) => json!(c.to_string()),
                };
                json!([c, e])
            })
            .collect(),
    )
}

pub fn rational_json(r: &LaurentRational) -> Value {
    json!({ "num": poly_json(r.num()), "den": poly_json(r.den()) })
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_shape() {
        let r = LaurentRational::new(LaurentPoly::one_minus(1, -2), LaurentPoly::one_minus(1, -1))
            .unwrap();
        assert_eq!(
            rational_json(&r),
            json!({"num": [[1, 0], [1, -1]], "den": [[1, 0]]})
        );
    }
}
