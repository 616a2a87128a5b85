//! JSON report documents written by the command-line tool.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{BiPoly, QSeries, Rational, UniPoly};
use crate::check::Check;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub command: String,
    /// SHA-256 of the input bytes, hex encoded.
    pub input_digest: String,
    pub results: Value,
    pub checks: Vec<Check>,
    /// Microseconds per phase; the only nondeterministic field.
    pub timings_us: BTreeMap<String, u64>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, input: &[u8]) -> Self {
        ReportDocument {
            command: command.into(),
            input_digest: digest(input),
            results: Value::Object(Default::default()),
            checks: Vec::new(),
            timings_us: BTreeMap::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(Check::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Always `p/q`, including `q = 1`.
pub fn rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(rational(x))).collect())
}

/// Integers beyond 64 bits become decimal strings.
pub fn integer(x: &BigInt) -> Value {
    i64::try_from(x).map(Value::from).unwrap_or_else(|_| Value::String(x.to_string()))
}

pub fn uni_poly(p: &UniPoly) -> Value {
    json!(p.coeffs())
}

/// Row `i` holds the coefficients of `x^i y^j` for `j = 0, 1, ...`.
pub fn bi_poly(p: &BiPoly) -> Value {
    json!(p.coeffs())
}

/// `[exponent, coefficient]` pairs in increasing exponent order; integral
/// exponents are numbers, others `p/q` strings.
pub fn q_series(s: &QSeries) -> Value {
    Value::Array(
        s.terms()
            .map(|(e, c)| {
                let exp = if e.is_integer() {
                    integer(&e.to_integer())
                } else {
                    Value::String(rational(e))
                };
                json!([exp, c])
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    #[test]
    fn rational_strings() {
        assert_eq!(rational(&q(-3, 6)), "-1/2");
        assert_eq!(rational(&qi(4)), "4/1");
    }

    #[test]
    fn series_pairs_sorted() {
        let mut s = QSeries::zero(12);
        s.add_term(qi(12), 2);
        s.add_term(qi(0), 1);
        s.add_term(qi(3), 2);
        assert_eq!(q_series(&s), json!([[0, 1], [3, 2], [12, 2]]));
        let mut t = QSeries::zero(4);
        t.add_term(q(1, 4), 1);
        assert_eq!(q_series(&t), json!([["1/4", 1]]));
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn field_order_is_fixed() {
        let doc = ReportDocument::new("poincare", b"");
        let text = doc.to_json();
        let order: Vec<usize> = ["command", "input_digest", "results", "checks", "timings_us"]
            .iter()
            .map(|k| text.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
    }
}
