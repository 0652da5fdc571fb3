//! Dense text format: one row per line, entries separated by whitespace or
//! commas, each an integer or `p/q`. Blank lines and `#` comments are
//! ignored. The JSON mirror is an array of rows of entry strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::{Rational, RationalMatrix};
use crate::error::{Error, Result};

pub fn parse_rational(token: &str) -> Option<Rational> {
    let token = token.trim();
    match token.split_once('/') {
        None => BigInt::from_str(token).ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if !token.is_empty() {
            out.push(parse_rational(token).ok_or_else(|| Error::parse(offset, format!("bad entry {token:?}")))?);
        }
        offset += token.len() + 1;
    }
    if out.is_empty() {
        return Err(Error::parse(0, "empty vector"));
    }
    Ok(out)
}

/// Parses the text format. Errors report the byte offset of the line.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        if !body.trim().is_empty() {
            let row = parse_vector(body).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::parse(offset + o, message),
                e => e,
            })?;
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(Error::parse(
                        offset,
                        format!("row has {} entries, expected {first}", row.len()),
                    ));
                }
            }
            rows.push(row);
        }
        offset += line.len();
    }
    if rows.is_empty() {
        return Err(Error::parse(0, "no matrix rows"));
    }
    RationalMatrix::from_rows(rows)
}

pub fn format_matrix(a: &RationalMatrix) -> String {
    let cells: Vec<Vec<String>> = a
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_to_json(a: &RationalMatrix) -> serde_json::Value {
    serde_json::Value::Array(
        a.to_rows()
            .iter()
            .map(|r| serde_json::Value::Array(r.iter().map(|x| format_rational(x).into()).collect()))
            .collect(),
    )
}

pub fn vector_to_json(x: &[Rational]) -> serde_json::Value {
    serde_json::Value::Array(x.iter().map(|v| format_rational(v).into()).collect())
}

/// Accepts rows whose entries are JSON integers or `p/q` strings.
pub fn matrix_from_json(value: &serde_json::Value) -> Result<RationalMatrix> {
    let bad = || Error::parse(0, "expected an array of rows");
    let rows = value.as_array().ok_or_else(bad)?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::new();
        for e in row.as_array().ok_or_else(bad)? {
            let v = match e {
                serde_json::Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
                serde_json::Value::String(s) => parse_rational(s),
                _ => None,
            };
            r.push(v.ok_or_else(|| Error::parse(0, format!("bad entry {e}")))?);
        }
        out.push(r);
    }
    RationalMatrix::from_rows(out)
}
