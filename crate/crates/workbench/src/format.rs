//! The ideal file format.
//!
//! ```text
//! # the exceptional algebra
//! ring n=3 field=q vars=x,y,z
//! x^2
//! x*y
//! y^2 + x*z
//! y*z
//! ```
//!
//! The header comes first. `vars` is optional and defaults to `x1..xn`.
//! Every further non-blank line holds one polynomial; `#` starts a comment.

use std::fmt;
use std::sync::Arc;

use koszul_core::polyring::{parse_polynomial, Ideal, Polynomial, Ring};
use koszul_core::scalars::{Field, FieldElem};
use koszul_core::Error as CoreError;
use num_rational::BigRational;

/// A parse failure with 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

fn at(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        msg: msg.into(),
    }
}

#[derive(Clone, Debug)]
pub struct RingDescriptor {
    pub n: usize,
    pub field: Field,
    pub vars: Vec<String>,
}

impl RingDescriptor {
    pub fn ring(&self) -> Arc<Ring> {
        Ring::with_names(self.vars.clone(), self.field).expect("validated names")
    }
}

/// The part of a line before any `#`.
fn content(raw: &str) -> &str {
    match raw.find('#') {
        Some(i) => &raw[..i],
        None => raw,
    }
}

fn column_of(raw: &str, byte: usize) -> usize {
    raw[..byte].chars().count() + 1
}

fn parse_header(raw: &str, line: usize, field_override: Option<Field>) -> Result<RingDescriptor, ParseError> {
    let text = content(raw);
    let mut words = text.split_whitespace();
    let first = words.next().unwrap_or_default();
    if first != "ring" {
        let col = text.find(first).map_or(1, |b| column_of(raw, b));
        return Err(at(line, col, "expected header `ring n=<int> field=<q|fp:p> [vars=...]`"));
    }
    let mut n = None;
    let mut field = None;
    let mut vars = None;
    let mut search = 0;
    for word in words {
        let byte = search + text[search..].find(word).expect("word comes from text");
        search = byte + word.len();
        let col = column_of(raw, byte);
        let Some((key, value)) = word.split_once('=') else {
            return Err(at(line, col, format!("expected key=value, found `{word}`")));
        };
        let value_col = col + key.chars().count() + 1;
        match key {
            "n" => {
                let v: usize = value
                    .parse()
                    .map_err(|_| at(line, value_col, format!("`{value}` is not a variable count")))?;
                if v == 0 {
                    return Err(at(line, value_col, "a ring needs at least one variable"));
                }
                n = Some(v);
            }
            "field" => {
                field = Some(
                    value
                        .parse::<Field>()
                        .map_err(|e| at(line, value_col, format!("bad field `{value}`: {e}")))?,
                );
            }
            "vars" => {
                let names: Vec<String> = value.split(',').map(|s| s.trim().to_string()).collect();
                if let Some(bad) = names.iter().find(|s| !valid_name(s)) {
                    return Err(at(line, value_col, format!("bad variable name `{bad}`")));
                }
                vars = Some((names, value_col));
            }
            _ => return Err(at(line, col, format!("unknown header key `{key}`"))),
        }
    }
    let end = raw.chars().count() + 1;
    let n = n.ok_or_else(|| at(line, end, "header is missing `n=`"))?;
    let field = field.ok_or_else(|| at(line, end, "header is missing `field=`"))?;
    let field = field_override.unwrap_or(field);
    let vars = match vars {
        Some((names, col)) => {
            if names.len() != n {
                return Err(at(line, col, format!("{} names given for n={n}", names.len())));
            }
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(at(line, col, "variable names repeat"));
            }
            names
        }
        None => (1..=n).map(|i| format!("x{i}")).collect(),
    };
    Ok(RingDescriptor { n, field, vars })
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Parses an ideal file. `field_override` replaces the declared field.
pub fn parse_ideal_file_with(text: &str, field_override: Option<Field>) -> Result<(RingDescriptor, Ideal), ParseError> {
    let (desc, polys) = parse_polynomial_file(text, field_override)?;
    let ring = polys.first().map_or_else(|| desc.ring(), |p| p.ring().clone());
    let ideal = Ideal::new(&ring, polys).map_err(|e| at(0, 0, e.to_string()))?;
    Ok((desc, ideal))
}

pub fn parse_ideal_file(text: &str) -> Result<(RingDescriptor, Ideal), ParseError> {
    parse_ideal_file_with(text, None)
}

/// Header plus polynomials, in order and without dropping zeros.
pub fn parse_polynomial_file(
    text: &str,
    field_override: Option<Field>,
) -> Result<(RingDescriptor, Vec<Polynomial>), ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (desc, ring) = loop {
        let Some((line, raw)) = lines.next() else {
            return Err(at(text.lines().count().max(1), 1, "missing `ring` header"));
        };
        if content(raw).trim().is_empty() {
            continue;
        }
        let desc = parse_header(raw, line, field_override)?;
        let ring = desc.ring();
        break (desc, ring);
    };
    let mut polys = Vec::new();
    for (line, raw) in lines {
        let body = content(raw);
        if body.trim().is_empty() {
            continue;
        }
        if body.chars().all(|c| c.is_whitespace() || c == '+' || c == '-') {
            let col = body.find(|c: char| !c.is_whitespace()).map_or(1, |b| column_of(raw, b));
            return Err(at(line, col, "empty polynomial"));
        }
        let p = parse_polynomial(&ring, body).map_err(|e| match e {
            CoreError::Parse { col, msg } => at(line, col, msg),
            other => at(line, 1, other.to_string()),
        })?;
        polys.push(p);
    }
    Ok((desc, polys))
}

/// The file holding a single form.
pub fn parse_form_file(text: &str, field_override: Option<Field>) -> Result<Polynomial, ParseError> {
    let (_, polys) = parse_polynomial_file(text, field_override)?;
    match polys.as_slice() {
        [f] => Ok(f.clone()),
        _ => Err(at(1, 1, format!("expected exactly one polynomial, found {}", polys.len()))),
    }
}

/// One point per line, coordinates separated by commas or whitespace.
pub fn parse_points(text: &str, field: Field) -> Result<Vec<Vec<FieldElem>>, ParseError> {
    let mut out: Vec<Vec<FieldElem>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = content(raw);
        if body.trim().is_empty() {
            continue;
        }
        let mut point = Vec::new();
        let mut search = 0;
        for word in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|w| !w.is_empty()) {
            let byte = search + body[search..].find(word).expect("word comes from body");
            search = byte + word.len();
            let col = column_of(raw, byte);
            let v: BigRational = word
                .parse()
                .map_err(|_| at(line, col, format!("`{word}` is not a rational number")))?;
            point.push(field.from_rational(&v).map_err(|e| at(line, col, e.to_string()))?);
        }
        if let Some(first) = out.first() {
            if first.len() != point.len() {
                return Err(at(line, 1, format!("expected {} coordinates", first.len())));
            }
        }
        out.push(point);
    }
    if out.is_empty() {
        return Err(at(1, 1, "no points given"));
    }
    Ok(out)
}

/// Writes an ideal back in the file format.
pub fn render_ideal(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut out = format!("ring n={} field={} vars={}\n", ring.n(), ring.field(), ring.names().join(","));
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
