//! Text format for complex vectors and matrices.
//!
//! A document is one JSON object:
//!
//! ```text
//! {"kind": "vector", "n": 2, "data": [[1, 0], [0, 1]]}
//! {"kind": "matrix", "n": 2, "data": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}
//! ```
//!
//! Complex entries are `[re, im]` pairs; a plain number is read as a real
//! entry. Numbers are written in shortest round-trip form, so a write/parse
//! cycle reproduces every finite double bit for bit.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMat, ComplexVec, C64};

#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Vector(ComplexVec),
    Matrix(ComplexMat),
}

impl Document {
    pub fn n(&self) -> usize {
        match self {
            Document::Vector(v) => v.len(),
            Document::Matrix(m) => m.n(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Vector(_) => "vector",
            Document::Matrix(_) => "matrix",
        }
    }

    pub fn into_vector(self) -> Result<ComplexVec> {
        match self {
            Document::Vector(v) => Ok(v),
            Document::Matrix(_) => Err(Error::Validation("expected a vector document".into())),
        }
    }

    pub fn into_matrix(self) -> Result<ComplexMat> {
        match self {
            Document::Matrix(m) => Ok(m),
            Document::Vector(_) => Err(Error::Validation("expected a matrix document".into())),
        }
    }
}

impl From<ComplexVec> for Document {
    fn from(v: ComplexVec) -> Self {
        Document::Vector(v)
    }
}

impl From<ComplexMat> for Document {
    fn from(m: ComplexMat) -> Self {
        Document::Matrix(m)
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

fn number(v: &Value, at: &str) -> Result<f64> {
    let x = v
        .as_f64()
        .ok_or_else(|| invalid(format!("{at}: expected a number")))?;
    if !x.is_finite() {
        return Err(invalid(format!("{at}: non-finite value")));
    }
    Ok(x)
}

fn entry(v: &Value, at: &str) -> Result<C64> {
    match v {
        Value::Number(_) => Ok(C64::new(number(v, at)?, 0.0)),
        Value::Array(pair) if pair.len() == 2 => {
            Ok(C64::new(number(&pair[0], at)?, number(&pair[1], at)?))
        }
        _ => Err(invalid(format!("{at}: expected a number or [re, im] pair"))),
    }
}

fn array<'a>(v: &'a Value, len: usize, at: &str) -> Result<&'a Vec<Value>> {
    let items = v
        .as_array()
        .ok_or_else(|| invalid(format!("{at}: expected an array")))?;
    if items.len() != len {
        return Err(invalid(format!(
            "{at}: expected {len} entries, found {}",
            items.len()
        )));
    }
    Ok(items)
}

fn document_from_value(v: &Value) -> Result<Document> {
    let obj = v
        .as_object()
        .ok_or_else(|| invalid("document must be an object"))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| invalid("missing string field \"kind\""))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid("missing non-negative integer field \"n\""))? as usize;
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let data = obj
        .get("data")
        .ok_or_else(|| invalid("missing field \"data\""))?;
    match kind {
        "vector" => {
            let items = array(data, n, "data")?;
            let values = items
                .iter()
                .enumerate()
                .map(|(i, e)| entry(e, &format!("data[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::Vector(ComplexVec::new(values)?))
        }
        "matrix" => {
            let rows = array(data, n, "data")?;
            let mut values = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                for (j, e) in array(row, n, &format!("data[{i}]"))?.iter().enumerate() {
                    values.push(entry(e, &format!("data[{i}][{j}]"))?);
                }
            }
            Ok(Document::Matrix(ComplexMat::new(n, values)?))
        }
        other => Err(invalid(format!("unknown kind {other:?}"))),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    document_from_value(&parse_json(text)?)
}

/// Parses a JSON array of documents.
pub fn parse_document_list(text: &str) -> Result<Vec<Document>> {
    match parse_json(text)? {
        Value::Array(items) => items.iter().map(document_from_value).collect(),
        _ => Err(invalid("expected an array of documents")),
    }
}

fn fmt_number(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 && !(x == 0.0 && x.is_sign_negative()) {
        format!("{}", x as i64)
    } else {
        format!("{x:?}")
    }
}

/// How entries are rendered.
#[derive(Clone, Copy)]
enum Style {
    Complex,
    /// Plain reals; imaginary parts up to `tol` are dropped.
    Real(f64),
}

fn fmt_entry(z: C64, style: Style) -> Result<String> {
    match style {
        Style::Complex => Ok(format!("[{}, {}]", fmt_number(z.re), fmt_number(z.im))),
        Style::Real(tol) if z.im.abs() <= tol => Ok(fmt_number(z.re)),
        Style::Real(tol) => Err(invalid(format!(
            "entry {z} has imaginary part above {tol:e}; cannot write as real"
        ))),
    }
}

fn fmt_row(row: &[C64], style: Style) -> Result<String> {
    let parts = row
        .iter()
        .map(|&z| fmt_entry(z, style))
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("[{}]", parts.join(", ")))
}

fn render(d: &Document, style: Style) -> Result<String> {
    let head = format!("{{\"kind\": \"{}\", \"n\": {}, \"data\": ", d.kind(), d.n());
    match d {
        Document::Vector(v) => Ok(format!("{head}{}}}", fmt_row(v.as_slice(), style)?)),
        Document::Matrix(m) => {
            let rows = m
                .rows()
                .map(|r| fmt_row(r, style).map(|s| format!("  {s}")))
                .collect::<Result<Vec<_>>>()?;
            Ok(format!("{head}[\n{}\n]}}", rows.join(",\n")))
        }
    }
}

pub fn write_document(d: &Document) -> String {
    render(d, Style::Complex).expect("complex style never fails")
}

/// Writes real shorthand, failing if any imaginary part exceeds `tol`.
pub fn write_document_real(d: &Document, tol: f64) -> Result<String> {
    render(d, Style::Real(tol))
}

pub fn write_document_list(docs: &[Document], real_tol: Option<f64>) -> Result<String> {
    let style = real_tol.map_or(Style::Complex, Style::Real);
    let parts = docs
        .iter()
        .map(|d| render(d, style))
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("[\n{}\n]", parts.join(",\n")))
}
