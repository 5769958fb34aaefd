//! Parsing of flag values and JSON payloads, and JSON rendering of matrices.

use finitary::cls::EnumBounds;
use finitary::matgeo::{parse_q, ClassicalMatrix, QMatrix, Q};
use finitary::verify::STANDARD_BOUNDS;
use finitary::weights::Series;
use serde_json::{json, Value};

/// `v=2,w=2,m=2,idx=3,exp=2,spin=1,top=0`; unspecified keys keep the standard bounds.
pub fn parse_bounds(text: &str) -> Result<EnumBounds, String> {
    let mut b = STANDARD_BOUNDS;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("bound `{part}` is not key=value"))?;
        let n: u32 = value.trim().parse().map_err(|_| format!("bound `{part}` needs a number"))?;
        match key.trim() {
            "v" => b.v = n,
            "w" => b.w = n,
            "m" => b.m = n,
            "idx" => b.max_index = n,
            "exp" => b.max_exp = n,
            "spin" => b.spin = n != 0,
            "top" => b.top = n != 0,
            other => return Err(format!("unknown bound `{other}`")),
        }
    }
    Ok(b)
}

pub fn bounds_json(b: &EnumBounds) -> Value {
    json!({
        "exp": b.max_exp,
        "idx": b.max_index,
        "m": b.m,
        "spin": b.spin,
        "top": b.top,
        "v": b.v,
        "w": b.w,
    })
}

/// Reads `@path` as a file, anything else verbatim.
pub fn read_arg(text: &str) -> Result<String, String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        None => Ok(text.to_string()),
    }
}

fn rational(v: &Value) -> Result<Q, String> {
    match v {
        Value::String(s) => parse_q(s).map_err(|e| e.to_string()),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().expect("checked").into())),
        other => Err(format!("entry {other} is not an integer or a \"p/q\" string")),
    }
}

pub fn vector(v: &Value) -> Result<Vec<Q>, String> {
    v.as_array()
        .ok_or_else(|| format!("expected an array, got {v}"))?
        .iter()
        .map(rational)
        .collect()
}

pub fn rows(v: &Value) -> Result<QMatrix, String> {
    let rows: Vec<Vec<Q>> = v
        .as_array()
        .ok_or_else(|| format!("expected an array of rows, got {v}"))?
        .iter()
        .map(vector)
        .collect::<Result<_, _>>()?;
    QMatrix::from_rows(rows).map_err(|e| e.to_string())
}

/// A matrix given either as an array of rows or as the object written by
/// [`matrix_json`]. `family` and `gram` override the payload; without a
/// Gram matrix the standard form is used.
pub fn matrix(text: &str, family: Option<Series>, gram: Option<&str>) -> Result<ClassicalMatrix, String> {
    let mut value: Value = serde_json::from_str(&read_arg(text)?).map_err(|e| format!("matrix JSON: {e}"))?;
    // accept command output that wraps a single payload, e.g. {"matrix": {...}, ...}
    if let Value::Object(map) = &value {
        if !map.contains_key("entries") {
            let nested: Vec<&Value> = map.values().filter(|v| v.get("entries").is_some()).collect();
            if let [inner] = nested[..] {
                value = inner.clone();
            }
        }
    }
    let (entries, payload_family, payload_gram) = match &value {
        Value::Object(map) => (
            map.get("entries").ok_or("matrix object needs `entries`")?.clone(),
            map.get("family").and_then(Value::as_str).map(crate::parse_series).transpose()?,
            map.get("gram").filter(|g| !g.is_null()).cloned(),
        ),
        _ => (value.clone(), None, None),
    };
    let series = family
        .or(payload_family)
        .ok_or("the matrix needs a family (--family or a `family` field)")?;
    let entries = rows(&entries)?;
    let gram = match gram {
        Some(g) => Some(rows(&serde_json::from_str(&read_arg(g)?).map_err(|e| format!("gram JSON: {e}"))?)?),
        None => payload_gram.as_ref().map(rows).transpose()?,
    };
    match gram {
        Some(g) => ClassicalMatrix::new(series, entries, Some(g)),
        None => ClassicalMatrix::standard(series, entries),
    }
    .map_err(|e| e.to_string())
}

pub fn basis(text: &str) -> Result<Vec<Vec<Q>>, String> {
    let value: Value = serde_json::from_str(&read_arg(text)?).map_err(|e| format!("basis JSON: {e}"))?;
    value
        .as_array()
        .ok_or("basis must be an array of vectors")?
        .iter()
        .map(vector)
        .collect()
}

pub fn rationals_list(text: &str) -> Result<Vec<Q>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_q(s).map_err(|e| e.to_string()))
        .collect()
}

pub fn q_json(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn rows_json(m: &QMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(q_json).collect())).collect())
}

/// Entries as `"p/q"` strings together with the form kind and Gram matrix.
pub fn matrix_json(x: &ClassicalMatrix) -> Value {
    let form = match x.series() {
        Series::Sl => "none",
        Series::So => "symmetric",
        Series::Sp => "skew",
    };
    json!({
        "entries": rows_json(x.entries()),
        "family": x.series().to_string(),
        "form": form,
        "gram": x.gram().map_or(Value::Null, rows_json),
    })
}
