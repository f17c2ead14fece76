//! Rendering of JSON reports. The JSON value is the source of truth; the table view is
//! formatted from it, printing `{"num", "den"}` objects as `p/q` with a `≈` column.

use serde_json::{Map, Value};

use gyro_core::rational::{approx, RationalJson};
use gyro_core::{Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

pub fn rational(r: &Rational) -> Result<Value> {
    let json = RationalJson::from_rational(r)?;
    Ok(serde_json::json!({ "num": json.num, "den": json.den }))
}

fn as_rational(v: &Value) -> Option<Rational> {
    let obj = v.as_object()?;
    if obj.len() != 2 {
        return None;
    }
    let json: RationalJson = serde_json::from_value(v.clone()).ok()?;
    json.to_rational("value").ok()
}

/// Inline rendering for values inside arrays: rationals as `p/q`, no quotes.
fn compact(v: &Value) -> String {
    if let Some(r) = as_rational(v) {
        return gyro_core::rational::fmt(&r);
    }
    match v {
        Value::Array(items) => {
            format!(
                "[{}]",
                items.iter().map(compact).collect::<Vec<_>>().join(", ")
            )
        }
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, v)| format!("{k}: {}", compact(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => scalar(other),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn rows(prefix: &str, v: &Value, out: &mut Vec<(String, String, String)>) {
    if let Some(r) = as_rational(v) {
        let approx = if r.is_integer() {
            String::new()
        } else {
            format!("≈ {:.6}", approx(&r))
        };
        out.push((prefix.to_string(), gyro_core::rational::fmt(&r), approx));
        return;
    }
    match v {
        Value::Object(map) => object_rows(prefix, map, out),
        Value::Array(_) => out.push((prefix.to_string(), compact(v), String::new())),
        _ => out.push((prefix.to_string(), scalar(v), String::new())),
    }
}

fn object_rows(prefix: &str, map: &Map<String, Value>, out: &mut Vec<(String, String, String)>) {
    for (k, v) in map {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        rows(&key, v, out);
    }
}

/// `key  value  ≈ approx` lines, nested objects flattened with dotted keys.
pub fn table(v: &Value) -> String {
    let mut out = Vec::new();
    rows("", v, &mut out);
    let width = out.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let value_width = out
        .iter()
        .filter(|r| !r.2.is_empty())
        .map(|r| r.1.chars().count())
        .max()
        .unwrap_or(0);
    let mut text = String::new();
    for (k, val, approx) in out {
        let pad = width - k.chars().count();
        if approx.is_empty() {
            text.push_str(&format!("{k}{}  {val}\n", " ".repeat(pad)));
        } else {
            let vpad = value_width.saturating_sub(val.chars().count());
            text.push_str(&format!(
                "{k}{}  {val}{}  {approx}\n",
                " ".repeat(pad),
                " ".repeat(vpad)
            ));
        }
    }
    text
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(v).expect("serialisable")
        ),
        Format::Table => table(v),
    }
}
