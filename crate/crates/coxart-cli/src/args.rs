//! Reading operation arguments from JSON objects.

use anyhow::{anyhow, bail, Context, Result};
use coxart::burau::Rat;
use coxart::{CoxeterMatrix, Mask};
use serde_json::Value;
use std::sync::Arc;

pub fn opt<'a>(args: &'a Value, key: &str) -> Option<&'a Value> {
    args.get(key).filter(|v| !v.is_null())
}

fn req<'a>(args: &'a Value, key: &str) -> Result<&'a Value> {
    opt(args, key).ok_or_else(|| anyhow!("missing argument `{key}`"))
}

pub fn string(args: &Value, key: &str) -> Result<String> {
    match req(args, key)? {
        Value::String(s) => Ok(s.clone()),
        v => bail!("argument `{key}` must be a string, got {v}"),
    }
}

pub fn opt_string(args: &Value, key: &str) -> Result<Option<String>> {
    opt(args, key).map(|_| string(args, key)).transpose()
}

pub fn uint(args: &Value, key: &str) -> Result<u64> {
    match req(args, key)? {
        Value::Number(n) => n.as_u64().ok_or_else(|| anyhow!("argument `{key}` must be a nonnegative integer")),
        Value::String(s) => s.trim().parse().with_context(|| format!("argument `{key}`: `{s}` is not an integer")),
        v => bail!("argument `{key}` must be an integer, got {v}"),
    }
}

pub fn opt_uint(args: &Value, key: &str) -> Result<Option<u64>> {
    opt(args, key).map(|_| uint(args, key)).transpose()
}

pub fn flag(args: &Value, key: &str) -> Result<bool> {
    match opt(args, key) {
        None => Ok(false),
        Some(Value::Bool(b)) => Ok(*b),
        Some(v) => bail!("argument `{key}` must be a boolean, got {v}"),
    }
}

/// A type label such as `B3` or `I2(8)`, or a JSON matrix object.
pub fn matrix(args: &Value, key: &str) -> Result<Arc<CoxeterMatrix>> {
    match req(args, key)? {
        Value::String(s) => CoxeterMatrix::parse(s).map_err(|e| anyhow!("argument `{key}`: {e}")),
        v @ Value::Object(_) => CoxeterMatrix::from_json(v).map_err(|e| anyhow!("argument `{key}`: {e}")),
        v => bail!("argument `{key}` must be a type label, got {v}"),
    }
}

fn ints_of_str(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().with_context(|| format!("`{t}` is not an integer")))
        .collect()
}

fn ints(v: &Value, key: &str) -> Result<Vec<i64>> {
    match v {
        Value::String(s) => ints_of_str(s).with_context(|| format!("argument `{key}`")),
        Value::Array(a) => a
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| anyhow!("argument `{key}`: entries must be integers")))
            .collect(),
        Value::Number(n) => Ok(vec![n.as_i64().ok_or_else(|| anyhow!("argument `{key}` must be an integer"))?]),
        v => bail!("argument `{key}` must be a list of integers, got {v}"),
    }
}

/// Positive letters given as `"1 2 1"`, `"1,2,1"` or `[1,2,1]`.
pub fn word(args: &Value, key: &str) -> Result<Vec<usize>> {
    let v = opt(args, key).cloned().unwrap_or(Value::String(String::new()));
    ints(&v, key)?
        .into_iter()
        .map(|x| usize::try_from(x).ok().filter(|&x| x >= 1).ok_or_else(|| anyhow!("argument `{key}`: letters are >= 1")))
        .collect()
}

/// Signed letters; `-i` is the inverse of the `i`-th generator.
pub fn signed_word(args: &Value, key: &str) -> Result<Vec<i64>> {
    let v = opt(args, key).cloned().unwrap_or(Value::String(String::new()));
    let w = ints(&v, key)?;
    if w.contains(&0) {
        bail!("argument `{key}`: letter 0 is not a generator");
    }
    Ok(w)
}

pub fn set(args: &Value, key: &str) -> Result<Mask> {
    Ok(word(args, key)?.into_iter().collect())
}

pub fn opt_set(args: &Value, key: &str) -> Result<Option<Mask>> {
    opt(args, key).map(|_| set(args, key)).transpose()
}

/// A list of words: a JSON array of words or a string with words separated by `;`.
pub fn words(args: &Value, key: &str) -> Result<Vec<Vec<usize>>> {
    let items: Vec<Value> = match req(args, key)? {
        Value::String(s) => s.split(';').map(|t| Value::String(t.to_string())).collect(),
        Value::Array(a) => a.clone(),
        v => bail!("argument `{key}` must be a list of words, got {v}"),
    };
    items.iter().map(|w| word(&serde_json::json!({ "w": w }), "w").with_context(|| format!("argument `{key}`"))).collect()
}

pub fn rational(s: &str) -> Result<Rat> {
    s.trim().parse::<Rat>().map_err(|_| anyhow!("`{s}` is not a rational number"))
}

/// Rationals given as `"2,3"`, `["2","3/5"]` or `[2,3]`.
pub fn rationals(args: &Value, key: &str) -> Result<Option<Vec<Rat>>> {
    let Some(v) = opt(args, key) else { return Ok(None) };
    let parts: Vec<String> = match v {
        Value::String(s) => s.split(',').map(str::to_string).filter(|t| !t.trim().is_empty()).collect(),
        Value::Array(a) => a.iter().map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string)).collect(),
        Value::Number(n) => vec![n.to_string()],
        v => bail!("argument `{key}` must be a list of rationals, got {v}"),
    };
    parts.iter().map(|p| rational(p)).collect::<Result<Vec<_>>>().map(Some)
}

pub fn label(m: &CoxeterMatrix) -> String {
    m.label().map_or_else(|| "custom".to_string(), |l| l.to_string())
}
