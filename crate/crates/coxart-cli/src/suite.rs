//! Verification suites: a manifest of named checks, run concurrently, compared exactly and
//! recorded in an append-only JSON-lines cache keyed by a content hash.

use crate::ops;
use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::collections::HashSet;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

/// The manifest bundled with the binary, selected by `--suite paper`.
pub const BUNDLED: &str = include_str!("../paper.json");

/// Default cache file when neither the manifest nor the command line names one.
pub const DEFAULT_CACHE: &str = "coxart-cache.jsonl";

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    /// Results cache path, relative to the manifest file.
    #[serde(default)]
    pub cache: Option<String>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub op: String,
    #[serde(default = "empty_object")]
    pub args: Value,
    /// JSON pointer into the operation output; the whole output when empty.
    #[serde(default)]
    pub path: String,
    /// Expected value at `path`; when absent only the operation verdict is checked.
    #[serde(default)]
    pub expect: Option<Value>,
    /// Where the expected value comes from: `published`, `cross-check` or `trivial`.
    pub origin: String,
    #[serde(default)]
    pub note: Option<String>,
}

fn empty_object() -> Value {
    json!({})
}

impl Check {
    /// SHA-256 of the canonical JSON of everything that determines the outcome.
    pub fn key(&self) -> String {
        let v = json!({
            "version": env!("CARGO_PKG_VERSION"),
            "op": self.op,
            "args": self.args,
            "path": self.path,
            "expect": self.expect,
        });
        format!("{:x}", Sha256::digest(v.to_string().as_bytes()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Cached,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub key: String,
    pub status: Status,
    pub expected: Option<Value>,
    pub got: Option<Value>,
    pub message: String,
    pub origin: String,
    pub note: Option<String>,
}

impl CheckResult {
    fn to_json(&self) -> Value {
        let mut v = json!({"name": self.name, "status": self.status, "message": self.message, "origin": self.origin});
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        if self.status == Status::Fail {
            v["expected"] = self.expected.clone().unwrap_or(Value::Null);
            v["got"] = self.got.clone().unwrap_or(Value::Null);
        }
        v
    }

    pub fn line(&self) -> String {
        match self.status {
            Status::Pass => format!("PASS   {} [{}]: {}", self.name, self.origin, self.message),
            Status::Cached => format!("CACHED {}", self.name),
            Status::Error => format!("ERROR  {}: {}", self.name, self.message),
            Status::Fail => {
                let show = |v: &Option<Value>| v.as_ref().map_or_else(|| "-".to_string(), Value::to_string);
                format!(
                    "FAIL   {} [{}]: {}\n       expected: {}\n       got:      {}",
                    self.name,
                    self.origin,
                    self.message,
                    show(&self.expected),
                    show(&self.got)
                )
            }
        }
    }
}

pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.results.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
            "passed": self.count(Status::Pass),
            "failed": self.count(Status::Fail),
            "errors": self.count(Status::Error),
            "cached": self.count(Status::Cached),
            "total": self.results.len(),
        })
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks: {} passed, {} failed, {} errors, {} cached",
            self.results.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error),
            self.count(Status::Cached)
        )
    }

    /// 0 when everything passed, 1 on a failed check, 2 on a malformed check.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Error) > 0 {
            2
        } else if self.count(Status::Fail) > 0 {
            1
        } else {
            0
        }
    }
}

/// Loads a manifest from a path, or the bundled one for `paper` when no such file exists.
pub fn load(spec: &str) -> Result<(Manifest, Option<PathBuf>)> {
    let path = Path::new(spec);
    let (text, base) = if path.exists() {
        let t = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        (t, path.parent().map(Path::to_path_buf))
    } else if spec == "paper" {
        (BUNDLED.to_string(), None)
    } else {
        bail!("manifest `{spec}` not found");
    };
    let m: Manifest = serde_json::from_str(&text).with_context(|| format!("parsing manifest {spec}"))?;
    let mut seen = HashSet::new();
    for c in &m.checks {
        if !seen.insert(c.name.as_str()) {
            bail!("duplicate check name `{}`", c.name);
        }
        if !ops::OPS.contains(&c.op.as_str()) {
            bail!("check `{}`: unknown operation `{}`", c.name, c.op);
        }
        if !c.args.is_object() {
            bail!("check `{}`: `args` must be an object", c.name);
        }
    }
    Ok((m, base))
}

/// Cache path: the command-line value, else the manifest's (relative to the manifest file),
/// else [`DEFAULT_CACHE`] in the working directory.
pub fn cache_path(m: &Manifest, base: Option<&Path>, cli: Option<&Path>) -> PathBuf {
    if let Some(p) = cli {
        return p.to_path_buf();
    }
    match (&m.cache, base) {
        (Some(c), Some(b)) => b.join(c),
        (Some(c), None) => PathBuf::from(c),
        (None, _) => PathBuf::from(DEFAULT_CACHE),
    }
}

fn cached_passes(path: &Path) -> Result<HashSet<String>> {
    let mut out = HashSet::new();
    let Ok(text) = fs::read_to_string(path) else { return Ok(out) };
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let v: Value = serde_json::from_str(line).with_context(|| format!("{}:{}: malformed cache line", path.display(), i + 1))?;
        if v["status"] == "pass" {
            if let Some(k) = v["key"].as_str() {
                out.insert(k.to_string());
            }
        }
    }
    Ok(out)
}

fn run_check(c: &Check) -> CheckResult {
    let key = c.key();
    let mk = |status, got: Option<Value>, message: String| CheckResult {
        name: c.name.clone(),
        key: key.clone(),
        status,
        expected: c.expect.clone(),
        got,
        message,
        origin: c.origin.clone(),
        note: c.note.clone(),
    };
    let out = match ops::run(&c.op, &c.args) {
        Ok(o) => o,
        Err(e) => return mk(Status::Error, None, format!("{e:#}")),
    };
    let got = match out.json.pointer(&c.path) {
        Some(v) => v.clone(),
        None => return mk(Status::Error, None, format!("path `{}` not in the output", c.path)),
    };
    let matches = c.expect.as_ref().is_none_or(|e| *e == got);
    if out.ok && matches {
        mk(Status::Pass, Some(got), out.text)
    } else {
        let why = if out.ok { "value differs".to_string() } else { format!("verification failed: {}", out.text) };
        mk(Status::Fail, Some(got), why)
    }
}

/// Runs the manifest, skipping checks with a cached pass unless `force`, and appends one
/// cache line per executed check. Results are ordered by check name.
pub fn run(m: &Manifest, cache: Option<&Path>, force: bool) -> Result<Report> {
    let passed = match (cache, force) {
        (Some(p), false) => cached_passes(p)?,
        _ => HashSet::new(),
    };
    let mut checks: Vec<&Check> = m.checks.iter().collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let results: Vec<CheckResult> = checks
        .par_iter()
        .map(|c| {
            let key = c.key();
            if passed.contains(&key) {
                CheckResult {
                    name: c.name.clone(),
                    key,
                    status: Status::Cached,
                    expected: c.expect.clone(),
                    got: None,
                    message: String::new(),
                    origin: c.origin.clone(),
                    note: c.note.clone(),
                }
            } else {
                run_check(c)
            }
        })
        .collect();
    if let Some(p) = cache {
        let fresh: Vec<&CheckResult> = results.iter().filter(|r| r.status != Status::Cached).collect();
        if !fresh.is_empty() {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let mut f = OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .map_err(|e| anyhow!("opening cache {}: {e}", p.display()))?;
            for r in fresh {
                let line = json!({"key": r.key, "name": r.name, "status": r.status, "got": r.got});
                writeln!(f, "{line}")?;
            }
        }
    }
    Ok(Report { results })
}
