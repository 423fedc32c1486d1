//! `coxart`: exact computations with Coxeter groups, 0-Hecke monoids and Artin monoids.
//!
//! Exit status: 0 success, 1 a verification or check failed, 2 an input error.

mod args;
mod ops;
mod suite;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "coxart", version, about = "Exact Coxeter, Hecke and Artin monoid computations")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: COXART_JOBS, else all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeWord {
    /// Type label, e.g. A4, B3, I2(8).
    #[arg(long = "type")]
    ty: String,
    /// Word of 1-based letters, space- or comma-separated.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced word of a Coxeter group element.
    Reduce(TypeWord),
    /// Hecke monoid product x ⋆ y of two words.
    Star {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
    },
    /// Left-greedy normal form of a positive braid.
    Nf(TypeWord),
    /// μ(J, K); prints `inf` when undefined.
    Mu {
        #[arg(long = "type")]
        ty: String,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long = "K", default_value = "")]
        k: String,
    },
    /// Parabolic projection p_J of the Hecke product of a word.
    Proj {
        #[arg(long = "type")]
        ty: String,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// The subset J ⋆ K.
    StarSubsets {
        #[arg(long = "type")]
        ty: String,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long = "K", default_value = "")]
        k: String,
        /// Ambient subset (default: all generators).
        #[arg(long)]
        within: Option<String>,
    },
    /// Generating polynomial of multiparabolic elements.
    Multipar {
        #[arg(long = "type")]
        ty: String,
        /// recursion, enumerate or both.
        #[arg(long, default_value = "recursion")]
        method: String,
    },
    /// Chebyshev closed form for A_n or D_{n+1}, compared with the recursion.
    Chebyshev {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
    },
    /// Checks that generator images define a homomorphism of Artin monoids.
    HomCheck {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// One word per source generator, separated by `;`.
        #[arg(long)]
        images: String,
        #[arg(long)]
        k_max: Option<u64>,
    },
    /// Exhaustive search for standard homomorphisms from a dihedral type.
    HomSearch {
        #[arg(long)]
        target: String,
        /// Dihedral label N; omitted: report every pair with its minimal N.
        #[arg(long = "N")]
        n: Option<u64>,
        #[arg(long)]
        fully_supported: bool,
        #[arg(long)]
        optimal: bool,
        #[arg(long)]
        disjoint: bool,
    },
    /// Builds and verifies a catalog homomorphism.
    Catalog {
        /// Family name; omit with --list.
        family: Option<String>,
        /// Parameters as a JSON object, e.g. '{"n":4}'.
        #[arg(long, default_value = "{}")]
        params: String,
        /// List the families.
        #[arg(long)]
        list: bool,
        /// Verify every bundled catalog instance.
        #[arg(long)]
        all: bool,
    },
    /// Counting formulas against enumeration, or multiparabolic counts of a type.
    Counts {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long = "type")]
        ty: Option<String>,
    },
    /// Burau matrix of a signed braid word (negative letters are inverses).
    Burau {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Burau falsifier for op-invariance of powers of T_J; all J with g(J) > 1 when J is omitted.
    Falsify {
        #[arg(long)]
        n: u64,
        #[arg(long = "J")]
        j: Option<String>,
        /// Evaluation points, comma-separated (default 2,3).
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        m_max: Option<u64>,
    },
    /// Runs a verification suite manifest (`paper` selects the bundled one).
    Verify {
        #[arg(long)]
        suite: String,
        /// Rerun checks that already passed according to the cache.
        #[arg(long)]
        force: bool,
        /// Cache file (overrides the manifest).
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Do not read or write a cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Runs a non-asserting experiment: pj-multipar, multipar-closure, all-homs-a2, all-homs-b2,
    /// e7-candidate.
    Conjecture {
        name: String,
        #[arg(long = "type")]
        ty: Option<String>,
    },
    /// Runs any named operation with JSON arguments.
    Run {
        op: String,
        #[arg(long, default_value = "{}")]
        args: String,
    },
    /// Lists the operations usable in manifests and with `run`.
    Ops,
}

fn obj(pairs: Vec<(&str, Option<Value>)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        if let Some(v) = v {
            m.insert(k.to_string(), v);
        }
    }
    Value::Object(m)
}

fn s(v: &str) -> Option<Value> {
    Some(Value::String(v.to_string()))
}

fn so(v: &Option<String>) -> Option<Value> {
    v.as_deref().and_then(s)
}

enum Done {
    Op(ops::Outcome),
    Suite(suite::Report),
    Text(Value, String),
}

fn to_op(cmd: &Cmd) -> Result<Option<(String, Value)>> {
    Ok(Some(match cmd {
        Cmd::Reduce(t) => ("reduce".into(), obj(vec![("type", s(&t.ty)), ("word", s(&t.word))])),
        Cmd::Nf(t) => ("nf".into(), obj(vec![("type", s(&t.ty)), ("word", s(&t.word))])),
        Cmd::Star { ty, x, y } => ("star".into(), obj(vec![("type", s(ty)), ("x", s(x)), ("y", s(y))])),
        Cmd::Mu { ty, j, k } => ("mu".into(), obj(vec![("type", s(ty)), ("J", s(j)), ("K", s(k))])),
        Cmd::Proj { ty, j, word } => ("proj".into(), obj(vec![("type", s(ty)), ("J", s(j)), ("word", s(word))])),
        Cmd::StarSubsets { ty, j, k, within } => (
            "star-subsets".into(),
            obj(vec![("type", s(ty)), ("J", s(j)), ("K", s(k)), ("within", so(within))]),
        ),
        Cmd::Multipar { ty, method } => ("multipar".into(), obj(vec![("type", s(ty)), ("method", s(method))])),
        Cmd::Chebyshev { family, n } => ("chebyshev".into(), obj(vec![("family", s(family)), ("n", Some(json!(n)))])),
        Cmd::HomCheck { source, target, images, k_max } => (
            "hom-check".into(),
            obj(vec![("source", s(source)), ("target", s(target)), ("images", s(images)), ("k_max", k_max.map(|v| json!(v)))]),
        ),
        Cmd::HomSearch { target, n, fully_supported, optimal, disjoint } => (
            "hom-search".into(),
            obj(vec![
                ("target", s(target)),
                ("N", n.map(|v| json!(v))),
                ("fully_supported", Some(json!(fully_supported))),
                ("optimal", Some(json!(optimal))),
                ("disjoint", Some(json!(disjoint))),
            ]),
        ),
        Cmd::Catalog { family, params, list, all } => {
            if *list {
                return Ok(None);
            }
            if *all {
                ("catalog-all".into(), json!({}))
            } else {
                let params: Value = serde_json::from_str(params).context("--params must be a JSON object")?;
                let family = family.clone().context("catalog needs a family name (or --list)")?;
                ("catalog".into(), obj(vec![("family", s(&family)), ("params", Some(params))]))
            }
        }
        Cmd::Counts { family, n, ty } => (
            "counts".into(),
            obj(vec![("family", s(family)), ("n", n.map(|v| json!(v))), ("type", so(ty))]),
        ),
        Cmd::Burau { n, q, word } => ("burau".into(), obj(vec![("n", Some(json!(n))), ("q", s(q)), ("word", s(word))])),
        Cmd::Falsify { n, j, q, m_max } => (
            "falsify".into(),
            obj(vec![("n", Some(json!(n))), ("J", so(j)), ("q", so(q)), ("m_max", m_max.map(|v| json!(v)))]),
        ),
        Cmd::Conjecture { name, ty } => ("conjecture".into(), obj(vec![("name", s(name)), ("type", so(ty))])),
        Cmd::Run { op, args } => {
            let v: Value = serde_json::from_str(args).context("--args must be a JSON object")?;
            (op.clone(), v)
        }
        Cmd::Verify { .. } | Cmd::Ops => return Ok(None),
    }))
}

fn execute(cmd: &Cmd) -> Result<Done> {
    if let Some((op, a)) = to_op(cmd)? {
        return Ok(Done::Op(ops::run(&op, &a)?));
    }
    match cmd {
        Cmd::Verify { suite: spec, force, cache, no_cache } => {
            let (m, base) = suite::load(spec)?;
            let path = (!no_cache).then(|| suite::cache_path(&m, base.as_deref(), cache.as_deref()));
            Ok(Done::Suite(suite::run(&m, path.as_deref(), *force)?))
        }
        Cmd::Ops => {
            let d = ops::describe();
            let v = json!(d.iter().map(|(o, a)| json!({"op": o, "args": a})).collect::<Vec<_>>());
            Ok(Done::Text(v, d.iter().map(|(o, a)| format!("{o:<16} {a}")).collect::<Vec<_>>().join("\n")))
        }
        Cmd::Catalog { .. } => {
            let f = coxart::homs::FAMILIES;
            Ok(Done::Text(json!(f), f.join("\n")))
        }
        _ => unreachable!("handled by to_op"),
    }
}

fn jobs(cli: Option<usize>) -> Result<Option<usize>> {
    if let Some(j) = cli {
        return Ok(Some(j));
    }
    match std::env::var("COXART_JOBS") {
        Ok(v) if !v.trim().is_empty() => Ok(Some(v.trim().parse().context("COXART_JOBS must be a positive integer")?)),
        _ => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let fail_input = |e: anyhow::Error, json: bool| {
        if json {
            println!("{}", json!({"error": format!("{e:#}")}));
        }
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    };
    match jobs(cli.jobs) {
        Ok(Some(0)) => return fail_input(anyhow::anyhow!("--jobs must be at least 1"), cli.json),
        Ok(Some(n)) => {
            // only fails if a pool already exists, which cannot happen here
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        Ok(None) => {}
        Err(e) => return fail_input(e, cli.json),
    }
    match execute(&cli.cmd) {
        Err(e) => fail_input(e, cli.json),
        Ok(Done::Op(o)) => {
            if cli.json {
                println!("{}", o.json);
            } else {
                println!("{}", o.text.trim_end());
            }
            ExitCode::from(if o.ok { 0 } else { 1 })
        }
        Ok(Done::Suite(r)) => {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                for res in &r.results {
                    println!("{}", res.line());
                }
                println!("{}", r.summary());
            }
            ExitCode::from(r.exit_code() as u8)
        }
        Ok(Done::Text(v, t)) => {
            if cli.json {
                println!("{v}");
            } else {
                println!("{t}");
            }
            ExitCode::SUCCESS
        }
    }
}
