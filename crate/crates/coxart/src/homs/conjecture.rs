//! Non-asserting harness comparing brute-force searches with the known families.

use super::catalog::{b2_a2n1_supports, hom_b2_supports, HomB2Target};
use super::count::b2_family_params;
use super::search::{standard_hom_search, SearchOptions};
use crate::artin::ArtinElt;
use crate::coxeter::{CoxeterMatrix, Mask, TypeLabel};
use crate::error::{Error, Result};
use crate::hecke;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Supports of standard homomorphisms, compared as ordered pairs.
pub type SupportPair = (Mask, Mask);

/// Outcome of a family-exhaustion experiment.
#[derive(Clone, Debug)]
pub struct ExhaustionReport {
    pub target: String,
    /// Fully supported standard homomorphisms found by search, closed under source swap.
    pub found: BTreeSet<SupportPair>,
    /// Known family members and the pairs `(K, I)` with `K` stable under `σ_I`, closed under
    /// source swap and target diagram automorphisms.
    pub known: BTreeSet<SupportPair>,
    /// Found but not in a known family.
    pub outside: Vec<SupportPair>,
    /// Known but not found; nonempty means a family member failed.
    pub missing: Vec<SupportPair>,
}

impl ExhaustionReport {
    pub fn to_json(&self) -> Value {
        let show = |v: &[SupportPair]| v.iter().map(|(a, b)| json!([a.to_vec(), b.to_vec()])).collect::<Vec<_>>();
        json!({
            "target": self.target,
            "found": self.found.len(),
            "known": self.known.len(),
            "outside": show(&self.outside),
            "missing": show(&self.missing),
        })
    }
}

/// All permutations of the index set preserving the Coxeter matrix.
fn automorphisms(m: &CoxeterMatrix) -> Vec<Vec<usize>> {
    fn extend(m: &CoxeterMatrix, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let r = m.rank();
        let i = perm.len() + 1;
        if i > r {
            out.push(perm.clone());
            return;
        }
        for c in 1..=r {
            if used[c] || (1..i).any(|k| m.m(k, i) != m.m(perm[k - 1], c)) {
                continue;
            }
            used[c] = true;
            perm.push(c);
            extend(m, perm, used, out);
            perm.pop();
            used[c] = false;
        }
    }
    let mut out = Vec::new();
    extend(m, &mut Vec::new(), &mut vec![false; m.rank() + 1], &mut out);
    out
}

fn close(pairs: impl IntoIterator<Item = SupportPair>, perms: &[Vec<usize>]) -> BTreeSet<SupportPair> {
    let mut out = BTreeSet::new();
    for (a, b) in pairs {
        for p in perms {
            let (x, y) = (a.map(p), b.map(p));
            out.insert((x, y));
            out.insert((y, x));
        }
    }
    out
}

/// Pairs `(K, I)` with `σ_I(K) = K`: `T_{w_0^K}` commutes with `Δ`, so every relation holds.
fn trivial_pairs(m: &Arc<CoxeterMatrix>) -> Result<Vec<SupportPair>> {
    let full = m.full();
    let sigma = ArtinElt::sigma_map(m, full)?;
    Ok(full.subsets().filter(|k| k.map(&sigma) == *k).map(|k| (k, full)).collect())
}

fn exhaust(target: &Arc<CoxeterMatrix>, n: u64, known: Vec<SupportPair>, distinct: bool) -> Result<ExhaustionReport> {
    let opts = SearchOptions { fully_supported: true, ..Default::default() };
    let hits = standard_hom_search(target, Some(n), opts)?;
    let found: BTreeSet<SupportPair> = hits
        .iter()
        .filter(|h| !distinct || h.k1 != h.k2)
        .flat_map(|h| [(h.k1, h.k2), (h.k2, h.k1)])
        .collect();
    let known = close(known, &automorphisms(target));
    let known: BTreeSet<SupportPair> = known.into_iter().filter(|p| !distinct || p.0 != p.1).collect();
    Ok(ExhaustionReport {
        target: label_of(target),
        outside: found.difference(&known).copied().collect(),
        missing: known.difference(&found).copied().collect(),
        found,
        known,
    })
}

fn label_of(m: &CoxeterMatrix) -> String {
    m.label().map_or_else(|| "custom".into(), |l| l.to_string())
}

/// Fully supported standard `A_2 → M` with distinct supports versus the `A_2` family
/// (`M = A_{3m-1}`) and the exceptional `E_6` homomorphism.
pub fn all_homs_a2(target: &Arc<CoxeterMatrix>) -> Result<ExhaustionReport> {
    let mut known = Vec::new();
    match target.label() {
        Some(TypeLabel::A(n)) if (n + 1) % 3 == 0 => {
            let m = (n + 1) / 3;
            for j in Mask::interval(1, m as i64 - 1).subsets() {
                let head = Mask::interval(1, 2 * m as i64 - 1).union(j.shift(2 * m as i64));
                let tail = Mask::interval(m as i64 + 1, 3 * m as i64 - 1).union(j);
                known.push((head, tail));
            }
        }
        Some(TypeLabel::E(6)) => {
            let full = target.full();
            known.push((full.without(5), full.without(1)));
        }
        _ => {}
    }
    exhaust(target, 3, known, true)
}

/// Fully supported standard `B_2 → M` versus the `B_2` families into `A_n`, `B_n`, `D_{n+1}`,
/// the special family into `A_{2n-1}`, the exceptional standard homomorphisms and the pairs
/// `(K, I)` with `σ_I(K) = K`.
pub fn all_homs_b2(target: &Arc<CoxeterMatrix>) -> Result<ExhaustionReport> {
    let mut known = Vec::new();
    let fam = |f: &str, n: usize, t: Option<HomB2Target>| -> Result<Vec<SupportPair>> {
        Ok(b2_family_params(f, n)?
            .into_iter()
            .map(|(a, j, k)| match t {
                Some(t) => hom_b2_supports(t, a, n, j, k),
                None => b2_a2n1_supports(n, a, j, k),
            })
            .collect())
    };
    match target.label() {
        Some(TypeLabel::A(n)) => {
            known.extend(fam("hom-b2-a", n, Some(HomB2Target::A))?);
            if n % 2 == 1 && n >= 3 {
                known.extend(fam("b2-a2n-1", n.div_ceil(2), None)?);
            }
        }
        Some(TypeLabel::B(n)) => known.extend(fam("hom-b2-b", n, Some(HomB2Target::B))?),
        Some(TypeLabel::D(r)) if r >= 4 => known.extend(fam("hom-b2-d", r - 1, Some(HomB2Target::D))?),
        Some(TypeLabel::F4) | Some(TypeLabel::E(7)) | Some(TypeLabel::E(8)) => {
            let full = target.full();
            let j1 = match target.label() {
                Some(TypeLabel::F4) => full.without(4),
                Some(TypeLabel::E(7)) => full.without(5).without(6),
                _ => full.without(7),
            };
            known.push((j1, full.without(1)));
            if target.label() == Some(TypeLabel::E(7)) {
                known.push((j1.with(6), full.without(1)));
            }
        }
        _ => {}
    }
    known.extend(trivial_pairs(target)?);
    let known = known.into_iter().filter(|(a, b)| a.union(*b) == target.full()).collect();
    exhaust(target, 4, known, false)
}

/// The pair `J_1 = {1,2,3,4,5,7}`, `J_2 = [2,7]` in `E_7`: whether `(X_1X_2)^2 = (X_2X_1)^2`.
pub fn e7_candidate_holds() -> Result<bool> {
    let e7 = CoxeterMatrix::from_label("E", 7)?;
    let j1: Mask = [1, 2, 3, 4, 5, 7].into_iter().collect();
    let j2 = Mask::interval(2, 7);
    let x = ArtinElt::garside_element(&e7, j1)?;
    let y = ArtinElt::garside_element(&e7, j2)?;
    Ok(ArtinElt::braid_power(&x, &y, 4) == ArtinElt::braid_power(&y, &x, 4))
}

/// Names accepted by [`run_conjecture`].
pub const CONJECTURES: &[&str] = &["pj-multipar", "multipar-closure", "all-homs-a2", "all-homs-b2", "e7-candidate"];

/// Runs a named experiment on a target type and returns a JSON report; never fails on a
/// negative outcome.
pub fn run_conjecture(name: &str, target: Option<&str>) -> Result<Value> {
    let need = || -> Result<Arc<CoxeterMatrix>> {
        CoxeterMatrix::parse(target.ok_or_else(|| Error::Precondition(format!("`{name}` needs a type")))?)
    };
    Ok(match name {
        "pj-multipar" => {
            let m = need()?;
            let fails = hecke::projection_multiparabolic_failures(&m)?;
            json!({"conjecture": name, "type": label_of(&m), "failures": fails.len(), "holds": fails.is_empty()})
        }
        "multipar-closure" => {
            let m = need()?;
            let r = hecke::multipar_closure(&m)?;
            json!({
                "conjecture": name,
                "type": label_of(&m),
                "multiparabolic": r.multiparabolic,
                "extra_products": r.extra.len(),
                "product_set_closed": r.product_set_closed,
            })
        }
        "all-homs-a2" | "all-homs-b2" => {
            let m = need()?;
            let r = if name == "all-homs-a2" { all_homs_a2(&m)? } else { all_homs_b2(&m)? };
            let mut v = r.to_json();
            v["conjecture"] = json!(name);
            v["holds"] = json!(r.outside.is_empty());
            v
        }
        "e7-candidate" => {
            let holds = e7_candidate_holds()?;
            json!({"conjecture": name, "relation_holds": holds})
        }
        _ => return Err(Error::Precondition(format!("unknown conjecture `{name}`"))),
    })
}
