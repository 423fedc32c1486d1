//! Exhaustive search for standard homomorphisms `Br⁺(I_2(N)) → Br⁺(M)`.

use super::spec::{artin_hom_check, b_min, default_k_max, ArtinHomSpec};
use crate::artin::ArtinElt;
use crate::coxeter::{is_finite_type, CoxeterMatrix, Mask, INF};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::sync::Arc;

/// Largest target rank searched exhaustively.
pub const SEARCH_MAX_RANK: usize = 8;

/// Filters applied to the candidate pairs `(K_1, K_2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// `K_1 ∪ K_2 = I`.
    pub fully_supported: bool,
    /// `K_1 ≠ K_2` and `N = min B(T_{w_0^{K_1}}, T_{w_0^{K_2}})`.
    pub optimal: bool,
    /// `K_1 ∩ K_2 = ∅`.
    pub disjoint: bool,
}

/// One search hit: the supports and the verified homomorphism.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub k1: Mask,
    pub k2: Mask,
    pub spec: ArtinHomSpec,
}

fn holds(x: &ArtinElt, y: &ArtinElt, n: u64) -> bool {
    if n % 2 == 0 {
        // both images are op-invariant, so op((XY)^{N/2}) = (YX)^{N/2}
        let p = x.mul(y).pow((n / 2) as usize);
        p == p.op()
    } else {
        ArtinElt::braid_power(x, y, n) == ArtinElt::braid_power(y, x, n)
    }
}

/// Enumerates pairs of finite-type subsets `(K_1, K_2)` of the target index set with images
/// `T_{w_0^{K_i}}`. With `n = Some(N)` keeps the pairs satisfying the braid relation of length `N`
/// (for even `N` only `K_1 <= K_2` in mask order is reported); with `n = None` reports every pair
/// `K_1 ≠ K_2` with `min B` defined up to the default bound, with source `I_2(min B)`.
pub fn standard_hom_search(target: &Arc<CoxeterMatrix>, n: Option<u64>, opts: SearchOptions) -> Result<Vec<SearchHit>> {
    if target.rank() > SEARCH_MAX_RANK {
        return Err(Error::Precondition(format!(
            "target rank {} exceeds {SEARCH_MAX_RANK}",
            target.rank()
        )));
    }
    if matches!(n, Some(v) if v < 2 || v >= INF as u64) {
        return Err(Error::Precondition("N must be an integer >= 2".into()));
    }
    let full = target.full();
    let sets: Vec<(Mask, ArtinElt)> = full
        .subsets()
        .filter(|&k| is_finite_type(target, k))
        .map(|k| Ok((k, ArtinElt::garside_element(target, k)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            let (k1, k2) = (sets[a].0, sets[b].0);
            if opts.fully_supported && k1.union(k2) != full {
                continue;
            }
            if opts.disjoint && !k1.inter(k2).is_empty() {
                continue;
            }
            if (opts.optimal || n.is_none()) && k1 == k2 {
                continue;
            }
            if matches!(n, Some(v) if v % 2 == 0) && k1.0 > k2.0 {
                continue;
            }
            pairs.push((a, b));
        }
    }
    let probe = CoxeterMatrix::from_label("I2", 3)?;
    let k_max = default_k_max(&probe, target);
    let found: Vec<(Mask, Mask, u64)> = pairs
        .par_iter()
        .filter_map(|&(a, b)| {
            let (x, y) = (&sets[a].1, &sets[b].1);
            let label = match n {
                Some(v) => {
                    if !holds(x, y, v) {
                        return None;
                    }
                    if opts.optimal && b_min(x, y, v) != Some(v) {
                        return None;
                    }
                    v
                }
                None => b_min(x, y, k_max)?,
            };
            Some((sets[a].0, sets[b].0, label))
        })
        .collect();
    let mut hits = Vec::with_capacity(found.len());
    for (k1, k2, label) in found {
        let source = CoxeterMatrix::from_label("I2", label as usize)?;
        let images = vec![ArtinElt::garside_element(target, k1)?, ArtinElt::garside_element(target, k2)?];
        let spec = artin_hom_check(&source, target, &images, None)?.require_verified()?;
        hits.push(SearchHit { k1, k2, spec });
    }
    hits.sort_by_key(|h| (h.k1.0, h.k2.0));
    Ok(hits)
}
