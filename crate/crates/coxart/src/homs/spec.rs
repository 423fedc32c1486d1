//! Homomorphisms of Artin monoids given by generator images.

use crate::artin::ArtinElt;
use crate::coxeter::{classify, is_finite_type, CoxElt, CoxeterMatrix, Mask, INF};
use crate::error::{Error, Result};
use serde::Serialize;
use serde_json::{json, Value};
use std::sync::Arc;

/// Upper bound on the braid length searched by [`b_min`] unless requested otherwise.
pub const K_MAX_CAP: u64 = 40;

/// Least `k <= k_max` with `brd(x,y,k) = brd(y,x,k)`.
pub fn b_min(x: &ArtinElt, y: &ArtinElt, k_max: u64) -> Option<u64> {
    let mut a = ArtinElt::identity(x.matrix());
    let mut b = ArtinElt::identity(x.matrix());
    for k in 1..=k_max {
        let (nx, ny) = if k % 2 == 1 { (x, y) } else { (y, x) };
        a = a.mul(nx);
        b = b.mul(ny);
        if a == b {
            let twice = ArtinElt::braid_power(x, y, 2 * k);
            assert_eq!(twice, ArtinElt::braid_power(y, x, 2 * k), "B(x,y) is not closed under multiples");
            return Some(k);
        }
    }
    None
}

/// `2 h(M)` over the components of the target, capped, but never below the finite source labels.
pub fn default_k_max(source: &CoxeterMatrix, target: &CoxeterMatrix) -> u64 {
    let rep = classify(target, target.full());
    let h = rep
        .components
        .iter()
        .map(|c| c.coxeter_number().unwrap_or(K_MAX_CAP))
        .max()
        .unwrap_or(1);
    let mut k = (2 * h).min(K_MAX_CAP);
    let r = source.rank();
    for i in 1..=r {
        for j in i + 1..=r {
            let m = source.m(i, j);
            if m != INF {
                k = k.max(m as u64);
            }
        }
    }
    k
}

/// Outcome of the braid relation on one source edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeVerdict {
    pub i: usize,
    pub j: usize,
    /// `None` for an infinite label (no relation to check).
    pub label: Option<u32>,
    pub holds: bool,
}

/// The type flags of a homomorphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TypeFlags {
    pub coxeter_type: bool,
    pub hecke_type: bool,
    pub square_free: bool,
    /// Only defined for finite-type sources.
    pub strongly_square_free: Option<bool>,
    pub standard: bool,
    pub disjoint: bool,
    pub fully_supported: bool,
    /// Decided with braid lengths up to `k_max`.
    pub optimal: bool,
}

/// Generator images `T̂_i ↦ X_i` with per-edge verdicts and type flags.
#[derive(Clone, Debug)]
pub struct ArtinHomSpec {
    pub source: Arc<CoxeterMatrix>,
    pub target: Arc<CoxeterMatrix>,
    pub images: Vec<ArtinElt>,
    pub verdict: Vec<EdgeVerdict>,
    pub flags: TypeFlags,
    pub k_max: u64,
}

impl ArtinHomSpec {
    pub fn verified(&self) -> bool {
        self.verdict.iter().all(|v| v.holds)
    }

    /// The first failing edge.
    pub fn failure(&self) -> Option<&EdgeVerdict> {
        self.verdict.iter().find(|v| !v.holds)
    }

    /// `Ok(self)` when verified, else an error naming the failing edge.
    pub fn require_verified(self) -> Result<ArtinHomSpec> {
        match self.failure() {
            None => Ok(self),
            Some(v) => Err(Error::VerificationFailed(format!(
                "relation of length {} fails on edge ({},{})",
                v.label.map_or("inf".into(), |l| l.to_string()),
                v.i,
                v.j
            ))),
        }
    }

    /// `[Φ](i) = supp Φ(T̂_i)`.
    pub fn supports(&self) -> Vec<Mask> {
        self.images.iter().map(ArtinElt::support).collect()
    }

    /// `Φ(x)` for `x` over the source matrix.
    pub fn apply(&self, x: &ArtinElt) -> Result<ArtinElt> {
        if x.matrix() != &self.source {
            return Err(Error::MatrixMismatch);
        }
        Ok(self.apply_word(&x.word()))
    }

    pub fn apply_word(&self, word: &[usize]) -> ArtinElt {
        let mut acc = ArtinElt::identity(&self.target);
        for &i in word {
            acc = acc.mul(&self.images[i - 1]);
        }
        acc
    }

    /// `{"source","target","images","verified","flags"}`.
    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "images": self.images.iter().map(ArtinElt::word).collect::<Vec<_>>(),
            "verified": self.verified(),
            "flags": serde_json::to_value(&self.flags).expect("flags serialize"),
        })
    }
}

/// Checks every finite-label braid relation by normal forms and computes the type flags.
pub fn artin_hom_check(
    source: &Arc<CoxeterMatrix>,
    target: &Arc<CoxeterMatrix>,
    images: &[ArtinElt],
    k_max: Option<u64>,
) -> Result<ArtinHomSpec> {
    if images.len() != source.rank() {
        return Err(Error::Precondition(format!(
            "need {} images, got {}",
            source.rank(),
            images.len()
        )));
    }
    if images.iter().any(|x| x.matrix() != target) {
        return Err(Error::MatrixMismatch);
    }
    let r = source.rank();
    let mut verdict = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            let m = source.m(i, j);
            if m == INF {
                verdict.push(EdgeVerdict { i, j, label: None, holds: true });
                continue;
            }
            let (x, y) = (&images[i - 1], &images[j - 1]);
            let holds = ArtinElt::braid_power(x, y, m as u64) == ArtinElt::braid_power(y, x, m as u64);
            verdict.push(EdgeVerdict { i, j, label: Some(m), holds });
        }
    }
    let mut spec = ArtinHomSpec {
        source: source.clone(),
        target: target.clone(),
        images: images.to_vec(),
        verdict,
        flags: TypeFlags::default(),
        k_max: k_max.unwrap_or_else(|| default_k_max(source, target)),
    };
    spec.flags = hom_type_classify(&spec);
    Ok(spec)
}

/// Same as [`artin_hom_check`] with images given as words.
pub fn artin_hom_check_words(
    source: &Arc<CoxeterMatrix>,
    target: &Arc<CoxeterMatrix>,
    words: &[Vec<usize>],
    k_max: Option<u64>,
) -> Result<ArtinHomSpec> {
    let images = words
        .iter()
        .map(|w| ArtinElt::from_word(target, w))
        .collect::<Result<Vec<_>>>()?;
    artin_hom_check(source, target, &images, k_max)
}

fn is_involution(w: &CoxElt) -> bool {
    w.mul(w).is_identity()
}

/// Computes the type flags of a homomorphism.
pub fn hom_type_classify(spec: &ArtinHomSpec) -> TypeFlags {
    let target = &spec.target;
    let supp = spec.supports();
    let coxeter_type = spec.images.iter().all(|x| is_involution(&x.coxeter_image()));
    let hecke_type = spec.images.iter().zip(&supp).all(|(x, &s)| {
        is_finite_type(target, s)
            && CoxElt::longest_element(target, s).map_or(false, |w| x.hecke_image() == w)
    });
    let square_free = spec.images.iter().all(ArtinElt::is_square_free);
    let strongly_square_free = if is_finite_type(&spec.source, spec.source.full()) {
        let w0 = CoxElt::longest_element(&spec.source, spec.source.full()).expect("finite type");
        Some(spec.apply_word(&w0.word()).is_square_free())
    } else {
        None
    };
    let r = spec.source.rank();
    let mut disjoint = true;
    let mut optimal = true;
    for i in 1..=r {
        for j in i + 1..=r {
            if !supp[i - 1].inter(supp[j - 1]).is_empty() {
                disjoint = false;
            }
            let (x, y) = (&spec.images[i - 1], &spec.images[j - 1]);
            if x == y {
                continue;
            }
            if let Some(b) = b_min(x, y, spec.k_max) {
                if spec.source.m(i, j) as u64 != b {
                    optimal = false;
                }
            }
        }
    }
    let union = supp.iter().fold(Mask::EMPTY, |a, &s| a.union(s));
    TypeFlags {
        coxeter_type,
        hecke_type,
        square_free,
        strongly_square_free,
        standard: square_free && hecke_type,
        disjoint,
        fully_supported: union == target.full(),
        optimal,
    }
}

/// `Ψ ∘ Φ`: applies `outer` to the images of `inner`.
pub fn compose(outer: &ArtinHomSpec, inner: &ArtinHomSpec) -> Result<ArtinHomSpec> {
    if inner.target != outer.source {
        return Err(Error::MatrixMismatch);
    }
    let images: Vec<ArtinElt> = inner.images.iter().map(|x| outer.apply_word(&x.word())).collect();
    artin_hom_check(&inner.source, &outer.target, &images, None)
}
