//! Homomorphisms of Hecke monoids `s'_i ↦ w_0^{ξ(i)}`.

use crate::coxeter::{is_finite_type, CoxElt, CoxeterMatrix, Mask, INF};
use crate::error::{Error, Result};
use crate::hecke;
use std::sync::Arc;

/// A Hecke monoid homomorphism given by its support data `ξ`.
#[derive(Clone, Debug)]
pub struct HeckeHomSpec {
    pub source: Arc<CoxeterMatrix>,
    pub target: Arc<CoxeterMatrix>,
    /// `xi[i-1] = ξ(i)`.
    pub xi: Vec<Mask>,
    images: Vec<CoxElt>,
}

fn show(m: Option<u64>) -> String {
    m.map_or("inf".into(), |v| v.to_string())
}

impl HeckeHomSpec {
    /// Validates `ξ ∈ Λ(M′,M)`.
    pub fn new(source: &Arc<CoxeterMatrix>, target: &Arc<CoxeterMatrix>, xi: &[Mask]) -> Result<HeckeHomSpec> {
        if xi.len() != source.rank() {
            return Err(Error::Precondition(format!(
                "need {} subsets, got {}",
                source.rank(),
                xi.len()
            )));
        }
        let mut images = Vec::with_capacity(xi.len());
        for &x in xi {
            if !x.is_subset(target.full()) {
                return Err(Error::Precondition(format!("{x} is not a subset of the target index set")));
            }
            if !is_finite_type(target, x) {
                return Err(Error::NotFiniteType(x.to_string()));
            }
            images.push(CoxElt::longest_element(target, x)?);
        }
        let r = source.rank();
        for i in 1..=r {
            for j in i + 1..=r {
                let label = source.m(i, j);
                let (a, b) = (xi[i - 1], xi[j - 1]);
                if label == INF || a.is_empty() || b.is_empty() {
                    continue;
                }
                let mu_ij = hecke::mu(target, a, b)?;
                let mu_ji = hecke::mu(target, b, a)?;
                let ok = matches!((mu_ij, mu_ji), (Some(x), Some(y)) if x.max(y) <= label as u64);
                if !ok {
                    return Err(Error::LambdaViolation {
                        i,
                        j,
                        mu_ij: show(mu_ij),
                        mu_ji: show(mu_ji),
                        label: label.to_string(),
                    });
                }
            }
        }
        Ok(HeckeHomSpec { source: source.clone(), target: target.clone(), xi: xi.to_vec(), images })
    }

    /// The parabolic projection `p_J : (W(M),⋆) → (W(M_J),⋆)` with `M_J` renumbered increasingly.
    pub fn projection(m: &Arc<CoxeterMatrix>, j: Mask) -> Result<HeckeHomSpec> {
        let target = m.restrict(j);
        let idx = j.to_vec();
        let xi: Vec<Mask> = (1..=m.rank())
            .map(|i| match idx.iter().position(|&v| v == i) {
                Some(p) => Mask::single(p + 1),
                None => Mask::EMPTY,
            })
            .collect();
        Self::new(m, &target, &xi)
    }

    /// `φ(s'_i) = w_0^{ξ(i)}`.
    pub fn generator_image(&self, i: usize) -> &CoxElt {
        &self.images[i - 1]
    }

    /// `φ(x)`, folding the letter images of a reduced word of `x` with `⋆`.
    pub fn apply(&self, x: &CoxElt) -> Result<CoxElt> {
        if x.matrix() != &self.source {
            return Err(Error::MatrixMismatch);
        }
        let mut acc = CoxElt::identity(&self.target);
        for i in x.word() {
            acc = hecke::star(&acc, &self.images[i - 1])?;
        }
        Ok(acc)
    }

    /// `[φ](J′) = ∪_{i∈J′} ξ(i)`.
    pub fn support_of(&self, j: Mask) -> Mask {
        j.iter().fold(Mask::EMPTY, |acc, i| acc.union(self.xi[i - 1]))
    }

    /// Checks `φ(w_0^{J′}) = w_0^{[φ](J′)}` for every finite-type `J′`.
    pub fn verify_longest(&self) -> Result<()> {
        for j in self.source.full().subsets() {
            if !is_finite_type(&self.source, j) {
                continue;
            }
            let s = self.support_of(j);
            if !is_finite_type(&self.target, s) {
                return Err(Error::VerificationFailed(format!("[phi]({j}) = {s} is not of finite type")));
            }
            let img = self.apply(&CoxElt::longest_element(&self.source, j)?)?;
            if img != CoxElt::longest_element(&self.target, s)? {
                return Err(Error::VerificationFailed(format!("phi(w0 of {j}) is not w0 of {s}")));
            }
        }
        Ok(())
    }

    /// `m′_{ij} = max(2, μ(ξi,ξj), μ(ξj,ξi))` whenever `ξ(i) ≠ ξ(j)`.
    pub fn is_optimal(&self) -> Result<bool> {
        let r = self.source.rank();
        for i in 1..=r {
            for j in i + 1..=r {
                let (a, b) = (self.xi[i - 1], self.xi[j - 1]);
                if a == b {
                    continue;
                }
                let want = match (hecke::mu(&self.target, a, b)?, hecke::mu(&self.target, b, a)?) {
                    (Some(x), Some(y)) => x.max(y).max(2) as u32,
                    _ => INF,
                };
                if self.source.m(i, j) != want {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
