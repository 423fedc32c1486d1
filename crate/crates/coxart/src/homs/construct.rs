//! Light homomorphisms (foldings, Tits homomorphisms, parabolic projections) and decorations.

use super::spec::{artin_hom_check, ArtinHomSpec};
use crate::artin::{ArtinElt, ArtinGrpElt};
use crate::coxeter::{is_finite_type, CoxeterMatrix, Mask, INF};
use crate::error::{Error, Result};
use std::sync::Arc;

/// `M^ϖ` for `M` foldable along the surjection `ϖ` (`varpi[i-1] = ϖ(i)`, values `1..=r`).
pub fn folded_matrix(m: &CoxeterMatrix, varpi: &[usize]) -> Result<Arc<CoxeterMatrix>> {
    let n = m.rank();
    if varpi.len() != n {
        return Err(Error::Precondition(format!("need {n} values, got {}", varpi.len())));
    }
    let r = varpi.iter().copied().max().unwrap_or(0);
    if varpi.contains(&0) || (1..=r).any(|j| !varpi.contains(&j)) {
        return Err(Error::Precondition(format!("{varpi:?} is not a surjection onto 1..={r}")));
    }
    for i in 1..=n {
        for a in 1..=n {
            for b in 1..=n {
                let (pi, pa, pb) = (varpi[i - 1], varpi[a - 1], varpi[b - 1]);
                if pa == pb && pa != pi && m.m(i, a) != m.m(i, b) {
                    return Err(Error::Precondition(format!(
                        "not foldable: m({i},{a}) != m({i},{b}) with {a}, {b} in one fibre"
                    )));
                }
            }
        }
    }
    let mut rows = vec![vec![1u32; r]; r];
    for i in 1..=n {
        for a in 1..=n {
            let (p, q) = (varpi[i - 1], varpi[a - 1]);
            if p != q {
                rows[p - 1][q - 1] = m.m(i, a);
            }
        }
    }
    CoxeterMatrix::new(rows)
}

/// The folding `T_i ↦ T_{ϖ(i)}` onto `M^ϖ`.
pub fn fold(m: &Arc<CoxeterMatrix>, varpi: &[usize]) -> Result<(Arc<CoxeterMatrix>, ArtinHomSpec)> {
    let target = folded_matrix(m, varpi)?;
    let images = varpi
        .iter()
        .map(|&j| ArtinElt::generator(&target, j))
        .collect::<Result<Vec<_>>>()?;
    let spec = artin_hom_check(m, &target, &images, None)?.require_verified()?;
    Ok((target, spec))
}

/// `M(d)`: `m_ij` if `m_ij <= 2` or `d_i d_j = 1`; `2 d_i d_j` if `m_ij = 3` and
/// `d_i d_j ∈ {2,3}`; infinity otherwise.
pub fn tits_target(m: &CoxeterMatrix, d: &[u32]) -> Result<Arc<CoxeterMatrix>> {
    let n = m.rank();
    if d.len() != n || d.contains(&0) {
        return Err(Error::Precondition(format!("need {n} positive exponents, got {d:?}")));
    }
    let mut rows = m.rows();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let mij = m.m(i, j);
            let p = d[i - 1].saturating_mul(d[j - 1]);
            rows[i - 1][j - 1] = if mij <= 2 || p == 1 {
                mij
            } else if mij == 3 && (p == 2 || p == 3) {
                2 * p
            } else {
                INF
            };
        }
    }
    CoxeterMatrix::new(rows)
}

/// The Tits homomorphism `Br⁺(M(d)) → Br⁺(M)`, `T̂_i ↦ T_i^{d_i}`.
pub fn tits_hom(m: &Arc<CoxeterMatrix>, d: &[u32]) -> Result<ArtinHomSpec> {
    let source = tits_target(m, d)?;
    let images = d
        .iter()
        .enumerate()
        .map(|(i, &e)| Ok(ArtinElt::generator(m, i + 1)?.pow(e as usize)))
        .collect::<Result<Vec<_>>>()?;
    artin_hom_check(&source, m, &images, None)
}

/// `P_J : Br⁺(M) → Br⁺_J(M) ≅ Br⁺(M_J)`, `T_i ↦ T_i` on `J` and `1` elsewhere; `None` when some
/// label between `J` and its complement is odd.
pub fn artin_parabolic_projection(m: &Arc<CoxeterMatrix>, j: Mask) -> Result<Option<ArtinHomSpec>> {
    if !j.is_subset(m.full()) {
        return Err(Error::Precondition(format!("{j} is not a subset of the index set")));
    }
    let rest = m.full().minus(j);
    let odd = j.iter().any(|a| rest.iter().any(|b| m.m(a, b) != INF && m.m(a, b) % 2 == 1));
    if odd {
        return Ok(None);
    }
    let target = m.restrict(j);
    let idx = j.to_vec();
    let images = (1..=m.rank())
        .map(|i| match idx.iter().position(|&v| v == i) {
            Some(p) => ArtinElt::generator(&target, p + 1),
            None => Ok(ArtinElt::identity(&target)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(artin_hom_check(m, &target, &images, None)?.require_verified()?))
}

/// Result of [`decoration_check`].
#[derive(Clone, Debug)]
pub enum DecorationVerdict {
    /// The decorated homomorphism `T̂_i ↦ Φ(T̂_i) z_i`.
    Decorated(ArtinHomSpec),
    /// Condition 2° fails on this edge.
    Fails { i: usize, j: usize },
}

/// Computes `z^{(k)}_{i,j}` by conjugation, checks the alternating product condition on every
/// finite edge and builds the decorated homomorphism.
pub fn decoration_check(base: &ArtinHomSpec, z: &[ArtinGrpElt]) -> Result<DecorationVerdict> {
    let target = &base.target;
    if !is_finite_type(target, target.full()) {
        return Err(Error::NotFiniteType(target.full().to_string()));
    }
    if z.len() != base.images.len() {
        return Err(Error::Precondition(format!("need {} multipliers", base.images.len())));
    }
    if z.iter().any(|x| x.matrix() != target) {
        return Err(Error::MatrixMismatch);
    }
    let phi = base
        .images
        .iter()
        .map(ArtinGrpElt::from_positive)
        .collect::<Result<Vec<_>>>()?;
    let phi_inv: Vec<ArtinGrpElt> = phi.iter().map(ArtinGrpElt::inv).collect();
    // z^{(k)}_{i,j}, k = 1..=m
    let chain = |i: usize, j: usize, m: usize| -> Vec<ArtinGrpElt> {
        let mut out = vec![z[i - 1].clone()];
        for k in 1..m {
            let c = if k % 2 == 0 { i } else { j };
            let next = phi_inv[c - 1].mul(&out[k - 1]).mul(&phi[c - 1]);
            out.push(next);
        }
        out
    };
    let r = base.source.rank();
    for i in 1..=r {
        for j in i + 1..=r {
            let m = base.source.m(i, j);
            if m == INF {
                continue;
            }
            let m = m as usize;
            let (zij, zji) = (chain(i, j, m), chain(j, i, m));
            // z_{i,j}^{(m)} z_{j,i}^{(m-1)} z_{i,j}^{(m-2)} ...
            let alt = |a: &[ArtinGrpElt], b: &[ArtinGrpElt]| {
                let mut acc = ArtinGrpElt::identity(target).expect("finite target");
                for t in 0..m {
                    let src = if t % 2 == 0 { a } else { b };
                    acc = acc.mul(&src[m - 1 - t]);
                }
                acc
            };
            if alt(&zij, &zji) != alt(&zji, &zij) {
                return Ok(DecorationVerdict::Fails { i, j });
            }
        }
    }
    let mut images = Vec::with_capacity(r);
    for (p, zi) in phi.iter().zip(z) {
        let d = p.mul(zi);
        images.push(d.to_positive().ok_or_else(|| {
            Error::VerificationFailed("decorated image is not a positive braid".into())
        })?);
    }
    let spec = artin_hom_check(&base.source, target, &images, None)?.require_verified()?;
    Ok(DecorationVerdict::Decorated(spec))
}
