//! Constructors for the known families of homomorphisms between Artin monoids.
//!
//! Every constructor builds the generator images and runs [`artin_hom_check`]; a family member
//! that fails its braid relations is reported as [`Error::VerificationFailed`].

use super::spec::{artin_hom_check, compose, ArtinHomSpec};
use crate::artin::typea::{self, cycle, cycle_rev};
use crate::artin::{ArtinElt, ArtinGrpElt};
use crate::coxeter::{CoxeterMatrix, Mask};
use crate::error::{Error, Result};
use serde_json::{json, Value};
use std::sync::Arc;

fn ty(label: &str) -> Result<Arc<CoxeterMatrix>> {
    CoxeterMatrix::parse(label)
}

fn i2(m: u32) -> Result<Arc<CoxeterMatrix>> {
    CoxeterMatrix::from_label("I2", m as usize)
}

fn iv(a: usize, b: usize) -> Mask {
    Mask::interval(a as i64, b as i64)
}

fn iv2(a: usize, b: usize) -> Mask {
    Mask::interval2(a as i64, b as i64)
}

fn word(m: &Arc<CoxeterMatrix>, w: &[usize]) -> Result<ArtinElt> {
    ArtinElt::from_word(m, w)
}

fn w0(m: &Arc<CoxeterMatrix>, j: Mask) -> Result<ArtinElt> {
    ArtinElt::garside_element(m, j)
}

/// `T_{w_{J;K}} = Δ_J^{-1} Δ_K`.
fn wjk(m: &Arc<CoxeterMatrix>, j: Mask, k: Mask) -> Result<ArtinElt> {
    Ok(ArtinGrpElt::parabolic_braid(m, j, k)?.to_positive().expect("checked positive"))
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn finish(source: Arc<CoxeterMatrix>, target: Arc<CoxeterMatrix>, images: Vec<ArtinElt>) -> Result<ArtinHomSpec> {
    artin_hom_check(&source, &target, &images, None)?.require_verified()
}

/// `B_n → A_{2n-1}`: `T̂_i ↦ T_i T_{2n-i}`, `T̂_n ↦ T_n`.
pub fn unfold_b_a_odd(n: usize) -> Result<ArtinHomSpec> {
    need(n >= 2, || format!("need n >= 2, got {n}"))?;
    let (s, t) = (CoxeterMatrix::from_label("B", n)?, CoxeterMatrix::from_label("A", 2 * n - 1)?);
    let mut im = Vec::new();
    for i in 1..n {
        im.push(word(&t, &[i, 2 * n - i])?);
    }
    im.push(word(&t, &[n])?);
    finish(s, t, im)
}

/// `B_n → A_{2n}`: `T̂_i ↦ T_i T_{2n+1-i}`, `T̂_n ↦ T_n T_{n+1} T_n`.
pub fn unfold_b_a_even(n: usize) -> Result<ArtinHomSpec> {
    need(n >= 2, || format!("need n >= 2, got {n}"))?;
    let (s, t) = (CoxeterMatrix::from_label("B", n)?, CoxeterMatrix::from_label("A", 2 * n)?);
    let mut im = Vec::new();
    for i in 1..n {
        im.push(word(&t, &[i, 2 * n + 1 - i])?);
    }
    im.push(word(&t, &[n, n + 1, n])?);
    finish(s, t, im)
}

/// `B_n → D_{n+1}`: `T̂_i ↦ T_i`, `T̂_n ↦ T_n T_{n+1}`.
pub fn unfold_b_d(n: usize) -> Result<ArtinHomSpec> {
    need(n >= 3, || format!("need n >= 3, got {n}"))?;
    let (s, t) = (CoxeterMatrix::from_label("B", n)?, CoxeterMatrix::from_label("D", n + 1)?);
    let mut im = Vec::new();
    for i in 1..n {
        im.push(word(&t, &[i])?);
    }
    im.push(word(&t, &[n, n + 1])?);
    finish(s, t, im)
}

fn from_words(source: &str, target: &str, words: &[&[usize]]) -> Result<ArtinHomSpec> {
    let (s, t) = (ty(source)?, ty(target)?);
    let im = words.iter().map(|w| word(&t, w)).collect::<Result<Vec<_>>>()?;
    finish(s, t, im)
}

/// `F_4 → E_6`: `T1T5, T2T4, T3, T6`.
pub fn unfold_f4_e6() -> Result<ArtinHomSpec> {
    from_words("F4", "E6", &[&[1, 5], &[2, 4], &[3], &[6]])
}

/// `H_3 → D_6`: `T1T5, T2T4, T3T6`.
pub fn unfold_h3_d6() -> Result<ArtinHomSpec> {
    from_words("H3", "D6", &[&[1, 5], &[2, 4], &[3, 6]])
}

/// `H_4 → E_8`: `T1T7, T2T6, T3T5, T4T8`.
pub fn unfold_h4_e8() -> Result<ArtinHomSpec> {
    from_words("H4", "E8", &[&[1, 7], &[2, 6], &[3, 5], &[4, 8]])
}

/// `I_2(8) → F_4`: `T1T4, T_{w_0^{{2,3}}} = T2T3T2T3`.
pub fn unfold_i8_f4() -> Result<ArtinHomSpec> {
    from_words("I2(8)", "F4", &[&[1, 4], &[2, 3, 2, 3]])
}

/// `I_2(2m+1) → A_{2m}`: `T̂_i ↦ ∏_{j ∈ [1,2m+1-i]_2} T_j`.
pub fn unfold_odd_dihedral(m: usize) -> Result<ArtinHomSpec> {
    need(m >= 1, || "need m >= 1".into())?;
    let (s, t) = (i2(2 * m as u32 + 1)?, CoxeterMatrix::from_label("A", 2 * m)?);
    let im = (1..=2)
        .map(|i| w0(&t, iv2(1, 2 * m + 1 - i)))
        .collect::<Result<Vec<_>>>()?;
    finish(s, t, im)
}

/// Two-colouring of the Coxeter graph, class of the smallest vertex first.
fn bipartition(m: &CoxeterMatrix) -> Result<(Mask, Mask)> {
    let n = m.rank();
    let mut colour = vec![None; n + 1];
    for start in 1..=n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(0u8);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let c = colour[v].expect("coloured");
            for u in m.neighbours(v, m.full()).iter() {
                match colour[u] {
                    None => {
                        colour[u] = Some(1 - c);
                        stack.push(u);
                    }
                    Some(d) if d == c => {
                        return Err(Error::Precondition("the Coxeter graph is not bipartite".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let a: Mask = (1..=n).filter(|&v| colour[v] == Some(0)).collect();
    Ok((a, m.full().minus(a)))
}

/// `I_2(h) → M` for even Coxeter number `h`: `T̂_j ↦ T_{w_0^{I_j}}` for the bipartition of the graph.
pub fn bipartite(target: &str) -> Result<ArtinHomSpec> {
    let t = ty(target)?;
    let h = t
        .label()
        .and_then(|l| l.coxeter_number())
        .ok_or_else(|| Error::Precondition(format!("{target} is not irreducible of finite type")))?;
    need(h % 2 == 0 && h > 2, || format!("Coxeter number {h} of {target} is not an even number > 2"))?;
    let (a, b) = bipartition(&t)?;
    need(!a.is_empty() && !b.is_empty(), || "empty colour class".into())?;
    finish(i2(h as u32)?, t.clone(), vec![w0(&t, a)?, w0(&t, b)?])
}

/// `I_2(2m) → B_n`, `2 <= m <= n`: `T̂_1 ↦ T_{w_0^{[1,m-1]_2}}` and `T̂_2 ↦ T_{w_0^{[1,m-2]_2}} C_{m..n} C^rev_{m..n-1}`
/// (`full = false`) or `T̂_2 ↦ T_{w_0^{[1,m-2]_2 ∪ [m,n]}}` (`full = true`).
pub fn adm_dihedral_b(m: usize, n: usize, full: bool) -> Result<ArtinHomSpec> {
    need(2 <= m && m <= n, || format!("need 2 <= m <= n, got m={m}, n={n}"))?;
    let (s, t) = (i2(2 * m as u32)?, CoxeterMatrix::from_label("B", n)?);
    let x1 = w0(&t, iv2(1, m - 1))?;
    let low = iv2(1, m.saturating_sub(2));
    let x2 = if full {
        w0(&t, low.union(iv(m, n)))?
    } else {
        w0(&t, low)?.mul(&cycle(&t, m, n)?).mul(&cycle_rev(&t, m, n - 1)?)
    };
    finish(s, t, vec![x1, x2])
}

fn b_to_b(m: usize, n: usize, last: impl FnOnce(&Arc<CoxeterMatrix>) -> Result<ArtinElt>) -> Result<ArtinHomSpec> {
    need(2 <= m && m <= n, || format!("need 2 <= m <= n, got m={m}, n={n}"))?;
    let (s, t) = (CoxeterMatrix::from_label("B", m)?, CoxeterMatrix::from_label("B", n)?);
    let mut im = (1..m).map(|i| word(&t, &[i])).collect::<Result<Vec<_>>>()?;
    im.push(last(&t)?);
    finish(s, t, im)
}

/// `B_m → B_n`: `T̂_i ↦ T_i`, `T̂_m ↦ T_{w_0^{[m,n]}}`.
pub fn higher_rank_b(m: usize, n: usize) -> Result<ArtinHomSpec> {
    b_to_b(m, n, |t| w0(t, iv(m, n)))
}

/// `B_m → B_n`: `T̂_i ↦ T_i`, `T̂_m ↦ C_{m..n} C^rev_{m..n-1}`.
pub fn parabolic_b(m: usize, n: usize) -> Result<ArtinHomSpec> {
    b_to_b(m, n, |t| Ok(cycle(t, m, n)?.mul(&cycle_rev(t, m, n - 1)?)))
}

fn monomial_block(m: usize, i: usize) -> Mask {
    iv((i - 1) * m + 1, (i + 1) * m - 1)
}

/// Monomial braidings with block size `m`. `variant` `'a'`/`'b'`: `A_{n-1} → A_{nm-1}` with
/// `T_i ↦ T_{w_{J_i∖{im};J_i}}` resp. `T_{w_0^{J_i}}`; `'c'`/`'d'`: `B_n → B_{nm}` with the same
/// images and `T̂_n ↦ T_{w_{[(n-1)m+1,nm-1];[(n-1)m+1,nm]}}` resp. `T_{w_0^{[(n-1)m+1,nm]}}`.
pub fn monomial(variant: char, m: usize, n: usize) -> Result<ArtinHomSpec> {
    need(m >= 2 && n >= 2, || format!("need m, n >= 2, got m={m}, n={n}"))?;
    let parabolic = matches!(variant, 'a' | 'c');
    let (s, t) = match variant {
        'a' | 'b' => (CoxeterMatrix::from_label("A", n - 1)?, CoxeterMatrix::from_label("A", n * m - 1)?),
        'c' | 'd' => (CoxeterMatrix::from_label("B", n)?, CoxeterMatrix::from_label("B", n * m)?),
        _ => return Err(Error::Precondition(format!("unknown monomial variant {variant}"))),
    };
    let mut im = Vec::new();
    for i in 1..n {
        let j = monomial_block(m, i);
        im.push(if parabolic { wjk(&t, j.without(i * m), j)? } else { w0(&t, j)? });
    }
    if matches!(variant, 'c' | 'd') {
        let k = iv((n - 1) * m + 1, n * m);
        im.push(if parabolic { wjk(&t, k.without(n * m), k)? } else { w0(&t, k)? });
    }
    finish(s, t, im)
}

/// `I_2(2m(J)) → A_n`: `T̂_1 ↦ τ_1(J)`, `T̂_2 ↦ τ_0(J)` (`tilde = false`) or the transposition
/// products `τ̃_1(J)`, `τ̃_0(J)` (`tilde = true`); requires `g(J) = 1`.
pub fn tau(n: usize, j: &[usize], tilde: bool) -> Result<ArtinHomSpec> {
    let d = typea::tj_data(n, j)?;
    need(d.g == 1, || format!("g(J) = {} for J = {j:?}", d.g))?;
    let t = typea::type_a(n)?;
    let im = if tilde { vec![d.tau_tilde1, d.tau_tilde0] } else { vec![d.tau1, d.tau0] };
    finish(i2(d.order as u32)?, t, im)
}

/// `m(K)` for an interval `K ⊊ [1,n]` with `|K| > 1`.
pub fn main_adm_m(n: usize, k: Mask) -> usize {
    let flip = k.reflect(n as i64 + 1);
    if flip == k {
        (n - k.len()) / 2 + 1
    } else {
        n - k.len() + 2
    }
}

/// `I_2(2m(K)) → A_n`: `T̂_1 ↦ T_{w_0^{I'(K) ∪ K}}`, `T̂_2 ↦ T_{w_0^{I''(K)}}` where `I∖K = I' ⊔ I''`
/// is the splitting into self-orthogonal sets with `I' ⊥ K`.
pub fn main_adm(n: usize, k: Mask) -> Result<ArtinHomSpec> {
    let (a, b) = (k.min().unwrap_or(0), k.max().unwrap_or(0));
    need(k.len() > 1 && k == iv(a, b) && k != iv(1, n) && b <= n, || format!("{k} is not a proper interval of size > 1"))?;
    let t = typea::type_a(n)?;
    // I'' holds the vertices of I∖K at odd distance from K, I' those at even distance
    let mut i1 = Mask::EMPTY;
    let mut i2_ = Mask::EMPTY;
    for v in iv(1, n).minus(k).iter() {
        let dist = if v < a { a - v } else { v - b };
        if dist % 2 == 1 {
            i2_.insert(v);
        } else {
            i1.insert(v);
        }
    }
    let m = main_adm_m(n, k);
    finish(i2(2 * m as u32)?, t.clone(), vec![w0(&t, i1.union(k))?, w0(&t, i2_)?])
}

/// `A_2 → A_{3m-1}`: `T_1 ↦ T_{w_0^{[1,2m-1] ∪ (2m+J)}}`, `T_2 ↦ T_{w_0^{[m+1,3m-1] ∪ J}}`.
pub fn hom_a2(m: usize, j: Mask) -> Result<ArtinHomSpec> {
    need(m >= 1 && j.is_subset(iv(1, m - 1)), || format!("need m >= 1 and J ⊆ [1,m-1], got m={m}, J={j}"))?;
    let t = CoxeterMatrix::from_label("A", 3 * m - 1)?;
    let x1 = w0(&t, iv(1, 2 * m - 1).union(j.shift(2 * m as i64)))?;
    let x2 = w0(&t, iv(m + 1, 3 * m - 1).union(j))?;
    finish(CoxeterMatrix::from_label("A", 2)?, t, vec![x1, x2])
}

/// The three families of homomorphisms `B_2 → A_n`, `B_n`, `D_{n+1}` with parameters `m, J, K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomB2Target {
    A,
    B,
    D,
}

/// Checks the parameter constraints of [`hom_b2`].
pub fn hom_b2_params_ok(target: HomB2Target, m: usize, n: usize, j: Mask, k: Mask) -> Result<bool> {
    if !j.is_subset(iv(1, m.saturating_sub(1))) || (m == 0 && !j.is_empty()) {
        return Ok(false);
    }
    Ok(match target {
        HomB2Target::A => {
            if n + 1 < 4 * m || n < 1 {
                return Ok(false);
            }
            let a = typea::type_a(n)?;
            k.is_subset(Mask::interval(2 * m as i64 + 1, n as i64 - 2 * m as i64))
                && a.weakly_orthogonal(k, k.reflect(n as i64 + 1))
        }
        HomB2Target::B => n >= 2.max(2 * m) && k.is_subset(iv(2 * m + 1, n)),
        HomB2Target::D => {
            if n < 3.max(2 * m) || !k.is_subset(iv(2 * m + 1, n + 1)) {
                return Ok(false);
            }
            if (n - m) % 2 == 0 {
                let d = CoxeterMatrix::from_label("D", n + 1)?;
                let mut perm: Vec<usize> = (1..=n + 1).collect();
                perm.swap(n - 1, n);
                d.weakly_orthogonal(k, k.map(&perm))
            } else {
                true
            }
        }
    })
}

/// The image supports `(K_1, K_2)` of the homomorphism `B_2 → M` with parameters `m, J, K`.
pub fn hom_b2_supports(target: HomB2Target, m: usize, n: usize, j: Mask, k: Mask) -> (Mask, Mask) {
    let head = iv(1, (2 * m).saturating_sub(1));
    match target {
        HomB2Target::A => (
            head.union(iv(n + 2 - 2 * m, n)).union(k),
            iv(m + 1, n - m).union(j).union(j.reflect(n as i64 + 1)),
        ),
        HomB2Target::B => (head.union(k), iv(m + 1, n).union(j)),
        HomB2Target::D => (head.union(k), iv(m + 1, n + 1).union(j)),
    }
}

fn hom_b2_matrix(target: HomB2Target, n: usize) -> Result<Arc<CoxeterMatrix>> {
    match target {
        HomB2Target::A => CoxeterMatrix::from_label("A", n),
        HomB2Target::B => CoxeterMatrix::from_label("B", n),
        HomB2Target::D => CoxeterMatrix::from_label("D", n + 1),
    }
}

/// `B_2 → M` with `T̂_i ↦ T_{w_0^{K_i}}` for the supports of [`hom_b2_supports`].
pub fn hom_b2(target: HomB2Target, m: usize, n: usize, j: Mask, k: Mask) -> Result<ArtinHomSpec> {
    need(hom_b2_params_ok(target, m, n, j, k)?, || {
        format!("parameters m={m}, n={n}, J={j}, K={k} out of range for {target:?}")
    })?;
    let t = hom_b2_matrix(target, n)?;
    let (k1, k2) = hom_b2_supports(target, m, n, j, k);
    finish(CoxeterMatrix::from_label("B", 2)?, t.clone(), vec![w0(&t, k1)?, w0(&t, k2)?])
}

/// Parameter check for [`b2_a2n1`]: `0 <= k <= n-2`, `J = k+1-J ⊆ [1,k]`, `K = 3n+k+1-K ⊆ [n+k+2,2n-1]`.
pub fn b2_a2n1_params_ok(n: usize, k: usize, j: Mask, kk: Mask) -> bool {
    n >= 2
        && k + 2 <= n
        && j.is_subset(iv(1, k))
        && j.reflect(k as i64 + 1) == j
        && kk.is_subset(iv(n + k + 2, 2 * n - 1))
        && kk.reflect((3 * n + k + 1) as i64) == kk
}

/// Supports of [`b2_a2n1`].
pub fn b2_a2n1_supports(n: usize, k: usize, j: Mask, kk: Mask) -> (Mask, Mask) {
    (iv(1, n + k).union(kk), iv(k + 2, 2 * n - 1).union(j))
}

/// `B_2 → A_{2n-1}`: `T̂_1 ↦ T_{w_0^{[1,n+k] ∪ K}}`, `T̂_2 ↦ T_{w_0^{[k+2,2n-1] ∪ J}}`.
pub fn b2_a2n1(n: usize, k: usize, j: Mask, kk: Mask) -> Result<ArtinHomSpec> {
    need(b2_a2n1_params_ok(n, k, j, kk), || format!("parameters n={n}, k={k}, J={j}, K={kk} out of range"))?;
    let t = CoxeterMatrix::from_label("A", 2 * n - 1)?;
    let (a, b) = b2_a2n1_supports(n, k, j, kk);
    finish(CoxeterMatrix::from_label("B", 2)?, t.clone(), vec![w0(&t, a)?, w0(&t, b)?])
}

/// `B_2 → A_{2n-1}`: `T̂_1 ↦ T_{w_{[1,k];[1,n+k]}}`, `T̂_2 ↦ T_{w_{[k+2,n-1];[k+2,2n-1]}}`, or the
/// opposite pair `T_{w_{[n+1,n+k];[1,n+k]}}`, `T_{w_{[n+k+2,2n-1];[k+2,2n-1]}}` (`op = true`).
pub fn strange(n: usize, k: usize, op: bool) -> Result<ArtinHomSpec> {
    need(n >= 2 && k + 2 <= n, || format!("need 0 <= k <= n-2, got n={n}, k={k}"))?;
    let t = CoxeterMatrix::from_label("A", 2 * n - 1)?;
    let (j1, j2) = if op {
        (iv(n + 1, n + k), iv(n + k + 2, 2 * n - 1))
    } else {
        (iv(1, k), iv(k + 2, n - 1))
    };
    let x1 = wjk(&t, j1, iv(1, n + k))?;
    let x2 = wjk(&t, j2, iv(k + 2, 2 * n - 1))?;
    finish(CoxeterMatrix::from_label("B", 2)?, t, vec![x1, x2])
}

fn ef_data(m: u32, target: &str) -> Result<(Arc<CoxeterMatrix>, Mask, Mask)> {
    let t = ty(target)?;
    let full = t.full();
    let j1 = match (m, target) {
        (3, "E6") => full.without(5),
        (4, "F4") => full.without(4),
        (4, "E7") => full.without(5).without(6),
        (4, "E8") => full.without(7),
        _ => return Err(Error::Precondition(format!("no exceptional entry for m={m}, M={target}"))),
    };
    Ok((t, j1, full.without(1)))
}

/// `I_2(m) → M` exceptional: `T̂_i ↦ T_{w_{J_1∩J_2;J_i}}`.
pub fn ef_parabolic(m: u32, target: &str) -> Result<ArtinHomSpec> {
    let (t, j1, j2) = ef_data(m, target)?;
    let c = j1.inter(j2);
    finish(i2(m)?, t.clone(), vec![wjk(&t, c, j1)?, wjk(&t, c, j2)?])
}

/// `I_2(m) → M` exceptional: `T̂_1 ↦ T_{w_0^{J_1 ∪ K}}`, `T̂_2 ↦ T_{w_0^{J_2}}`; `K = {6}` only for `E_7`.
pub fn ef_standard(m: u32, target: &str, k: Mask) -> Result<ArtinHomSpec> {
    let (t, j1, j2) = ef_data(m, target)?;
    need(k.is_empty() || (target == "E7" && k == Mask::single(6)), || format!("K = {k} not allowed"))?;
    finish(i2(m)?, t.clone(), vec![w0(&t, j1.union(k))?, w0(&t, j2)?])
}

/// The composition of the `B_2 → F_4` standard homomorphism with the unfolding `F_4 → E_6`.
pub fn ef_f4_e6() -> Result<ArtinHomSpec> {
    compose(&unfold_f4_e6()?, &ef_standard(4, "F4", Mask::EMPTY)?)?.require_verified()
}

/// The diagram automorphism `τ = (1,5)(2,4)` of `E_6`.
pub fn e6_flip(j: Mask) -> Mask {
    j.map(&[5, 4, 3, 2, 1, 6])
}

/// `B_2 → E_6`: `T̂_1 ↦ T_{w_0^J}`, `T̂_2 ↦ Δ`, for `J ⊥_w τ(J)`.
pub fn ef_b2_e6(j: Mask) -> Result<ArtinHomSpec> {
    let t = ty("E6")?;
    need(j.is_subset(t.full()) && t.weakly_orthogonal(j, e6_flip(j)), || {
        format!("{j} is not weakly orthogonal to its flip")
    })?;
    finish(CoxeterMatrix::from_label("B", 2)?, t.clone(), vec![w0(&t, j)?, w0(&t, t.full())?])
}

/// `I_2(12) → A_{n-1}`: `T̂_1 ↦ T_1 T_3`, `T̂_2 ↦ T_{w_0^{[2,n-1]}}`.
pub fn sporadic_i12(n: usize) -> Result<ArtinHomSpec> {
    need(n >= 5, || format!("need n >= 5, got {n}"))?;
    let t = CoxeterMatrix::from_label("A", n - 1)?;
    finish(i2(12)?, t.clone(), vec![word(&t, &[1, 3])?, w0(&t, iv(2, n - 1))?])
}

/// `I_2(10) → A_n`: `T̂_1 ↦ T_1 T_n`, `T̂_2 ↦ T_{w_0^{[1,n-1]}}`.
pub fn sporadic_i10(n: usize) -> Result<ArtinHomSpec> {
    need(n >= 4, || format!("need n >= 4, got {n}"))?;
    let t = CoxeterMatrix::from_label("A", n)?;
    finish(i2(10)?, t.clone(), vec![word(&t, &[1, n])?, w0(&t, iv(1, n - 1))?])
}

/// `I_2(8) → D_5`: `T̂_1 ↦ T_i`, `T̂_2 ↦ T_{w_0^{[1,5]∖{i}}}`, `i ∈ {4,5}`.
pub fn sporadic_d5_i8(i: usize) -> Result<ArtinHomSpec> {
    need(i == 4 || i == 5, || format!("need i in {{4,5}}, got {i}"))?;
    let t = CoxeterMatrix::from_label("D", 5)?;
    finish(i2(8)?, t.clone(), vec![word(&t, &[i])?, w0(&t, t.full().without(i))?])
}

/// `I_2(10) → D_{n+1}`: `T̂_1 ↦ T_{w_0^{{1,i}}}`, `T̂_2 ↦ T_{w_0^{[2,n+1]∖{i}}}`, `n ∈ {4,5}`, `i ∈ {n,n+1}`.
pub fn sporadic_d_i10(n: usize, i: usize) -> Result<ArtinHomSpec> {
    need((n == 4 || n == 5) && (i == n || i == n + 1), || format!("need n in {{4,5}}, i in {{n,n+1}}"))?;
    let t = CoxeterMatrix::from_label("D", n + 1)?;
    let a = Mask::single(1).with(i);
    finish(i2(10)?, t.clone(), vec![w0(&t, a)?, w0(&t, iv(2, n + 1).without(i))?])
}

/// Family names understood by [`catalog`].
pub const FAMILIES: &[&str] = &[
    "unfold-b-a-odd",
    "unfold-b-a-even",
    "unfold-b-d",
    "unfold-f4-e6",
    "unfold-odd-dihedral",
    "bipartite",
    "unfold-i8-f4",
    "unfold-h3-d6",
    "unfold-h4-e8",
    "adm-dihedral-b",
    "adm-dihedral-b-std",
    "higher-rank-b",
    "parabolic-b",
    "monomial-a",
    "monomial-b",
    "monomial-c",
    "monomial-d",
    "tau",
    "tau-tilde",
    "main-adm",
    "hom-a2",
    "hom-b2-a",
    "hom-b2-b",
    "hom-b2-d",
    "b2-a2n-1",
    "strange",
    "strange-op",
    "ef-parabolic",
    "ef-standard",
    "ef-f4-e6",
    "ef-b2-e6",
    "sporadic-i12",
    "sporadic-i10",
    "sporadic-d5-i8",
    "sporadic-d-i10",
];

fn p_usize(p: &Value, key: &str) -> Result<usize> {
    p.get(key)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| Error::Precondition(format!("missing integer parameter `{key}`")))
}

fn p_set(p: &Value, key: &str) -> Result<Mask> {
    match p.get(key) {
        None | Some(Value::Null) => Ok(Mask::EMPTY),
        Some(Value::Array(a)) => a
            .iter()
            .map(|x| {
                x.as_u64()
                    .filter(|&v| (1..=32).contains(&v))
                    .map(|v| v as usize)
                    .ok_or_else(|| Error::Precondition(format!("bad element in `{key}`")))
            })
            .collect(),
        _ => Err(Error::Precondition(format!("`{key}` must be an array of indices"))),
    }
}

fn p_str<'a>(p: &'a Value, key: &str) -> Result<&'a str> {
    p.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Precondition(format!("missing string parameter `{key}`")))
}

/// Builds and verifies a family member; `params` is a JSON object such as `{"m":2,"n":3}`,
/// with subsets given as arrays of indices.
pub fn catalog(family: &str, params: &Value) -> Result<ArtinHomSpec> {
    let p = params;
    match family {
        "unfold-b-a-odd" => unfold_b_a_odd(p_usize(p, "n")?),
        "unfold-b-a-even" => unfold_b_a_even(p_usize(p, "n")?),
        "unfold-b-d" => unfold_b_d(p_usize(p, "n")?),
        "unfold-f4-e6" => unfold_f4_e6(),
        "unfold-odd-dihedral" => unfold_odd_dihedral(p_usize(p, "m")?),
        "bipartite" => bipartite(p_str(p, "type")?),
        "unfold-i8-f4" => unfold_i8_f4(),
        "unfold-h3-d6" => unfold_h3_d6(),
        "unfold-h4-e8" => unfold_h4_e8(),
        "adm-dihedral-b" => adm_dihedral_b(p_usize(p, "m")?, p_usize(p, "n")?, false),
        "adm-dihedral-b-std" => adm_dihedral_b(p_usize(p, "m")?, p_usize(p, "n")?, true),
        "higher-rank-b" => higher_rank_b(p_usize(p, "m")?, p_usize(p, "n")?),
        "parabolic-b" => parabolic_b(p_usize(p, "m")?, p_usize(p, "n")?),
        "monomial-a" | "monomial-b" | "monomial-c" | "monomial-d" => {
            let v = family.chars().last().expect("nonempty");
            monomial(v, p_usize(p, "m")?, p_usize(p, "n")?)
        }
        "tau" | "tau-tilde" => tau(p_usize(p, "n")?, &p_set(p, "J")?.to_vec(), family == "tau-tilde"),
        "main-adm" => main_adm(p_usize(p, "n")?, p_set(p, "K")?),
        "hom-a2" => hom_a2(p_usize(p, "m")?, p_set(p, "J")?),
        "hom-b2-a" | "hom-b2-b" | "hom-b2-d" => {
            let t = match family {
                "hom-b2-a" => HomB2Target::A,
                "hom-b2-b" => HomB2Target::B,
                _ => HomB2Target::D,
            };
            hom_b2(t, p_usize(p, "m")?, p_usize(p, "n")?, p_set(p, "J")?, p_set(p, "K")?)
        }
        "b2-a2n-1" => b2_a2n1(p_usize(p, "n")?, p_usize(p, "k")?, p_set(p, "J")?, p_set(p, "K")?),
        "strange" | "strange-op" => strange(p_usize(p, "n")?, p_usize(p, "k")?, family == "strange-op"),
        "ef-parabolic" => ef_parabolic(p_usize(p, "m")? as u32, p_str(p, "type")?),
        "ef-standard" => ef_standard(p_usize(p, "m")? as u32, p_str(p, "type")?, p_set(p, "K")?),
        "ef-f4-e6" => ef_f4_e6(),
        "ef-b2-e6" => ef_b2_e6(p_set(p, "J")?),
        "sporadic-i12" => sporadic_i12(p_usize(p, "n")?),
        "sporadic-i10" => sporadic_i10(p_usize(p, "n")?),
        "sporadic-d5-i8" => sporadic_d5_i8(p_usize(p, "i")?),
        "sporadic-d-i10" => sporadic_d_i10(p_usize(p, "n")?, p_usize(p, "i")?),
        _ => Err(Error::Precondition(format!("unknown family `{family}`"))),
    }
}

/// A family name with parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub family: &'static str,
    pub params: Value,
}

fn entry(family: &'static str, params: Value) -> CatalogEntry {
    CatalogEntry { family, params }
}

fn sets(m: Mask) -> Vec<usize> {
    m.to_vec()
}

/// Every family member in the verification ranges: unfoldings at minimal ranks, dihedral and
/// higher-rank `B` families for `n <= 5`, monomial braidings with `mn <= 12`, the `A_2` family for
/// `m <= 4`, the `B_2` families with target rank `<= 6`, the `A_{2n-1}` special family and the
/// strange homomorphisms for `n <= 4`, the exceptional and sporadic homomorphisms.
pub fn verification_instances() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.push(entry("unfold-b-a-odd", json!({"n": n})));
        out.push(entry("unfold-b-a-even", json!({"n": n})));
    }
    for n in 3..=4 {
        out.push(entry("unfold-b-d", json!({"n": n})));
    }
    out.push(entry("unfold-f4-e6", json!({})));
    for m in 1..=3 {
        out.push(entry("unfold-odd-dihedral", json!({"m": m})));
    }
    for t in ["A3", "A5", "B2", "B3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2(6)"] {
        out.push(entry("bipartite", json!({"type": t})));
    }
    out.push(entry("unfold-i8-f4", json!({})));
    out.push(entry("unfold-h3-d6", json!({})));
    out.push(entry("unfold-h4-e8", json!({})));
    for n in 2..=5 {
        for m in 2..=n {
            out.push(entry("adm-dihedral-b", json!({"m": m, "n": n})));
            out.push(entry("adm-dihedral-b-std", json!({"m": m, "n": n})));
            out.push(entry("higher-rank-b", json!({"m": m, "n": n})));
            out.push(entry("parabolic-b", json!({"m": m, "n": n})));
        }
    }
    for m in 2..=6 {
        for n in 2..=6 {
            if m * n <= 12 {
                for v in ["monomial-a", "monomial-b", "monomial-c", "monomial-d"] {
                    out.push(entry(v, json!({"m": m, "n": n})));
                }
            }
        }
    }
    for n in 2..=6 {
        for rest in Mask::interval(2, n as i64).subsets() {
            let j: Vec<usize> = std::iter::once(1).chain(rest.iter()).chain([n + 1]).collect();
            if typea::IntervalSetJ::new(n, &j).map(|s| s.g() == 1).unwrap_or(false) {
                out.push(entry("tau", json!({"n": n, "J": j})));
                out.push(entry("tau-tilde", json!({"n": n, "J": j})));
            }
        }
    }
    for n in 3..=6 {
        for a in 1..=n {
            for b in a + 1..=n {
                if (a, b) != (1, n) {
                    out.push(entry("main-adm", json!({"n": n, "K": sets(iv(a, b))})));
                }
            }
        }
    }
    for m in 1..=4 {
        for j in iv(1, m - 1).subsets() {
            out.push(entry("hom-a2", json!({"m": m, "J": sets(j)})));
        }
    }
    for (fam, t, max_n) in [("hom-b2-a", HomB2Target::A, 6usize), ("hom-b2-b", HomB2Target::B, 6), ("hom-b2-d", HomB2Target::D, 5)] {
        for n in 1..=max_n {
            for m in 0..=n {
                for j in iv(1, m.saturating_sub(1)).subsets() {
                    for k in iv(1, n + 1).subsets() {
                        if hom_b2_params_ok(t, m, n, j, k).unwrap_or(false) {
                            out.push(entry(fam, json!({"m": m, "n": n, "J": sets(j), "K": sets(k)})));
                        }
                    }
                }
            }
        }
    }
    for n in 2..=4 {
        for k in 0..=n - 2 {
            for j in iv(1, k).subsets() {
                for kk in iv(n + k + 2, 2 * n - 1).subsets() {
                    if b2_a2n1_params_ok(n, k, j, kk) {
                        out.push(entry("b2-a2n-1", json!({"n": n, "k": k, "J": sets(j), "K": sets(kk)})));
                    }
                }
            }
            out.push(entry("strange", json!({"n": n, "k": k})));
            out.push(entry("strange-op", json!({"n": n, "k": k})));
        }
    }
    out.push(entry("ef-parabolic", json!({"m": 3, "type": "E6"})));
    for t in ["F4", "E7", "E8"] {
        out.push(entry("ef-parabolic", json!({"m": 4, "type": t})));
    }
    out.push(entry("ef-standard", json!({"m": 3, "type": "E6"})));
    for t in ["F4", "E7", "E8"] {
        out.push(entry("ef-standard", json!({"m": 4, "type": t})));
    }
    out.push(entry("ef-standard", json!({"m": 4, "type": "E7", "K": [6]})));
    out.push(entry("ef-f4-e6", json!({})));
    let e6 = CoxeterMatrix::from_label("E", 6).expect("E6");
    for j in e6.full().subsets() {
        if e6.weakly_orthogonal(j, e6_flip(j)) {
            out.push(entry("ef-b2-e6", json!({"J": sets(j)})));
        }
    }
    for n in 5..=6 {
        out.push(entry("sporadic-i12", json!({"n": n})));
    }
    for n in 4..=5 {
        out.push(entry("sporadic-i10", json!({"n": n})));
        for i in [n, n + 1] {
            out.push(entry("sporadic-d-i10", json!({"n": n, "i": i})));
        }
    }
    for i in [4, 5] {
        out.push(entry("sporadic-d5-i8", json!({"i": i})));
    }
    out
}
