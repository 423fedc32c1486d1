//! Special elements of the braid monoid `Br⁺_{n+1}` (type `A_n`).

use super::group::ArtinGrpElt;
use super::monoid::ArtinElt;
use crate::coxeter::{CoxeterMatrix, Mask};
use crate::error::{Error, Result};
use std::sync::Arc;

/// The matrix of type `A_n`.
pub fn type_a(n: usize) -> Result<Arc<CoxeterMatrix>> {
    CoxeterMatrix::from_label("A", n)
}

fn gens(m: &Arc<CoxeterMatrix>, letters: impl IntoIterator<Item = usize>) -> Result<ArtinElt> {
    let w: Vec<usize> = letters.into_iter().collect();
    ArtinElt::from_word(m, &w)
}

/// `C_{i..j} = T_i T_{i+1} ... T_j` (identity when `i > j`).
pub fn cycle(m: &Arc<CoxeterMatrix>, i: usize, j: usize) -> Result<ArtinElt> {
    gens(m, i..=j)
}

/// `T_j T_{j-1} ... T_i` (identity when `i > j`).
pub fn cycle_rev(m: &Arc<CoxeterMatrix>, i: usize, j: usize) -> Result<ArtinElt> {
    gens(m, (i..=j).rev())
}

/// `C^{(a)}_{i..j} = T_i^a ... T_j^a` for `a = ±1`, as a group element.
pub fn cycle_signed(m: &Arc<CoxeterMatrix>, i: usize, j: usize, inverse: bool) -> Result<ArtinGrpElt> {
    let mut out = ArtinGrpElt::identity(m)?;
    for k in i..=j {
        out = out.mul(&ArtinGrpElt::generator(m, k, inverse)?);
    }
    Ok(out)
}

/// `T_{w_0^{[a,b]}}` in type `A_n`; identity for an empty interval.
pub fn interval_longest(m: &Arc<CoxeterMatrix>, a: usize, b: usize) -> Result<ArtinElt> {
    ArtinElt::garside_element(m, Mask::interval(a as i64, b as i64))
}

/// The square-free lift `T_{(i,j)}` of the transposition `(i,j)` in `Br⁺_{n+1}`;
/// the identity when `i >= j`.
pub fn transposition(n: usize, i: usize, j: usize) -> Result<ArtinElt> {
    let m = type_a(n)?;
    transposition_in(&m, i, j)
}

/// [`transposition`] over a prebuilt `A_n` matrix.
pub fn transposition_in(m: &Arc<CoxeterMatrix>, i: usize, j: usize) -> Result<ArtinElt> {
    let n = m.rank();
    if i == 0 || j == 0 || i > n + 1 || j > n + 1 {
        return Err(Error::Precondition(format!("({i},{j}) outside [1,{}]", n + 1)));
    }
    if i >= j {
        return Ok(ArtinElt::identity(m));
    }
    // T_{(i,j)} = C_{i..j-1} C^rev_{i..j-2}
    Ok(cycle(m, i, j - 1)?.mul(&cycle_rev(m, i, j - 2)?))
}

/// A subset `J ⊆ [1,n+1]` with its derived combinatorial data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSetJ {
    pub n: usize,
    /// Sorted elements of `J`.
    pub elems: Vec<usize>,
}

impl IntervalSetJ {
    pub fn new(n: usize, j: &[usize]) -> Result<IntervalSetJ> {
        let mut elems = j.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&x| x == 0 || x > n + 1) {
            return Err(Error::Precondition(format!("J = {j:?} not inside [1,{}]", n + 1)));
        }
        Ok(IntervalSetJ { n, elems })
    }

    pub fn from_mask(n: usize, j: Mask) -> Result<IntervalSetJ> {
        Self::new(n, &j.to_vec())
    }

    pub fn mask(&self) -> Mask {
        self.elems.iter().collect()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// `{1, n+1} ⊆ J`.
    pub fn has_ends(&self) -> bool {
        self.elems.first() == Some(&1) && self.elems.last() == Some(&(self.n + 1))
    }

    /// Number of gaps of `J`: `|{j ∈ J : min J < j <= max J, j-1 ∉ J}|`.
    /// With this count `g(J) = 1` exactly for `J = [1,a] ∪ [b+1,n+1]`, `a < b <= n`.
    pub fn g(&self) -> usize {
        let (Some(&lo), Some(&hi)) = (self.elems.first(), self.elems.last()) else {
            return 0;
        };
        self.elems
            .iter()
            .filter(|&&j| lo < j && j <= hi && !self.elems.contains(&(j - 1)))
            .count()
    }

    /// `σ̃(J) = {n+2-j : j ∈ J}`.
    pub fn flip(&self) -> IntervalSetJ {
        let e: Vec<usize> = self.elems.iter().map(|&j| self.n + 2 - j).collect();
        IntervalSetJ::new(self.n, &e).expect("flip stays in range")
    }

    pub fn is_symmetric(&self) -> bool {
        self.flip() == *self
    }

    /// `m(J)`: `|J|/2` (rounded down) when `J = σ̃(J)`, otherwise `|J|`.
    pub fn m(&self) -> usize {
        if self.is_symmetric() {
            self.len() / 2
        } else {
            self.len()
        }
    }

    /// The dihedral order `2m(J)`: `|J|` when `J = σ̃(J)`, otherwise `2|J|`.
    pub fn dihedral_order(&self) -> usize {
        if self.is_symmetric() {
            self.len()
        } else {
            2 * self.len()
        }
    }

    /// `(a, b)` with `J = [1,a] ∪ [b+1,n+1]`, when `J` has this shape with `a < b`.
    pub fn gap(&self) -> Option<(usize, usize)> {
        if !self.has_ends() || self.g() != 1 {
            return None;
        }
        let a = (1..).take_while(|k| self.elems.contains(k)).last()?;
        let b = self.elems.iter().copied().find(|&j| j > a)? - 1;
        Some((a, b))
    }

    /// `β_-(J)` for `J = {j_0 = 1 < ... < j_m = n+1}`.
    pub fn beta_minus(&self) -> Option<usize> {
        let m = self.len().checked_sub(1)?;
        (0..m).filter(|&k| self.elems[k] == k + 1).max().map(|k| k + 1)
    }

    /// `β_+(J)`: least `k ∈ [1,m-1]` with `j_t = j_{m-1} - m + t + 1` for all `t ∈ [k, m-1]`.
    pub fn beta_plus(&self) -> Option<usize> {
        let m = self.len().checked_sub(1)?;
        if m < 1 {
            return None;
        }
        let top = self.elems[m - 1] as i64;
        (1..m).find(|&k| (k..m).all(|t| self.elems[t] as i64 == top - m as i64 + t as i64 + 1))
    }
}

/// The data attached to `J` with `{1,n+1} ⊆ J ⊆ [1,n+1]`.
#[derive(Clone, Debug)]
pub struct TjData {
    pub set: IntervalSetJ,
    pub t_j: ArtinElt,
    /// `τ_1(J)` and `τ_0(J)`: alternating products of interval Garside elements.
    pub tau1: ArtinElt,
    pub tau0: ArtinElt,
    /// `τ̃_1(J)` and `τ̃_0(J)`: alternating products of transpositions, `T_J = τ̃_1 τ̃_0`.
    pub tau_tilde1: ArtinElt,
    pub tau_tilde0: ArtinElt,
    pub g: usize,
    /// `m(J)`; meaningful when `g(J) <= 1`.
    pub m: usize,
    /// `2m(J)`, exact also for odd symmetric `J`.
    pub order: usize,
}

/// Computes `T_J`, `τ_k(J)`, `τ̃_k(J)`, `g(J)` and `m(J)`.
pub fn tj_data(n: usize, j: &[usize]) -> Result<TjData> {
    let set = IntervalSetJ::new(n, j)?;
    if !set.has_ends() {
        return Err(Error::Precondition(format!("J = {j:?} must contain 1 and {}", n + 1)));
    }
    let m = type_a(n)?;
    let e = &set.elems;
    let mut tt = [ArtinElt::identity(&m), ArtinElt::identity(&m)];
    let mut tau = [ArtinElt::identity(&m), ArtinElt::identity(&m)];
    for r in 1..e.len() {
        // 1-based index r of j_r is r, parity r mod 2; j_{r+1} = e[r]
        let (a, b) = (e[r - 1], e[r]);
        let k = r % 2;
        tt[k] = tt[k].mul(&transposition_in(&m, a, b)?);
        tau[k] = tau[k].mul(&interval_longest(&m, a, b - 1)?);
    }
    let [tt0, tt1] = tt;
    let [tau0, tau1] = tau;
    let t_j = tt1.mul(&tt0);
    Ok(TjData {
        g: set.g(),
        m: set.m(),
        order: set.dihedral_order(),
        set,
        t_j,
        tau1,
        tau0,
        tau_tilde1: tt1,
        tau_tilde0: tt0,
    })
}

/// `T_J` alone.
pub fn t_j(n: usize, j: &[usize]) -> Result<ArtinElt> {
    Ok(tj_data(n, j)?.t_j)
}

/// The conjugator `U(J) = ←∏_{k=1}^{m} C^{((-1)^k)}_{(k+1)..(j_k - 1)}` for
/// `J = {1 = j_0 < j_1 < ... < j_{m+1} = n+1}`.
pub fn u_conjugator(n: usize, j: &[usize]) -> Result<ArtinGrpElt> {
    let set = IntervalSetJ::new(n, j)?;
    if !set.has_ends() {
        return Err(Error::Precondition(format!("J = {j:?} must contain 1 and {}", n + 1)));
    }
    let m = type_a(n)?;
    let e = &set.elems;
    let inner = e.len().saturating_sub(2);
    let mut out = ArtinGrpElt::identity(&m)?;
    for k in 1..=inner {
        let c = cycle_signed(&m, k + 1, e[k] - 1, k % 2 == 1)?;
        out = c.mul(&out);
    }
    Ok(out)
}

/// `X_{n,k} = T_{w_{[1,k];[1,n+k]}} T_{w_{[k+2,n-1];[k+2,2n-1]}}` in `Br⁺_{2n}`.
pub fn x_nk(n: usize, k: usize) -> Result<ArtinElt> {
    if n < 2 || k + 2 > n {
        return Err(Error::Precondition(format!("need 0 <= k <= n-2, got n={n}, k={k}")));
    }
    let m = type_a(2 * n - 1)?;
    let iv = |a: usize, b: usize| Mask::interval(a as i64, b as i64);
    let first = ArtinGrpElt::parabolic_braid(&m, iv(1, k), iv(1, n + k))?;
    let second = ArtinGrpElt::parabolic_braid(&m, iv(k + 2, n - 1), iv(k + 2, 2 * n - 1))?;
    Ok(first.mul(&second).to_positive().expect("product of positives"))
}
