//! Counting formulas for standard homomorphism families and the direct enumerations they
//! are checked against.

use super::catalog::{b2_a2n1_params_ok, b2_a2n1_supports, hom_b2_params_ok, hom_b2_supports, HomB2Target};
use crate::coxeter::{CoxeterMatrix, Mask};
use crate::error::{Error, Result};
use crate::hecke;
use std::collections::BTreeSet;

/// Families understood by [`count_formula`] and [`count_enumerate`].
pub const COUNT_FAMILIES: &[&str] = &[
    "w", "u", "h", "self-flip", "hom-a2", "hom-b2-a", "hom-b2-b", "hom-b2-d", "b2-a2n-1", "multipar-a",
];

fn two_term(a0: u64, a1: u64, r: usize) -> u64 {
    let (mut a, mut b) = (a0, a1);
    for _ in 0..r {
        let c = 2 * (a + b);
        a = b;
        b = c;
    }
    a
}

/// `w_0 = 1`, `w_1 = 4`, `w_{r+1} = 2(w_r + w_{r-1})`.
pub fn w_seq(r: usize) -> u64 {
    two_term(1, 4, r)
}

/// `u_0 = 1`, `u_1 = 2`, `u_{r+1} = 2(u_r + u_{r-1})`.
pub fn u_seq(r: usize) -> u64 {
    two_term(1, 2, r)
}

/// `h_r = w_{r+1}/2 - (r mod 2) 2^{(r-1)/2}`.
pub fn h_seq(r: usize) -> u64 {
    let c = if r % 2 == 1 { 1u64 << ((r - 1) / 2) } else { 0 };
    w_seq(r + 1) / 2 - c
}

/// `H_n = w_{⌊(n+3)/2⌋}/2 - (⌊(n+1)/2⌋ mod 2) 2^{⌊(n-1)/2⌋/2}`.
pub fn h_n(n: usize) -> u64 {
    let r = (n + 1) / 2;
    let c = if r % 2 == 1 { 1u64 << ((n - 1) / 2 / 2) } else { 0 };
    w_seq((n + 3) / 2) / 2 - c
}

fn pow2(e: usize) -> u64 {
    1u64 << e
}

/// Closed-form count for `family` at parameter `n`:
/// `w`, `u`, `h` the auxiliary sequences; `self-flip` the number `2^{⌊n/2⌋}` of flip-invariant
/// subsets of `[1,n-1]`; `hom-a2` the count `2^n` of the `A_2` family into `A_{3n-1}`;
/// `hom-b2-a`, `hom-b2-b`, `hom-b2-d`, `b2-a2n-1` the `B_2` family counts into `A_n`, `B_n`,
/// `D_{n+1}`, `A_{2n-1}`; `multipar-a` the recursion `a_n = 4a_{n-1} - 2a_{n-2}`.
pub fn count_formula(family: &str, n: usize) -> Result<u64> {
    let bad = |lo: usize| Error::Precondition(format!("{family} needs n >= {lo}, got {n}"));
    Ok(match family {
        "w" => w_seq(n),
        "u" => u_seq(n),
        "h" => h_seq(n),
        "self-flip" => {
            if n < 2 {
                return Err(bad(2));
            }
            pow2(n / 2)
        }
        "hom-a2" => {
            if n < 1 {
                return Err(bad(1));
            }
            pow2(n)
        }
        "hom-b2-a" => {
            if n < 1 {
                return Err(bad(1));
            }
            h_n(n)
        }
        "hom-b2-b" => {
            if n < 2 {
                return Err(bad(2));
            }
            3 * pow2(n) - pow2(n.div_ceil(2))
        }
        "hom-b2-d" => {
            if n < 3 {
                return Err(bad(3));
            }
            if n % 2 == 1 {
                let c = 5 - ((n - 1) / 2 % 2) as u64;
                (34 * pow2(n - 1) - c * pow2((n + 1) / 2)) / 3
            } else {
                let c = 4 + (n / 2 % 2) as u64;
                (29 * pow2(n - 1) - c * pow2(n / 2)) / 3
            }
        }
        "b2-a2n-1" => {
            if n < 2 {
                return Err(bad(2));
            }
            if n % 2 == 0 {
                pow2(n / 2) * (3 * n as u64 / 2 - 2)
            } else {
                pow2(n.div_ceil(2)) * (n as u64 - 1)
            }
        }
        "multipar-a" => {
            let (mut a, mut b) = (1i64, 2i64);
            for _ in 0..n {
                let c = 4 * b - 2 * a;
                a = b;
                b = c;
            }
            a as u64
        }
        _ => return Err(Error::Precondition(format!("unknown count family `{family}`"))),
    })
}

fn type_a(n: usize) -> Result<std::sync::Arc<CoxeterMatrix>> {
    if n == 0 {
        CoxeterMatrix::new(vec![])
    } else {
        CoxeterMatrix::from_label("A", n)
    }
}

/// Parameter tuples of a `B_2` family, as `(m, J, K)` or `(k, J, K)`.
pub fn b2_family_params(family: &str, n: usize) -> Result<Vec<(usize, Mask, Mask)>> {
    let mut out = Vec::new();
    let iv = |a: usize, b: usize| Mask::interval(a as i64, b as i64);
    match family {
        "hom-b2-a" | "hom-b2-b" | "hom-b2-d" => {
            let t = match family {
                "hom-b2-a" => HomB2Target::A,
                "hom-b2-b" => HomB2Target::B,
                _ => HomB2Target::D,
            };
            for m in 0..=n {
                for j in iv(1, m.saturating_sub(1)).subsets() {
                    for k in iv(1, n + 1).subsets() {
                        if hom_b2_params_ok(t, m, n, j, k)? {
                            out.push((m, j, k));
                        }
                    }
                }
            }
        }
        "b2-a2n-1" => {
            for k in 0..=n.saturating_sub(2) {
                for j in iv(1, k).subsets() {
                    for kk in iv(n + k + 2, 2 * n - 1).subsets() {
                        if b2_a2n1_params_ok(n, k, j, kk) {
                            out.push((k, j, kk));
                        }
                    }
                }
            }
        }
        _ => return Err(Error::Precondition(format!("`{family}` is not a B2 family"))),
    }
    Ok(out)
}

/// Distinct ordered image supports `(K_1, K_2)` of a `B_2` family closed under the swap of the
/// two source generators.
pub fn b2_family_image_pairs(family: &str, n: usize) -> Result<BTreeSet<(Mask, Mask)>> {
    let mut out = BTreeSet::new();
    for (a, j, k) in b2_family_params(family, n)? {
        let (k1, k2) = match family {
            "hom-b2-a" => hom_b2_supports(HomB2Target::A, a, n, j, k),
            "hom-b2-b" => hom_b2_supports(HomB2Target::B, a, n, j, k),
            "hom-b2-d" => hom_b2_supports(HomB2Target::D, a, n, j, k),
            _ => b2_a2n1_supports(n, a, j, k),
        };
        out.insert((k1, k2));
        out.insert((k2, k1));
    }
    Ok(out)
}

/// Direct enumeration matching [`count_formula`]: weakly orthogonal pairs in `A_n` for `w`;
/// `K ⊥_w n+1-K` in `A_{2n}` for `u` (so that `⌊(2n+1)/2⌋ = n`); the `B_2` families count
/// parameter tuples twice for the swap of the source generators.
pub fn count_enumerate(family: &str, n: usize) -> Result<u64> {
    Ok(match family {
        "w" => {
            let a = type_a(n)?;
            let subs: Vec<Mask> = a.full().subsets().collect();
            subs.iter()
                .map(|&j| subs.iter().filter(|&&k| a.weakly_orthogonal(j, k)).count() as u64)
                .sum()
        }
        "u" => u_subsets(2 * n)?,
        "h" => {
            // h_r = H_n for n = 2r - 1 (r >= 1), via the A-family parameters
            if n == 0 {
                return Err(Error::Precondition("h enumerated for r >= 1".into()));
            }
            2 * b2_family_params("hom-b2-a", 2 * n - 1)?.len() as u64
        }
        "self-flip" => {
            let m = n as i64;
            Mask::interval(1, m - 1)
                .subsets()
                .filter(|j| j.reflect(m) == *j)
                .count() as u64
        }
        "hom-a2" => 2 * Mask::interval(1, n as i64 - 1).subsets().count() as u64,
        "hom-b2-a" | "hom-b2-b" | "hom-b2-d" | "b2-a2n-1" => 2 * b2_family_params(family, n)?.len() as u64,
        "multipar-a" => {
            if n == 0 {
                1
            } else {
                hecke::multipar_enumerate(&type_a(n)?)?.eval(1) as u64
            }
        }
        _ => return Err(Error::Precondition(format!("unknown count family `{family}`"))),
    })
}

/// `|{K ⊆ [1,n] : K ⊥_w n+1-K}|`, equal to `u_{⌊(n+1)/2⌋}`.
pub fn u_subsets(n: usize) -> Result<u64> {
    let a = type_a(n)?;
    Ok(a.full()
        .subsets()
        .filter(|&k| a.weakly_orthogonal(k, k.reflect(n as i64 + 1)))
        .count() as u64)
}
