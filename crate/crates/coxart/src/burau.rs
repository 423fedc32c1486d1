//! The modified Burau representation of `Br_{n+1}` over exact rationals at a fixed `q`.

use crate::artin::typea::{tj_data, type_a};
use crate::artin::{ArtinElt, ArtinGrpElt};
use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::sync::Arc;

pub type Rat = BigRational;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// A square matrix over `ℚ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    pub dim: usize,
    /// Row-major entries.
    pub entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(dim: usize) -> RatMatrix {
        RatMatrix { dim, entries: vec![Rat::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> RatMatrix {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rat::one();
        }
        m
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        let d = self.dim;
        let mut out = Self::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * d + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &RatMatrix) -> RatMatrix {
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect();
        RatMatrix { dim: self.dim, entries }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix { dim: self.dim, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, k: usize) -> RatMatrix {
        let mut out = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        out
    }

    pub fn transpose(&self) -> RatMatrix {
        let d = self.dim;
        let mut out = Self::zero(d);
        for r in 0..d {
            for c in 0..d {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn trace(&self) -> Rat {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Determinant by fraction-level Gaussian elimination.
    pub fn det(&self) -> Rat {
        let d = self.dim;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..d {
            let Some(p) = (col..d).find(|&r| !a.get(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                for c in 0..d {
                    a.entries.swap(p * d + c, col * d + c);
                }
                det = -det;
            }
            let piv = a.get(col, col).clone();
            det *= &piv;
            for r in col + 1..d {
                let f = a.get(r, col) / &piv;
                if f.is_zero() {
                    continue;
                }
                for c in col..d {
                    let v = a.get(col, c) * &f;
                    a.entries[r * d + c] -= v;
                }
            }
        }
        det
    }

    /// Rows of rational strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        json!(rows)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A polynomial over `ℚ`, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly(pub Vec<Rat>);

impl RatPoly {
    fn trim(mut self) -> RatPoly {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn one() -> RatPoly {
        RatPoly(vec![Rat::one()])
    }

    /// `t^k - c`.
    pub fn binomial(k: usize, c: Rat) -> RatPoly {
        let mut v = vec![Rat::zero(); k + 1];
        v[0] = -c;
        v[k] += Rat::one();
        RatPoly(v).trim()
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return RatPoly(Vec::new());
        }
        let mut v = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly(v).trim()
    }

    pub fn pow(&self, k: usize) -> RatPoly {
        (0..k).fold(RatPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            let coef = if k > 0 && c.is_one() {
                String::new()
            } else if k > 0 && (-c).is_one() {
                "-".into()
            } else if k > 0 {
                format!("({c})*")
            } else {
                c.to_string()
            };
            parts.push(format!("{coef}{mono}"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Characteristic polynomial `det(t·id - A)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(a: &RatMatrix) -> RatPoly {
    let n = a.dim;
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut m = RatMatrix::zero(n);
    let id = RatMatrix::identity(n);
    for k in 1..=n {
        m = a.mul(&m).add(&id.scale(&c[n + 1 - k]));
        let am = a.mul(&m);
        c[n - k] = -am.trace() / int(k as i64);
    }
    RatPoly(c).trim()
}

fn check_q(q: &Rat) -> Result<()> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::Precondition(format!("q = {q} must avoid 0 and ±1")));
    }
    Ok(())
}

/// Matrix of `T_i` on `ℚ^{n+1}`: `T_i(e_j) = e_j - (q δ_{ij} - δ_{i+1,j})(q e_i - e_{i+1})`.
pub fn generator_matrix(n: usize, q: &Rat, i: usize) -> Result<RatMatrix> {
    check_q(q)?;
    if i == 0 || i > n {
        return Err(Error::LetterOutOfRange { letter: i, rank: n });
    }
    let mut m = RatMatrix::identity(n + 1);
    let (a, b) = (i - 1, i);
    m.set(a, a, Rat::one() - q * q);
    m.set(b, a, q.clone());
    m.set(a, b, q.clone());
    m.set(b, b, Rat::zero());
    Ok(m)
}

/// Image of a positive word.
pub fn burau_word(n: usize, q: &Rat, word: &[usize]) -> Result<RatMatrix> {
    let gens: Vec<RatMatrix> = (1..=n).map(|i| generator_matrix(n, q, i)).collect::<Result<_>>()?;
    for &i in word {
        if i == 0 || i > n {
            return Err(Error::LetterOutOfRange { letter: i, rank: n });
        }
    }
    Ok(word.iter().fold(RatMatrix::identity(n + 1), |acc, &i| acc.mul(&gens[i - 1])))
}

fn ensure_type_a(m: &Arc<CoxeterMatrix>) -> Result<usize> {
    let n = m.rank();
    if **m != *type_a(n)? {
        return Err(Error::Precondition("the Burau representation needs a type A ambient".into()));
    }
    Ok(n)
}

/// Image of a positive braid.
pub fn burau_image(q: &Rat, a: &ArtinElt) -> Result<RatMatrix> {
    let n = ensure_type_a(a.matrix())?;
    burau_word(n, q, &a.word())
}

/// Image of a signed word, using `T_i^{-1} = q^{-2} T_i + (1 - q^{-2}) id`.
pub fn burau_signed_word(n: usize, q: &Rat, word: &[i64]) -> Result<RatMatrix> {
    check_q(q)?;
    let qi2 = (q * q).recip();
    let id = RatMatrix::identity(n + 1);
    let mut acc = id.clone();
    for &l in word {
        let i = l.unsigned_abs() as usize;
        let g = generator_matrix(n, q, i)?;
        let g = if l < 0 { g.scale(&qi2).add(&id.scale(&(Rat::one() - &qi2))) } else { g };
        acc = acc.mul(&g);
    }
    Ok(acc)
}

/// Image of a group element `Δ^{-k} P`.
pub fn burau_group(q: &Rat, g: &ArtinGrpElt) -> Result<RatMatrix> {
    let n = ensure_type_a(g.matrix())?;
    let dword = ArtinElt::garside_element(g.matrix(), g.matrix().full())?.word();
    let inv: Vec<i64> = dword.iter().rev().map(|&i| -(i as i64)).collect();
    let dinv = burau_signed_word(n, q, &inv)?;
    let pos = burau_image(q, g.positive_part())?;
    Ok(dinv.pow(g.delta_power() as usize).mul(&pos))
}

/// `burau(a^op) = burau(a)^T`.
pub fn op_is_transpose(q: &Rat, a: &ArtinElt) -> Result<bool> {
    Ok(burau_image(q, &a.op())? == burau_image(q, a)?.transpose())
}

/// The predicted `det(t - T_J) = (t-1)(t^{|J|} - q^{2(n+1)})(t - q²)^{n-|J|}` for `|J| <= n`.
pub fn predicted_tj_char_poly(n: usize, j_len: usize, q: &Rat) -> RatPoly {
    let q2 = q * q;
    let qn = num_traits::pow(q2.clone(), n + 1);
    RatPoly::binomial(1, Rat::one())
        .mul(&RatPoly::binomial(j_len, qn))
        .mul(&RatPoly::binomial(1, q2).pow(n - j_len))
}

/// The predicted `det(t - T_J^{|J|}) = (t-1)(t - q^{2(n+1)})^{|J|}(t - q^{2|J|})^{n-|J|}`.
pub fn predicted_tj_power_char_poly(n: usize, j_len: usize, q: &Rat) -> RatPoly {
    let q2 = q * q;
    RatPoly::binomial(1, Rat::one())
        .mul(&RatPoly::binomial(1, num_traits::pow(q2.clone(), n + 1)).pow(j_len))
        .mul(&RatPoly::binomial(1, num_traits::pow(q2, j_len)).pow(n - j_len))
}

/// One tested cell of the falsifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FalsifyCell {
    pub m: usize,
    pub q: Rat,
    pub symmetric: bool,
}

/// Result of [`falsify_op_invariance`].
#[derive(Clone, Debug)]
pub struct FalsifyReport {
    pub n: usize,
    pub j: Vec<usize>,
    pub cells: Vec<FalsifyCell>,
    /// Powers whose Burau matrix was symmetric at every tested `q`.
    pub symmetric_powers: Vec<usize>,
    /// Exact monoid-level verdict (`T_J^m` op-invariant) for each symmetric power.
    pub escalations: Vec<(usize, bool)>,
}

impl FalsifyReport {
    /// Powers proven op-invariant in the monoid.
    pub fn op_invariant_powers(&self) -> Vec<usize> {
        self.escalations.iter().filter(|e| e.1).map(|e| e.0).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "J": self.j,
            "cells": self.cells.iter().map(|c| json!({
                "J": self.j, "m": c.m, "q": c.q.to_string(), "symmetric": c.symmetric
            })).collect::<Vec<_>>(),
            "symmetric_powers": self.symmetric_powers,
            "escalations": self.escalations.iter().map(|(m, ok)| json!({"m": m, "op_invariant": ok})).collect::<Vec<_>>(),
        })
    }
}

/// Tests symmetry of `burau(T_J)^m` for every `m <= m_max` with `|J|` dividing `2m`.
/// Asymmetry at one `q` disproves op-invariance of `T_J^m`; symmetry at all `q` is
/// escalated to an exact comparison in the monoid.
pub fn falsify_op_invariance(n: usize, j: &[usize], qs: &[Rat], m_max: usize) -> Result<FalsifyReport> {
    let data = tj_data(n, j)?;
    let size = data.set.len();
    let mut cells = Vec::new();
    let mut sym_all = vec![true; m_max + 1];
    for q in qs {
        let base = burau_image(q, &data.t_j)?;
        let mut cur = RatMatrix::identity(n + 1);
        for m in 1..=m_max {
            cur = cur.mul(&base);
            if (2 * m) % size != 0 {
                continue;
            }
            let s = cur.is_symmetric();
            sym_all[m] &= s;
            cells.push(FalsifyCell { m, q: q.clone(), symmetric: s });
        }
    }
    let symmetric_powers: Vec<usize> =
        (1..=m_max).filter(|&m| (2 * m) % size == 0 && sym_all[m]).collect();
    let escalations = symmetric_powers
        .iter()
        .map(|&m| {
            let p = data.t_j.pow(m);
            (m, p.op() == p)
        })
        .collect();
    Ok(FalsifyReport { n, j: data.set.elems.clone(), cells, symmetric_powers, escalations })
}

/// The default evaluation points `{2, 3}`.
pub fn default_qs() -> Vec<Rat> {
    vec![int(2), int(3)]
}
