//! The 0-Hecke monoid `(W, ⋆)`: Demazure products, parabolic calculus, projections
//! and multiparabolic elements.

use crate::coxeter::classify::{classify, is_finite_type};
use crate::coxeter::{CoxElt, CoxeterMatrix, Mask, TypeLabel};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// Demazure product `x ⋆ y`.
pub fn star(x: &CoxElt, y: &CoxElt) -> Result<CoxElt> {
    if x.matrix() != y.matrix() {
        return Err(Error::MatrixMismatch);
    }
    Ok(star_unchecked(x, y))
}

pub(crate) fn star_unchecked(x: &CoxElt, y: &CoxElt) -> CoxElt {
    if y.is_identity() {
        return x.clone();
    }
    let m = x.matrix();
    let mut st = x.state();
    for i in y.word() {
        if !st.has_right_descent(i) {
            st.rmul(m, i);
        }
    }
    CoxElt::from_state(m, &st)
}

/// `x ⋆ s_{i_1} ⋆ ... ⋆ s_{i_k}`.
pub fn star_word(x: &CoxElt, word: &[usize]) -> CoxElt {
    let m = x.matrix();
    let mut st = x.state();
    for &i in word {
        if !st.has_right_descent(i) {
            st.rmul(m, i);
        }
    }
    CoxElt::from_state(m, &st)
}

/// Image of a word of generators in the Hecke monoid.
pub fn hecke_from_word(m: &Arc<CoxeterMatrix>, word: &[usize]) -> Result<CoxElt> {
    for &i in word {
        m.check_letter(i)?;
    }
    Ok(star_word(&CoxElt::identity(m), word))
}

/// `Some(supp x)` when `x ⋆ x = x`.
pub fn is_idempotent(x: &CoxElt) -> Option<Mask> {
    if star_unchecked(x, x) == *x {
        Some(x.support())
    } else {
        None
    }
}

/// `x ⋆ y ⋆ x ⋆ ...` with `k` factors.
pub fn braid_star(x: &CoxElt, y: &CoxElt, k: u64) -> CoxElt {
    let mut acc = CoxElt::identity(x.matrix());
    for t in 0..k {
        acc = star_unchecked(&acc, if t % 2 == 0 { x } else { y });
    }
    acc
}

fn longest(m: &Arc<CoxeterMatrix>, j: Mask) -> Result<CoxElt> {
    CoxElt::longest_element(m, j)
}

/// `μ_M(J,K)`; `None` stands for infinity.
pub fn mu(m: &Arc<CoxeterMatrix>, j: Mask, k: Mask) -> Result<Option<u64>> {
    let wj = longest(m, j)?;
    let wk = longest(m, k)?;
    let u = j.union(k);
    if !is_finite_type(m, u) {
        return Ok(None);
    }
    let target = longest(m, u)?;
    let bound = 2 * target.len() as u64 + 2;
    let mut acc = CoxElt::identity(m);
    for t in 1..=bound {
        acc = star_unchecked(&acc, if t % 2 == 1 { &wj } else { &wk });
        if acc == target {
            return Ok(Some(t));
        }
    }
    Err(Error::VerificationFailed(format!("mu({j},{k}) exceeded the length bound")))
}

/// `w_{J;K} = w_0^J w_0^K` for `J ⊆ K`.
pub fn parabolic_element(m: &Arc<CoxeterMatrix>, j: Mask, k: Mask) -> Result<CoxElt> {
    if !j.is_subset(k) {
        return Err(Error::Precondition(format!("{j} is not contained in {k}")));
    }
    Ok(longest(m, j)?.mul(&longest(m, k)?))
}

/// `w_K = w_{K;I}`.
pub fn w_sub(m: &Arc<CoxeterMatrix>, k: Mask) -> Result<CoxElt> {
    parabolic_element(m, k, m.full())
}

/// The subset `L` with `w_{J1;K} ⋆ w_{J2;K} = w_{L;K}`.
pub fn star_subsets(m: &Arc<CoxeterMatrix>, k: Mask, j1: Mask, j2: Mask) -> Result<Mask> {
    let a = parabolic_element(m, j1, k)?;
    let b = parabolic_element(m, j2, k)?;
    let w0k = longest(m, k)?;
    let p = star_unchecked(&a, &b).mul(&w0k);
    let l = p.support();
    if p != longest(m, l)? || !l.is_subset(j1.inter(j2)) {
        return Err(Error::VerificationFailed(format!(
            "product of parabolic elements for {j1}, {j2} in {k} is not parabolic"
        )));
    }
    Ok(l)
}

/// Parabolic projection `p_J` as an endomorphism of `(W, ⋆)`.
pub fn projection(j: Mask, x: &CoxElt) -> CoxElt {
    let word: Vec<usize> = x.word().into_iter().filter(|&i| j.contains(i)).collect();
    star_word(&CoxElt::identity(x.matrix()), &word)
}

/// Parabolic projection with values in `W(M_J)`, generators renumbered increasingly.
pub fn projection_restricted(j: Mask, x: &CoxElt) -> CoxElt {
    let sub = x.matrix().restrict(j);
    let idx = j.to_vec();
    let p = projection(j, x);
    let word: Vec<usize> = p
        .word()
        .into_iter()
        .map(|i| idx.iter().position(|&v| v == i).unwrap() + 1)
        .collect();
    CoxElt::reduce(&sub, &word).expect("letters in range")
}

/// `w_{J1,...,Jk;J} = w_0^{J1} ... w_0^{Jk} w_0^J`.
pub fn multiparabolic_element(m: &Arc<CoxeterMatrix>, blocks: &[Mask], j: Mask) -> Result<CoxElt> {
    let mut used = Mask::EMPTY;
    for &b in blocks {
        if !b.is_subset(j) {
            return Err(Error::Precondition(format!("block {b} is not contained in {j}")));
        }
        if !b.inter(used).is_empty() {
            return Err(Error::Precondition(format!("block {b} overlaps an earlier block")));
        }
        used = used.union(b);
    }
    let w0 = longest(m, j)?;
    let mut acc = CoxElt::identity(m);
    for &b in blocks {
        acc = acc.mul(&longest(m, b)?);
    }
    Ok(acc.mul(&w0))
}

/// Integer polynomial in `t`, coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn constant(c: i64) -> Poly {
        Poly(vec![c]).trim()
    }

    /// `a + b t`.
    pub fn linear(a: i64, b: i64) -> Poly {
        Poly(vec![a, b]).trim()
    }

    fn trim(mut self) -> Poly {
        while self.0.len() > 1 && *self.0.last().unwrap() == 0 {
            self.0.pop();
        }
        if self.0.is_empty() {
            self.0.push(0);
        }
        self
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n)
            .map(|k| self.0.get(k).copied().unwrap_or(0) + o.0.get(k).copied().unwrap_or(0))
            .collect())
        .trim()
    }

    pub fn scale(&self, c: i64) -> Poly {
        Poly(self.0.iter().map(|x| x * c).collect()).trim()
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(-1))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = vec![0i64; self.0.len() + o.0.len() - 1];
        for (a, x) in self.0.iter().enumerate() {
            for (b, y) in o.0.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        Poly(out).trim()
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(1), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * t + c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 && self.0.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}t")?,
                _ => write!(f, "{c}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Nonempty connected subsets of `within`.
pub fn connected_subsets(m: &CoxeterMatrix, within: Mask) -> Vec<Mask> {
    within
        .subsets()
        .filter(|s| !s.is_empty() && m.is_connected(*s))
        .collect()
}

/// `P_k(M)` for all `k`: products `w_0^{J1}...w_0^{Jk}` over ordered tuples of pairwise
/// disjoint connected subsets, deduplicated as group elements.
pub fn multipar_sets(m: &Arc<CoxeterMatrix>) -> Result<Vec<HashSet<CoxElt>>> {
    if !is_finite_type(m, m.full()) {
        return Err(Error::NotFiniteType(m.full().to_string()));
    }
    let conn = connected_subsets(m, m.full());
    let w0s: Vec<CoxElt> = conn.iter().map(|&c| longest(m, c)).collect::<Result<_>>()?;
    let rank = m.rank();
    // level-by-level: (used mask, element) pairs, deduplicated
    let mut levels: Vec<HashSet<CoxElt>> = vec![HashSet::from([CoxElt::identity(m)])];
    let mut frontier: HashSet<(Mask, CoxElt)> = HashSet::from([(Mask::EMPTY, CoxElt::identity(m))]);
    for _ in 1..=rank {
        let next: HashSet<(Mask, CoxElt)> = frontier
            .par_iter()
            .flat_map_iter(|(used, x)| {
                conn.iter()
                    .zip(&w0s)
                    .filter(|(c, _)| c.inter(*used).is_empty())
                    .map(|(c, w)| (used.union(*c), x.mul(w)))
                    .collect::<Vec<_>>()
            })
            .collect();
        if next.is_empty() {
            break;
        }
        levels.push(next.iter().map(|(_, x)| x.clone()).collect());
        frontier = next;
    }
    Ok(levels)
}

/// Generating polynomial of `|P_k(M)|` by direct enumeration.
pub fn multipar_enumerate(m: &Arc<CoxeterMatrix>) -> Result<Poly> {
    let sets = multipar_sets(m)?;
    Ok(Poly(sets.iter().map(|s| s.len() as i64).collect()).trim())
}

/// All multiparabolic elements `w_{J1,...,Jk}` of `W(M)`.
pub fn multiparabolic_set(m: &Arc<CoxeterMatrix>) -> Result<HashSet<CoxElt>> {
    let w0 = longest(m, m.full())?;
    Ok(multipar_sets(m)?
        .into_iter()
        .flatten()
        .map(|x| x.mul(&w0))
        .collect())
}

/// Generating polynomial by the recursion on the Coxeter graph.
pub fn multipar_recursion(m: &CoxeterMatrix) -> Result<Poly> {
    let rep = classify(m, m.full());
    if !rep.is_finite() {
        return Err(Error::NotFiniteType(m.full().to_string()));
    }
    let mut memo = HashMap::new();
    Ok(rep
        .components
        .iter()
        .map(|c| multipar_label(c.label.unwrap(), &mut memo))
        .fold(Poly::constant(1), |a, b| a.mul(&b)))
}

/// Recursion for an irreducible catalog type.
pub fn multipar_label(label: TypeLabel, memo: &mut HashMap<TypeLabel, Poly>) -> Poly {
    if let Some(p) = memo.get(&label) {
        return p.clone();
    }
    let r = label.rank();
    let p = match r {
        0 => Poly::constant(1),
        1 => Poly::linear(1, 1),
        _ => {
            let m = CoxeterMatrix::from_type(label).expect("catalog type");
            let (i, j) = match label {
                TypeLabel::E(n) => (n - 1, n - 2),
                _ => (1, 2),
            };
            let jm = m.full().without(i);
            let jpm = jm.without(j);
            let sub = |s: Mask, memo: &mut HashMap<TypeLabel, Poly>| {
                classify(&m, s)
                    .components
                    .iter()
                    .map(|c| multipar_label(c.label.expect("finite"), memo))
                    .fold(Poly::constant(1), |a, b| a.mul(&b))
            };
            let pj = sub(jm, memo);
            let pjp = sub(jpm, memo);
            Poly::linear(1, 1).mul(&pj.scale(2).sub(&pjp))
        }
    };
    memo.insert(label, p.clone());
    p
}

fn cheb(first_kind: bool, k: i64) -> Poly {
    // in the variable x = 2t+1
    let x = Poly::linear(1, 2);
    if k < 0 {
        return Poly::constant(0);
    }
    let (mut a, mut b) = (Poly::constant(1), if first_kind { x.clone() } else { x.scale(2) });
    if k == 0 {
        return a;
    }
    for _ in 1..k {
        let c = x.scale(2).mul(&b).sub(&a);
        a = b;
        b = c;
    }
    b
}

/// Closed forms in Chebyshev polynomials at `2t+1`. `family` is `A` (with `n ≥ 0`, type
/// `A_n`) or `D` (with `n ≥ 2`, type `D_{n+1}`).
pub fn chebyshev_closed_form(family: &str, n: usize) -> Result<Poly> {
    let ni = n as i64;
    let h = ni / 2;
    let up = |e: i64| Poly::linear(1, 1).pow(e as u32);
    let t = |k| cheb(true, k);
    let u = |k| cheb(false, k);
    match family {
        "A" => {
            let q = if n % 2 == 0 { t(h) } else { u(h).sub(&u(h - 1)) };
            Ok(up((ni + 1) / 2).mul(&q))
        }
        "D" => {
            if n < 2 {
                return Err(Error::RankOutOfRange { label: "D".into(), rank: n + 1 });
            }
            let q = if n % 2 == 0 {
                t(h).scale(2).sub(&t(h - 1))
            } else {
                u(h).scale(2).sub(&u(h - 1).scale(3)).add(&u(h - 2))
            };
            Ok(up((ni + 1) / 2 + 1).mul(&q))
        }
        _ => Err(Error::UnknownLabel(family.to_string())),
    }
}

/// Report of the multiparabolic closure harness.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub multiparabolic: usize,
    /// Products `x ⋆ y` of multiparabolic elements which are not multiparabolic.
    pub extra: Vec<CoxElt>,
    /// Whether `P ⋆ P` is closed under `⋆`.
    pub product_set_closed: bool,
}

/// Computes `P̃ ⋆ P̃ \ P̃` and checks whether `P̃ ⋆ P̃` is a submonoid.
pub fn multipar_closure(m: &Arc<CoxeterMatrix>) -> Result<ClosureReport> {
    let p: Vec<CoxElt> = {
        let mut v: Vec<CoxElt> = multiparabolic_set(m)?.into_iter().collect();
        v.sort();
        v
    };
    let pset: HashSet<CoxElt> = p.iter().cloned().collect();
    let prod: HashSet<CoxElt> = p
        .par_iter()
        .flat_map_iter(|x| p.iter().map(|y| star_unchecked(x, y)).collect::<Vec<_>>())
        .collect();
    let mut extra: Vec<CoxElt> = prod.difference(&pset).cloned().collect();
    extra.sort();
    let pv: Vec<CoxElt> = prod.iter().cloned().collect();
    let closed = pv
        .par_iter()
        .all(|x| pv.iter().all(|y| prod.contains(&star_unchecked(x, y))));
    Ok(ClosureReport { multiparabolic: p.len(), extra, product_set_closed: closed })
}

/// Checks that `p_J` maps multiparabolic elements of `W(M)` to `J`-multiparabolic elements
/// for every `J`; returns the failing `(J, x)` pairs.
pub fn projection_multiparabolic_failures(m: &Arc<CoxeterMatrix>) -> Result<Vec<(Mask, CoxElt)>> {
    let all = multiparabolic_set(m)?;
    let mut fails = Vec::new();
    let mut sorted: Vec<CoxElt> = all.into_iter().collect();
    sorted.sort();
    for j in m.full().subsets() {
        let w0j = longest(m, j)?;
        let mut jm: HashSet<CoxElt> = HashSet::new();
        for blocks in disjoint_tuples(m, j) {
            let mut acc = CoxElt::identity(m);
            for b in blocks {
                acc = acc.mul(&longest(m, b)?);
            }
            jm.insert(acc.mul(&w0j));
        }
        for x in &sorted {
            let p = projection(j, x);
            if !jm.contains(&p) {
                fails.push((j, x.clone()));
            }
        }
    }
    Ok(fails)
}

/// Ordered tuples of pairwise disjoint nonempty connected subsets of `j`.
pub fn disjoint_tuples(m: &CoxeterMatrix, j: Mask) -> Vec<Vec<Mask>> {
    let conn = connected_subsets(m, j);
    let mut out = vec![vec![]];
    let mut frontier: Vec<(Mask, Vec<Mask>)> = vec![(Mask::EMPTY, vec![])];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (used, t) in &frontier {
            for &c in &conn {
                if c.inter(*used).is_empty() {
                    let mut t2 = t.clone();
                    t2.push(c);
                    out.push(t2.clone());
                    next.push((used.union(c), t2));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Elements grouped by support; handy for reporting.
pub fn by_support(xs: &[CoxElt]) -> BTreeMap<Mask, Vec<CoxElt>> {
    let mut out: BTreeMap<Mask, Vec<CoxElt>> = BTreeMap::new();
    for x in xs {
        out.entry(x.support()).or_default().push(x.clone());
    }
    out
}
