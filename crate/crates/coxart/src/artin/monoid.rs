//! Positive Artin monoid elements in left-greedy normal form.

use crate::coxeter::elt::State;
use crate::coxeter::{CoxElt, CoxeterMatrix, Mask};
use crate::error::{Error, Result};
use crate::hecke;
use serde_json::{json, Value};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// A positive braid as a left-weighted sequence of nonidentity square-free factors,
/// each stored as its Coxeter image.
#[derive(Clone)]
pub struct ArtinElt {
    matrix: Arc<CoxeterMatrix>,
    factors: Vec<CoxElt>,
    len: usize,
}

impl PartialEq for ArtinElt {
    fn eq(&self, o: &Self) -> bool {
        self.len == o.len && self.factors == o.factors && *self.matrix == *o.matrix
    }
}
impl Eq for ArtinElt {}

impl Hash for ArtinElt {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.len.hash(h);
        self.factors.hash(h);
    }
}

impl fmt::Debug for ArtinElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<Vec<usize>> = self.factors.iter().map(CoxElt::word).collect();
        write!(f, "{fs:?}")
    }
}

impl fmt::Display for ArtinElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Makes the pair `(f, g)` left-weighted by moving letters of `g` into `f`.
/// Returns `true` when something moved.
fn slide(m: &Arc<CoxeterMatrix>, f: &mut CoxElt, g: &mut CoxElt) -> bool {
    if g.left_descents().is_subset(f.right_descents()) {
        return false;
    }
    let rank = m.rank();
    let mut fs = f.state();
    let mut gs = g.state();
    loop {
        let moved = (1..=rank).find(|&i| gs.has_left_descent(i) && !fs.has_right_descent(i));
        match moved {
            Some(i) => {
                fs.rmul(m, i);
                gs.lmul(m, i);
            }
            None => break,
        }
    }
    *f = CoxElt::from_state(m, &fs);
    *g = CoxElt::from_state(m, &gs);
    true
}

impl ArtinElt {
    pub fn identity(matrix: &Arc<CoxeterMatrix>) -> ArtinElt {
        ArtinElt { matrix: matrix.clone(), factors: Vec::new(), len: 0 }
    }

    pub fn generator(matrix: &Arc<CoxeterMatrix>, i: usize) -> Result<ArtinElt> {
        Self::from_word(matrix, &[i])
    }

    /// The square-free lift `T_w` of a Coxeter element.
    pub fn from_simple(w: &CoxElt) -> ArtinElt {
        let mut a = ArtinElt::identity(w.matrix());
        if !w.is_identity() {
            a.len = w.len();
            a.factors.push(w.clone());
        }
        a
    }

    /// Normal form of a product of generators.
    pub fn from_word(matrix: &Arc<CoxeterMatrix>, word: &[usize]) -> Result<ArtinElt> {
        for &i in word {
            matrix.check_letter(i)?;
        }
        let mut a = ArtinElt::identity(matrix);
        // feed maximal square-free chunks of the word
        let mut st = State::identity(matrix);
        let mut chunk_len = 0usize;
        for &i in word {
            if st.has_right_descent(i) {
                a.push_simple(CoxElt::from_state(matrix, &st));
                st = State::identity(matrix);
                chunk_len = 0;
            }
            st.rmul(matrix, i);
            chunk_len += 1;
        }
        if chunk_len > 0 {
            a.push_simple(CoxElt::from_state(matrix, &st));
        }
        Ok(a)
    }

    /// Builds an element from a list of square-free factors (not necessarily left-weighted).
    pub fn from_factors(matrix: &Arc<CoxeterMatrix>, factors: &[CoxElt]) -> Result<ArtinElt> {
        let mut a = ArtinElt::identity(matrix);
        for f in factors {
            if f.matrix() != matrix {
                return Err(Error::MatrixMismatch);
            }
            a.push_simple(f.clone());
        }
        Ok(a)
    }

    /// Right multiplication by a square-free element.
    pub fn push_simple(&mut self, s: CoxElt) {
        if s.is_identity() {
            return;
        }
        self.len += s.len();
        self.factors.push(s);
        let m = self.matrix.clone();
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let (a, b) = self.factors.split_at_mut(k);
            if !slide(&m, &mut a[k - 1], &mut b[0]) {
                break;
            }
            k -= 1;
        }
        self.factors.retain(|f| !f.is_identity());
        self.normalize();
    }

    /// Runs local passes until every adjacent pair is left-weighted.
    fn normalize(&mut self) {
        let m = self.matrix.clone();
        loop {
            let mut changed = false;
            for k in 1..self.factors.len() {
                let (a, b) = self.factors.split_at_mut(k);
                if slide(&m, &mut a[k - 1], &mut b[0]) {
                    changed = true;
                }
            }
            self.factors.retain(|f| !f.is_identity());
            if !changed {
                break;
            }
        }
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        &self.matrix
    }

    pub fn factors(&self) -> &[CoxElt] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation of the factor words.
    pub fn word(&self) -> Vec<usize> {
        self.factors.iter().flat_map(CoxElt::word).collect()
    }

    pub fn support(&self) -> Mask {
        self.factors.iter().fold(Mask::EMPTY, |a, f| a.union(f.support()))
    }

    pub fn left_descents(&self) -> Mask {
        self.factors.first().map_or(Mask::EMPTY, CoxElt::left_descents)
    }

    pub fn right_descents(&self) -> Mask {
        self.op().left_descents()
    }

    fn same(&self, o: &ArtinElt) -> Result<()> {
        if Arc::ptr_eq(&self.matrix, &o.matrix) || *self.matrix == *o.matrix {
            Ok(())
        } else {
            Err(Error::MatrixMismatch)
        }
    }

    pub fn multiply(&self, o: &ArtinElt) -> Result<ArtinElt> {
        self.same(o)?;
        Ok(self.mul(o))
    }

    /// Product without the matrix check.
    pub fn mul(&self, o: &ArtinElt) -> ArtinElt {
        let mut out = self.clone();
        for f in &o.factors {
            out.push_simple(f.clone());
        }
        out
    }

    pub fn pow(&self, k: usize) -> ArtinElt {
        let mut out = ArtinElt::identity(&self.matrix);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// The anti-involution reversing words.
    pub fn op(&self) -> ArtinElt {
        let mut out = ArtinElt::identity(&self.matrix);
        for f in self.factors.iter().rev() {
            out.push_simple(f.inverse());
        }
        out
    }

    /// `(coxeter image, Hecke image, square-free)`.
    pub fn project(&self) -> (CoxElt, CoxElt, bool) {
        let e = CoxElt::identity(&self.matrix);
        let cox = self.factors.iter().fold(e.clone(), |a, f| a.mul(f));
        let hk = hecke::star_word(&e, &self.word());
        (cox, hk, self.factors.len() <= 1)
    }

    pub fn coxeter_image(&self) -> CoxElt {
        self.project().0
    }

    pub fn hecke_image(&self) -> CoxElt {
        hecke::star_word(&CoxElt::identity(&self.matrix), &self.word())
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.len() <= 1
    }

    /// `T_i^{-1} self` when `T_i` left-divides `self`.
    pub fn strip_left_gen(&self, i: usize) -> Option<ArtinElt> {
        let first = self.factors.first()?;
        if !first.is_left_descent(i) {
            return None;
        }
        let mut out = self.clone();
        out.factors[0] = first.lmul_gen(i);
        out.len -= 1;
        out.factors.retain(|f| !f.is_identity());
        out.normalize();
        Some(out)
    }

    /// `(b : a)_l`, i.e. `x` with `a x = b`, when `a` left-divides `b`.
    pub fn left_quotient(a: &ArtinElt, b: &ArtinElt) -> Option<ArtinElt> {
        if a.len > b.len {
            return None;
        }
        let mut cur = b.clone();
        for i in a.word() {
            cur = cur.strip_left_gen(i)?;
        }
        Some(cur)
    }

    /// `Some((b : a)_l)` when `a` left-divides `b`; the result is re-verified.
    pub fn left_divides(a: &ArtinElt, b: &ArtinElt) -> Option<ArtinElt> {
        let q = Self::left_quotient(a, b)?;
        debug_assert_eq!(a.mul(&q), *b);
        Some(q)
    }

    /// `Some(x)` with `x a = b` when `a` right-divides `b`.
    pub fn right_divides(a: &ArtinElt, b: &ArtinElt) -> Option<ArtinElt> {
        Self::left_quotient(&a.op(), &b.op()).map(|q| q.op())
    }

    /// The sequence `D_0(X), D_1(X), ...` of left descent sets of successive quotients by
    /// `T_{w_0^{D_k(X)}}`; its Garside elements multiply back to `X`.
    pub fn descent_sequence(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        while !cur.is_identity() {
            let d = cur.left_descents();
            let delta = Self::garside_element(&self.matrix, d).expect("descent sets are spherical");
            cur = Self::left_quotient(&delta, &cur).expect("garside element of D_L divides");
            out.push(d);
        }
        out
    }

    /// Garside element `Δ_J = T_{w_0^J}`.
    pub fn garside_element(m: &Arc<CoxeterMatrix>, j: Mask) -> Result<ArtinElt> {
        Ok(Self::from_simple(&CoxElt::longest_element(m, j)?))
    }

    /// Image of the generators under conjugation by `w_0^J`, as a permutation of `J`.
    pub fn sigma_map(m: &Arc<CoxeterMatrix>, j: Mask) -> Result<Vec<usize>> {
        let w0 = CoxElt::longest_element(m, j)?;
        let mut perm: Vec<usize> = (1..=m.rank()).collect();
        for i in j.iter() {
            let c = w0.mul(&CoxElt::generator(m, i)?).mul(&w0);
            perm[i - 1] = c.word()[0];
        }
        Ok(perm)
    }

    /// `Σ_J(a)` for `a` supported in `J`.
    pub fn sigma_twist(m: &Arc<CoxeterMatrix>, j: Mask, a: &ArtinElt) -> Result<ArtinElt> {
        if !a.support().is_subset(j) {
            return Err(Error::Precondition(format!(
                "support {} not contained in {j}",
                a.support()
            )));
        }
        let perm = Self::sigma_map(m, j)?;
        Ok(a.map_letters(&perm))
    }

    /// Image under a relabelling of generators that is an automorphism of the Coxeter graph.
    pub fn map_letters(&self, perm: &[usize]) -> ArtinElt {
        let word: Vec<usize> = self.word().into_iter().map(|i| perm[i - 1]).collect();
        ArtinElt::from_word(&self.matrix, &word).expect("letters in range")
    }

    /// Alternating product `x y x ...` with `k` factors.
    pub fn braid_power(x: &ArtinElt, y: &ArtinElt, k: u64) -> ArtinElt {
        let xy = x.mul(y);
        let mut out = xy.pow((k / 2) as usize);
        if k % 2 == 1 {
            out = out.mul(x);
        }
        out
    }

    /// `{"matrix": ..., "factors": [[...], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "matrix": self.matrix.to_json(),
            "factors": self.factors.iter().map(CoxElt::word).collect::<Vec<_>>(),
        })
    }

    /// Accepts `{"matrix":..., "factors":[[..],..]}` or `{"matrix":..., "word":[..]}`.
    pub fn from_json(v: &Value) -> Result<ArtinElt> {
        let bad = |s: &str| Error::Precondition(s.to_string());
        let m = CoxeterMatrix::from_json(v.get("matrix").ok_or_else(|| bad("missing `matrix`"))?)?;
        let word_of = |w: &Value| -> Result<Vec<usize>> {
            w.as_array()
                .ok_or_else(|| bad("words must be arrays"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("letters must be integers")))
                .collect()
        };
        let word: Vec<usize> = if let Some(fs) = v.get("factors").and_then(Value::as_array) {
            let mut w = Vec::new();
            for f in fs {
                w.extend(word_of(f)?);
            }
            w
        } else {
            word_of(v.get("word").ok_or_else(|| bad("need `factors` or `word`"))?)?
        };
        ArtinElt::from_word(&m, &word)
    }
}
