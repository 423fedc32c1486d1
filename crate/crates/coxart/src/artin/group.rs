//! Artin group elements of finite type, stored as `Δ^{-k} P` with `P` positive.

use super::monoid::ArtinElt;
use crate::coxeter::{is_finite_type, CoxElt, CoxeterMatrix};
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// `Δ^{-k} · pos`, reduced: when `k > 0`, `Δ` does not left-divide `pos`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArtinGrpElt {
    k: u64,
    pos: ArtinElt,
    w0: CoxElt,
    sigma: Arc<Vec<usize>>,
}

impl fmt::Debug for ArtinGrpElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^-{} {:?}", self.k, self.pos)
    }
}

impl ArtinGrpElt {
    fn check_finite(m: &Arc<CoxeterMatrix>) -> Result<()> {
        if is_finite_type(m, m.full()) {
            Ok(())
        } else {
            Err(Error::NotFiniteType(format!("{}", m.full())))
        }
    }

    /// Embeds a positive element.
    pub fn from_positive(a: &ArtinElt) -> Result<ArtinGrpElt> {
        let m = a.matrix();
        Self::check_finite(m)?;
        let w0 = CoxElt::longest_element(m, m.full())?;
        let sigma = Arc::new(ArtinElt::sigma_map(m, m.full())?);
        Ok(ArtinGrpElt { k: 0, pos: a.clone(), w0, sigma })
    }

    pub fn identity(m: &Arc<CoxeterMatrix>) -> Result<ArtinGrpElt> {
        Self::from_positive(&ArtinElt::identity(m))
    }

    /// `T_i^{±1}`.
    pub fn generator(m: &Arc<CoxeterMatrix>, i: usize, inverse: bool) -> Result<ArtinGrpElt> {
        let g = Self::from_positive(&ArtinElt::generator(m, i)?)?;
        Ok(if inverse { g.inv() } else { g })
    }

    /// Product of `T_{|i|}^{sign(i)}` over a signed word.
    pub fn from_signed_word(m: &Arc<CoxeterMatrix>, word: &[i64]) -> Result<ArtinGrpElt> {
        let mut out = Self::identity(m)?;
        for &l in word {
            if l == 0 {
                return Err(Error::LetterOutOfRange { letter: 0, rank: m.rank() });
            }
            out = out.mul(&Self::generator(m, l.unsigned_abs() as usize, l < 0)?);
        }
        Ok(out)
    }

    fn with(&self, k: u64, pos: ArtinElt) -> ArtinGrpElt {
        let mut g = ArtinGrpElt { k, pos, w0: self.w0.clone(), sigma: self.sigma.clone() };
        g.reduce();
        g
    }

    fn reduce(&mut self) {
        let lead = self
            .pos
            .factors()
            .iter()
            .take_while(|f| **f == self.w0)
            .count()
            .min(self.k as usize);
        if lead > 0 {
            let rest = self.pos.factors()[lead..].to_vec();
            self.pos = ArtinElt::from_factors(self.pos.matrix(), &rest).expect("same matrix");
            self.k -= lead as u64;
        }
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        self.pos.matrix()
    }

    /// The exponent `k` in `Δ^{-k} P`.
    pub fn delta_power(&self) -> u64 {
        self.k
    }

    pub fn positive_part(&self) -> &ArtinElt {
        &self.pos
    }

    /// The element as a positive braid, when it is one.
    pub fn to_positive(&self) -> Option<ArtinElt> {
        (self.k == 0).then(|| self.pos.clone())
    }

    /// Exponent sum (abelianised length).
    pub fn degree(&self) -> i64 {
        self.pos.len() as i64 - (self.k as i64) * self.w0.len() as i64
    }

    fn twist(&self, a: &ArtinElt, times: u64) -> ArtinElt {
        if times % 2 == 0 {
            a.clone()
        } else {
            a.map_letters(&self.sigma)
        }
    }

    pub fn multiply(&self, o: &ArtinGrpElt) -> Result<ArtinGrpElt> {
        if *self.matrix() != *o.matrix() {
            return Err(Error::MatrixMismatch);
        }
        Ok(self.mul(o))
    }

    /// `(Δ^{-a}P)(Δ^{-b}Q) = Δ^{-(a+b)} Σ^b(P) Q`.
    pub fn mul(&self, o: &ArtinGrpElt) -> ArtinGrpElt {
        let p = self.twist(&self.pos, o.k);
        self.with(self.k + o.k, p.mul(&o.pos))
    }

    pub fn inv(&self) -> ArtinGrpElt {
        // T_x^{-1} = Δ^{-1} T_{w0 x^{-1}}
        let m = self.matrix().clone();
        let mut out = self.with(0, ArtinElt::identity(&m));
        for f in self.pos.factors().iter().rev() {
            let c = self.w0.mul(&f.inverse());
            out = out.mul(&self.with(1, ArtinElt::from_simple(&c)));
        }
        let delta_k = ArtinElt::from_simple(&self.w0).pow(self.k as usize);
        out.mul(&self.with(0, delta_k))
    }

    pub fn pow(&self, e: i64) -> ArtinGrpElt {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = self.with(0, ArtinElt::identity(self.matrix()));
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// The anti-involution reversing words, extended to the group.
    pub fn op(&self) -> ArtinGrpElt {
        // (Δ^{-k}P)^op = P^op Δ^{-k} = Δ^{-k} Σ^k(P^op)
        let p = self.twist(&self.pos.op(), self.k);
        self.with(self.k, p)
    }

    /// Alternating product `x y x ...` with `k` factors.
    pub fn braid_power(x: &ArtinGrpElt, y: &ArtinGrpElt, k: u64) -> ArtinGrpElt {
        let mut out = x.pow(0);
        for r in 0..k {
            out = out.mul(if r % 2 == 0 { x } else { y });
        }
        out
    }

    /// `Δ_J^{-1} Δ_K` for `J ⊆ K`; positive, equal to `T_{w_{J;K}}`.
    pub fn parabolic_braid(
        m: &Arc<CoxeterMatrix>,
        j: crate::coxeter::Mask,
        k: crate::coxeter::Mask,
    ) -> Result<ArtinGrpElt> {
        if !j.is_subset(k) {
            return Err(Error::Precondition(format!("{j} is not contained in {k}")));
        }
        let dj = Self::from_positive(&ArtinElt::garside_element(m, j)?)?;
        let dk = Self::from_positive(&ArtinElt::garside_element(m, k)?)?;
        let out = dj.inv().mul(&dk);
        if out.k != 0 {
            return Err(Error::VerificationFailed(format!(
                "parabolic braid for {j} in {k} is not positive"
            )));
        }
        Ok(out)
    }
}
