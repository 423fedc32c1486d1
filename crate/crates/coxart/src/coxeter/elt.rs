//! Coxeter group elements in ShortLex canonical form.

use super::classify::is_finite_type;
use super::mask::Mask;
use super::matrix::{Backend, CoxeterMatrix, INF};
use super::ring::ZPhi;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// Mutable working representation of a group element.
///
/// For the geometric backend both `W` and `W^{-1}` are kept (column `j` of `W` is
/// `w(alpha_j)` in the simple-root basis), so both descent sets are sign tests.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum State {
    Small { odd: bool },
    Dihedral { m: u32, start: u8, len: u32 },
    Geo { r: usize, w: Vec<ZPhi>, winv: Vec<ZPhi>, len: u32 },
}

fn col_negative(mat: &[ZPhi], r: usize, col: usize) -> bool {
    for row in 0..r {
        match mat[row * r + col].signum() {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
    }
    unreachable!("zero column in a reflection matrix")
}

/// `mat <- S_i * mat` (row operation).
fn row_op(mat: &mut [ZPhi], cartan: &[ZPhi], r: usize, i: usize) {
    let mut new_row = vec![ZPhi::ZERO; r];
    for l in 0..r {
        let c = cartan[i * r + l];
        if c.is_zero() {
            continue;
        }
        for (col, nr) in new_row.iter_mut().enumerate() {
            *nr = *nr + c * mat[l * r + col];
        }
    }
    for col in 0..r {
        mat[i * r + col] = mat[i * r + col] - new_row[col];
    }
}

/// `mat <- mat * S_i` (column operation).
fn col_op(mat: &mut [ZPhi], cartan: &[ZPhi], r: usize, i: usize) {
    for row in 0..r {
        let ci = mat[row * r + i];
        if ci.is_zero() {
            continue;
        }
        for j in 0..r {
            let c = cartan[i * r + j];
            if !c.is_zero() {
                mat[row * r + j] = mat[row * r + j] - c * ci;
            }
        }
    }
}

impl State {
    pub(crate) fn identity(m: &CoxeterMatrix) -> State {
        match &m.backend {
            Backend::Small => State::Small { odd: false },
            Backend::Dihedral(mm) => State::Dihedral { m: *mm, start: 0, len: 0 },
            Backend::Geometric(_) => {
                let r = m.rank();
                let mut id = vec![ZPhi::ZERO; r * r];
                for k in 0..r {
                    id[k * r + k] = ZPhi::ONE;
                }
                State::Geo { r, w: id.clone(), winv: id, len: 0 }
            }
            Backend::Unsupported(msg) => panic!("unsupported Coxeter matrix: {msg}"),
        }
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            State::Small { odd } => *odd as usize,
            State::Dihedral { len, .. } | State::Geo { len, .. } => *len as usize,
        }
    }

    pub(crate) fn has_left_descent(&self, i: usize) -> bool {
        match self {
            State::Small { odd } => *odd,
            State::Dihedral { m, start, len } => *len > 0 && (*len == *m || *start as usize == i),
            State::Geo { r, winv, .. } => col_negative(winv, *r, i - 1),
        }
    }

    pub(crate) fn has_right_descent(&self, i: usize) -> bool {
        match self {
            State::Small { odd } => *odd,
            State::Dihedral { m, start, len } => {
                if *len == 0 {
                    return false;
                }
                if *len == *m {
                    return true;
                }
                let last = if len % 2 == 1 { *start as usize } else { 3 - *start as usize };
                last == i
            }
            State::Geo { r, w, .. } => col_negative(w, *r, i - 1),
        }
    }

    pub(crate) fn left_descents(&self, rank: usize) -> Mask {
        (1..=rank).filter(|&i| self.has_left_descent(i)).collect()
    }

    pub(crate) fn right_descents(&self, rank: usize) -> Mask {
        (1..=rank).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `w <- s_i w`.
    pub(crate) fn lmul(&mut self, m: &CoxeterMatrix, i: usize) {
        match self {
            State::Small { odd } => *odd = !*odd,
            State::Dihedral { m: mm, start, len } => {
                let i8 = i as u8;
                let other = 3 - i8;
                if *len == 0 {
                    *start = i8;
                    *len = 1;
                } else if *len == *mm {
                    *start = other;
                    *len -= 1;
                } else if *start == i8 {
                    *start = other;
                    *len -= 1;
                    if *len == 0 {
                        *start = 0;
                    }
                } else {
                    *start = i8;
                    *len += 1;
                    if *len == *mm {
                        *start = 1;
                    }
                }
            }
            State::Geo { r, w, winv, len } => {
                let Backend::Geometric(cartan) = &m.backend else { unreachable!() };
                let down = col_negative(winv, *r, i - 1);
                row_op(w, cartan, *r, i - 1);
                col_op(winv, cartan, *r, i - 1);
                if down {
                    *len -= 1;
                } else {
                    *len += 1;
                }
            }
        }
    }

    /// `w <- w s_i`.
    pub(crate) fn rmul(&mut self, m: &CoxeterMatrix, i: usize) {
        match self {
            State::Small { odd } => *odd = !*odd,
            State::Dihedral { .. } => {
                self.invert();
                self.lmul(m, i);
                self.invert();
            }
            State::Geo { r, w, winv, len } => {
                let Backend::Geometric(cartan) = &m.backend else { unreachable!() };
                let down = col_negative(w, *r, i - 1);
                col_op(w, cartan, *r, i - 1);
                row_op(winv, cartan, *r, i - 1);
                if down {
                    *len -= 1;
                } else {
                    *len += 1;
                }
            }
        }
    }

    pub(crate) fn invert(&mut self) {
        match self {
            State::Small { .. } => {}
            State::Dihedral { m, start, len } => {
                if *len > 0 && *len < *m && *len % 2 == 0 {
                    *start = 3 - *start;
                }
            }
            State::Geo { w, winv, .. } => std::mem::swap(w, winv),
        }
    }

    /// ShortLex-least reduced word, by peeling the smallest left descent.
    pub(crate) fn canonical_word(&self, m: &CoxeterMatrix) -> Vec<u8> {
        let rank = m.rank();
        match self {
            State::Small { odd } => {
                if *odd {
                    vec![1]
                } else {
                    vec![]
                }
            }
            State::Dihedral { start, len, .. } => {
                let mut s = *start;
                (0..*len)
                    .map(|_| {
                        let c = s;
                        s = 3 - s;
                        c
                    })
                    .collect()
            }
            State::Geo { .. } => {
                let mut st = self.clone();
                let mut out = Vec::with_capacity(st.len());
                while st.len() > 0 {
                    let i = (1..=rank)
                        .find(|&i| st.has_left_descent(i))
                        .expect("nonidentity element has a left descent");
                    out.push(i as u8);
                    st.lmul(m, i);
                }
                out
            }
        }
    }

    pub(crate) fn from_word(m: &CoxeterMatrix, word: &[usize]) -> State {
        let mut st = State::identity(m);
        for &i in word {
            st.rmul(m, i);
        }
        st
    }
}

/// An element of `W(M)` stored as its ShortLex-least reduced word.
#[derive(Clone)]
pub struct CoxElt {
    matrix: Arc<CoxeterMatrix>,
    word: Vec<u8>,
    dl: Mask,
    dr: Mask,
}

impl PartialEq for CoxElt {
    fn eq(&self, o: &Self) -> bool {
        self.word == o.word && (Arc::ptr_eq(&self.matrix, &o.matrix) || *self.matrix == *o.matrix)
    }
}
impl Eq for CoxElt {}

impl Hash for CoxElt {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.word.hash(h);
    }
}

impl PartialOrd for CoxElt {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// ShortLex order on canonical words.
impl Ord for CoxElt {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.word.len(), &self.word).cmp(&(o.word.len(), &o.word))
    }
}

impl fmt::Debug for CoxElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.word())
    }
}

impl fmt::Display for CoxElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.word())
    }
}

fn check_supported(m: &CoxeterMatrix) -> Result<()> {
    if let Backend::Unsupported(msg) = &m.backend {
        return Err(Error::Unsupported(msg.clone()));
    }
    Ok(())
}

impl CoxElt {
    pub(crate) fn from_state(matrix: &Arc<CoxeterMatrix>, st: &State) -> CoxElt {
        let r = matrix.rank();
        CoxElt {
            word: st.canonical_word(matrix),
            dl: st.left_descents(r),
            dr: st.right_descents(r),
            matrix: matrix.clone(),
        }
    }

    pub(crate) fn state(&self) -> State {
        State::from_word(&self.matrix, &self.word_usize())
    }

    fn word_usize(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn identity(matrix: &Arc<CoxeterMatrix>) -> CoxElt {
        CoxElt { matrix: matrix.clone(), word: Vec::new(), dl: Mask::EMPTY, dr: Mask::EMPTY }
    }

    /// The simple reflection `s_i`.
    pub fn generator(matrix: &Arc<CoxeterMatrix>, i: usize) -> Result<CoxElt> {
        Self::reduce(matrix, &[i])
    }

    /// Canonical form of the product of a word of generators.
    pub fn reduce(matrix: &Arc<CoxeterMatrix>, word: &[usize]) -> Result<CoxElt> {
        for &i in word {
            matrix.check_letter(i)?;
        }
        check_supported(matrix)?;
        Ok(Self::from_state(matrix, &State::from_word(matrix, word)))
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        &self.matrix
    }

    pub fn word(&self) -> Vec<usize> {
        self.word_usize()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn support(&self) -> Mask {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn left_descents(&self) -> Mask {
        self.dl
    }

    pub fn right_descents(&self) -> Mask {
        self.dr
    }

    pub fn descents(&self) -> (Mask, Mask) {
        (self.dl, self.dr)
    }

    fn same(&self, o: &CoxElt) -> Result<()> {
        if Arc::ptr_eq(&self.matrix, &o.matrix) || *self.matrix == *o.matrix {
            Ok(())
        } else {
            Err(Error::MatrixMismatch)
        }
    }

    pub fn multiply(&self, y: &CoxElt) -> Result<CoxElt> {
        self.same(y)?;
        Ok(self.mul(y))
    }

    /// Product without the matrix check.
    pub fn mul(&self, y: &CoxElt) -> CoxElt {
        if y.is_identity() {
            return self.clone();
        }
        if self.is_identity() {
            return y.clone();
        }
        let mut st = self.state();
        for &i in &y.word {
            st.rmul(&self.matrix, i as usize);
        }
        Self::from_state(&self.matrix, &st)
    }

    /// `s_i * self`.
    pub fn lmul_gen(&self, i: usize) -> CoxElt {
        let mut st = self.state();
        st.lmul(&self.matrix, i);
        Self::from_state(&self.matrix, &st)
    }

    /// `self * s_i`.
    pub fn rmul_gen(&self, i: usize) -> CoxElt {
        let mut st = self.state();
        st.rmul(&self.matrix, i);
        Self::from_state(&self.matrix, &st)
    }

    pub fn inverse(&self) -> CoxElt {
        let mut st = self.state();
        st.invert();
        Self::from_state(&self.matrix, &st)
    }

    /// Longest element `w_0^J`; `J` must be of finite type.
    pub fn longest_element(matrix: &Arc<CoxeterMatrix>, j: Mask) -> Result<CoxElt> {
        if !j.is_subset(matrix.full()) {
            return Err(Error::Precondition(format!("{j} is not a subset of the generators")));
        }
        if !is_finite_type(matrix, j) {
            return Err(Error::NotFiniteType(j.to_string()));
        }
        check_supported(matrix)?;
        let mut st = State::identity(matrix);
        while let Some(i) = j.iter().find(|&i| !st.has_left_descent(i)) {
            st.lmul(matrix, i);
        }
        Ok(Self::from_state(matrix, &st))
    }

    /// Bruhat order via the lifting property along the canonical word of `w`.
    pub fn bruhat_leq(&self, w: &CoxElt) -> Result<bool> {
        self.same(w)?;
        let mut u = self.state();
        for (k, &s) in w.word.iter().enumerate() {
            if u.len() == 0 {
                return Ok(true);
            }
            if u.len() > w.word.len() - k {
                return Ok(false);
            }
            if u.has_left_descent(s as usize) {
                u.lmul(&self.matrix, s as usize);
            }
        }
        Ok(u.len() == 0)
    }

    /// `w_0^J x w_0^J` for `x` supported in finite-type `J`.
    pub fn conjugate_by_longest(&self, j: Mask) -> Result<CoxElt> {
        if !self.support().is_subset(j) {
            return Err(Error::Precondition(format!(
                "support {} not contained in {j}",
                self.support()
            )));
        }
        let w0 = Self::longest_element(&self.matrix, j)?;
        Ok(w0.mul(self).mul(&w0))
    }

    /// `s_i * w` is shorter than `w`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        self.dl.contains(i)
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.dr.contains(i)
    }

    /// Order of `self` in `W`, if at most `bound`.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

/// `true` when `m_{ij}` is finite.
pub fn finite_entry(m: &CoxeterMatrix, i: usize, j: usize) -> bool {
    m.m(i, j) != INF
}
