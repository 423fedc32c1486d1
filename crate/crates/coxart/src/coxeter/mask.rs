use serde::{Deserialize, Serialize};
use std::fmt;

/// Maximum supported rank.
pub const MAX_RANK: usize = 16;

/// Subset of the generator set `{1..=rank}`; bit `i-1` marks generator `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Mask(pub u32);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(rank: usize) -> Mask {
        if rank == 0 {
            Mask(0)
        } else {
            Mask((1u32 << rank) - 1)
        }
    }

    pub fn single(i: usize) -> Mask {
        debug_assert!(i >= 1);
        Mask(1 << (i - 1))
    }

    /// `[a,b]`; empty when `a > b`.
    pub fn interval(a: i64, b: i64) -> Mask {
        let mut m = Mask(0);
        let mut k = a.max(1);
        while k <= b {
            m.insert(k as usize);
            k += 1;
        }
        m
    }

    /// `[a,b]_2 = {k in [a,b] : b-k even}`.
    pub fn interval2(a: i64, b: i64) -> Mask {
        let mut m = Mask(0);
        let mut k = b;
        while k >= a && k >= 1 {
            m.insert(k as usize);
            k -= 2;
        }
        m
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 32 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << (i - 1));
    }

    pub fn with(self, i: usize) -> Mask {
        let mut m = self;
        m.insert(i);
        m
    }

    pub fn without(self, i: usize) -> Mask {
        let mut m = self;
        m.remove(i);
        m
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: Mask) -> Mask {
        Mask(self.0 | o.0)
    }

    pub fn inter(self, o: Mask) -> Mask {
        Mask(self.0 & o.0)
    }

    pub fn minus(self, o: Mask) -> Mask {
        Mask(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Mask) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(t + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `{c + s : s in self}`, dropping anything below 1.
    pub fn shift(self, c: i64) -> Mask {
        self.iter()
            .map(|i| i as i64 + c)
            .filter(|&k| k >= 1)
            .map(|k| k as usize)
            .collect()
    }

    /// `{c - s : s in self}`, dropping anything below 1.
    pub fn reflect(self, c: i64) -> Mask {
        self.iter()
            .map(|i| c - i as i64)
            .filter(|&k| k >= 1)
            .map(|k| k as usize)
            .collect()
    }

    /// Image under a permutation given as a 1-based table (`perm[i-1]` is the image of `i`).
    pub fn map(self, perm: &[usize]) -> Mask {
        self.iter().map(|i| perm[i - 1]).collect()
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = Mask> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some(((c | !full).wrapping_add(1)) & full) };
            Some(Mask(c))
        })
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<T: IntoIterator<Item = usize>>(it: T) -> Self {
        let mut m = Mask(0);
        for i in it {
            m.insert(i);
        }
        m
    }
}

impl<'a> FromIterator<&'a usize> for Mask {
    fn from_iter<T: IntoIterator<Item = &'a usize>>(it: T) -> Self {
        it.into_iter().copied().collect()
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
