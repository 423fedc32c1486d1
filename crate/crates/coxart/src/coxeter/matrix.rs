use super::mask::{Mask, MAX_RANK};
use super::ring::ZPhi;
use crate::error::{Error, Result};
use serde_json::{json, Value};
use std::fmt;
use std::sync::Arc;

/// Internal sentinel for an infinite entry.
pub const INF: u32 = u32::MAX;

/// Catalog types with the node numbering used throughout the crate.
///
/// `A(n)`: chain. `B(n)`: chain with `m_{n-1,n}=4`. `D(r)` (rank `r`): chain `1..r-2`
/// with `r-1` and `r` both attached to `r-2`. `E(n)`: chain `1..n-1` with `n` attached
/// to `3`. `F4`: `m_{23}=4`. `H(n)`: chain with `m_{n-1,n}=5`. `I2(m)`: rank 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl TypeLabel {
    pub fn rank(self) -> usize {
        match self {
            TypeLabel::A(n) | TypeLabel::B(n) | TypeLabel::D(n) | TypeLabel::E(n) | TypeLabel::H(n) => n,
            TypeLabel::F4 => 4,
            TypeLabel::I2(_) => 2,
        }
    }

    /// Coxeter number.
    pub fn coxeter_number(self) -> Option<u64> {
        Some(match self {
            TypeLabel::A(n) => n as u64 + 1,
            TypeLabel::B(n) => 2 * n as u64,
            TypeLabel::D(r) => 2 * (r as u64 - 1),
            TypeLabel::E(6) => 12,
            TypeLabel::E(7) => 18,
            TypeLabel::E(8) => 30,
            TypeLabel::E(_) => return None,
            TypeLabel::F4 => 12,
            TypeLabel::H(3) => 10,
            TypeLabel::H(4) => 30,
            TypeLabel::H(_) => return None,
            TypeLabel::I2(m) => {
                if m == INF {
                    return None;
                }
                m as u64
            }
        })
    }

    /// Parses `A4`, `B3`, `D5`, `E6`, `F4`, `H3`, `I2(8)`, `I2(inf)`, `I2:8`.
    pub fn parse(s: &str) -> Result<TypeLabel> {
        let s = s.trim();
        let bad = || Error::UnknownLabel(s.to_string());
        if let Some(rest) = s.strip_prefix("I2") {
            let p = rest
                .trim_start_matches(['(', ':', '_'])
                .trim_end_matches(')')
                .trim();
            let m = parse_entry(p).ok_or_else(bad)?;
            return Ok(TypeLabel::I2(m));
        }
        let (head, tail) = s.split_at(s.chars().next().map(|c| c.len_utf8()).ok_or_else(bad)?);
        let n: usize = tail.trim_start_matches('_').parse().map_err(|_| bad())?;
        match head {
            "A" => Ok(TypeLabel::A(n)),
            "B" | "C" => Ok(TypeLabel::B(n)),
            "D" => Ok(TypeLabel::D(n)),
            "E" => Ok(TypeLabel::E(n)),
            "F" if n == 4 => Ok(TypeLabel::F4),
            "H" => Ok(TypeLabel::H(n)),
            "G" if n == 2 => Ok(TypeLabel::I2(6)),
            _ => Err(bad()),
        }
    }

    pub fn family(self) -> &'static str {
        match self {
            TypeLabel::A(_) => "A",
            TypeLabel::B(_) => "B",
            TypeLabel::D(_) => "D",
            TypeLabel::E(_) => "E",
            TypeLabel::F4 => "F",
            TypeLabel::H(_) => "H",
            TypeLabel::I2(_) => "I2",
        }
    }
}

fn parse_entry(p: &str) -> Option<u32> {
    match p {
        "inf" | "oo" | "∞" | "infinity" | "0" => Some(INF),
        _ => p.parse::<u32>().ok().filter(|&m| m >= 2),
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TypeLabel::I2(m) if m == INF => write!(f, "I2(inf)"),
            TypeLabel::I2(m) => write!(f, "I2({m})"),
            TypeLabel::F4 => write!(f, "F4"),
            l => write!(f, "{}{}", l.family(), l.rank()),
        }
    }
}

/// Word-problem backend selected from the matrix entries.
#[derive(Clone, Debug)]
pub(crate) enum Backend {
    /// Rank <= 1.
    Small,
    /// Rank 2, dihedral of order `2m`.
    Dihedral(u32),
    /// Root-sign test over Z[phi]; `cartan[i*r+j] = <alpha_i^vee, alpha_j>`.
    Geometric(Vec<ZPhi>),
    Unsupported(String),
}

/// A Coxeter matrix over `{1..=rank}`.
#[derive(Clone)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<u32>,
    label: Option<TypeLabel>,
    pub(crate) backend: Backend,
}

impl PartialEq for CoxeterMatrix {
    fn eq(&self, o: &Self) -> bool {
        self.rank == o.rank && self.entries == o.entries
    }
}
impl Eq for CoxeterMatrix {}

impl std::hash::Hash for CoxeterMatrix {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.rank.hash(h);
        self.entries.hash(h);
    }
}

impl fmt::Debug for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.label {
            return write!(f, "{l}");
        }
        write!(f, "CoxeterMatrix{:?}", self.rows())
    }
}

impl CoxeterMatrix {
    /// Builds a matrix from a full table; `INF` (or `0` off the diagonal) means infinity.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Arc<CoxeterMatrix>> {
        Self::with_label(rows, None)
    }

    fn with_label(rows: Vec<Vec<u32>>, label: Option<TypeLabel>) -> Result<Arc<CoxeterMatrix>> {
        let rank = rows.len();
        if rank > MAX_RANK {
            return Err(Error::InvalidMatrix(format!("rank {rank} exceeds {MAX_RANK}")));
        }
        let mut entries = vec![1u32; rank * rank];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidMatrix("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                let v = if i != j && v == 0 { INF } else { v };
                if i == j && v != 1 {
                    return Err(Error::InvalidMatrix(format!("diagonal entry ({},{}) is {v}", i + 1, j + 1)));
                }
                if i != j && v < 2 {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry ({},{}) is {v}", i + 1, j + 1)));
                }
                entries[i * rank + j] = v;
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if entries[i * rank + j] != entries[j * rank + i] {
                    return Err(Error::InvalidMatrix("matrix is not symmetric".into()));
                }
            }
        }
        let backend = make_backend(rank, &entries);
        Ok(Arc::new(CoxeterMatrix { rank, entries, label, backend }))
    }

    /// Catalog constructor. `n` is the rank, except for `I2` where it is the entry `m`
    /// (`0` meaning infinity).
    pub fn from_label(family: &str, n: usize) -> Result<Arc<CoxeterMatrix>> {
        let label = match family {
            "A" => TypeLabel::A(n),
            "B" | "C" => TypeLabel::B(n),
            "D" => TypeLabel::D(n),
            "E" => TypeLabel::E(n),
            "F" => {
                if n != 4 {
                    return Err(Error::RankOutOfRange { label: "F".into(), rank: n });
                }
                TypeLabel::F4
            }
            "H" => TypeLabel::H(n),
            "I2" | "I" => TypeLabel::I2(if n == 0 { INF } else { n as u32 }),
            _ => return Err(Error::UnknownLabel(family.to_string())),
        };
        Self::from_type(label)
    }

    pub fn from_type(label: TypeLabel) -> Result<Arc<CoxeterMatrix>> {
        let range_err = |r: usize| Error::RankOutOfRange { label: label.family().to_string(), rank: r };
        let r = label.rank();
        let mut rows = vec![vec![2u32; r]; r];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut set = |i: usize, j: usize, m: u32| {
            rows[i - 1][j - 1] = m;
            rows[j - 1][i - 1] = m;
        };
        match label {
            TypeLabel::A(n) => {
                for i in 1..n {
                    set(i, i + 1, 3);
                }
            }
            TypeLabel::B(n) => {
                if n < 2 {
                    return Err(range_err(n));
                }
                for i in 1..n - 1 {
                    set(i, i + 1, 3);
                }
                set(n - 1, n, 4);
            }
            TypeLabel::D(n) => {
                if n < 4 {
                    return Err(range_err(n));
                }
                for i in 1..n - 2 {
                    set(i, i + 1, 3);
                }
                set(n - 2, n - 1, 3);
                set(n - 2, n, 3);
            }
            TypeLabel::E(n) => {
                if !(6..=8).contains(&n) {
                    return Err(range_err(n));
                }
                for i in 1..n - 1 {
                    set(i, i + 1, 3);
                }
                set(3, n, 3);
            }
            TypeLabel::F4 => {
                set(1, 2, 3);
                set(2, 3, 4);
                set(3, 4, 3);
            }
            TypeLabel::H(n) => {
                if !(3..=4).contains(&n) {
                    return Err(range_err(n));
                }
                for i in 1..n - 1 {
                    set(i, i + 1, 3);
                }
                set(n - 1, n, 5);
            }
            TypeLabel::I2(m) => {
                if m < 2 {
                    return Err(range_err(m as usize));
                }
                set(1, 2, m);
            }
        }
        Self::with_label(rows, Some(label))
    }

    /// Parses a label string such as `B3` or `I2(8)`.
    pub fn parse(s: &str) -> Result<Arc<CoxeterMatrix>> {
        Self::from_type(TypeLabel::parse(s)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> Option<TypeLabel> {
        self.label
    }

    pub fn full(&self) -> Mask {
        Mask::full(self.rank)
    }

    /// `m_{ij}` with 1-based indices; `INF` for infinity.
    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.rank + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| self.entries[i * self.rank..(i + 1) * self.rank].to_vec())
            .collect()
    }

    pub fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::LetterOutOfRange { letter: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    /// Neighbours of `i` in the Coxeter graph inside `within`.
    pub fn neighbours(&self, i: usize, within: Mask) -> Mask {
        within.iter().filter(|&j| j != i && self.m(i, j) >= 3).collect()
    }

    /// `J` and `K` are orthogonal: disjoint and no edge between them.
    pub fn orthogonal(&self, j: Mask, k: Mask) -> bool {
        j.iter().all(|a| k.iter().all(|b| a != b && self.m(a, b) == 2))
    }

    /// `J\K` orthogonal to `K` and `K\J` orthogonal to `J`.
    pub fn weakly_orthogonal(&self, j: Mask, k: Mask) -> bool {
        self.orthogonal(j.minus(k), k) && self.orthogonal(k.minus(j), j)
    }

    pub fn self_orthogonal(&self, j: Mask) -> bool {
        j.iter().all(|a| j.iter().all(|b| a == b || self.m(a, b) == 2))
    }

    /// Connected components of the Coxeter graph restricted to `j`, ordered by minimum.
    pub fn components(&self, j: Mask) -> Vec<Mask> {
        let mut left = j;
        let mut out = Vec::new();
        while let Some(s) = left.min() {
            let mut comp = Mask::single(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = Mask::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbours(v, j));
                }
                frontier = next.minus(comp);
                comp = comp.union(next);
            }
            out.push(comp);
            left = left.minus(comp);
        }
        out
    }

    pub fn is_connected(&self, j: Mask) -> bool {
        self.components(j).len() <= 1
    }

    /// Principal submatrix on `j`, renumbered increasingly.
    pub fn restrict(&self, j: Mask) -> Arc<CoxeterMatrix> {
        let idx = j.to_vec();
        let rows = idx
            .iter()
            .map(|&a| idx.iter().map(|&b| self.m(a, b)).collect())
            .collect();
        Self::new(rows).expect("principal submatrix of a Coxeter matrix")
    }

    /// JSON form: `{"type":"B","rank":3}` for catalog matrices, else explicit entries (0 = infinity).
    pub fn to_json(&self) -> Value {
        match self.label {
            Some(TypeLabel::I2(m)) => json!({"type": "I2", "m": if m == INF { 0 } else { m }}),
            Some(l) => json!({"type": l.family(), "rank": l.rank()}),
            None => {
                let rows: Vec<Vec<u32>> = self
                    .rows()
                    .into_iter()
                    .map(|r| r.into_iter().map(|v| if v == INF { 0 } else { v }).collect())
                    .collect();
                json!({"rank": self.rank, "entries": rows})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Arc<CoxeterMatrix>> {
        let bad = |s: &str| Error::InvalidMatrix(s.to_string());
        if let Some(t) = v.get("type").and_then(Value::as_str) {
            if t == "I2" || t == "I" {
                let m = v
                    .get("m")
                    .or_else(|| v.get("param"))
                    .and_then(Value::as_u64)
                    .ok_or_else(|| bad("I2 needs an integer field `m`"))?;
                return Self::from_label("I2", m as usize);
            }
            let r = v
                .get("rank")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("missing `rank`"))?;
            return Self::from_label(t, r as usize);
        }
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("need `type` or `entries`"))?;
        let mut rows = Vec::new();
        for row in entries {
            let row = row.as_array().ok_or_else(|| bad("rows must be arrays"))?;
            let mut r = Vec::new();
            for e in row {
                let x = e.as_u64().ok_or_else(|| bad("entries must be integers"))?;
                r.push(if x == 0 { INF } else { x as u32 });
            }
            rows.push(r);
        }
        if let Some(r) = v.get("rank").and_then(Value::as_u64) {
            if r as usize != rows.len() {
                return Err(bad("`rank` does not match `entries`"));
            }
        }
        Self::new(rows)
    }
}

fn make_backend(rank: usize, entries: &[u32]) -> Backend {
    match rank {
        0 | 1 => Backend::Small,
        2 => Backend::Dihedral(entries[1]),
        _ => {
            let mut cartan = vec![ZPhi::ZERO; rank * rank];
            for i in 0..rank {
                for j in 0..rank {
                    if i == j {
                        cartan[i * rank + j] = ZPhi::int(2);
                        continue;
                    }
                    let m = entries[i * rank + j];
                    // a_ij a_ji = 4 cos^2(pi/m); orientation of the 4 and 6 edges is from smaller to larger index
                    let v = match m {
                        2 => ZPhi::ZERO,
                        3 => ZPhi::int(-1),
                        4 => ZPhi::int(if i < j { -1 } else { -2 }),
                        5 => -ZPhi::PHI,
                        6 => ZPhi::int(if i < j { -1 } else { -3 }),
                        INF => ZPhi::int(-2),
                        _ => {
                            return Backend::Unsupported(format!(
                                "entry {m} in a matrix of rank {rank}; supported entries are 2,3,4,5,6,inf"
                            ))
                        }
                    };
                    cartan[i * rank + j] = v;
                }
            }
            Backend::Geometric(cartan)
        }
    }
}
