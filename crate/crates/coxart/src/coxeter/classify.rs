//! Finite-type recognition of Coxeter graphs.

use super::mask::Mask;
use super::matrix::{CoxeterMatrix, TypeLabel, INF};

/// One connected component of a queried subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Mask,
    /// `None` when the component is not of finite type.
    pub label: Option<TypeLabel>,
    /// `order[k]` is the ambient vertex carrying catalog index `k+1` (empty when not finite).
    pub order: Vec<usize>,
}

impl Component {
    pub fn coxeter_number(&self) -> Option<u64> {
        self.label.and_then(|l| l.coxeter_number())
    }

    pub fn is_finite(&self) -> bool {
        self.label.is_some()
    }

    /// Catalog index (1-based) of an ambient vertex.
    pub fn catalog_index(&self, v: usize) -> Option<usize> {
        self.order.iter().position(|&x| x == v).map(|k| k + 1)
    }

    /// Ambient vertex of a catalog index (1-based).
    pub fn vertex(&self, k: usize) -> usize {
        self.order[k - 1]
    }

    /// The nontrivial diagram automorphism of the catalog graph used for the
    /// flip symmetries (A_n reversal, D swap of the two short arms, E6 and F4 reflections),
    /// as a table over ambient vertices of this component; identity for other types.
    pub fn diagram_flip(&self) -> Vec<(usize, usize)> {
        let r = self.order.len();
        let perm: Vec<usize> = match self.label {
            Some(TypeLabel::A(n)) => (1..=n).map(|i| n + 1 - i).collect(),
            Some(TypeLabel::D(n)) => (1..=n)
                .map(|i| if i == n { n - 1 } else if i == n - 1 { n } else { i })
                .collect(),
            Some(TypeLabel::E(6)) => vec![5, 4, 3, 2, 1, 6],
            Some(TypeLabel::F4) => vec![4, 3, 2, 1],
            _ => (1..=r).collect(),
        };
        (1..=r).map(|k| (self.vertex(k), self.vertex(perm[k - 1]))).collect()
    }
}

/// Report for a subset: components ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTypeReport {
    pub components: Vec<Component>,
}

impl FiniteTypeReport {
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(Component::is_finite)
    }

    /// Single label when the subset is one finite component.
    pub fn irreducible_label(&self) -> Option<TypeLabel> {
        match self.components.as_slice() {
            [c] => c.label,
            _ => None,
        }
    }

    /// Human-readable form such as `A2 x B3` or `NotFinite`.
    pub fn describe(&self) -> String {
        if self.components.is_empty() {
            return "A0".into();
        }
        self.components
            .iter()
            .map(|c| match c.label {
                Some(l) => l.to_string(),
                None => "NotFinite".into(),
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Classifies every connected component of `Γ(M_J)` against the finite-type catalog.
pub fn classify(m: &CoxeterMatrix, j: Mask) -> FiniteTypeReport {
    let components = m
        .components(j)
        .into_iter()
        .map(|c| {
            let (label, order) = match classify_component(m, c) {
                Some((l, o)) => (Some(l), o),
                None => (None, Vec::new()),
            };
            Component { vertices: c, label, order }
        })
        .collect();
    FiniteTypeReport { components }
}

/// `true` iff `W_J` is finite.
pub fn is_finite_type(m: &CoxeterMatrix, j: Mask) -> bool {
    m.components(j)
        .into_iter()
        .all(|c| classify_component(m, c).is_some())
}

fn classify_component(m: &CoxeterMatrix, c: Mask) -> Option<(TypeLabel, Vec<usize>)> {
    let vs = c.to_vec();
    let r = vs.len();
    let mut edges = Vec::new();
    for (x, &a) in vs.iter().enumerate() {
        for &b in &vs[x + 1..] {
            let e = m.m(a, b);
            if e == INF {
                return None;
            }
            if e >= 3 {
                edges.push((a, b, e));
            }
        }
    }
    match r {
        0 => return None,
        1 => return Some((TypeLabel::A(1), vs)),
        2 => {
            let e = m.m(vs[0], vs[1]);
            let l = match e {
                3 => TypeLabel::A(2),
                4 => TypeLabel::B(2),
                _ => TypeLabel::I2(e),
            };
            return Some((l, vs));
        }
        _ => {}
    }
    if edges.len() != r - 1 {
        return None;
    }
    let deg = |v: usize| m.neighbours(v, c).len();
    let branch: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) >= 3).collect();
    if vs.iter().any(|&v| deg(v) > 3) || branch.len() > 1 {
        return None;
    }
    if branch.is_empty() {
        // path; start from the smaller endpoint
        let start = vs.iter().copied().find(|&v| deg(v) == 1)?;
        let path = walk(m, c, start, None);
        let labels: Vec<u32> = path.windows(2).map(|w| m.m(w[0], w[1])).collect();
        let odd: Vec<usize> = (0..labels.len()).filter(|&k| labels[k] != 3).collect();
        if odd.is_empty() {
            return Some((TypeLabel::A(r), path));
        }
        if odd.len() != 1 {
            return None;
        }
        let k = odd[0];
        let e = labels[k];
        let at_end = k == 0 || k == labels.len() - 1;
        let oriented = |p: Vec<usize>| if k == 0 { p.into_iter().rev().collect() } else { p };
        return match e {
            4 if at_end => Some((TypeLabel::B(r), oriented(path))),
            4 if r == 4 => Some((TypeLabel::F4, path)),
            5 if at_end && (r == 3 || r == 4) => Some((TypeLabel::H(r), oriented(path))),
            _ => None,
        };
    }
    if edges.iter().any(|&(_, _, e)| e != 3) {
        return None;
    }
    let b = branch[0];
    let mut arms: Vec<Vec<usize>> = m
        .neighbours(b, c)
        .iter()
        .map(|v| walk(m, c, v, Some(b)))
        .collect();
    arms.sort_by_key(|a| (a.len(), std::cmp::Reverse(a[0])));
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    let chain = |long: &Vec<usize>, other: &[usize]| {
        let mut o: Vec<usize> = long.iter().rev().copied().collect();
        o.push(b);
        o.extend_from_slice(other);
        o
    };
    match lens.as_slice() {
        [1, 1, k] => {
            let mut o = chain(&arms[2], &[]);
            o.push(arms[0][0].min(arms[1][0]));
            o.push(arms[0][0].max(arms[1][0]));
            Some((TypeLabel::D(k + 3), o))
        }
        [1, 2, k @ 2..=4] => {
            // E: chain through the 2-arm, the branch and the long arm; the short arm is last
            let (two, long) = if *k == 2 && arms[2][0] < arms[1][0] {
                (&arms[2], &arms[1])
            } else {
                (&arms[1], &arms[2])
            };
            let mut o = chain(two, long);
            o.push(arms[0][0]);
            Some((TypeLabel::E(k + 4), o))
        }
        _ => None,
    }
}

/// Follows a path from `start`, not returning to `prev`.
fn walk(m: &CoxeterMatrix, c: Mask, start: usize, prev: Option<usize>) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = prev;
    let mut cur = start;
    loop {
        let next = m
            .neighbours(cur, c)
            .iter()
            .find(|&v| Some(v) != prev && !out.contains(&v));
        match next {
            Some(v) => {
                out.push(v);
                prev = Some(cur);
                cur = v;
            }
            None => return out,
        }
    }
}
