use coxart::artin::typea::{self, IntervalSetJ};
use coxart::{ArtinElt, ArtinGrpElt, CoxElt, CoxeterMatrix, Mask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

fn mat(s: &str) -> Arc<CoxeterMatrix> {
    CoxeterMatrix::parse(s).unwrap()
}

fn nf(m: &Arc<CoxeterMatrix>, w: &[usize]) -> ArtinElt {
    ArtinElt::from_word(m, w).unwrap()
}

fn words_of(a: &ArtinElt) -> Vec<Vec<usize>> {
    a.factors().iter().map(CoxElt::word).collect()
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Vec<usize> {
    let l = rng.gen_range(0..=max_len);
    (0..l).map(|_| rng.gen_range(1..=rank)).collect()
}

/// All words equivalent to `w` under the defining braid relations.
fn braid_class(m: &CoxeterMatrix, w: &[usize]) -> HashSet<Vec<usize>> {
    let r = m.rank();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 1..=r {
            for j in 1..=r {
                if i == j {
                    continue;
                }
                let mij = m.m(i, j) as usize;
                if mij > cur.len() {
                    continue;
                }
                let lhs: Vec<usize> = (0..mij).map(|t| if t % 2 == 0 { i } else { j }).collect();
                let rhs: Vec<usize> = (0..mij).map(|t| if t % 2 == 0 { j } else { i }).collect();
                for p in 0..=cur.len() - mij {
                    if cur[p..p + mij] == lhs[..] {
                        let mut nw = cur.clone();
                        nw[p..p + mij].copy_from_slice(&rhs);
                        if seen.insert(nw.clone()) {
                            queue.push_back(nw);
                        }
                    }
                }
            }
        }
    }
    seen
}

#[test]
fn normal_form_examples() {
    let a2 = mat("A2");
    assert_eq!(words_of(&nf(&a2, &[1, 1])), vec![vec![1], vec![1]]);
    assert_eq!(words_of(&nf(&a2, &[1, 2, 1])).len(), 1);
    let x = nf(&a2, &[1, 2, 1, 2]);
    let y = nf(&a2, &[2, 1, 2, 1]);
    assert_eq!(x.factors().len(), 2);
    assert_eq!(x.factors()[0], CoxElt::longest_element(&a2, a2.full()).unwrap());
    assert_eq!(x.factors()[1].word(), vec![2]);
    assert_eq!(y.factors()[1].word(), vec![1]);
    assert_ne!(x, y);
    assert_eq!(nf(&a2, &[1, 2, 1]), nf(&a2, &[2, 1, 2]));
    let a3 = mat("A3");
    assert_eq!(nf(&a3, &[1, 2]).factors().len(), 1);
    assert!(ArtinElt::from_word(&a3, &[4]).is_err());
}

#[test]
fn normal_form_matches_rewriting_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in ["A2", "B2", "A3"] {
        let m = mat(s);
        for _ in 0..150 {
            let w = random_word(&mut rng, m.rank(), 12);
            let class = braid_class(&m, &w);
            let a = nf(&m, &w);
            assert_eq!(a.len(), w.len());
            for v in class.iter().take(40) {
                assert_eq!(nf(&m, v), a, "{s} {w:?} ~ {v:?}");
            }
            // greedy-head law: left descents are the first letters over the class
            let firsts: Mask = class.iter().filter_map(|v| v.first()).collect();
            assert_eq!(a.left_descents(), firsts, "{s} {w:?}");
            // a random word of the same length and content differs exactly when not in the class
            let mut v = w.clone();
            if v.len() >= 2 {
                let p = rng.gen_range(0..v.len() - 1);
                v.swap(p, p + 1);
                assert_eq!(nf(&m, &v) == a, class.contains(&v), "{s} {w:?} vs {v:?}");
            }
        }
    }
}

#[test]
fn monoid_laws_and_cancellativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in ["A4", "B3", "D4"] {
        let m = mat(s);
        for _ in 0..60 {
            let a = nf(&m, &random_word(&mut rng, m.rank(), 30));
            let b = nf(&m, &random_word(&mut rng, m.rank(), 30));
            let c = nf(&m, &random_word(&mut rng, m.rank(), 30));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b).len(), a.len() + b.len());
            assert_eq!(a.op().op(), a);
            assert_eq!(a.mul(&b).op(), b.op().mul(&a.op()));
            let ab = a.mul(&b);
            assert_eq!(ArtinElt::left_divides(&a, &ab), Some(b.clone()));
            assert_eq!(ArtinElt::right_divides(&b, &ab), Some(a.clone()));
            // ax = ay implies x = y
            let ac = a.mul(&c);
            assert_eq!(ab == ac, b == c);
            // projections
            let (cox, hk, sf) = a.project();
            let w = a.word();
            assert_eq!(cox, CoxElt::reduce(&m, &w).unwrap());
            assert_eq!(hk, coxart::hecke::hecke_from_word(&m, &w).unwrap());
            assert_eq!(sf, cox.len() == a.len());
        }
    }
}

#[test]
fn square_free_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = mat("B3");
    let w0 = CoxElt::longest_element(&m, m.full()).unwrap();
    for _ in 0..100 {
        let x = CoxElt::reduce(&m, &random_word(&mut rng, 3, 12)).unwrap();
        let t = ArtinElt::from_simple(&x);
        let word = x.word();
        let cut = rng.gen_range(0..=word.len());
        let (p, q) = word.split_at(cut);
        let (tp, tq) = (nf(&m, p), nf(&m, q));
        assert_eq!(tp.mul(&tq), t);
        assert!(tp.is_square_free() && tq.is_square_free());
        assert!(ArtinElt::left_divides(&t, &ArtinElt::from_simple(&w0)).is_some());
    }
}

#[test]
fn descent_sequence_form() {
    let a3 = mat("A3");
    let x = nf(&a3, &[1, 1, 1, 2, 2, 1, 3, 3, 2, 1]);
    assert_eq!(x.left_descents(), Mask::single(1));
    assert_eq!(x.hecke_image().left_descents(), a3.full());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for s in ["A3", "B3"] {
        let m = mat(s);
        for _ in 0..100 {
            let a = nf(&m, &random_word(&mut rng, m.rank(), 20));
            let seq = a.descent_sequence();
            let mut back = ArtinElt::identity(&m);
            for d in &seq {
                back = back.mul(&ArtinElt::garside_element(&m, *d).unwrap());
            }
            assert_eq!(back, a);
            let b = nf(&m, &random_word(&mut rng, m.rank(), 20));
            assert_eq!(b.descent_sequence() == seq, a == b);
        }
    }
}

#[test]
fn garside_elements() {
    let a2 = mat("A2");
    let d = ArtinElt::garside_element(&a2, a2.full()).unwrap();
    assert_eq!(d, nf(&a2, &[1, 2, 1]));
    assert_eq!(d.op(), d);
    assert!(d.project().2);
    let t1 = nf(&a2, &[1]);
    let t2 = nf(&a2, &[2]);
    assert_eq!(ArtinElt::sigma_twist(&a2, a2.full(), &t1).unwrap(), t2);
    assert_eq!(ArtinElt::left_divides(&t1, &d), Some(nf(&a2, &[2, 1])));
    assert_eq!(ArtinElt::left_divides(&t1, &t2), None);
    assert_eq!(ArtinElt::braid_power(&t1, &t2, 3), d);
    assert!(ArtinElt::braid_power(&t1, &t2, 0).is_identity());
    assert!(!nf(&a2, &[1, 1]).project().2);

    let b2 = mat("B2");
    let db = ArtinElt::garside_element(&b2, b2.full()).unwrap();
    let (u1, u2) = (nf(&b2, &[1]), nf(&b2, &[2]));
    assert_eq!(ArtinElt::braid_power(&u1, &u2, 4), db);
    let d2 = db.pow(2);
    assert_eq!(d2, nf(&b2, &[1, 2]).pow(4));
    for t in [&u1, &u2] {
        assert_eq!(t.mul(&d2), d2.mul(t));
    }

    // a Δ_J = Δ_J Σ_J(a), and Δ_J² central
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in ["A4", "D4", "B3", "E6"] {
        let m = mat(s);
        let dj = ArtinElt::garside_element(&m, m.full()).unwrap();
        for _ in 0..20 {
            let a = nf(&m, &random_word(&mut rng, m.rank(), 15));
            let sa = ArtinElt::sigma_twist(&m, m.full(), &a).unwrap();
            assert_eq!(a.mul(&dj), dj.mul(&sa));
            assert_eq!(a.mul(&dj.pow(2)), dj.pow(2).mul(&a));
        }
        for i in 1..=m.rank() {
            assert!(ArtinElt::left_divides(&nf(&m, &[i]), &dj).is_some());
        }
    }
    // Δ(X₂,₀ example) is not square free
    let a3 = mat("A3");
    let x = nf(&a3, &[1, 2, 1, 2, 3, 2]);
    assert_eq!(x.len(), 6);
    assert!(!x.project().2);
}

#[test]
fn coxeter_splitting() {
    for s in ["A1", "A2", "A3", "A4", "A5", "B3", "D4", "E6", "F4", "H3"] {
        let m = mat(s);
        // bipartition of the tree by parity of distance from vertex 1
        let mut colour = vec![usize::MAX; m.rank() + 1];
        colour[1] = 0;
        let mut stack = vec![1];
        while let Some(v) = stack.pop() {
            for u in m.neighbours(v, m.full()).iter() {
                if colour[u] == usize::MAX {
                    colour[u] = 1 - colour[v];
                    stack.push(u);
                }
            }
        }
        let j1: Mask = (1..=m.rank()).filter(|&i| colour[i] == 0).collect();
        let j2 = m.full().minus(j1);
        assert!(m.self_orthogonal(j1) && m.self_orthogonal(j2));
        let d1 = ArtinElt::garside_element(&m, j1).unwrap();
        let d2 = ArtinElt::garside_element(&m, j2).unwrap();
        let h = m.label().unwrap().coxeter_number().unwrap();
        assert_eq!(
            ArtinElt::braid_power(&d1, &d2, h),
            ArtinElt::garside_element(&m, m.full()).unwrap(),
            "{s}"
        );
    }
}

#[test]
fn weakly_orthogonal_commute() {
    let m = mat("A5");
    for j in m.full().subsets() {
        for k in m.full().subsets() {
            if m.weakly_orthogonal(j, k) {
                let dj = ArtinElt::garside_element(&m, j).unwrap();
                let dk = ArtinElt::garside_element(&m, k).unwrap();
                assert_eq!(dj.mul(&dk), dk.mul(&dj), "{j} {k}");
            }
        }
    }
}

#[test]
fn json_roundtrip() {
    let m = mat("B3");
    let a = nf(&m, &[1, 2, 3, 3, 2, 1, 2]);
    let v = a.to_json();
    assert_eq!(ArtinElt::from_json(&v).unwrap(), a);
    let flat = serde_json::json!({"matrix": m.to_json(), "word": [1, 2, 3, 3, 2, 1, 2]});
    assert_eq!(ArtinElt::from_json(&flat).unwrap(), a);
}

#[test]
fn group_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for s in ["A3", "B3", "D4"] {
        let m = mat(s);
        for _ in 0..40 {
            let w: Vec<i64> = (0..rng.gen_range(0..20))
                .map(|_| {
                    let l = rng.gen_range(1..=m.rank() as i64);
                    if rng.gen_bool(0.5) { l } else { -l }
                })
                .collect();
            let g = ArtinGrpElt::from_signed_word(&m, &w).unwrap();
            let id = ArtinGrpElt::identity(&m).unwrap();
            assert_eq!(g.mul(&g.inv()), id);
            assert_eq!(g.inv().mul(&g), id);
            assert_eq!(g.op().op(), g);
            let neg: Vec<i64> = w.iter().rev().map(|x| -x).collect();
            assert_eq!(ArtinGrpElt::from_signed_word(&m, &neg).unwrap(), g.inv());
            let h = ArtinGrpElt::from_signed_word(&m, &[1, -2, 1]).unwrap();
            assert_eq!(g.mul(&h).inv(), h.inv().mul(&g.inv()));
            assert_eq!(g.mul(&h).op(), h.op().mul(&g.op()));
            let sum: i64 = w.iter().map(|x| x.signum()).sum();
            assert_eq!(g.degree(), sum);
        }
        // positive elements embed
        let a = nf(&m, &[1, 2, 1, 3]);
        let b = nf(&m, &[2, 2, 3]);
        let ga = ArtinGrpElt::from_positive(&a).unwrap();
        let gb = ArtinGrpElt::from_positive(&b).unwrap();
        assert_eq!(ga.mul(&gb).to_positive(), Some(a.mul(&b)));
        // parabolic braids
        for j in m.full().subsets() {
            for k in m.full().subsets().filter(|k| j.is_subset(*k)) {
                let p = ArtinGrpElt::parabolic_braid(&m, j, k).unwrap().to_positive().unwrap();
                let wjk = CoxElt::longest_element(&m, j).unwrap().mul(&CoxElt::longest_element(&m, k).unwrap());
                assert_eq!(p, ArtinElt::from_simple(&wjk));
            }
        }
        let k = m.full();
        assert_eq!(
            ArtinGrpElt::parabolic_braid(&m, Mask::EMPTY, k).unwrap().to_positive().unwrap(),
            ArtinElt::garside_element(&m, k).unwrap()
        );
    }
    let inf = mat("I2(inf)");
    assert!(ArtinGrpElt::identity(&inf).is_err());
}

#[test]
fn transpositions() {
    let a2 = typea::type_a(2).unwrap();
    assert_eq!(typea::transposition(2, 1, 3).unwrap(), nf(&a2, &[1, 2, 1]));
    assert_eq!(typea::transposition(2, 1, 3).unwrap().op(), typea::transposition(2, 1, 3).unwrap());
    for n in 1..=6 {
        let m = typea::type_a(n).unwrap();
        for i in 1..=n + 1 {
            assert!(typea::transposition(n, i, i).unwrap().is_identity());
            for j in i + 1..=n + 1 {
                let t = typea::transposition(n, i, j).unwrap();
                assert_eq!(t.len(), 2 * (j - i) - 1);
                assert!(t.is_square_free());
                assert_eq!(t.op(), t);
                if j == i + 1 {
                    assert_eq!(t, nf(&m, &[i]));
                }
                if j > i + 1 {
                    let inner = typea::transposition(n, i + 1, j).unwrap();
                    assert_eq!(t, nf(&m, &[i]).mul(&inner).mul(&nf(&m, &[i])));
                }
                for k in 1..=n {
                    if ![i.wrapping_sub(1), i, j - 1, j].contains(&k) {
                        let tk = nf(&m, &[k]);
                        assert_eq!(tk.mul(&t), t.mul(&tk), "n={n} ({i},{j}) k={k}");
                    }
                }
                // the Coxeter image is the transposition (i j)
                let perm = perm_of(&t.coxeter_image(), n + 1);
                let mut expect: Vec<usize> = (1..=n + 1).collect();
                expect.swap(i - 1, j - 1);
                assert_eq!(perm, expect);
            }
        }
    }
    assert!(typea::transposition(3, 1, 6).is_err());
}

/// Permutation of `[1,n]` for a type `A_{n-1}` element, acting on positions.
fn perm_of(w: &CoxElt, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    for i in w.word() {
        p.swap(i - 1, i);
    }
    p
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !seen[s] {
            let mut l = 0;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = p[c] - 1;
                l += 1;
            }
            out.push(l);
        }
    }
    out.sort_unstable();
    out
}

fn sets_with_ends(n: usize) -> Vec<Vec<usize>> {
    Mask::interval(2, n as i64)
        .subsets()
        .map(|s| {
            let mut v = vec![1];
            v.extend(s.iter());
            v.push(n + 1);
            v
        })
        .collect()
}

#[test]
fn tj_data_examples() {
    let d = typea::tj_data(4, &[1, 2, 3, 4, 5]).unwrap();
    assert_eq!(d.g, 0);
    let m = typea::type_a(4).unwrap();
    assert_eq!(d.tau1, nf(&m, &[1, 3]));
    assert_eq!(d.tau0, nf(&m, &[2, 4]));
    let d = typea::tj_data(4, &[1, 2, 4, 5]).unwrap();
    assert_eq!(d.g, 1);
    assert!(d.set.is_symmetric());
    assert_eq!(d.m, 2);
    assert_eq!(IntervalSetJ::new(6, &[1, 3, 5, 7]).unwrap().g(), 3);
    assert_eq!(IntervalSetJ::new(4, &[1, 2, 5]).unwrap().g(), 1);
    assert!(typea::tj_data(4, &[2, 5]).is_err());
    for n in 1..=6 {
        for j in sets_with_ends(n) {
            let d = typea::tj_data(n, &j).unwrap();
            assert_eq!(d.t_j.len(), 2 * n - j.len() + 1, "{j:?}");
            assert_eq!(d.t_j, d.tau_tilde1.mul(&d.tau_tilde0));
            let mut ct = vec![1; n + 1 - j.len()];
            ct.push(j.len());
            ct.sort_unstable();
            assert_eq!(cycle_type(&perm_of(&d.t_j.coxeter_image(), n + 1)), ct, "{j:?}");
        }
    }
}

#[test]
fn admissible_dihedral_relations() {
    for n in 2..=6 {
        for j in sets_with_ends(n) {
            let d = typea::tj_data(n, &j).unwrap();
            if d.g != 1 {
                continue;
            }
            let k = d.order as u64;
            assert_eq!(d.order, 2 * d.m);
            assert_eq!(
                ArtinElt::braid_power(&d.tau1, &d.tau0, k),
                ArtinElt::braid_power(&d.tau0, &d.tau1, k),
                "n={n} J={j:?}"
            );
            // optimality: no smaller even exponent gives a relation
            for k2 in 1..k {
                assert_ne!(
                    ArtinElt::braid_power(&d.tau1, &d.tau0, k2),
                    ArtinElt::braid_power(&d.tau0, &d.tau1, k2),
                    "n={n} J={j:?} k={k2}"
                );
            }
        }
    }
}

#[test]
fn gap_one_power_identity() {
    for n in 2..=5 {
        let m = typea::type_a(n).unwrap();
        let delta = ArtinGrpElt::from_positive(&ArtinElt::garside_element(&m, m.full()).unwrap()).unwrap();
        for a in 1..=n {
            for b in a + 1..=n {
                let j: Vec<usize> = (1..=a).chain(b + 1..=n + 1).collect();
                let tj = ArtinGrpElt::from_positive(&typea::t_j(n, &j).unwrap()).unwrap();
                let inner = ArtinGrpElt::from_positive(&typea::interval_longest(&m, a + 1, b - 1).unwrap()).unwrap();
                let rhs = delta.pow(2).mul(&inner.pow(-2));
                assert_eq!(tj.pow(j.len() as i64), rhs, "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn conjugation_chain() {
    for n in 1..=6 {
        for j in sets_with_ends(n) {
            let u = typea::u_conjugator(n, &j).unwrap();
            let tj = ArtinGrpElt::from_positive(&typea::t_j(n, &j).unwrap()).unwrap();
            let inner = j.len() - 2;
            let target: Vec<usize> = (1..=inner + 1).chain(std::iter::once(n + 1)).collect();
            let tt = ArtinGrpElt::from_positive(&typea::t_j(n, &target).unwrap()).unwrap();
            assert_eq!(u.mul(&tj).mul(&u.inv()), tt, "n={n} J={j:?}");
        }
    }
}

#[test]
fn x_nk_squares() {
    let x = typea::x_nk(2, 0).unwrap();
    let a3 = typea::type_a(3).unwrap();
    assert_eq!(x, nf(&a3, &[1, 2, 1, 2, 3, 2]));
    for n in 2..=4 {
        let m = typea::type_a(2 * n - 1).unwrap();
        let d = ArtinElt::garside_element(&m, m.full()).unwrap();
        for k in 0..=n - 2 {
            let x = typea::x_nk(n, k).unwrap();
            assert_eq!(x.len(), d.len());
            assert!(!x.is_square_free());
            assert_eq!(x.pow(2), d.pow(2), "n={n} k={k}");
        }
    }
}

#[test]
fn interval_set_data() {
    let s = IntervalSetJ::new(6, &[1, 2, 5, 6, 7]).unwrap();
    assert_eq!(s.g(), 1);
    assert_eq!(s.gap(), Some((2, 4)));
    assert!(!s.is_symmetric());
    assert_eq!(s.m(), 5);
    let t = IntervalSetJ::new(6, &[1, 2, 3, 5, 6, 7]).unwrap();
    assert!(t.is_symmetric());
    assert_eq!(t.m(), 3);
    let u = IntervalSetJ::new(7, &[1, 2, 4, 6, 7, 8]).unwrap();
    assert_eq!(u.beta_minus(), Some(2));
    assert_eq!(u.beta_plus(), Some(3));
}
