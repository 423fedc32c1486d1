//! Acceptance suite: one pass/fail line per criterion, all comparisons exact.

use coxart::artin::typea;
use coxart::burau::{self, int, Rat, RatPoly};
use coxart::hecke::{self, Poly};
use coxart::homs::conjecture;
use coxart::homs::count::{count_enumerate, count_formula, u_seq, w_seq};
use coxart::homs::{catalog, verification_instances};
use coxart::{ArtinElt, ArtinGrpElt, CoxElt, CoxeterMatrix, Mask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{HashMap, HashSet, VecDeque};
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

type Outcome = Result<String, String>;

fn mat(s: &str) -> Arc<CoxeterMatrix> {
    CoxeterMatrix::parse(s).unwrap()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_elements(m: &Arc<CoxeterMatrix>) -> Vec<CoxElt> {
    let mut seen = HashSet::new();
    let e = CoxElt::identity(m);
    seen.insert(e.clone());
    let mut q = VecDeque::from([e]);
    while let Some(x) = q.pop_front() {
        for i in 1..=m.rank() {
            let y = x.lmul_gen(i);
            if seen.insert(y.clone()) {
                q.push_back(y);
            }
        }
    }
    let mut v: Vec<CoxElt> = seen.into_iter().collect();
    v.sort();
    v
}

fn support(x: &CoxElt) -> Mask {
    x.word().into_iter().collect()
}

/// Demazure product of a word: the Hecke monoid product of its generators.
fn demazure(m: &Arc<CoxeterMatrix>, word: &[usize]) -> CoxElt {
    let mut x = CoxElt::identity(m);
    for &i in word {
        let s = x.rmul_gen(i);
        if s.len() > x.len() {
            x = s;
        }
    }
    x
}

fn longest(m: &Arc<CoxeterMatrix>, j: Mask) -> CoxElt {
    CoxElt::longest_element(m, j).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Vec<usize> {
    let l = rng.gen_range(0..=max_len);
    (0..l).map(|_| rng.gen_range(1..=rank)).collect()
}

fn alt(i: usize, j: usize, k: usize) -> Vec<usize> {
    (0..k).map(|t| if t % 2 == 0 { i } else { j }).collect()
}

/// All words equivalent to `w` under the defining braid relations.
fn braid_class(m: &CoxeterMatrix, w: &[usize]) -> HashSet<Vec<usize>> {
    let r = m.rank();
    let mut seen = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for i in 1..=r {
            for j in 1..=r {
                let mij = m.m(i, j) as usize;
                if i == j || mij > cur.len() {
                    continue;
                }
                let (lhs, rhs) = (alt(i, j, mij), alt(j, i, mij));
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

/// A random walk of braid-relation rewrites applied to `w`.
fn random_rewrite(m: &CoxeterMatrix, w: &[usize], steps: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let r = m.rank();
    let mut cur = w.to_vec();
    for _ in 0..steps {
        let mut sites = Vec::new();
        for i in 1..=r {
            for j in 1..=r {
                let mij = m.m(i, j) as usize;
                if i == j || mij > cur.len() {
                    continue;
                }
                let lhs = alt(i, j, mij);
                for p in 0..=cur.len() - mij {
                    if cur[p..p + mij] == lhs[..] {
                        sites.push((p, j, i, mij));
                    }
                }
            }
        }
        if sites.is_empty() {
            break;
        }
        let (p, a, b, k) = sites[rng.gen_range(0..sites.len())];
        cur[p..p + k].copy_from_slice(&alt(a, b, k));
    }
    cur
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

fn c1_multipar_counts() -> Outcome {
    let mut types: Vec<String> = (1..=6).map(|n| format!("A{n}")).collect();
    types.extend((2..=4).map(|n| format!("B{n}")));
    types.extend((4..=6).map(|n| format!("D{n}")));
    for t in &types {
        let m = mat(t);
        let e = hecke::multipar_enumerate(&m).map_err(|e| e.to_string())?;
        let r = hecke::multipar_recursion(&m).map_err(|e| e.to_string())?;
        check(e == r, || format!("{t}: enumeration {:?} vs recursion {:?}", e.coeffs(), r.coeffs()))?;
    }
    let a4 = mat("A4");
    let p = hecke::multiparabolic_set(&a4).map_err(|e| e.to_string())?.len();
    check(p == 68, || format!("|P(A4)| = {p}"))?;
    let d3 = hecke::multipar_recursion(&mat("A3")).map_err(|e| e.to_string())?.eval(1);
    check(d3 == 20, || format!("d3 = {d3}"))?;
    let mut vals = Vec::new();
    for (t, v) in [("E6", 856), ("E7", 2928), ("E8", 10000)] {
        let got = hecke::multipar_recursion(&mat(t)).map_err(|e| e.to_string())?.eval(1);
        check(got == v, || format!("{t}: {got} != {v}"))?;
        vals.push(got);
    }
    Ok(format!("{} types; |P(A4)|=68, d3=20, E6/E7/E8={:?}", types.len(), vals))
}

fn c2_chebyshev() -> Outcome {
    for n in 0..=10usize {
        let rec = if n == 0 {
            Poly::constant(1)
        } else {
            hecke::multipar_recursion(&mat(&format!("A{n}"))).map_err(|e| e.to_string())?
        };
        let cf = hecke::chebyshev_closed_form("A", n).map_err(|e| e.to_string())?;
        check(rec == cf, || format!("A{n}: {:?} vs {:?}", rec.coeffs(), cf.coeffs()))?;
    }
    for n in 3..=8usize {
        let rec = hecke::multipar_recursion(&mat(&format!("D{}", n + 1))).map_err(|e| e.to_string())?;
        let cf = hecke::chebyshev_closed_form("D", n).map_err(|e| e.to_string())?;
        check(rec == cf, || format!("D{}: {:?} vs {:?}", n + 1, rec.coeffs(), cf.coeffs()))?;
    }
    // D_3 = A_3 under the usual identification
    let d3 = hecke::chebyshev_closed_form("D", 2).map_err(|e| e.to_string())?;
    let a3 = hecke::multipar_recursion(&mat("A3")).map_err(|e| e.to_string())?;
    check(d3 == a3, || "D3 closed form differs from A3".into())?;
    Ok("A0..A10, D3..D9".into())
}

fn c3_mu() -> Outcome {
    let a4 = mat("A4");
    let s = |v: &[usize]| v.iter().copied().collect::<Mask>();
    let x = hecke::mu(&a4, s(&[3, 4]), s(&[2, 4])).map_err(|e| e.to_string())?;
    let y = hecke::mu(&a4, s(&[2, 4]), s(&[3, 4])).map_err(|e| e.to_string())?;
    // oracle: least k with the alternating star product of length k equal to w0 of the union
    let oracle = |j: Mask, k: Mask| {
        let (a, b) = (longest(&a4, j), longest(&a4, k));
        let target = longest(&a4, j.union(k));
        let mut acc = CoxElt::identity(&a4);
        for t in 1..=20u64 {
            let f = if t % 2 == 1 { &a } else { &b };
            acc = demazure(&a4, &[acc.word(), f.word()].concat());
            if acc == target {
                return Some(t);
            }
        }
        None
    };
    check(x == Some(3) && oracle(s(&[3, 4]), s(&[2, 4])) == Some(3), || format!("mu(34,24) = {x:?}"))?;
    check(y == Some(4) && oracle(s(&[2, 4]), s(&[3, 4])) == Some(4), || format!("mu(24,34) = {y:?}"))?;
    Ok("mu = 3 and 4".into())
}

fn c4_projection_law() -> Outcome {
    let mut total = 0;
    for t in ["A4", "B3", "D4"] {
        let m = mat(t);
        let full = m.full();
        let w0i = longest(&m, full);
        let w_of = |k: Mask| longest(&m, k).mul(&w0i);
        let subsets: Vec<Mask> = full.subsets().collect();
        let by_elt: HashMap<CoxElt, Mask> = subsets.iter().map(|&k| (w_of(k), k)).collect();
        for &j in &subsets {
            let w0j = longest(&m, j);
            for &k in &subsets {
                let wk = hecke::w_sub(&m, k).map_err(|e| e.to_string())?;
                check(wk == w_of(k), || format!("{t}: w_K mismatch for {k}"))?;
                // p_J by deleting letters outside J and taking the Demazure product
                let word: Vec<usize> = wk.word().into_iter().filter(|&i| j.contains(i)).collect();
                let pj = demazure(&m, &word);
                check(hecke::projection(j, &wk) == pj, || format!("{t}: projection oracle J={j} K={k}"))?;
                // J⋆K from the Hecke product of w_J and w_K
                let prod = demazure(&m, &[w_of(j).word(), wk.word()].concat());
                let l = *by_elt.get(&prod).ok_or_else(|| format!("{t}: w_J ⋆ w_K not parabolic"))?;
                let lib = hecke::star_subsets(&m, full, j, k).map_err(|e| e.to_string())?;
                check(lib == l, || format!("{t}: J⋆K for J={j} K={k}: {lib} vs {l}"))?;
                let rhs = longest(&m, l).mul(&w0j);
                check(pj == rhs, || format!("{t}: p_J(w_K) != w_(J⋆K;J) for J={j} K={k}"))?;
                check(hecke::parabolic_element(&m, l, j).map_err(|e| e.to_string())? == rhs, || {
                    format!("{t}: parabolic_element({l},{j})")
                })?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} pairs (J,K) in A4, B3, D4"))
}

fn c5_interval_star() -> Outcome {
    let iv = |a: usize, b: usize| Mask::interval(a as i64, b as i64);
    let mut count = 0;
    for n in 1..=5usize {
        let m = mat(&format!("A{n}"));
        for a1 in 1..=n {
            for b1 in a1..=n {
                for a in 1..=n {
                    for b in a..=n {
                        let got = hecke::star_subsets(&m, m.full(), iv(a1, b1), iv(a, b)).map_err(|e| e.to_string())?;
                        let lo = a + a1 - 1;
                        let expect = if b + b1 >= n + lo { iv(lo, b + b1 - n) } else { Mask::EMPTY };
                        check(got == expect, || format!("A{n}: [{a1},{b1}]⋆[{a},{b}] = {got}, expected {expect}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    for n in 2..=4usize {
        let m = mat(&format!("B{n}"));
        for a1 in 1..=n {
            for b1 in a1..=n {
                for a in 1..=n {
                    for b in a..=b1 {
                        let expect = if b1 < n {
                            Mask::EMPTY
                        } else if b < n {
                            iv(a + a1 - 1, (b + 1).saturating_sub(a1))
                        } else {
                            iv(a + a1 - 1, n)
                        };
                        for (x, y) in [(iv(a1, b1), iv(a, b)), (iv(a, b), iv(a1, b1))] {
                            let got = hecke::star_subsets(&m, m.full(), x, y).map_err(|e| e.to_string())?;
                            check(got == expect, || format!("B{n}: {x}⋆{y} = {got}, expected {expect}"))?;
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} interval pairs in A1..A5, B2..B4"))
}

fn c6_idempotents() -> Outcome {
    let mut out = Vec::new();
    for t in ["A3", "B3"] {
        let m = mat(t);
        let all = all_elements(&m);
        let mut idem = 0;
        for w in &all {
            let ww = demazure(&m, &[w.word(), w.word()].concat());
            check(hecke::star(w, w).map_err(|e| e.to_string())? == ww, || format!("{t}: star oracle at {w}"))?;
            let is_w0 = *w == longest(&m, support(w));
            check((ww == *w) == is_w0, || format!("{t}: {w} idempotent={} longest={is_w0}", ww == *w))?;
            check(hecke::is_idempotent(w) == is_w0.then(|| support(w)), || format!("{t}: is_idempotent({w})"))?;
            idem += usize::from(is_w0);
        }
        let subsets = m.full().subsets().count();
        check(idem == subsets, || format!("{t}: {idem} idempotents, {subsets} subsets"))?;
        out.push(format!("{t}: |W|={}, {idem} idempotents", all.len()));
    }
    Ok(out.join("; "))
}

fn c7_garside() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let nf = |m: &Arc<CoxeterMatrix>, w: &[usize]| ArtinElt::from_word(m, w).unwrap();
    for t in ["A4", "B3", "D4"] {
        let m = mat(t);
        let r = m.rank();
        let w0 = longest(&m, m.full());
        for case in 0..1000 {
            // confluence against the rewriting oracle on short words
            let w = random_word(&mut rng, r, 12);
            let a = nf(&m, &w);
            let class = braid_class(&m, &w);
            let mut members: Vec<&Vec<usize>> = class.iter().collect();
            members.sort();
            for v in members.iter().step_by(members.len().div_ceil(16).max(1)) {
                check(nf(&m, v) == a, || format!("{t}: {w:?} ~ {v:?} differ"))?;
            }
            let firsts: Mask = class.iter().filter_map(|v| v.first().copied()).collect();
            check(a.left_descents() == firsts, || format!("{t}: left descents of {w:?}"))?;
            if w.len() >= 2 {
                let mut v = w.clone();
                let p = rng.gen_range(0..v.len() - 1);
                v.swap(p, p + 1);
                check((nf(&m, &v) == a) == class.contains(&v), || format!("{t}: {w:?} vs {v:?}"))?;
            }
            // long words: random rewriting walk keeps the normal form
            let long = random_word(&mut rng, r, 40);
            let x = nf(&m, &long);
            let moved = random_rewrite(&m, &long, 30, &mut rng);
            check(nf(&m, &moved) == x, || format!("{t}: rewrite walk changed {long:?}"))?;
            check(x.len() == long.len() && x.word().len() == long.len(), || format!("{t}: length of {long:?}"))?;
            // cancellativity via division
            let y = nf(&m, &random_word(&mut rng, r, 40));
            let z = nf(&m, &random_word(&mut rng, r, 40));
            let xy = x.mul(&y);
            check(ArtinElt::left_divides(&x, &xy) == Some(y.clone()), || format!("{t}: left division case {case}"))?;
            check(ArtinElt::right_divides(&y, &xy) == Some(x.clone()), || format!("{t}: right division case {case}"))?;
            check((xy == x.mul(&z)) == (y == z), || format!("{t}: left cancellation case {case}"))?;
            check((xy == z.mul(&y)) == (x == z), || format!("{t}: right cancellation case {case}"))?;
            // op involution and anti-homomorphism
            check(x.op().op() == x, || format!("{t}: op involution case {case}"))?;
            check(xy.op() == y.op().mul(&x.op()), || format!("{t}: op anti-hom case {case}"))?;
            let rev: Vec<usize> = long.iter().rev().copied().collect();
            check(x.op() == nf(&m, &rev), || format!("{t}: op vs reversal case {case}"))?;
            // projections to W and to the Hecke monoid
            let (cox, hk, sf) = x.project();
            check(cox == CoxElt::reduce(&m, &long).unwrap(), || format!("{t}: Coxeter projection case {case}"))?;
            check(hk == demazure(&m, &long), || format!("{t}: Hecke projection case {case}"))?;
            check(sf == (cox.len() == long.len()), || format!("{t}: square-free flag case {case}"))?;
            // factors of a square-free element are square-free
            let s = CoxElt::reduce(&m, &random_word(&mut rng, r, 20)).unwrap();
            let sw = s.word();
            let cut = rng.gen_range(0..=sw.len());
            let (p, q) = sw.split_at(cut);
            let (tp, tq) = (nf(&m, p), nf(&m, q));
            let ts = ArtinElt::from_simple(&s);
            check(tp.mul(&tq) == ts, || format!("{t}: factorisation of {s}"))?;
            check(tp.is_square_free() && tq.is_square_free() && ts.is_square_free(), || {
                format!("{t}: square-free factors of {s}")
            })?;
            check(ArtinElt::left_divides(&ts, &ArtinElt::from_simple(&w0)).is_some(), || {
                format!("{t}: {s} does not divide Δ")
            })?;
        }
    }
    Ok("1000 cases each in A4, B3, D4".into())
}

fn c8_adm_dihedral() -> Outcome {
    let mut count = 0;
    for n in 2..=6 {
        for j in sets_with_ends(n) {
            let d = typea::tj_data(n, &j).map_err(|e| e.to_string())?;
            let gaps = j.windows(2).filter(|w| w[1] > w[0] + 1).count();
            check(d.g == gaps, || format!("g({j:?}) = {}", d.g))?;
            if gaps != 1 {
                continue;
            }
            let symmetric = j.iter().all(|&x| j.contains(&(n + 2 - x)));
            let m_expect = if symmetric { j.len() / 2 } else { j.len() };
            check(d.m == m_expect, || format!("m({j:?}) = {}, expected {m_expect}", d.m))?;
            check(d.order == 2 * d.m, || format!("order of {j:?}"))?;
            let k = 2 * d.m as u64;
            check(
                ArtinElt::braid_power(&d.tau1, &d.tau0, k) == ArtinElt::braid_power(&d.tau0, &d.tau1, k),
                || format!("n={n} J={j:?}: relation of length {k} fails"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} sets J with g(J)=1"))
}

fn c9_falsifier() -> Outcome {
    let qs: Vec<Rat> = vec![int(2), int(3)];
    let mut count = 0;
    for j in sets_with_ends(6) {
        let d = typea::tj_data(6, &j).map_err(|e| e.to_string())?;
        if d.g <= 1 {
            continue;
        }
        let r = burau::falsify_op_invariance(6, &j, &qs, 4 * j.len()).map_err(|e| e.to_string())?;
        check(r.symmetric_powers.is_empty(), || format!("J={j:?}: symmetric powers {:?}", r.symmetric_powers))?;
        count += 1;
    }
    Ok(format!("{count} sets J with g(J)>1 at n=6"))
}

fn c10_gap_one_identity() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let m = typea::type_a(n).map_err(|e| e.to_string())?;
        let delta = ArtinGrpElt::from_positive(&ArtinElt::garside_element(&m, m.full()).unwrap()).unwrap();
        for a in 1..=n {
            for b in a + 1..=n {
                let j: Vec<usize> = (1..=a).chain(b + 1..=n + 1).collect();
                let tj = ArtinGrpElt::from_positive(&typea::t_j(n, &j).unwrap()).unwrap();
                let inner = ArtinGrpElt::from_positive(&typea::interval_longest(&m, a + 1, b - 1).unwrap()).unwrap();
                let rhs = delta.pow(2).mul(&inner.pow(-2));
                check(tj.pow(j.len() as i64) == rhs, || format!("n={n} a={a} b={b}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs (a,b), n <= 5"))
}

fn c11_x_nk() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        let m = typea::type_a(2 * n - 1).map_err(|e| e.to_string())?;
        let d = ArtinElt::garside_element(&m, m.full()).unwrap();
        for k in 0..=n - 2 {
            let x = typea::x_nk(n, k).map_err(|e| e.to_string())?;
            check(x.pow(2) == d.pow(2), || format!("X_{{{n},{k}}}^2 != Δ^2"))?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs (n,k), n <= 4"))
}

fn c12_burau() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for q in [int(2), int(3), int(5)] {
        for n in 1..=6 {
            let g: Vec<_> = (1..=n).map(|i| burau::generator_matrix(n, &q, i).unwrap()).collect();
            for i in 0..n {
                check(g[i].is_symmetric(), || format!("T_{} not symmetric", i + 1))?;
                for j in 0..n {
                    let ok = if i.abs_diff(j) == 1 {
                        g[i].mul(&g[j]).mul(&g[i]) == g[j].mul(&g[i]).mul(&g[j])
                    } else {
                        g[i].mul(&g[j]) == g[j].mul(&g[i])
                    };
                    check(ok, || format!("n={n} q={q}: relation ({},{})", i + 1, j + 1))?;
                }
            }
            let m = typea::type_a(n).map_err(|e| e.to_string())?;
            for _ in 0..10 {
                let w = random_word(&mut rng, n, 20);
                let a = ArtinElt::from_word(&m, &w).unwrap();
                let img = burau::burau_image(&q, &a).map_err(|e| e.to_string())?;
                let rev: Vec<usize> = w.iter().rev().copied().collect();
                check(burau::burau_word(n, &q, &rev).unwrap() == img.transpose(), || format!("n={n} {w:?}: op vs transpose"))?;
                check(burau::op_is_transpose(&q, &a).unwrap(), || format!("n={n} {w:?}: op_is_transpose"))?;
            }
        }
    }
    let mut count = 0;
    for n in 1..=5 {
        for j in sets_with_ends(n) {
            if j.len() > n {
                continue;
            }
            let t = typea::t_j(n, &j).map_err(|e| e.to_string())?;
            for q in [int(2), int(3)] {
                let cp = burau::char_poly(&burau::burau_image(&q, &t).unwrap());
                let q2 = &q * &q;
                let expect = RatPoly::binomial(1, int(1))
                    .mul(&RatPoly::binomial(j.len(), num_traits::pow(q2.clone(), n + 1)))
                    .mul(&RatPoly::binomial(1, q2).pow(n - j.len()));
                check(cp == expect, || format!("n={n} J={j:?} q={q}: char poly"))?;
            }
            count += 1;
        }
    }
    Ok(format!("relations and op=transpose for n<=6; {count} characteristic polynomials"))
}

fn c13_catalog() -> Outcome {
    let inst = verification_instances();
    let mut fams = HashSet::new();
    let mut bad = Vec::new();
    for e in &inst {
        fams.insert(e.family);
        match catalog(e.family, &e.params) {
            Ok(spec) if spec.verified() => {}
            Ok(_) => bad.push(format!("{} {} not verified", e.family, e.params)),
            Err(err) => bad.push(format!("{} {}: {err}", e.family, e.params)),
        }
    }
    let summary = format!("{} instances across {} families", inst.len(), fams.len());
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {} fail: {}", bad.len(), bad.join("; ")))
    }
}

fn c14_counting() -> Outcome {
    let fc = |f: &str, n: usize| -> Result<(u64, u64), String> {
        Ok((count_formula(f, n).map_err(|e| e.to_string())?, count_enumerate(f, n).map_err(|e| e.to_string())?))
    };
    let ranges: [(&str, std::ops::RangeInclusive<usize>); 4] =
        [("hom-b2-a", 1..=8), ("hom-b2-b", 2..=6), ("hom-b2-d", 3..=6), ("b2-a2n-1", 2..=5)];
    for (f, rg) in ranges {
        for n in rg {
            let (a, b) = fc(f, n)?;
            check(a == b, || format!("{f} n={n}: formula {a}, enumeration {b}"))?;
        }
    }
    // weakly orthogonal pairs counted on the path graph directly
    let ortho = |x: u32, y: u32| x & y == 0 && x & (y << 1) == 0 && y & (x << 1) == 0;
    let weak = |j: u32, k: u32| ortho(j & !k, k) && ortho(k & !j, j);
    let reflect = |k: u32, n: u32| (0..n).filter(|b| k >> b & 1 == 1).fold(0u32, |acc, b| acc | 1 << (n - 1 - b));
    for r in 0..=6u32 {
        let w: u64 = (0..1u32 << r).map(|j| (0..1u32 << r).filter(|&k| weak(j, k)).count() as u64).sum();
        check(w == w_seq(r as usize), || format!("w_{r}: {w} vs {}", w_seq(r as usize)))?;
        for n in [2 * r, 2 * r + 1] {
            if n == 0 {
                continue;
            }
            let u = (0..1u32 << n).filter(|&k| weak(k, reflect(k, n))).count() as u64;
            let idx = (n as usize + 1) / 2;
            check(u == u_seq(idx), || format!("u at n={n}: {u} vs u_{idx}={}", u_seq(idx)))?;
        }
        let (a, b) = fc("w", r as usize)?;
        check(a == b, || format!("library w_{r}"))?;
        let (a, b) = fc("u", r as usize)?;
        check(a == b, || format!("library u_{r}"))?;
    }
    Ok("B2 families into A_n (n<=8), B_n (n<=6), D_{n+1} (n<=6), A_{2n-1} (n<=5); w_r, u_r for r<=6".into())
}

fn c15_conjectures() -> Outcome {
    let mut parts = Vec::new();
    for t in ["A4", "B3"] {
        let f = hecke::projection_multiparabolic_failures(&mat(t)).map_err(|e| e.to_string())?;
        parts.push(format!("pj-multipar {t}: {}", if f.is_empty() { "holds".into() } else { format!("{} failures", f.len()) }));
    }
    for (t, known) in [("A4", 2), ("A5", 13)] {
        let r = hecke::multipar_closure(&mat(t)).map_err(|e| e.to_string())?;
        let tag = if r.extra.len() == known { "as expected" } else { "UNEXPECTED" };
        parts.push(format!("closure {t}: {} extra ({tag})", r.extra.len()));
    }
    for t in ["A2", "A3", "A5", "B3", "D4", "E6"] {
        let r = conjecture::all_homs_a2(&mat(t)).map_err(|e| e.to_string())?;
        parts.push(format!("all-homs-a2 {t}: {} found, {} outside, {} missing", r.found.len(), r.outside.len(), r.missing.len()));
    }
    for t in ["A3", "A4", "B3", "B4", "D4", "F4"] {
        let r = conjecture::all_homs_b2(&mat(t)).map_err(|e| e.to_string())?;
        parts.push(format!("all-homs-b2 {t}: {} found, {} outside, {} missing", r.found.len(), r.outside.len(), r.missing.len()));
    }
    Ok(parts.join("; "))
}

#[test]
fn acceptance() {
    let criteria: Vec<(usize, fn() -> Outcome)> = vec![
        (1, c1_multipar_counts),
        (2, c2_chebyshev),
        (3, c3_mu),
        (4, c4_projection_law),
        (5, c5_interval_star),
        (6, c6_idempotents),
        (7, c7_garside),
        (8, c8_adm_dihedral),
        (9, c9_falsifier),
        (10, c10_gap_one_identity),
        (11, c11_x_nk),
        (12, c12_burau),
        (13, c13_catalog),
        (14, c14_counting),
        (15, c15_conjectures),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (i, f) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        let line = match &res {
            Ok(msg) if i == 15 => format!("criterion {i}: REPORT ({secs:.1}s) {msg}"),
            Ok(msg) => format!("criterion {i}: PASS ({secs:.1}s) {msg}"),
            Err(msg) => format!("criterion {i}: FAIL ({secs:.1}s) {msg}"),
        };
        // written to stderr directly so the lines show without --nocapture
        writeln!(err, "{line}").unwrap();
        if res.is_err() {
            failed.push(i);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
