use coxart::artin::typea;
use coxart::burau::{self, int, rat, RatMatrix, RatPoly};
use coxart::{ArtinElt, ArtinGrpElt, Mask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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
fn generators_and_relations() {
    for q in [int(2), int(3), int(5), rat(2, 3)] {
        for n in 1..=6 {
            let id = RatMatrix::identity(n + 1);
            assert_eq!(burau::burau_word(n, &q, &[]).unwrap(), id);
            for i in 1..=n {
                let t = burau::generator_matrix(n, &q, i).unwrap();
                assert!(t.is_symmetric());
                assert_eq!(t.det(), -(&q * &q));
                // T_i² = (1 - q²) T_i + q² id
                let q2 = &q * &q;
                assert_eq!(t.mul(&t), t.scale(&(int(1) - &q2)).add(&id.scale(&q2)));
                for j in 1..=n {
                    let s = burau::generator_matrix(n, &q, j).unwrap();
                    if i.abs_diff(j) == 1 {
                        assert_eq!(t.mul(&s).mul(&t), s.mul(&t).mul(&s));
                    } else {
                        assert_eq!(t.mul(&s), s.mul(&t));
                    }
                }
                let inv = burau::burau_signed_word(n, &q, &[-(i as i64)]).unwrap();
                assert_eq!(t.mul(&inv), id);
            }
            // v = Σ q^t e_t is fixed
            let v: Vec<_> = (1..=n + 1).map(|t| num_traits::pow(q.clone(), t)).collect();
            let a = burau::burau_word(n, &q, &(1..=n).rev().chain(1..=n).collect::<Vec<_>>()).unwrap();
            for r in 0..=n {
                let s: burau::Rat = (0..=n).map(|c| a.get(r, c) * &v[c]).sum();
                assert_eq!(s, v[r]);
            }
        }
    }
    assert!(burau::generator_matrix(3, &int(1), 1).is_err());
    assert!(burau::generator_matrix(3, &int(0), 1).is_err());
    let b3 = coxart::CoxeterMatrix::parse("B3").unwrap();
    assert!(burau::burau_image(&int(2), &ArtinElt::from_word(&b3, &[1]).unwrap()).is_err());
}

#[test]
fn homomorphism_and_transpose() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 2..=6 {
        let m = typea::type_a(n).unwrap();
        for _ in 0..10 {
            let w1: Vec<usize> = (0..rng.gen_range(0..15)).map(|_| rng.gen_range(1..=n)).collect();
            let w2: Vec<usize> = (0..rng.gen_range(0..15)).map(|_| rng.gen_range(1..=n)).collect();
            let a = ArtinElt::from_word(&m, &w1).unwrap();
            let b = ArtinElt::from_word(&m, &w2).unwrap();
            for q in [int(2), int(3), int(5)] {
                let ab = burau::burau_image(&q, &a.mul(&b)).unwrap();
                let pa = burau::burau_image(&q, &a).unwrap();
                let pb = burau::burau_image(&q, &b).unwrap();
                assert_eq!(ab, pa.mul(&pb));
                assert!(burau::op_is_transpose(&q, &a).unwrap());
                assert_eq!(burau::burau_word(n, &q, &w1).unwrap(), pa);
            }
        }
        let d = ArtinElt::garside_element(&m, m.full()).unwrap();
        assert!(burau::burau_image(&int(2), &d).unwrap().is_symmetric());
        // group elements
        let g = ArtinGrpElt::from_signed_word(&m, &[1, -2, 1, -1]).unwrap();
        assert_eq!(
            burau::burau_group(&int(3), &g).unwrap(),
            burau::burau_signed_word(n, &int(3), &[1, -2, 1, -1]).unwrap()
        );
    }
}

#[test]
fn characteristic_polynomials() {
    let id = RatMatrix::identity(4);
    assert_eq!(burau::char_poly(&id), RatPoly::binomial(1, int(1)).pow(4));
    let q = int(2);
    let tj = typea::t_j(4, &[1, 2, 5]).unwrap();
    let cp = burau::char_poly(&burau::burau_image(&q, &tj).unwrap());
    let expect = RatPoly::binomial(1, int(1))
        .mul(&RatPoly::binomial(3, int(1024)))
        .mul(&RatPoly::binomial(1, int(4)));
    assert_eq!(cp, expect);
    assert_eq!(cp.degree(), Some(5));
    for n in 1..=5 {
        for j in sets_with_ends(n) {
            if j.len() > n {
                continue;
            }
            let t = typea::t_j(n, &j).unwrap();
            for q in [int(2), int(3)] {
                let b = burau::burau_image(&q, &t).unwrap();
                assert_eq!(burau::char_poly(&b), burau::predicted_tj_char_poly(n, j.len(), &q), "n={n} {j:?}");
                assert_eq!(
                    burau::char_poly(&b.pow(j.len())),
                    burau::predicted_tj_power_char_poly(n, j.len(), &q),
                    "n={n} {j:?}"
                );
            }
        }
    }
    // symmetric sets [1,m] ∪ [n+2-m, n+1]: det(t - T^m) = (t-1)(t²-q^{2(n+1)})^m (t-q^{2m})^{n-2m}
    for n in 2..=6 {
        for mm in 1..=n / 2 {
            let j: Vec<usize> = (1..=mm).chain(n + 2 - mm..=n + 1).collect();
            let t = typea::t_j(n, &j).unwrap();
            let q = int(2);
            let q2 = int(4);
            let b = burau::burau_image(&q, &t).unwrap().pow(mm);
            let mut t2 = RatPoly::binomial(2, num_traits::pow(q2.clone(), n + 1));
            t2 = t2.pow(mm);
            let expect = RatPoly::binomial(1, int(1))
                .mul(&t2)
                .mul(&RatPoly::binomial(1, num_traits::pow(q2, mm)).pow(n - 2 * mm));
            assert_eq!(burau::char_poly(&b), expect, "n={n} m={mm}");
        }
    }
}

#[test]
fn falsifier() {
    let qs = burau::default_qs();
    let r = burau::falsify_op_invariance(6, &[1, 3, 5, 7], &qs, 24).unwrap();
    assert!(r.symmetric_powers.is_empty());
    assert!(!r.cells.is_empty());
    // J = [1,n+1]: T_J^{m(J)} = Δ for odd n, T_J^{2m(J)} = Δ² always
    let full: Vec<usize> = (1..=6).collect();
    let r = burau::falsify_op_invariance(5, &full, &qs, 12).unwrap();
    assert_eq!(typea::tj_data(5, &full).unwrap().m, 3);
    assert_eq!(r.symmetric_powers, vec![3, 6, 9, 12]);
    let full: Vec<usize> = (1..=5).collect();
    let r = burau::falsify_op_invariance(4, &full, &qs, 10).unwrap();
    assert_eq!(typea::tj_data(4, &full).unwrap().order, 5);
    assert_eq!(r.symmetric_powers, vec![5, 10]);
    let r = burau::falsify_op_invariance(4, &[1, 2, 4, 5], &qs, 8).unwrap();
    assert!(r.symmetric_powers.contains(&2));
    assert!(r.op_invariant_powers().contains(&2));
}
