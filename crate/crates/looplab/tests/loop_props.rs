use mv_core::{Coweight, RootDatum, Series};
use mv_looplab::factor::factor_y;
use mv_looplab::grass::{coset_equal, mu_minus, mu_plus, sl};
use mv_looplab::matrix::{gen_t, gen_torus, gen_x, gen_xi, gen_y, y_product, LaurentMatrix};
use mv_looplab::series::coef;
use mv_looplab::trop::{lusztig_from_string, string_from_lusztig};
use mv_looplab::{Laurent, LoopError, TROP_PREC};
use proptest::prelude::*;

fn series() -> impl Strategy<Value = Laurent> {
    (-5i64..5, prop::collection::vec(-20i64..20, 1..4), prop::option::of(8i64..16)).prop_filter_map(
        "leading coefficient must be nonzero",
        |(v, cs, cap)| {
            (cs[0] != 0).then(|| {
                Laurent::from_terms(cs.iter().enumerate().map(|(k, &c)| (v + k as i64, coef(c))), cap.map(|c| v + c))
            })
        },
    )
}

/// An element of `SL_n(O)`: a product of root subgroup elements over `O`.
fn integral_element(n: usize) -> impl Strategy<Value = LaurentMatrix> {
    let d = sl(n);
    let roots = d.positive_roots.clone();
    prop::collection::vec((0..roots.len(), any::<bool>(), 0i64..3, -9i64..9), 1..6).prop_map(move |fs| {
        let mut g = LaurentMatrix::identity(n);
        for (r, neg, e, c) in fs {
            let a = if neg { -&roots[r] } else { roots[r].clone() };
            g = g.mul(&gen_x(n, &a, &Laurent::monomial(coef(c), e)).unwrap());
        }
        g
    })
}

fn unit_product(word: Vec<usize>) -> impl Strategy<Value = (Vec<usize>, Vec<Laurent>)> {
    let len = word.len();
    prop::collection::vec((-3i64..4, 1i64..50, -50i64..50), len).prop_map(move |ps| {
        let p = ps
            .into_iter()
            .map(|(v, a, b)| Laurent::from_terms([(v, coef(a)), (v + 1, coef(b))], None))
            .collect();
        (word.clone(), p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn valuation_is_additive(p in series(), q in series()) {
        let pq = &p * &q;
        prop_assert_eq!(pq.val().unwrap(), p.val().unwrap() + q.val().unwrap());
    }

    #[test]
    fn valuations_stay_below_cap(p in series(), q in series()) {
        for x in [&p + &q, &p * &q, p.inv(6).unwrap()] {
            match (x.val(), x.cap()) {
                (Ok(v), Some(c)) => prop_assert!(v < c),
                (Err(LoopError::Indistinguishable(_)), Some(_)) => {}
                (Ok(_), None) => {}
                (r, c) => prop_assert!(false, "{:?} with cap {:?}", r, c),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn mu_is_a_coset_invariant(lam in prop::collection::vec(-3i64..4, 2), k in integral_element(3), u in integral_element(3)) {
        let g = u.mul(&gen_t(3, &lam));
        let h = g.mul(&k);
        prop_assert!(coset_equal(&g, &h).unwrap());
        prop_assert_eq!(mu_plus(&g).unwrap(), mu_plus(&h).unwrap());
        prop_assert_eq!(mu_minus(&g).unwrap(), mu_minus(&h).unwrap());
    }

    #[test]
    fn mu_plus_dominates_mu_minus(ws in prop::collection::vec((1usize..4, -3i64..3, 1i64..20), 1..7)) {
        let mut g = LaurentMatrix::identity(4);
        for (i, v, a) in ws {
            g = g.mul(&gen_y(4, i, &Laurent::monomial(coef(a), v)));
        }
        let d = RootDatum::new(Series::A, 3).unwrap();
        prop_assert!(d.dominance_leq(&mu_minus(&g).unwrap(), &mu_plus(&g).unwrap()));
    }

    #[test]
    fn rank_one_commutation(a in series(), b in series(), lam in prop::collection::vec(-2i64..3, 2)) {
        // x_α(a) y_α(b) = y_α(b/u) u^{α^∨} x_α(a/u) with u = 1 + ab
        let u = &Laurent::one() + &(&a * &b);
        prop_assume!(u.val().is_ok());
        let ui = u.inv(12).unwrap();
        let lhs = gen_xi(2, 1, &a).mul(&gen_y(2, 1, &b));
        let rhs = gen_y(2, 1, &(&b * &ui)).mul(&gen_torus(2, 1, &u, 12).unwrap()).mul(&gen_xi(2, 1, &(&a * &ui)));
        prop_assert!(lhs.agrees_with(&rhs));
        // t^λ x_α(a) t^{−λ} = x_α(t^{⟨α,λ⟩} a) for α = ε₁ − ε₃ in SL_3
        let t = gen_t(3, &lam);
        let root = mv_core::Root(vec![1, 1]);
        let pair = lam[0] + lam[1];
        let lhs = t.mul(&gen_x(3, &root, &a).unwrap()).mul(&t.inverse());
        prop_assert!(lhs.agrees_with(&gen_x(3, &root, &(&Laurent::t(pair) * &a)).unwrap()));
    }

    #[test]
    fn factor_y_inverts_products((word, p) in prop_oneof![
        unit_product(vec![1, 2, 1]),
        unit_product(vec![2, 1, 2]),
        unit_product(vec![2, 1, 3, 2, 1, 3]),
    ]) {
        let n = if word.len() == 3 { 3 } else { 4 };
        let q = factor_y(&y_product(n, &word, &p), &word, 32).unwrap();
        for (x, y) in p.iter().zip(&q) {
            prop_assert_eq!(x.val().unwrap(), y.val().unwrap());
            match y.cap() {
                Some(c) => prop_assert_eq!(&x.truncate(c), y),
                None => prop_assert_eq!(x, y),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn transition_maps_are_mutually_inverse(m in prop::collection::vec(-4i64..5, 3), w in any::<bool>(), seed in 0u64..1000) {
        let word = if w { [1, 2, 1] } else { [2, 1, 2] };
        let n_vec = lusztig_from_string(3, &word, &m, 3, seed, TROP_PREC).unwrap();
        prop_assert_eq!(string_from_lusztig(3, &word, &n_vec, 3, seed, TROP_PREC).unwrap(), m.clone());
        let back = string_from_lusztig(3, &word, &m, 3, seed, TROP_PREC).unwrap();
        prop_assert_eq!(lusztig_from_string(3, &word, &back, 3, seed, TROP_PREC).unwrap(), m);
    }
}

#[test]
fn transition_inverse_in_sl4() {
    let word = [2, 1, 3, 2, 1, 3];
    for m in [[0, 0, 0, 0, 0, 0], [-1, 0, -2, 1, 0, 0], [2, -1, 0, 0, 3, -1]] {
        let n_vec = lusztig_from_string(4, &word, &m, 2, 3, TROP_PREC).unwrap();
        assert_eq!(string_from_lusztig(4, &word, &n_vec, 2, 3, TROP_PREC).unwrap(), m.to_vec());
    }
}

#[test]
fn coweight_sanity() {
    assert_eq!(mu_plus(&gen_t(3, &[2, -1])).unwrap(), Coweight::from_ints(&[2, -1]));
}
