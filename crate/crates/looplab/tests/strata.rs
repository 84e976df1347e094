use mv_core::affine::Affine;
use mv_core::gallery::GalleryModel;
use mv_core::{Coweight, RootDatum, Series};
use mv_looplab::grass::coset_equal;
use mv_looplab::matrix::gen_t_coweight;
use mv_looplab::sample::{crystal_op_sample, inclusion_sample, sample_cell, sample_ytilde, string_weight};
use mv_looplab::trop::transition_table;
use mv_looplab::TROP_PREC;

fn a2_adjoint() -> GalleryModel {
    let d = RootDatum::new(Series::A, 2).unwrap();
    let theta = d.theta_coroot();
    GalleryModel::minimal(Affine::new(d), &theta).unwrap()
}

#[test]
fn cells_of_the_adjoint_crystal() {
    let m = a2_adjoint();
    let d = m.datum().clone();
    let theta = d.theta_coroot();
    let ls = m.enumerate_ls(10_000).unwrap();
    assert_eq!(ls.galleries.len(), 8);
    for g in &ls.galleries {
        let nu = m.weight(g);
        let samples = sample_cell(&m, g, 5, 17, 32).unwrap();
        for s in &samples {
            assert_eq!(s.invariants.mu_plus, nu);
            assert!(d.dominance_leq(&d.dominant_conjugate(&s.invariants.orbit), &theta));
            if s.invariants.mu_plus == s.invariants.mu_minus {
                assert!(coset_equal(&s.point, &gen_t_coweight(3, &nu).unwrap()).unwrap());
            }
        }
        for i in 1..=2 {
            let Some(up) = m.root_e(g, i) else { continue };
            let want = m.weight(&up);
            let (_, eps, _) = m.crystal_maps(g, i);
            let pts: Vec<_> = samples.iter().map(|s| s.point.clone()).collect();
            for inv in crystal_op_sample(&pts, i, 1, eps, 23, 32).unwrap() {
                assert_eq!(inv.mu_plus, want);
            }
            for inv in crystal_op_sample(&pts, i, 0, eps, 29, 32).unwrap() {
                assert_eq!(inv.mu_plus, nu);
            }
            for inv in inclusion_sample(&m, g, i, 3, 31, 32).unwrap() {
                assert_eq!(inv.mu_plus, want);
            }
        }
    }
}

#[test]
fn ytilde_in_and_out_of_the_cone() {
    let word = [1, 2, 1];
    let d = RootDatum::new(Series::A, 2).unwrap();
    for (c, inside) in [([1, 1, 0], true), ([0, 2, 1], true), ([0, 1, 2], false), ([1, 0, 1], false)] {
        let w = string_weight(2, &word, &c);
        for r in sample_ytilde(3, &word, &c, 5, 7, 32).unwrap() {
            if inside {
                assert_eq!(r.invariants.mu_plus, w);
                assert!(r.invariants.mu_minus.is_zero());
            } else {
                assert!(r.invariants.mu_plus != w && d.dominance_leq(&w, &r.invariants.mu_plus), "{c:?}: {:?}", r.invariants);
            }
        }
    }
}

#[test]
fn adjoint_transitions() {
    let theta = Coweight::from_ints(&[1, 1]);
    for word in [[1, 2, 1], [2, 1, 2]] {
        let rows = transition_table(&theta, &word, 3, 7, TROP_PREC).unwrap();
        assert_eq!(rows.len(), 8);
        for r in &rows {
            assert!(r.ok(), "{r:?}");
        }
    }
}
