use std::time::Instant;

use mv_core::affine::Affine;
use mv_core::crystal::{character, crystal_isomorphic, expected_character, string_parameters, validate_axioms};
use mv_core::gallery::{GalleryModel, DEFAULT_NODE_CAP};
use mv_core::trails::string_cone_inequalities;
use mv_core::{Coweight, RootDatum, Series};

fn suite() -> Vec<(RootDatum, Coweight)> {
    let mut out = Vec::new();
    for (s, n) in [(Series::A, 1), (Series::A, 2), (Series::A, 3), (Series::B, 2)] {
        let d = RootDatum::new(s, n).unwrap();
        for l in d.dominant_coweights_up_to(4, false) {
            out.push((d.clone(), l));
        }
    }
    let g = RootDatum::new(Series::G, 2).unwrap();
    for i in 1..=2 {
        out.push((g.clone(), g.fundamental_coweight(i)));
    }
    out
}

#[test]
fn suite_axioms_and_characters() {
    let start = Instant::now();
    for (d, l) in suite() {
        let m = GalleryModel::minimal(Affine::new(d.clone()), &l).unwrap();
        let c = m.enumerate_ls(DEFAULT_NODE_CAP).unwrap();
        let rep = validate_axioms(&d, &c.graph);
        assert!(rep.ok(), "{} {l}: {:?}", d.name(), rep.violations);
        assert_eq!(character(&c.graph), expected_character(&d, &l).unwrap(), "{} {l}", d.name());
        let top = m.dimension(&m.gamma()) as i64;
        assert_eq!(top, d.positive_roots.len() as i64 + m.len() as i64);
        for g in &c.galleries {
            let h = d.height(&(&l - &m.weight(g))).unwrap();
            assert_eq!(top - m.dimension(g) as i64, h);
        }
    }
    eprintln!("suite enumerated in {:?}", start.elapsed());
}

#[test]
fn strings_are_injective_and_in_the_cone() {
    for (n, words) in [(2usize, vec![vec![1, 2, 1], vec![2, 1, 2]]), (3, vec![vec![2, 1, 3, 2, 1, 3], vec![1, 2, 1, 3, 2, 1]])] {
        let d = RootDatum::new(Series::A, n).unwrap();
        let cones: Vec<_> = words.iter().map(|w| string_cone_inequalities(n + 1, w).unwrap()).collect();
        for l in d.dominant_coweights_up_to(4, false) {
            let m = GalleryModel::minimal(Affine::new(d.clone()), &l).unwrap();
            let c = m.enumerate_ls(DEFAULT_NODE_CAP).unwrap();
            for (w, cone) in words.iter().zip(&cones) {
                let mut seen = std::collections::HashSet::new();
                for b in 0..c.graph.len() {
                    let s = string_parameters(&d, &c.graph, b, w).unwrap();
                    assert!(cone.contains(&s.c), "{l} {:?}", s.c);
                    assert!(seen.insert(s.c), "string parameters collide in B({l})");
                }
            }
        }
    }
}

#[test]
fn a2_cone_is_tight_at_desk_scale() {
    let d = RootDatum::new(Series::A, 2).unwrap();
    let lam = d.theta_coroot().scale(6.into());
    let m = GalleryModel::minimal(Affine::new(d.clone()), &lam).unwrap();
    let c = m.enumerate_ls(DEFAULT_NODE_CAP).unwrap();
    let word = [1, 2, 1];
    let cone = string_cone_inequalities(3, &word).unwrap();
    let got: std::collections::HashSet<Vec<i64>> =
        (0..c.graph.len()).map(|b| string_parameters(&d, &c.graph, b, &word).unwrap().c).collect();
    for c1 in 0..=3 {
        for c2 in 0..=3 {
            for c3 in 0..=3 {
                let v = vec![c1, c2, c3];
                if cone.contains(&v) {
                    assert!(got.contains(&v), "{v:?} not achieved");
                }
            }
        }
    }
}

#[test]
fn a3_cone_matches_listed_relations() {
    let cone = string_cone_inequalities(4, &[2, 1, 3, 2, 1, 3]).unwrap();
    let r = -3..=3i64;
    for c1 in r.clone() {
        for c2 in r.clone() {
            for c3 in r.clone() {
                for c4 in r.clone() {
                    for c5 in r.clone() {
                        for c6 in r.clone() {
                            let listed = c1 >= 0 && c2 >= c6 && c6 >= 0 && c3 >= c5 && c5 >= 0 && c2 + c3 >= c4 && c4 >= c5 + c6;
                            assert_eq!(cone.contains(&[c1, c2, c3, c4, c5, c6]), listed);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn different_words_give_isomorphic_crystals() {
    // 2θ^∨ in A2 has a minimal element with several reduced words
    let d = RootDatum::new(Series::A, 2).unwrap();
    let aff = Affine::new(d.clone());
    let lam = d.theta_coroot().scale(2.into());
    let (w, _, _) = aff.minimal_element(&lam).unwrap();
    let words = aff.enumerate_reduced_words(&w);
    assert!(words.len() >= 2);
    let base = GalleryModel::new(aff.clone(), &lam, &words[0]).unwrap().enumerate_ls(DEFAULT_NODE_CAP).unwrap();
    for word in &words[1..] {
        let other = GalleryModel::new(aff.clone(), &lam, word).unwrap().enumerate_ls(DEFAULT_NODE_CAP).unwrap();
        crystal_isomorphic(&base.graph, &other.graph).unwrap();
    }
}

#[test]
fn distinct_highest_weights_are_not_isomorphic() {
    let d = RootDatum::new(Series::A, 2).unwrap();
    let a = GalleryModel::minimal(Affine::new(d.clone()), &d.theta_coroot()).unwrap().enumerate_ls(DEFAULT_NODE_CAP).unwrap();
    let b = GalleryModel::minimal(Affine::new(d.clone()), &d.fundamental_coweight(1)).unwrap().enumerate_ls(DEFAULT_NODE_CAP).unwrap();
    assert!(crystal_isomorphic(&a.graph, &b.graph).is_err());
}
