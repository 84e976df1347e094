//! Gauss decomposition, factorization into `y_i`'s along a reduced word of
//! `w₀`, the maps `z_i`, and the explicit `SL_4` counterexample matrix.

use crate::grass::sl;
use crate::matrix::{gen_wbar, gen_y, y_product, LaurentMatrix};
use crate::series::{coef, Laurent};
use crate::LoopError;

fn nonzero(x: &Laurent, what: &str) -> Result<(), LoopError> {
    match x.val() {
        Ok(_) => Ok(()),
        Err(LoopError::Zero) => Err(LoopError::NonGeneric(format!("{what} vanishes"))),
        Err(e) => Err(e),
    }
}

/// `g = b·u` with b upper triangular and u lower unitriangular.
pub fn gauss_decompose(g: &LaurentMatrix, prec: i64) -> Result<(LaurentMatrix, LaurentMatrix), LoopError> {
    let n = g.n;
    let mut m = g.clone();
    let mut u = LaurentMatrix::identity(n);
    for r in (1..n).rev() {
        let pivot = m.get(r, r).clone();
        nonzero(&pivot, "pivot")?;
        let pinv = pivot.inv(prec)?;
        for j in 0..r {
            let x = m.get(r, j).clone();
            if x.is_exact_zero() {
                continue;
            }
            let c = -&(&x * &pinv);
            for i in 0..r {
                let v = m.get(i, j) + &(&c * m.get(i, r));
                m.set(i, j, v);
            }
            m.set(r, j, Laurent::zero());
            // u ← (I − c E_{r,j}) u
            for col in 0..n {
                let v = u.get(r, col) - &(&c * u.get(j, col));
                u.set(r, col, v);
            }
        }
    }
    Ok((m, u))
}

fn longest_word(n: usize) -> Vec<usize> {
    let d = sl(n);
    d.reduced_word(&d.longest_element())
}

/// `w̄₀` for `SL_n`.
pub fn w0_bar(n: usize) -> LaurentMatrix {
    gen_wbar(n, &longest_word(n))
}

/// Parameters p with `g = y_{i_1}(p_1)⋯y_{i_N}(p_N)` for a lower
/// unitriangular g and a reduced word of `w₀`.
pub fn factor_y(g: &LaurentMatrix, word: &[usize], prec: i64) -> Result<Vec<Laurent>, LoopError> {
    let n = g.n;
    if word.len() != n * (n - 1) / 2 {
        return Err(LoopError::Invalid(format!("{word:?} is not a reduced word of w0 in SL_{n}")));
    }
    // w as a permutation of 1..=n, stored 0-based
    let mut w: Vec<usize> = (0..n).rev().collect();
    let mut g = g.clone();
    let mut out = Vec::with_capacity(word.len());
    for &j in word {
        let jj = j - 1;
        let k = w.iter().position(|&x| x == jj + 1).unwrap() + 1;
        let rows: Vec<usize> = {
            let mut r: Vec<usize> = w[..k].to_vec();
            r.sort_unstable();
            r
        };
        if rows.contains(&jj) {
            return Err(LoopError::Invalid(format!("{word:?} is not reduced")));
        }
        let mut rows2: Vec<usize> = rows.iter().map(|&x| if x == jj + 1 { jj } else { x }).collect();
        rows2.sort_unstable();
        let cols: Vec<usize> = (0..k).collect();
        let num = g.minor(&rows, &cols);
        let den = g.minor(&rows2, &cols);
        nonzero(&den, "leading minor")?;
        let p = num.div(&den, prec)?;
        g = gen_y(n, j, &-&p).mul(&g);
        for x in w.iter_mut() {
            if *x == jj {
                *x = jj + 1;
            } else if *x == jj + 1 {
                *x = jj;
            }
        }
        out.push(p);
    }
    if !g.agrees_with(&LaurentMatrix::identity(n)) {
        return Err(LoopError::NonGeneric("factorization left a nontrivial residue".into()));
    }
    Ok(out)
}

/// `z_i(a)`: the unique element of `U⁻ ∩ B⁺ y_i(a) w̄₀^{-1}`.
pub fn z_map(n: usize, word: &[usize], a: &[Laurent], prec: i64) -> Result<LaurentMatrix, LoopError> {
    let g = y_product(n, word, a).mul(&w0_bar(n).inverse());
    Ok(gauss_decompose(&g, prec)?.1)
}

/// Inverse of [`z_map`]: `a = y_i^{-1}(lower factor of x·w̄₀)`.
pub fn z_inverse(x: &LaurentMatrix, word: &[usize], prec: i64) -> Result<Vec<Laurent>, LoopError> {
    let n = x.n;
    let (_, u) = gauss_decompose(&x.mul(&w0_bar(n)), prec)?;
    factor_y(&u, word, prec)
}

/// `y₂(−1) y₁(1/t) y₃(1/t) y₂(t) y₁(−1/t) y₃(−1/t)` in `SL_4`.
pub fn counterexample_matrix() -> LaurentMatrix {
    let word = [2, 1, 3, 2, 1, 3];
    let p = [Laurent::int(-1), Laurent::t(-1), Laurent::t(-1), Laurent::t(1), -&Laurent::t(-1), -&Laurent::t(-1)];
    let g = y_product(4, &word, &p);
    let tm1 = &Laurent::t(1) - &Laurent::one();
    let displayed = LaurentMatrix::from_rows(vec![
        vec![Laurent::one(), Laurent::zero(), Laurent::zero(), Laurent::zero()],
        vec![Laurent::zero(), Laurent::one(), Laurent::zero(), Laurent::zero()],
        vec![Laurent::constant(coef(-1)), tm1, Laurent::one(), Laurent::zero()],
        vec![-&Laurent::t(-1), Laurent::one(), Laurent::zero(), Laurent::one()],
    ]);
    assert_eq!(g, displayed, "product disagrees with the displayed matrix");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Coef;

    fn poly(cs: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(cs.iter().map(|&(e, c)| (e, coef(c))), None)
    }

    #[test]
    fn gauss_of_lower_is_trivial() {
        let g = gen_y(3, 1, &poly(&[(-1, 2)])).mul(&gen_y(3, 2, &poly(&[(0, 3), (1, 1)])));
        let (b, u) = gauss_decompose(&g, 16).unwrap();
        assert_eq!(b, LaurentMatrix::identity(3));
        assert_eq!(u, g);
    }

    #[test]
    fn gauss_recombines() {
        let y = y_product(3, &[1, 2, 1], &[poly(&[(0, 2), (1, 1)]), poly(&[(-1, 3)]), poly(&[(2, -5)])]);
        let g = y.mul(&w0_bar(3).inverse());
        let (b, u) = gauss_decompose(&g, 24).unwrap();
        for i in 0..3 {
            for j in 0..i {
                assert!(b.get(i, j).is_exact_zero());
                assert!(u.get(j, i).is_exact_zero());
            }
            assert_eq!(u.get(i, i), &Laurent::one());
        }
        assert!(b.mul(&u).agrees_with(&g));
    }

    #[test]
    fn factor_sl2() {
        let a = poly(&[(-2, 7), (0, 1)]);
        let p = factor_y(&gen_y(2, 1, &a), &[1], 16).unwrap();
        assert_eq!(p, vec![a]);
    }

    #[test]
    fn factor_roundtrip_sl3() {
        let p = vec![poly(&[(1, 2), (2, 1)]), poly(&[(-1, -3)]), poly(&[(0, 5), (3, 1)])];
        for word in [[1, 2, 1], [2, 1, 2]] {
            let g = y_product(3, &word, &p);
            let q = factor_y(&g, &word, 32).unwrap();
            for (x, y) in p.iter().zip(&q) {
                match y.cap() {
                    Some(c) => assert_eq!(x.truncate(c), *y),
                    None => assert_eq!(x, y),
                }
            }
        }
    }

    #[test]
    fn counterexample() {
        let g = counterexample_matrix();
        assert_eq!(g.det(), Laurent::one());
        assert_eq!(g.get(3, 0), &-&Laurent::t(-1));
        let p = factor_y(&g, &[2, 1, 3, 2, 1, 3], 32).unwrap();
        let vals: Vec<i64> = p.iter().map(|x| x.val().unwrap()).collect();
        assert_eq!(vals, vec![0, -1, -1, 1, -1, -1]);
    }

    #[test]
    fn z_roundtrip_sl2() {
        // z(a) = y(−1/a) in SL_2
        let a = poly(&[(2, 3)]);
        let z = z_map(2, &[1], std::slice::from_ref(&a), 16).unwrap();
        assert_eq!(z.get(1, 0), &Laurent::monomial(Coef::new((-1).into(), 3.into()), -2));
        let back = z_inverse(&z, &[1], 16).unwrap();
        assert_eq!(back, vec![a]);
    }
}
