//! Valuation invariants of points `[g]` of the affine Grassmannian of `SL_n`.

use mv_core::{Coweight, RootDatum, Series};
use serde::Serialize;

use crate::matrix::{gen_t, gen_xi, gen_y, min_val, LaurentMatrix};
use crate::series::Laurent;
use crate::LoopError;

pub fn sl(n: usize) -> RootDatum {
    RootDatum::new(Series::A, n - 1).expect("SL_n with n >= 2")
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `val` of `g` applied to `e_{cols}` in `Λ^k`: the least valuation of the
/// minors of `g` on the given columns.
fn wedge_val(g: &LaurentMatrix, cols: &[usize]) -> Result<i64, LoopError> {
    let minors: Vec<Laurent> = subsets(g.n, cols.len()).iter().map(|r| g.minor(r, cols)).collect();
    min_val(minors.iter())
}

/// The λ with `[g] ∈ S_λ^+`: `⟨ω_k, λ⟩ = −val(g^{-1} v_{ω_k})`.
pub fn mu_plus(g: &LaurentMatrix) -> Result<Coweight, LoopError> {
    let gi = g.inverse();
    let n = g.n;
    let c: Result<Vec<i64>, LoopError> = (1..n).map(|k| wedge_val(&gi, &(0..k).collect::<Vec<_>>()).map(|v| -v)).collect();
    Ok(Coweight::from_ints(&c?))
}

/// The λ with `[g] ∈ S_λ^-`: `⟨ω_k, λ⟩ = val(g^{-1} v_{w₀ω_{n−k}})`.
pub fn mu_minus(g: &LaurentMatrix) -> Result<Coweight, LoopError> {
    let gi = g.inverse();
    let n = g.n;
    let c: Result<Vec<i64>, LoopError> = (1..n).map(|k| wedge_val(&gi, &(k..n).collect::<Vec<_>>())).collect();
    Ok(Coweight::from_ints(&c?))
}

/// The antidominant λ with `[g] ∈ G(O)[t^λ]`: `⟨ω_k, λ⟩` is the least
/// valuation of a k×k minor of g.
pub fn orbit_coweight(g: &LaurentMatrix) -> Result<Coweight, LoopError> {
    let n = g.n;
    let mut c = Vec::with_capacity(n - 1);
    for k in 1..n {
        let mut best: Option<i64> = None;
        for cols in subsets(n, k) {
            let v = wedge_val(g, &cols)?;
            best = Some(best.map_or(v, |b| b.min(v)));
        }
        c.push(best.unwrap());
    }
    let lam = Coweight::from_ints(&c);
    let d = sl(n);
    let neg = -&lam;
    if !d.is_dominant(&neg) {
        return Err(LoopError::Invalid(format!("orbit parameter {lam} is not antidominant")));
    }
    Ok(lam)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub mu_plus: Coweight,
    pub mu_minus: Coweight,
    pub orbit: Coweight,
}

pub fn invariants(g: &LaurentMatrix) -> Result<Invariants, LoopError> {
    Ok(Invariants { mu_plus: mu_plus(g)?, mu_minus: mu_minus(g)?, orbit: orbit_coweight(g)? })
}

/// `[u] = [v]` iff every entry of `u^{-1}v` lies in `O`.
pub fn coset_equal(u: &LaurentMatrix, v: &LaurentMatrix) -> Result<bool, LoopError> {
    let w = u.inverse().mul(v);
    for x in w.entries() {
        if !x.val_at_least(0)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[y(q^{-1}t^{−e}) t^ν] = [x(q t^e) t^λ]` in `SL_2` with `ν = a α^∨`,
/// `λ = (a+n) α^∨` and `e = ⟨α, λ+ν⟩/2`.
pub fn rank_one_identity_check(a: i64, n: i64, q: &Laurent, prec: i64) -> Result<bool, LoopError> {
    if n < 0 {
        return Err(LoopError::Invalid("λ − ν must be a nonnegative multiple of α^∨".into()));
    }
    let e = 2 * a + n;
    let qi = q.inv(prec)?;
    let u = gen_y(2, 1, &(&qi * &Laurent::t(-e))).mul(&gen_t(2, &[a]));
    let v = gen_xi(2, 1, &(q * &Laurent::t(e))).mul(&gen_t(2, &[a + n]));
    coset_equal(&u, &v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::constant_matrix;

    #[test]
    fn monomial_points() {
        for lam in [[1i64, 0], [2, 1], [-1, 3], [0, 0]] {
            let g = gen_t(3, &lam);
            assert_eq!(mu_plus(&g).unwrap(), Coweight::from_ints(&lam));
            assert_eq!(mu_minus(&g).unwrap(), Coweight::from_ints(&lam));
        }
        let anti = gen_t(3, &[-1, -1]);
        assert_eq!(orbit_coweight(&anti).unwrap(), Coweight::from_ints(&[-1, -1]));
    }

    #[test]
    fn rank_one_points() {
        let g = gen_y(2, 1, &Laurent::t(-1));
        assert_eq!(mu_plus(&g).unwrap(), Coweight::from_ints(&[1]));
        assert_eq!(orbit_coweight(&g).unwrap(), Coweight::from_ints(&[-1]));
        let g = gen_y(2, 1, &Laurent::t(2));
        assert_eq!(mu_minus(&g).unwrap(), Coweight::zero(1));
        let g = constant_matrix(&[&[2, 3], &[1, 2]]);
        assert_eq!(orbit_coweight(&g).unwrap(), Coweight::zero(1));
    }

    #[test]
    fn hand_rank_one_instance() {
        let u = gen_y(2, 1, &Laurent::t(-1));
        let v = gen_xi(2, 1, &Laurent::t(1)).mul(&gen_t(2, &[1]));
        let w = u.inverse().mul(&v);
        let want = LaurentMatrix::from_rows(vec![vec![Laurent::t(1), Laurent::one()], vec![Laurent::int(-1), Laurent::zero()]]);
        assert_eq!(w, want);
        assert!(rank_one_identity_check(0, 1, &Laurent::one(), 32).unwrap());
        assert!(rank_one_identity_check(2, 0, &Laurent::int(5), 32).unwrap());
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
    }
}
