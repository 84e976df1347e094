//! `n × n` matrices over [`Laurent`] and the standard generators of `SL_n(K)`.

use std::fmt;

use mv_core::{Coweight, Root};

use crate::series::{coef, Laurent};
use crate::LoopError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub n: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> LaurentMatrix {
        LaurentMatrix { n, entries: vec![Laurent::zero(); n * n] }
    }

    pub fn identity(n: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, Laurent::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Laurent>>) -> LaurentMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        LaurentMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Laurent) {
        self.entries[i * self.n + j] = x;
    }

    pub fn entries(&self) -> &[Laurent] {
        &self.entries
    }

    pub fn mul(&self, o: &LaurentMatrix) -> LaurentMatrix {
        let n = self.n;
        let mut out = LaurentMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Laurent::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_exact_zero() && !b.is_exact_zero() {
                        s = &s + &(a * b);
                    }
                }
                out.set(i, j, s);
            }
        }
        out
    }

    pub fn product<'a>(n: usize, ms: impl IntoIterator<Item = &'a LaurentMatrix>) -> LaurentMatrix {
        ms.into_iter().fold(LaurentMatrix::identity(n), |acc, m| acc.mul(m))
    }

    /// Determinant of the submatrix on the given 0-based rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Laurent {
        assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => Laurent::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut s = Laurent::zero();
                let r0 = rows[0];
                let rest = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(r0, c);
                    if a.is_exact_zero() {
                        continue;
                    }
                    let sub: Vec<usize> = cols.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, &x)| x).collect();
                    let term = a * &self.minor(rest, &sub);
                    s = if k % 2 == 0 { &s + &term } else { &s - &term };
                }
                s
            }
        }
    }

    pub fn det(&self) -> Laurent {
        let all: Vec<usize> = (0..self.n).collect();
        self.minor(&all, &all)
    }

    /// Inverse of a determinant-one matrix: its adjugate.
    pub fn inverse(&self) -> LaurentMatrix {
        let n = self.n;
        let mut out = LaurentMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let m = self.minor(&rows, &cols);
                out.set(i, j, if (i + j) % 2 == 0 { m } else { -&m });
            }
        }
        out
    }

    /// Equality up to the precision both sides carry.
    pub fn agrees_with(&self, o: &LaurentMatrix) -> bool {
        self.entries.iter().zip(&o.entries).all(|(a, b)| (a - b).terms().next().is_none())
    }

    /// Smallest valuation over all entries, skipping exact zeros.
    pub fn min_val(&self) -> Result<i64, LoopError> {
        min_val(self.entries.iter())
    }
}

/// Smallest valuation in a family of series; exact zeros are skipped.
pub fn min_val<'a>(xs: impl IntoIterator<Item = &'a Laurent>) -> Result<i64, LoopError> {
    let mut best: Option<i64> = None;
    let mut lowest_cap: Option<i64> = None;
    for x in xs {
        match x.val() {
            Ok(v) => best = Some(best.map_or(v, |b| b.min(v))),
            Err(LoopError::Zero) => {}
            Err(LoopError::Indistinguishable(c)) => lowest_cap = Some(lowest_cap.map_or(c, |l: i64| l.min(c))),
            Err(e) => return Err(e),
        }
    }
    match (best, lowest_cap) {
        // an unresolved entry could still hide a smaller valuation
        (Some(b), Some(c)) if c <= b => Err(LoopError::Indistinguishable(c)),
        (Some(b), _) => Ok(b),
        (None, Some(c)) => Err(LoopError::Indistinguishable(c)),
        (None, None) => Err(LoopError::Zero),
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `I + p·E_{r,c}` with 1-based indices.
pub fn elementary(n: usize, r: usize, c: usize, p: &Laurent) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(n);
    m.set(r - 1, c - 1, p.clone());
    m
}

/// `(j, k)` with `α = ε_j − ε_k`, for a root of `A_{n−1}` in simple-root coordinates.
pub fn root_indices(a: &Root) -> Result<(usize, usize), LoopError> {
    let support: Vec<usize> = a.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i + 1).collect();
    let bad = || LoopError::Invalid(format!("{:?} is not a root of type A", a.0));
    let (lo, hi) = match (support.first(), support.last()) {
        (Some(&l), Some(&h)) => (l, h),
        _ => return Err(bad()),
    };
    let sign = a.0[lo - 1];
    if support.len() != hi - lo + 1 || !(sign == 1 || sign == -1) || support.iter().any(|&i| a.0[i - 1] != sign) {
        return Err(bad());
    }
    Ok(if sign == 1 { (lo, hi + 1) } else { (hi + 1, lo) })
}

/// `x_α(p)` in `SL_n`.
pub fn gen_x(n: usize, a: &Root, p: &Laurent) -> Result<LaurentMatrix, LoopError> {
    let (j, k) = root_indices(a)?;
    Ok(elementary(n, j, k, p))
}

/// `x_{α_i}(p)`
pub fn gen_xi(n: usize, i: usize, p: &Laurent) -> LaurentMatrix {
    elementary(n, i, i + 1, p)
}

/// `y_i(p) = x_{−α_i}(p)`
pub fn gen_y(n: usize, i: usize, p: &Laurent) -> LaurentMatrix {
    elementary(n, i + 1, i, p)
}

/// `y_{i_1}(p_1)⋯y_{i_N}(p_N)`
pub fn y_product(n: usize, word: &[usize], p: &[Laurent]) -> LaurentMatrix {
    let ms: Vec<LaurentMatrix> = word.iter().zip(p).map(|(&i, x)| gen_y(n, i, x)).collect();
    LaurentMatrix::product(n, &ms)
}

/// `t^λ` for λ in coroot coordinates: `diag(t^{c_1}, t^{c_2−c_1}, …, t^{−c_{n−1}})`.
pub fn gen_t(n: usize, lambda: &[i64]) -> LaurentMatrix {
    assert_eq!(lambda.len(), n - 1);
    let c = |k: usize| if k == 0 || k == n { 0 } else { lambda[k - 1] };
    let mut m = LaurentMatrix::zero(n);
    for k in 1..=n {
        m.set(k - 1, k - 1, Laurent::t(c(k) - c(k - 1)));
    }
    m
}

pub fn gen_t_coweight(n: usize, lambda: &Coweight) -> Result<LaurentMatrix, LoopError> {
    let c = lambda.integer_coords().ok_or_else(|| LoopError::Invalid(format!("{lambda} is not in the coroot lattice")))?;
    Ok(gen_t(n, &c))
}

/// `p^{α_i^∨}`: `p` in slot i and `p^{-1}` in slot i+1.
pub fn gen_torus(n: usize, i: usize, p: &Laurent, rel: i64) -> Result<LaurentMatrix, LoopError> {
    let mut m = LaurentMatrix::identity(n);
    m.set(i - 1, i - 1, p.clone());
    m.set(i, i, p.inv(rel)?);
    Ok(m)
}

/// `s̄_i = x_i(1) y_i(−1) x_i(1)`
pub fn gen_sbar(n: usize, i: usize) -> LaurentMatrix {
    let one = Laurent::one();
    let x = gen_xi(n, i, &one);
    x.mul(&gen_y(n, i, &Laurent::int(-1))).mul(&x)
}

/// Lift of the Weyl group element with the given word, `s̄_{i_1}⋯s̄_{i_k}`.
pub fn gen_wbar(n: usize, word: &[usize]) -> LaurentMatrix {
    let ms: Vec<LaurentMatrix> = word.iter().map(|&i| gen_sbar(n, i)).collect();
    LaurentMatrix::product(n, &ms)
}

pub fn constant_matrix(rows: &[&[i64]]) -> LaurentMatrix {
    LaurentMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Laurent::constant(coef(x))).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Coef;

    fn rat(a: i64, b: i64) -> Laurent {
        Laurent::constant(Coef::new(a.into(), b.into()))
    }

    #[test]
    fn sbar_in_sl2() {
        assert_eq!(gen_sbar(2, 1), constant_matrix(&[&[0, 1], &[-1, 0]]));
    }

    #[test]
    fn torus_of_coroot() {
        let m = gen_t(2, &[1]);
        assert_eq!(m.get(0, 0), &Laurent::t(1));
        assert_eq!(m.get(1, 1), &Laurent::t(-1));
        let m = gen_t(4, &[1, 2, 1]);
        let diag: Vec<i64> = (0..4).map(|k| m.get(k, k).val().unwrap()).collect();
        assert_eq!(diag, vec![1, 1, -1, -1]);
    }

    #[test]
    fn eq4_rank_one() {
        // x(a) y(−1/a) x(a) = a^{α^∨} s̄ at a = t
        let a = Laurent::t(1);
        let lhs = gen_xi(2, 1, &a).mul(&gen_y(2, 1, &-&Laurent::t(-1))).mul(&gen_xi(2, 1, &a));
        let rhs = gen_t(2, &[1]).mul(&gen_sbar(2, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn torus_conjugation_and_rank_one_commutation() {
        // a^λ x_α(b) = x_α(a^{⟨α,λ⟩} b) a^λ with a = t
        let b = Laurent::from_terms([(0, coef(3)), (2, coef(-7))], None);
        for lam in [[1i64, 0, 0], [0, 2, -1], [1, 1, 1]] {
            let t = gen_t(4, &lam);
            for (i, j) in [(1usize, 2usize), (1, 3), (2, 4), (3, 1), (4, 2)] {
                let mut a = vec![0i64; 3];
                let (lo, hi, s) = if i < j { (i, j - 1, 1) } else { (j, i - 1, -1) };
                for x in a.iter_mut().take(hi).skip(lo - 1) {
                    *x = s;
                }
                let root = Root(a);
                // ⟨ε_i − ε_j, λ⟩ in the torus exponents
                let e = |k: usize| t.get(k - 1, k - 1).val().unwrap();
                let pair = e(i) - e(j);
                let lhs = t.mul(&gen_x(4, &root, &b).unwrap());
                let rhs = gen_x(4, &root, &(&Laurent::t(pair) * &b)).unwrap().mul(&t);
                assert_eq!(lhs, rhs);
            }
        }
        // x_α(a) x_{−α}(b) = x_{−α}(b/(1+ab)) (1+ab)^{α^∨} x_α(a/(1+ab))
        for (a, b) in [(rat(2, 1), rat(3, 5)), (rat(-1, 3), rat(7, 2)), (rat(5, 1), rat(-1, 11))] {
            let u = &Laurent::one() + &(&a * &b);
            let ui = u.inv(4).unwrap();
            let lhs = gen_xi(2, 1, &a).mul(&gen_y(2, 1, &b));
            let rhs = gen_y(2, 1, &(&b * &ui)).mul(&gen_torus(2, 1, &u, 4).unwrap()).mul(&gen_xi(2, 1, &(&a * &ui)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverse_and_det() {
        let g = gen_y(3, 1, &Laurent::t(-1)).mul(&gen_xi(3, 2, &Laurent::t(2))).mul(&gen_t(3, &[1, -1]));
        assert_eq!(g.det(), Laurent::one());
        assert_eq!(g.mul(&g.inverse()), LaurentMatrix::identity(3));
        assert!(root_indices(&Root(vec![1, 0, 1])).is_err());
        assert_eq!(root_indices(&Root(vec![0, -1, -1])).unwrap(), (4, 2));
    }
}
