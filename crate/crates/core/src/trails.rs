//! i-trails in the fundamental representations `Λ^k C^n` of `SL_n` and the
//! string cone inequalities they cut out.
//!
//! Weights here live on the character side and are written in the basis of
//! fundamental weights, so `⟨γ, α_i^∨⟩` is simply the i-th coordinate.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrailError {
    #[error("need 1 <= k <= n-1, got n={n}, k={k}")]
    Range { n: usize, k: usize },
    #[error("index {0} is not a simple root of SL_n")]
    BadIndex(usize),
    #[error("d-statistic is not an integer on trail {0:?}")]
    HalfInteger(Vec<Vec<i64>>),
}

pub type Vector = BTreeMap<usize, i64>;

/// `Λ^k C^n` with basis the sorted k-subsets of `{1..n}`.
#[derive(Clone, Debug)]
pub struct WedgeRep {
    pub n: usize,
    pub k: usize,
    pub basis: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl WedgeRep {
    pub fn new(n: usize, k: usize) -> Result<WedgeRep, TrailError> {
        if k == 0 || k >= n {
            return Err(TrailError::Range { n, k });
        }
        let mut basis = Vec::new();
        let mut cur = Vec::new();
        subsets(1, n, k, &mut cur, &mut basis);
        let index = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let rep = WedgeRep { n, k, basis, index };
        rep.check_commutators();
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        self.index.get(subset).copied()
    }

    /// Weight of `e_S` in fundamental-weight coordinates.
    pub fn weight(&self, b: usize) -> Vec<i64> {
        subset_weight(self.n, &self.basis[b])
    }

    pub fn highest(&self) -> usize {
        0
    }

    /// `E_i` on a basis vector: replace `i+1` by `i`.
    pub fn raise_basis(&self, i: usize, b: usize) -> Option<usize> {
        let s = &self.basis[b];
        if s.contains(&(i + 1)) && !s.contains(&i) {
            let mut t: Vec<usize> = s.iter().map(|&x| if x == i + 1 { i } else { x }).collect();
            t.sort_unstable();
            self.index_of(&t)
        } else {
            None
        }
    }

    pub fn lower_basis(&self, i: usize, b: usize) -> Option<usize> {
        let s = &self.basis[b];
        if s.contains(&i) && !s.contains(&(i + 1)) {
            let mut t: Vec<usize> = s.iter().map(|&x| if x == i { i + 1 } else { x }).collect();
            t.sort_unstable();
            self.index_of(&t)
        } else {
            None
        }
    }

    fn apply(&self, v: &Vector, op: impl Fn(usize) -> Option<usize>) -> Vector {
        let mut out = Vector::new();
        for (&b, &c) in v {
            if let Some(t) = op(b) {
                *out.entry(t).or_default() += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn raise(&self, i: usize, v: &Vector) -> Vector {
        self.apply(v, |b| self.raise_basis(i, b))
    }

    pub fn lower(&self, i: usize, v: &Vector) -> Vector {
        self.apply(v, |b| self.lower_basis(i, b))
    }

    fn check_commutators(&self) {
        for b in 0..self.dim() {
            let v = Vector::from([(b, 1)]);
            let wt = self.weight(b);
            for i in 1..self.n {
                for j in 1..self.n {
                    let ef = self.raise(i, &self.lower(j, &v));
                    let fe = self.lower(j, &self.raise(i, &v));
                    let mut diff = ef;
                    for (t, c) in fe {
                        *diff.entry(t).or_default() -= c;
                    }
                    diff.retain(|_, c| *c != 0);
                    let want = if i == j && wt[i - 1] != 0 { Vector::from([(b, wt[i - 1])]) } else { Vector::new() };
                    assert_eq!(diff, want, "[E_{i},F_{j}] fails on basis vector {b}");
                }
            }
        }
    }

    pub fn weight_space(&self, wt: &[i64]) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.weight(b) == wt).collect()
    }
}

fn subsets(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in start..=n {
        cur.push(x);
        subsets(x + 1, n, k, cur, out);
        cur.pop();
    }
}

pub fn subset_weight(n: usize, s: &[usize]) -> Vec<i64> {
    (1..n).map(|i| s.contains(&i) as i64 - s.contains(&(i + 1)) as i64).collect()
}

/// Simple root `α_i` in fundamental-weight coordinates: row i of the Cartan matrix.
pub fn simple_root(n: usize, i: usize) -> Vec<i64> {
    (1..n)
        .map(|j| match j {
            j if j == i => 2,
            j if j + 1 == i || j == i + 1 => -1,
            _ => 0,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ITrail {
    /// `γ_0, …, γ_N`
    pub weights: Vec<Vec<i64>>,
    pub exponents: Vec<usize>,
    pub d: Vec<i64>,
    /// a basis vector of `V_δ` with a nonzero image
    pub witness: (usize, usize, i64),
}

/// Trails from γ down to δ along `word`: weight chains with
/// `γ_{j-1} − γ_j = n_j α_{i_j}` such that `E_{i_1}^{n_1}⋯E_{i_N}^{n_N}` is
/// nonzero on `V_δ`.
pub fn enumerate_itrails(rep: &WedgeRep, gamma: &[i64], delta: &[i64], word: &[usize]) -> Result<Vec<ITrail>, TrailError> {
    if let Some(&i) = word.iter().find(|&&i| i == 0 || i >= rep.n) {
        return Err(TrailError::BadIndex(i));
    }
    let source = rep.weight_space(delta);
    let images: Vec<(usize, Vector)> = source.iter().map(|&b| (b, Vector::from([(b, 1)]))).collect();
    let mut out = Vec::new();
    let mut exps = vec![0usize; word.len()];
    dfs(rep, word, gamma, word.len(), delta.to_vec(), images, &mut exps, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    rep: &WedgeRep,
    word: &[usize],
    gamma: &[i64],
    pos: usize,
    wt: Vec<i64>,
    images: Vec<(usize, Vector)>,
    exps: &mut Vec<usize>,
    out: &mut Vec<ITrail>,
) -> Result<(), TrailError> {
    if images.iter().all(|(_, v)| v.is_empty()) {
        return Ok(());
    }
    if pos == 0 {
        if wt == gamma {
            out.push(finish(rep, word, exps, chain_from_top(&wt, word, exps, rep.n), &images)?);
        }
        return Ok(());
    }
    let i = word[pos - 1];
    let a = simple_root(rep.n, i);
    let mut cur_wt = wt;
    let mut cur = images;
    let mut k = 0;
    loop {
        exps[pos - 1] = k;
        dfs(rep, word, gamma, pos - 1, cur_wt.clone(), cur.clone(), exps, out)?;
        cur = cur.into_iter().map(|(b, v)| (b, rep.raise(i, &v))).collect();
        if cur.iter().all(|(_, v)| v.is_empty()) {
            break;
        }
        cur_wt = cur_wt.iter().zip(&a).map(|(x, y)| x + y).collect();
        k += 1;
    }
    exps[pos - 1] = 0;
    Ok(())
}

/// The weight chain `γ_0, …, γ_N` from its top and the exponents.
fn chain_from_top(top: &[i64], word: &[usize], exps: &[usize], n: usize) -> Vec<Vec<i64>> {
    let mut ws = vec![top.to_vec()];
    for (j, &i) in word.iter().enumerate() {
        let a = simple_root(n, i);
        let prev = ws.last().unwrap();
        ws.push(prev.iter().zip(&a).map(|(x, y)| x - exps[j] as i64 * y).collect());
    }
    ws
}

fn finish(rep: &WedgeRep, word: &[usize], exps: &[usize], weights: Vec<Vec<i64>>, images: &[(usize, Vector)]) -> Result<ITrail, TrailError> {
    let mut d = Vec::with_capacity(word.len());
    for (j, &i) in word.iter().enumerate() {
        let s = weights[j][i - 1] + weights[j + 1][i - 1];
        if s % 2 != 0 {
            return Err(TrailError::HalfInteger(weights));
        }
        d.push(s / 2);
    }
    let witness = images
        .iter()
        .find_map(|(b, v)| v.iter().next().map(|(&t, &c)| (*b, t, c)))
        .expect("nonzero operator");
    debug_assert!(rep.weight(witness.1) == weights[0]);
    Ok(ITrail { weights, exponents: exps.to_vec(), d, witness })
}

/// The i-trail inequalities `Σ_j d_j(π) c_j ≥ 0`.
#[derive(Clone, Debug, Serialize)]
pub struct StringCone {
    pub n: usize,
    pub word: Vec<usize>,
    /// one row per trail, grouped by fundamental representation
    pub raw: Vec<Vec<i64>>,
    /// `raw` deduplicated and sorted
    pub rows: Vec<Vec<i64>>,
    pub trails: Vec<(usize, ITrail)>,
}

/// Trails from `ω_i` to `w₀ s_i ω_i` in `V(ω_i)` for every i.
pub fn string_cone_inequalities(n: usize, word: &[usize]) -> Result<StringCone, TrailError> {
    let mut raw = Vec::new();
    let mut trails = Vec::new();
    for i in 1..n {
        let rep = WedgeRep::new(n, i)?;
        let top: Vec<usize> = (1..=i).collect();
        let si: Vec<usize> = top.iter().map(|&x| if x == i { i + 1 } else { x }).collect();
        let low: Vec<usize> = si.iter().map(|&x| n + 1 - x).collect();
        let gamma = subset_weight(n, &top);
        let delta = subset_weight(n, &low);
        for t in enumerate_itrails(&rep, &gamma, &delta, word)? {
            raw.push(t.d.clone());
            trails.push((i, t));
        }
    }
    let rows: BTreeSet<Vec<i64>> = raw.iter().cloned().collect();
    Ok(StringCone { n, word: word.to_vec(), raw, rows: rows.into_iter().collect(), trails })
}

/// The trail `(ω_i, s_{i_1}ω_i, s_{i_1}s_{i_2}ω_i, …, w₀ω_i)`, if it is one.
pub fn extremal_trail(n: usize, word: &[usize], i: usize) -> Result<Option<ITrail>, TrailError> {
    let rep = WedgeRep::new(n, i)?;
    let mut chain = vec![rep.weight(rep.highest())];
    for &k in word {
        let g = chain.last().unwrap();
        let a = simple_root(n, k);
        chain.push(g.iter().zip(&a).map(|(x, y)| x - g[k - 1] * y).collect());
    }
    let trails = enumerate_itrails(&rep, &chain[0], chain.last().unwrap(), word)?;
    Ok(trails.into_iter().find(|t| t.weights == chain))
}

impl StringCone {
    pub fn contains(&self, c: &[i64]) -> bool {
        in_string_cone(&self.rows, c)
    }
}

pub fn in_string_cone(rows: &[Vec<i64>], c: &[i64]) -> bool {
    rows.iter().all(|r| r.iter().zip(c).map(|(a, b)| a * b).sum::<i64>() >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reps() {
        let v = WedgeRep::new(2, 1).unwrap();
        assert_eq!(v.raise_basis(1, 1), Some(0));
        assert_eq!(v.lower_basis(1, 0), Some(1));
        assert_eq!(WedgeRep::new(4, 2).unwrap().dim(), 6);
        let v = WedgeRep::new(3, 1).unwrap();
        let ws: Vec<Vec<i64>> = (0..3).map(|b| v.weight(b)).collect();
        assert_eq!(ws, vec![vec![1, 0], vec![-1, 1], vec![0, -1]]);
        assert!(WedgeRep::new(3, 3).is_err());
        assert!(WedgeRep::new(3, 0).is_err());
    }

    #[test]
    fn sl2_trail() {
        let v = WedgeRep::new(2, 1).unwrap();
        let t = enumerate_itrails(&v, &[1], &[-1], &[1]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].exponents, vec![1]);
        assert_eq!(t[0].d, vec![0]);
        let t = enumerate_itrails(&v, &[1], &[1], &[1]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].exponents, vec![0]);
    }

    #[test]
    fn a2_cone() {
        let cone = string_cone_inequalities(3, &[1, 2, 1]).unwrap();
        for c1 in -3..=3 {
            for c2 in -3..=3 {
                for c3 in -3..=3 {
                    let want = c1 >= 0 && c2 >= c3 && c3 >= 0;
                    assert_eq!(cone.contains(&[c1, c2, c3]), want, "({c1},{c2},{c3})");
                }
            }
        }
    }

    #[test]
    fn zero_trail_exists() {
        for (n, word) in [(3, vec![1, 2, 1]), (4, vec![2, 1, 3, 2, 1, 3])] {
            for i in 1..n {
                let t = extremal_trail(n, &word, i).unwrap().expect("extremal chain is a trail");
                assert!(t.d.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn a3_counterexample_point() {
        let cone = string_cone_inequalities(4, &[2, 1, 3, 2, 1, 3]).unwrap();
        assert!(!cone.contains(&[0, 0, 0, 1, 1, 1]));
        assert!(cone.contains(&[0; 6]));
    }
}
