//! Tropicalization by evaluation at random Laurent polynomials, and the
//! string/Lusztig transition maps it produces.

use std::collections::HashMap;

use mv_core::affine::Affine;
use mv_core::crystal::{stable_string, string_parameters, CrystalError, CrystalGraph};
use mv_core::gallery::{GalleryModel, DEFAULT_NODE_CAP};
use mv_core::{Coweight, RootDatum, Series};
use serde::Serialize;

use crate::factor::{factor_y, z_inverse, z_map};
use crate::matrix::y_product;
use crate::sample::{random_of_val, trial_rng, RETRIES};
use crate::series::Laurent;
use crate::{escalate, LoopError};

/// Valuations of `f(p)` at `p_j = t^{m_j}·(random unit polynomial)`, required
/// to agree across all trials. A split vote redraws, up to [`RETRIES`] times.
pub fn trop_eval<F>(f: F, m: &[i64], trials: u64, seed: u64, prec: i64) -> Result<Vec<i64>, LoopError>
where
    F: Fn(&[Laurent], i64) -> Result<Vec<Laurent>, LoopError>,
{
    let mut why = String::new();
    for attempt in 0..RETRIES {
        let mut seen: Option<Vec<i64>> = None;
        let mut split = false;
        for trial in 0..trials.max(1) {
            let mut rng = trial_rng(seed.wrapping_add(attempt.wrapping_mul(0x2545_F491)), trial);
            let p: Vec<Laurent> = m.iter().map(|&e| random_of_val(&mut rng, e)).collect();
            let vals = escalate(prec, |pr| {
                f(&p, pr)?
                    .iter()
                    .map(|x| match x.val() {
                        Err(LoopError::Zero) => Err(LoopError::NonGeneric("output vanished".into())),
                        v => v,
                    })
                    .collect::<Result<Vec<i64>, LoopError>>()
            });
            let vals = match vals {
                Ok(v) => v,
                Err(LoopError::NonGeneric(s)) => {
                    why = s;
                    split = true;
                    break;
                }
                Err(e) => return Err(e),
            };
            match &seen {
                Some(s) if *s != vals => {
                    why = format!("{s:?} vs {vals:?}");
                    split = true;
                    break;
                }
                Some(_) => {}
                None => seen = Some(vals),
            }
        }
        if !split {
            return Ok(seen.unwrap());
        }
    }
    Err(LoopError::Disagreement(why))
}

/// Lusztig parameter from `c̃`: tropicalization of `z_i^{-1} ∘ y_i`.
pub fn lusztig_from_string(n: usize, word: &[usize], c_tilde: &[i64], trials: u64, seed: u64, prec: i64) -> Result<Vec<i64>, LoopError> {
    trop_eval(|p, pr| z_inverse(&y_product(n, word, p), word, pr), c_tilde, trials, seed, prec)
}

/// `c̃` from a Lusztig parameter: tropicalization of `y_i^{-1} ∘ z_i`.
pub fn string_from_lusztig(n: usize, word: &[usize], lusztig: &[i64], trials: u64, seed: u64, prec: i64) -> Result<Vec<i64>, LoopError> {
    trop_eval(|a, pr| factor_y(&z_map(n, word, a, pr)?, word, pr), lusztig, trials, seed, prec)
}

/// The transition data of one crystal node.
#[derive(Clone, Debug, Serialize)]
pub struct NodeTransition {
    pub node: usize,
    pub c: Vec<i64>,
    pub c_tilde: Vec<i64>,
    pub lusztig: Vec<i64>,
    /// `c̃` recomputed from `lusztig` by the inverse map.
    pub recovered: Vec<i64>,
    /// Lusztig parameter of the `B(−∞)` element reached from `1` by the
    /// same operator path that leads from the highest node to this one.
    pub dual_lusztig: Vec<i64>,
    /// `⟨α_{i_j}, −w₀λ⟩ + c̃_j`.
    pub predicted: Vec<i64>,
}

impl NodeTransition {
    pub fn ok(&self) -> bool {
        self.lusztig.iter().all(|&x| x >= 0) && self.recovered == self.c_tilde && self.dual_lusztig == self.predicted
    }
}

fn crystal_err(e: CrystalError) -> LoopError {
    LoopError::Invalid(e.to_string())
}

/// f-paths from the highest node to every node, found breadth first.
fn paths_from_source(g: &CrystalGraph) -> Result<Vec<Vec<usize>>, LoopError> {
    let src = g.source().map_err(crystal_err)?;
    let mut path: Vec<Option<Vec<usize>>> = vec![None; g.len()];
    path[src] = Some(vec![]);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(b) = queue.pop_front() {
        for i in 1..=g.rank {
            if let Some(c) = g.f_op(b, i) {
                if path[c].is_none() {
                    let mut p = path[b].clone().unwrap();
                    p.push(i);
                    path[c] = Some(p);
                    queue.push_back(c);
                }
            }
        }
    }
    path.into_iter().map(|p| p.ok_or_else(|| LoopError::Invalid("crystal is not connected".into()))).collect()
}

/// Transition data for every node of `B(λ)` in `SL_n`, checking Lusztig
/// positivity, the inverse map, and `d_j = ⟨α_{i_j}, −w₀λ⟩ + c̃_j` for the
/// dual element of `B(−∞)` (read off a tower `B(kλ)`, `k = 2..=6`).
pub fn transition_table(lambda: &Coweight, word: &[usize], trials: u64, seed: u64, prec: i64) -> Result<Vec<NodeTransition>, LoopError> {
    let rank = lambda.rank();
    let datum = RootDatum::new(Series::A, rank).map_err(|e| LoopError::Invalid(e.to_string()))?;
    let n = rank + 1;
    let aff = Affine::new(datum.clone());
    let build = |lam: &Coweight| -> Result<CrystalGraph, CrystalError> {
        let m = GalleryModel::minimal(aff.clone(), lam).map_err(|e| CrystalError::Build(e.to_string()))?;
        Ok(m.enumerate_ls(DEFAULT_NODE_CAP).map_err(|e| CrystalError::Build(e.to_string()))?.graph)
    };
    let g = build(lambda).map_err(crystal_err)?;
    let tower: Vec<Coweight> = (2..=6).map(|k| lambda.scale(k.into())).collect();
    let mut cache: HashMap<Coweight, CrystalGraph> = HashMap::new();
    for lam in &tower {
        cache.insert(lam.clone(), build(lam).map_err(crystal_err)?);
    }
    let neg_w0 = datum.longest_element().act(&-lambda);
    let top: Vec<i64> = word.iter().map(|&i| datum.simple_pairing(i, &neg_w0).to_integer()).collect();
    let paths = paths_from_source(&g)?;
    let mut out = Vec::with_capacity(g.len());
    for (b, path) in paths.iter().enumerate() {
        let s = string_parameters(&datum, &g, b, word).map_err(crystal_err)?;
        let lusztig = lusztig_from_string(n, word, &s.c_tilde, trials, seed, prec)?;
        let recovered = string_from_lusztig(n, word, &lusztig, trials, seed, prec)?;
        let dual = stable_string(&datum, &tower, path, word, |lam| Ok(cache[lam].clone())).map_err(crystal_err)?;
        let dual_lusztig = lusztig_from_string(n, word, &dual.c_tilde, trials, seed, prec)?;
        let predicted = top.iter().zip(&s.c_tilde).map(|(a, c)| a + c).collect();
        out.push(NodeTransition { node: b, c: s.c, c_tilde: s.c_tilde, lusztig, recovered, dual_lusztig, predicted });
    }
    Ok(out)
}
