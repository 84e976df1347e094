//! Random points of `Ỹ_{i,c}`, of gallery cells, and of their images under
//! the crystal-operator action `y_i(p)·`.

use mv_core::affine::AffineRoot;
use mv_core::crystal::c_to_tilde;
use mv_core::gallery::{Gallery, GalleryModel};
use mv_core::{Coweight, Series};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::grass::{invariants, sl, Invariants};
use crate::matrix::{gen_t_coweight, gen_x, gen_y, y_product, LaurentMatrix};
use crate::series::{coef, Laurent};
use crate::{escalate, LoopError};

/// Bound on the absolute value of random integer coefficients.
pub const COEF_BOUND: i64 = 10_000;
/// Fresh draws allowed after a non-generic sample.
pub const RETRIES: u64 = 5;

/// Independent generator for one trial of one run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut base = ChaCha8Rng::seed_from_u64(seed);
    let salt: u64 = base.gen();
    ChaCha8Rng::seed_from_u64(salt ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn nonzero_int(rng: &mut impl Rng) -> i64 {
    let a = rng.gen_range(1..=COEF_BOUND);
    if rng.gen() {
        a
    } else {
        -a
    }
}

/// `a₀ + a₁t + a₂t²` with `a₀ ≠ 0`.
pub fn unit_poly(rng: &mut impl Rng) -> Laurent {
    let a0 = nonzero_int(rng);
    let a1 = rng.gen_range(-COEF_BOUND..=COEF_BOUND);
    let a2 = rng.gen_range(-COEF_BOUND..=COEF_BOUND);
    Laurent::from_terms([(0, coef(a0)), (1, coef(a1)), (2, coef(a2))], None)
}

/// `t^m` times a random unit polynomial.
pub fn random_of_val(rng: &mut impl Rng, m: i64) -> Laurent {
    unit_poly(rng).shift(m)
}

/// Run one trial, drawing again when the draw turns out non-generic.
fn with_retries<T>(seed: u64, trial: u64, mut f: impl FnMut(&mut ChaCha8Rng) -> Result<T, LoopError>) -> Result<T, LoopError> {
    let mut last = None;
    for attempt in 0..RETRIES {
        let mut rng = trial_rng(seed.wrapping_add(attempt.wrapping_mul(0x5851_F42D)), trial);
        match f(&mut rng) {
            Err(e @ LoopError::NonGeneric(_)) => last = Some(e),
            r => return r,
        }
    }
    Err(last.unwrap())
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub trial: u64,
    #[serde(flatten)]
    pub invariants: Invariants,
}

/// Invariants of `[y_i(p)]` with `val(p_j) = c̃_j`, one row per trial.
pub fn sample_ytilde(n: usize, word: &[usize], c: &[i64], trials: u64, seed: u64, prec: i64) -> Result<Vec<TrialReport>, LoopError> {
    if word.len() != c.len() {
        return Err(LoopError::Invalid(format!("word {word:?} and c {c:?} differ in length")));
    }
    if let Some(&i) = word.iter().find(|&&i| i == 0 || i >= n) {
        return Err(LoopError::Invalid(format!("index {i} is not a simple root of SL_{n}")));
    }
    let ct = c_to_tilde(&sl(n), word, c);
    (0..trials)
        .map(|trial| {
            with_retries(seed, trial, |rng| {
                let p: Vec<Laurent> = ct.iter().map(|&m| random_of_val(rng, m)).collect();
                let g = y_product(n, word, &p);
                let invariants = escalate(prec, |_| invariants(&g))?;
                Ok(TrialReport { trial, invariants })
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CellSample {
    pub trial: u64,
    /// `(β, a_{j,β})` in product order.
    pub params: Vec<(AffineRoot, i64)>,
    #[serde(skip)]
    pub point: LaurentMatrix,
    #[serde(flatten)]
    pub invariants: Invariants,
}

fn matrix_size(model: &GalleryModel) -> Result<usize, LoopError> {
    let d = model.datum();
    if d.series != Series::A {
        return Err(LoopError::NotTypeA(d.name()));
    }
    Ok(d.rank + 1)
}

/// `x_β(a)` for the affine root `β = (α, n)`: `x_α(a t^n)`.
fn affine_x(n: usize, b: &AffineRoot, a: i64) -> Result<LaurentMatrix, LoopError> {
    gen_x(n, &b.root, &Laurent::monomial(coef(a), b.level))
}

type CellFactors = (Vec<LaurentMatrix>, Vec<(AffineRoot, i64)>);

/// The factors `v_j = ∏_{β ∈ Φ₊^aff(Δ′_j, Δ_j)} x_β(a_{j,β})`, `0 ≤ j ≤ p`.
fn cell_factors(model: &GalleryModel, d: &Gallery, rng: &mut impl Rng) -> Result<CellFactors, LoopError> {
    let n = matrix_size(model)?;
    let faces = model.faces(d);
    let mut vs = Vec::with_capacity(model.len() + 1);
    let mut params = Vec::new();
    for j in 0..=model.len() {
        let mut v = LaurentMatrix::identity(n);
        for b in model.step_phi_plus(&faces, j) {
            let a = nonzero_int(rng);
            v = v.mul(&affine_x(n, &b, a)?);
            params.push((b, a));
        }
        vs.push(v);
    }
    Ok((vs, params))
}

/// Random points `∏_j ∏_β x_β(a_{j,β}) [t^ν]` of the cell of a positively
/// folded gallery.
pub fn sample_cell(model: &GalleryModel, d: &Gallery, trials: u64, seed: u64, prec: i64) -> Result<Vec<CellSample>, LoopError> {
    let n = matrix_size(model)?;
    if !model.is_positively_folded(d) {
        return Err(LoopError::Invalid(format!("gallery {} is not positively folded", model.label(d))));
    }
    let tnu = gen_t_coweight(n, &model.weight(d))?;
    (0..trials)
        .map(|trial| {
            with_retries(seed, trial, |rng| {
                let (vs, params) = cell_factors(model, d, rng)?;
                let point = LaurentMatrix::product(n, &vs).mul(&tnu);
                let invariants = escalate(prec, |_| invariants(&point))?;
                Ok(CellSample { trial, params, point, invariants })
            })
        })
        .collect()
}

/// `y_i(p)·g` with `val(p) = −k + ε` for each point.
pub fn crystal_op_sample(points: &[LaurentMatrix], i: usize, k: i64, eps: i64, seed: u64, prec: i64) -> Result<Vec<Invariants>, LoopError> {
    points
        .iter()
        .enumerate()
        .map(|(trial, g)| {
            with_retries(seed, trial as u64, |rng| {
                let p = random_of_val(rng, eps - k);
                let h = gen_y(g.n, i, &p).mul(g);
                escalate(prec, |_| invariants(&h))
            })
        })
        .collect()
}

/// Points `A · x_{−α_i,−m−1}(h) · B [t^ν]` where `A·B` is the cell product of
/// δ split at the first face moved by `e_i`. They should lie over the cell
/// of `e_i δ`, so their `μ₊` is `ν + α_i^∨`.
pub fn inclusion_sample(model: &GalleryModel, d: &Gallery, i: usize, trials: u64, seed: u64, prec: i64) -> Result<Vec<Invariants>, LoopError> {
    let n = matrix_size(model)?;
    let (m, j, _) = model
        .raise_data(d, i)
        .ok_or_else(|| LoopError::Invalid(format!("e_{i} is undefined on {}", model.label(d))))?;
    let tnu = gen_t_coweight(n, &model.weight(d))?;
    (0..trials)
        .map(|trial| {
            with_retries(seed, trial, |rng| {
                let (vs, _) = cell_factors(model, d, rng)?;
                let a = LaurentMatrix::product(n, &vs[..j]);
                let b = LaurentMatrix::product(n, &vs[j..]);
                let h = random_of_val(rng, -m - 1);
                let point = a.mul(&gen_y(n, i, &h)).mul(&b).mul(&tnu);
                escalate(prec, |_| invariants(&point))
            })
        })
        .collect()
}

/// `Σ c_j α_{i_j}^∨`.
pub fn string_weight(rank: usize, word: &[usize], c: &[i64]) -> Coweight {
    let mut w = vec![0; rank];
    for (&i, &x) in word.iter().zip(c) {
        w[i - 1] += x;
    }
    Coweight::from_ints(&w)
}
