//! Loop-group side of the toolkit, restricted to `SL_n`: exact truncated
//! Laurent series and matrices over them, valuation invariants of points of
//! the affine Grassmannian, random sampling of the sets `Ỹ_{i,c}` and of
//! gallery cells, and tropicalization by evaluation.

use thiserror::Error;

pub mod factor;
pub mod grass;
pub mod matrix;
pub mod sample;
pub mod series;
pub mod trop;

pub use matrix::LaurentMatrix;
pub use series::Laurent;

/// Working precision when nothing else is requested.
pub const DEFAULT_PREC: i64 = 32;
/// Starting precision for tropical evaluation. Only valuations are read
/// there, so a short start with escalation is much cheaper than a long one.
pub const TROP_PREC: i64 = 4;
/// Precision escalation stops here.
pub const MAX_PREC: i64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error("series is indistinguishable from zero below t^{0}")]
    Indistinguishable(i64),
    #[error("series is exactly zero")]
    Zero,
    #[error("non-generic input: {0}")]
    NonGeneric(String),
    #[error("only type A is realized by matrices, got {0}")]
    NotTypeA(String),
    #[error("trials disagree: {0}")]
    Disagreement(String),
    #[error("{0}")]
    Invalid(String),
}

/// Run `f` at increasing precision until no valuation is lost to truncation.
pub fn escalate<T>(start: i64, mut f: impl FnMut(i64) -> Result<T, LoopError>) -> Result<T, LoopError> {
    let mut prec = start.max(1);
    loop {
        match f(prec) {
            Err(LoopError::Indistinguishable(_)) if prec < MAX_PREC => prec = (prec * 2).min(MAX_PREC),
            r => return r,
        }
    }
}
