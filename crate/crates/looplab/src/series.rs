//! Laurent series with exact rational coefficients, known below a cap.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::LoopError;

pub type Coef = BigRational;

pub fn coef(n: i64) -> Coef {
    Coef::from_integer(BigInt::from(n))
}

/// `Σ c_k t^k` with every `k < cap` known exactly; `cap = None` means the
/// series is a Laurent polynomial with no unknown tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, Coef>,
    cap: Option<i64>,
}

fn min_cap(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent { terms: BTreeMap::new(), cap: None }
    }

    pub fn one() -> Laurent {
        Laurent::monomial(Coef::one(), 0)
    }

    pub fn monomial(c: Coef, e: i64) -> Laurent {
        Laurent::from_terms([(e, c)], None)
    }

    pub fn constant(c: Coef) -> Laurent {
        Laurent::monomial(c, 0)
    }

    pub fn int(n: i64) -> Laurent {
        Laurent::constant(coef(n))
    }

    /// `t^e`
    pub fn t(e: i64) -> Laurent {
        Laurent::monomial(Coef::one(), e)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Coef)>, cap: Option<i64>) -> Laurent {
        let mut map: BTreeMap<i64, Coef> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Coef::zero) += c;
        }
        let mut s = Laurent { terms: map, cap };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let cap = self.cap;
        self.terms.retain(|e, c| !c.is_zero() && cap.is_none_or(|k| *e < k));
    }

    pub fn cap(&self) -> Option<i64> {
        self.cap
    }

    pub fn is_exact(&self) -> bool {
        self.cap.is_none()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coef)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Coef {
        self.terms.get(&e).cloned().unwrap_or_else(Coef::zero)
    }

    /// Forget everything from `t^cap` on.
    pub fn truncate(&self, cap: i64) -> Laurent {
        let mut s = Laurent { terms: self.terms.clone(), cap: min_cap(self.cap, Some(cap)) };
        s.normalize();
        s
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.cap.is_none()
    }

    /// Lowest exponent with a known nonzero coefficient.
    pub fn val(&self) -> Result<i64, LoopError> {
        match (self.terms.keys().next(), self.cap) {
            (Some(&e), _) => Ok(e),
            (None, Some(c)) => Err(LoopError::Indistinguishable(c)),
            (None, None) => Err(LoopError::Zero),
        }
    }

    pub fn leading(&self) -> Result<(i64, &Coef), LoopError> {
        let e = self.val()?;
        Ok((e, &self.terms[&e]))
    }

    /// Whether the valuation is at least `n` (zero counts as yes).
    pub fn val_at_least(&self, n: i64) -> Result<bool, LoopError> {
        match self.terms.keys().next() {
            Some(&e) if e < n => Ok(false),
            _ => match self.cap {
                Some(c) if c < n => Err(LoopError::Indistinguishable(c)),
                _ => Ok(true),
            },
        }
    }

    /// Lower bound for the valuation used by the cap rule; `None` is `+∞`.
    fn low(&self) -> Option<i64> {
        self.terms.keys().next().copied().or(self.cap)
    }

    pub fn scale(&self, c: &Coef) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(), cap: self.cap }
    }

    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, x)| (e + k, x.clone())).collect(), cap: self.cap.map(|c| c + k) }
    }

    /// Inverse with `rel` correct terms past the leading one (fewer if the
    /// input is known to less relative precision).
    pub fn inv(&self, rel: i64) -> Result<Laurent, LoopError> {
        let (v, a0) = self.leading()?;
        if self.is_exact() && self.terms.len() == 1 {
            return Ok(Laurent::monomial(a0.recip(), -v));
        }
        let a0 = a0.clone();
        let rel = match self.cap {
            Some(c) => (c - v).min(rel),
            None => rel,
        };
        let a: Vec<Coef> = (0..rel).map(|k| self.coeff(v + k)).collect();
        let inv0 = a0.recip();
        let mut b: Vec<Coef> = Vec::with_capacity(rel as usize);
        for k in 0..rel as usize {
            if k == 0 {
                b.push(inv0.clone());
                continue;
            }
            let mut s = Coef::zero();
            for i in 1..=k {
                if !a[i].is_zero() {
                    s += &a[i] * &b[k - i];
                }
            }
            b.push(-(s * &inv0));
        }
        Ok(Laurent::from_terms(b.into_iter().enumerate().map(|(k, c)| (k as i64 - v, c)), Some(rel - v)))
    }

    pub fn div(&self, o: &Laurent, rel: i64) -> Result<Laurent, LoopError> {
        Ok(self * &o.inv(rel)?)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            *terms.entry(*e).or_insert_with(Coef::zero) += c;
        }
        let mut s = Laurent { terms, cap: min_cap(self.cap, o.cap) };
        s.normalize();
        s
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        self + &(-o)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), cap: self.cap }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_exact_zero() || o.is_exact_zero() {
            return Laurent::zero();
        }
        // unknown tails contribute from cap_p + low(q) and cap_q + low(p) on
        let cap = min_cap(
            self.cap.zip(o.low()).map(|(c, l)| c + l),
            o.cap.zip(self.low()).map(|(c, l)| c + l),
        );
        let mut terms: BTreeMap<i64, Coef> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1 + e2;
                if cap.is_none_or(|k| e < k) {
                    *terms.entry(e).or_insert_with(Coef::zero) += c1 * c2;
                }
            }
        }
        let mut s = Laurent { terms, cap };
        s.normalize();
        s
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Laurent {
            type Output = Laurent;
            fn $f(self, o: Laurent) -> Laurent {
                (&self).$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match *e {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{e}"),
            })
            .collect();
        if let Some(c) = self.cap {
            parts.push(format!("O(t^{c})"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" + "))
    }
}
