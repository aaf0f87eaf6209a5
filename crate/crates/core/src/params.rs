//! Validated numeric invariants of a variety in the height/degree family.

use crate::error::{Error, Result};
use num_integer::Integer;

/// The classifying data `(l = p/q, m)` together with the derived invariants
/// `k = gcd(m, q-p)`, `a = m/k`, `b = (q-p)/k` and the toric flag.
///
/// When `p = q` (the smooth case) the quantity `b` is stored as `0` and the
/// variety counts as toric; every operation that needs `q - p > 0` rejects
/// the smooth case explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarietyParams {
    p: i64,
    q: i64,
    m: i64,
    k: i64,
    a: i64,
    b: i64,
    toric: bool,
}

impl VarietyParams {
    pub fn new(p: i64, q: i64, m: i64) -> Result<Self> {
        if p < 1 || q < 1 || m < 1 {
            return Err(Error::InvalidParams(format!(
                "p, q, m must all be >= 1; got (p, q, m) = ({p}, {q}, {m})"
            )));
        }
        if p > q {
            return Err(Error::InvalidParams(format!(
                "the height p/q must satisfy p <= q; got p = {p} > q = {q}"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParams(format!(
                "p and q must be coprime; gcd({p}, {q}) = {}",
                p.gcd(&q)
            )));
        }
        let diff = q - p;
        let k = m.gcd(&diff); // gcd(m, 0) = m when p = q
        let a = m / k;
        let b = diff / k;
        let toric = diff == 0 || m % diff == 0;
        Ok(VarietyParams { p, q, m, k, a, b, toric })
    }

    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn q(&self) -> i64 {
        self.q
    }
    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn k(&self) -> i64 {
        self.k
    }
    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }

    /// `q - p`, the exponent of the hypersurface equation.
    pub fn qp(&self) -> i64 {
        self.q - self.p
    }

    pub fn is_toric(&self) -> bool {
        self.toric
    }

    pub fn is_smooth(&self) -> bool {
        self.p == self.q
    }

    pub fn require_singular(&self) -> Result<()> {
        if self.is_smooth() {
            Err(Error::SmoothCase(self.p))
        } else {
            Ok(())
        }
    }

    pub fn require_toric(&self) -> Result<()> {
        self.require_singular()?;
        if self.toric {
            Ok(())
        } else {
            Err(Error::NonToric)
        }
    }

    /// Canonical residue of `d` in `[0, m)`.
    pub fn residue(&self, d: i64) -> i64 {
        d.rem_euclid(self.m)
    }
}
