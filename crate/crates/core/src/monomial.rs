//! Monomials in the ambient coordinates `X0 .. X4`.

use std::cmp::Ordering;
use std::fmt;

/// Number of ambient variables.
pub const NVARS: usize = 5;

/// An exponent vector over `X0 .. X4`. Subrings (e.g. the three-variable
/// ring used by the refined grading) are represented by monomials whose
/// unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u32; NVARS],
}

impl Monomial {
    pub fn new(exps: [u32; NVARS]) -> Self {
        Monomial { exps }
    }

    pub fn one() -> Self {
        Monomial { exps: [0; NVARS] }
    }

    /// The single variable `X{i}`.
    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    /// `X{i}^e`.
    pub fn var_pow(i: usize, e: u32) -> Self {
        let mut exps = [0; NVARS];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32; NVARS] {
        &self.exps
    }

    pub fn deg(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i] + other.exps[i];
        }
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i] * k;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`; panics if the division is not exact.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Monomial { exps }
    }

    /// True when every variable with a positive exponent belongs to `vars`.
    pub fn supported_in(&self, vars: &[usize]) -> bool {
        (0..NVARS).all(|i| self.exps[i] == 0 || vars.contains(&i))
    }
}

/// Graded lexicographic order with `X0 > X1 > X2 > X3 > X4`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{i}")?;
            } else {
                write!(f, "X{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x0 = Monomial::var(0);
        let x1x4 = Monomial::var(1).mul(&Monomial::var(4));
        assert!(x1x4 > x0); // higher degree wins
        let x0sq = Monomial::var_pow(0, 2);
        assert!(x0sq > x1x4); // same degree, X0 dominates
    }

    #[test]
    fn display() {
        let m = Monomial::new([2, 2, 0, 0, 0]);
        assert_eq!(m.to_string(), "X0^2*X1^2");
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(Monomial::var(3).to_string(), "X3");
    }
}
