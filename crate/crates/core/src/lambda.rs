//! The refined grading of the three-variable ring `R = Q[X0, X1, Xj]`
//! (`j` is 3 or 4). The exponent map
//! `(d0, d1, dj) -> (d0 - p*d1 + q*dj, d1 - dj, p*d1 - q*dj)` is injective,
//! so each index triple carries at most one basis monomial. This module
//! computes those monomials together with the extremal indices selecting
//! the canonical representative of each weight space.
//!
//! All operations here require a singular variety (`p < q`); callers
//! validate that before dispatching.

use crate::error::{Error, Result};
use crate::grading::{weight_of, Weight};
use crate::monomial::Monomial;
use crate::params::VarietyParams;

/// An index `(n, c, omega)` of the refined grading.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LambdaIndex {
    pub n: i64,
    pub c: i64,
    pub omega: i64,
}

/// Which of `X3`, `X4` serves as the second off-diagonal variable.
pub type SecondVar = usize;

/// The index of the exponent triple `(d0, d1, dj)`.
pub fn mu(params: &VarietyParams, d0: i64, d1: i64, dj: i64) -> LambdaIndex {
    let (p, q) = (params.p(), params.q());
    LambdaIndex {
        n: d0 - p * d1 + q * dj,
        c: d1 - dj,
        omega: p * d1 - q * dj,
    }
}

/// Recovers the exponent triple when the index lies in the image of `mu`
/// over nonnegative exponents.
pub fn exponents_of(params: &VarietyParams, lam: &LambdaIndex) -> Option<(i64, i64, i64)> {
    let (p, q, qp) = (params.p(), params.q(), params.qp());
    debug_assert!(qp > 0);
    let d0 = lam.n + lam.omega;
    let num1 = q * lam.c - lam.omega;
    let numj = p * lam.c - lam.omega;
    if d0 < 0 || num1 % qp != 0 || num1 < 0 || numj < 0 {
        return None;
    }
    debug_assert_eq!(numj % qp, 0);
    Some((d0, num1 / qp, numj / qp))
}

pub fn in_lambda(params: &VarietyParams, lam: &LambdaIndex) -> bool {
    exponents_of(params, lam).is_some()
}

/// The basis monomial of the one-dimensional graded piece at `lam`, if any.
pub fn f_lambda(params: &VarietyParams, lam: &LambdaIndex, j: SecondVar) -> Option<Monomial> {
    assert!(j == 3 || j == 4);
    let (d0, d1, dj) = exponents_of(params, lam)?;
    Some(
        Monomial::var_pow(0, d0 as u32)
            .mul(&Monomial::var_pow(1, d1 as u32))
            .mul(&Monomial::var_pow(j, dj as u32)),
    )
}

/// The index of a monomial supported in `{X0, X1, Xj}`.
pub fn index_of(params: &VarietyParams, mono: &Monomial, j: SecondVar) -> LambdaIndex {
    debug_assert_eq!(mono.exp(2), 0);
    debug_assert_eq!(mono.exp(if j == 3 { 4 } else { 3 }), 0);
    mu(params, mono.exp(0) as i64, mono.exp(1) as i64, mono.exp(j) as i64)
}

/// The minimal `omega` with `(n, c, omega)` in the index monoid, or `None`
/// when the column `(n, c)` is empty.
///
/// Closed form: the representative of `q*c mod (q-p)` in the window
/// `[-n, -n + q - p)`, valid exactly when it stays at most
/// `min(p*c, q*c)`. Cross-checked against direct minimization over the
/// enumerated range; a discrepancy is a hard failure.
pub fn omega_min(params: &VarietyParams, n: i64, c: i64) -> Option<i64> {
    let (p, q, qp) = (params.p(), params.q(), params.qp());
    let cap = (p * c).min(q * c);
    // closed form
    let rem = (q * c + n).rem_euclid(qp); // (omega + n) mod (q-p) with omega = q*c - k(q-p)
    let candidate = -n + rem;
    let closed = (candidate <= cap).then_some(candidate);
    // enumeration oracle over the full admissible range
    let mut oracle = None;
    let mut w = -n;
    while w <= cap {
        if in_lambda(params, &LambdaIndex { n, c, omega: w }) {
            oracle = Some(w);
            break;
        }
        w += 1;
    }
    assert_eq!(
        closed, oracle,
        "closed-form omega minimum disagrees with enumeration at (n, c) = ({n}, {c})"
    );
    closed
}

/// Scan cap for the column search: `ceil(-n/q) + m*(q + |n| + 1)`.
pub fn c_scan_cap(params: &VarietyParams, n: i64) -> i64 {
    c_floor(params, n) + params.m() * (params.q() + n.abs() + 1)
}

fn c_floor(params: &VarietyParams, n: i64) -> i64 {
    // ceil(-n / q)
    (-n).div_euclid(params.q()) + i64::from((-n).rem_euclid(params.q()) != 0)
}

/// The smallest `c` congruent to `d` whose column at level `n` is nonempty.
pub fn c_min(params: &VarietyParams, n: i64, d: i64) -> Result<i64> {
    let m = params.m();
    let d = params.residue(d);
    let lo = c_floor(params, n);
    let mut c = lo + (d - lo).rem_euclid(m);
    let cap = c_scan_cap(params, n);
    while c <= cap {
        if omega_min(params, n, c).is_some() {
            return Ok(c);
        }
        c += m;
    }
    Err(Error::EmptyWeight { n, d, cap })
}

/// The extremal index of the weight `(n, d)`: minimal column, then minimal
/// `omega` within it.
pub fn lambda_min(params: &VarietyParams, n: i64, d: i64) -> Result<LambdaIndex> {
    let c = c_min(params, n, d)?;
    let omega = omega_min(params, n, c).expect("nonempty column");
    Ok(LambdaIndex { n, c, omega })
}

/// The canonical surviving monomial of the weight `(n, d)` in
/// `Q[X0, X1, Xj]`.
pub fn min_monomial(params: &VarietyParams, w: Weight, j: SecondVar) -> Result<Monomial> {
    let lam = lambda_min(params, w.n, w.d)?;
    let mono = f_lambda(params, &lam, j).expect("extremal index is realizable");
    debug_assert_eq!(weight_of(params, &mono), w);
    Ok(mono)
}

/// The full basis of the finite-dimensional piece at `(n, c)`: `omega`
/// steps upward from the minimum in increments of `q - p` while exponents
/// stay nonnegative. Empty when the column is empty.
pub fn basis_rc_n(params: &VarietyParams, n: i64, c: i64, j: SecondVar) -> Vec<Monomial> {
    let Some(w0) = omega_min(params, n, c) else {
        return Vec::new();
    };
    let cap = (params.p() * c).min(params.q() * c);
    let mut out = Vec::new();
    let mut w = w0;
    while w <= cap {
        let lam = LambdaIndex { n, c, omega: w };
        out.push(f_lambda(params, &lam, j).expect("index within column is realizable"));
        w += params.qp();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params132() -> VarietyParams {
        VarietyParams::new(1, 3, 2).unwrap()
    }

    fn lam(n: i64, c: i64, omega: i64) -> LambdaIndex {
        LambdaIndex { n, c, omega }
    }

    #[test]
    fn mu_examples() {
        let p = params132();
        assert_eq!(mu(&p, 1, 0, 0), lam(1, 0, 0));
        assert_eq!(mu(&p, 0, 1, 1), lam(2, 0, -2));
        assert_eq!(mu(&p, 2, 2, 0), lam(0, 2, 2));
    }

    #[test]
    fn f_lambda_examples() {
        let p = params132();
        assert_eq!(
            f_lambda(&p, &lam(0, 2, 0), 4).unwrap().to_string(),
            "X1^3*X4"
        );
        assert_eq!(
            f_lambda(&p, &lam(2, 2, -2), 4).unwrap().to_string(),
            "X1^4*X4^2"
        );
        assert_eq!(f_lambda(&p, &lam(0, 0, 0), 3).unwrap(), Monomial::one());
        // not in the image: omega fails the congruence
        assert_eq!(f_lambda(&p, &lam(0, 1, 0), 4), None);
    }

    #[test]
    fn round_trip() {
        let p = params132();
        for d0 in 0..6 {
            for d1 in 0..6 {
                for dj in 0..6 {
                    let l = mu(&p, d0, d1, dj);
                    assert_eq!(exponents_of(&p, &l), Some((d0, d1, dj)));
                    let m = f_lambda(&p, &l, 4).unwrap();
                    assert_eq!(index_of(&p, &m, 4), l);
                }
            }
        }
    }

    #[test]
    fn extrema_examples() {
        let p = params132();
        assert_eq!(c_min(&p, 0, 0).unwrap(), 0);
        assert_eq!(c_min(&p, 2, 0).unwrap(), 0);
        for n in 0..=2 {
            assert_eq!(c_min(&p, n, 0).unwrap(), 0);
        }
        assert_eq!(omega_min(&p, 2, 0), Some(-2));
        assert_eq!(omega_min(&p, 0, 2), Some(0));
        assert_eq!(omega_min(&p, 1, 0), Some(0));
        assert_eq!(lambda_min(&p, 0, 0).unwrap(), lam(0, 0, 0));
        assert_eq!(lambda_min(&p, 1, 0).unwrap(), lam(1, 0, 0));
        assert_eq!(lambda_min(&p, 2, 0).unwrap(), lam(2, 0, -2));
    }

    #[test]
    fn basis_examples() {
        let p = params132();
        let b: Vec<String> = basis_rc_n(&p, 2, 2, 4).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, vec!["X1^4*X4^2", "X0^2*X1^3*X4", "X0^4*X1^2"]);
        assert_eq!(basis_rc_n(&p, 0, 0, 4), vec![Monomial::one()]);
        let b: Vec<String> = basis_rc_n(&p, 2, 0, 4).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, vec!["X1*X4", "X0^2"]);
        let b: Vec<String> = basis_rc_n(&p, 0, 1, 4).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, vec!["X0*X1"]);
        // empty column: omega >= -n exceeds the cap min(pc, qc)
        assert!(basis_rc_n(&p, -1, 0, 4).is_empty());
    }

    #[test]
    fn minimality_characterization() {
        // (n + omega < q - p) iff (omega is the column minimum), checked
        // exhaustively on a window
        let p = params132();
        for n in -10..=10 {
            for c in -10..=10 {
                for omega in -40..=40 {
                    let l = lam(n, c, omega);
                    if !in_lambda(&p, &l) {
                        continue;
                    }
                    let is_min = omega_min(&p, n, c) == Some(omega);
                    assert_eq!(n + omega < p.qp(), is_min, "at {l:?}");
                }
            }
        }
    }

    #[test]
    fn omega_spacing() {
        // omegas within one column differ by multiples of q - p
        let p = VarietyParams::new(2, 5, 4).unwrap();
        for n in -6..=6 {
            for c in -6..=6 {
                let omegas: Vec<i64> = (-60..=60)
                    .filter(|&w| in_lambda(&p, &lam(n, c, w)))
                    .collect();
                for pair in omegas.windows(2) {
                    assert_eq!((pair[1] - pair[0]) % p.qp(), 0);
                }
            }
        }
    }

    #[test]
    fn window_decomposition() {
        // the weight window over {X0, X1, X4} is the disjoint union of the
        // column bases intersected with the degree bound
        use crate::grading::monomials_of_weight;
        let p = params132();
        let bound = 8;
        for n in -3..=3 {
            for d in 0..p.m() {
                let w = Weight { n, d };
                let mut from_window = monomials_of_weight(&p, w, bound, &[0, 1, 4]);
                let mut from_columns: Vec<Monomial> = Vec::new();
                let lo = c_floor(&p, n);
                let start = lo + (d - lo).rem_euclid(p.m());
                let mut c = start;
                // generous cap: any monomial of degree <= bound has c <= bound
                while c <= bound as i64 {
                    for m in basis_rc_n(&p, n, c, 4) {
                        if m.deg() <= bound {
                            from_columns.push(m);
                        }
                    }
                    c += p.m();
                }
                from_window.sort();
                from_columns.sort();
                assert_eq!(from_window, from_columns, "at weight {w}");
            }
        }
    }

    #[test]
    fn empty_weight_error() {
        // p = 1, q = 3: weights with n negative but no admissible column in
        // reach do not exist in R, but the guard must trip rather than loop:
        // force it with a tiny params where some residues are unreachable.
        // (n, d) = (0, 1) for (1, 3, 2): c must be odd and positive with
        // omega window [0, 2); c = 1 -> omega must be 3 mod 2 = 1, cap
        // min(1, 3) = 1, candidate -0 + (3 mod 2) = 1 <= 1, so nonempty.
        // Use n = -1 instead: c >= 1, c odd; c = 1: window [1, 3), omega
        // congruent to 3 mod 2 -> 1, cap 1, so candidate 1 works too.
        // All weights are realized here, so just check c_min succeeds.
        let p = params132();
        assert!(c_min(&p, -1, 1).is_ok());
    }
}
