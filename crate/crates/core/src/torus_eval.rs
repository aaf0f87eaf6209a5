//! Exact evaluation maps onto the orbit parametrizations.
//!
//! Three small quotient rings are modeled by canonical-basis maps:
//! the cyclic Laurent ring `Q[t^±][ζ]/(ζ^m − 1)` for the orbit
//! parametrization, and the two relation rings certifying that witness
//! monomials stay nonzero modulo the ideal families when `s ≠ 0`.

use crate::error::{Error, Result};
use crate::params::VarietyParams;
use crate::scalar::{rat_pow, Rat};
use crate::Poly;
use num_traits::Zero;
use std::collections::BTreeMap;

fn add_term<K: Ord + Copy>(map: &mut BTreeMap<K, Rat>, key: K, value: Rat) {
    let entry = map.entry(key).or_insert_with(Rat::zero);
    *entry += value;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// Image in `Q[t^±][ζ]/(ζ^m − 1)` under the orbit parametrization
/// `X0 ↦ t, X1 ↦ t^{−p}ζ^{−1}, X2 ↦ 0, X3 ↦ 0, X4 ↦ t^q ζ`.
/// Keys are `(t-exponent, ζ-exponent mod m)`.
pub fn orbit_image(params: &VarietyParams, f: &Poly) -> BTreeMap<(i64, i64), Rat> {
    let m = params.m();
    let mut out = BTreeMap::new();
    for (mono, coef) in f.iter() {
        if mono.exp(2) > 0 || mono.exp(3) > 0 {
            continue;
        }
        let (d0, d1, d4) = (mono.exp(0) as i64, mono.exp(1) as i64, mono.exp(4) as i64);
        let t = d0 - params.p() * d1 + params.q() * d4;
        let zeta = (d4 - d1).rem_euclid(m);
        add_term(&mut out, (t, zeta), coef.clone());
    }
    out
}

/// Canonical image in `Q[x0^±, x1^±]/(x0^{mp} x1^m − s)` with `s ≠ 0`,
/// under `X0 ↦ x0, X1 ↦ x1, X2 ↦ 0, X3 ↦ 0, X4 ↦ x0^{q−p} x1^{−1}`.
/// Basis `x0^i x1^r` with `r ∈ [0, m)`; keys are `(i, r)`.
pub fn open_orbit_image(
    params: &VarietyParams,
    s: &Rat,
    f: &Poly,
) -> Result<BTreeMap<(i64, i64), Rat>> {
    if s.is_zero() {
        return Err(Error::ZeroArgument("s"));
    }
    params.require_singular()?;
    let (m, p, qp) = (params.m(), params.p(), params.qp());
    let mut out = BTreeMap::new();
    for (mono, coef) in f.iter() {
        if mono.exp(2) > 0 || mono.exp(3) > 0 {
            continue;
        }
        let (d0, d1, d4) = (mono.exp(0) as i64, mono.exp(1) as i64, mono.exp(4) as i64);
        let i = d0 + qp * d4;
        let jx = d1 - d4;
        // x1^m = s * x0^{-mp}
        let r = jx.rem_euclid(m);
        let t = (jx - r) / m;
        add_term(&mut out, (i - m * p * t, r), coef.clone() * rat_pow(s, t));
    }
    Ok(out)
}

/// Canonical image in `Q[ε] ⊗ Q[x1^±, x3^±] / (ε^{q−p}, x1^{aq} x3^{ap} − s)`
/// with `s ≠ 0`, under `X0 ↦ ε, X1 ↦ x1, X2 ↦ 0, X3 ↦ x3, X4 ↦ 0`.
/// Basis `ε^e x1^i x3^r` with `e ∈ [0, q−p)`, `r ∈ [0, ap)`; keys `(e, i, r)`.
pub fn closed_orbit_image(
    params: &VarietyParams,
    s: &Rat,
    f: &Poly,
) -> Result<BTreeMap<(i64, i64, i64), Rat>> {
    if s.is_zero() {
        return Err(Error::ZeroArgument("s"));
    }
    params.require_toric()?;
    let (a, p, q, qp) = (params.a(), params.p(), params.q(), params.qp());
    let (aq, ap) = (a * q, a * p);
    let mut out = BTreeMap::new();
    for (mono, coef) in f.iter() {
        if mono.exp(2) > 0 || mono.exp(4) > 0 {
            continue;
        }
        let (d0, d1, d3) = (mono.exp(0) as i64, mono.exp(1) as i64, mono.exp(3) as i64);
        if d0 >= qp {
            continue; // ε^{q-p} = 0
        }
        // x3^{ap} = s * x1^{-aq}
        let r = d3.rem_euclid(ap);
        let t = (d3 - r) / ap;
        add_term(&mut out, (d0, d1 - aq * t, r), coef.clone() * rat_pow(s, t));
    }
    Ok(out)
}
