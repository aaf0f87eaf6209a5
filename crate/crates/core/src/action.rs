//! The SL(2)-action on the coordinate ring by substitution, torus
//! translate verification, and Borel-stability checks.
//!
//! Convention: a group element acts through the left-multiplied matrix of
//! off-diagonal coordinates, read off entrywise. The alternative (inverse
//! precomposition) differs by `g ↦ g⁻¹` and changes no subgroup-level
//! statement verified here.

use crate::error::{Error, Result};
use crate::grading::weight_of_poly;
use crate::ideals::{ideal_generators, span_contains, span_echelon, IdealSpec, Variant};
use crate::monomial::{Monomial, NVARS};
use crate::params::VarietyParams;
use crate::scalar::{rat, rat_pow, Rat};
use crate::Poly;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// A matrix `(α β; γ δ)` with determinant exactly 1.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupElement {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
}

impl GroupElement {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Result<Self> {
        let det = alpha.clone() * delta.clone() - beta.clone() * gamma.clone();
        if !det.is_one() {
            return Err(Error::InvalidParams(format!(
                "group element must have determinant 1; got {det}"
            )));
        }
        Ok(GroupElement { alpha, beta, gamma, delta })
    }

    pub fn identity() -> Self {
        GroupElement {
            alpha: Rat::one(),
            beta: Rat::zero(),
            gamma: Rat::zero(),
            delta: Rat::one(),
        }
    }

    /// `diag(t, 1/t)`.
    pub fn torus(t: &Rat) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::ZeroArgument("t"));
        }
        Ok(GroupElement {
            alpha: t.clone(),
            beta: Rat::zero(),
            gamma: Rat::zero(),
            delta: t.recip(),
        })
    }

    /// `(1 z; 0 1)`.
    pub fn upper_unipotent(z: &Rat) -> Self {
        GroupElement {
            alpha: Rat::one(),
            beta: z.clone(),
            gamma: Rat::zero(),
            delta: Rat::one(),
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            alpha: self.alpha.clone() * other.alpha.clone()
                + self.beta.clone() * other.gamma.clone(),
            beta: self.alpha.clone() * other.beta.clone()
                + self.beta.clone() * other.delta.clone(),
            gamma: self.gamma.clone() * other.alpha.clone()
                + self.delta.clone() * other.gamma.clone(),
            delta: self.gamma.clone() * other.beta.clone()
                + self.delta.clone() * other.delta.clone(),
        }
    }
}

/// Substitution action: `X1 ↦ αX1+βX2, X2 ↦ γX1+δX2, X3 ↦ αX3+βX4,
/// X4 ↦ γX3+δX4`, `X0` fixed.
pub fn act(g: &GroupElement, f: &Poly) -> Poly {
    let lin = |a: &Rat, b: &Rat, u: usize, v: usize| -> Poly {
        &Poly::term(a.clone(), Monomial::var(u)) + &Poly::term(b.clone(), Monomial::var(v))
    };
    let images: [Poly; NVARS] = [
        Poly::var(0),
        lin(&g.alpha, &g.beta, 1, 2),
        lin(&g.gamma, &g.delta, 1, 2),
        lin(&g.alpha, &g.beta, 3, 4),
        lin(&g.gamma, &g.delta, 3, 4),
    ];
    f.substitute(&images)
}

/// Applies `diag(t, 1/t)` to the generators of the `s = 1` ideal and
/// checks the result equals the family member at the predicted parameter
/// (`s = t^{−m}` for the I-family, `s = t^{−a(q+p)}` for the J-family).
/// Returns the realized `s` and the comparison outcome.
pub fn translate_check(
    params: &VarietyParams,
    variant: Variant,
    t: &Rat,
) -> Result<(Rat, bool)> {
    if t.is_zero() {
        return Err(Error::ZeroArgument("t"));
    }
    let exponent = match variant {
        Variant::I => params.m(),
        Variant::J => params.a() * (params.q() + params.p()),
        _ => {
            return Err(Error::InvalidParams(
                "translate check applies to the I and J families".into(),
            ))
        }
    };
    let s = rat_pow(t, -exponent);
    let g = GroupElement::torus(t)?;
    let spec1 = ideal_generators(params, variant, Some(Rat::one()))?;
    let spec_s = ideal_generators(params, variant, Some(s.clone()))?;
    let translated: BTreeSet<String> = spec1
        .generators
        .iter()
        .map(|f| act(&g, f).monic().to_string())
        .collect();
    let expected: BTreeSet<String> =
        spec_s.generators.iter().map(|f| f.monic().to_string()).collect();
    Ok((s, translated == expected))
}

/// The weight of a monomial under the diagonal torus of SL(2).
fn sl2_weight(m: &Monomial) -> i64 {
    (m.exp(1) + m.exp(3)) as i64 - (m.exp(2) + m.exp(4)) as i64
}

fn sl2_components(f: &Poly) -> Vec<Poly> {
    let mut out: BTreeMap<i64, Poly> = BTreeMap::new();
    for (m, c) in f.iter() {
        out.entry(sl2_weight(m))
            .or_insert_with(Poly::zero)
            .add_term(c.clone(), *m);
    }
    out.into_values().collect()
}

/// Stability of the ideal under the Borel subgroup of upper-triangular
/// matrices, tested on the degree-truncated span: the diagonal torus via
/// SL(2)-weight components of each generator, the unipotent part via the
/// sample `z = 1, ..., D+1` (exact, since the dependence on `z` is
/// polynomial of degree at most `D`).
pub fn is_b_stable(params: &VarietyParams, spec: &IdealSpec, d_bound: u32) -> Result<bool> {
    for gen in &spec.generators {
        if gen.is_zero() {
            continue;
        }
        let w = weight_of_poly(params, gen)?;
        let (window, ech) = span_echelon(params, spec, w, d_bound)?;
        for comp in sl2_components(gen) {
            if !span_contains(&window, &ech, &comp) {
                return Ok(false);
            }
        }
        for z in 1..=(d_bound as i64 + 1) {
            let image = act(&GroupElement::upper_unipotent(&rat(z)), gen);
            if !span_contains(&window, &ech, &image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
