//! The torus-times-cyclic multigrading of the ambient polynomial ring
//! `A = Q[X0, .., X4]`.
//!
//! A monomial `X0^d0 X1^d1 X2^d2 X3^d3 X4^d4` has weight
//! `n = d0 - p(d1 + d2) + q(d3 + d4)` and residue
//! `d = (d1 + d2) - (d3 + d4) mod m`. With this sign convention the residue
//! of a three-variable monomial equals `d1 - dj mod m`, matching the column
//! index of the refined grading.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, NVARS};
use crate::params::VarietyParams;
use crate::poly::Polynomial;
use crate::scalar::Coeff;
use std::collections::BTreeMap;
use std::fmt;

/// A character `(n, d)` of the acting group, with `d` canonically in `[0, m)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub n: i64,
    pub d: i64,
}

impl Weight {
    pub fn new(params: &VarietyParams, n: i64, d: i64) -> Self {
        Weight { n, d: params.residue(d) }
    }

    pub fn add(&self, params: &VarietyParams, other: &Weight) -> Weight {
        Weight::new(params, self.n + other.n, self.d + other.d)
    }

    pub fn sub(&self, params: &VarietyParams, other: &Weight) -> Weight {
        Weight::new(params, self.n - other.n, self.d - other.d)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.d)
    }
}

pub fn weight_of(params: &VarietyParams, mono: &Monomial) -> Weight {
    let d = |i: usize| mono.exp(i) as i64;
    let n = d(0) - params.p() * (d(1) + d(2)) + params.q() * (d(3) + d(4));
    Weight::new(params, n, (d(1) + d(2)) - (d(3) + d(4)))
}

/// Splits `f` into its weight-homogeneous parts; the parts sum back to `f`.
pub fn homogeneous_components<C: Coeff>(
    params: &VarietyParams,
    f: &Polynomial<C>,
) -> BTreeMap<Weight, Polynomial<C>> {
    let mut out: BTreeMap<Weight, Polynomial<C>> = BTreeMap::new();
    for (m, c) in f.iter() {
        out.entry(weight_of(params, m))
            .or_insert_with(Polynomial::zero)
            .add_term(c.clone(), *m);
    }
    out
}

/// The weight of a homogeneous polynomial; errors when `f` mixes weights
/// or is zero.
pub fn weight_of_poly<C: Coeff>(params: &VarietyParams, f: &Polynomial<C>) -> Result<Weight> {
    let comps = homogeneous_components(params, f);
    match comps.len() {
        1 => Ok(*comps.keys().next().unwrap()),
        _ => Err(Error::NotHomogeneous(f.to_string())),
    }
}

/// All monomials in the chosen variables with total degree at most `bound`
/// and the given weight, in ascending graded-lex order.
pub fn monomials_of_weight(
    params: &VarietyParams,
    w: Weight,
    bound: u32,
    vars: &[usize],
) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = [0u32; NVARS];
    enumerate(params, w, bound, vars, 0, &mut exps, &mut out);
    out.sort();
    out
}

fn enumerate(
    params: &VarietyParams,
    w: Weight,
    remaining: u32,
    vars: &[usize],
    idx: usize,
    exps: &mut [u32; NVARS],
    out: &mut Vec<Monomial>,
) {
    if idx == vars.len() {
        let m = Monomial::new(*exps);
        if weight_of(params, &m) == w {
            out.push(m);
        }
        return;
    }
    for e in 0..=remaining {
        exps[vars[idx]] = e;
        enumerate(params, w, remaining - e, vars, idx + 1, exps, out);
    }
    exps[vars[idx]] = 0;
}

pub const ALL_VARS: [usize; NVARS] = [0, 1, 2, 3, 4];
