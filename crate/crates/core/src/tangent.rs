//! Tangent-space dimension at the Borel-fixed ideal of the family:
//! an equivariant homomorphism out of the ideal is pinned down by four
//! scalars (one per generator, each mapping to the one-dimensional
//! matching weight space of the quotient), subject to the linear
//! constraints induced by the syzygies among the generators over the
//! hypersurface coordinate ring.

use crate::error::{Error, Result};
use crate::grading::{monomials_of_weight, weight_of, weight_of_poly, Weight, ALL_VARS};
use crate::ideals::{ideal_generators, j0_class, normal_form, truncated_quotient_dim, Variant};
use crate::lambda::min_monomial;
use crate::linalg::{Echelon, TrackedEchelon};
use crate::monomial::Monomial;
use crate::params::VarietyParams;
use crate::scalar::Int;
use crate::Poly;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// The basis monomial of the weight space of the quotient by the
/// Borel-fixed ideal, cross-checked as a fixed point of the rewriting
/// engine.
pub fn quotient_witness(params: &VarietyParams, w: Weight) -> Result<Monomial> {
    params.require_toric()?;
    let wit = min_monomial(params, w, 3)?;
    let nf = normal_form(params, Variant::JTilde0, &wit)?;
    assert_eq!(
        nf.normal_form,
        Poly::from_monomial(wit),
        "extremal representative must survive the Borel-fixed ideal"
    );
    Ok(wit)
}

/// Constraint matrix (echelonized) plus the solution-space dimension.
#[derive(Clone, Debug)]
pub struct TangentReport {
    pub dimension: usize,
    pub constraint_basis: Vec<Vec<Int>>,
    pub hypersurface_constraint_present: bool,
    pub degree_bound: u32,
}

/// Dimension of the space of equivariant module homomorphisms from the
/// Borel-fixed ideal to the quotient, with syzygies discovered by
/// truncated-degree elimination up to `d_bound`. Errors when the
/// constraint set is not stable between `d_bound` and `d_bound + 1`.
pub fn tangent_dimension_j0(params: &VarietyParams, d_bound: u32) -> Result<TangentReport> {
    params.require_toric()?;
    let constraints = syzygy_constraints(params, d_bound)?;
    let next = syzygy_constraints(params, d_bound + 1)?;
    if constraints.rank() != next.rank() {
        return Err(Error::UnstableSyzygies { d: d_bound, next: d_bound + 1 });
    }
    let key: Vec<Int> = [1, 1, -1, 0].iter().map(|&k| Int::from(k)).collect();
    let report = TangentReport {
        dimension: 4 - constraints.rank(),
        hypersurface_constraint_present: constraints.contains(&key),
        constraint_basis: constraints.rows().to_vec(),
        degree_bound: d_bound,
    };
    Ok(report)
}

fn syzygy_constraints(params: &VarietyParams, d_bound: u32) -> Result<Echelon<Int>> {
    let spec0 = ideal_generators(params, Variant::J, Some(crate::scalar::rat(0)))?;
    // sign-normalized generators, in the order fixing the unknowns:
    // X0^{q-p}, X2, X4, X1^{aq} X3^{ap}
    let gens: Vec<Poly> = spec0.generators.iter().map(|g| g.monic()).collect();
    let gen_weights: Vec<Weight> = gens
        .iter()
        .map(|g| weight_of_poly(params, g))
        .collect::<Result<_>>()?;
    // each generator must map into a one-dimensional weight space
    let tilde = ideal_generators(params, Variant::JTilde0, None)?;
    let d_assert = d_bound.max(tilde.max_generator_degree() + 2);
    let witnesses: Vec<Monomial> = gen_weights
        .iter()
        .map(|&w| {
            let (dim, _) = truncated_quotient_dim(params, &tilde, w, d_assert)?;
            assert_eq!(dim, 1, "target weight space at {w} must be one-dimensional");
            quotient_witness(params, w)
        })
        .collect::<Result<_>>()?;
    let hyper = {
        let m = |e: [u32; 5]| Poly::from_monomial(Monomial::new(e));
        &(&m([params.qp() as u32, 0, 0, 0, 0]) - &m([0, 1, 0, 0, 1])) + &m([0, 0, 1, 1, 0])
    };
    // candidate syzygy weights: weights of all products generator × monomial
    let mut weights: BTreeSet<Weight> = BTreeSet::new();
    for (g, wg) in gens.iter().zip(&gen_weights) {
        // a generator too large for the bound contributes no products
        let Some(room) = d_bound.checked_sub(g.max_degree()) else {
            continue;
        };
        collect_weights(params, *wg, room, &mut weights);
    }
    let weights: Vec<Weight> = weights.into_iter().collect();
    let per_weight: Vec<Vec<Vec<Int>>> = weights
        .par_iter()
        .map(|w| constraints_at_weight(params, &gens, &gen_weights, &witnesses, &hyper, *w, d_bound))
        .collect::<Result<_>>()?;
    let mut out = Echelon::new(4);
    for rows in per_weight {
        for row in rows {
            out.insert(row);
        }
    }
    Ok(out)
}

/// Adds `base + weight(h)` for every monomial `h` of degree at most `room`.
fn collect_weights(
    params: &VarietyParams,
    base: Weight,
    room: u32,
    out: &mut BTreeSet<Weight>,
) {
    // weight of a degree-bounded monomial is determined by the variable
    // multiplicities; enumerate (e0, e1+e2, e3+e4) profiles
    for e0 in 0..=room {
        for e12 in 0..=(room - e0) {
            for e34 in 0..=(room - e0 - e12) {
                // the residue depends on e1+e2 and e3+e4 only; all splits
                // give the same weight
                let n = e0 as i64 - params.p() * e12 as i64 + params.q() * e34 as i64;
                let d = e12 as i64 - e34 as i64;
                out.insert(base.add(params, &Weight::new(params, n, d)));
            }
        }
    }
}

/// All tangent constraints arising from syzygies concentrated at one
/// weight: kernel vectors of the stacked product rows (hypersurface rows
/// first) are mapped to linear conditions on the four unknowns through
/// the quotient classes of the cofactors.
fn constraints_at_weight(
    params: &VarietyParams,
    gens: &[Poly],
    gen_weights: &[Weight],
    witnesses: &[Monomial],
    hyper: &Poly,
    w: Weight,
    d_bound: u32,
) -> Result<Vec<Vec<Int>>> {
    let window = monomials_of_weight(params, w, d_bound, &ALL_VARS);
    if window.is_empty() {
        return Ok(Vec::new());
    }
    let index: std::collections::BTreeMap<Monomial, usize> =
        window.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    // (slot, scalar) per row: slot None marks hypersurface rows; the scalar
    // is the class of cofactor × witness in the quotient (always 0 or 1)
    let mut rows: Vec<(Option<usize>, Int, Poly)> = Vec::new();
    let hw = w.sub(params, &weight_of(params, &Monomial::new([0, 1, 0, 0, 1])));
    if let Some(room) = d_bound.checked_sub(hyper.max_degree()) {
        for u in monomials_of_weight(params, hw, room, &ALL_VARS) {
            rows.push((None, Int::zero(), hyper.mul_monomial(&u)));
        }
    }
    let mut any_scalar = false;
    for (i, (g, wg)) in gens.iter().zip(gen_weights).enumerate() {
        let Some(room) = d_bound.checked_sub(g.max_degree()) else {
            continue;
        };
        let hw = w.sub(params, wg);
        for h in monomials_of_weight(params, hw, room, &ALL_VARS) {
            let class = j0_class(params, &h.mul(&witnesses[i]))?;
            let scalar = if class.is_some() { Int::one() } else { Int::zero() };
            any_scalar = any_scalar || !scalar.is_zero();
            rows.push((Some(i), scalar, g.mul_monomial(&h)));
        }
    }
    if !any_scalar {
        // every induced condition would be trivially zero
        return Ok(Vec::new());
    }
    let mut ech = TrackedEchelon::new(window.len());
    let mut constraints = Vec::new();
    for (r, (_, _, prod)) in rows.iter().enumerate() {
        let mut vec = vec![Int::zero(); window.len()];
        for (m, c) in prod.iter() {
            let &col = index.get(m).expect("product stays inside the window");
            // products of monic generators by monomials have integer
            // coefficients already
            debug_assert!(c.denom().is_one());
            vec[col] = c.numer().clone();
        }
        if let Err(tags) = ech.insert(vec) {
            let mut constraint = vec![Int::zero(); 4];
            for (tag, (slot, scalar, _)) in tags.iter().zip(rows.iter().take(r + 1)) {
                if let Some(i) = slot {
                    if !scalar.is_zero() && !tag.is_zero() {
                        constraint[*i] += tag.clone();
                    }
                }
            }
            if constraint.iter().any(|c| !c.is_zero()) {
                constraints.push(constraint);
            }
        }
    }
    Ok(constraints)
}
