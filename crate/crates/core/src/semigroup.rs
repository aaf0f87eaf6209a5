//! The affine semigroup `{(i, j) : 0 <= j, q*j <= p*i, m | (i - j)}`, its
//! minimal generators, the equivariant embedding vector, and the invariant
//! monomials it induces in three ambient variables.

use crate::error::Result;
use crate::grading::{weight_of, Weight};
use crate::monomial::Monomial;
use crate::params::VarietyParams;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SemigroupElement {
    pub i: i64,
    pub j: i64,
}

/// Membership test: `i, j >= 0`, `q*j <= p*i` (exact rational halfplane)
/// and `m | (i - j)`.
pub fn contains(params: &VarietyParams, i: i64, j: i64) -> bool {
    i >= 0 && j >= 0 && params.q() * j <= params.p() * i && (i - j).rem_euclid(params.m()) == 0
}

/// Result of the bounded generator sieve. `certified_complete` is true only
/// in the toric singular case with a sufficient bound `i >= a*q`; otherwise
/// the list is complete relative to the bound with no further claim.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub generators: Vec<SemigroupElement>,
    pub i_bound: i64,
    pub certified_complete: bool,
}

/// Bounded enumeration plus decomposition sieve: collect every nonzero
/// element with `i <= i_bound`, drop those expressible as a sum of two
/// nonzero elements, and return the rest sorted lexicographically.
pub fn minimal_generators(params: &VarietyParams, i_bound: i64) -> GeneratorSet {
    let mut elements = BTreeSet::new();
    for i in 0..=i_bound {
        for j in 0..=i {
            if (i, j) != (0, 0) && contains(params, i, j) {
                elements.insert((i, j));
            }
        }
    }
    let generators = elements
        .iter()
        .filter(|&&(i, j)| {
            !elements.iter().any(|&(i2, j2)| {
                let (ri, rj) = (i - i2, j - j2);
                (ri, rj) != (0, 0) && elements.contains(&(ri, rj))
            })
        })
        .map(|&(i, j)| SemigroupElement { i, j })
        .collect();
    let certified_complete =
        params.is_toric() && !params.is_smooth() && i_bound >= params.a() * params.q();
    GeneratorSet { generators, i_bound, certified_complete }
}

/// A component `X^i Y^j` of the embedding vector, living in the irreducible
/// representation of highest weight `i + j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EmbeddingComponent {
    pub i: i64,
    pub j: i64,
}

impl EmbeddingComponent {
    pub fn highest_weight(&self) -> i64 {
        self.i + self.j
    }
}

impl fmt::Display for EmbeddingComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, 0) => write_pow(f, 'X', i),
            (0, j) => write_pow(f, 'Y', j),
            (i, j) => {
                write_pow(f, 'X', i)?;
                write!(f, "*")?;
                write_pow(f, 'Y', j)
            }
        }
    }
}

fn write_pow(f: &mut fmt::Formatter<'_>, v: char, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "{v}")
    } else {
        write!(f, "{v}^{e}")
    }
}

/// The formal-monomial presentation of the minimal generators. Rejects the
/// smooth case, which has no singular embedding data to report.
pub fn embedding_vector(
    params: &VarietyParams,
    i_bound: i64,
) -> Result<(Vec<EmbeddingComponent>, GeneratorSet)> {
    params.require_singular()?;
    let gens = minimal_generators(params, i_bound);
    let vector = gens
        .generators
        .iter()
        .map(|g| EmbeddingComponent { i: g.i, j: g.j })
        .collect();
    Ok((vector, gens))
}

/// For each minimal generator `(u1, u2)`, the invariant monomial
/// `X0^(p*u1 - q*u2) * Xi^u1 * Xj^u2` with `i` in `{1, 2}`, `j` in `{3, 4}`.
/// In the toric case the closed-form presentation
/// `X0^((a*p - u)(q - p)) * Xi^(m + u) * Xj^u`, `0 <= u <= a*p`, is computed
/// as well and the two sets are checked to agree.
pub fn invariant_generators(
    params: &VarietyParams,
    first_var: usize,
    second_var: usize,
    i_bound: i64,
) -> Result<Vec<Monomial>> {
    params.require_singular()?;
    assert!(first_var == 1 || first_var == 2, "first variable must be X1 or X2");
    assert!(second_var == 3 || second_var == 4, "second variable must be X3 or X4");
    let gens = minimal_generators(params, i_bound);
    let from_sieve: Vec<Monomial> = gens
        .generators
        .iter()
        .map(|g| {
            let e0 = params.p() * g.i - params.q() * g.j;
            debug_assert!(e0 >= 0);
            Monomial::var_pow(0, e0 as u32)
                .mul(&Monomial::var_pow(first_var, g.i as u32))
                .mul(&Monomial::var_pow(second_var, g.j as u32))
        })
        .collect();
    if gens.certified_complete {
        let (a, p, qp, m) = (params.a(), params.p(), params.qp(), params.m());
        let closed_form: Vec<Monomial> = (0..=a * p)
            .map(|u| {
                Monomial::var_pow(0, ((a * p - u) * qp) as u32)
                    .mul(&Monomial::var_pow(first_var, (m + u) as u32))
                    .mul(&Monomial::var_pow(second_var, u as u32))
            })
            .collect();
        assert_eq!(
            from_sieve, closed_form,
            "sieve and closed-form invariant generators disagree"
        );
    }
    Ok(from_sieve)
}

/// Every invariant generator must have weight (0, 0).
pub fn check_invariant_weights(params: &VarietyParams, monos: &[Monomial]) -> bool {
    monos
        .iter()
        .all(|m| weight_of(params, m) == Weight { n: 0, d: 0 })
}
