//! The distinguished ideal families, rule-driven normal forms with
//! certified reduction traces, and the truncated linear-algebra oracle
//! used to verify the constant Hilbert function on weight windows.
//!
//! Two independent methods coexist on purpose: the rewriting engine
//! (`normal_form`) produces an explicit combination certificate for every
//! reduction, while `truncated_quotient_dim` recomputes dimensions by
//! exact elimination with no shared code path. The acceptance suite
//! cross-checks them weight by weight.

use crate::error::{Error, Result};
use crate::grading::{monomials_of_weight, weight_of_poly, Weight};
use crate::lambda::{f_lambda, index_of, lambda_min, omega_min, LambdaIndex};
use crate::linalg::{clear_denominators, Echelon};
use crate::monomial::Monomial;
use crate::params::VarietyParams;
use crate::scalar::{Int, Rat};
use crate::torus_eval;
use crate::Poly;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    I,
    J,
    ITilde0,
    ITilde1,
    JTilde0,
    JTilde1,
    Custom,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Variant::I => "I",
            Variant::J => "J",
            Variant::ITilde0 => "I~0",
            Variant::ITilde1 => "I~1",
            Variant::JTilde0 => "J~0",
            Variant::JTilde1 => "J~1",
            Variant::Custom => "custom",
        };
        write!(f, "{name}")
    }
}

/// A named generator list in a fixed ambient variable set.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub variant: Variant,
    pub s: Option<Rat>,
    pub generators: Vec<Poly>,
    pub vars: Vec<usize>,
}

impl IdealSpec {
    pub fn custom(generators: Vec<Poly>, vars: Vec<usize>) -> Self {
        IdealSpec { variant: Variant::Custom, s: None, generators, vars }
    }

    /// The off-diagonal coordinate surviving in the quotient (`X4` for the
    /// I-family, `X3` for the J-family).
    pub fn second_var(&self) -> Option<usize> {
        match self.variant {
            Variant::I | Variant::ITilde0 | Variant::ITilde1 => Some(4),
            Variant::J | Variant::JTilde0 | Variant::JTilde1 => Some(3),
            Variant::Custom => None,
        }
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.max_degree()).max().unwrap_or(0)
    }
}

/// Builds the generator list of the requested family. `s` is required for
/// the five-variable families `I` and `J` and ignored for the
/// three-variable contractions.
pub fn ideal_generators(
    params: &VarietyParams,
    variant: Variant,
    s: Option<Rat>,
) -> Result<IdealSpec> {
    params.require_singular()?;
    let mono = |e: [i64; 5]| -> Poly {
        Poly::from_monomial(Monomial::new([
            e[0] as u32,
            e[1] as u32,
            e[2] as u32,
            e[3] as u32,
            e[4] as u32,
        ]))
    };
    let (p, q, m, a) = (params.p(), params.q(), params.m(), params.a());
    let qp = params.qp();
    let hyper2 = &mono([qp, 0, 0, 0, 0]) - &mono([0, 1, 0, 0, 1]); // X0^{q-p} - X1X4
    let need_s = || {
        s.clone().ok_or_else(|| {
            Error::InvalidParams("the I and J families require the parameter s".into())
        })
    };
    let (generators, vars, s_used) = match variant {
        Variant::I => {
            let s = need_s()?;
            (
                vec![
                    hyper2.clone(),
                    mono([0, 0, 1, 0, 0]),
                    mono([0, 0, 0, 1, 0]),
                    &Poly::constant(s.clone()) - &mono([m * p, m, 0, 0, 0]),
                ],
                vec![0, 1, 2, 3, 4],
                Some(s),
            )
        }
        Variant::J => {
            params.require_toric()?;
            let s = need_s()?;
            (
                vec![
                    mono([qp, 0, 0, 0, 0]),
                    mono([0, 0, 1, 0, 0]),
                    mono([0, 0, 0, 0, 1]),
                    &Poly::constant(s.clone()) - &mono([0, a * q, 0, a * p, 0]),
                ],
                vec![0, 1, 2, 3, 4],
                Some(s),
            )
        }
        Variant::ITilde0 => (
            vec![hyper2.clone(), mono([m * p, m, 0, 0, 0])],
            vec![0, 1, 4],
            None,
        ),
        Variant::ITilde1 => (
            vec![hyper2.clone(), &Poly::one() - &mono([m * p, m, 0, 0, 0])],
            vec![0, 1, 4],
            None,
        ),
        Variant::JTilde0 => {
            params.require_toric()?;
            (
                vec![mono([qp, 0, 0, 0, 0]), mono([0, a * q, 0, a * p, 0])],
                vec![0, 1, 3],
                None,
            )
        }
        Variant::JTilde1 => {
            params.require_toric()?;
            (
                vec![
                    mono([qp, 0, 0, 0, 0]),
                    &Poly::one() - &mono([0, a * q, 0, a * p, 0]),
                ],
                vec![0, 1, 3],
                None,
            )
        }
        Variant::Custom => {
            return Err(Error::InvalidParams(
                "custom ideals are built with IdealSpec::custom".into(),
            ))
        }
    };
    for g in &generators {
        debug_assert!(weight_of_poly(params, g).is_ok(), "inhomogeneous generator {g}");
    }
    Ok(IdealSpec { variant, s: s_used, generators, vars })
}

/// One certified rewriting step: the named rule contributes
/// `multiplier * generators[generator]` to the difference between the
/// input and its normal form.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub multiplier: Poly,
    pub generator: usize,
    pub rule: &'static str,
}

#[derive(Clone, Debug)]
pub struct NormalFormResult {
    pub input: Monomial,
    pub normal_form: Poly,
    pub steps: Vec<ReductionStep>,
}

impl NormalFormResult {
    /// Certificate identity: input = normal form + Σ multiplier·generator.
    pub fn verify(&self, spec: &IdealSpec) -> bool {
        let mut acc = self.normal_form.clone();
        for step in &self.steps {
            acc = &acc + &(&step.multiplier * &spec.generators[step.generator]);
        }
        acc == Poly::from_monomial(self.input)
    }
}

/// Canonical representative of a three-variable monomial modulo the tilde
/// family, with an explicit combination certificate. The unit-relation
/// variants reduce surviving monomials to the extremal representative
/// `f` at `λ_min`; monomials absorbed by the ideal reduce to zero.
pub fn normal_form(
    params: &VarietyParams,
    variant: Variant,
    mono: &Monomial,
) -> Result<NormalFormResult> {
    let j: usize = match variant {
        Variant::ITilde0 | Variant::ITilde1 => 4,
        Variant::JTilde0 | Variant::JTilde1 => 3,
        _ => {
            return Err(Error::InvalidParams(
                "normal form is defined for the three-variable variants".into(),
            ))
        }
    };
    if j == 3 {
        params.require_toric()?;
    } else {
        params.require_singular()?;
    }
    assert!(
        mono.supported_in(&[0, 1, j]),
        "normal form input must lie in the variant's three-variable ring"
    );
    let (p, q, m, qp) = (params.p(), params.q(), params.m(), params.qp());
    let lam = index_of(params, mono, j);
    let n = lam.n;
    let lmin = lambda_min(params, n, lam.c)?;
    let fl = |c: i64, w: i64| -> Monomial {
        f_lambda(params, &LambdaIndex { n, c, omega: w }, j).expect("index realizable")
    };
    // cofactor h with f_{(n,c,w)} = X0^{q-p} · h, defined when n + w >= q - p
    let cofactor = |c: i64, w: i64| -> Monomial {
        let d0 = n + w - qp;
        debug_assert!(d0 >= 0);
        let mut e = [0u32; 5];
        e[0] = d0 as u32;
        e[1] = ((q * c - w) / qp) as u32;
        e[j] = ((p * c - w) / qp) as u32;
        Monomial::new(e)
    };
    let pos = Poly::from_monomial;
    let neg = |m: Monomial| pos(m).scale(&-Rat::one());
    let mut steps: Vec<ReductionStep> = Vec::new();
    let mut push = |multiplier: Poly, generator: usize, rule: &'static str| {
        steps.push(ReductionStep { multiplier, generator, rule });
    };
    let nf: Poly = match variant {
        Variant::ITilde1 => {
            let (mut c, mut w) = (lam.c, lam.omega);
            let wmin = omega_min(params, n, c).expect("input column is nonempty");
            while w > wmin {
                push(pos(cofactor(c, w)), 0, "hypersurface exchange");
                w -= qp;
            }
            while c > lmin.c {
                let c2 = c - m;
                let w2 = omega_min(params, n, c2).expect("lower column is nonempty");
                push(neg(fl(c2, w2)), 1, "unit-relation column jump");
                let mut wd = w2 + p * m;
                while wd > w {
                    push(neg(cofactor(c, wd)), 0, "hypersurface exchange");
                    wd -= qp;
                }
                c = c2;
                w = w2;
            }
            debug_assert_eq!((c, w), (lmin.c, lmin.omega));
            pos(fl(c, w))
        }
        Variant::ITilde0 => {
            if lam.c == lmin.c {
                let mut w = lam.omega;
                while w > lmin.omega {
                    push(pos(cofactor(lam.c, w)), 0, "hypersurface exchange");
                    w -= qp;
                }
                pos(fl(lmin.c, lmin.omega))
            } else {
                // membership: one column jump through the invariant multiple
                let c = lam.c;
                let w2 = omega_min(params, n, c - m).expect("lower column is nonempty");
                let wt = w2 + p * m;
                push(pos(fl(c - m, w2)), 1, "invariant-multiple membership");
                if lam.omega > wt {
                    let mut wd = lam.omega;
                    while wd > wt {
                        push(pos(cofactor(c, wd)), 0, "hypersurface exchange");
                        wd -= qp;
                    }
                } else {
                    let mut wd = wt;
                    while wd > lam.omega {
                        push(neg(cofactor(c, wd)), 0, "hypersurface exchange");
                        wd -= qp;
                    }
                }
                Poly::zero()
            }
        }
        Variant::JTilde0 => {
            let wmin = omega_min(params, n, lam.c).expect("input column is nonempty");
            if lam.omega > wmin {
                push(pos(cofactor(lam.c, lam.omega)), 0, "hypersurface-power membership");
                Poly::zero()
            } else if lam.c > lmin.c {
                debug_assert_eq!(omega_min(params, n, lam.c - m), Some(lam.omega));
                push(pos(fl(lam.c - m, lam.omega)), 1, "invariant-multiple membership");
                Poly::zero()
            } else {
                pos(*mono)
            }
        }
        Variant::JTilde1 => {
            let wmin = omega_min(params, n, lam.c).expect("input column is nonempty");
            if lam.omega > wmin {
                // the monomial is a multiple of X0^{q-p}, hence zero here
                push(pos(cofactor(lam.c, lam.omega)), 0, "hypersurface-power membership");
                Poly::zero()
            } else {
                let mut c = lam.c;
                while c > lmin.c {
                    debug_assert_eq!(omega_min(params, n, c - m), Some(lam.omega));
                    push(neg(fl(c - m, lam.omega)), 1, "unit-relation column jump");
                    c -= m;
                }
                pos(fl(lmin.c, lmin.omega))
            }
        }
        _ => unreachable!(),
    };
    Ok(NormalFormResult { input: *mono, normal_form: nf, steps })
}

/// Class of a five-variable monomial in the quotient by `J_0`: `None` when
/// it reduces to zero, otherwise the canonical representative at
/// `λ_min` of its weight.
pub fn j0_class(params: &VarietyParams, mono: &Monomial) -> Result<Option<Monomial>> {
    if mono.exp(2) > 0 || mono.exp(4) > 0 {
        return Ok(None);
    }
    let r = normal_form(params, Variant::JTilde0, mono)?;
    Ok(r.normal_form.leading().map(|(m, _)| *m))
}

fn window_index(window: &[Monomial]) -> BTreeMap<Monomial, usize> {
    window.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}

fn poly_row(f: &Poly, index: &BTreeMap<Monomial, usize>) -> Option<Vec<Int>> {
    let mut row = vec![Rat::zero(); index.len()];
    for (m, c) in f.iter() {
        let &i = index.get(m)?;
        row[i] = c.clone();
    }
    Some(clear_denominators(&row))
}

/// The truncated span of the ideal inside the weight-`w` monomial window
/// of total degree at most `d_bound`: the window basis plus an echelon of
/// all products generator × monomial staying inside the window.
pub fn span_echelon(
    params: &VarietyParams,
    spec: &IdealSpec,
    w: Weight,
    d_bound: u32,
) -> Result<(Vec<Monomial>, Echelon<Int>)> {
    let needed = spec.max_generator_degree();
    if d_bound < needed {
        return Err(Error::DegreeBound { given: d_bound, needed });
    }
    let window = monomials_of_weight(params, w, d_bound, &spec.vars);
    let index = window_index(&window);
    let mut ech = Echelon::new(window.len());
    for g in &spec.generators {
        if g.is_zero() {
            continue;
        }
        let wg = weight_of_poly(params, g)?;
        let hw = w.sub(params, &wg);
        for h in monomials_of_weight(params, hw, d_bound - g.max_degree(), &spec.vars) {
            let prod = g.mul_monomial(&h);
            let row = poly_row(&prod, &index).expect("product stays inside the window");
            ech.insert(row);
        }
    }
    Ok((window, ech))
}

/// Membership of a homogeneous polynomial in a precomputed truncated span.
pub fn span_contains(window: &[Monomial], ech: &Echelon<Int>, f: &Poly) -> bool {
    if f.is_zero() {
        return true;
    }
    let index = window_index(window);
    match poly_row(f, &index) {
        Some(row) => ech.contains(&row),
        None => false, // some term falls outside the window
    }
}

/// Membership of `f` in the degree-truncated span of the ideal.
pub fn in_truncated_span(
    params: &VarietyParams,
    spec: &IdealSpec,
    f: &Poly,
    d_bound: u32,
) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    if f.max_degree() > d_bound {
        return Ok(false);
    }
    let w = weight_of_poly(params, f)?;
    let (window, ech) = span_echelon(params, spec, w, d_bound)?;
    Ok(span_contains(&window, &ech, f))
}

/// Canonical scan order for complement witnesses: monomials of the
/// surviving three-variable ring first, by ascending `(c, ω)`, so the
/// extremal representative is examined before anything reducible; the
/// remaining window monomials follow in graded-lex order.
fn witness_order(params: &VarietyParams, spec: &IdealSpec, window: &[Monomial]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..window.len()).collect();
    idx.sort_by_key(|&i| {
        let m = &window[i];
        if let Some(j) = spec.second_var() {
            if m.supported_in(&[0, 1, j]) {
                let l = index_of(params, m, j);
                return (0u8, l.c, l.omega, *m);
            }
        }
        (1u8, 0, 0, *m)
    });
    idx
}

/// Exact upper bound for the quotient dimension at weight `w` within the
/// degree-`d_bound` window, together with a canonical complement basis.
pub fn truncated_quotient_dim(
    params: &VarietyParams,
    spec: &IdealSpec,
    w: Weight,
    d_bound: u32,
) -> Result<(usize, Vec<Monomial>)> {
    let (window, mut ech) = span_echelon(params, spec, w, d_bound)?;
    let dim = window.len() - ech.rank();
    let mut witnesses = Vec::with_capacity(dim);
    for i in witness_order(params, spec, &window) {
        if witnesses.len() == dim {
            break;
        }
        let mut unit = vec![Int::zero(); window.len()];
        unit[i] = Int::one();
        if ech.insert(unit) {
            witnesses.push(window[i]);
        }
    }
    debug_assert_eq!(witnesses.len(), dim);
    Ok((dim, witnesses))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Verified,
    Inconclusive,
    Falsified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "verified"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
            Verdict::Falsified => write!(f, "FALSIFIED"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeightRow {
    pub weight: Weight,
    pub dim: usize,
    pub witness: Option<Monomial>,
    pub certificate: &'static str,
    pub ok: bool,
}

/// Window-relative verification record for one ideal of the family.
#[derive(Clone, Debug)]
pub struct HilbertReport {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub variant: Variant,
    pub s: Rat,
    pub n_min: i64,
    pub n_max: i64,
    pub degree_bound: u32,
    pub rows: Vec<WeightRow>,
    pub verdict: Verdict,
}

/// Checks `dim (A/ideal)_(n,d) = 1` for every weight in the window:
/// the truncated oracle supplies the upper bound and an evaluation or
/// fixed-point certificate supplies the lower bound.
pub fn verify_hilbert_window(
    params: &VarietyParams,
    variant: Variant,
    s: &Rat,
    n_range: (i64, i64),
    d_bound: u32,
) -> Result<HilbertReport> {
    if !matches!(variant, Variant::I | Variant::J) {
        return Err(Error::InvalidParams(
            "window verification applies to the I and J families".into(),
        ));
    }
    let spec = ideal_generators(params, variant, Some(s.clone()))?;
    if !s.is_zero() {
        // the evaluation certificate is sound only if every generator
        // vanishes under the substitution; check once up front
        for g in &spec.generators {
            let vanishes = match variant {
                Variant::I => torus_eval::open_orbit_image(params, s, g)?.is_empty(),
                _ => torus_eval::closed_orbit_image(params, s, g)?.is_empty(),
            };
            if !vanishes {
                return Err(Error::InvalidParams(format!(
                    "generator {g} does not vanish under the certificate evaluation"
                )));
            }
        }
    }
    let weights: Vec<Weight> = (n_range.0..=n_range.1)
        .flat_map(|n| (0..params.m()).map(move |d| Weight { n, d }))
        .collect();
    let rows = weights
        .par_iter()
        .map(|w| weight_row(params, &spec, variant, s, *w, d_bound))
        .collect::<Result<Vec<WeightRow>>>()?;
    let verdict = if rows.iter().any(|r| r.dim > 1) {
        Verdict::Inconclusive
    } else if rows.iter().any(|r| !r.ok) {
        Verdict::Falsified
    } else {
        Verdict::Verified
    };
    Ok(HilbertReport {
        p: params.p(),
        q: params.q(),
        m: params.m(),
        variant,
        s: s.clone(),
        n_min: n_range.0,
        n_max: n_range.1,
        degree_bound: d_bound,
        rows,
        verdict,
    })
}

fn weight_row(
    params: &VarietyParams,
    spec: &IdealSpec,
    variant: Variant,
    s: &Rat,
    w: Weight,
    d_bound: u32,
) -> Result<WeightRow> {
    let (dim, witnesses) = truncated_quotient_dim(params, spec, w, d_bound)?;
    let witness = witnesses.first().copied();
    if dim != 1 {
        return Ok(WeightRow { weight: w, dim, witness, certificate: "none", ok: false });
    }
    let wit = witness.unwrap();
    let (certificate, ok) = if s.is_zero() {
        let tilde = match variant {
            Variant::I => Variant::ITilde0,
            _ => Variant::JTilde0,
        };
        let j = spec.second_var().unwrap();
        let ok = wit.supported_in(&[0, 1, j]) && {
            let nf = normal_form(params, tilde, &wit)?;
            let tilde_spec = ideal_generators(params, tilde, None)?;
            nf.verify(&tilde_spec) && nf.normal_form == Poly::from_monomial(wit)
        };
        ("normal-form fixed point", ok)
    } else {
        let f = Poly::from_monomial(wit);
        let ok = match variant {
            Variant::I => !torus_eval::open_orbit_image(params, s, &f)?.is_empty(),
            _ => !torus_eval::closed_orbit_image(params, s, &f)?.is_empty(),
        };
        ("torus evaluation", ok)
    };
    Ok(WeightRow { weight: w, dim, witness, certificate, ok })
}

/// Substitutes the open-orbit parametrization into every generator of
/// `I_1` and checks that all of them vanish identically.
pub fn verify_orbit_vanishing(params: &VarietyParams) -> Result<bool> {
    params.require_singular()?;
    let spec = ideal_generators(params, Variant::I, Some(Rat::one()))?;
    Ok(spec
        .generators
        .iter()
        .all(|g| torus_eval::orbit_image(params, g).is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use crate::scalar::rat;

    fn params132() -> VarietyParams {
        VarietyParams::new(1, 3, 2).unwrap()
    }

    fn mono(text: &str) -> Monomial {
        let p: Poly = parse(text).unwrap();
        *p.leading().unwrap().0
    }

    #[test]
    fn generator_lists() {
        let v = params132();
        let spec = ideal_generators(&v, Variant::I, Some(rat(1))).unwrap();
        let rendered: Vec<String> = spec.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["X0^2 - X1*X4", "X2", "X3", "-X0^2*X1^2 + 1"]
        );
        let spec = ideal_generators(&v, Variant::J, Some(rat(0))).unwrap();
        let rendered: Vec<String> = spec.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(rendered, vec!["X0^2", "X2", "X4", "-X1^3*X3"]);
    }

    #[test]
    fn j_rejects_nontoric() {
        let v = VarietyParams::new(2, 5, 4).unwrap();
        assert!(ideal_generators(&v, Variant::J, Some(rat(1))).is_err());
        assert!(ideal_generators(&v, Variant::I, Some(rat(1))).is_ok());
    }

    #[test]
    fn normal_form_examples() {
        let v = params132();
        // X0^4 X1^2 = f_(2,2,2) reduces to X1X4 = f_(2,0,-2) modulo I~1
        let nf = normal_form(&v, Variant::ITilde1, &mono("X0^4*X1^2")).unwrap();
        assert_eq!(nf.normal_form.to_string(), "X1*X4");
        assert!(nf.verify(&ideal_generators(&v, Variant::ITilde1, None).unwrap()));
        // X0^2 X1^3 X3 = f_(2,2,0) has ω > ω_min, so it dies in J~0
        let nf = normal_form(&v, Variant::JTilde0, &mono("X0^2*X1^3*X3")).unwrap();
        assert!(nf.normal_form.is_zero());
        assert!(nf.verify(&ideal_generators(&v, Variant::JTilde0, None).unwrap()));
        // the constant is its own normal form everywhere
        for variant in [
            Variant::ITilde0,
            Variant::ITilde1,
            Variant::JTilde0,
            Variant::JTilde1,
        ] {
            let nf = normal_form(&v, variant, &Monomial::one()).unwrap();
            assert_eq!(nf.normal_form, Poly::one());
            assert!(nf.steps.is_empty());
        }
    }

    #[test]
    fn normal_form_certificates_exhaustive() {
        // every reduction trace must reproduce its input exactly
        for (p, q, m) in [(1, 3, 2), (1, 2, 3), (2, 3, 2)] {
            let v = VarietyParams::new(p, q, m).unwrap();
            for variant in [
                Variant::ITilde0,
                Variant::ITilde1,
                Variant::JTilde0,
                Variant::JTilde1,
            ] {
                let spec = ideal_generators(&v, variant, None).unwrap();
                let j = spec.second_var().unwrap();
                for d0 in 0..6u32 {
                    for d1 in 0..6u32 {
                        for dj in 0..6u32 {
                            let mut e = [0u32; 5];
                            e[0] = d0;
                            e[1] = d1;
                            e[j] = dj;
                            let m_ = Monomial::new(e);
                            let nf = normal_form(&v, variant, &m_).unwrap();
                            assert!(nf.verify(&spec), "bad trace for {m_} mod {variant}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let v = params132();
        let spec = ideal_generators(&v, Variant::ITilde1, None).unwrap();
        let (dim, wits) = truncated_quotient_dim(&v, &spec, Weight { n: 0, d: 0 }, 8).unwrap();
        assert_eq!(dim, 1);
        assert_eq!(wits, vec![Monomial::one()]);

        let spec = ideal_generators(&v, Variant::JTilde0, None).unwrap();
        let (dim, wits) = truncated_quotient_dim(&v, &spec, Weight { n: 2, d: 0 }, 8).unwrap();
        assert_eq!(dim, 1);
        assert_eq!(wits[0].to_string(), "X1*X3");

        let unit = IdealSpec::custom(vec![Poly::one()], vec![0, 1, 2, 3, 4]);
        let (dim, wits) = truncated_quotient_dim(&v, &unit, Weight { n: 0, d: 0 }, 2).unwrap();
        assert_eq!(dim, 0);
        assert!(wits.is_empty());
    }

    #[test]
    fn oracle_rejects_small_bound() {
        let v = params132();
        let spec = ideal_generators(&v, Variant::I, Some(rat(1))).unwrap();
        assert!(matches!(
            truncated_quotient_dim(&v, &spec, Weight { n: 0, d: 0 }, 2),
            Err(Error::DegreeBound { .. })
        ));
    }

    #[test]
    fn oracle_monotone_in_degree() {
        let v = params132();
        let spec = ideal_generators(&v, Variant::I, Some(rat(1))).unwrap();
        let w = Weight { n: 2, d: 0 };
        let mut last = usize::MAX;
        for d_bound in [6, 8, 10, 12] {
            let (dim, _) = truncated_quotient_dim(&v, &spec, w, d_bound).unwrap();
            assert!(dim <= last);
            last = dim;
        }
        assert_eq!(last, 1);
    }

    #[test]
    fn hilbert_window_small() {
        let v = params132();
        let report =
            verify_hilbert_window(&v, Variant::I, &rat(1), (-2, 2), 10).unwrap();
        assert_eq!(report.verdict, Verdict::Verified);
        assert_eq!(report.rows.len(), 10);
        let report =
            verify_hilbert_window(&v, Variant::J, &rat(0), (-2, 2), 10).unwrap();
        assert_eq!(report.verdict, Verdict::Verified);
    }

    #[test]
    fn orbit_vanishing() {
        for (p, q, m) in [(1, 3, 2), (1, 2, 3)] {
            let v = VarietyParams::new(p, q, m).unwrap();
            assert!(verify_orbit_vanishing(&v).unwrap());
        }
    }
}
