//! End-to-end acceptance checks. Each test prints a single PASS line on
//! success (visible with `--nocapture`), so a run doubles as a checklist.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl2toric::action::{is_b_stable, translate_check};
use sl2toric::grading::{monomials_of_weight, weight_of, Weight, ALL_VARS};
use sl2toric::ideals::{
    ideal_generators, normal_form, truncated_quotient_dim, verify_hilbert_window,
    verify_orbit_vanishing, Variant, Verdict,
};
use sl2toric::lambda::{f_lambda, in_lambda, index_of, lambda_min, mu, omega_min, LambdaIndex};
use sl2toric::scalar::{rat, ratio};
use sl2toric::semigroup::minimal_generators;
use sl2toric::tangent::tangent_dimension_j0;
use sl2toric::{Monomial, Poly, VarietyParams};

const TORIC_TRIPLES: [(i64, i64, i64); 4] = [(1, 3, 2), (1, 2, 1), (1, 2, 3), (2, 3, 2)];
const WINDOW: (i64, i64) = (-4, 4);
const DEGREE_BOUND: u32 = 12;

fn v132() -> VarietyParams {
    VarietyParams::new(1, 3, 2).unwrap()
}

fn names(b: &[Monomial]) -> Vec<String> {
    b.iter().map(|m| m.to_string()).collect()
}

#[test]
fn a1_refined_grading_worked_example() {
    let v = v132();
    // weight-space bases column by column
    assert_eq!(
        names(&sl2toric::lambda::basis_rc_n(&v, 0, 0, 4)),
        vec!["1"]
    );
    assert_eq!(
        names(&sl2toric::lambda::basis_rc_n(&v, 1, 0, 4)),
        vec!["X0"]
    );
    assert_eq!(
        names(&sl2toric::lambda::basis_rc_n(&v, 2, 0, 4)),
        vec!["X1*X4", "X0^2"]
    );
    assert_eq!(
        names(&sl2toric::lambda::basis_rc_n(&v, 2, 2, 4)),
        vec!["X1^4*X4^2", "X0^2*X1^3*X4", "X0^4*X1^2"]
    );
    assert_eq!(
        names(&sl2toric::lambda::basis_rc_n(&v, 2, 2, 3)),
        vec!["X1^4*X3^2", "X0^2*X1^3*X3", "X0^4*X1^2"]
    );
    // the canonical monomials of the top column, by index
    for (omega, f) in [(-2, "X1^4*X4^2"), (0, "X0^2*X1^3*X4"), (2, "X0^4*X1^2")] {
        let lam = LambdaIndex { n: 2, c: 2, omega };
        assert_eq!(f_lambda(&v, &lam, 4).unwrap().to_string(), f);
    }
    // extremal indices of the diagonal weights
    let lam = |n, c, omega| LambdaIndex { n, c, omega };
    assert_eq!(lambda_min(&v, 0, 0).unwrap(), lam(0, 0, 0));
    assert_eq!(lambda_min(&v, 1, 0).unwrap(), lam(1, 0, 0));
    assert_eq!(lambda_min(&v, 2, 0).unwrap(), lam(2, 0, -2));
    println!("ACCEPTANCE 1 refined-grading worked example: PASS");
}

#[test]
fn a2_semigroup_generators() {
    let v = v132();
    let gens = minimal_generators(&v, 30);
    assert!(gens.certified_complete);
    let pairs: Vec<(i64, i64)> = gens.generators.iter().map(|g| (g.i, g.j)).collect();
    assert_eq!(pairs, vec![(2, 0), (3, 1)]);
    // closed form in the toric case: (m+u, u) for 0 <= u <= a*p
    let mut triples: Vec<(i64, i64, i64)> = Vec::new();
    triples.extend((1..=6).map(|m| (1, 2, m)));
    triples.extend([2, 4, 6, 8].map(|m| (1, 3, m)));
    triples.extend((1..=5).map(|m| (2, 3, m)));
    for (p, q, m) in triples {
        let v = VarietyParams::new(p, q, m).unwrap();
        assert!(v.is_toric(), "({p},{q},{m}) must be toric");
        let bound = (v.a() * q).max(30);
        let gens = minimal_generators(&v, bound);
        assert!(gens.certified_complete);
        let got: Vec<(i64, i64)> = gens.generators.iter().map(|g| (g.i, g.j)).collect();
        let want: Vec<(i64, i64)> = (0..=v.a() * p).map(|u| (m + u, u)).collect();
        assert_eq!(got, want, "generators of ({p},{q},{m})");
    }
    println!("ACCEPTANCE 2 semigroup generators: PASS");
}

#[test]
fn a3_hilbert_function_windows() {
    for (p, q, m) in TORIC_TRIPLES {
        let v = VarietyParams::new(p, q, m).unwrap();
        let cases = [
            (Variant::I, rat(0)),
            (Variant::I, rat(1)),
            (Variant::I, ratio(3, 7)),
            (Variant::J, rat(0)),
            (Variant::J, rat(1)),
        ];
        for (variant, s) in cases {
            let report = verify_hilbert_window(&v, variant, &s, WINDOW, DEGREE_BOUND).unwrap();
            assert_eq!(
                report.verdict,
                Verdict::Verified,
                "({p},{q},{m}) {variant} s={s}"
            );
            for row in &report.rows {
                assert_eq!(row.dim, 1, "({p},{q},{m}) {variant} s={s} at {}", row.weight);
                assert!(row.ok, "({p},{q},{m}) {variant} s={s} at {}", row.weight);
            }
        }
    }
    println!("ACCEPTANCE 3 Hilbert-function windows: PASS");
}

#[test]
fn a4_rewriting_matches_elimination() {
    // the fixed points of the rewriting engine inside each weight window
    // must coincide with the complement basis found by exact elimination
    let variants = [
        Variant::ITilde0,
        Variant::ITilde1,
        Variant::JTilde0,
        Variant::JTilde1,
    ];
    for (p, q, m) in TORIC_TRIPLES {
        let v = VarietyParams::new(p, q, m).unwrap();
        for variant in variants {
            let spec = ideal_generators(&v, variant, None).unwrap();
            let vars = spec.vars.clone();
            for n in WINDOW.0..=WINDOW.1 {
                for d in 0..m {
                    let w = Weight::new(&v, n, d);
                    let (_, witnesses) =
                        truncated_quotient_dim(&v, &spec, w, DEGREE_BOUND).unwrap();
                    let mut survivors = Vec::new();
                    for mono in monomials_of_weight(&v, w, DEGREE_BOUND, &vars) {
                        let nf = normal_form(&v, variant, &mono).unwrap();
                        assert!(nf.verify(&spec), "broken trace at {mono} ({variant})");
                        if nf.normal_form == Poly::from_monomial(mono) {
                            survivors.push(mono);
                        }
                    }
                    assert_eq!(
                        survivors, witnesses,
                        "({p},{q},{m}) {variant} at weight {w}"
                    );
                }
            }
        }
    }
    println!("ACCEPTANCE 4 rewriting vs elimination: PASS");
}

#[test]
fn a5_tangent_dimension() {
    for (p, q, m) in TORIC_TRIPLES {
        let v = VarietyParams::new(p, q, m).unwrap();
        for d in [8, 10, 12] {
            let report = tangent_dimension_j0(&v, d).unwrap();
            assert_eq!(report.dimension, 3, "({p},{q},{m}) at D={d}");
            assert!(report.hypersurface_constraint_present, "({p},{q},{m}) at D={d}");
        }
    }
    println!("ACCEPTANCE 5 tangent dimension: PASS");
}

#[test]
fn a6_group_action() {
    let ts = [ratio(2, 1), ratio(3, 1), ratio(1, 2), ratio(-1, 1)];
    for (p, q, m) in [(1, 3, 2), (1, 2, 3)] {
        let v = VarietyParams::new(p, q, m).unwrap();
        for t in &ts {
            for variant in [Variant::I, Variant::J] {
                let (_, ok) = translate_check(&v, variant, t).unwrap();
                assert!(ok, "({p},{q},{m}) {variant} at t={t}");
            }
        }
        let candidates = [
            (Variant::J, rat(0), true),
            (Variant::I, rat(0), false),
            (Variant::I, rat(1), false),
            (Variant::J, rat(1), false),
        ];
        for (variant, s, expected) in candidates {
            let spec = ideal_generators(&v, variant, Some(s.clone())).unwrap();
            let d = 8.max(spec.max_generator_degree() + 1);
            let stable = is_b_stable(&v, &spec, d).unwrap();
            assert_eq!(stable, expected, "({p},{q},{m}) {variant} s={s}");
        }
    }
    println!("ACCEPTANCE 6 group action: PASS");
}

#[test]
fn a7_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5132_7031);
    for (p, q, m) in [(1, 3, 2), (2, 5, 4), (1, 2, 3)] {
        let v = VarietyParams::new(p, q, m).unwrap();

        // injectivity of the index map on bounded exponent triples
        let mut seen = std::collections::BTreeMap::new();
        for _ in 0..2000 {
            let t = (
                rng.gen_range(0..=50i64),
                rng.gen_range(0..=50i64),
                rng.gen_range(0..=50i64),
            );
            let lam = mu(&v, t.0, t.1, t.2);
            if let Some(prev) = seen.insert(lam, t) {
                assert_eq!(prev, t, "index collision at {lam:?}");
            }
        }

        // multiplicativity of the canonical monomials
        let random_index = |rng: &mut ChaCha8Rng| {
            let mono = Monomial::new([
                rng.gen_range(0..=12u32),
                rng.gen_range(0..=12u32),
                0,
                0,
                rng.gen_range(0..=12u32),
            ]);
            index_of(&v, &mono, 4)
        };
        for _ in 0..500 {
            let (l1, l2) = (random_index(&mut rng), random_index(&mut rng));
            let sum = LambdaIndex {
                n: l1.n + l2.n,
                c: l1.c + l2.c,
                omega: l1.omega + l2.omega,
            };
            assert!(in_lambda(&v, &sum));
            let prod = f_lambda(&v, &l1, 4)
                .unwrap()
                .mul(&f_lambda(&v, &l2, 4).unwrap());
            assert_eq!(f_lambda(&v, &sum, 4).unwrap(), prod);
        }

        // the column minimum is characterized by n + omega < q - p
        for n in -10..=10 {
            for c in -10..=10 {
                for omega in -60..=60 {
                    let lam = LambdaIndex { n, c, omega };
                    if !in_lambda(&v, &lam) {
                        continue;
                    }
                    let is_min = omega_min(&v, n, c) == Some(omega);
                    assert_eq!(n + omega < v.qp(), is_min, "at {lam:?}");
                }
            }
        }

        // additivity of the weight grading
        let random_mono = |rng: &mut ChaCha8Rng| {
            Monomial::new(std::array::from_fn(|_| rng.gen_range(0..=6u32)))
        };
        for _ in 0..1000 {
            let (m1, m2) = (random_mono(&mut rng), random_mono(&mut rng));
            let w = weight_of(&v, &m1.mul(&m2));
            assert_eq!(w, weight_of(&v, &m1).add(&v, &weight_of(&v, &m2)));
        }

        // generator criterion: every monomial of weight (-p, 1) is
        // divisible by X1 or X2; every monomial of weight (q, m-1) is
        // divisible by X3 or X4 after at most one hypersurface exchange
        // (X0^{q-p} -> X1X4 - X2X3), whose terms always carry X3 or X4
        let w = Weight::new(&v, -p, 1);
        for mono in monomials_of_weight(&v, w, 10, &ALL_VARS) {
            assert!(mono.exp(1) > 0 || mono.exp(2) > 0, "at {mono}");
        }
        let w = Weight::new(&v, q, m - 1);
        for mono in monomials_of_weight(&v, w, 10, &ALL_VARS) {
            assert!(
                mono.exp(3) > 0 || mono.exp(4) > 0 || mono.exp(0) >= v.qp() as u32,
                "at {mono}"
            );
        }
    }
    println!("ACCEPTANCE 7 property suites: PASS");
}

#[test]
fn a8_orbit_vanishing() {
    for (p, q, m) in TORIC_TRIPLES {
        let v = VarietyParams::new(p, q, m).unwrap();
        assert!(verify_orbit_vanishing(&v).unwrap(), "({p},{q},{m})");
        // negative control: shifting the unit relation must not vanish
        let mp = (m * p) as u32;
        let bad = &Poly::constant(rat(2))
            - &Poly::from_monomial(Monomial::new([mp, m as u32, 0, 0, 0]));
        assert!(!sl2toric::torus_eval::orbit_image(&v, &bad).is_empty());
    }
    println!("ACCEPTANCE 8 orbit vanishing: PASS");
}
