mod common;

use cherncert::cone::{certify, generators, verify_certificate, Assumption, Outcome};
use cherncert::hrr::{chi_p, chi_table, euler_functional};
use cherncert::poly::{weight_basis, ChernFunctional, GradedPoly, Monomial, PolyJson};
use cherncert::rational::{frac, Rational};
use cherncert::symchern::{flip_basis, partitions_of, schur};
use cherncert::Convention;
use common::fourier_motzkin_feasible;
use proptest::prelude::*;

fn all_monomials(n: usize) -> Vec<Monomial> {
    (0..=n).flat_map(|w| weight_basis(n, w)).collect()
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| frac(a, b))
}

/// Random sparse polynomial of dimension `n`.
fn arb_poly(n: usize) -> impl Strategy<Value = GradedPoly> {
    let monos = all_monomials(n);
    let len = monos.len();
    proptest::collection::vec((0..len, arb_rational()), 0..6).prop_map(move |terms| {
        GradedPoly::from_terms(n, terms.into_iter().map(|(i, c)| (monos[i].clone(), c))).unwrap()
    })
}

fn arb_triple() -> impl Strategy<Value = (GradedPoly, GradedPoly, GradedPoly)> {
    (0usize..=6).prop_flat_map(|n| (arb_poly(n), arb_poly(n), arb_poly(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn truncated_ring_axioms((a, b, c) in arb_triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &GradedPoly::one(a.dim()), a.clone());
    }

    #[test]
    fn top_part_uses_only_complementary_components((a, b, _c) in arb_triple()) {
        let n = a.dim();
        let mut expected = GradedPoly::zero(n);
        for w in 0..=n {
            expected = &expected + &(&a.component(w) * &b.component(n - w));
        }
        prop_assert_eq!(
            (&a * &b).top_part(Convention::Tangent),
            expected.top_part(Convention::Tangent)
        );
    }

    #[test]
    fn text_and_json_forms_round_trip((a, _b, _c) in arb_triple()) {
        let text = a.to_string();
        let back = GradedPoly::parse(&text, a.dim()).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(&back, &a);
        let json = serde_json::to_string(&a.to_json()).unwrap();
        let parsed: PolyJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(GradedPoly::from_json(&parsed).unwrap(), a);
    }

    #[test]
    fn flip_is_an_involution((a, _b, _c) in arb_triple()) {
        let (once, conv) = flip_basis(&a, Convention::Tangent);
        let (twice, back) = flip_basis(&once, conv);
        prop_assert_eq!(twice, a);
        prop_assert_eq!(back, Convention::Tangent);
    }

    #[test]
    fn flip_is_a_ring_map((a, b, _c) in arb_triple()) {
        prop_assert_eq!((&a * &b).flip(), &a.flip() * &b.flip());
    }
}

#[test]
fn serre_duality_and_euler_identity_through_dimension_six() {
    for n in 0..=6 {
        for p in 0..=n {
            let lhs = chi_p(n, p).unwrap();
            let rhs = chi_p(n, n - p).unwrap();
            let rhs = if n % 2 == 0 { rhs } else { rhs.neg() };
            assert_eq!(lhs, rhs, "n = {n}, p = {p}");
        }
        assert_eq!(chi_table(n).unwrap().alternating_sum(), euler_functional(n));
    }
}

#[test]
fn schur_polynomials_are_homogeneous() {
    for n in 1..=6 {
        for a in partitions_of(n) {
            assert!(schur(&a, n).unwrap().is_homogeneous(n));
        }
    }
}

#[test]
fn surface_signature_identities() {
    // chi_top = c2(TX), sigma = (c1(TX)^2 - 2 c2(TX)) / 3
    let chi_top = ChernFunctional::parse("c2", 2, Convention::Tangent).unwrap();
    let sigma = ChernFunctional::parse("1/3*c1^2 - 2/3*c2", 2, Convention::Tangent).unwrap();
    let chi0 = chi_p(2, 0).unwrap().in_convention(Convention::Tangent);
    let chi1 = chi_p(2, 1).unwrap().in_convention(Convention::Tangent);
    assert_eq!(chi0, chi_top.try_add(&sigma).unwrap().scale(&frac(1, 4)));
    assert_eq!(chi1, sigma.try_sub(&chi_top).unwrap().scale(&frac(1, 2)));
    // 2 chi + 3 sigma = c1^2
    let c1sq = ChernFunctional::parse("c1^2", 2, Convention::Tangent).unwrap();
    assert_eq!(chi_top.scale(&frac(2, 1)).try_add(&sigma.scale(&frac(3, 1))).unwrap(), c1sq);
}

fn arb_cone_problem() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<i64>)> {
    (1usize..=3).prop_flat_map(|n| {
        let m = [1, 1, 2, 3][n];
        (
            Just(n),
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, m), 0..=5),
            proptest::collection::vec(-5i64..=5, m),
        )
    })
}

fn functional(n: usize, coeffs: &[i64]) -> ChernFunctional {
    ChernFunctional::from_coeffs(
        n,
        Convention::Cotangent,
        coeffs.iter().map(|&c| frac(c, 1)).collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn simplex_agrees_with_fourier_motzkin((n, cols, target) in arb_cone_problem()) {
        let mut gens = cherncert::cone::GeneratorSet::empty(n, Convention::Cotangent);
        for (i, c) in cols.iter().enumerate() {
            gens.push(format!("g{i}"), functional(n, c)).unwrap();
        }
        let t = functional(n, &target);
        let out = certify(&t, &gens).unwrap();
        let columns: Vec<Vec<Rational>> =
            cols.iter().map(|c| c.iter().map(|&x| frac(x, 1)).collect()).collect();
        let fm = fourier_motzkin_feasible(&columns, t.coeffs());
        prop_assert_eq!(out.is_certified(), fm);
        match &out {
            Outcome::Certified(cert) => prop_assert!(verify_certificate(cert, &gens)),
            Outcome::Infeasible(inf) => prop_assert!(inf.verify(&t, &gens)),
        }
        // same input, same answer
        prop_assert_eq!(certify(&t, &gens).unwrap(), out);
    }

    #[test]
    fn schur_cone_soundness(n in 1usize..=4, raw in proptest::collection::vec(-8i64..=8, 5)) {
        let gens = generators(n, Convention::Cotangent, &[Assumption::Schur]).unwrap();
        let len = gens.generators()[0].functional.coeffs().len();
        let t = functional(n, &raw[..len]);
        match certify(&t, &gens).unwrap() {
            Outcome::Certified(cert) => prop_assert!(verify_certificate(&cert, &gens)),
            Outcome::Infeasible(inf) => prop_assert!(inf.verify(&t, &gens)),
        }
    }
}

#[test]
fn schur_cone_membership_agrees_with_fourier_motzkin_up_to_three() {
    for n in 1..=3 {
        let gens = generators(n, Convention::Cotangent, &[Assumption::Schur, Assumption::C1Top]).unwrap();
        let columns: Vec<Vec<Rational>> = gens
            .generators()
            .iter()
            .map(|g| g.functional.coeffs().to_vec())
            .collect();
        for p in 0..=n {
            for sign in [1, -1] {
                let t = chi_p(n, p).unwrap().scale(&frac(sign, 1));
                let out = certify(&t, &gens).unwrap();
                assert_eq!(out.is_certified(), fourier_motzkin_feasible(&columns, t.coeffs()));
            }
        }
    }
}
