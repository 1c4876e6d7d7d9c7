//! Acceptance criteria. Each test prints one PASS/FAIL line.

use std::time::{Duration, Instant};

use qadjoint::chars::{character_of, chi_t, compare_at_q1, difference_identity, Character, Picture};
use qadjoint::coorbit::{
    coorbit, ideal_truncation, image_sl, kernel_basis, psi_power, psi_power_check, sphere_span, Point, PsiVariant,
};
use qadjoint::hopf::checks;
use qadjoint::hopf::{lambda_d, Coaction, DiagElement, DiagVars, LegValue, TensorElement};
use qadjoint::mq::{monomial_basis, MqElement};
use qadjoint::scalars::Scalar;

fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

fn diag(entries: &[&str]) -> Point {
    Point::diagonal(&entries.iter().map(|e| s(e)).collect::<Vec<_>>()).unwrap()
}

fn report(id: u32, title: &str, limit: Duration, run: impl FnOnce(&mut Vec<String>)) {
    let start = Instant::now();
    let mut failures = Vec::new();
    run(&mut failures);
    let elapsed = start.elapsed();
    if elapsed > limit {
        failures.push(format!("took {:.1?}, limit {:?}", elapsed, limit));
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("{} criterion {}: {} ({:.2?})", verdict, id, title, elapsed);
    for f in &failures {
        println!("    {}", f);
    }
    assert!(failures.is_empty(), "criterion {} failed: {:?}", id, failures);
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

#[test]
fn criterion_1_coinvariance() {
    report(1, "coinvariance of tau and sigma, commuting families", Duration::from_secs(60), |f| {
        for n in [2, 3] {
            check(f, checks::coinvariance_holds(n), format!("coinvariance, N = {}", n));
            check(f, checks::coinvariants_commute(n), format!("commutation, N = {}", n));
        }
    });
}

#[test]
fn criterion_2_hopf_axioms() {
    report(2, "Hopf axioms on generators, det_q central", Duration::from_secs(60), |f| {
        for n in [2, 3] {
            check(f, checks::coassociativity_holds(n), format!("coassociativity, N = {}", n));
            check(f, checks::counit_holds(n), format!("counit, N = {}", n));
            check(f, checks::antipode_holds(n), format!("antipode, N = {}", n));
            check(f, checks::det_central(n), format!("det_q central, N = {}", n));
        }
    });
}

#[test]
fn criterion_3_closed_forms() {
    report(3, "closed forms for x21^n under beta, alpha and nilpotent points", Duration::from_secs(120), |f| {
        let points = [diag(&["2", "3"]), diag(&["1", "1"]), diag(&["q^2", "1"]), diag(&["q^4", "1"])];
        for xi in &points {
            for n in 0..=4 {
                check(f, psi_power_check(xi, n, PsiVariant::BetaDiag).unwrap(), format!("beta, {}, n = {}", xi, n));
            }
            for n in 0..=3 {
                check(f, psi_power_check(xi, n, PsiVariant::AlphaDiag).unwrap(), format!("alpha, {}, n = {}", xi, n));
            }
        }
        // resonance: diag(q^(2m), 1) kills x21^n exactly for n > m
        for (m, xi) in points[1..].iter().enumerate() {
            for n in 1..=4 {
                let zero = psi_power(xi, n, PsiVariant::BetaDiag).unwrap().is_zero();
                check(f, zero == (n > m), format!("vanishing pattern, {}, n = {}", xi, n));
            }
        }
        for s1 in ["1", "2"] {
            let nil = Point::nilpotent(s(s1)).unwrap();
            for n in 0..=4 {
                check(f, psi_power_check(&nil, n, PsiVariant::BetaNilpotent).unwrap(), format!("nilpotent {}, n = {}", s1, n));
            }
        }
    });
}

#[test]
fn criterion_4_kernel_theorem() {
    report(4, "truncated kernel equals the coinvariant ideal", Duration::from_secs(600), |f| {
        let generic = diag(&["2", "3"]);
        for (d, stated) in [(1, 1), (2, 6), (3, 20)] {
            let k = kernel_basis(&generic, Coaction::Beta, d).unwrap();
            let i = ideal_truncation(&generic, Coaction::Beta, d).unwrap();
            check(f, k.equals(&i).unwrap(), format!("diag(2,3), d = {}: kernel != ideal", d));
            check(f, k.dim() == stated, format!("diag(2,3), d = {}: kernel dimension {} (stated {})", d, k.dim(), stated));
            check(f, i.dim() == stated, format!("diag(2,3), d = {}: ideal dimension {} (stated {})", d, i.dim(), stated));
        }
        let nil = Point::nilpotent(s("1")).unwrap();
        for d in 1..=3 {
            let k = kernel_basis(&nil, Coaction::Beta, d).unwrap();
            let i = ideal_truncation(&nil, Coaction::Beta, d).unwrap();
            check(f, k.equals(&i).unwrap(), format!("nilpotent, d = {}: kernel {} vs ideal {}", d, k.dim(), i.dim()));
        }
    });
}

#[test]
fn criterion_5_image_containment() {
    report(5, "images of diagonal points are diagonal coinvariants", Duration::from_secs(300), |f| {
        let cases = [(diag(&["2", "3"]), 3), (diag(&["q^2", "1"]), 3), (diag(&["2", "3", "5"]), 2)];
        for (xi, d) in &cases {
            let n = xi.size();
            for m in monomial_basis(n, *d) {
                let img = coorbit(xi, &MqElement::from_monomial(m.clone()), Coaction::Beta).unwrap();
                let expected = TensorElement::pure(n, vec![LegValue::Diag(DiagElement::one(DiagVars::T(n))), LegValue::Glq(img.clone())]);
                check(f, lambda_d(&img) == expected, format!("{} at {}", m, xi));
            }
        }
    });
}

#[test]
fn criterion_6_hilbert_series() {
    report(6, "image character at symbolic q equals the q = 1 recomputation", Duration::from_secs(600), |f| {
        let xi = diag(&["2", "3"]);
        for d in 0..=3 {
            check(f, compare_at_q1(&xi, d).unwrap(), format!("d = {}", d));
        }
    });
}

fn sum_chi(r: i32) -> Character {
    (0..=r).fold(Character::zero(DiagVars::Z), |acc, l| acc.add(&chi_t(2 * l).unwrap()))
}

#[test]
fn criterion_7_character_identities() {
    report(7, "difference identity, sphere spans, chi(T_l)", Duration::from_secs(60), |f| {
        for r in 0..=5 {
            check(f, difference_identity(r).unwrap(), format!("difference identity, r = {}", r));
        }
        for r in 0..=4 {
            let w = sphere_span(r).unwrap();
            check(f, w.dim() == (r + 1) * (r + 1), format!("dim W^{} = {}", r, w.dim()));
            let c = character_of(&w, Picture::SlqZ).unwrap();
            check(f, c == sum_chi(r as i32), format!("character of W^{} is {}", r, c));
        }
        let expected = ["1", "z + z^-1", "z^2 + 1 + z^-2", "z^3 + z + z^-1 + z^-3", "z^4 + z^2 + 1 + z^-2 + z^-4"];
        for (m, text) in expected.iter().enumerate() {
            let c = chi_t(m as i32).unwrap();
            check(f, c.to_string() == *text, format!("chi_T({}) = {}", m, c));
        }
    });
}

#[test]
fn criterion_8_resonant_degeneration() {
    report(8, "resonant point diag(q^2, 1)", Duration::from_secs(300), |f| {
        let xi = diag(&["q^2", "1"]);
        check(f, psi_power(&xi, 2, PsiVariant::BetaDiag).unwrap().is_zero(), "psi(x21^2) != 0");
        let stable = sum_chi(1);
        for d in 1..=3 {
            let c = character_of(&image_sl(&xi, Coaction::Beta, d).unwrap(), Picture::SlqZ).unwrap();
            check(f, c == stable, format!("image character at d = {} is {}", d, c));
        }
        for d in 2..=3 {
            let k = kernel_basis(&xi, Coaction::Beta, d).unwrap();
            let i = ideal_truncation(&xi, Coaction::Beta, d).unwrap();
            check(f, k.contains(&i).unwrap() && k.dim() > i.dim(), format!("d = {}: kernel {} vs ideal {}", d, k.dim(), i.dim()));
        }
    });
}

#[test]
fn criterion_9_coaction_laws() {
    report(9, "coaction law and multiplicativity on coinvariants", Duration::from_secs(120), |f| {
        check(f, checks::coaction_law_holds(2, Coaction::Beta), "(id ⊗ Δ)β = (β ⊗ id)β");
        check(f, checks::coinvariant_multiplicativity_holds(2, 2, Coaction::Beta), "β(f h) = β(f)β(h)");
    });
}
