//! Axiom checks on generators, shared by the test suites and the CLI.

use crate::mq::{det_q, monomial_basis, sigma, tau, MqElement};

use super::{
    antipode, coaction, comultiply, comultiply_mq, counit, trivial_coaction_value, Algebra, Coaction, GlqElement,
    LegValue, TensorElement,
};

fn generators(n: usize) -> Vec<MqElement> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| MqElement::generator(n, i, j).expect("in range"))).collect()
}

fn mq_leg(v: &LegValue) -> MqElement {
    match v {
        LegValue::Mq(m) => m.clone(),
        LegValue::Glq(g) => g.as_mq().expect("polynomial leg").clone(),
        _ => unreachable!("leg is not O(M_q)"),
    }
}

/// `(Δ ⊗ id) ∘ Δ = (id ⊗ Δ) ∘ Δ` on every `x_ij`.
pub fn coassociativity_holds(n: usize) -> bool {
    generators(n).iter().all(|g| {
        let d = comultiply_mq(g);
        let twice = |leg| d.flat_map_leg(leg, &[Algebra::Mq, Algebra::Mq], |v| Ok(comultiply_mq(&mq_leg(v))));
        matches!((twice(0), twice(1)), (Ok(l), Ok(r)) if l == r)
    })
}

/// `(ε ⊗ id) ∘ Δ = id = (id ⊗ ε) ∘ Δ` on every `x_ij`.
pub fn counit_holds(n: usize) -> bool {
    generators(n).iter().all(|g| {
        let d = comultiply_mq(g);
        let eps = |v: &LegValue| Ok(LegValue::Mq(MqElement::constant(n, counit(&GlqElement::from_mq(mq_leg(v))))));
        let expected = TensorElement::pure(n, vec![LegValue::Mq(g.clone())]);
        (0..2).all(|leg| {
            d.map_leg(leg, Algebra::Mq, eps).and_then(|t| t.multiply_legs(0)).map(|t| t == expected).unwrap_or(false)
        })
    })
}

/// `S(h1) h2 = ε(h) = h1 S(h2)` on every `x_ij` and on `det^-1`.
pub fn antipode_holds(n: usize) -> bool {
    let mut elems: Vec<GlqElement> = generators(n).into_iter().map(GlqElement::from_mq).collect();
    elems.push(GlqElement::det_inverse_pow(n, 1));
    elems.iter().all(|g| {
        let eps = GlqElement::from_mq(MqElement::constant(n, counit(g)));
        let expected = TensorElement::pure(n, vec![LegValue::Glq(eps)]);
        let d = comultiply(g);
        let s = |v: &LegValue| Ok(LegValue::Glq(antipode(&v.as_glq().expect("GL leg"))));
        (0..2).all(|leg| {
            d.map_leg(leg, Algebra::Glq, s).and_then(|t| t.multiply_legs(0)).map(|t| t == expected).unwrap_or(false)
        })
    })
}

/// `det_q` commutes with every `x_ij`.
pub fn det_central(n: usize) -> bool {
    let det = det_q(n);
    generators(n).iter().all(|g| &det * g == g * &det)
}

/// `β(τ_i) = τ_i ⊗ 1` and `α(σ_i) = σ_i ⊗ 1` for all `i`.
pub fn coinvariance_holds(n: usize) -> bool {
    (1..=n).all(|i| {
        let t = tau(i, n).expect("in range");
        let s = sigma(i, n).expect("in range");
        coaction(&t, Coaction::Beta) == trivial_coaction_value(&t)
            && coaction(&s, Coaction::Alpha) == trivial_coaction_value(&s)
    })
}

/// The `τ_i` pairwise commute, and so do the `σ_i`.
pub fn coinvariants_commute(n: usize) -> bool {
    let taus: Vec<MqElement> = (1..=n).map(|i| tau(i, n).expect("in range")).collect();
    let sigmas: Vec<MqElement> = (1..=n).map(|i| sigma(i, n).expect("in range")).collect();
    [taus, sigmas].iter().all(|fs| fs.iter().all(|a| fs.iter().all(|b| a * b == b * a)))
}

/// `(id ⊗ Δ) ∘ c = (c ⊗ id) ∘ c` on every `x_ij` for the coaction `c`.
pub fn coaction_law_holds(n: usize, which: Coaction) -> bool {
    generators(n).iter().all(|g| {
        let b = coaction(g, which);
        let left = b.flat_map_leg(1, &[Algebra::Glq, Algebra::Glq], |v| Ok(comultiply(&v.as_glq().expect("GL leg"))));
        let right = b.flat_map_leg(0, &[Algebra::Mq, Algebra::Glq], |v| Ok(coaction(&mq_leg(v), which)));
        matches!((left, right), (Ok(l), Ok(r)) if l == r)
    })
}

/// `β(f h) = β(f) β(h)` for `f = τ_i`, and `α(h f) = α(h) α(f)` for
/// `f = σ_i`, over every monomial `h` of degree at most `d`.
pub fn coinvariant_multiplicativity_holds(n: usize, d: usize, which: Coaction) -> bool {
    let fs: Vec<MqElement> = (1..=n)
        .map(|i| match which {
            Coaction::Beta => tau(i, n),
            Coaction::Alpha => sigma(i, n),
        })
        .collect::<crate::Result<_>>()
        .expect("in range");
    let hs = monomial_basis(n, d);
    fs.iter().all(|f| {
        let cf = coaction(f, which);
        hs.iter().all(|h| {
            let h = MqElement::from_monomial(h.clone());
            let ch = coaction(&h, which);
            let (prod, fh) = match which {
                Coaction::Beta => (cf.try_mul(&ch), f * &h),
                Coaction::Alpha => (ch.try_mul(&cf), &h * f),
            };
            matches!(prod, Ok(p) if p == coaction(&fh, which))
        })
    })
}
