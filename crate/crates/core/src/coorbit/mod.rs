//! Classical points, co-orbit maps `β^ξ = (ev_ξ ⊗ id) ∘ β` and
//! `α^ξ = (ev_ξ ⊗ id) ∘ α`, and their truncated kernels and images.

mod point;
mod subspace;

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

pub use point::{evaluate, validate_point, Point};
pub use subspace::{Ambient, TruncatedSubspace};

use crate::chars::Character;
use crate::error::{Error, Result};
use crate::hopf::{coaction, cofactor, Coaction, DiagVars, GlqElement, Key, LegValue, SlqElement, TensorElement};
use crate::mq::{gen_pos, monomial_basis, sigma, tau, Monomial, MqElement};
use crate::scalars::Scalar;
use crate::xla::{self, Matrix};

thread_local! {
    static COORBIT_CACHE: RefCell<HashMap<(Point, Coaction, Monomial), GlqElement>> = RefCell::new(HashMap::new());
}

/// Drop memoized co-orbit images of the current thread.
pub fn clear_cache() {
    COORBIT_CACHE.with(|c| c.borrow_mut().clear());
}

/// Co-orbit image of an ordered monomial, numerator of degree `N deg(m)`
/// over `det_q^deg(m)`.
///
/// Since `ev_ξ` is an algebra map, peeling one generator off the word gives
///
/// ```text
/// β^ξ(w x_ij) = Σ_kl ξ_kl S(x_ik) β^ξ(w) x_lj
/// α^ξ(x_ij w) = Σ_kl ξ_kl x_lj α^ξ(w) S(x_ik)
/// ```
fn coorbit_monomial(xi: &Point, m: &Monomial, which: Coaction) -> GlqElement {
    let n = xi.size();
    let peeled = match which {
        Coaction::Beta => m.last_gen(),
        Coaction::Alpha => m.first_gen(),
    };
    let Some(g) = peeled else {
        return GlqElement::one(n);
    };
    let key = (xi.clone(), which, m.clone());
    if let Some(hit) = COORBIT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (i, j) = gen_pos(n, g);
    let rest = coorbit_monomial(xi, &m.without_gen(g), which);
    let mut num = MqElement::zero(n);
    for (k, l, v) in xi.support() {
        let cof = cofactor(n, i, k).expect("indices in range");
        let x = MqElement::generator(n, l, j).expect("indices in range");
        let term = match which {
            Coaction::Beta => &(&cof * rest.numerator()) * &x,
            Coaction::Alpha => &(&x * rest.numerator()) * &cof,
        };
        num.add_scaled(&v, &term);
    }
    let value = GlqElement::new(num, rest.detpow() + 1);
    COORBIT_CACHE.with(|c| c.borrow_mut().insert(key, value.clone()));
    value
}

/// The co-orbit map applied to `f`.
pub fn coorbit(xi: &Point, f: &MqElement, which: Coaction) -> Result<GlqElement> {
    if xi.size() != f.size() {
        return Err(Error::SizeMismatch { expected: xi.size(), found: f.size() });
    }
    let n = xi.size();
    let mut acc = GlqElement::zero(n);
    for (m, c) in f.terms() {
        acc = acc.try_add(&coorbit_monomial(xi, m, which).scale(c))?;
    }
    Ok(acc)
}

/// `(ev_ξ ⊗ id)` applied to a two-leg tensor whose first leg is O(M_q).
pub fn evaluate_first_leg(xi: &Point, t: &TensorElement) -> Result<GlqElement> {
    let n = t.size();
    let mut acc = GlqElement::zero(n);
    for (first, rest) in t.first_leg_groups() {
        let Key::Mono(m) = &first else {
            return Err(Error::LegMismatch("first leg is not O(M_q)".into()));
        };
        let v = evaluate(xi, &MqElement::from_monomial(m.clone()))?;
        if v.is_zero() {
            continue;
        }
        let num = MqElement::from_terms(
            n,
            rest.into_iter().map(|(ks, c)| match &ks[0] {
                Key::Mono(m2) => (m2.clone(), &c * &v),
                Key::Exps(_) => unreachable!("second leg is O(GL_q)"),
            }),
        );
        acc = acc.try_add(&GlqElement::new(num, t.detpows()[1]))?;
    }
    Ok(acc)
}

/// The co-orbit map through the literal coaction composite.
pub fn coorbit_literal(xi: &Point, f: &MqElement, which: Coaction) -> Result<GlqElement> {
    if xi.size() != f.size() {
        return Err(Error::SizeMismatch { expected: xi.size(), found: f.size() });
    }
    evaluate_first_leg(xi, &coaction(f, which))
}

/// Shape of ξ expected by [`psi_power_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiVariant {
    BetaDiag,
    AlphaDiag,
    BetaNilpotent,
}

/// `π(coorbit(ξ, x21^n))` in O(SL_q).
pub fn psi_power(xi: &Point, n: usize, variant: PsiVariant) -> Result<SlqElement> {
    check_variant_shape(xi, variant)?;
    let which = match variant {
        PsiVariant::AlphaDiag => Coaction::Alpha,
        _ => Coaction::Beta,
    };
    let x21n = MqElement::from_monomial(Monomial::from_exponents(2, &[0, 0, n as u16, 0]));
    SlqElement::from_glq(&coorbit(xi, &x21n, which)?)
}

fn check_variant_shape(xi: &Point, variant: PsiVariant) -> Result<()> {
    if xi.size() != 2 {
        return Err(Error::ShapeMismatch("closed forms are stated for N = 2".into()));
    }
    let ok = match variant {
        PsiVariant::BetaDiag | PsiVariant::AlphaDiag => xi.is_diagonal(),
        PsiVariant::BetaNilpotent => {
            xi.entry(1, 1).is_zero() && xi.entry(2, 1).is_zero() && xi.entry(2, 2).is_zero()
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("point {} does not fit {:?}", xi, variant)))
    }
}

/// The closed forms for `x21^n`:
///
/// ```text
/// beta, diagonal:   (-q)^n Π_{i=0}^{n-1} (ξ1 - q^(2i) ξ2) c^n a^n
/// alpha, diagonal:  (-q)^n Π_{i=1}^{n}   (ξ1 - q^(-2i) ξ2) a^n c^n
/// beta, nilpotent:  (-1)^n q^n ξ1^n c^(2n)     for ξ = [[0, ξ1], [0, 0]]
/// ```
pub fn psi_closed_form(xi: &Point, n: usize, variant: PsiVariant) -> Result<SlqElement> {
    check_variant_shape(xi, variant)?;
    let a = SlqElement::generator('a')?;
    let c = SlqElement::generator('c')?;
    let minus_q_n = (-Scalar::q()).pow(n as i32)?;
    Ok(match variant {
        PsiVariant::BetaDiag | PsiVariant::AlphaDiag => {
            let (x1, x2) = (xi.entry(1, 1), xi.entry(2, 2));
            let mut coeff = minus_q_n;
            let exps: Vec<i32> = match variant {
                PsiVariant::BetaDiag => (0..n as i32).map(|i| 2 * i).collect(),
                _ => (1..=n as i32).map(|i| -2 * i).collect(),
            };
            for e in exps {
                coeff = &coeff * &(x1 - &(&Scalar::q_pow(e) * x2));
            }
            let body = if variant == PsiVariant::BetaDiag { c.pow(n).mul(&a.pow(n)) } else { a.pow(n).mul(&c.pow(n)) };
            body.scale(&coeff)
        }
        PsiVariant::BetaNilpotent => {
            let coeff = &minus_q_n * &xi.entry(1, 2).pow(n as i32)?;
            c.pow(2 * n).scale(&coeff)
        }
    })
}

pub fn psi_power_check(xi: &Point, n: usize, variant: PsiVariant) -> Result<bool> {
    Ok(psi_power(xi, n, variant)? == psi_closed_form(xi, n, variant)?)
}

/// Weight of a source monomial under `(id ⊗ π_D) ∘ β`: `coldeg - rowdeg`.
pub fn source_weight(m: &Monomial) -> Vec<i32> {
    m.coldeg().iter().zip(m.rowdeg()).map(|(c, r)| c - r).collect()
}

/// Weight of `m det^-d` under `(id ⊗ π_D) ∘ Δ`: `coldeg - d`.
pub fn target_weight(m: &Monomial, d: u32) -> Vec<i32> {
    m.coldeg().iter().map(|c| c - d as i32).collect()
}

/// One weight block of the truncated co-orbit map.
#[derive(Clone, Debug)]
pub struct Block {
    pub weight: Vec<i32>,
    /// Indices into `monomial_basis(N, d)`.
    pub sources: Vec<usize>,
    /// Target numerator monomials over `det_q^d`.
    pub targets: Vec<Monomial>,
    /// One row per source: coordinates of its image over `targets`.
    pub rows: Vec<Vec<Scalar>>,
}

/// The co-orbit map on `span(monomial_basis(N, d))`, with every image
/// rewritten over `det_q^d` and split into weight blocks.
#[derive(Clone, Debug)]
pub struct CoorbitMatrix {
    pub n: usize,
    pub degree: usize,
    pub sources: Vec<Monomial>,
    pub blocks: Vec<Block>,
}

pub fn coorbit_matrix(xi: &Point, which: Coaction, d: usize) -> Result<CoorbitMatrix> {
    let n = xi.size();
    let sources = monomial_basis(n, d);
    let images: Vec<MqElement> = sources
        .par_iter()
        .map(|m| coorbit_monomial(xi, m, which).numerator_at(d as u32))
        .collect();
    // ev_ξ respects the grading only for diagonal ξ
    let graded = xi.is_diagonal();
    let mut by_weight: BTreeMap<Vec<i32>, Vec<usize>> = BTreeMap::new();
    for (i, m) in sources.iter().enumerate() {
        let w = if graded { source_weight(m) } else { Vec::new() };
        by_weight.entry(w).or_default().push(i);
    }
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut blocks = Vec::new();
    for (weight, idx) in by_weight {
        let mut targets: BTreeSet<Monomial> = BTreeSet::new();
        for &i in &idx {
            for t in images[i].terms().keys() {
                if graded && target_weight(t, d as u32) != weight {
                    return Err(Error::Internal(format!(
                        "image of {} is not homogeneous of weight {:?}",
                        sources[i], weight
                    )));
                }
                targets.insert(t.clone());
            }
        }
        if targets.iter().any(|t| seen.contains(t)) {
            return Err(Error::Internal("weight blocks share target coordinates".into()));
        }
        seen.extend(targets.iter().cloned());
        let targets: Vec<Monomial> = targets.into_iter().collect();
        let rows = idx.iter().map(|&i| targets.iter().map(|t| images[i].coefficient(t)).collect()).collect();
        blocks.push(Block { weight, sources: idx, targets, rows });
    }
    Ok(CoorbitMatrix { n, degree: d, sources, blocks })
}

/// Kernel of the co-orbit map restricted to `span(monomial_basis(N, d))`.
pub fn kernel_basis(xi: &Point, which: Coaction, d: usize) -> Result<TruncatedSubspace> {
    let cm = coorbit_matrix(xi, which, d)?;
    let dim = cm.sources.len();
    let kernels: Vec<Vec<Vec<Scalar>>> = cm
        .blocks
        .par_iter()
        .map(|b| -> Result<Vec<Vec<Scalar>>> {
            // columns are sources
            let m = Matrix::from_rows(b.targets.len(), b.rows.clone())?.transpose();
            Ok(m.kernel()
                .into_iter()
                .map(|k| {
                    let mut v = vec![Scalar::zero(); dim];
                    for (c, &src) in k.into_iter().zip(&b.sources) {
                        v[src] = c;
                    }
                    v
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    TruncatedSubspace::new(Ambient::Mq { n: cm.n }, d, cm.sources, kernels.concat())
}

/// Truncation of the ideal generated by the basic coinvariants minus their
/// values at ξ: the right ideal of `τ_i - τ_i(ξ)` for beta, the left ideal
/// of `σ_i - σ_i(ξ)` for alpha.
pub fn ideal_truncation(xi: &Point, which: Coaction, d: usize) -> Result<TruncatedSubspace> {
    let n = xi.size();
    let mut gens = Vec::new();
    for i in 1..=n.min(d) {
        let f = match which {
            Coaction::Beta => tau(i, n)?,
            Coaction::Alpha => sigma(i, n)?,
        };
        let c = evaluate(xi, &f)?;
        let g = &f - &MqElement::constant(n, c);
        for m in monomial_basis(n, d - i) {
            let m = MqElement::from_monomial(m);
            gens.push(LegValue::Mq(match which {
                Coaction::Beta => &g * &m,
                Coaction::Alpha => &m * &g,
            }));
        }
    }
    TruncatedSubspace::from_elements_in(Ambient::Mq { n }, d, monomial_basis(n, d), &gens)
}

/// The image of the truncated co-orbit map and its character.
#[derive(Clone, Debug)]
pub struct ImageData {
    pub space: TruncatedSubspace,
    /// Character in `t_1..t_N` under `(id ⊗ π_D) ∘ Δ`.
    pub character: Character,
}

pub fn image_data(xi: &Point, which: Coaction, d: usize) -> Result<ImageData> {
    let cm = coorbit_matrix(xi, which, d)?;
    let n = cm.n;
    // the image is a subcomodule, so it splits along target weights and each
    // weight piece is the projection onto that weight's coordinates
    let mut pieces: BTreeMap<Vec<i32>, Vec<(usize, usize)>> = BTreeMap::new();
    for (bi, b) in cm.blocks.iter().enumerate() {
        for (k, t) in b.targets.iter().enumerate() {
            pieces.entry(target_weight(t, d as u32)).or_default().push((bi, k));
        }
    }
    let echelons: Vec<(Vec<i32>, Vec<Monomial>, Vec<Vec<Scalar>>)> = pieces
        .into_par_iter()
        .map(|(w, cols)| -> Result<_> {
            let targets: Vec<Monomial> = cols.iter().map(|&(bi, k)| cm.blocks[bi].targets[k].clone()).collect();
            let blocks: BTreeSet<usize> = cols.iter().map(|&(bi, _)| bi).collect();
            let mut rows = Vec::new();
            for bi in blocks {
                for r in &cm.blocks[bi].rows {
                    rows.push(
                        cols.iter().map(|&(bj, k)| if bj == bi { r[k].clone() } else { Scalar::zero() }).collect(),
                    );
                }
            }
            Ok((w, targets.clone(), xla::span_basis(targets.len(), rows)?))
        })
        .collect::<Result<_>>()?;
    let mut character = Character::zero(DiagVars::T(n));
    let basis: Vec<Monomial> = echelons.iter().flat_map(|(_, t, _)| t.iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut vectors = Vec::new();
    for (weight, targets, rows) in &echelons {
        character.add_term(weight.clone(), rows.len() as i64);
        for r in rows {
            let mut v = vec![Scalar::zero(); basis.len()];
            for (t, c) in targets.iter().zip(r) {
                v[index[t]] = c.clone();
            }
            vectors.push(v);
        }
    }
    let space = TruncatedSubspace::new(Ambient::Glq { n, detpow: d as u32 }, d, basis, vectors)?;
    if !xi.is_diagonal() {
        let total: Vec<Vec<Scalar>> = cm.blocks.iter().flat_map(|b| b.rows.iter().cloned()).collect();
        let whole = TruncatedSubspace::from_elements_in(
            Ambient::Glq { n, detpow: d as u32 },
            d,
            space.basis().to_vec(),
            &total_elements(&cm, &total),
        )?;
        if whole.dim() != space.dim() {
            return Err(Error::Internal("image does not split along weights".into()));
        }
    }
    Ok(ImageData { space, character })
}

fn total_elements(cm: &CoorbitMatrix, rows: &[Vec<Scalar>]) -> Vec<LegValue> {
    let b = &cm.blocks[0];
    rows.iter()
        .map(|r| {
            let num = MqElement::from_terms(cm.n, b.targets.iter().cloned().zip(r.iter().cloned()).filter(|(_, c)| !c.is_zero()));
            LegValue::Glq(GlqElement::new(num, cm.degree as u32))
        })
        .collect()
}

/// The image of `π ∘ (co-orbit map)` on `span(monomial_basis(2, d))` inside
/// O(SL_q).
pub fn image_sl(xi: &Point, which: Coaction, d: usize) -> Result<TruncatedSubspace> {
    if xi.size() != 2 {
        return Err(Error::Unsupported("O(SL_q) is implemented for N = 2 only".into()));
    }
    let elements: Vec<LegValue> = monomial_basis(2, d)
        .iter()
        .map(|m| Ok(LegValue::Slq(SlqElement::from_glq(&coorbit_monomial(xi, m, which))?)))
        .collect::<Result<_>>()?;
    TruncatedSubspace::from_elements(Ambient::Slq, d, &elements)
}

/// `L^d`: the span of `det_q^-d x^a` over exponent matrices `a` whose row
/// sums all equal `d`.
pub fn diag_coinv_truncation(n: usize, d: usize) -> TruncatedSubspace {
    let basis: Vec<Monomial> =
        crate::mq::monomials_of_degree(n, n * d).into_iter().filter(|m| m.rowdeg().iter().all(|&r| r == d as i32)).collect();
    let k = basis.len();
    let vectors = (0..k)
        .map(|i| (0..k).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    TruncatedSubspace::from_echelon(Ambient::Glq { n, detpow: d as u32 }, d, basis, vectors)
}

/// The three generators of the quantum 2-sphere, rescaled to
/// `ac`, `1 + (q + q^-1) bc`, `db`.
pub fn sphere_generators() -> [SlqElement; 3] {
    let g = |c| SlqElement::generator(c).unwrap();
    let qq = &Scalar::q() + &Scalar::q_pow(-1);
    [g('a').mul(&g('c')), SlqElement::one().add(&g('b').mul(&g('c')).scale(&qq)), g('d').mul(&g('b'))]
}

/// `W^n`: the span of products of at most `n` sphere generators.
pub fn sphere_span(n: usize) -> Result<TruncatedSubspace> {
    let gens = sphere_generators();
    let mut layer = vec![SlqElement::one()];
    let mut all = layer.clone();
    for _ in 0..n {
        let next: Vec<SlqElement> = layer.iter().flat_map(|w| gens.iter().map(move |g| w.mul(g))).collect();
        all.extend(next.iter().cloned());
        layer = next;
    }
    let elements: Vec<LegValue> = all.into_iter().map(LegValue::Slq).collect();
    TruncatedSubspace::from_elements(Ambient::Slq, n, &elements)
}

/// The right subcomodule generated by `f`: the span of the first-leg
/// coefficients of `β(f)` (or `α(f)`) against the second-leg basis.
pub fn comodule_span(f: &MqElement, which: Coaction) -> Result<Vec<MqElement>> {
    let n = f.size();
    let t = coaction(f, which);
    let mut by_second: BTreeMap<Key, MqElement> = BTreeMap::new();
    for (keys, c) in t.terms() {
        let Key::Mono(m) = &keys[0] else { return Err(Error::Internal("first leg is not O(M_q)".into())) };
        by_second.entry(keys[1].clone()).or_insert_with(|| MqElement::zero(n)).add_term(m.clone(), c);
    }
    Ok(by_second.into_values().filter(|e| !e.is_zero()).collect())
}

/// For `ξ = diag(q^(2m) s, s)`: the truncated ideal plus the comodules
/// generated by `x21^k`, `m < k <= d`, inside `span(monomial_basis(2, d))`.
pub fn resonant_kernel_candidate(xi: &Point, m: usize, d: usize) -> Result<TruncatedSubspace> {
    let ideal = ideal_truncation(xi, Coaction::Beta, d)?;
    let mut elements = Vec::new();
    for k in m + 1..=d {
        let x21k = MqElement::from_monomial(Monomial::from_exponents(2, &[0, 0, k as u16, 0]));
        elements.extend(comodule_span(&x21k, Coaction::Beta)?.into_iter().map(LegValue::Mq));
    }
    if elements.is_empty() {
        return Ok(ideal);
    }
    let extra = TruncatedSubspace::from_elements_in(Ambient::Mq { n: 2 }, d, monomial_basis(2, d), &elements)?;
    ideal.sum(&extra)
}

/// The β-grading weight of a basis element of a [`TruncatedSubspace`].
pub fn ambient_weight(ambient: Ambient, m: &Monomial) -> Vec<i32> {
    match ambient {
        Ambient::Mq { .. } => source_weight(m),
        Ambient::Glq { detpow, .. } => target_weight(m, detpow),
        Ambient::Slq => vec![SlqElement::z_weight(m)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::is_diag_coinvariant;
    use crate::mq::det_q;
    use crate::parse::parse_mq;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn diag23() -> Point {
        Point::diagonal(&[s("2"), s("3")]).unwrap()
    }

    #[test]
    fn fast_recursion_matches_literal_composite() {
        let xi = diag23();
        let nil = Point::nilpotent(s("1")).unwrap();
        for which in [Coaction::Beta, Coaction::Alpha] {
            for f in ["x21", "x11*x22", "x12*x21 + q*x11", "x21^2", "x11*x12*x22"] {
                let f = parse_mq(f, 2).unwrap();
                for p in [&xi, &nil] {
                    assert_eq!(coorbit(p, &f, which).unwrap(), coorbit_literal(p, &f, which).unwrap());
                }
            }
        }
        let xi3 = Point::diagonal(&[s("2"), s("3"), s("5")]).unwrap();
        for f in ["x12", "x31*x13", "x23*x11"] {
            let f = parse_mq(f, 3).unwrap();
            for which in [Coaction::Beta, Coaction::Alpha] {
                assert_eq!(coorbit(&xi3, &f, which).unwrap(), coorbit_literal(&xi3, &f, which).unwrap());
            }
        }
    }

    #[test]
    fn coorbit_of_coinvariants_is_constant() {
        let xi = diag23();
        for i in 1..=2 {
            let t = tau(i, 2).unwrap();
            let expected = GlqElement::from_mq(MqElement::constant(2, evaluate(&xi, &t).unwrap()));
            assert_eq!(coorbit(&xi, &t, Coaction::Beta).unwrap(), expected);
        }
        assert_eq!(coorbit(&xi, &MqElement::one(2), Coaction::Beta).unwrap(), GlqElement::one(2));
        let det = det_q(2);
        assert_eq!(
            coorbit(&xi, &det, Coaction::Alpha).unwrap(),
            GlqElement::from_mq(MqElement::constant(2, s("6")))
        );
    }

    #[test]
    fn psi_of_x21_by_hand() {
        // -q ξ1 c a + ξ2 a c with ξ = diag(2, 3)
        let xi = diag23();
        let psi = psi_power(&xi, 1, PsiVariant::BetaDiag).unwrap();
        let a = SlqElement::generator('a').unwrap();
        let c = SlqElement::generator('c').unwrap();
        let expected = c.mul(&a).scale(&(&s("-2") * &Scalar::q())).add(&a.mul(&c).scale(&s("3")));
        assert_eq!(psi, expected);
        // -q(ξ1 - ξ2) c a
        assert_eq!(psi, c.mul(&a).scale(&(&s("-q") * &s("-1"))));
    }

    #[test]
    fn closed_forms_small_n() {
        let xi = diag23();
        for n in 0..=3 {
            assert!(psi_power_check(&xi, n, PsiVariant::BetaDiag).unwrap());
            assert!(psi_power_check(&xi, n, PsiVariant::AlphaDiag).unwrap());
        }
        let nil = Point::nilpotent(s("1")).unwrap();
        let c = SlqElement::generator('c').unwrap();
        assert_eq!(psi_power(&nil, 2, PsiVariant::BetaNilpotent).unwrap(), c.pow(4).scale(&s("q^2")));
        assert!(psi_power_check(&Point::diagonal(&[s("1"), s("1")]).unwrap(), 1, PsiVariant::BetaDiag).unwrap());
        assert!(psi_power(&Point::diagonal(&[s("1"), s("1")]).unwrap(), 1, PsiVariant::BetaDiag).unwrap().is_zero());
        assert!(psi_power_check(&nil, 1, PsiVariant::BetaDiag).is_err());
    }

    #[test]
    fn resonant_point_kills_x21_squared_not_x21() {
        let xi = Point::diagonal(&[s("q^2"), s("1")]).unwrap();
        assert!(!psi_power(&xi, 1, PsiVariant::BetaDiag).unwrap().is_zero());
        assert!(psi_power(&xi, 2, PsiVariant::BetaDiag).unwrap().is_zero());
    }

    #[test]
    fn generic_kernel_dimensions() {
        let xi = diag23();
        assert_eq!(kernel_basis(&xi, Coaction::Beta, 0).unwrap().dim(), 0);
        let k1 = kernel_basis(&xi, Coaction::Beta, 1).unwrap();
        assert_eq!(k1.dim(), 1);
        let t1 = &tau(1, 2).unwrap() - &MqElement::constant(2, evaluate(&xi, &tau(1, 2).unwrap()).unwrap());
        assert!(k1.contains_element(&LegValue::Mq(t1)).unwrap());
        let k2 = kernel_basis(&xi, Coaction::Beta, 2).unwrap();
        assert_eq!(k2.dim(), 6);
        assert!(k2.equals(&ideal_truncation(&xi, Coaction::Beta, 2).unwrap()).unwrap());
    }

    #[test]
    fn ideal_truncation_examples() {
        assert_eq!(ideal_truncation(&Point::zero(2), Coaction::Beta, 1).unwrap().dim(), 1);
        assert_eq!(ideal_truncation(&diag23(), Coaction::Beta, 2).unwrap().dim(), 6);
        assert_eq!(ideal_truncation(&diag23(), Coaction::Alpha, 2).unwrap().dim(), 6);
    }

    #[test]
    fn image_examples() {
        let xi = diag23();
        let im0 = image_data(&xi, Coaction::Beta, 0).unwrap();
        assert_eq!(im0.space.dim(), 1);
        assert_eq!(im0.character, Character::one(DiagVars::T(2)));
        let im2 = image_data(&xi, Coaction::Beta, 2).unwrap();
        assert_eq!(im2.space.dim(), 9);
        assert!(diag_coinv_truncation(2, 2).contains(&im2.space).unwrap());
    }

    #[test]
    fn images_are_diagonal_coinvariants() {
        let xi = diag23();
        for m in monomial_basis(2, 2) {
            assert!(is_diag_coinvariant(&coorbit(&xi, &MqElement::from_monomial(m), Coaction::Beta).unwrap()));
        }
    }

    #[test]
    fn diagonal_coinvariant_counts() {
        assert_eq!(diag_coinv_truncation(2, 1).dim(), 4);
        assert_eq!(diag_coinv_truncation(2, 0).dim(), 1);
        assert_eq!(diag_coinv_truncation(2, 3).dim(), 16);
        for e in diag_coinv_truncation(2, 2).elements() {
            let LegValue::Glq(g) = e else { panic!() };
            assert!(is_diag_coinvariant(&g));
        }
    }

    #[test]
    fn sphere_dimensions() {
        for r in 0..=3 {
            assert_eq!(sphere_span(r).unwrap().dim(), (r + 1) * (r + 1));
        }
    }

    #[test]
    fn resonant_kernel_is_larger_than_ideal() {
        let xi = Point::diagonal(&[s("q^2"), s("1")]).unwrap();
        let k = kernel_basis(&xi, Coaction::Beta, 2).unwrap();
        let i = ideal_truncation(&xi, Coaction::Beta, 2).unwrap();
        assert!(k.contains(&i).unwrap());
        assert!(k.dim() > i.dim());
    }
}
