use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::diag::{DiagElement, DiagVars};
use super::glq::GlqElement;
use super::slq::{reduce_monomial, SlqElement};
use crate::error::{Error, Result};
use crate::mq::{det_q_pow, mul_monomials, Monomial, MqElement};
use crate::scalars::Scalar;

/// The algebra a tensor leg lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    Mq,
    Glq,
    Slq,
    /// O(D), Laurent polynomials in `t_1..t_N`.
    Diag,
    /// O(K), Laurent polynomials in `z`.
    K,
}

/// A basis element of one leg.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Key {
    Mono(Monomial),
    Exps(Vec<i32>),
}

/// A single-leg value, used to build and inspect tensors.
#[derive(Clone, Debug, PartialEq)]
pub enum LegValue {
    Mq(MqElement),
    Glq(GlqElement),
    Slq(SlqElement),
    Diag(DiagElement),
}

impl LegValue {
    pub fn algebra(&self) -> Algebra {
        match self {
            LegValue::Mq(_) => Algebra::Mq,
            LegValue::Glq(_) => Algebra::Glq,
            LegValue::Slq(_) => Algebra::Slq,
            LegValue::Diag(d) => match d.vars() {
                DiagVars::Z => Algebra::K,
                DiagVars::T(_) => Algebra::Diag,
            },
        }
    }

    fn detpow(&self) -> u32 {
        match self {
            LegValue::Glq(g) => g.detpow(),
            _ => 0,
        }
    }

    fn expand(&self, detpow: u32) -> Vec<(Key, Scalar)> {
        match self {
            LegValue::Mq(m) => m.terms().iter().map(|(k, c)| (Key::Mono(k.clone()), c.clone())).collect(),
            LegValue::Glq(g) => {
                g.numerator_at(detpow).terms().iter().map(|(k, c)| (Key::Mono(k.clone()), c.clone())).collect()
            }
            LegValue::Slq(s) => s.terms().iter().map(|(k, c)| (Key::Mono(k.clone()), c.clone())).collect(),
            LegValue::Diag(d) => d.terms().iter().map(|(k, c)| (Key::Exps(k.clone()), c.clone())).collect(),
        }
    }

    pub fn as_glq(&self) -> Option<GlqElement> {
        match self {
            LegValue::Mq(m) => Some(GlqElement::from_mq(m.clone())),
            LegValue::Glq(g) => Some(g.clone()),
            _ => None,
        }
    }
}

/// A finite sum of pure tensors. Every O(GL_q) leg carries one common det
/// power, so leg `i` of a term is `key_i * det_q^(-detpows[i])`.
#[derive(Clone)]
pub struct TensorElement {
    n: usize,
    algebras: Vec<Algebra>,
    detpows: Vec<u32>,
    terms: BTreeMap<Vec<Key>, Scalar>,
}

fn product_algebra(a: Algebra, b: Algebra) -> Result<Algebra> {
    use Algebra::*;
    Ok(match (a, b) {
        (Mq, Mq) => Mq,
        (Mq | Glq, Mq | Glq) => Glq,
        (Slq, Slq) => Slq,
        (Diag, Diag) => Diag,
        (K, K) => K,
        _ => return Err(Error::LegMismatch(format!("cannot multiply {:?} by {:?}", a, b))),
    })
}

fn mul_keys(alg: Algebra, a: &Key, b: &Key) -> Vec<(Key, Scalar)> {
    match (a, b) {
        (Key::Mono(x), Key::Mono(y)) => {
            let prod = mul_monomials(x, y);
            if alg == Algebra::Slq {
                let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
                for (m, c) in prod.iter() {
                    for (r, d) in reduce_monomial(m).iter() {
                        let e = acc.entry(r.clone()).or_insert_with(Scalar::zero);
                        *e += &(c * d);
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (Key::Mono(m), c)).collect()
            } else {
                prod.iter().map(|(m, c)| (Key::Mono(m.clone()), c.clone())).collect()
            }
        }
        (Key::Exps(x), Key::Exps(y)) => vec![(Key::Exps(x.iter().zip(y).map(|(p, r)| p + r).collect()), Scalar::one())],
        _ => panic!("mixed key kinds in one leg"),
    }
}

fn add_into(terms: &mut BTreeMap<Vec<Key>, Scalar>, keys: Vec<Key>, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(keys) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl TensorElement {
    pub fn zero(n: usize, algebras: Vec<Algebra>) -> Self {
        let detpows = vec![0; algebras.len()];
        TensorElement { n, algebras, detpows, terms: BTreeMap::new() }
    }

    /// The pure tensor `v_1 ⊗ ... ⊗ v_k`.
    pub fn pure(n: usize, legs: Vec<LegValue>) -> Self {
        let algebras: Vec<Algebra> = legs.iter().map(|l| l.algebra()).collect();
        let detpows: Vec<u32> = legs.iter().map(|l| l.detpow()).collect();
        let mut terms: Vec<(Vec<Key>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for (leg, &dp) in legs.iter().zip(&detpows) {
            let expanded = leg.expand(dp);
            let mut next = Vec::with_capacity(terms.len() * expanded.len());
            for (keys, c) in &terms {
                for (k, a) in &expanded {
                    let mut ks = keys.clone();
                    ks.push(k.clone());
                    next.push((ks, c * a));
                }
            }
            terms = next;
        }
        let mut out = TensorElement { n, algebras, detpows, terms: BTreeMap::new() };
        for (k, c) in terms {
            add_into(&mut out.terms, k, &c);
        }
        out
    }

    pub(crate) fn from_raw(
        n: usize,
        algebras: Vec<Algebra>,
        detpows: Vec<u32>,
        terms: impl IntoIterator<Item = (Vec<Key>, Scalar)>,
    ) -> Self {
        let mut out = TensorElement { n, algebras, detpows, terms: BTreeMap::new() };
        for (k, c) in terms {
            add_into(&mut out.terms, k, &c);
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn algebras(&self) -> &[Algebra] {
        &self.algebras
    }

    pub fn detpows(&self) -> &[u32] {
        &self.detpows
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Key>, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rewrite leg `leg` over `det_q^(-d)`; `d` must not be below the
    /// current power.
    pub fn raise_detpow(&mut self, leg: usize, d: u32) {
        let cur = self.detpows[leg];
        if d <= cur {
            return;
        }
        debug_assert!(matches!(self.algebras[leg], Algebra::Glq));
        let det = det_q_pow(self.n, (d - cur) as usize);
        let mut terms = BTreeMap::new();
        for (keys, c) in std::mem::take(&mut self.terms) {
            let Key::Mono(m) = &keys[leg] else { unreachable!("GL legs hold monomials") };
            for (dm, dc) in det.terms() {
                for (p, pc) in mul_monomials(m, dm).iter() {
                    let mut ks = keys.clone();
                    ks[leg] = Key::Mono(p.clone());
                    add_into(&mut terms, ks, &(&c * &(dc * pc)));
                }
            }
        }
        self.terms = terms;
        self.detpows[leg] = d;
    }

    fn check_compatible(&self, other: &TensorElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, found: other.n });
        }
        if self.algebras != other.algebras {
            return Err(Error::LegMismatch(format!("{:?} vs {:?}", self.algebras, other.algebras)));
        }
        Ok(())
    }

    /// `self += c * other`, aligning det powers leg by leg.
    pub fn add_scaled(&mut self, c: &Scalar, other: &TensorElement) -> Result<()> {
        self.check_compatible(other)?;
        if c.is_zero() || other.is_zero() {
            return Ok(());
        }
        let mut other = std::borrow::Cow::Borrowed(other);
        for leg in 0..self.algebras.len() {
            let (a, b) = (self.detpows[leg], other.detpows[leg]);
            if b > a {
                self.raise_detpow(leg, b);
            } else if a > b {
                other.to_mut().raise_detpow(leg, a);
            }
        }
        for (k, a) in other.terms.iter() {
            if c.is_one() {
                add_into(&mut self.terms, k.clone(), a);
            } else {
                add_into(&mut self.terms, k.clone(), &(a * c));
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other)?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement { terms: BTreeMap::new(), ..self.clone() };
        for (k, a) in &self.terms {
            add_into(&mut out.terms, k.clone(), &(a * c));
        }
        out
    }

    /// The value of one leg of a basis tensor.
    pub fn leg_value(&self, leg: usize, key: &Key) -> LegValue {
        let n = self.n;
        match (self.algebras[leg], key) {
            (Algebra::Mq, Key::Mono(m)) => LegValue::Mq(MqElement::from_monomial(m.clone())),
            (Algebra::Glq, Key::Mono(m)) => {
                LegValue::Glq(GlqElement::new(MqElement::from_monomial(m.clone()), self.detpows[leg]))
            }
            (Algebra::Slq, Key::Mono(m)) => LegValue::Slq(SlqElement::from_terms([(m.clone(), Scalar::one())])),
            (Algebra::Diag, Key::Exps(e)) => LegValue::Diag(DiagElement::monomial(DiagVars::T(n), e.clone(), Scalar::one())),
            (Algebra::K, Key::Exps(e)) => LegValue::Diag(DiagElement::monomial(DiagVars::Z, e.clone(), Scalar::one())),
            (alg, key) => panic!("key {:?} does not belong to {:?}", key, alg),
        }
    }

    /// Replace leg `leg` by the tensor `f(value)`, whose legs are `inner`.
    pub fn flat_map_leg(
        &self,
        leg: usize,
        inner: &[Algebra],
        mut f: impl FnMut(&LegValue) -> Result<TensorElement>,
    ) -> Result<TensorElement> {
        let mut algebras = self.algebras[..leg].to_vec();
        algebras.extend_from_slice(inner);
        algebras.extend_from_slice(&self.algebras[leg + 1..]);
        let mut out = TensorElement::zero(self.n, algebras);
        let mut cache: HashMap<Key, TensorElement> = HashMap::new();
        // group terms by their leg key so each image is computed once
        let mut grouped: BTreeMap<&Key, Vec<(&Vec<Key>, &Scalar)>> = BTreeMap::new();
        for (keys, c) in &self.terms {
            grouped.entry(&keys[leg]).or_default().push((keys, c));
        }
        for (key, group) in grouped {
            if !cache.contains_key(key) {
                let image = f(&self.leg_value(leg, key))?;
                if image.algebras != inner {
                    return Err(Error::LegMismatch(format!("expected {:?}, got {:?}", inner, image.algebras)));
                }
                cache.insert(key.clone(), image);
            }
            let image = &cache[key];
            let mut detpows = self.detpows[..leg].to_vec();
            detpows.extend_from_slice(&image.detpows);
            detpows.extend_from_slice(&self.detpows[leg + 1..]);
            let mut piece = TensorElement::zero(self.n, out.algebras.clone());
            piece.detpows = detpows;
            for (keys, c) in group {
                for (ik, ic) in &image.terms {
                    let mut ks = keys[..leg].to_vec();
                    ks.extend(ik.iter().cloned());
                    ks.extend(keys[leg + 1..].iter().cloned());
                    add_into(&mut piece.terms, ks, &(c * ic));
                }
            }
            out.add_scaled(&Scalar::one(), &piece)?;
        }
        Ok(out)
    }

    /// Apply a linear map to one leg.
    pub fn map_leg(
        &self,
        leg: usize,
        target: Algebra,
        mut f: impl FnMut(&LegValue) -> Result<LegValue>,
    ) -> Result<TensorElement> {
        let n = self.n;
        self.flat_map_leg(leg, &[target], |v| {
            let image = f(v)?;
            if image.algebra() != target {
                return Err(Error::LegMismatch(format!("expected {:?}, got {:?}", target, image.algebra())));
            }
            Ok(TensorElement::pure(n, vec![image]))
        })
    }

    /// Reorder legs: new leg `i` is old leg `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        assert_eq!(perm.len(), self.algebras.len());
        TensorElement {
            n: self.n,
            algebras: perm.iter().map(|&i| self.algebras[i]).collect(),
            detpows: perm.iter().map(|&i| self.detpows[i]).collect(),
            terms: self.terms.iter().map(|(k, c)| (perm.iter().map(|&i| k[i].clone()).collect(), c.clone())).collect(),
        }
    }

    /// Multiply leg `i` into leg `i + 1`, leaving one fewer leg.
    pub fn multiply_legs(&self, i: usize) -> Result<TensorElement> {
        let alg = product_algebra(self.algebras[i], self.algebras[i + 1])?;
        let mut algebras = self.algebras.clone();
        algebras.splice(i..i + 2, [alg]);
        let mut detpows = self.detpows.clone();
        let dp = detpows[i] + detpows[i + 1];
        detpows.splice(i..i + 2, [dp]);
        let mut out = TensorElement { n: self.n, algebras, detpows, terms: BTreeMap::new() };
        let mut cache: HashMap<(Key, Key), Vec<(Key, Scalar)>> = HashMap::new();
        for (keys, c) in &self.terms {
            let pair = (keys[i].clone(), keys[i + 1].clone());
            let prod = cache.entry(pair).or_insert_with(|| mul_keys(alg, &keys[i], &keys[i + 1]));
            for (k, a) in prod.iter() {
                let mut ks = keys[..i].to_vec();
                ks.push(k.clone());
                ks.extend(keys[i + 2..].iter().cloned());
                add_into(&mut out.terms, ks, &(c * a));
            }
        }
        Ok(out)
    }

    /// Leg-wise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn try_mul(&self, other: &TensorElement) -> Result<TensorElement> {
        self.check_compatible(other)?;
        let detpows: Vec<u32> = self.detpows.iter().zip(&other.detpows).map(|(a, b)| a + b).collect();
        let mut out = TensorElement { n: self.n, algebras: self.algebras.clone(), detpows, terms: BTreeMap::new() };
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut partial: Vec<(Vec<Key>, Scalar)> = vec![(Vec::new(), c1 * c2)];
                for (leg, alg) in self.algebras.iter().enumerate() {
                    let prod = mul_keys(*alg, &k1[leg], &k2[leg]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (ks, c) in &partial {
                        for (k, a) in &prod {
                            let mut ks = ks.clone();
                            ks.push(k.clone());
                            next.push((ks, c * a));
                        }
                    }
                    partial = next;
                }
                for (ks, c) in partial {
                    add_into(&mut out.terms, ks, &c);
                }
            }
        }
        Ok(out)
    }

    /// The element as a sum `Σ leg_0 ⊗ rest` grouped by the first leg.
    pub fn first_leg_groups(&self) -> BTreeMap<Key, Vec<(Vec<Key>, Scalar)>> {
        let mut out: BTreeMap<Key, Vec<(Vec<Key>, Scalar)>> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k[0].clone()).or_default().push((k[1..].to_vec(), c.clone()));
        }
        out
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        if self.check_compatible(other).is_err() {
            return false;
        }
        if self.detpows == other.detpows {
            return self.terms == other.terms;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        for leg in 0..a.algebras.len() {
            let d = a.detpows[leg].max(b.detpows[leg]);
            a.raise_detpow(leg, d);
            b.raise_detpow(leg, d);
        }
        a.terms == b.terms
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (keys, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "({})*", c)?;
            }
            let legs: Vec<String> = keys
                .iter()
                .enumerate()
                .map(|(leg, k)| match self.leg_value(leg, k) {
                    LegValue::Mq(m) => m.to_string(),
                    LegValue::Glq(g) => g.to_string(),
                    LegValue::Slq(s) => s.to_string(),
                    LegValue::Diag(d) => d.to_string(),
                })
                .collect();
            write!(f, "{}", legs.join(" ⊗ "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({})", self)
    }
}
