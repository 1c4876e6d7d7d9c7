use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use super::diag::DiagElement;
use super::glq::GlqElement;
use crate::error::{Error, Result};
use crate::mq::{mul_monomials, MqElement, Monomial};
use crate::scalars::Scalar;

/// An element of O(SL_q(2)) with generators `a = x11, b = x12, c = x21,
/// d = x22`, kept in the basis `{a^i b^j c^k} ∪ {b^l c^m d^n}`.
///
/// Basis monomials reuse [`Monomial`] with exponents `[i, j, k, n]`; a
/// monomial is reduced when `a` and `d` do not both occur.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SlqElement {
    terms: BTreeMap<Monomial, Scalar>,
}

type Terms = Rc<Vec<(Monomial, Scalar)>>;

thread_local! {
    static REDUCE_CACHE: RefCell<HashMap<Monomial, Terms>> = RefCell::new(HashMap::new());
}

fn is_reduced(m: &Monomial) -> bool {
    let e = m.exponents();
    e[0] == 0 || e[3] == 0
}

/// Rewrite an ordered `a^i b^j c^k d^n` with `i, n > 0` using
/// `a b^j c^k d = q^(j+k) (b^j c^k + q b^(j+1) c^(k+1))`, which follows from
/// `ad = 1 + q bc` modulo `det_q = 1`.
pub(crate) fn reduce_monomial(m: &Monomial) -> Terms {
    if is_reduced(m) {
        return Rc::new(vec![(m.clone(), Scalar::one())]);
    }
    if let Some(hit) = REDUCE_CACHE.with(|c| c.borrow().get(m).cloned()) {
        return hit;
    }
    let e = m.exponents();
    let (i, j, k, n) = (e[0], e[1], e[2], e[3]);
    let lead = Scalar::q_pow((j + k) as i32);
    let first = Monomial::from_exponents(2, &[i - 1, j, k, n - 1]);
    let second = Monomial::from_exponents(2, &[i - 1, j + 1, k + 1, n - 1]);
    let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (mono, coeff) in [(first, lead.clone()), (second, &lead * &Scalar::q())] {
        for (r, c) in reduce_monomial(&mono).iter() {
            add_into(&mut acc, r.clone(), &(c * &coeff));
        }
    }
    let result: Terms = Rc::new(acc.into_iter().collect());
    REDUCE_CACHE.with(|c| c.borrow_mut().insert(m.clone(), result.clone()));
    result
}

fn add_into(acc: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
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

fn sl_name(g: usize) -> String {
    ["a", "b", "c", "d"][g].to_string()
}

impl SlqElement {
    pub fn zero() -> Self {
        SlqElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SlqElement::from_mq(&MqElement::one(2)).expect("N = 2")
    }

    /// Generators by name: `a`, `b`, `c`, `d`.
    pub fn generator(name: char) -> Result<Self> {
        let (i, j) = match name {
            'a' => (1, 1),
            'b' => (1, 2),
            'c' => (2, 1),
            'd' => (2, 2),
            _ => return Err(Error::Parse(format!("unknown O(SL_q) generator '{}'", name))),
        };
        SlqElement::from_mq(&MqElement::generator(2, i, j)?)
    }

    /// The image of an O(M_q) element under the quotient map.
    pub fn from_mq(x: &MqElement) -> Result<Self> {
        if x.size() != 2 {
            return Err(Error::Unsupported("O(SL_q) is implemented for N = 2 only".into()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in x.terms() {
            for (r, a) in reduce_monomial(m).iter() {
                add_into(&mut terms, r.clone(), &(a * c));
            }
        }
        Ok(SlqElement { terms })
    }

    /// `pi`: O(GL_q) -> O(SL_q), sending det_q^(-1) to 1.
    pub fn from_glq(x: &GlqElement) -> Result<Self> {
        SlqElement::from_mq(x.numerator())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut out = SlqElement::zero();
        for (m, c) in terms {
            for (r, a) in reduce_monomial(&m).iter() {
                add_into(&mut out.terms, r.clone(), &(a * &c));
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> SlqElement {
        if c.is_zero() {
            return SlqElement::zero();
        }
        SlqElement { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn add(&self, other: &SlqElement) -> SlqElement {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), c);
        }
        SlqElement { terms }
    }

    pub fn sub(&self, other: &SlqElement) -> SlqElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn mul(&self, other: &SlqElement) -> SlqElement {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, a) in mul_monomials(m1, m2).iter() {
                    let ca = a * &c;
                    for (r, b) in reduce_monomial(m).iter() {
                        add_into(&mut terms, r.clone(), &(b * &ca));
                    }
                }
            }
        }
        SlqElement { terms }
    }

    pub fn pow(&self, k: usize) -> SlqElement {
        (0..k).fold(SlqElement::one(), |acc, _| acc.mul(self))
    }

    /// The antipode: `S(a) = d, S(b) = -q^-1 b, S(c) = -q c, S(d) = a`,
    /// extended as an anti-homomorphism.
    pub fn antipode(&self) -> SlqElement {
        let images = [
            SlqElement::generator('d').unwrap(),
            SlqElement::generator('b').unwrap().scale(&-Scalar::q_pow(-1)),
            SlqElement::generator('c').unwrap().scale(&-Scalar::q()),
            SlqElement::generator('a').unwrap(),
        ];
        let mut out = SlqElement::zero();
        for (m, c) in &self.terms {
            let mut acc = SlqElement::one();
            for g in m.word().into_iter().rev() {
                acc = acc.mul(&images[g]);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// `pi_K`: a -> z, d -> z^-1, b, c -> 0.
    pub fn project_k(&self) -> DiagElement {
        let mut out = DiagElement::zero_z();
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e[1] == 0 && e[2] == 0 {
                out.add_term(vec![e[0] as i32 - e[3] as i32], c);
            }
        }
        out
    }

    /// Weight under the right O(K)-grading: `a, c -> +1`, `b, d -> -1`.
    pub fn z_weight(m: &Monomial) -> i32 {
        let c = m.coldeg();
        c[0] - c[1]
    }
}

impl fmt::Display for SlqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_mq = MqElement::from_terms(2, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())));
        as_mq.fmt_with(f, &sl_name)
    }
}

impl fmt::Debug for SlqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SlqElement({})", self)
    }
}
