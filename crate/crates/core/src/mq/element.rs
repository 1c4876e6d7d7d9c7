use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::monomial::{gen_index, gen_pos, Monomial};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// An element of O(M_q) in normal form: a linear combination of ordered
/// monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MqElement {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Row and column degrees of a multihomogeneous element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    pub rowdeg: Vec<i32>,
    pub coldeg: Vec<i32>,
}

impl MultiDegree {
    pub fn of(m: &Monomial) -> Self {
        MultiDegree { rowdeg: m.rowdeg(), coldeg: m.coldeg() }
    }

    pub fn degree(&self) -> i32 {
        self.rowdeg.iter().sum()
    }
}

impl MqElement {
    pub fn zero(n: usize) -> Self {
        MqElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        MqElement::constant(n, Scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        MqElement::term(Monomial::one(n), c)
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let n = m.size();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MqElement { n, terms }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        MqElement::term(m, Scalar::one())
    }

    /// The generator `x_ij`, 1-based.
    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self> {
        check_index(n, i)?;
        check_index(n, j)?;
        Ok(MqElement::from_monomial(Monomial::generator(n, i, j)))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut e = MqElement::zero(n);
        for (m, c) in terms {
            e.add_term(m, &c);
        }
        e
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant coefficient, when the element is a scalar multiple of 1.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        debug_assert_eq!(m.size(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &MqElement) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            if c.is_one() {
                self.add_term(m.clone(), a);
            } else {
                self.add_term(m.clone(), &(a * c));
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> MqElement {
        if c.is_zero() {
            return MqElement::zero(self.n);
        }
        MqElement { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn try_add(&self, other: &MqElement) -> Result<MqElement> {
        check_size(self.n, other.n)?;
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        Ok(out)
    }

    pub fn try_mul(&self, other: &MqElement) -> Result<MqElement> {
        check_size(self.n, other.n)?;
        let mut out = MqElement::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, a) in mul_monomials(m1, m2).iter() {
                    out.add_term(m.clone(), &(a * &c));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> MqElement {
        let mut acc = MqElement::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The common multidegree of all terms.
    pub fn multidegree(&self) -> Result<MultiDegree> {
        let mut it = self.terms.keys().map(MultiDegree::of);
        let first = it.next().ok_or(Error::ZeroElement)?;
        if it.all(|d| d == first) {
            Ok(first)
        } else {
            Err(Error::NotMultihomogeneous)
        }
    }

    /// Apply a map on monomials, extended linearly.
    pub fn map_terms(&self, n: usize, mut f: impl FnMut(&Monomial) -> MqElement) -> MqElement {
        let mut out = MqElement::zero(n);
        for (m, c) in &self.terms {
            out.add_scaled(c, &f(m));
        }
        out
    }

    /// Render with custom generator names; used for the a, b, c, d picture.
    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, name: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, text),
            };
            if k > 0 {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let coeff_is_one = body == "1";
            if m.is_one() {
                write!(f, "{}", wrap_coefficient(&body))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", wrap_coefficient(&body))?;
                }
                m.fmt_with(f, name)?;
            }
        }
        Ok(())
    }
}

fn wrap_coefficient(text: &str) -> String {
    if text.contains([' ', '/', '*', '^']) {
        format!("({})", text)
    } else {
        text.to_string()
    }
}

pub(crate) fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange(format!("{} not in 1..={}", i, n)))
    } else {
        Ok(())
    }
}

pub(crate) fn check_size(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        Err(Error::SizeMismatch { expected, found })
    } else {
        Ok(())
    }
}

/// The normal form of `prefactor * x_{i1 j1} ... x_{ik jk}` (1-based).
pub fn normal_form(n: usize, word: &[(usize, usize)], prefactor: &Scalar) -> Result<MqElement> {
    let mut acc = MqElement::constant(n, prefactor.clone());
    for &(i, j) in word {
        check_index(n, i)?;
        check_index(n, j)?;
        acc = mul_by_gen(&acc, gen_index(n, i, j));
    }
    Ok(acc)
}

fn mul_by_gen(e: &MqElement, g: usize) -> MqElement {
    let mut out = MqElement::zero(e.n);
    for (m, c) in &e.terms {
        for (m2, a) in mul_mono_gen(m, g).iter() {
            out.add_term(m2.clone(), &(a * c));
        }
    }
    out
}

type Terms = Rc<Vec<(Monomial, Scalar)>>;

thread_local! {
    static GEN_CACHE: RefCell<HashMap<(Monomial, u8), Terms>> = RefCell::new(HashMap::new());
    static MONO_CACHE: RefCell<HashMap<(Monomial, Monomial), Terms>> = RefCell::new(HashMap::new());
}

/// Drop the memoized products of the current thread.
pub fn clear_caches() {
    GEN_CACHE.with(|c| c.borrow_mut().clear());
    MONO_CACHE.with(|c| c.borrow_mut().clear());
}

/// `h * g` with `h > g` rewritten as a combination of ordered pairs `u v`.
fn swap_rule(n: usize, h: usize, g: usize) -> Vec<(Scalar, usize, usize)> {
    let (a, b) = gen_pos(n, h);
    let (c, d) = gen_pos(n, g);
    if a == c || b == d {
        // same row or same column: q-commute
        vec![(Scalar::q_pow(-1), g, h)]
    } else if b < d {
        vec![(Scalar::one(), g, h)]
    } else {
        // x_ab x_cd = x_cd x_ab - (q - q^-1) x_cb x_ad for c < a, d < b
        let coeff = -(&Scalar::q() - &Scalar::q_pow(-1));
        vec![(Scalar::one(), g, h), (coeff, gen_index(n, c, b), gen_index(n, a, d))]
    }
}

/// Normal form of `m * x_g` for an ordered monomial `m`.
fn mul_mono_gen(m: &Monomial, g: usize) -> Terms {
    match m.last_gen() {
        Some(h) if h > g => {}
        _ => return Rc::new(vec![(m.times_gen(g), Scalar::one())]),
    }
    let key = (m.clone(), g as u8);
    if let Some(hit) = GEN_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let h = m.last_gen().unwrap();
    let rest = m.without_gen(h);
    let mut acc = MqElement::zero(m.size());
    for (c, u, v) in swap_rule(m.size(), h, g) {
        for (m1, c1) in mul_mono_gen(&rest, u).iter() {
            let c1 = &c * c1;
            for (m2, c2) in mul_mono_gen(m1, v).iter() {
                acc.add_term(m2.clone(), &(&c1 * c2));
            }
        }
    }
    let result: Terms = Rc::new(acc.terms.into_iter().collect());
    GEN_CACHE.with(|c| c.borrow_mut().insert(key, result.clone()));
    result
}

/// Normal form of the product of two ordered monomials.
pub(crate) fn mul_monomials(m1: &Monomial, m2: &Monomial) -> Terms {
    match (m1.last_gen(), m2.first_gen()) {
        (Some(a), Some(b)) if a > b => {}
        _ => return Rc::new(vec![(m1.commutative_mul(m2), Scalar::one())]),
    }
    let key = (m1.clone(), m2.clone());
    if let Some(hit) = MONO_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut acc = MqElement::from_monomial(m1.clone());
    for g in m2.word() {
        acc = mul_by_gen(&acc, g);
    }
    let result: Terms = Rc::new(acc.terms.into_iter().collect());
    MONO_CACHE.with(|c| c.borrow_mut().insert(key, result.clone()));
    result
}

impl fmt::Display for MqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        self.fmt_with(f, &|g| {
            let (i, j) = gen_pos(n, g);
            format!("x{}{}", i, j)
        })
    }
}

impl fmt::Debug for MqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MqElement({})", self)
    }
}

impl Add<&MqElement> for &MqElement {
    type Output = MqElement;
    fn add(self, rhs: &MqElement) -> MqElement {
        self.try_add(rhs).expect("size mismatch in O(M_q) addition")
    }
}

impl Sub<&MqElement> for &MqElement {
    type Output = MqElement;
    fn sub(self, rhs: &MqElement) -> MqElement {
        self.try_add(&-rhs).expect("size mismatch in O(M_q) subtraction")
    }
}

impl Mul<&MqElement> for &MqElement {
    type Output = MqElement;
    fn mul(self, rhs: &MqElement) -> MqElement {
        self.try_mul(rhs).expect("size mismatch in O(M_q) multiplication")
    }
}

impl Neg for &MqElement {
    type Output = MqElement;
    fn neg(self) -> MqElement {
        self.scale(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize, j: usize) -> MqElement {
        MqElement::generator(n, i, j).unwrap()
    }

    fn parse(n: usize, s: &str) -> MqElement {
        crate::parse::parse_mq(s, n).unwrap()
    }

    #[test]
    fn column_relation() {
        let e = normal_form(2, &[(2, 1), (1, 1)], &Scalar::one()).unwrap();
        assert_eq!(e, parse(2, "q^-1*x11*x21"));
    }

    #[test]
    fn cross_relation() {
        let e = normal_form(2, &[(2, 2), (1, 1)], &Scalar::one()).unwrap();
        assert_eq!(e, parse(2, "x11*x22 - (q - q^-1)*x12*x21"));
        assert_eq!(&x(2, 2, 2) * &x(2, 1, 1), e);
    }

    #[test]
    fn commuting_pair_and_empty_word() {
        let e = normal_form(2, &[(2, 1), (1, 2)], &Scalar::one()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&Monomial::from_exponents(2, &[0, 1, 1, 0])), Scalar::one());
        assert_eq!(normal_form(2, &[], &Scalar::one()).unwrap(), MqElement::one(2));
        assert_eq!(&x(2, 1, 1) * &x(2, 2, 2), MqElement::from_monomial(Monomial::from_exponents(2, &[1, 0, 0, 1])));
    }

    #[test]
    fn out_of_range_index() {
        assert!(normal_form(2, &[(3, 1)], &Scalar::one()).is_err());
        assert!(MqElement::generator(2, 0, 1).is_err());
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            MqElement::one(2).try_mul(&MqElement::one(3)),
            Err(Error::SizeMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn multidegree_examples() {
        let e = &x(2, 1, 1) * &x(2, 2, 1);
        let d = e.multidegree().unwrap();
        assert_eq!(d.rowdeg, vec![1, 1]);
        assert_eq!(d.coldeg, vec![2, 0]);
        assert_eq!((&x(2, 1, 1) + &x(2, 2, 2)).multidegree(), Err(Error::NotMultihomogeneous));
    }
}
