use std::fmt;

use num_traits::One;

use crate::error::Result;
use crate::mq::{check_size, det_q_pow, MqElement};
use crate::scalars::Scalar;

/// `numerator * det_q^(-detpow)` in O(GL_q).
#[derive(Clone)]
pub struct GlqElement {
    num: MqElement,
    detpow: u32,
}

impl GlqElement {
    pub fn new(num: MqElement, detpow: u32) -> Self {
        GlqElement { num, detpow }
    }

    pub fn from_mq(num: MqElement) -> Self {
        GlqElement { num, detpow: 0 }
    }

    pub fn zero(n: usize) -> Self {
        GlqElement::from_mq(MqElement::zero(n))
    }

    pub fn one(n: usize) -> Self {
        GlqElement::from_mq(MqElement::one(n))
    }

    /// `det_q^(-k)`.
    pub fn det_inverse_pow(n: usize, k: u32) -> Self {
        GlqElement { num: MqElement::one(n), detpow: k }
    }

    pub fn size(&self) -> usize {
        self.num.size()
    }

    pub fn numerator(&self) -> &MqElement {
        &self.num
    }

    pub fn detpow(&self) -> u32 {
        self.detpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator after rewriting over `det_q^(-d)`, `d >= detpow`.
    pub fn numerator_at(&self, d: u32) -> MqElement {
        assert!(d >= self.detpow, "cannot lower the det power by multiplication");
        if d == self.detpow {
            self.num.clone()
        } else {
            &self.num * &det_q_pow(self.size(), (d - self.detpow) as usize)
        }
    }

    pub fn try_add(&self, other: &GlqElement) -> Result<GlqElement> {
        check_size(self.size(), other.size())?;
        let d = self.detpow.max(other.detpow);
        Ok(GlqElement { num: self.numerator_at(d).try_add(&other.numerator_at(d))?, detpow: d })
    }

    /// det_q is central, so the det powers just add.
    pub fn try_mul(&self, other: &GlqElement) -> Result<GlqElement> {
        Ok(GlqElement { num: self.num.try_mul(&other.num)?, detpow: self.detpow + other.detpow })
    }

    pub fn neg(&self) -> GlqElement {
        GlqElement { num: -&self.num, detpow: self.detpow }
    }

    pub fn scale(&self, c: &Scalar) -> GlqElement {
        GlqElement { num: self.num.scale(c), detpow: self.detpow }
    }

    /// The element as a member of O(M_q) when no det inverse is present.
    pub fn as_mq(&self) -> Option<&MqElement> {
        (self.detpow == 0 || self.num.is_zero()).then_some(&self.num)
    }
}

impl PartialEq for GlqElement {
    fn eq(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        if self.detpow == other.detpow {
            return self.num == other.num;
        }
        let d = self.detpow.max(other.detpow);
        self.numerator_at(d) == other.numerator_at(d)
    }
}

impl Eq for GlqElement {}

impl From<MqElement> for GlqElement {
    fn from(m: MqElement) -> Self {
        GlqElement::from_mq(m)
    }
}

impl fmt::Display for GlqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detpow == 0 || self.num.is_zero() {
            return write!(f, "{}", self.num);
        }
        let single = self.num.len() == 1 && self.num.terms().values().all(|c| c.is_one());
        if self.num.as_scalar().is_some_and(|c| c.is_one()) {
            write!(f, "det^-{}", self.detpow)
        } else if single {
            write!(f, "{}*det^-{}", self.num, self.detpow)
        } else {
            write!(f, "({})*det^-{}", self.num, self.detpow)
        }
    }
}

impl fmt::Debug for GlqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlqElement({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mq::det_q;
    use crate::parse::parse_glq;

    #[test]
    fn equality_by_cross_multiplication() {
        let a = GlqElement::new(det_q(2), 1);
        assert_eq!(a, GlqElement::one(2));
        let b = parse_glq("x11*det^-1", 2).unwrap();
        let c = GlqElement::new(&MqElement::generator(2, 1, 1).unwrap() * &det_q(2), 2);
        assert_eq!(b, c);
        assert_ne!(b, GlqElement::from_mq(MqElement::generator(2, 1, 1).unwrap()));
    }

    #[test]
    fn rendering() {
        assert_eq!(parse_glq("x12*det^-1", 2).unwrap().to_string(), "x12*det^-1");
        assert_eq!(parse_glq("det^-2", 2).unwrap().to_string(), "det^-2");
        assert_eq!(parse_glq("-q^-1*x12/det", 2).unwrap().to_string(), "(-(1/q)*x12)*det^-1");
    }
}
