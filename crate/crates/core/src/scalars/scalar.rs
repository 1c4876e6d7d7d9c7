use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// An element of Q(q), kept as `num / den` with `gcd(num, den) = 1` and `den`
/// monic, so that equality of scalars is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar { num: Poly::constant(r), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn q() -> Self {
        Scalar::from_poly(Poly::q())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        let m = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Scalar::from_poly(m)
        } else {
            Scalar { num: Poly::one(), den: m }
        }
    }

    /// `num / den`, reduced.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::reduced(num, den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value if this scalar does not depend on `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.is_constant(), self.den.is_one()) {
            (true, true) => Some(self.num.coeffs().first().cloned().unwrap_or_else(Rational::zero)),
            _ => None,
        }
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() {
            let inv = den.lead().unwrap().recip();
            return Scalar { num: num.scale(&inv), den: Poly::one() };
        }
        let (num, den) = if let Some(k) = den.single_term() {
            let s = k.min(num.order().unwrap());
            (num.shift_down(s), den.shift_down(s))
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        let lead = den.lead().unwrap();
        if lead.is_one() {
            Scalar { num, den }
        } else {
            let inv = lead.recip();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead = self.num.lead().unwrap().recip();
        Ok(Scalar { num: self.den.scale(&lead), den: self.num.scale(&lead) })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluate at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Integer-coefficient numerator and denominator with jointly coprime
    /// coefficients; the denominator has positive leading coefficient.
    pub fn integer_parts(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let l = self.num.denominator_lcm().lcm(&self.den.denominator_lcm());
        let scale = |p: &Poly| -> Vec<BigInt> {
            p.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
        };
        let mut n = scale(&self.num);
        let mut d = scale(&self.den);
        let g = n.iter().chain(d.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            n.iter_mut().for_each(|c| *c = &*c / &g);
            d.iter_mut().for_each(|c| *c = &*c / &g);
        }
        (n, d)
    }
}

fn int_poly(coeffs: &[BigInt]) -> Poly {
    Poly::from_coeffs(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn needs_parens(p: &Poly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.integer_parts();
        let (n, d) = (int_poly(&n), int_poly(&d));
        if d.is_one() {
            return write!(f, "{}", n);
        }
        if needs_parens(&n) {
            write!(f, "({})", n)?;
        } else {
            write!(f, "{}", n)?;
        }
        let d_neg = d.lead().is_some_and(|c| c.is_negative());
        debug_assert!(!d_neg);
        if needs_parens(&d) || d.coeffs().last().is_some_and(|c| !c.is_one() && d.degree() > Some(0)) {
            write!(f, "/({})", d)
        } else {
            write!(f, "/{}", d)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_scalar(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar { num: Poly::one(), den: Poly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num + &rhs.num);
            }
            return Scalar::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel; the product of monic coprime parts is already reduced
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        Scalar { num, den }
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] to get an error.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar { (&self).$method(rhs) }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn inverse_pair() {
        assert_eq!(&Scalar::q() * &Scalar::q_pow(-1), Scalar::one());
    }

    #[test]
    fn product_of_linear_factors() {
        assert_eq!(s("q - 1") * s("q + 1"), s("q^2 - 1"));
    }

    #[test]
    fn reduction_before_addition() {
        // (q^2 - 1)/(q - 1) reduces to q + 1 by long division
        let a = Scalar::new(Poly::from_i64_coeffs(&[-1, 0, 1]), Poly::from_i64_coeffs(&[-1, 1])).unwrap();
        assert_eq!(a.num(), &Poly::from_i64_coeffs(&[1, 1]));
        assert!(a.den().is_one());
        assert_eq!(&a + &Scalar::one(), s("q + 2"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
        assert_eq!(Scalar::new(Poly::one(), Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn specialization() {
        let one = rational(1, 1);
        assert_eq!(s("q^2").specialize(&one).unwrap(), one);
        let a = Scalar::new(Poly::from_i64_coeffs(&[-1, 0, 1]), Poly::from_i64_coeffs(&[-1, 1])).unwrap();
        assert_eq!(a.specialize(&one).unwrap(), rational(2, 1));
        assert_eq!(s("1/(q - 1)").specialize(&one), Err(Error::Pole(one)));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let a = s("(2*q + 2)/(4*q^2 - 4)");
        assert_eq!(a.den(), &Poly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(a.to_string(), "1/(2*q - 2)");
    }

    #[test]
    fn rendering() {
        assert_eq!(s("(q^2-1)/(q+1)").to_string(), "q - 1");
        assert_eq!(s("q - 1/q").to_string(), "(q^2 - 1)/q");
        assert_eq!(s("1/2").to_string(), "1/2");
        assert_eq!(s("-q^-3").to_string(), "-1/q^3");
        assert_eq!(s("q/2").to_string(), "q/2");
    }
}
