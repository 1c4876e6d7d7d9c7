//! Exact coefficient arithmetic: the rationals and the rational function
//! field in the deformation parameter `q`.

mod poly;
mod scalar;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use poly::Poly;
pub use scalar::Scalar;

/// Exact rational number with a positive denominator in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A commutative field usable by the exact linear algebra in [`crate::xla`].
///
/// `clear_row` and `primitive_row` let elimination work fraction-free: rows
/// are rescaled to integral entries once, and after every row operation the
/// common content is stripped again. Both only rescale a row by a nonzero
/// field element, so the row space is unchanged.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn clear_row(_row: &mut [Self]) {}

    fn primitive_row(_row: &mut [Self]) {}
}

impl Field for Rational {
    fn clear_row(row: &mut [Self]) {
        let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        if !l.is_one() {
            let l = Rational::from_integer(l);
            for c in row.iter_mut() {
                *c = &*c * &l;
            }
        }
    }

    fn primitive_row(row: &mut [Self]) {
        let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()));
        if !g.is_zero() && !g.is_one() {
            let g = Rational::from_integer(g);
            for c in row.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

impl Field for Scalar {
    fn clear_row(row: &mut [Self]) {
        let mut l = Poly::one();
        for c in row.iter() {
            if !c.den().is_one() {
                let g = Poly::gcd(&l, c.den());
                l = &l * &c.den().exact_div(&g);
            }
        }
        if !l.is_one() {
            let l = Scalar::from_poly(l);
            for c in row.iter_mut() {
                *c = &*c * &l;
            }
        }
    }

    fn primitive_row(row: &mut [Self]) {
        // entries are polynomial here; divide out their monic gcd and the
        // rational content
        if row.iter().any(|c| !c.den().is_one()) {
            return;
        }
        let mut g = Poly::zero();
        for c in row.iter() {
            if !c.is_zero() {
                g = Poly::gcd(&g, c.num());
                if g.is_one() {
                    break;
                }
            }
        }
        if g.is_zero() {
            return;
        }
        let num_gcd = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(&c.num().numerator_gcd()));
        let den_lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.num().denominator_lcm()));
        let content = Rational::new(num_gcd, den_lcm);
        let unit = content.is_one();
        if g.is_one() && unit {
            return;
        }
        let inv = content.recip();
        for c in row.iter_mut() {
            if c.is_zero() {
                continue;
            }
            let mut n = c.num().exact_div(&g);
            if !unit {
                n = n.scale(&inv);
            }
            *c = Scalar::from_poly(n);
        }
    }
}
