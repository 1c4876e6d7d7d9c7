use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalars::Scalar;

/// Variables of a commutative Laurent algebra: `t_1..t_N` for O(D), or a
/// single `z` for O(K).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagVars {
    T(usize),
    Z,
}

impl DiagVars {
    pub fn count(&self) -> usize {
        match self {
            DiagVars::T(n) => *n,
            DiagVars::Z => 1,
        }
    }
}

/// A Laurent polynomial with Scalar coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiagElement {
    vars: DiagVars,
    terms: BTreeMap<Vec<i32>, Scalar>,
}

impl DiagElement {
    pub fn zero(vars: DiagVars) -> Self {
        DiagElement { vars, terms: BTreeMap::new() }
    }

    pub fn zero_z() -> Self {
        DiagElement::zero(DiagVars::Z)
    }

    pub fn one_z() -> Self {
        DiagElement::monomial(DiagVars::Z, vec![0], Scalar::one())
    }

    pub fn monomial(vars: DiagVars, exps: Vec<i32>, c: Scalar) -> Self {
        let mut e = DiagElement::zero(vars);
        e.add_term(exps, &c);
        e
    }

    pub fn one(vars: DiagVars) -> Self {
        DiagElement::monomial(vars, vec![0; vars.count()], Scalar::one())
    }

    pub fn vars(&self) -> DiagVars {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: &Scalar) {
        assert_eq!(exps.len(), self.vars.count(), "exponent vector has wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn add(&self, other: &DiagElement) -> DiagElement {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &DiagElement) -> DiagElement {
        assert_eq!(self.vars, other.vars);
        let mut out = DiagElement::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> DiagElement {
        let mut out = DiagElement::zero(self.vars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), &(a * c));
        }
        out
    }
}

pub(crate) fn fmt_laurent<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    vars: DiagVars,
    terms: impl DoubleEndedIterator<Item = (Vec<i32>, C)>,
) -> fmt::Result {
    let mut first = true;
    // highest exponents first
    for (e, c) in terms.rev() {
        let text = c.to_string();
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
            _ => (false, text),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| {
                let name = match vars {
                    DiagVars::Z => "z".to_string(),
                    DiagVars::T(_) => format!("t{}", i + 1),
                };
                if k == 1 {
                    name
                } else {
                    format!("{}^{}", name, k)
                }
            })
            .collect();
        let wrapped = if body.contains([' ', '/', '*', '^']) { format!("({})", body) } else { body.clone() };
        if mono.is_empty() {
            write!(f, "{}", wrapped)?;
        } else if body == "1" {
            write!(f, "{}", mono.join("*"))?;
        } else {
            write!(f, "{}*{}", wrapped, mono.join("*"))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for DiagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_laurent(f, self.vars, self.terms.iter().map(|(e, c)| (e.clone(), c)))
    }
}

impl fmt::Debug for DiagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagElement({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_arithmetic_and_rendering() {
        let z = DiagElement::monomial(DiagVars::Z, vec![1], Scalar::one());
        let zi = DiagElement::monomial(DiagVars::Z, vec![-1], Scalar::one());
        assert_eq!(z.mul(&zi), DiagElement::one_z());
        let s = z.add(&zi).mul(&z.add(&zi));
        assert_eq!(s.to_string(), "z^2 + 2 + z^-2");
        let t = DiagElement::monomial(DiagVars::T(2), vec![1, -1], Scalar::q());
        assert_eq!(t.to_string(), "q*t1*t2^-1");
    }
}
