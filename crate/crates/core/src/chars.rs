//! Integer Laurent characters, the SL(2) irreducible characters and the
//! closed-form character identities.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::classical;
use crate::coorbit::{image_data, Ambient, Point, TruncatedSubspace};
use crate::error::{Error, Result};
use crate::hopf::{Coaction, DiagVars, SlqElement};
use crate::mq::Monomial;
use crate::scalars::rational;

/// A Laurent polynomial with integer coefficients in `t_1..t_N` or `z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    vars: DiagVars,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl Character {
    pub fn zero(vars: DiagVars) -> Self {
        Character { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: DiagVars) -> Self {
        let mut c = Character::zero(vars);
        c.add_term(vec![0; vars.count()], 1);
        c
    }

    pub fn monomial(vars: DiagVars, exps: Vec<i32>, coeff: i64) -> Self {
        let mut c = Character::zero(vars);
        c.add_term(exps, coeff);
        c
    }

    pub fn vars(&self) -> DiagVars {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[i32]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, coeff: i64) {
        assert_eq!(exps.len(), self.vars.count(), "exponent length");
        let e = self.terms.entry(exps).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut out = Character::zero(self.vars);
        if k != 0 {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        }
        out
    }

    /// Value at `t_i = 1` (or `z = 1`): the total dimension.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `t_1^a t_2^b -> z^(a-b)` for two variables.
    pub fn to_z(&self) -> Result<Character> {
        match self.vars {
            DiagVars::Z => Ok(self.clone()),
            DiagVars::T(2) => {
                let mut out = Character::zero(DiagVars::Z);
                for (e, c) in &self.terms {
                    out.add_term(vec![e[0] - e[1]], *c);
                }
                Ok(out)
            }
            DiagVars::T(n) => Err(Error::Unsupported(format!("no z-picture for N = {}", n))),
        }
    }

    /// `[[exponents], coefficient]` pairs in ascending exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.terms.iter().map(|(e, c)| serde_json::json!([e, c])).collect())
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::hopf::fmt_laurent(f, self.vars, self.terms.iter().map(|(e, c)| (e.clone(), *c)))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character({})", self)
    }
}

/// Which grading to read a character from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Picture {
    /// `(id ⊗ π_D) ∘ Δ`, variables `t_1..t_N`.
    GlqT,
    /// `(id ⊗ π_K) ∘ Δ` on O(SL_q), variable `z`.
    SlqZ,
}

/// `χ(T_l)` for `m = 2l`: `z^m + z^(m-2) + ... + z^-m`.
pub fn chi_t(m: i32) -> Result<Character> {
    if m < 0 {
        return Err(Error::IndexOutOfRange(format!("2l = {} is negative", m)));
    }
    let mut c = Character::zero(DiagVars::Z);
    for k in 0..=m {
        c.add_term(vec![m - 2 * k], 1);
    }
    Ok(c)
}

fn weight_of(ambient: Ambient, picture: Picture, m: &Monomial) -> Result<Vec<i32>> {
    let col = m.coldeg();
    match (ambient, picture) {
        (Ambient::Mq { .. }, Picture::GlqT) => Ok(col),
        (Ambient::Glq { detpow, .. }, Picture::GlqT) => Ok(col.iter().map(|c| c - detpow as i32).collect()),
        (Ambient::Slq, Picture::SlqZ) => Ok(vec![SlqElement::z_weight(m)]),
        (Ambient::Mq { n: 2 } | Ambient::Glq { n: 2, .. }, Picture::SlqZ) => Ok(vec![col[0] - col[1]]),
        _ => Err(Error::ShapeMismatch(format!("no {:?} grading on {}", picture, ambient.tag()))),
    }
}

/// Character of a space whose basis vectors are homogeneous.
pub fn character_of(space: &TruncatedSubspace, picture: Picture) -> Result<Character> {
    let vars = match picture {
        Picture::GlqT => DiagVars::T(space.ambient().size()),
        Picture::SlqZ => DiagVars::Z,
    };
    let mut out = Character::zero(vars);
    for v in space.vectors() {
        let mut weight = None;
        for (m, c) in space.basis().iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            let w = weight_of(space.ambient(), picture, m)?;
            match &weight {
                None => weight = Some(w),
                Some(w0) if *w0 != w => return Err(Error::NotMultihomogeneous),
                _ => {}
            }
        }
        if let Some(w) = weight {
            out.add_term(w, 1);
        }
    }
    Ok(out)
}

/// Multiplicities of `χ(T_l)`, keyed by `2l`, peeling from the top exponent.
pub fn decompose_sl2(c: &Character) -> Result<BTreeMap<i32, u64>> {
    if c.vars != DiagVars::Z {
        return Err(Error::ShapeMismatch("decomposition needs a character in z".into()));
    }
    let mut rest = c.clone();
    let mut out = BTreeMap::new();
    while let Some((e, &k)) = rest.terms.iter().next_back() {
        let top = e[0];
        if top < 0 || k < 0 {
            return Err(Error::NotNonnegativeCombination);
        }
        out.insert(top, k as u64);
        rest = rest.sub(&chi_t(top)?.scale(k));
    }
    Ok(out)
}

/// `Σ mult · χ(T_l)`.
pub fn recompose_sl2(mults: &BTreeMap<i32, u64>) -> Result<Character> {
    let mut out = Character::zero(DiagVars::Z);
    for (&m, &k) in mults {
        out = out.add(&chi_t(m)?.scale(k as i64));
    }
    Ok(out)
}

/// `Σ_{i+j+k ≤ r-1} z^(2(k-j)) + Σ_{l+m+n ≤ r} z^(2(m-l))`; zero for `r < 0`.
pub fn character_cr(r: i64) -> Character {
    let mut out = Character::zero(DiagVars::Z);
    if r < 0 {
        return out;
    }
    let mut sweep = |bound: i64| {
        for a in 0..=bound {
            for b in 0..=bound - a {
                for _ in 0..=bound - a - b {
                    // the innermost index does not enter the exponent
                    out.add_term(vec![2 * (b as i32 - a as i32)], 1);
                }
            }
        }
    };
    if r >= 1 {
        sweep(r - 1);
    }
    sweep(r);
    out
}

/// `character_cr(r) - character_cr(r-1) == Σ_{s=0}^r χ(T_s)` with `χ(T_s)`
/// read at `2l = 2s`.
pub fn difference_identity(r: i64) -> Result<bool> {
    let lhs = character_cr(r).sub(&character_cr(r - 1));
    let mut rhs = Character::zero(DiagVars::Z);
    for s in 0..=r {
        rhs = rhs.add(&chi_t(2 * s as i32)?);
    }
    Ok(lhs == rhs)
}

/// Character of the truncated β-image at symbolic `q` against the same
/// computation redone with `q = 1` throughout.
pub fn compare_at_q1(xi: &Point, d: usize) -> Result<bool> {
    let symbolic = image_data(xi, Coaction::Beta, d)?.character;
    let classical = classical::image_character(&xi.specialize(&rational(1, 1))?, d)?;
    Ok(symbolic == classical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coorbit::{diag_coinv_truncation, sphere_span};
    use proptest::prelude::*;

    fn z(pairs: &[(i32, i64)]) -> Character {
        let mut c = Character::zero(DiagVars::Z);
        for &(e, k) in pairs {
            c.add_term(vec![e], k);
        }
        c
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_t(0).unwrap(), Character::one(DiagVars::Z));
        assert_eq!(chi_t(1).unwrap(), z(&[(1, 1), (-1, 1)]));
        assert_eq!(chi_t(2).unwrap(), z(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(chi_t(2).unwrap().to_string(), "z^2 + 1 + z^-2");
        assert!(chi_t(-1).is_err());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose_sl2(&chi_t(2).unwrap()).unwrap(), BTreeMap::from([(2, 1)]));
        assert_eq!(decompose_sl2(&z(&[(1, 1), (-1, 1), (0, 2)])).unwrap(), BTreeMap::from([(1, 1), (0, 2)]));
        assert_eq!(decompose_sl2(&z(&[(2, 1)])), Err(Error::NotNonnegativeCombination));
        assert!(decompose_sl2(&z(&[(-2, 1)])).is_err());
    }

    #[test]
    fn sphere_characters() {
        let c1 = character_of(&sphere_span(1).unwrap(), Picture::SlqZ).unwrap();
        assert_eq!(c1, z(&[(2, 1), (0, 2), (-2, 1)]));
        for n in 0..=3 {
            let c = character_of(&sphere_span(n).unwrap(), Picture::SlqZ).unwrap();
            let expected: BTreeMap<i32, u64> = (0..=n as i32).map(|l| (2 * l, 1)).collect();
            assert_eq!(decompose_sl2(&c).unwrap(), expected);
            assert_eq!(c.eval_at_one(), ((n + 1) * (n + 1)) as i64);
        }
    }

    #[test]
    fn diag_coinvariant_character() {
        // a in ω_1: one 1 in each row, weight t_{col of row 1} t_{col of row 2} / t1 t2
        let c = character_of(&diag_coinv_truncation(2, 1), Picture::GlqT).unwrap();
        let mut expected = Character::zero(DiagVars::T(2));
        for j1 in 0..2 {
            for j2 in 0..2 {
                let mut e = vec![-1, -1];
                e[j1] += 1;
                e[j2] += 1;
                expected.add_term(e, 1);
            }
        }
        assert_eq!(c, expected);
        assert_eq!(c.to_string(), "t1*t2^-1 + 2 + t1^-1*t2");
    }

    #[test]
    fn cr_examples() {
        assert_eq!(character_cr(0), Character::one(DiagVars::Z));
        assert!(character_cr(-1).is_zero());
        for r in 0..=5 {
            assert!(difference_identity(r).unwrap(), "r = {}", r);
        }
    }

    #[test]
    fn cr_counts_basis() {
        fn binom(n: i64, k: i64) -> i64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for r in 0..=6 {
            assert_eq!(character_cr(r).eval_at_one(), binom(r + 2, 3) + binom(r + 3, 3));
        }
    }

    #[test]
    fn q1_comparison_small() {
        let xi = Point::diagonal(&["2".parse().unwrap(), "3".parse().unwrap()]).unwrap();
        assert!(compare_at_q1(&xi, 0).unwrap());
        assert!(compare_at_q1(&xi, 1).unwrap());
    }

    proptest! {
        #[test]
        fn decompose_round_trip(mults in proptest::collection::btree_map(0i32..7, 1u64..4, 0..5)) {
            let c = recompose_sl2(&mults).unwrap();
            prop_assert_eq!(decompose_sl2(&c).unwrap(), mults);
        }

        #[test]
        fn to_z_preserves_dimension(terms in proptest::collection::vec(((-3i32..4, -3i32..4), 1i64..5), 0..8)) {
            let mut c = Character::zero(DiagVars::T(2));
            for ((a, b), k) in terms {
                c.add_term(vec![a, b], k);
            }
            prop_assert_eq!(c.to_z().unwrap().eval_at_one(), c.eval_at_one());
        }
    }
}
