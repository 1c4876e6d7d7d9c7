use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mq::MqElement;
use crate::scalars::{Rational, Scalar};

/// A classical point of M_q: a scalar matrix satisfying the defining
/// relations when its entries are multiplied commutatively.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    n: usize,
    entries: Vec<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    n: usize,
    entries: Vec<Vec<String>>,
}

/// Check the relations on a commutative matrix and wrap it as a [`Point`].
///
/// With commuting entries the relations reduce to
/// `(1 - q) ξ_ij ξ_il = 0`, `(1 - q) ξ_ij ξ_kj = 0` and
/// `(q - q^-1) ξ_il ξ_kj = 0` for `i < k`, `j < l`.
pub fn validate_point(entries: Vec<Vec<Scalar>>) -> Result<Point> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::ShapeMismatch("empty matrix".into()));
    }
    if let Some(row) = entries.iter().find(|r| r.len() != n) {
        return Err(Error::ShapeMismatch(format!("expected {} columns, found {}", n, row.len())));
    }
    let e = |i: usize, j: usize| &entries[i - 1][j - 1];
    let one_minus_q = &Scalar::one() - &Scalar::q();
    let q_minus_inv = &Scalar::q() - &Scalar::q_pow(-1);
    let mut violations = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for l in j + 1..=n {
                if !(&(e(i, j) * e(i, l)) * &one_minus_q).is_zero() {
                    violations.push(format!("x{i}{j}*x{i}{l} = q*x{i}{l}*x{i}{j}"));
                }
            }
            for k in i + 1..=n {
                if !(&(e(i, j) * e(k, j)) * &one_minus_q).is_zero() {
                    violations.push(format!("x{i}{j}*x{k}{j} = q*x{k}{j}*x{i}{j}"));
                }
                for l in j + 1..=n {
                    if !(&(e(i, l) * e(k, j)) * &q_minus_inv).is_zero() {
                        violations.push(format!("x{i}{j}*x{k}{l} - x{k}{l}*x{i}{j} = (q - q^-1)*x{i}{l}*x{k}{j}"));
                    }
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::NotAPoint(violations.join("; ")));
    }
    Ok(Point { n, entries })
}

impl Point {
    pub fn new(entries: Vec<Vec<Scalar>>) -> Result<Self> {
        validate_point(entries)
    }

    pub fn diagonal(values: &[Scalar]) -> Result<Self> {
        let n = values.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { values[i].clone() } else { Scalar::zero() }).collect())
            .collect();
        validate_point(entries)
    }

    /// `[[0, s], [0, 0]]`.
    pub fn nilpotent(s: Scalar) -> Result<Self> {
        validate_point(vec![vec![Scalar::zero(), s], vec![Scalar::zero(), Scalar::zero()]])
    }

    pub fn zero(n: usize) -> Self {
        Point { n, entries: vec![vec![Scalar::zero(); n]; n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `ξ_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i - 1][j - 1]
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| i == j || self.entry(i, j).is_zero()))
    }

    /// Nonzero entries as `(i, j, value)`, 1-based.
    pub fn support(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if !self.entry(i, j).is_zero() {
                    out.push((i, j, self.entry(i, j).clone()));
                }
            }
        }
        out
    }

    pub fn specialize(&self, q0: &Rational) -> Result<Vec<Vec<Rational>>> {
        self.entries.iter().map(|r| r.iter().map(|c| c.specialize(q0)).collect()).collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PointJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.entries.len() != raw.n {
            return Err(Error::ShapeMismatch(format!("n = {} but {} rows given", raw.n, raw.entries.len())));
        }
        let entries = raw
            .entries
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<Scalar>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        validate_point(entries)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "entries": self.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.entries.iter().map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({})", self)
    }
}

/// `ev_ξ`, the algebra map `x_ij -> ξ_ij`.
pub fn evaluate(xi: &Point, f: &MqElement) -> Result<Scalar> {
    if xi.size() != f.size() {
        return Err(Error::SizeMismatch { expected: xi.size(), found: f.size() });
    }
    let n = xi.size();
    let mut acc = Scalar::zero();
    for (m, c) in f.terms() {
        let mut v = c.clone();
        for (g, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let x = &xi.entries[g / n][g % n];
            if x.is_zero() {
                v = Scalar::zero();
                break;
            }
            v = &v * &x.pow(e as i32)?;
        }
        acc += &v;
    }
    Ok(acc)
}
