//! The `q = 1` pipeline in commuting variables over ℚ, used as an
//! independent route for co-orbit images and their characters.
//!
//! Classically `β^ξ(X) = X^-1 ξ X`, so on numerators over `det^d` a
//! monomial `Π x_ij^e_ij` of degree `k` maps to
//! `Π ((adj X) ξ X)_ij^e_ij · det^(d-k)`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::chars::Character;
use crate::error::{Error, Result};
use crate::hopf::DiagVars;
use crate::scalars::Rational;
use crate::xla::Matrix;

/// A polynomial in commuting `x_ij`, keyed by row-major exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPoly {
    n: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl CPoly {
    pub fn zero(n: usize) -> Self {
        CPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = CPoly::zero(n);
        p.add_term(vec![0; n * n], c);
        p
    }

    pub fn var(n: usize, i: usize, j: usize) -> Self {
        let mut e = vec![0; n * n];
        e[(i - 1) * n + (j - 1)] = 1;
        let mut p = CPoly::zero(n);
        p.add_term(e, Rational::one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> CPoly {
        let mut out = CPoly::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut out = CPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> CPoly {
        (0..k).fold(CPoly::constant(self.n, Rational::one()), |acc, _| acc.mul(self))
    }

    /// Column sums of an exponent vector.
    pub fn coldeg(n: usize, e: &[u16]) -> Vec<i32> {
        (0..n).map(|j| (0..n).map(|i| e[i * n + j] as i32).sum()).collect()
    }
}

fn sign(p: &[usize]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant of the submatrix on `rows × cols` (1-based), by Leibniz.
fn minor(n: usize, rows: &[usize], cols: &[usize]) -> CPoly {
    let mut out = CPoly::zero(n);
    if rows.is_empty() {
        return CPoly::constant(n, Rational::one());
    }
    for p in (0..cols.len()).permutations(cols.len()) {
        let mut e = vec![0u16; n * n];
        for (r, &k) in rows.iter().zip(&p) {
            e[(r - 1) * n + (cols[k] - 1)] += 1;
        }
        out.add_term(e, Rational::from_integer(sign(&p).into()));
    }
    out
}

pub fn det(n: usize) -> CPoly {
    let all: Vec<usize> = (1..=n).collect();
    minor(n, &all, &all)
}

/// `(adj X)_ij = (-1)^(i+j) det(X without row j, column i)`.
pub fn adjugate(n: usize) -> Vec<Vec<CPoly>> {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
                    let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
                    let m = minor(n, &rows, &cols);
                    if (i + j) % 2 == 0 {
                        m
                    } else {
                        m.scale(&-Rational::one())
                    }
                })
                .collect()
        })
        .collect()
}

fn check_square(xi: &[Vec<Rational>]) -> Result<usize> {
    let n = xi.len();
    if n == 0 || xi.iter().any(|r| r.len() != n) {
        return Err(Error::ShapeMismatch("point must be a nonempty square matrix".into()));
    }
    Ok(n)
}

/// Numerators `((adj X) ξ X)_ij`.
pub fn conjugated_generators(xi: &[Vec<Rational>]) -> Result<Vec<Vec<CPoly>>> {
    let n = check_square(xi)?;
    let adj = adjugate(n);
    let mut out = vec![vec![CPoly::zero(n); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            for k in 0..n {
                for l in 0..n {
                    if xi[k][l].is_zero() {
                        continue;
                    }
                    let t = adj[i][k].mul(&CPoly::var(n, l + 1, j + 1)).scale(&xi[k][l]);
                    *slot = slot.add(&t);
                }
            }
        }
    }
    Ok(out)
}

/// Exponent vectors in `N²` variables of total degree at most `d`.
pub fn exponent_vectors(n: usize, d: usize) -> Vec<Vec<u16>> {
    fn go(slots: usize, budget: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == slots {
            out.push(cur.clone());
            return;
        }
        for e in 0..=budget {
            cur.push(e as u16);
            go(slots, budget - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n * n, d, &mut Vec::new(), &mut out);
    out
}

/// Images of every monomial of degree `≤ d`, as numerators over `det^d`.
pub fn image_numerators(xi: &[Vec<Rational>], d: usize) -> Result<Vec<CPoly>> {
    let n = check_square(xi)?;
    let y = conjugated_generators(xi)?;
    let dt = det(n);
    let det_pows: Vec<CPoly> = (0..=d).map(|k| dt.pow(k)).collect();
    Ok(exponent_vectors(n, d)
        .par_iter()
        .map(|e| {
            let deg: usize = e.iter().map(|&k| k as usize).sum();
            let mut acc = det_pows[d - deg].clone();
            for (g, &k) in e.iter().enumerate() {
                if k > 0 {
                    acc = acc.mul(&y[g / n][g % n].pow(k as usize));
                }
            }
            acc
        })
        .collect())
}

/// Rank of the truncated image in each weight `coldeg - d`.
pub fn image_character(xi: &[Vec<Rational>], d: usize) -> Result<Character> {
    let n = check_square(xi)?;
    let images = image_numerators(xi, d)?;
    let mut columns: BTreeMap<Vec<i32>, Vec<Vec<u16>>> = BTreeMap::new();
    for img in &images {
        for e in img.terms.keys() {
            let w: Vec<i32> = CPoly::coldeg(n, e).iter().map(|c| c - d as i32).collect();
            let cols = columns.entry(w).or_default();
            if !cols.contains(e) {
                cols.push(e.clone());
            }
        }
    }
    let ranks: Vec<(Vec<i32>, usize)> = columns
        .into_par_iter()
        .map(|(w, cols)| -> Result<_> {
            let rows: Vec<Vec<Rational>> = images
                .iter()
                .map(|img| cols.iter().map(|e| img.terms.get(e).cloned().unwrap_or_else(Rational::zero)).collect())
                .collect();
            Ok((w, Matrix::from_rows(cols.len(), rows)?.rank()))
        })
        .collect::<Result<_>>()?;
    let mut out = Character::zero(DiagVars::T(n));
    for (w, r) in ranks {
        if r > 0 {
            out.add_term(w, r as i64);
        }
    }
    Ok(out)
}

/// Dimension of the kernel of the truncated classical co-orbit map.
pub fn kernel_dim(xi: &[Vec<Rational>], d: usize) -> Result<usize> {
    let images = image_numerators(xi, d)?;
    let mut cols: Vec<Vec<u16>> = images.iter().flat_map(|p| p.terms.keys().cloned()).collect();
    cols.sort();
    cols.dedup();
    let rows: Vec<Vec<Rational>> = images
        .iter()
        .map(|img| cols.iter().map(|e| img.terms.get(e).cloned().unwrap_or_else(Rational::zero)).collect())
        .collect();
    Ok(images.len() - Matrix::from_rows(cols.len(), rows)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational;

    fn diag(a: i64, b: i64) -> Vec<Vec<Rational>> {
        vec![vec![rational(a, 1), rational(0, 1)], vec![rational(0, 1), rational(b, 1)]]
    }

    #[test]
    fn determinant_and_adjugate() {
        assert_eq!(det(2).terms().len(), 2);
        assert_eq!(det(3).terms().len(), 6);
        // X adj X = det I
        for n in 2..=3 {
            let adj = adjugate(n);
            for i in 1..=n {
                for j in 1..=n {
                    let mut s = CPoly::zero(n);
                    for k in 1..=n {
                        s = s.add(&CPoly::var(n, i, k).mul(&adj[k - 1][j - 1]));
                    }
                    let expected = if i == j { det(n) } else { CPoly::zero(n) };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn dimension_counts() {
        assert_eq!(exponent_vectors(2, 2).len(), 15);
        assert_eq!(exponent_vectors(2, 3).len(), 35);
        // generic orbit: (d + 1)^2
        for (d, expected) in [(0, 1), (1, 4), (2, 9), (3, 16)] {
            assert_eq!(image_character(&diag(2, 3), d).unwrap().eval_at_one(), expected);
        }
        assert_eq!(kernel_dim(&diag(2, 3), 3).unwrap(), 19);
    }

    #[test]
    fn scalar_point_kills_everything_but_constants() {
        assert_eq!(image_character(&diag(1, 1), 2).unwrap(), Character::one(DiagVars::T(2)));
    }
}
