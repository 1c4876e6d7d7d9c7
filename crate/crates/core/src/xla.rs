//! Exact dense linear algebra over a [`Field`]: reduced row echelon form,
//! kernels, and operations on row spaces.
//!
//! Elimination is fraction-free: rows are first scaled to integral
//! (polynomial) entries, each update is `row = p * row - e * pivot_row`, and
//! the row content is stripped after every update. Pivot rows are divided by
//! their pivots only at the end.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalars::{Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<F>>,
}

/// Output of [`Matrix::echelon`].
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<F> {
    /// The nonzero rows of the reduced row echelon form.
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Rows with at least this many rows to update are eliminated in parallel.
const PARALLEL_ROWS: usize = 32;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![F::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = F::one();
        }
        m
    }

    /// Build from rows; `cols` fixes the width even when there are no rows.
    pub fn from_rows(cols: usize, data: Vec<Vec<F>>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|r| r.len() != cols) {
            return Err(Error::SizeMismatch { expected: cols, found: bad.len() });
        }
        Ok(Matrix { rows: data.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i]
    }

    pub fn into_rows(self) -> Vec<Vec<F>> {
        self.data
    }

    pub fn transpose(&self) -> Matrix<F> {
        let data = (0..self.cols).map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect()).collect();
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        let data = self.data.iter().map(|r| r.iter().map(&f).collect::<Result<Vec<G>>>()).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self
            .data
            .iter()
            .map(|r| r.iter().zip(v).fold(F::zero(), |acc, (a, b)| acc + &(a.clone() * b)))
            .collect())
    }

    /// Reduced row echelon form with the leftmost nonzero entry as pivot.
    pub fn echelon(&self) -> Echelon<F> {
        let mut rows: Vec<Vec<F>> = self.data.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
        for r in rows.iter_mut() {
            F::clear_row(r);
            F::primitive_row(r);
        }
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            let pv = pivot_row[col].clone();
            let update = |i: usize, row: &mut Vec<F>| {
                if i == rank || row[col].is_zero() {
                    return;
                }
                let e = row[col].clone();
                for (c, pr) in row.iter_mut().zip(&pivot_row) {
                    let scaled = c.clone() * &pv;
                    *c = if pr.is_zero() { scaled } else { scaled - &(e.clone() * pr) };
                }
                F::primitive_row(row);
            };
            if rows.len() >= PARALLEL_ROWS {
                rows.par_iter_mut().enumerate().for_each(|(i, row)| update(i, row));
            } else {
                rows.iter_mut().enumerate().for_each(|(i, row)| update(i, row));
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        for (r, &col) in rows.iter_mut().zip(&pivots) {
            let pv = r[col].clone();
            if !pv.is_one() {
                for c in r.iter_mut() {
                    if !c.is_zero() {
                        *c = c.clone() / &pv;
                    }
                }
            }
        }
        Echelon { rref: Matrix { rows: rank, cols: self.cols, data: rows }, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank
    }

    /// A basis of `{v : M v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let ech = self.echelon();
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in ech.rref.data.iter().zip(&ech.pivots) {
                if !row[free].is_zero() {
                    v[p] = -row[free].clone();
                }
            }
            out.push(v);
        }
        out
    }
}

/// The reduced echelon basis of the span of `vectors` in `F^dim`.
pub fn span_basis<F: Field>(dim: usize, vectors: Vec<Vec<F>>) -> Result<Vec<Vec<F>>> {
    Ok(Matrix::from_rows(dim, vectors)?.echelon().rref.into_rows())
}

pub fn member<F: Field>(v: &[F], basis: &[Vec<F>]) -> Result<bool> {
    let dim = v.len();
    let base = Matrix::from_rows(dim, basis.to_vec())?.rank();
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    Ok(Matrix::from_rows(dim, with)?.rank() == base)
}

/// `span(a) ⊆ span(b)`.
pub fn contains<F: Field>(b: &[Vec<F>], a: &[Vec<F>], dim: usize) -> Result<bool> {
    let rb = Matrix::from_rows(dim, b.to_vec())?.rank();
    Ok(Matrix::from_rows(dim, [b, a].concat())?.rank() == rb)
}

pub fn subspace_equal<F: Field>(a: &[Vec<F>], b: &[Vec<F>], dim: usize) -> Result<bool> {
    let ra = Matrix::from_rows(dim, a.to_vec())?.rank();
    let rb = Matrix::from_rows(dim, b.to_vec())?.rank();
    if ra != rb {
        return Ok(false);
    }
    Ok(Matrix::from_rows(dim, [a, b].concat())?.rank() == ra)
}

pub fn sum<F: Field>(a: &[Vec<F>], b: &[Vec<F>], dim: usize) -> Result<Vec<Vec<F>>> {
    span_basis(dim, [a, b].concat())
}

/// Basis of `span(a) ∩ span(b)`, from the kernel of `[a; -b]^T`.
pub fn intersection<F: Field>(a: &[Vec<F>], b: &[Vec<F>], dim: usize) -> Result<Vec<Vec<F>>> {
    let a = span_basis(dim, a.to_vec())?;
    let b = span_basis(dim, b.to_vec())?;
    let mut cols: Vec<Vec<F>> = a.clone();
    cols.extend(b.iter().map(|v| v.iter().map(|c| -c.clone()).collect()));
    let m = Matrix::from_rows(dim, cols)?.transpose();
    let mut out = Vec::new();
    for k in m.kernel() {
        let mut v = vec![F::zero(); dim];
        for (coef, row) in k.iter().zip(&a) {
            if coef.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.clone() + &(coef.clone() * r);
            }
        }
        out.push(v);
    }
    span_basis(dim, out)
}

/// Entrywise specialization `q -> q0`.
pub fn specialize_matrix(m: &Matrix<Scalar>, q0: &Rational) -> Result<Matrix<Rational>> {
    m.map(|c| c.specialize(q0))
}
