//! Dense exact linear algebra: reduced row echelon form, rank, kernels,
//! span membership and traces of operators restricted to invariant subspaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::Field;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose columns are `cols` (each of length `nrows`).
    pub fn from_cols(nrows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul_assign(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let mut cell = std::mem::replace(&mut out[(i, j)], F::zero());
                        cell.add_mul_assign(a, b);
                        out[(i, j)] = cell;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat<F> {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduces in place to reduced row echelon form, pivoting on the first
    /// nonzero entry. Only the first `pivot_cols` columns are used as
    /// pivots. Returns the pivot columns.
    pub fn rref_limited(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols.min(self.cols) {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self[(r, j)].mul(&inv);
                self[(r, j)] = v;
            }
            let pivot_row: Vec<F> = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    if !pivot_row[j].is_zero() {
                        let v = self[(i, j)].sub(&factor.mul(&pivot_row[j]));
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        self.rref_limited(self.cols)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{v : self * v = 0}`, normalised to the
    /// reduced row echelon form of the kernel space.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut red = self.clone();
        let pivots = red.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<F>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = red[(r, f)].neg();
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return raw;
        }
        let mut k = Mat::from_rows(raw);
        let rank = k.rref().len();
        (0..rank).map(|i| k.row(i).to_vec()).collect()
    }

    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut a = self.clone();
        let mut det = F::one();
        for c in 0..a.cols {
            let Some(p) = (c..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = det.neg();
            }
            let pivot = a[(c, c)].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in c + 1..a.rows {
                let factor = a[(i, c)].mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let v = a[(i, j)].sub(&factor.mul(&a[(c, j)]));
                    a[(i, j)] = v;
                }
            }
        }
        det
    }

    /// Solves `self * x = b`, returning one solution if any exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_limited(self.cols);
        if (pivots.len()..self.rows).any(|i| !aug[(i, self.cols)].is_zero()) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }
}

impl<F> std::ops::Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    m.rank()
}

pub fn kernel_basis<F: Field>(m: &Mat<F>) -> Vec<Vec<F>> {
    m.kernel_basis()
}

/// Rank of a list of vectors (as rows).
pub fn span_rank<F: Field>(vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_rows(vectors.to_vec()).rank()
}

/// Whether `v` is a linear combination of `basis`.
pub fn in_span<F: Field>(v: &[F], basis: &[Vec<F>]) -> bool {
    if v.iter().all(F::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    assert!(basis.iter().all(|b| b.len() == v.len()), "length mismatch");
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    span_rank(basis) == span_rank(&with)
}

/// Trace of `op` restricted to the span of `basis`, which must be linearly
/// independent and mapped into itself by `op`.
pub fn operator_trace_on_subspace<F: Field>(op: &Mat<F>, basis: &[Vec<F>]) -> Result<F> {
    let n = op.rows();
    if op.cols() != n {
        return Err(Error::Precondition("operator must be square".into()));
    }
    let k = basis.len();
    if k == 0 {
        return Ok(F::zero());
    }
    // augmented [B | op b_1 .. op b_k]
    let mut cols: Vec<Vec<F>> = basis.to_vec();
    cols.extend(basis.iter().map(|b| op.mul_vec(b)));
    let mut aug = Mat::from_cols(n, &cols);
    let pivots = aug.rref_limited(k);
    if pivots.len() != k {
        return Err(Error::Precondition(
            "subspace basis is linearly dependent".into(),
        ));
    }
    for i in 0..k {
        if (k..n).any(|r| !aug[(r, k + i)].is_zero()) {
            return Err(Error::StabilityViolation(i));
        }
    }
    // pivots are exactly columns 0..k, so row i holds coordinates on b_i
    let mut tr = F::zero();
    for i in 0..k {
        tr = tr.add(&aug[(i, k + i)]);
    }
    Ok(tr)
}
