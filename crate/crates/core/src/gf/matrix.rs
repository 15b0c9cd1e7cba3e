//! Dense matrices over a [`Field`], with exact row reduction.
//!
//! Row reduction picks as pivot the first nonzero entry scanning columns left
//! to right and rows top to bottom, and normalizes pivots to 1, so the reduced
//! form of a matrix is canonical. Over GF(2) elimination runs on a bit-packed
//! copy of the matrix.

use std::fmt;

use super::field::{Automorphism, Elem, Field};
use super::gf2::BitMatrix;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}x{} [", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r).iter().map(|e| e.0).collect::<Vec<_>>())?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of element codes, validating every code.
    pub fn from_codes<R: AsRef<[u32]>>(field: &Field, cols: usize, rows: &[R]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for &c in row {
                data.push(field.elem(c)?);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_rows<R: AsRef<[Elem]>>(field: &Field, cols: usize, rows: &[R]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            debug_assert!(row.iter().all(|e| (e.0 as usize) < field.order()));
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        // chunks_exact panics on zero width
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn codes(&self) -> Vec<Vec<u8>> {
        self.row_iter().map(|r| r.iter().map(|e| e.0).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `M·v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self.row_iter().map(|r| self.field.dot(r, v)).collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: rhs.rows * rhs.cols,
            });
        }
        let f = &self.field;
        Ok(Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect(),
        })
    }

    pub fn neg(&self) -> Matrix {
        self.map(|a| self.field.neg(a))
    }

    pub fn scale(&self, a: Elem) -> Matrix {
        self.map(|x| self.field.mul(a, x))
    }

    /// Applies an automorphism to every entry.
    pub fn apply_automorphism(&self, sigma: Automorphism) -> Matrix {
        if sigma.is_identity() {
            return self.clone();
        }
        self.map(|x| self.field.apply(sigma, x))
    }

    fn map(&self, f: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Matrix) -> Result<Matrix> {
        self.check_field(below)?;
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation.
    pub fn augment(&self, right: &Matrix) -> Result<Matrix> {
        self.check_field(right)?;
        if self.rows != right.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: right.rows,
            });
        }
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            out.data[r * out.cols..r * out.cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * out.cols + self.cols..(r + 1) * out.cols].copy_from_slice(right.row(r));
        }
        Ok(out)
    }

    /// Keeps the first `n` rows.
    pub fn truncate_rows(mut self, n: usize) -> Matrix {
        self.rows = self.rows.min(n);
        self.data.truncate(self.rows * self.cols);
        self
    }

    pub fn columns_range(&self, start: usize, end: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, end - start);
        for r in 0..self.rows {
            for c in start..end {
                out.set(r, c - start, self.get(r, c));
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        if self.field.is_gf2() {
            self.rref_gf2()
        } else {
            self.rref_generic()
        }
    }

    fn rref_generic(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(r * cols + j, pr * cols + j);
                }
            }
            let inv = f.inv_nonzero(m.get(r, c));
            if inv != Elem::ONE {
                for j in c..cols {
                    let v = f.mul(inv, m.get(r, j));
                    m.set(r, j, v);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let nf = f.neg(factor);
                for j in c..cols {
                    let v = f.add(m.get(i, j), f.mul(nf, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn rref_gf2(&self) -> Rref {
        let mut b = BitMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    b.set(r, c, true);
                }
            }
        }
        let pivots = b.rref();
        let mut m = Matrix::zeros(&self.field, self.rows, self.cols);
        for r in 0..pivots.len() {
            for c in 0..self.cols {
                if b.get(r, c) {
                    m.set(r, c, Elem::ONE);
                }
            }
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{v : M·v = 0}`, as rows in reduced echelon form.
    pub fn kernel(&self) -> Matrix {
        let Rref { matrix: r, pivots, .. } = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.set(i, fc, Elem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                k.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        let Rref { matrix, rank, .. } = k.rref();
        matrix.truncate_rows(rank)
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.augment(&Matrix::identity(&self.field, n))?;
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(matrix.columns_range(n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}
