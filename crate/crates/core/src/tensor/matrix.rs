use num_complex::Complex;

use crate::config::MAX_DIM;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense complex matrix, row-major. Values are immutable once built;
/// every operation returns a fresh matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadEntryCount {
                rows,
                cols,
                len: entries.len(),
                expected: rows * cols,
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for k in 0..size {
            m.entries[k * size + k] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Build from rows of `(re, im)` pairs; test and golden-table helper.
    pub fn from_parts(rows: usize, cols: usize, parts: &[(f64, f64)]) -> Result<Self> {
        let entries = parts
            .iter()
            .map(|&(re, im)| Complex::new(T::of(re), T::of(im)))
            .collect();
        Self::new(rows, cols, entries)
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

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.cols + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: Complex<T>) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    /// Kronecker product, capped at [`MAX_DIM`] per output axis.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.kron_with_cap(other, MAX_DIM)
    }

    pub fn kron_with_cap(&self, other: &Self, cap: usize) -> Result<Self> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        if rows > cap || cols > cap {
            return Err(Error::TooLarge { dim: rows.max(cols), cap });
        }
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                a_rows: self.rows,
                a_cols: self.cols,
                b_rows: other.rows,
                b_cols: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                a_rows: self.rows,
                a_cols: self.cols,
                b_rows: other.rows,
                b_cols: other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    pub fn trace(&self) -> Complex<T> {
        debug_assert!(self.is_square());
        let mut sum = Complex::new(T::zero(), T::zero());
        for k in 0..self.rows {
            sum = sum + self.get(k, k);
        }
        sum
    }

    /// Largest entrywise magnitude of the difference with `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut max = T::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            max = max.max((a - b).norm());
        }
        max
    }

    pub fn max_abs(&self) -> T {
        self.entries.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// Largest deviation from Hermitian symmetry, `max |a_ij - conj(a_ji)|`.
    pub fn hermiticity_deviation(&self) -> T {
        debug_assert!(self.is_square());
        let mut max = T::zero();
        for i in 0..self.rows {
            for j in i..self.cols {
                max = max.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        max
    }

    /// `max |U dagger(U) - I|`; zero for unitary matrices.
    pub fn unitarity_deviation(&self) -> Result<T> {
        let prod = self.matmul(&self.dagger())?;
        Ok(prod.max_abs_diff(&Self::identity(self.rows)))
    }
}
