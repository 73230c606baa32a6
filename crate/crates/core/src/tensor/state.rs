use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::ComplexMatrix;

/// Pure n-qubit state: `2^n` amplitudes, unit norm. Qubit A is the
/// leftmost tensor factor and the most significant bit of the index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Scalar> {
    num_qubits: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Build a state, checking length and unit norm.
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if amplitudes.len() != dim {
            return Err(Error::BadEntryCount {
                rows: dim,
                cols: 1,
                len: amplitudes.len(),
                expected: dim,
            });
        }
        let state = Self { num_qubits, amplitudes };
        let norm = state.norm();
        if (norm - T::one()).abs() > T::TOL_ALGEBRA {
            return Err(Error::NotNormalized {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(state)
    }

    /// Basis ket with a single 1 at `position` (0-based index).
    pub fn basis(num_qubits: usize, position: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if position >= dim {
            return Err(Error::IndexOutOfRange { index: position + 1, max: dim });
        }
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); dim];
        amplitudes[position] = Complex::new(T::one(), T::zero());
        Ok(Self { num_qubits, amplitudes })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn get(&self, index: usize) -> Complex<T> {
        self.amplitudes[index]
    }

    pub fn norm(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |s, z| s + z.norm_sqr())
            .sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.num_qubits,
                found: other.num_qubits,
            });
        }
        let mut sum = Complex::new(T::zero(), T::zero());
        for (a, b) in self.amplitudes.iter().zip(&other.amplitudes) {
            sum = sum + a.conj() * b;
        }
        Ok(sum)
    }

    /// Entrywise complex conjugate in the computational basis.
    pub fn conjugate(&self) -> Self {
        Self {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Apply a square operator; the result is validated back to unit norm,
    /// so this is meant for unitary operators.
    pub fn apply(&self, op: &ComplexMatrix<T>) -> Result<Self> {
        let dim = self.dim();
        if op.rows() != dim || op.cols() != dim {
            return Err(Error::DimensionMismatch {
                a_rows: op.rows(),
                a_cols: op.cols(),
                b_rows: dim,
                b_cols: 1,
            });
        }
        let amplitudes = (0..dim)
            .map(|i| {
                let mut sum = Complex::new(T::zero(), T::zero());
                for j in 0..dim {
                    sum = sum + op.get(i, j) * self.amplitudes[j];
                }
                sum
            })
            .collect();
        Self::new(self.num_qubits, amplitudes)
    }

    /// Indices and amplitudes with magnitude above `tol`.
    pub fn nonzero_terms(&self, tol: T) -> Vec<(usize, Complex<T>)> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() > tol)
            .map(|(k, &z)| (k, z))
            .collect()
    }

    /// Basis-index bit string with qubit A leftmost, e.g. index 3 of a
    /// 3-qubit state prints as "011".
    pub fn bit_label(&self, index: usize) -> String {
        (0..self.num_qubits)
            .map(|q| {
                let bit = (index >> (self.num_qubits - 1 - q)) & 1;
                char::from(b'0' + bit as u8)
            })
            .collect()
    }
}
