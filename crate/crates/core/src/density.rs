//! Density matrices, partial trace, purity.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{ComplexMatrix, StateVector};

/// `2^n x 2^n` Hermitian, unit-trace, positive semidefinite matrix with an
/// explicit qubit count. Qubit labels are 1-based with A = 1 the leftmost
/// (most significant) factor.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T: Scalar> {
    num_qubits: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validating constructor for untrusted input: checks shape,
    /// Hermiticity, unit trace, and positive semidefiniteness (the last
    /// via a full eigendecomposition, emitting a structured error instead
    /// of clamping).
    pub fn try_new(num_qubits: usize, matrix: ComplexMatrix<T>) -> Result<Self> {
        let out = Self::from_matrix_checked(num_qubits, matrix)?;
        let eig = out.matrix.hermitian_eigensystem()?;
        let min = eig.eigenvalues.first().copied().unwrap_or(T::zero());
        if min < -T::TOL_PSD {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(out)
    }

    /// Shape, Hermiticity and trace validation only. Used internally for
    /// constructions that preserve positivity structurally (outer products,
    /// partial traces, unitary conjugations of valid inputs).
    pub(crate) fn from_matrix_checked(num_qubits: usize, matrix: ComplexMatrix<T>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::BadEntryCount {
                rows: dim,
                cols: dim,
                len: matrix.rows() * matrix.cols(),
                expected: dim * dim,
            });
        }
        let dev = matrix.hermiticity_deviation();
        if dev > T::TOL_HERMITICITY {
            return Err(Error::NotHermitian {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace = matrix.trace();
        if (trace.re - T::one()).abs() > T::TOL_ALGEBRA || trace.im.abs() > T::TOL_ALGEBRA {
            return Err(Error::NotUnitTrace {
                trace: trace.re.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { num_qubits, matrix })
    }

    /// Projector `|psi><psi| / <psi|psi>`. The state carries unit norm up
    /// to tolerance; dividing by the exact norm keeps the trace exactly 1
    /// instead of letting the norm residual double in the projector.
    pub fn from_pure(state: &StateVector<T>) -> Self {
        let dim = state.dim();
        let norm_sqr = state.norm() * state.norm();
        let matrix = ComplexMatrix::from_fn(dim, dim, |i, j| {
            (state.get(i) * state.get(j).conj()).unscale(norm_sqr)
        });
        Self {
            num_qubits: state.num_qubits(),
            matrix,
        }
    }

    /// `I / 2^n`.
    pub fn maximally_mixed(num_qubits: usize) -> Self {
        let dim = 1usize << num_qubits;
        let matrix = ComplexMatrix::identity(dim).scale_re(T::one() / T::of(dim as f64));
        Self { num_qubits, matrix }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    /// Trace out the listed qubits (1-based labels, set semantics). The
    /// set must be nonempty and leave at least one qubit behind.
    pub fn partial_trace(&self, drop: &[usize]) -> Result<Self> {
        let n = self.num_qubits;
        let mut drop_sorted: Vec<usize> = drop.to_vec();
        drop_sorted.sort_unstable();
        drop_sorted.dedup();
        for &q in &drop_sorted {
            if q < 1 || q > n {
                return Err(Error::QubitOutOfRange { qubit: q, num_qubits: n });
            }
        }
        if drop_sorted.is_empty() || drop_sorted.len() >= n {
            return Err(Error::InvalidTraceSet);
        }

        let kept: Vec<usize> = (1..=n).filter(|q| !drop_sorted.contains(q)).collect();
        let kept_n = kept.len();
        // Bit position of qubit q in the input index (A is the MSB).
        let bit = |q: usize| n - q;
        let drop_mask: usize = drop_sorted.iter().map(|&q| 1usize << bit(q)).sum();
        let extract = |index: usize| -> usize {
            kept.iter().enumerate().fold(0usize, |acc, (t, &q)| {
                acc | (((index >> bit(q)) & 1) << (kept_n - 1 - t))
            })
        };

        let dim = self.dim();
        let mut out = ComplexMatrix::zeros(1 << kept_n, 1 << kept_n);
        for i in 0..dim {
            for j in 0..dim {
                if (i & drop_mask) == (j & drop_mask) {
                    let (oi, oj) = (extract(i), extract(j));
                    let v = out.get(oi, oj) + self.matrix.get(i, j);
                    out.set(oi, oj, v);
                }
            }
        }
        Self::from_matrix_checked(kept_n, out)
    }

    /// `Tr(rho^2)`; 1 for pure states, `1/2^n` for the maximally mixed one.
    pub fn purity(&self) -> T {
        // Hermitian, so Tr(rho^2) is the squared Frobenius norm.
        self.matrix
            .entries()
            .iter()
            .fold(T::zero(), |s, z| s + z.norm_sqr())
    }

    /// Conjugate by a same-size operator: `U rho U^dagger`. Preserves the
    /// density-matrix invariants when `U` is unitary.
    pub fn conjugate_by(&self, op: &ComplexMatrix<T>) -> Result<Self> {
        let m = op.matmul(&self.matrix)?.matmul(&op.dagger())?;
        Self::from_matrix_checked(self.num_qubits, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_state, computational_state};

    #[test]
    fn pure_projector_basics() {
        let rho = DensityMatrix::from_pure(&computational_state::<f64>(1, 1).unwrap());
        assert_eq!(rho.matrix().get(0, 0).re, 1.0);
        assert_eq!(rho.matrix().get(1, 1).re, 0.0);
        assert!((rho.purity() - 1.0).abs() < 1e-14);

        let b1 = DensityMatrix::from_pure(&bell_state::<f64>(3, 1).unwrap());
        assert_eq!(b1.dim(), 8);
        assert!((b1.matrix().trace().re - 1.0).abs() < 1e-14);
        assert!((b1.purity() - 1.0).abs() < 1e-12);

        let b41 = DensityMatrix::from_pure(&bell_state::<f64>(4, 1).unwrap());
        assert_eq!(b41.dim(), 16);
        assert!((b41.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn traced_bell_state_matches_table() {
        // Tr_C |B1><B1| = (1/4) [[1,0,0,-1],[0,1,1,0],[0,1,1,0],[-1,0,0,1]]
        let rho = DensityMatrix::from_pure(&bell_state::<f64>(3, 1).unwrap());
        let reduced = rho.partial_trace(&[3]).unwrap();
        #[rustfmt::skip]
        let expected = ComplexMatrix::from_parts(4, 4, &[
            (0.25, 0.0), (0.0, 0.0), (0.0, 0.0), (-0.25, 0.0),
            (0.0, 0.0), (0.25, 0.0), (0.25, 0.0), (0.0, 0.0),
            (0.0, 0.0), (0.25, 0.0), (0.25, 0.0), (0.0, 0.0),
            (-0.25, 0.0), (0.0, 0.0), (0.0, 0.0), (0.25, 0.0),
        ]).unwrap();
        assert!(reduced.matrix().max_abs_diff(&expected) < 1e-15);
        assert!((reduced.purity() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn four_qubit_trace_down_to_pair() {
        let rho = DensityMatrix::from_pure(&bell_state::<f64>(4, 1).unwrap());
        let pair = rho.partial_trace(&[3, 4]).unwrap();
        let direct = DensityMatrix::from_pure(&bell_state::<f64>(3, 1).unwrap())
            .partial_trace(&[3])
            .unwrap();
        assert!(pair.matrix().max_abs_diff(direct.matrix()) < 1e-14);
    }

    #[test]
    fn staged_trace_equals_joint() {
        let rho = DensityMatrix::from_pure(&bell_state::<f64>(4, 6).unwrap());
        let staged = rho.partial_trace(&[4]).unwrap().partial_trace(&[3]).unwrap();
        let joint = rho.partial_trace(&[3, 4]).unwrap();
        assert!(staged.matrix().max_abs_diff(joint.matrix()) < 1e-12);
    }

    #[test]
    fn product_state_trace_returns_factor() {
        let a = DensityMatrix::from_pure(&bell_state::<f64>(2, 2).unwrap());
        let b = DensityMatrix::from_pure(&computational_state::<f64>(1, 2).unwrap());
        let prod = a.matrix().kron(b.matrix()).unwrap();
        let rho = DensityMatrix::from_matrix_checked(3, prod).unwrap();
        let reduced = rho.partial_trace(&[3]).unwrap();
        assert!(reduced.matrix().max_abs_diff(a.matrix()) < 1e-14);
    }

    #[test]
    fn trace_set_validation() {
        let rho = DensityMatrix::from_pure(&bell_state::<f64>(3, 1).unwrap());
        assert!(matches!(rho.partial_trace(&[]), Err(Error::InvalidTraceSet)));
        assert!(matches!(rho.partial_trace(&[1, 2, 3]), Err(Error::InvalidTraceSet)));
        assert!(matches!(
            rho.partial_trace(&[4]),
            Err(Error::QubitOutOfRange { qubit: 4, num_qubits: 3 })
        ));
        // duplicates collapse to set semantics
        let dup = rho.partial_trace(&[3, 3]).unwrap();
        assert_eq!(dup.num_qubits(), 2);
    }

    #[test]
    fn try_new_validates() {
        let ok = DensityMatrix::try_new(1, ComplexMatrix::identity(2).scale_re(0.5));
        assert!(ok.is_ok());

        let bad_trace = DensityMatrix::try_new(1, ComplexMatrix::<f64>::identity(2));
        assert!(matches!(bad_trace, Err(Error::NotUnitTrace { .. })));

        let not_psd = ComplexMatrix::<f64>::from_parts(
            2,
            2,
            &[(1.5, 0.0), (0.0, 0.0), (0.0, 0.0), (-0.5, 0.0)],
        )
        .unwrap();
        assert!(matches!(
            DensityMatrix::try_new(1, not_psd),
            Err(Error::NotPositiveSemidefinite { .. })
        ));

        let not_herm = ComplexMatrix::<f64>::from_parts(
            2,
            2,
            &[(0.5, 0.0), (0.3, 0.0), (0.0, 0.0), (0.5, 0.0)],
        )
        .unwrap();
        assert!(matches!(
            DensityMatrix::try_new(1, not_herm),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn maximally_mixed_purity() {
        let rho = DensityMatrix::<f64>::maximally_mixed(2);
        assert!((rho.purity() - 0.25).abs() < 1e-14);
    }
}
