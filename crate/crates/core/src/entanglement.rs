//! Concurrence and positive-partial-transpose analysis of two-qubit
//! states, plus the survey that applies both to every two-qubit reduction
//! of a larger state.

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::scalar::Scalar;
use crate::tensor::{ComplexMatrix, StateVector};

fn require_two_qubits(found: usize) -> Result<()> {
    if found != 2 {
        return Err(Error::QubitCountMismatch { expected: 2, found });
    }
    Ok(())
}

fn sigma_y_pair<T: Scalar>() -> ComplexMatrix<T> {
    Pauli::Y
        .matrix::<T>()
        .kron(&Pauli::Y.matrix())
        .expect("4x4 within cap")
}

/// Spin flip of a two-qubit pure state: `(Y (x) Y) conj(psi)`.
pub fn spin_flip_state<T: Scalar>(psi: &StateVector<T>) -> Result<StateVector<T>> {
    require_two_qubits(psi.num_qubits())?;
    psi.conjugate().apply(&sigma_y_pair())
}

/// Concurrence of a two-qubit pure state: `|<psi|psi~>|`.
pub fn concurrence_pure<T: Scalar>(psi: &StateVector<T>) -> Result<T> {
    let flipped = spin_flip_state(psi)?;
    Ok(psi.inner(&flipped)?.norm())
}

/// Spin-flip density matrix `(Y (x) Y) conj(rho) (Y (x) Y)`.
pub fn spin_flip_density<T: Scalar>(rho: &DensityMatrix<T>) -> Result<DensityMatrix<T>> {
    require_two_qubits(rho.num_qubits())?;
    let yy = sigma_y_pair::<T>();
    let flipped = yy.matmul(&rho.matrix().conjugate())?.matmul(&yy)?;
    DensityMatrix::from_matrix_checked(2, flipped)
}

/// The square roots of the eigenvalues of `rho rho~` in decreasing order,
/// and the concurrence `max(l1 - l2 - l3 - l4, 0)` they determine.
#[derive(Debug, Clone)]
pub struct ConcurrenceResult<T: Scalar> {
    pub lambdas: [T; 4],
    pub concurrence: T,
}

/// Mixed-state concurrence of a two-qubit density matrix.
///
/// The eigenvalues of `rho rho~` are taken from the Hermitian similar
/// matrix `sqrt(rho) rho~ sqrt(rho)`, which shares its nonzero spectrum,
/// so only the Hermitian eigensolver is needed. Eigenvalues within the
/// PSD slack below zero are clamped before the square root.
pub fn concurrence_mixed<T: Scalar>(rho: &DensityMatrix<T>) -> Result<ConcurrenceResult<T>> {
    require_two_qubits(rho.num_qubits())?;
    let root = rho.matrix().sqrt_psd()?;
    let flipped = spin_flip_density(rho)?;
    let symmetric = root.matmul(flipped.matrix())?.matmul(&root)?;
    let eig = symmetric.hermitian_eigensystem()?;

    let mut lambdas = [T::zero(); 4];
    for (slot, &value) in eig.eigenvalues.iter().rev().enumerate() {
        if value < -T::TOL_PSD {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: value.to_f64().unwrap_or(f64::NAN),
            });
        }
        // values inside the slack are zero up to noise; rooting them
        // would amplify the noise to sqrt(eps)
        lambdas[slot] = if value <= T::TOL_PSD { T::zero() } else { value.sqrt() };
    }
    let gap = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    Ok(ConcurrenceResult {
        lambdas,
        concurrence: gap.max(T::zero()),
    })
}

/// Transpose the indices of one qubit (1-based label) of a density
/// matrix, leaving the others alone. The result is Hermitian but not
/// necessarily positive, so it is returned as a plain matrix.
pub fn partial_transpose<T: Scalar>(
    rho: &DensityMatrix<T>,
    qubit: usize,
) -> Result<ComplexMatrix<T>> {
    let n = rho.num_qubits();
    if qubit < 1 || qubit > n {
        return Err(Error::QubitOutOfRange { qubit, num_qubits: n });
    }
    let shift = n - qubit;
    let mask = 1usize << shift;
    let dim = rho.dim();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            // swap the chosen qubit's bit between row and column index
            let oi = (i & !mask) | (j & mask);
            let oj = (j & !mask) | (i & mask);
            out.set(oi, oj, rho.matrix().get(i, j));
        }
    }
    Ok(out)
}

/// Spectrum of the partial transpose of a two-qubit state and the
/// separability verdict it implies (necessary and sufficient at 2 qubits).
#[derive(Debug, Clone)]
pub struct PptResult<T: Scalar> {
    /// Eigenvalues in ascending order.
    pub eigenvalues: [T; 4],
    pub min_eigenvalue: T,
    pub is_ppt: bool,
}

/// Peres-Horodecki test of a two-qubit density matrix on the given qubit.
pub fn ppt_check<T: Scalar>(rho: &DensityMatrix<T>, qubit: usize) -> Result<PptResult<T>> {
    require_two_qubits(rho.num_qubits())?;
    let pt = partial_transpose(rho, qubit)?;
    let eig = pt.hermitian_eigensystem()?;
    let mut eigenvalues = [T::zero(); 4];
    eigenvalues.copy_from_slice(&eig.eigenvalues);
    let min_eigenvalue = eigenvalues[0];
    Ok(PptResult {
        eigenvalues,
        min_eigenvalue,
        is_ppt: min_eigenvalue >= -T::TOL_PSD,
    })
}

/// Concurrence and PPT outcome for one two-qubit reduction of a larger
/// state.
#[derive(Debug, Clone)]
pub struct ReductionCase<T: Scalar> {
    /// The two kept qubits (1-based, ascending).
    pub kept: (usize, usize),
    /// The traced-out qubits.
    pub dropped: Vec<usize>,
    pub lambdas: [T; 4],
    pub concurrence: T,
    pub pt_eigenvalues: [T; 4],
    pub is_ppt: bool,
}

/// Survey of every reduction of an n-qubit state (n >= 3) to two qubits.
#[derive(Debug, Clone)]
pub struct ReductionSurvey<T: Scalar> {
    pub cases: Vec<ReductionCase<T>>,
}

impl<T: Scalar> ReductionSurvey<T> {
    pub fn max_concurrence(&self) -> T {
        self.cases
            .iter()
            .fold(T::zero(), |m, c| m.max(c.concurrence))
    }

    pub fn min_pt_eigenvalue(&self) -> T {
        self.cases
            .iter()
            .fold(T::infinity(), |m, c| m.min(c.pt_eigenvalues[0]))
    }

    pub fn all_separable(&self) -> bool {
        self.cases.iter().all(|c| c.is_ppt)
    }
}

/// Trace an n-qubit pure state down to every qubit pair and analyze each
/// reduction with concurrence and the PPT test (on the second kept qubit).
pub fn reduction_survey<T: Scalar>(state: &StateVector<T>) -> Result<ReductionSurvey<T>> {
    let n = state.num_qubits();
    if n < 3 {
        return Err(Error::QubitCountOutOfRange { n, min: 3, max: crate::config::MAX_QUBITS });
    }
    let rho = DensityMatrix::from_pure(state);
    let mut cases = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let dropped: Vec<usize> = (1..=n).filter(|&q| q != a && q != b).collect();
            let reduced = rho.partial_trace(&dropped)?;
            let conc = concurrence_mixed(&reduced)?;
            let ppt = ppt_check(&reduced, 2)?;
            cases.push(ReductionCase {
                kept: (a, b),
                dropped,
                lambdas: conc.lambdas,
                concurrence: conc.concurrence,
                pt_eigenvalues: ppt.eigenvalues,
                is_ppt: ppt.is_ppt,
            });
        }
    }
    Ok(ReductionSurvey { cases })
}
