//! Computational and general Bell bases.
//!
//! The Bell basis of n qubits is the image of the computational basis
//! under the generator product `sigma_1 sigma_2 ... sigma_{n-1}`; state
//! indices are 1-based and carried over unchanged, so Bell state i is the
//! image of computational state i.

use num_complex::Complex;

use crate::braid::sigma;
use crate::config::MAX_QUBITS;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{ComplexMatrix, StateVector};

/// Which of the two bases a 1-based state index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Computational,
    Bell,
}

/// Computational basis state (1-based index): a single 1 at vector
/// position `index - 1`.
pub fn computational_state<T: Scalar>(n: usize, index: usize) -> Result<StateVector<T>> {
    if n > MAX_QUBITS {
        return Err(Error::QubitCountOutOfRange { n, min: 1, max: MAX_QUBITS });
    }
    let dim = 1usize << n;
    if index < 1 || index > dim {
        return Err(Error::IndexOutOfRange { index, max: dim });
    }
    StateVector::basis(n, index - 1)
}

/// The operator `sigma_1 . sigma_2 ... sigma_{n-1}` whose columns are the
/// Bell basis.
pub fn bell_generator<T: Scalar>(n: usize) -> Result<ComplexMatrix<T>> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCountOutOfRange { n, min: 2, max: MAX_QUBITS });
    }
    let mut product = sigma::<T>(1, n)?;
    for i in 2..n {
        product = product.matmul(&sigma(i, n)?)?;
    }
    Ok(product)
}

/// Bell state i (1-based): `(sigma_1 ... sigma_{n-1}) |C_i>`.
///
/// Applies the generators to the basis vector right to left instead of
/// forming the full operator product, which keeps single states cheap at
/// the qubit cap; [`bell_basis`] needs all the columns and pays for the
/// product once.
pub fn bell_state<T: Scalar>(n: usize, index: usize) -> Result<StateVector<T>> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCountOutOfRange { n, min: 2, max: MAX_QUBITS });
    }
    let dim = 1usize << n;
    if index < 1 || index > dim {
        return Err(Error::IndexOutOfRange { index, max: dim });
    }
    let mut state = StateVector::basis(n, index - 1)?;
    for i in (1..n).rev() {
        state = state.apply(&sigma(i, n)?)?;
    }
    Ok(state)
}

/// The full orthonormal Bell basis of n qubits.
pub fn bell_basis<T: Scalar>(n: usize) -> Result<Vec<StateVector<T>>> {
    let generator = bell_generator::<T>(n)?;
    let dim = 1usize << n;
    (0..dim)
        .map(|col| {
            let amplitudes = (0..dim).map(|row| generator.get(row, col)).collect();
            StateVector::new(n, amplitudes)
        })
        .collect()
}

/// State of the requested basis kind at a 1-based index.
pub fn basis_state_of_kind<T: Scalar>(
    kind: BasisKind,
    n: usize,
    index: usize,
) -> Result<StateVector<T>> {
    match kind {
        BasisKind::Computational => computational_state(n, index),
        BasisKind::Bell => bell_state(n, index),
    }
}

/// The three-qubit GHZ state `(|000> + |111>)/sqrt 2`.
pub fn ghz_state<T: Scalar>() -> StateVector<T> {
    let h = T::FRAC_1_SQRT_2();
    let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); 8];
    amplitudes[0] = Complex::new(h, T::zero());
    amplitudes[7] = Complex::new(h, T::zero());
    StateVector::new(3, amplitudes).expect("unit norm by construction")
}

/// Superposition profile of a Bell-type state: how many nonzero terms it
/// has and whether they share the expected magnitude `2^{-(n-1)/2}`.
#[derive(Debug, Clone)]
pub struct TermStructure<T: Scalar> {
    pub term_count: usize,
    pub expected_count: usize,
    pub magnitude: T,
    pub max_magnitude_deviation: T,
    pub uniform: bool,
}

/// Analyze the term structure of a state produced by [`bell_state`].
pub fn bell_term_structure<T: Scalar>(state: &StateVector<T>) -> TermStructure<T> {
    let n = state.num_qubits().max(1);
    let magnitude = T::of(2.0).powf(-T::of((n as f64 - 1.0) / 2.0));
    let terms = state.nonzero_terms(T::TOL_REPORT);
    let max_magnitude_deviation = terms
        .iter()
        .fold(T::zero(), |m, (_, z)| m.max((z.norm() - magnitude).abs()));
    TermStructure {
        term_count: terms.len(),
        expected_count: 1 << (n - 1),
        magnitude,
        max_magnitude_deviation,
        uniform: max_magnitude_deviation < T::TOL_ALGEBRA,
    }
}
