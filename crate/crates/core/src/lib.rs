//! Braid-group generated Bell bases and their correlation structure.
//!
//! The crate builds the B_n braid-group representation in which every
//! generator is the universal two-qubit entangling gate R acting on an
//! adjacent pair, produces the general n-qubit Bell bases by applying the
//! generator product to the computational basis, and analyzes the
//! resulting states: partial traces, concurrence, the positive partial
//! transpose separability test, and full Hilbert-Schmidt decompositions
//! into Pauli-string coefficients.
//!
//! All numerics are generic over the real scalar ([`Scalar`]: `f32` or
//! `f64`); the aliases at the crate root fix the default `f64` precision.
//!
//! Conventions used throughout:
//! - qubit A is the leftmost tensor factor and the most significant bit
//!   of a basis index; qubit labels are 1-based (1 = A);
//! - generator `sigma_i` couples qubits i and i+1 (1-based);
//! - a braid word written left to right denotes the operator product in
//!   that order, so the rightmost letter acts on the state first;
//! - Pauli axes 1, 2, 3 are X, Y, Z.

pub mod braid;
pub mod config;
pub mod density;
pub mod entanglement;
pub mod error;
pub mod hs;
pub mod pauli;
pub mod scalar;
pub mod states;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use braid::BraidWord;
pub use density::DensityMatrix;
pub use hs::{HsCoefficients, PauliLabel};
pub use pauli::Pauli;
pub use tensor::{ComplexMatrix, HermitianEigen, StateVector};

/// Default-precision complex scalar.
pub type C64 = num_complex::Complex<f64>;

/// Default-precision matrix.
pub type Matrix = ComplexMatrix<f64>;
/// Default-precision pure state.
pub type State = StateVector<f64>;
/// Default-precision density matrix.
pub type Density = DensityMatrix<f64>;
/// Default-precision Hilbert-Schmidt coefficient table.
pub type Coefficients = HsCoefficients<f64>;

/// Single-precision variants, mainly useful to check tolerance scaling.
pub type Matrix32 = ComplexMatrix<f32>;
pub type State32 = StateVector<f32>;
