//! Dense complex linear algebra: matrices, state vectors, Hermitian
//! eigendecomposition and the PSD square root.

mod eigen;
mod matrix;
mod state;

pub use eigen::HermitianEigen;
pub use matrix::ComplexMatrix;
pub use state::StateVector;
