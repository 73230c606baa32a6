//! Size caps and iteration limits.
//!
//! The defaults keep every operation comfortably inside desk-scale memory
//! and runtime. Operations that can outgrow them take an explicit
//! `*_with_cap` variant; exceeding a cap yields [`crate::Error::TooLarge`].

/// Default cap on qubit count for state and operator generation.
pub const MAX_QUBITS: usize = 10;

/// Default cap on a single matrix axis (`2^MAX_QUBITS`).
pub const MAX_DIM: usize = 1 << MAX_QUBITS;

/// Default cap on qubit count for a full Hilbert-Schmidt decomposition.
/// The decomposition has `4^n` coefficients, each an `O(2^n)` trace.
pub const HS_MAX_QUBITS: usize = 5;

/// Sweep limit for the cyclic Jacobi eigensolver. Convergence is
/// quadratic once rotations get small; well-conditioned Hermitian
/// matrices at our sizes settle in under ten sweeps.
pub const JACOBI_MAX_SWEEPS: usize = 50;
