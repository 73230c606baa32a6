//! Scalar bounds for the real type underlying all complex arithmetic.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar type the whole crate is generic over: `f32` or `f64`.
///
/// The associated constants are the numerical tolerances used by validating
/// constructors and verification routines. They are precision-dependent:
/// the `f64` values are the reference ones, the `f32` values are scaled so
/// that the same invariants remain checkable in single precision.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Entrywise tolerance for construction and algebra checks
    /// (trace normalization, state norm, golden-matrix comparisons).
    const TOL_ALGEBRA: Self;
    /// Tightest tolerance, used for operator identities that hold to
    /// rounding error (Pauli-product expansions of the braid generators).
    const TOL_EXPANSION: Self;
    /// Allowed deviation from Hermitian symmetry.
    const TOL_HERMITICITY: Self;
    /// Allowed residual in eigen-decompositions (`H v - lambda v`).
    const TOL_EIGEN: Self;
    /// Slack below zero accepted for eigenvalues of nominally PSD matrices.
    const TOL_PSD: Self;
    /// Default threshold for reporting a coefficient or amplitude as nonzero.
    const TOL_REPORT: Self;

    /// Lossless-enough conversion from an `f64` literal.
    fn of(value: f64) -> Self {
        Self::from_f64(value).expect("f64 constant representable in scalar type")
    }
}

impl Scalar for f64 {
    const TOL_ALGEBRA: Self = 1e-12;
    const TOL_EXPANSION: Self = 1e-14;
    const TOL_HERMITICITY: Self = 1e-10;
    const TOL_EIGEN: Self = 1e-9;
    const TOL_PSD: Self = 1e-10;
    const TOL_REPORT: Self = 1e-9;
}

impl Scalar for f32 {
    const TOL_ALGEBRA: Self = 1e-5;
    const TOL_EXPANSION: Self = 1e-6;
    const TOL_HERMITICITY: Self = 1e-5;
    const TOL_EIGEN: Self = 1e-4;
    const TOL_PSD: Self = 1e-5;
    const TOL_REPORT: Self = 1e-4;
}
