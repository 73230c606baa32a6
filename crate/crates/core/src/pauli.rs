//! Single-qubit Pauli operators.

use num_complex::Complex;

use crate::scalar::Scalar;
use crate::tensor::ComplexMatrix;

/// One factor of a Pauli string: the identity or one of the three Pauli
/// matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// Numeric code 0..=3 in the order I, X, Y, Z.
    pub fn code(self) -> usize {
        match self {
            Pauli::I => 0,
            Pauli::X => 1,
            Pauli::Y => 2,
            Pauli::Z => 3,
        }
    }

    pub fn from_code(code: usize) -> Option<Pauli> {
        Pauli::ALL.get(code).copied()
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Pauli> {
        match c.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    /// The 2x2 matrix of this operator.
    pub fn matrix<T: Scalar>(self) -> ComplexMatrix<T> {
        let zero = Complex::new(T::zero(), T::zero());
        let one = Complex::new(T::one(), T::zero());
        let i = Complex::new(T::zero(), T::one());
        let entries = match self {
            Pauli::I => vec![one, zero, zero, one],
            Pauli::X => vec![zero, one, one, zero],
            Pauli::Y => vec![zero, -i, i, zero],
            Pauli::Z => vec![one, zero, zero, -one],
        };
        ComplexMatrix::new(2, 2, entries).expect("2x2 entry count")
    }

    /// Sparse action on a basis ket: `P|bit> = phase |out_bit>`.
    /// Every Pauli maps a computational basis state to a single one.
    pub fn ket_action<T: Scalar>(self, bit: usize) -> (usize, Complex<T>) {
        let one = Complex::new(T::one(), T::zero());
        let i = Complex::new(T::zero(), T::one());
        match (self, bit) {
            (Pauli::I, b) => (b, one),
            (Pauli::X, b) => (1 - b, one),
            (Pauli::Y, 0) => (1, i),
            (Pauli::Y, _) => (0, -i),
            (Pauli::Z, 0) => (0, one),
            (Pauli::Z, _) => (1, -one),
        }
    }
}
