//! The universal R gate, the B_n generator representation built from it,
//! verification of the group relations, and braid words.

use std::fmt;

use num_complex::Complex;

use crate::config::MAX_QUBITS;
use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::scalar::Scalar;
use crate::tensor::{ComplexMatrix, StateVector};

/// The 4x4 universal entangling gate,
/// `(1/sqrt 2) [[1,0,0,1],[0,1,-1,0],[0,1,1,0],[-1,0,0,1]]`.
pub fn r_matrix<T: Scalar>() -> ComplexMatrix<T> {
    let h = T::FRAC_1_SQRT_2();
    let z = T::zero();
    #[rustfmt::skip]
    let signs = [
        ( h, z), ( z, z), ( z, z), ( h, z),
        ( z, z), ( h, z), (-h, z), ( z, z),
        ( z, z), ( h, z), ( h, z), ( z, z),
        (-h, z), ( z, z), ( z, z), ( h, z),
    ];
    let entries = signs.iter().map(|&(re, im)| Complex::new(re, im)).collect();
    ComplexMatrix::new(4, 4, entries).expect("4x4 entry count")
}

/// The same gate evaluated as `exp(i pi/4 X (x) Y)`; since
/// `(X (x) Y)^2 = I` the exponential reduces to
/// `cos(pi/4) I + i sin(pi/4) X (x) Y`.
pub fn r_matrix_exp_form<T: Scalar>() -> ComplexMatrix<T> {
    let angle = T::FRAC_PI_4();
    let xy = Pauli::X
        .matrix::<T>()
        .kron(&Pauli::Y.matrix())
        .expect("4x4 within cap");
    let cos_term = ComplexMatrix::identity(4).scale(Complex::new(angle.cos(), T::zero()));
    let sin_term = xy.scale(Complex::new(T::zero(), angle.sin()));
    cos_term.add(&sin_term).expect("same shape")
}

fn check_generator_args(i: usize, n: usize) -> Result<()> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCountOutOfRange { n, min: 2, max: MAX_QUBITS });
    }
    if i < 1 || i > n - 1 {
        return Err(Error::GeneratorOutOfRange { index: i, max: n - 1 });
    }
    Ok(())
}

/// B_n generator `sigma_i` on n qubits: identity factors everywhere except
/// the R gate on the adjacent pair (i, i+1), qubit 1 = A leftmost.
pub fn sigma<T: Scalar>(i: usize, n: usize) -> Result<ComplexMatrix<T>> {
    check_generator_args(i, n)?;
    let mut out = ComplexMatrix::identity(1);
    let mut slot = 1;
    while slot <= n {
        if slot == i {
            out = out.kron(&r_matrix())?;
            slot += 2;
        } else {
            out = out.kron(&ComplexMatrix::identity(2))?;
            slot += 1;
        }
    }
    Ok(out)
}

/// `sigma_i` assembled from its Pauli-product form
/// `(1/sqrt 2)(I..I) + (i/sqrt 2)(I.. X_i Y_{i+1} ..I)`;
/// equal to [`sigma`] to rounding error.
pub fn sigma_pauli_form<T: Scalar>(i: usize, n: usize) -> Result<ComplexMatrix<T>> {
    check_generator_args(i, n)?;
    let mut string = ComplexMatrix::identity(1);
    for slot in 1..=n {
        let factor = if slot == i {
            Pauli::X.matrix()
        } else if slot == i + 1 {
            Pauli::Y.matrix()
        } else {
            ComplexMatrix::identity(2)
        };
        string = string.kron(&factor)?;
    }
    let h = T::FRAC_1_SQRT_2();
    let id_term = ComplexMatrix::identity(1 << n).scale(Complex::new(h, T::zero()));
    let pauli_term = string.scale(Complex::new(T::zero(), h));
    id_term.add(&pauli_term)
}

/// Outcome of checking `sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}`
/// for every adjacent generator pair.
#[derive(Debug, Clone)]
pub struct YangBaxterReport<T: Scalar> {
    /// Per adjacent pair (i, i+1): max entrywise deviation.
    pub pair_deviations: Vec<((usize, usize), T)>,
    pub max_deviation: T,
    pub holds: bool,
}

/// Verify the Yang-Baxter relation on all adjacent generator pairs of B_n.
pub fn check_yang_baxter<T: Scalar>(n: usize) -> Result<YangBaxterReport<T>> {
    if !(3..=MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCountOutOfRange { n, min: 3, max: MAX_QUBITS });
    }
    let gens: Vec<ComplexMatrix<T>> = (1..n).map(|i| sigma(i, n)).collect::<Result<_>>()?;
    let mut pair_deviations = Vec::new();
    let mut max_deviation = T::zero();
    for i in 0..gens.len() - 1 {
        let a = &gens[i];
        let b = &gens[i + 1];
        let lhs = a.matmul(b)?.matmul(a)?;
        let rhs = b.matmul(a)?.matmul(b)?;
        let dev = lhs.max_abs_diff(&rhs);
        max_deviation = max_deviation.max(dev);
        pair_deviations.push(((i + 1, i + 2), dev));
    }
    Ok(YangBaxterReport {
        pair_deviations,
        max_deviation,
        holds: max_deviation < T::TOL_ALGEBRA,
    })
}

/// One Artin group relation instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `sigma_i sigma_j = sigma_j sigma_i` for `|i-j| > 1`.
    FarCommutation(usize, usize),
    /// `sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j` for `|i-j| = 1`.
    Braid(usize, usize),
    /// `sigma_i sigma_i^{-1} = I` with the inverse taken as the adjoint.
    Inverse(usize),
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::FarCommutation(i, j) => write!(f, "s{i} s{j} = s{j} s{i}"),
            Relation::Braid(i, j) => write!(f, "s{i} s{j} s{i} = s{j} s{i} s{j}"),
            Relation::Inverse(i) => write!(f, "s{i} s{i}^-1 = I"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationCheck<T: Scalar> {
    pub relation: Relation,
    pub deviation: T,
}

/// Outcome of checking every defining relation of B_n in this
/// representation.
#[derive(Debug, Clone)]
pub struct BraidRelationReport<T: Scalar> {
    pub num_qubits: usize,
    pub checks: Vec<RelationCheck<T>>,
    pub max_deviation: T,
    pub holds: bool,
}

/// Check far commutation, the braid relation, and invertibility for all
/// generators of B_n. For n = 2 only invertibility applies.
pub fn check_braid_relations<T: Scalar>(n: usize) -> Result<BraidRelationReport<T>> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCountOutOfRange { n, min: 2, max: MAX_QUBITS });
    }
    let gens: Vec<ComplexMatrix<T>> = (1..n).map(|i| sigma(i, n)).collect::<Result<_>>()?;
    let identity = ComplexMatrix::identity(1 << n);
    let mut checks = Vec::new();

    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let (a, b) = (&gens[i], &gens[j]);
            if j - i > 1 {
                let dev = a.matmul(b)?.max_abs_diff(&b.matmul(a)?);
                checks.push(RelationCheck {
                    relation: Relation::FarCommutation(i + 1, j + 1),
                    deviation: dev,
                });
            } else {
                let lhs = a.matmul(b)?.matmul(a)?;
                let rhs = b.matmul(a)?.matmul(b)?;
                checks.push(RelationCheck {
                    relation: Relation::Braid(i + 1, j + 1),
                    deviation: lhs.max_abs_diff(&rhs),
                });
            }
        }
    }
    for (i, g) in gens.iter().enumerate() {
        let dev = g.matmul(&g.dagger())?.max_abs_diff(&identity);
        checks.push(RelationCheck {
            relation: Relation::Inverse(i + 1),
            deviation: dev,
        });
    }

    let max_deviation = checks
        .iter()
        .fold(T::zero(), |m, c| m.max(c.deviation));
    Ok(BraidRelationReport {
        num_qubits: n,
        holds: max_deviation < T::TOL_ALGEBRA,
        checks,
        max_deviation,
    })
}

/// Letter of a braid word: a generator index with an optional inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word over the generators of B_n.
///
/// The textual form `"s1 s2"` denotes the operator product
/// `sigma_1 . sigma_2`, which acts on a state with `sigma_2` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    num_qubits: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(num_qubits: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if !(2..=MAX_QUBITS).contains(&num_qubits) {
            return Err(Error::QubitCountOutOfRange { n: num_qubits, min: 2, max: MAX_QUBITS });
        }
        for letter in &letters {
            if letter.generator < 1 || letter.generator > num_qubits - 1 {
                return Err(Error::GeneratorOutOfRange {
                    index: letter.generator,
                    max: num_qubits - 1,
                });
            }
        }
        Ok(Self { num_qubits, letters })
    }

    /// Parse the grammar `word := term (whitespace term)*`,
    /// `term := "s" INTEGER ("^-1")?`. Errors carry the byte offset.
    pub fn parse(text: &str, num_qubits: usize) -> Result<Self> {
        if !(2..=MAX_QUBITS).contains(&num_qubits) {
            return Err(Error::QubitCountOutOfRange { n: num_qubits, min: 2, max: MAX_QUBITS });
        }
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if bytes[pos] != b's' {
                return Err(Error::BraidSyntax {
                    offset: pos,
                    message: format!("expected generator 's', found {:?}", bytes[pos] as char),
                });
            }
            pos += 1;
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                return Err(Error::BraidSyntax {
                    offset: digits_start,
                    message: "expected generator index after 's'".into(),
                });
            }
            let generator: usize =
                text[digits_start..pos].parse().map_err(|_| Error::BraidSyntax {
                    offset: digits_start,
                    message: "generator index does not fit in usize".into(),
                })?;
            if generator < 1 || generator > num_qubits - 1 {
                return Err(Error::GeneratorOutOfRange {
                    index: generator,
                    max: num_qubits - 1,
                });
            }
            let mut inverse = false;
            if pos < bytes.len() && bytes[pos] == b'^' {
                let exp = &bytes[pos..];
                if exp.len() >= 3 && &exp[..3] == b"^-1" {
                    inverse = true;
                    pos += 3;
                } else {
                    return Err(Error::BraidSyntax {
                        offset: pos,
                        message: "only exponent ^-1 is supported".into(),
                    });
                }
            }
            if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                return Err(Error::BraidSyntax {
                    offset: pos,
                    message: format!("unexpected character {:?} in term", bytes[pos] as char),
                });
            }
            letters.push(BraidLetter { generator, inverse });
        }
        Ok(Self { num_qubits, letters })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Apply the word to a state. The letters form an operator product in
    /// textual order, so they are applied to the state right to left;
    /// inverses use the adjoint of the (unitary) generator.
    pub fn apply<T: Scalar>(&self, state: &StateVector<T>) -> Result<StateVector<T>> {
        if state.num_qubits() != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                expected: self.num_qubits,
                found: state.num_qubits(),
            });
        }
        let mut current = state.clone();
        for letter in self.letters.iter().rev() {
            let mut op = sigma(letter.generator, self.num_qubits)?;
            if letter.inverse {
                op = op.dagger();
            }
            current = current.apply(&op)?;
        }
        Ok(current)
    }

    /// The full `2^n x 2^n` operator the word denotes.
    pub fn operator<T: Scalar>(&self) -> Result<ComplexMatrix<T>> {
        let mut out = ComplexMatrix::identity(1 << self.num_qubits);
        for letter in &self.letters {
            let mut op = sigma(letter.generator, self.num_qubits)?;
            if letter.inverse {
                op = op.dagger();
            }
            out = out.matmul(&op)?;
        }
        Ok(out)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", letter.generator)?;
            if letter.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::computational_state;

    #[test]
    fn r_matrix_pinned_entries() {
        let r = r_matrix::<f64>();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(r.get(0, 0).re, h);
        assert_eq!(r.get(3, 0).re, -h);
        assert_eq!(r.get(1, 2).re, -h);
        assert_eq!(r.get(2, 1).re, h);
        assert!(r.unitarity_deviation().unwrap() < 1e-15);
    }

    #[test]
    fn r_matrix_action_on_00() {
        let state = StateVector::<f64>::basis(2, 0).unwrap();
        let out = state.apply(&r_matrix()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((out.get(0).re - h).abs() < 1e-15);
        assert!((out.get(3).re + h).abs() < 1e-15);
        assert!(out.get(1).norm() < 1e-15 && out.get(2).norm() < 1e-15);
    }

    #[test]
    fn exponential_form_equals_r() {
        let dev = r_matrix_exp_form::<f64>().max_abs_diff(&r_matrix());
        assert!(dev < 1e-14, "deviation {dev}");
    }

    #[test]
    fn sigma_placements() {
        let r = r_matrix::<f64>();
        let i2 = ComplexMatrix::identity(2);
        assert!(sigma::<f64>(1, 2).unwrap().max_abs_diff(&r) == 0.0);
        assert!(sigma::<f64>(1, 3).unwrap().max_abs_diff(&r.kron(&i2).unwrap()) == 0.0);
        assert!(sigma::<f64>(2, 3).unwrap().max_abs_diff(&i2.kron(&r).unwrap()) == 0.0);
        let expected = i2.kron(&i2).unwrap().kron(&r).unwrap();
        assert!(sigma::<f64>(3, 4).unwrap().max_abs_diff(&expected) == 0.0);
    }

    #[test]
    fn sigma_rejects_bad_args() {
        assert!(matches!(sigma::<f64>(2, 2), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(sigma::<f64>(0, 3), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(sigma::<f64>(1, 1), Err(Error::QubitCountOutOfRange { .. })));
        assert!(matches!(sigma::<f64>(1, 99), Err(Error::QubitCountOutOfRange { .. })));
    }

    #[test]
    fn pauli_form_matches_sigma() {
        for n in 2..=6 {
            for i in 1..n {
                let dev = sigma_pauli_form::<f64>(i, n)
                    .unwrap()
                    .max_abs_diff(&sigma(i, n).unwrap());
                assert!(dev < 1e-14, "sigma({i},{n}) deviation {dev}");
            }
        }
    }

    #[test]
    fn yang_baxter_holds() {
        for n in [3, 4, 6] {
            let report = check_yang_baxter::<f64>(n).unwrap();
            assert!(report.holds, "n={n}");
            assert!(report.max_deviation < 1e-12);
            assert_eq!(report.pair_deviations.len(), n - 2);
        }
        assert!(check_yang_baxter::<f64>(2).is_err());
    }

    #[test]
    fn braid_relations_n2_through_n5() {
        let r2 = check_braid_relations::<f64>(2).unwrap();
        assert!(r2.holds);
        assert_eq!(r2.checks.len(), 1);
        assert_eq!(r2.checks[0].relation, Relation::Inverse(1));

        let r4 = check_braid_relations::<f64>(4).unwrap();
        assert!(r4.holds);
        assert!(r4
            .checks
            .iter()
            .any(|c| c.relation == Relation::FarCommutation(1, 3) && c.deviation < 1e-12));

        let r5 = check_braid_relations::<f64>(5).unwrap();
        assert!(r5.holds);
        let fars = r5.checks.iter().filter(|c| matches!(c.relation, Relation::FarCommutation(..))).count();
        let braids = r5.checks.iter().filter(|c| matches!(c.relation, Relation::Braid(..))).count();
        let invs = r5.checks.iter().filter(|c| matches!(c.relation, Relation::Inverse(..))).count();
        assert_eq!((fars, braids, invs), (3, 3, 4));
    }

    #[test]
    fn parse_valid_words() {
        let w = BraidWord::parse("s1 s2", 3).unwrap();
        assert_eq!(
            w.letters(),
            &[
                BraidLetter { generator: 1, inverse: false },
                BraidLetter { generator: 2, inverse: false }
            ]
        );
        let w = BraidWord::parse("s1 s2 s3", 4).unwrap();
        assert_eq!(w.letters().len(), 3);
        let w = BraidWord::parse("  s2^-1   s1 ", 3).unwrap();
        assert_eq!(
            w.letters(),
            &[
                BraidLetter { generator: 2, inverse: true },
                BraidLetter { generator: 1, inverse: false }
            ]
        );
        assert_eq!(w.to_string(), "s2^-1 s1");
        assert!(BraidWord::parse("", 3).unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_position() {
        match BraidWord::parse("s1 t2", 3) {
            Err(Error::BraidSyntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match BraidWord::parse("s4", 3) {
            Err(Error::GeneratorOutOfRange { index: 4, max: 2 }) => {}
            other => panic!("expected range error, got {other:?}"),
        }
        match BraidWord::parse("s1^2", 3) {
            Err(Error::BraidSyntax { offset: 2, .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        match BraidWord::parse("s", 3) {
            Err(Error::BraidSyntax { offset: 1, .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let state = computational_state::<f64>(3, 5).unwrap();
        let out = BraidWord::parse("", 3).unwrap().apply(&state).unwrap();
        assert_eq!(out, state);
    }

    #[test]
    fn inverse_cancels() {
        let state = computational_state::<f64>(3, 3).unwrap();
        let word = BraidWord::parse("s1 s1^-1", 3).unwrap();
        let out = word.apply(&state).unwrap();
        for k in 0..8 {
            assert!((out.get(k) - state.get(k)).norm() < 1e-14);
        }
    }

    #[test]
    fn word_mismatch_rejected() {
        let state = computational_state::<f64>(4, 1).unwrap();
        let word = BraidWord::parse("s1", 3).unwrap();
        assert!(matches!(word.apply(&state), Err(Error::QubitCountMismatch { .. })));
    }
}
