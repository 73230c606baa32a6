//! Hilbert-Schmidt decomposition of density matrices into Pauli-string
//! coefficients `c_L = Tr(rho P_L)`, classification of the coefficients
//! by how many qubits ("arms" of a measurement device) each string
//! touches, and reconstruction.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::config::{HS_MAX_QUBITS, MAX_QUBITS};
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::scalar::Scalar;
use crate::tensor::ComplexMatrix;

/// A Pauli string: one factor per qubit, qubit A first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliLabel {
    paulis: Vec<Pauli>,
}

impl PauliLabel {
    pub fn new(paulis: Vec<Pauli>) -> Self {
        Self { paulis }
    }

    /// Decode from the base-4 integer with qubit A as the most
    /// significant digit.
    pub fn from_code(num_qubits: usize, code: usize) -> Self {
        let paulis = (0..num_qubits)
            .map(|q| {
                let digit = (code >> (2 * (num_qubits - 1 - q))) & 0b11;
                Pauli::from_code(digit).expect("two-bit digit")
            })
            .collect();
        Self { paulis }
    }

    pub fn code(&self) -> usize {
        self.paulis.iter().fold(0, |acc, p| (acc << 2) | p.code())
    }

    pub fn num_qubits(&self) -> usize {
        self.paulis.len()
    }

    pub fn paulis(&self) -> &[Pauli] {
        &self.paulis
    }

    /// Number of non-identity factors; the paper's "arm count".
    pub fn weight(&self) -> usize {
        self.paulis.iter().filter(|p| **p != Pauli::I).count()
    }

    /// 1-based labels of the qubits with a non-identity factor.
    pub fn arms(&self) -> Vec<usize> {
        self.paulis
            .iter()
            .enumerate()
            .filter(|(_, p)| **p != Pauli::I)
            .map(|(q, _)| q + 1)
            .collect()
    }

    /// Dense matrix of the string: the Kronecker product of its factors
    /// in qubit order. Hermitian and unitary; traceless unless all
    /// factors are the identity.
    pub fn matrix<T: Scalar>(&self) -> Result<ComplexMatrix<T>> {
        let mut out = ComplexMatrix::identity(1);
        for p in &self.paulis {
            out = out.kron(&p.matrix())?;
        }
        Ok(out)
    }

    /// Sparse action on a basis ket: every Pauli string maps `|j>` to a
    /// single basis ket with a phase.
    fn ket_action<T: Scalar>(&self, index: usize) -> (usize, Complex<T>) {
        let n = self.paulis.len();
        let mut out = 0usize;
        let mut phase = Complex::new(T::one(), T::zero());
        for (q, p) in self.paulis.iter().enumerate() {
            let bit = (index >> (n - 1 - q)) & 1;
            let (new_bit, factor) = p.ket_action::<T>(bit);
            out |= new_bit << (n - 1 - q);
            phase = phase * factor;
        }
        (out, phase)
    }
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.paulis {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

impl FromStr for PauliLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let paulis = s
            .chars()
            .map(|c| {
                Pauli::from_letter(c).ok_or_else(|| Error::BraidSyntax {
                    offset: 0,
                    message: format!("invalid Pauli letter {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { paulis })
    }
}

/// Dense matrix of a Pauli string (free-function form of
/// [`PauliLabel::matrix`]).
pub fn pauli_string_matrix<T: Scalar>(label: &PauliLabel) -> Result<ComplexMatrix<T>> {
    label.matrix()
}

/// The real coefficient `c_L = Tr(rho P_L)` for every Pauli string `L`,
/// stored flat and indexed by the label's base-4 code.
#[derive(Debug, Clone, PartialEq)]
pub struct HsCoefficients<T: Scalar> {
    num_qubits: usize,
    coeffs: Vec<T>,
}

/// Decompose a density matrix over the Pauli-string basis, capped at
/// [`HS_MAX_QUBITS`] since the table has `4^n` entries.
pub fn hs_decompose<T: Scalar>(rho: &DensityMatrix<T>) -> Result<HsCoefficients<T>> {
    hs_decompose_with_cap(rho, HS_MAX_QUBITS)
}

pub fn hs_decompose_with_cap<T: Scalar>(
    rho: &DensityMatrix<T>,
    cap: usize,
) -> Result<HsCoefficients<T>> {
    let n = rho.num_qubits();
    if n > cap.min(MAX_QUBITS) {
        return Err(Error::TooLarge { dim: n, cap: cap.min(MAX_QUBITS) });
    }
    let dim = 1usize << n;
    let mut coeffs = Vec::with_capacity(1 << (2 * n));
    for code in 0..1usize << (2 * n) {
        let label = PauliLabel::from_code(n, code);
        // Tr(rho P) = sum_j rho[j, m(j)] phase(j) where P|j> = phase |m(j)>.
        let mut sum = Complex::new(T::zero(), T::zero());
        for j in 0..dim {
            let (m, phase) = label.ket_action::<T>(j);
            sum = sum + rho.matrix().get(j, m) * phase;
        }
        if sum.im.abs() > T::TOL_HERMITICITY {
            return Err(Error::NonRealCoefficient {
                label: label.to_string(),
                imaginary: sum.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        debug_assert!(sum.re.abs() <= T::one() + T::TOL_PSD);
        coeffs.push(sum.re);
    }
    if (coeffs[0] - T::one()).abs() > T::TOL_ALGEBRA {
        return Err(Error::NotUnitTrace {
            trace: coeffs[0].to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(HsCoefficients { num_qubits: n, coeffs })
}

impl<T: Scalar> HsCoefficients<T> {
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, label: &PauliLabel) -> T {
        self.coeffs[label.code()]
    }

    pub fn get_code(&self, code: usize) -> T {
        self.coeffs[code]
    }

    /// Coefficient at a label given as letters, e.g. `"IYY"`; test and
    /// report helper.
    pub fn at(&self, letters: &str) -> T {
        let label: PauliLabel = letters.parse().expect("valid Pauli letters");
        assert_eq!(label.num_qubits(), self.num_qubits, "label length");
        self.get(&label)
    }

    /// All labels with their coefficients, in code (weight-agnostic
    /// lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (PauliLabel, T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(code, &c)| (PauliLabel::from_code(self.num_qubits, code), c))
    }

    /// Coefficients with `|c| > tol`, sorted by weight then label.
    pub fn nonzero(&self, tol: T) -> Vec<(PauliLabel, T)> {
        let mut out: Vec<(PauliLabel, T)> = self
            .iter()
            .filter(|(_, c)| c.abs() > tol)
            .collect();
        out.sort_by_key(|(label, _)| (label.weight(), label.code()));
        out
    }

    /// `sum_L c_L^2`; equals `2^n Tr(rho^2)`, so `2^n` for pure states.
    pub fn parseval_sum(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |s, &c| s + c * c)
    }

    /// The three coefficients with a single non-identity axis on `qubit`
    /// (1-based), ordered X, Y, Z. For three qubits these are the
    /// one-arm parameter vectors of qubits A, B, C.
    pub fn one_arm_vector(&self, qubit: usize) -> Result<[T; 3]> {
        self.check_qubit(qubit)?;
        let mut out = [T::zero(); 3];
        for (slot, axis) in [Pauli::X, Pauli::Y, Pauli::Z].into_iter().enumerate() {
            out[slot] = self.get(&self.axis_label(&[(qubit, axis)]));
        }
        Ok(out)
    }

    /// The 3x3 block of coefficients on a pair of distinct qubits, rows
    /// indexed by the axis on `qubit_a`, columns by the axis on `qubit_b`.
    pub fn two_arm_matrix(&self, qubit_a: usize, qubit_b: usize) -> Result<[[T; 3]; 3]> {
        self.check_qubit(qubit_a)?;
        self.check_qubit(qubit_b)?;
        if qubit_a == qubit_b {
            return Err(Error::QubitOutOfRange { qubit: qubit_b, num_qubits: self.num_qubits });
        }
        let axes = [Pauli::X, Pauli::Y, Pauli::Z];
        let mut out = [[T::zero(); 3]; 3];
        for (i, &a) in axes.iter().enumerate() {
            for (j, &b) in axes.iter().enumerate() {
                out[i][j] = self.get(&self.axis_label(&[(qubit_a, a), (qubit_b, b)]));
            }
        }
        Ok(out)
    }

    /// The full-weight 3x3x3 coefficient tensor of a three-qubit state.
    pub fn three_arm_tensor(&self) -> Result<[[[T; 3]; 3]; 3]> {
        if self.num_qubits != 3 {
            return Err(Error::QubitCountMismatch { expected: 3, found: self.num_qubits });
        }
        let axes = [Pauli::X, Pauli::Y, Pauli::Z];
        let mut out = [[[T::zero(); 3]; 3]; 3];
        for (i, &a) in axes.iter().enumerate() {
            for (j, &b) in axes.iter().enumerate() {
                for (k, &c) in axes.iter().enumerate() {
                    out[i][j][k] = self.get(&self.axis_label(&[(1, a), (2, b), (3, c)]));
                }
            }
        }
        Ok(out)
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit < 1 || qubit > self.num_qubits {
            return Err(Error::QubitOutOfRange { qubit, num_qubits: self.num_qubits });
        }
        Ok(())
    }

    fn axis_label(&self, assignments: &[(usize, Pauli)]) -> PauliLabel {
        let mut paulis = vec![Pauli::I; self.num_qubits];
        for &(qubit, axis) in assignments {
            paulis[qubit - 1] = axis;
        }
        PauliLabel::new(paulis)
    }

    /// Rebuild the density matrix `rho = (1/2^n) sum_L c_L P_L`. The
    /// result is fully re-validated, so hand-edited coefficient tables
    /// that do not describe a state are rejected.
    pub fn reconstruct(&self) -> Result<DensityMatrix<T>> {
        let n = self.num_qubits;
        let dim = 1usize << n;
        let mut matrix = ComplexMatrix::zeros(dim, dim);
        for (code, &c) in self.coeffs.iter().enumerate() {
            if c == T::zero() {
                continue;
            }
            let label = PauliLabel::from_code(n, code);
            for j in 0..dim {
                let (m, phase) = label.ket_action::<T>(j);
                let v = matrix.get(m, j) + phase.scale(c);
                matrix.set(m, j, v);
            }
        }
        let matrix = matrix.scale_re(T::one() / T::of(dim as f64));
        DensityMatrix::try_new(n, matrix)
    }

    /// True when at least one full-weight coefficient exceeds `tol`: for
    /// the Bell states of this crate that is the signature of
    /// correlations visible only when every qubit is measured. Not an
    /// entanglement witness on its own (product states can trip it too).
    pub fn highest_weight_support(&self, tol: T) -> bool {
        self.iter()
            .any(|(label, c)| label.weight() == self.num_qubits && c.abs() > tol)
    }

    /// Group the nonzero coefficients by weight, annotating which qubits
    /// (arms) each string touches.
    pub fn classify_arms(&self, tol: T) -> ArmClassification<T> {
        let mut groups: Vec<ArmGroup<T>> = Vec::new();
        for (label, c) in self.nonzero(tol) {
            let weight = label.weight();
            let entry = ArmEntry { arms: label.arms(), label, value: c };
            match groups.last_mut() {
                Some(group) if group.weight == weight => group.entries.push(entry),
                _ => groups.push(ArmGroup { weight, entries: vec![entry] }),
            }
        }
        ArmClassification { num_qubits: self.num_qubits, groups }
    }

    /// JSON coefficient report: `{"n": n, "coefficients": [{"label",
    /// "value"}, ...]}` with the nonzero coefficients sorted by weight
    /// then label and values rounded to 12 significant digits.
    pub fn to_json(&self, tol: T) -> serde_json::Value {
        let coefficients: Vec<serde_json::Value> = self
            .nonzero(tol)
            .into_iter()
            .map(|(label, c)| {
                serde_json::json!({
                    "label": label.to_string(),
                    "value": round_significant(c.to_f64().unwrap_or(f64::NAN), 12),
                })
            })
            .collect();
        serde_json::json!({ "n": self.num_qubits, "coefficients": coefficients })
    }

    /// Aligned text table of the nonzero coefficients, sorted by weight
    /// then label, values at 6 significant digits.
    pub fn to_table(&self, tol: T) -> String {
        let rows: Vec<(String, usize, String)> = self
            .nonzero(tol)
            .into_iter()
            .map(|(label, c)| {
                (
                    label.to_string(),
                    label.weight(),
                    format_significant(c.to_f64().unwrap_or(f64::NAN), 6),
                )
            })
            .collect();
        let label_width = rows
            .iter()
            .map(|(l, _, _)| l.len())
            .chain(["label".len()])
            .max()
            .unwrap_or(5);
        let mut out = format!("{:<label_width$}  weight  value\n", "label");
        for (label, weight, value) in rows {
            out.push_str(&format!("{label:<label_width$}  {weight:>6}  {value}\n"));
        }
        out
    }
}

/// One nonzero coefficient with the qubits it involves.
#[derive(Debug, Clone)]
pub struct ArmEntry<T: Scalar> {
    pub label: PauliLabel,
    /// 1-based labels of the measured qubits.
    pub arms: Vec<usize>,
    pub value: T,
}

/// All nonzero coefficients of one weight.
#[derive(Debug, Clone)]
pub struct ArmGroup<T: Scalar> {
    pub weight: usize,
    pub entries: Vec<ArmEntry<T>>,
}

/// Nonzero coefficients grouped by how many arms of a measurement device
/// they involve.
#[derive(Debug, Clone)]
pub struct ArmClassification<T: Scalar> {
    pub num_qubits: usize,
    pub groups: Vec<ArmGroup<T>>,
}

impl<T: Scalar> ArmClassification<T> {
    pub fn group(&self, weight: usize) -> Option<&ArmGroup<T>> {
        self.groups.iter().find(|g| g.weight == weight)
    }
}

/// Round to `digits` significant digits, returning an `f64` that prints
/// compactly (used for JSON output).
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

/// Format with `digits` significant digits, trimming trailing zeros;
/// falls back to scientific notation outside a comfortable range.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("e-notation");
    let exponent: i32 = exponent.parse().expect("exponent");
    if exponent < -4 || exponent >= digits as i32 {
        format!("{}e{exponent}", trim_trailing_zeros(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_trailing_zeros(&format!("{x:.decimals$}"))
    }
}

fn trim_trailing_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
