use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimensions {a_rows}x{a_cols} and {b_rows}x{b_cols} are incompatible")]
    DimensionMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("entry buffer has length {len}, expected {rows}x{cols} = {expected}")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        len: usize,
        expected: usize,
    },

    #[error("instance too large: dimension {dim} exceeds cap {cap}")]
    TooLarge { dim: usize, cap: usize },

    #[error("matrix is not Hermitian (max asymmetry {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:e})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    EigenNoConvergence { sweeps: usize },

    #[error("vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("matrix trace {trace} deviates from 1")]
    NotUnitTrace { trace: f64 },

    #[error("state index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("qubit label {qubit} out of range 1..={num_qubits}")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("need between {min} and {max} qubits, got {n}")]
    QubitCountOutOfRange { n: usize, min: usize, max: usize },

    #[error("operand acts on {expected} qubits, state has {found}")]
    QubitCountMismatch { expected: usize, found: usize },

    #[error("traced qubit set must be a nonempty proper subset of the system")]
    InvalidTraceSet,

    #[error("braid word syntax error at byte {offset}: {message}")]
    BraidSyntax { offset: usize, message: String },

    #[error("coefficient for {label} has imaginary part {imaginary:e}")]
    NonRealCoefficient { label: String, imaginary: f64 },
}
