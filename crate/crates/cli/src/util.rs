//! Shared helpers: state specs, qubit-label parsing, state JSON files,
//! and number formatting for the three output formats.

use std::fmt;
use std::fs;
use std::path::Path;

use braidbell::hs::{format_significant, round_significant};
use braidbell::states::{bell_state, computational_state, ghz_state};
use braidbell::tensor::StateVector;
use braidbell::State;
use braidbell::C64;
use serde::Deserialize;

/// Usage-level error; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<braidbell::Error> for UsageError {
    fn from(e: braidbell::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, UsageError>;

/// How a command renders its report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// What state a command operates on: a Bell state, the GHZ state, or a
/// state JSON file (`file:PATH`).
pub enum StateSpec {
    Bell,
    Ghz,
    File(String),
}

impl StateSpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        if let Some(path) = text.strip_prefix("file:") {
            return Ok(StateSpec::File(path.to_string()));
        }
        match text {
            "bell" => Ok(StateSpec::Bell),
            "ghz" => Ok(StateSpec::Ghz),
            other => Err(UsageError(format!(
                "unknown state spec {other:?}; expected \"bell\", \"ghz\", or \"file:PATH\""
            ))),
        }
    }

    /// Build the state, enforcing which of `--n` / `--index` each spec
    /// kind accepts.
    pub fn build(&self, n: Option<usize>, index: Option<usize>) -> CliResult<State> {
        match self {
            StateSpec::Bell => {
                let n = n.ok_or_else(|| UsageError("bell requires --n".into()))?;
                let index = index.ok_or_else(|| UsageError("bell requires --index".into()))?;
                Ok(bell_state(n, index)?)
            }
            StateSpec::Ghz => {
                if let Some(n) = n {
                    if n != 3 {
                        return Err(UsageError("ghz is the 3-qubit state; --n must be 3 or omitted".into()));
                    }
                }
                if index.is_some() {
                    return Err(UsageError("ghz does not take --index".into()));
                }
                Ok(ghz_state())
            }
            StateSpec::File(path) => {
                if n.is_some() || index.is_some() {
                    return Err(UsageError("file: states do not take --n or --index".into()));
                }
                load_state_file(Path::new(path))
            }
        }
    }
}

#[derive(Deserialize)]
struct StateFile {
    n: usize,
    amplitudes: Vec<[f64; 2]>,
}

/// Load `{"n": ..., "amplitudes": [[re, im], ...]}`, basis-index order
/// with qubit A most significant. Unknown extra keys are ignored so that
/// reports carrying additional fields still round-trip.
pub fn load_state_file(path: &Path) -> CliResult<State> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    let parsed: StateFile = serde_json::from_str(&text)
        .map_err(|e| UsageError(format!("invalid state JSON in {}: {e}", path.display())))?;
    let amplitudes = parsed
        .amplitudes
        .into_iter()
        .map(|[re, im]| C64::new(re, im))
        .collect();
    Ok(StateVector::new(parsed.n, amplitudes)?)
}

/// The state JSON document for a state (12 significant digits).
pub fn state_json(state: &State) -> serde_json::Value {
    let amplitudes: Vec<serde_json::Value> = state
        .amplitudes()
        .iter()
        .map(|z| serde_json::json!([round_significant(z.re, 12), round_significant(z.im, 12)]))
        .collect();
    serde_json::json!({ "n": state.num_qubits(), "amplitudes": amplitudes })
}

/// Parse a trace list like `"C,D"`, `"c d"`, or `"3,4"` into 1-based
/// qubit labels.
pub fn parse_trace_list(text: &str) -> CliResult<Vec<usize>> {
    let mut out = Vec::new();
    for token in text.split([',', ' ']).filter(|t| !t.is_empty()) {
        let label = if token.len() == 1 && token.chars().next().unwrap().is_ascii_alphabetic() {
            let c = token.chars().next().unwrap().to_ascii_uppercase();
            (c as usize) - ('A' as usize) + 1
        } else {
            token
                .parse::<usize>()
                .map_err(|_| UsageError(format!("invalid qubit label {token:?}")))?
        };
        out.push(label);
    }
    if out.is_empty() {
        return Err(UsageError("empty trace list".into()));
    }
    Ok(out)
}

/// Qubit letter for a 1-based label: 1 -> A.
pub fn qubit_letter(label: usize) -> char {
    char::from(b'A' + (label - 1) as u8)
}

pub fn qubit_letters(labels: &[usize]) -> String {
    labels
        .iter()
        .map(|&q| qubit_letter(q).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Render a complex number at 6 significant digits: `0.5`, `-0.5i`,
/// `0.25+0.5i`.
pub fn format_complex(z: C64, tol: f64) -> String {
    let re_zero = z.re.abs() <= tol;
    let im_zero = z.im.abs() <= tol;
    match (re_zero, im_zero) {
        (true, true) => "0".to_string(),
        (false, true) => format_significant(z.re, 6),
        (true, false) => format!("{}i", format_significant(z.im, 6)),
        (false, false) => {
            let im = if z.im < 0.0 {
                format!("-{}i", format_significant(-z.im, 6))
            } else {
                format!("+{}i", format_significant(z.im, 6))
            };
            format!("{}{im}", format_significant(z.re, 6))
        }
    }
}

/// Left-justified column rendering with two-space gutters. Widths count
/// characters, not bytes, so the ket glyph does not skew columns.
pub fn render_columns(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if k + 1 != row.len() {
                for _ in cell.chars().count()..widths[k] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// State used by the braid command: the computational input.
pub fn computational_input(n: usize, index: usize) -> CliResult<State> {
    Ok(computational_state(n, index)?)
}
