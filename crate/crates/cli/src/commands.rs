//! The five subcommands.

use braidbell::braid::{check_braid_relations, check_yang_baxter, BraidWord, Relation};
use braidbell::density::DensityMatrix;
use braidbell::entanglement::{concurrence_mixed, ppt_check, reduction_survey};
use braidbell::hs::{format_significant, hs_decompose, round_significant};
use braidbell::states::bell_state;
use braidbell::{Density, State};

use crate::util::{
    format_complex, parse_trace_list, qubit_letters, render_columns, state_json, CliResult,
    OutputFormat, StateSpec, UsageError,
};

const NONZERO_TOL: f64 = 1e-9;

/// `verify --n N`: check the group relations; exit 1 when any fails.
pub fn verify(n: usize, format: OutputFormat) -> CliResult<u8> {
    if !(2..=6).contains(&n) {
        return Err(UsageError(format!("--n must be in 2..=6, got {n}")));
    }
    let artin = check_braid_relations::<f64>(n)?;
    let yang_baxter = if n >= 3 {
        Some(check_yang_baxter::<f64>(n)?)
    } else {
        None
    };

    let mut rows: Vec<(String, f64, bool)> = artin
        .checks
        .iter()
        .map(|c| {
            let kind = match c.relation {
                Relation::FarCommutation(..) => "far-commutation",
                Relation::Braid(..) => "braid",
                Relation::Inverse(..) => "inverse",
            };
            (
                format!("{kind}: {}", c.relation),
                c.deviation,
                c.deviation < 1e-12,
            )
        })
        .collect();
    if let Some(yb) = &yang_baxter {
        for &((i, j), dev) in &yb.pair_deviations {
            rows.push((
                format!("yang-baxter: s{i} s{j} s{i} = s{j} s{i} s{j}"),
                dev,
                dev < 1e-12,
            ));
        }
    }
    let max_deviation = rows.iter().fold(0.0f64, |m, r| m.max(r.1));
    let holds = rows.iter().all(|r| r.2);

    match format {
        OutputFormat::Table => {
            let mut table: Vec<Vec<String>> = vec![];
            for (name, dev, ok) in &rows {
                table.push(vec![
                    name.clone(),
                    format!("deviation {}", format_significant(*dev, 6)),
                    if *ok { "ok".into() } else { "FAIL".into() },
                ]);
            }
            print!("{}", render_columns(&table));
            if holds {
                println!(
                    "all {} relations hold (max deviation {})",
                    rows.len(),
                    format_significant(max_deviation, 6)
                );
            } else {
                println!("RELATION CHECK FAILED (max deviation {})", format_significant(max_deviation, 6));
            }
        }
        OutputFormat::Json => {
            let checks: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, dev, ok)| {
                    serde_json::json!({
                        "relation": name,
                        "deviation": round_significant(*dev, 12),
                        "ok": ok,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "n": n,
                "checks": checks,
                "max_deviation": round_significant(max_deviation, 12),
                "holds": holds,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("relation,deviation,ok");
            for (name, dev, ok) in &rows {
                println!("{name:?},{},{ok}", format_significant(*dev, 12));
            }
        }
    }
    Ok(if holds { 0 } else { 1 })
}

/// `bell --n N --index I`: print one Bell state.
pub fn bell(n: usize, index: usize, format: OutputFormat) -> CliResult<u8> {
    let state = bell_state::<f64>(n, index)?;
    print_state(&state, format, None);
    Ok(0)
}

fn print_state(state: &State, format: OutputFormat, extra_json: Option<serde_json::Value>) {
    match format {
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = state
                .nonzero_terms(NONZERO_TOL)
                .into_iter()
                .map(|(k, z)| {
                    vec![
                        format!("|{}\u{27e9}:", state.bit_label(k)),
                        format_complex(z, NONZERO_TOL),
                    ]
                })
                .collect();
            print!("{}", render_columns(&rows));
        }
        OutputFormat::Json => {
            let mut doc = state_json(state);
            if let Some(serde_json::Value::Object(extra)) = extra_json {
                if let serde_json::Value::Object(map) = &mut doc {
                    for (k, v) in extra {
                        map.insert(k, v);
                    }
                }
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("basis,re,im");
            for (k, z) in state.amplitudes().iter().enumerate() {
                println!(
                    "{},{},{}",
                    state.bit_label(k),
                    format_significant(round_significant(z.re, 12), 12),
                    format_significant(round_significant(z.im, 12), 12)
                );
            }
        }
    }
}

fn build_reduced(
    spec: &StateSpec,
    n: Option<usize>,
    index: Option<usize>,
    trace: Option<&str>,
) -> CliResult<(State, Density)> {
    let state = spec.build(n, index)?;
    let rho = DensityMatrix::from_pure(&state);
    let rho = match trace {
        Some(list) => rho.partial_trace(&parse_trace_list(list)?)?,
        None => rho,
    };
    Ok((state, rho))
}

/// `hs <spec> [--trace ...]`: Hilbert-Schmidt coefficient report.
pub fn hs(
    spec: &str,
    n: Option<usize>,
    index: Option<usize>,
    trace: Option<&str>,
    tol: f64,
    format: OutputFormat,
) -> CliResult<u8> {
    let spec = StateSpec::parse(spec)?;
    let (_, rho) = build_reduced(&spec, n, index, trace)?;
    let coeffs = hs_decompose(&rho)?;

    match format {
        OutputFormat::Table => {
            let classes = coeffs.classify_arms(tol);
            let mut rows: Vec<Vec<String>> =
                vec![vec!["label".into(), "weight".into(), "arms".into(), "value".into()]];
            for group in &classes.groups {
                for entry in &group.entries {
                    let arms = if entry.arms.is_empty() {
                        "-".to_string()
                    } else {
                        qubit_letters(&entry.arms)
                    };
                    rows.push(vec![
                        entry.label.to_string(),
                        group.weight.to_string(),
                        arms,
                        format_significant(entry.value, 6),
                    ]);
                }
            }
            print!("{}", render_columns(&rows));
            let support = coeffs.highest_weight_support(tol);
            println!("full-weight support: {}", if support { "yes" } else { "no" });
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&coeffs.to_json(tol)).expect("serializable")
            );
        }
        OutputFormat::Csv => {
            println!("label,weight,value");
            for (label, c) in coeffs.nonzero(tol) {
                println!("{label},{},{}", label.weight(), format_significant(round_significant(c, 12), 12));
            }
        }
    }
    Ok(0)
}

/// `analyze <spec> [--trace ...]`: concurrence and PPT of a two-qubit
/// reduction.
pub fn analyze(
    spec: &str,
    n: Option<usize>,
    index: Option<usize>,
    trace: Option<&str>,
    format: OutputFormat,
) -> CliResult<u8> {
    let spec = StateSpec::parse(spec)?;
    let (_, rho) = build_reduced(&spec, n, index, trace)?;
    if rho.num_qubits() != 2 {
        return Err(UsageError(format!(
            "analysis needs a two-qubit state after tracing; have {} qubits (adjust --trace)",
            rho.num_qubits()
        )));
    }
    let conc = concurrence_mixed(&rho)?;
    let ppt = ppt_check(&rho, 2)?;

    match format {
        OutputFormat::Table => {
            println!("reduced density matrix:");
            let rows: Vec<Vec<String>> = (0..rho.dim())
                .map(|i| {
                    (0..rho.dim())
                        .map(|j| format_complex(rho.matrix().get(i, j), 1e-12))
                        .collect()
                })
                .collect();
            print!("{}", render_columns(&rows));
            println!(
                "lambda: {}",
                conc.lambdas
                    .iter()
                    .map(|l| format_significant(*l, 6))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("concurrence: {}", format_significant(conc.concurrence, 6));
            println!(
                "partial transpose eigenvalues: {}",
                ppt.eigenvalues
                    .iter()
                    .map(|l| format_significant(*l, 6))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("separable (PPT): {}", if ppt.is_ppt { "yes" } else { "no" });
        }
        OutputFormat::Json => {
            let density: Vec<Vec<serde_json::Value>> = (0..rho.dim())
                .map(|i| {
                    (0..rho.dim())
                        .map(|j| {
                            let z = rho.matrix().get(i, j);
                            serde_json::json!([round_significant(z.re, 12), round_significant(z.im, 12)])
                        })
                        .collect()
                })
                .collect();
            let doc = serde_json::json!({
                "n": rho.num_qubits(),
                "density": density,
                "lambdas": conc.lambdas.iter().map(|l| round_significant(*l, 12)).collect::<Vec<_>>(),
                "concurrence": round_significant(conc.concurrence, 12),
                "pt_eigenvalues": ppt.eigenvalues.iter().map(|l| round_significant(*l, 12)).collect::<Vec<_>>(),
                "separable": ppt.is_ppt,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Csv => {
            println!("quantity,value");
            for (k, l) in conc.lambdas.iter().enumerate() {
                println!("lambda{},{}", k + 1, format_significant(round_significant(*l, 12), 12));
            }
            println!("concurrence,{}", format_significant(round_significant(conc.concurrence, 12), 12));
            for (k, l) in ppt.eigenvalues.iter().enumerate() {
                println!("pt_eigenvalue{},{}", k + 1, format_significant(round_significant(*l, 12), 12));
            }
            println!("separable,{}", ppt.is_ppt);
        }
    }
    Ok(0)
}

/// `braid "<word>" --n N --input I [--survey]`.
pub fn braid(
    word: &str,
    n: usize,
    input: usize,
    survey: bool,
    format: OutputFormat,
) -> CliResult<u8> {
    let word = BraidWord::parse(word, n)?;
    let start = crate::util::computational_input(n, input)?;
    let state = word.apply(&start)?;

    let survey_data = if survey {
        let s = reduction_survey(&state)?;
        let support = if state.num_qubits() <= braidbell::config::HS_MAX_QUBITS {
            let coeffs = hs_decompose(&DensityMatrix::from_pure(&state))?;
            Some(coeffs.highest_weight_support(NONZERO_TOL))
        } else {
            None
        };
        Some((s, support))
    } else {
        None
    };

    let extra_json = survey_data.as_ref().map(|(s, support)| {
        let cases: Vec<serde_json::Value> = s
            .cases
            .iter()
            .map(|c| {
                serde_json::json!({
                    "kept": qubit_letters(&[c.kept.0, c.kept.1]),
                    "dropped": qubit_letters(&c.dropped),
                    "concurrence": round_significant(c.concurrence, 12),
                    "min_pt_eigenvalue": round_significant(c.pt_eigenvalues[0], 12),
                    "separable": c.is_ppt,
                })
            })
            .collect();
        serde_json::json!({
            "survey": cases,
            "full_weight_support": support,
        })
    });

    print_state(&state, format, extra_json.clone());

    if format == OutputFormat::Table {
        if let Some((s, support)) = &survey_data {
            println!("survey of two-qubit reductions:");
            let mut rows: Vec<Vec<String>> = vec![vec![
                "kept".into(),
                "dropped".into(),
                "concurrence".into(),
                "min PT eigenvalue".into(),
                "separable".into(),
            ]];
            for c in &s.cases {
                rows.push(vec![
                    qubit_letters(&[c.kept.0, c.kept.1]),
                    qubit_letters(&c.dropped),
                    format_significant(c.concurrence, 6),
                    format_significant(c.pt_eigenvalues[0], 6),
                    if c.is_ppt { "yes".into() } else { "no".into() },
                ]);
            }
            print!("{}", render_columns(&rows));
            match support {
                Some(flag) => println!("full-weight support: {}", if *flag { "yes" } else { "no" }),
                None => println!("full-weight support: skipped (state too large to decompose)"),
            }
        }
    } else if format == OutputFormat::Csv {
        if let Some((s, _)) = &survey_data {
            println!("kept,dropped,concurrence,min_pt_eigenvalue,separable");
            for c in &s.cases {
                println!(
                    "{},{},{},{},{}",
                    qubit_letters(&[c.kept.0, c.kept.1]).replace(',', ";"),
                    qubit_letters(&c.dropped).replace(',', ";"),
                    format_significant(round_significant(c.concurrence, 12), 12),
                    format_significant(round_significant(c.pt_eigenvalues[0], 12), 12),
                    c.is_ppt
                );
            }
        }
    }
    Ok(0)
}
