//! Command-line front end for the monomial-ideal toolkit.
//!
//! Every command reads JSON or flag inputs, writes one JSON object (or a
//! text rendering with `--format text`) to stdout, and reports diagnostics
//! on stderr. Exit codes: 0 success, 1 a checked property is false (the
//! report still prints), 2 invalid input or a failed precondition.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use arl_core::arl::{check_arl_criterion, check_arl_definition};
use arl_core::froberg::{classify_tail, froberg_to_ideal, froberg_values, FroebergSpec};
use arl_core::hilbert::{hilbert_values, stabilized_value};
use arl_core::ideal::MonomialIdeal;
use arl_core::monomial::Monomial;
use arl_core::sequence::{HilbertSeq, Tail};
use arl_core::synthesis::{synthesize, SynthesisTrace};

#[derive(Parser)]
#[command(
    name = "arl",
    version,
    about = "Almost reverse lexicographic monomial ideals: Hilbert functions, ARL checks, sequence synthesis, and Froberg series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Definition,
    Criterion,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Hilbert function of a monomial-ideal quotient
    Hilbert {
        /// Ideal JSON file, or `-` for stdin
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check whether an ideal is almost reverse lexicographic
    Check {
        /// Ideal JSON file, or `-` for stdin
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Report the generator structure: last generator, index sets, f-values
    Gens {
        /// Ideal JSON file, or `-` for stdin
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build an almost reverse lexicographic ideal realizing a sequence
    Synthesize {
        /// Comma-separated prefix values, starting with 1
        #[arg(long)]
        sequence: String,
        /// Tail rule: `zero` or `constant:<c>`
        #[arg(long)]
        tail: String,
        #[arg(long)]
        horizon: Option<usize>,
        /// Include the full construction trace in the output
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate a Froberg sequence
    Froberg {
        #[arg(long)]
        n: usize,
        /// Comma-separated degrees; omit for none
        #[arg(long, default_value = "")]
        degrees: String,
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Realize a Froberg sequence as an almost reverse lexicographic ideal
    FrobergIdeal {
        #[arg(long)]
        n: usize,
        /// Comma-separated degrees; omit for none
        #[arg(long, default_value = "")]
        degrees: String,
        #[arg(long)]
        horizon: Option<usize>,
        /// Include the full construction trace in the output
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Validate an input and echo its canonical form
    Validate {
        /// Ideal JSON file, or `-` for stdin
        #[arg(long)]
        ideal: Option<String>,
        /// Comma-separated prefix values
        #[arg(long)]
        sequence: Option<String>,
        /// Tail rule: `zero` or `constant:<c>`
        #[arg(long)]
        tail: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated degrees
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Invalid input or a failed precondition: exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// What a command produced: the stdout payload plus whether a checked
/// property came out false (exit code 1).
struct Outcome {
    stdout: String,
    check_failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            check_failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.stdout);
            if outcome.check_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_ideal(source: &str) -> Result<MonomialIdeal, InputError> {
    let text = if source == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        buffer
    } else {
        fs::read_to_string(source)?
    };
    Ok(serde_json::from_str(&text)?)
}

fn parse_csv<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, InputError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            item.trim()
                .parse::<T>()
                .map_err(|_| InputError(format!("bad {what} entry: {item}")))
        })
        .collect()
}

fn parse_tail(text: &str) -> Result<Tail, InputError> {
    let text = text.trim();
    if text == "zero" {
        return Ok(Tail::Zero);
    }
    if let Some(rest) = text.strip_prefix("constant:") {
        let value: u64 = rest
            .trim()
            .parse()
            .map_err(|_| InputError(format!("bad constant tail value: {rest}")))?;
        return Ok(Tail::Constant { value });
    }
    Err(InputError(format!(
        "unknown tail rule {text:?}; expected `zero` or `constant:<c>`"
    )))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

fn monomial_list(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".into();
    }
    ideal
        .generators()
        .iter()
        .map(Monomial::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn run(command: Command) -> Result<Outcome, InputError> {
    match command {
        Command::Hilbert {
            ideal,
            max_degree,
            format,
        } => {
            let ideal = read_ideal(&ideal)?;
            let values = hilbert_values(&ideal, max_degree);
            let stabilized = stabilized_value(&ideal).ok();
            let payload = json!({
                "values": values,
                "max_degree": max_degree,
                "stabilized": stabilized.map(|(t, value)| json!({"t": t, "value": value})),
            });
            let stdout = match format {
                Format::Json => payload.to_string(),
                Format::Text => {
                    let mut lines = vec![format!(
                        "H(R/I, 0..={max_degree}) = {}",
                        values
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    )];
                    if let Some((t, value)) = stabilized {
                        lines.push(format!("constant {value} from degree {t}"));
                    }
                    lines.join("\n")
                }
            };
            Ok(Outcome::ok(stdout))
        }

        Command::Check {
            ideal,
            mode,
            format,
        } => {
            let ideal = read_ideal(&ideal)?;
            let strongly_stable = ideal.is_strongly_stable();
            let mut witness = serde_json::Value::Null;
            let mut witness_text = String::new();
            let mut criterion_note = serde_json::Value::Null;

            let is_arl = match mode {
                Mode::Definition | Mode::Both => {
                    let verdict = check_arl_definition(&ideal);
                    if let Some(w) = &verdict.witness {
                        witness = json!({
                            "kind": "definition",
                            "monomial": w.monomial,
                            "generator": w.generator,
                        });
                        witness_text = format!(
                            "{} is above generator {} of the same degree but lies outside the ideal",
                            w.monomial, w.generator
                        );
                    }
                    if mode == Mode::Both {
                        match check_arl_criterion(&ideal) {
                            Ok(by_criterion) => {
                                if by_criterion.is_arl != verdict.is_arl {
                                    return Err(InputError(
                                        "internal disagreement between ARL checks".into(),
                                    ));
                                }
                            }
                            Err(e) => {
                                criterion_note = serde_json::Value::String(format!(
                                    "criterion unavailable: {e}"
                                ));
                            }
                        }
                    }
                    verdict.is_arl
                }
                Mode::Criterion => {
                    let verdict =
                        check_arl_criterion(&ideal).map_err(|e| InputError(e.to_string()))?;
                    if let Some(w) = &verdict.witness {
                        witness = json!({
                            "kind": "criterion",
                            "level": w.level,
                            "greater": w.greater,
                            "lesser": w.lesser,
                            "greater_sum": w.greater_sum,
                            "lesser_sum": w.lesser_sum,
                        });
                        witness_text = format!(
                            "at level {}, tuple {:?} has padded degree {} above tuple {:?} with {}",
                            w.level, w.greater, w.greater_sum, w.lesser, w.lesser_sum
                        );
                    }
                    verdict.is_arl
                }
            };

            let method = match mode {
                Mode::Definition => "definition",
                Mode::Criterion => "criterion",
                Mode::Both => "both",
            };
            let payload = json!({
                "is_arl": is_arl,
                "method": method,
                "witness": witness,
                "strongly_stable": strongly_stable,
                "criterion_note": criterion_note,
            });
            let stdout = match format {
                Format::Json => payload.to_string(),
                Format::Text => {
                    let mut lines = vec![
                        format!(
                            "almost reverse lexicographic: {}",
                            if is_arl { "yes" } else { "no" }
                        ),
                        format!(
                            "strongly stable: {}",
                            if strongly_stable { "yes" } else { "no" }
                        ),
                    ];
                    if !witness_text.is_empty() {
                        lines.push(format!("witness: {witness_text}"));
                    }
                    lines.join("\n")
                }
            };
            Ok(Outcome {
                stdout,
                check_failed: !is_arl,
            })
        }

        Command::Gens { ideal, format } => {
            let ideal = read_ideal(&ideal)?;
            let last = match ideal.last_generator() {
                Ok(last) => Some(last),
                Err(arl_core::Error::NoLastGenerator) => None,
                Err(e) => return Err(InputError(e.to_string())),
            };
            let (index_sets, bounds, reconstructed) = match &last {
                Some(_) => {
                    let sets = ideal.index_sets().map_err(|e| InputError(e.to_string()))?;
                    let mut bounds: Vec<(usize, Vec<usize>, arl_core::FValue)> = Vec::new();
                    for (idx, set) in sets.iter().enumerate() {
                        let level = idx + 1;
                        for alpha in set {
                            let f = ideal
                                .f_eval(level + 1, alpha)
                                .map_err(|e| InputError(e.to_string()))?;
                            bounds.push((level, alpha.clone(), f));
                        }
                    }
                    let rebuilt = ideal
                        .reconstruct_generators()
                        .map_err(|e| InputError(e.to_string()))?;
                    (Some(sets), Some(bounds), Some(rebuilt == ideal))
                }
                None => (None, None, None),
            };
            let f_table = bounds.as_ref().map(|bounds| {
                bounds
                    .iter()
                    .map(|(level, tuple, f)| json!({"level": level, "tuple": tuple, "f": f}))
                    .collect::<Vec<_>>()
            });
            let f1 = if ideal.num_vars() >= 1 {
                Some(
                    ideal
                        .f_eval(1, &[])
                        .map_err(|e| InputError(e.to_string()))?,
                )
            } else {
                None
            };
            let payload = json!({
                "n": ideal.num_vars(),
                "generators": ideal.generators(),
                "last_generator": last.as_ref().map(|l| json!({"monomial": l.monomial, "mu": l.mu})),
                "f1": f1,
                "index_sets": index_sets,
                "f_table": f_table,
                "reconstruction_matches": reconstructed,
            });
            let stdout = match format {
                Format::Json => payload.to_string(),
                Format::Text => {
                    let mut lines = vec![format!("G = {{{}}}", monomial_list(&ideal))];
                    if let Some(last) = &last {
                        lines.push(format!(
                            "last generator {} with mu = {}",
                            last.monomial, last.mu
                        ));
                    }
                    if let Some(f1) = &f1 {
                        lines.push(format!("f_1 = {f1}"));
                    }
                    if let Some(sets) = &index_sets {
                        for (idx, set) in sets.iter().enumerate() {
                            lines.push(format!("I_{} = {:?}", idx + 1, set));
                        }
                    }
                    if let Some(bounds) = &bounds {
                        for (level, tuple, f) in bounds {
                            lines.push(format!("f_{}{:?} = {}", level + 1, tuple, f));
                        }
                    }
                    if let Some(matches) = reconstructed {
                        lines.push(format!(
                            "reconstruction from bounds matches: {}",
                            if matches { "yes" } else { "no" }
                        ));
                    }
                    lines.join("\n")
                }
            };
            Ok(Outcome::ok(stdout))
        }

        Command::Synthesize {
            sequence,
            tail,
            horizon,
            trace,
            format,
        } => {
            let prefix: Vec<u64> = parse_csv(&sequence, "sequence")?;
            let tail = parse_tail(&tail)?;
            let horizon = horizon.unwrap_or_else(|| (2 * prefix.len()).max(32));
            let h = HilbertSeq::new(prefix, tail).map_err(|e| InputError(e.to_string()))?;
            let (ideal, record) = synthesize(&h, horizon).map_err(|e| InputError(e.to_string()))?;
            Ok(Outcome::ok(render_ideal_result(
                &ideal,
                trace.then_some(&record),
                format,
            )))
        }

        Command::Froberg {
            n,
            degrees,
            max_degree,
            format,
        } => {
            let degrees: Vec<usize> = parse_csv(&degrees, "degree")?;
            let spec = FroebergSpec::new(n, degrees).map_err(|e| InputError(e.to_string()))?;
            let values =
                froberg_values(&spec, max_degree).map_err(|e| InputError(e.to_string()))?;
            let tail = classify_tail(&spec).map_err(|e| InputError(e.to_string()))?;
            let payload = json!({
                "spec": spec,
                "values": values,
                "max_degree": max_degree,
                "tail": tail,
            });
            let stdout = match format {
                Format::Json => payload.to_string(),
                Format::Text => format!(
                    "{spec} = {}, then {}",
                    values
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(", "),
                    match tail {
                        arl_core::TailClass::EventuallyZero { zero_from } =>
                            format!("zero from degree {zero_from}"),
                        arl_core::TailClass::EventuallyConstant { reached_at, value } =>
                            format!("constant {value} from degree {reached_at}"),
                        arl_core::TailClass::Unbounded { poly_degree } =>
                            format!("growth of polynomial degree {poly_degree}"),
                    }
                ),
            };
            Ok(Outcome::ok(stdout))
        }

        Command::FrobergIdeal {
            n,
            degrees,
            horizon,
            trace,
            format,
        } => {
            let degrees: Vec<usize> = parse_csv(&degrees, "degree")?;
            let spec = FroebergSpec::new(n, degrees).map_err(|e| InputError(e.to_string()))?;
            let horizon = horizon.unwrap_or_else(|| (2 * (spec.degree_sum() + 2)).max(32));
            let (ideal, record) =
                froberg_to_ideal(&spec, horizon).map_err(|e| InputError(e.to_string()))?;
            Ok(Outcome::ok(render_ideal_result(
                &ideal,
                trace.then_some(&record),
                format,
            )))
        }

        Command::Validate {
            ideal,
            sequence,
            tail,
            n,
            degrees,
            format,
        } => validate(ideal, sequence, tail, n, degrees, format),
    }
}

fn render_ideal_result(
    ideal: &MonomialIdeal,
    trace: Option<&SynthesisTrace>,
    format: Format,
) -> String {
    match format {
        Format::Json => match trace {
            Some(trace) => json!({"ideal": ideal, "trace": trace}).to_string(),
            None => to_json(ideal),
        },
        Format::Text => {
            let mut lines = vec![format!(
                "G = {{{}}} in {} variables",
                monomial_list(ideal),
                ideal.num_vars()
            )];
            if let Some(trace) = trace {
                for level in &trace.levels {
                    lines.push(format!("ring with {} variables:", level.num_vars));
                    for step in &level.steps {
                        let added = step
                            .added
                            .iter()
                            .map(Monomial::to_string)
                            .collect::<Vec<_>>()
                            .join(", ");
                        lines.push(format!(
                            "  degree {}, {} tuple(s): added {}",
                            step.degree, step.count, added
                        ));
                    }
                }
            }
            lines.join("\n")
        }
    }
}

fn validate(
    ideal: Option<String>,
    sequence: Option<String>,
    tail: Option<String>,
    n: Option<usize>,
    degrees: Option<String>,
    format: Format,
) -> Result<Outcome, InputError> {
    let chosen =
        usize::from(ideal.is_some()) + usize::from(sequence.is_some()) + usize::from(n.is_some());
    if chosen != 1 {
        return Err(InputError(
            "validate needs exactly one input: --ideal, --sequence (with --tail), or --n (with --degrees)"
                .into(),
        ));
    }

    let (kind, result): (&str, Result<serde_json::Value, String>) = if let Some(source) = ideal {
        let outcome = read_ideal(&source).map(|ideal| {
            json!({
                "n": ideal.num_vars(),
                "generators": ideal.generators(),
                "strongly_stable": ideal.is_strongly_stable(),
            })
        });
        match outcome {
            Ok(payload) => ("ideal", Ok(payload)),
            Err(InputError(message)) => ("ideal", Err(message)),
        }
    } else if let Some(sequence) = sequence {
        let tail = parse_tail(&tail.ok_or(InputError("--sequence needs --tail".into()))?)?;
        let prefix: Vec<u64> = parse_csv(&sequence, "sequence")?;
        match HilbertSeq::new(prefix, tail) {
            Ok(h) => {
                let horizon = (2 * h.prefix().len()).max(32);
                let unimodal = h
                    .is_unimodal_at_each_tail(horizon)
                    .map_err(|e| InputError(e.to_string()))?;
                let analysis = h
                    .tail_analysis(horizon)
                    .map_err(|e| InputError(e.to_string()))?;
                (
                    "sequence",
                    Ok(json!({
                        "prefix": h.prefix(),
                        "tail": h.tail(),
                        "unimodal_at_each_tail": unimodal.unimodal,
                        "witness": unimodal.witness,
                        "r": analysis.r,
                        "depth": analysis.depth,
                    })),
                )
            }
            Err(e) => ("sequence", Err(e.to_string())),
        }
    } else {
        let degrees: Vec<usize> = parse_csv(&degrees.unwrap_or_default(), "degree")?;
        match FroebergSpec::new(n.unwrap(), degrees) {
            Ok(spec) => {
                let tail = classify_tail(&spec).map_err(|e| InputError(e.to_string()))?;
                (
                    "froberg",
                    Ok(json!({
                        "spec": spec,
                        "normalized": spec.normalize(),
                        "tail": tail,
                    })),
                )
            }
            Err(e) => ("froberg", Err(e.to_string())),
        }
    };

    let (valid, detail, error) = match result {
        Ok(detail) => (true, detail, serde_json::Value::Null),
        Err(message) => (
            false,
            serde_json::Value::Null,
            serde_json::Value::String(message),
        ),
    };
    let payload = json!({
        "valid": valid,
        "kind": kind,
        "detail": detail,
        "error": error,
    });
    let stdout = match format {
        Format::Json => payload.to_string(),
        Format::Text => {
            if valid {
                let mut line = format!("{kind}: valid");
                if let Some(unimodal) = detail.get("unimodal_at_each_tail") {
                    line.push_str(&format!(
                        ", unimodal at each tail: {}",
                        if unimodal.as_bool() == Some(true) {
                            "yes"
                        } else {
                            "no"
                        }
                    ));
                }
                line
            } else {
                format!("{kind}: invalid ({error})")
            }
        }
    };
    Ok(Outcome {
        stdout,
        check_failed: !valid,
    })
}
