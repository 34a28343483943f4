use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use braid3::burau::{burau, integral_burau};
use braid3::conjugacy::{are_conjugate, burau_dichotomy, word_problem_equal, Branch2, ConjugacyVerdict, SeparatingInvariant};
use braid3::laurent::LaurentPoly;
use braid3::matrix::{BurauMatrix, IntMatrix2};
use braid3::modular::{braid_to_modular, modular_to_matrix};
use braid3::moody::moody;
use braid3::pi::pi_invariant;
use braid3::word::BraidWord;
use braid3::Error;

use braid3_cli::alloc_track::TrackingAllocator;
use braid3_cli::bench::bench_conjugacy;
use braid3_cli::suites::run_suite;

#[global_allocator]
static ALLOC: TrackingAllocator = TrackingAllocator;

/// Exact computations in the 3-strand braid group.
///
/// Braid words use the letters a = σ1, A = σ1⁻¹, b = σ2, B = σ2⁻¹
/// (whitespace ignored), or comma/space-separated integers ±1, ±2.
#[derive(Parser)]
#[command(name = "braid3", version, about)]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Burau matrix of a braid word.
    Burau {
        /// Braid word (omit when using --file).
        word: Option<String>,
        /// Reduce coefficients modulo this integer (> 1).
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<i64>,
        /// Evaluate at an integer point; only -1 is supported.
        #[arg(long = "at", value_name = "T", allow_hyphen_values = true)]
        at: Option<i64>,
        /// Read newline-delimited words from a file instead.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Free-product normal form of the braid's image in PSL(2, Z).
    Psl2 {
        word: Option<String>,
        /// Also print the canonical projective matrix.
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Continued-fraction invariant of a braid word in syllable form.
    Pi {
        word: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Crossing data and Moody polynomial of a pure braid.
    Moody {
        word: Option<String>,
        /// Reduce the polynomial modulo this integer (> 1).
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<i64>,
        /// Also print the crossing-puncture sequence.
        #[arg(long)]
        cp: bool,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Decide conjugacy of two braids.
    Conjugate {
        word1: String,
        word2: String,
        /// Print the conjugator on a Conjugate verdict.
        #[arg(long)]
        witness: bool,
    },
    /// Evaluate both branches of the conjugacy dichotomy for (φ, ψ).
    Dichotomy { word1: String, word2: String },
    /// Decide equality of two braid words as group elements.
    Equal { word1: String, word2: String },
    /// Run randomized and exhaustive property suites.
    Proptest {
        #[arg(long, value_name = "NAME", default_value = "all")]
        suite: String,
        #[arg(long = "max-len", default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Measure the conjugacy decision across word lengths.
    Bench {
        #[command(subcommand)]
        target: BenchTarget,
    },
}

#[derive(Subcommand)]
enum BenchTarget {
    /// Time conjugacy decisions on conjugate pairs.
    Conjugate {
        /// Comma-separated increasing word lengths.
        #[arg(long, value_name = "L1,L2,...", default_value = "1000,10000,100000,1000000")]
        lengths: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Timing repetitions per length (minimum is reported).
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

#[derive(Debug)]
enum CliError {
    Braid(Error),
    Input(String),
    SuiteFailed,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Braid(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "{m}"),
            CliError::SuiteFailed => write!(f, "property suite reported failures"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Braid(e)
    }
}

/// 1 for malformed input, 2 for internal consistency failures.
fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Input(_) => 1,
        CliError::SuiteFailed => 2,
        CliError::Braid(e) => match e {
            Error::MalformedWord { .. }
            | Error::BadModulus { .. }
            | Error::NotPureBraid
            | Error::MalformedSyllables { .. } => 1,
            Error::StructureViolation { .. }
            | Error::ReductionMismatch
            | Error::WitnessVerificationFailed
            | Error::SubdivisionLimit => 2,
        },
    }
}

fn parse_word(s: &str) -> Result<BraidWord, CliError> {
    BraidWord::from_str(s).map_err(CliError::from)
}

/// Returns the words to process: the positional argument or the lines of
/// the given file.
fn inputs(word: Option<String>, file: Option<PathBuf>) -> Result<Vec<String>, CliError> {
    match (word, file) {
        (Some(w), None) => Ok(vec![w]),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok(text.lines().map(str::to_owned).collect())
        }
        (Some(_), Some(_)) => Err(CliError::Input("give a word or --file, not both".into())),
        (None, None) => Err(CliError::Input("missing braid word (or --file)".into())),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Burau { word, modulus, at, file } => {
            for text in inputs(word, file)? {
                let w = parse_word(&text)?;
                let out = burau_output(&w, modulus, at)?;
                print_result(cli.json, out);
            }
            Ok(())
        }
        Cmd::Psl2 { word, matrix, file } => {
            for text in inputs(word, file)? {
                let w = parse_word(&text)?;
                let m = braid_to_modular(&w);
                if cli.json {
                    let syllables: Vec<String> = m
                        .syllables()
                        .iter()
                        .map(|s| match s {
                            braid3::modular::Syllable::A => "A".to_string(),
                            braid3::modular::Syllable::B(k) => format!("B{k}"),
                        })
                        .collect();
                    let mut obj = json!({ "word": w.to_string(), "syllables": syllables });
                    if matrix {
                        obj["matrix"] = int_matrix_json(&modular_to_matrix(&m));
                    }
                    println!("{obj}");
                } else {
                    println!("{m}");
                    if matrix {
                        println!("{}", modular_to_matrix(&m));
                    }
                }
            }
            Ok(())
        }
        Cmd::Pi { word, file } => {
            for text in inputs(word, file)? {
                let w = parse_word(&text)?;
                let value = pi_invariant(&w)?;
                if cli.json {
                    println!("{}", json!({ "word": w.to_string(), "value": value.to_string() }));
                } else {
                    println!("{value}");
                }
            }
            Ok(())
        }
        Cmd::Moody { word, modulus, cp, file } => {
            for text in inputs(word, file)? {
                let w = parse_word(&text)?;
                let r = moody(&w)?;
                let polynomial = match modulus {
                    Some(p) => r.polynomial.mod_p(p)?,
                    None => r.polynomial.clone(),
                };
                if cli.json {
                    let mut obj = json!({
                        "word": w.to_string(),
                        "crossings": r.crossings,
                        "exponents": r.exponents,
                        "signs": r.signs,
                        "cp_sequence": r.cp_sequence,
                        "polynomial": poly_json(&polynomial),
                    });
                    if let Some(p) = modulus {
                        obj["modulus"] = json!(p);
                    }
                    println!("{obj}");
                } else {
                    println!("crossings: {}", r.crossings);
                    println!("polynomial: {polynomial}");
                    if cp {
                        println!("cp sequence: {:?}", r.cp_sequence);
                    }
                }
            }
            Ok(())
        }
        Cmd::Conjugate { word1, word2, witness } => {
            let phi = parse_word(&word1)?;
            let psi = parse_word(&word2)?;
            let verdict = are_conjugate(&phi, &psi)?;
            if cli.json {
                println!("{}", verdict_json(&verdict, witness));
            } else {
                match &verdict {
                    ConjugacyVerdict::Conjugate { witness: g } => {
                        if witness {
                            println!("conjugate, witness {g}");
                        } else {
                            println!("conjugate");
                        }
                    }
                    ConjugacyVerdict::NotConjugate { separating } => {
                        println!("not conjugate ({})", separating_name(*separating));
                    }
                }
            }
            Ok(())
        }
        Cmd::Dichotomy { word1, word2 } => {
            let phi = parse_word(&word1)?;
            let psi = parse_word(&word2)?;
            let report = burau_dichotomy(&phi, &psi)?;
            let branch2 = match report.branch2 {
                Branch2::Holds => "holds",
                Branch2::Fails => "fails",
                Branch2::Inapplicable => "inapplicable",
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "branch1": report.branch1,
                        "branch2": branch2,
                        "gl_conjugacy_refuted": report.gl_conjugacy_refuted,
                        "reversal_candidate": report.reversal_candidate.as_ref().map(|w| w.to_string()),
                    })
                );
            } else {
                println!("branch 1 (φ ~ ψ): {}", if report.branch1 { "holds" } else { "fails" });
                println!("branch 2 (φ ~ Δ²ᵏ·ψ̄⁻¹): {branch2}");
                println!("GL(2, Z[t,t⁻¹]) conjugacy refuted: {}", report.gl_conjugacy_refuted);
            }
            Ok(())
        }
        Cmd::Equal { word1, word2 } => {
            let u = parse_word(&word1)?;
            let v = parse_word(&word2)?;
            let equal = word_problem_equal(&u, &v);
            if cli.json {
                println!("{}", json!({ "equal": equal }));
            } else {
                println!("{}", if equal { "equal" } else { "distinct" });
            }
            Ok(())
        }
        Cmd::Proptest { suite, max_len, seed } => {
            let report = run_suite(&suite, max_len, seed).map_err(CliError::Input)?;
            println!("{}", report.summary(&suite));
            println!("(max-len {max_len}, seed {seed})");
            if report.ok() {
                Ok(())
            } else {
                Err(CliError::SuiteFailed)
            }
        }
        Cmd::Bench { target } => match target {
            BenchTarget::Conjugate { lengths, seed, reps } => {
                let lengths: Vec<usize> = lengths
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::Input(format!("bad length list: {e}")))?;
                if lengths.is_empty() || lengths.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(CliError::Input("lengths must be strictly increasing".into()));
                }
                let report = bench_conjugacy(&lengths, seed, reps);
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "lengths": report.lengths,
                            "seconds": report.seconds,
                            "peak_bytes": report.peak_bytes,
                            "fitted_exponent": report.fitted_exponent,
                        })
                    );
                } else {
                    report.print();
                }
                Ok(())
            }
        },
    }
}

fn burau_output(w: &BraidWord, modulus: Option<i64>, at: Option<i64>) -> Result<Value, CliError> {
    if let Some(t) = at {
        if t != -1 {
            return Err(CliError::Input(format!(
                "only the integral specialization t = -1 is supported, got {t}"
            )));
        }
        if let Some(p) = modulus {
            let m = braid3::burau::burau_mod_p(w, p)?.eval_neg_one();
            return Ok(json!({ "word": w.to_string(), "t": -1, "modulus": p, "matrix": int_matrix_json(&m) }));
        }
        let m = integral_burau(w);
        return Ok(json!({ "word": w.to_string(), "t": -1, "matrix": int_matrix_json(&m) }));
    }
    let m = match modulus {
        Some(p) => braid3::burau::burau_mod_p(w, p)?,
        None => burau(w),
    };
    let mut obj = json!({ "word": w.to_string(), "matrix": burau_matrix_json(&m) });
    if let Some(p) = modulus {
        obj["modulus"] = json!(p);
    }
    obj["display"] = json!(m.to_string());
    Ok(obj)
}

fn print_result(as_json: bool, value: Value) {
    if as_json {
        let mut v = value;
        if let Some(obj) = v.as_object_mut() {
            obj.remove("display");
        }
        println!("{v}");
    } else if let Some(display) = value.get("display").and_then(Value::as_str) {
        println!("{display}");
    } else if let Some(matrix) = value.get("matrix") {
        println!("{matrix}");
    } else {
        println!("{value}");
    }
}

/// Ordered list of {exp, coef} pairs, coefficients as exact JSON numbers.
fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let coef = serde_json::Number::from_str(&c.to_string())
                .expect("integer coefficient is a valid JSON number");
            json!({ "exp": e, "coef": Value::Number(coef) })
        })
        .collect();
    Value::Array(terms)
}

fn burau_matrix_json(m: &BurauMatrix) -> Value {
    json!([
        [poly_json(&m.entries[0][0]), poly_json(&m.entries[0][1])],
        [poly_json(&m.entries[1][0]), poly_json(&m.entries[1][1])],
    ])
}

fn int_matrix_json(m: &IntMatrix2) -> Value {
    let n = |v: &num::BigInt| {
        Value::Number(serde_json::Number::from_str(&v.to_string()).expect("valid JSON integer"))
    };
    json!([
        [n(&m.entries[0][0]), n(&m.entries[0][1])],
        [n(&m.entries[1][0]), n(&m.entries[1][1])],
    ])
}

fn separating_name(s: SeparatingInvariant) -> &'static str {
    match s {
        SeparatingInvariant::ExponentSum => "exponent sum",
        SeparatingInvariant::Psl2Class => "PSL(2,Z) class",
    }
}

fn verdict_json(v: &ConjugacyVerdict, include_witness: bool) -> Value {
    match v {
        ConjugacyVerdict::Conjugate { witness } => {
            let mut obj = json!({ "decision": "conjugate" });
            if include_witness {
                obj["witness"] = json!(witness.to_string());
            }
            obj
        }
        ConjugacyVerdict::NotConjugate { separating } => json!({
            "decision": "not_conjugate",
            "separating_invariant": match separating {
                SeparatingInvariant::ExponentSum => "exponent_sum",
                SeparatingInvariant::Psl2Class => "psl2_class",
            },
        }),
    }
}
