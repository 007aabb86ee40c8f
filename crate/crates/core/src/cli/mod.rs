//! The `jumploci` command line: file formats in, JSON reports out.
//!
//! Reports go to stdout (or `--out`), a short human summary to stderr. Exit
//! codes: 0 when every check passes, 1 when a counterexample is found, 2 on
//! input errors, 3 when a size limit is hit.

mod case;
mod suite;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::deformation::{AlgebraModel, DEFAULT_DEPTH};
use crate::error::{Error, Result};
use crate::field::{Field, GaussianRational, Rational};
use crate::freecomplex::{koszul_family, FreeComplex};
use crate::io;

pub use case::{case_to_json, parse_case, run_case, Case, CaseFile, CaseKind, Outcome, Verdict};
pub use suite::{generate_case, run_suite, SuiteOptions, SuiteSummary, SUITE_KINDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldKind {
    /// The rationals.
    Q,
    /// The Gaussian rationals ℚ(i).
    Qi,
}

impl FieldKind {
    pub fn tag(self) -> &'static str {
        match self {
            FieldKind::Q => "q",
            FieldKind::Qi => "qi",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "jumploci",
    version,
    about = "Cohomology jump ideals, Artinian freeness tests and the local linear model"
)]
pub struct Cli {
    /// Seed for the random suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of generated cases.
    #[arg(long, global = true, default_value_t = 50)]
    pub count: u64,
    /// Comparison depth for the local linearity check.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    pub depth: u32,
    /// Write the JSON report here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub out: Option<PathBuf>,
    /// Ground field.
    #[arg(long, global = true, value_enum, default_value_t = FieldKind::Q)]
    pub field: FieldKind,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal file.
    Gb { file: PathBuf },
    /// Jump ideal J^i_k of a complex file.
    JumpIdeal {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        i: i64,
        #[arg(long = "k", allow_hyphen_values = true)]
        k: i64,
        /// Use the intersection of block-diagonal minor ideals instead.
        #[arg(long)]
        alt: bool,
    },
    /// Fiber cohomology dimensions of a complex at a point.
    FiberDims {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. "0,1/2".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long = "i", allow_hyphen_values = true)]
        i: Option<i64>,
    },
    /// The Koszul family of ℚ[x1..xg].
    Koszul {
        #[arg(long)]
        g: usize,
    },
    /// Quadratic cone ideal of cup data.
    Cone { file: PathBuf },
    /// Annihilator subspace of cup data around degree i.
    Annihilator {
        file: PathBuf,
        #[arg(long = "i", allow_hyphen_values = true)]
        i: i64,
    },
    /// Run a verifier on a case file or on a random suite.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Run a random suite: prop21, lemma-image, prop-main, boundary,
    /// thm-linear, or all.
    Suite {
        kind: String,
        #[arg(long)]
        g: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Case file.
    pub file: Option<PathBuf>,
    /// Run `--count` generated cases from `--seed` instead of a file.
    #[arg(long)]
    pub random: bool,
    /// Number of model generators for generated cases.
    #[arg(long)]
    pub g: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    Prop21(VerifyArgs),
    LemmaImage(VerifyArgs),
    PropMain(VerifyArgs),
    Boundary(VerifyArgs),
    ThmLinear {
        file: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long = "i", allow_hyphen_values = true)]
        i: Option<i64>,
        /// Defaults to the fiber dimension at the point.
        #[arg(long = "k")]
        k: Option<usize>,
    },
}

/// A report plus the outcomes that determine the exit code.
pub struct Execution {
    pub report: Value,
    pub outcomes: Vec<Outcome>,
    pub summary: Vec<String>,
}

pub fn exit_code(outcomes: &[Outcome]) -> i32 {
    let input_error = outcomes
        .iter()
        .any(|o| matches!(o, Outcome::Error(e) if !matches!(e, Error::SizeLimit(_))));
    if input_error {
        2
    } else if outcomes
        .iter()
        .any(|o| matches!(o, Outcome::Error(Error::SizeLimit(_))))
    {
        3
    } else if outcomes.contains(&Outcome::Fail) {
        1
    } else {
        0
    }
}

pub fn parse_point<F: Field>(text: &str) -> Result<Vec<F>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            F::parse_scalar(s.trim())
                .ok_or_else(|| Error::parse("--point", format!("`{}` is not a scalar", s.trim())))
        })
        .collect()
}

fn file_id(path: &Path) -> Value {
    json!(path.display().to_string())
}

fn single(verdict: Verdict) -> Execution {
    let line = format!(
        "{} {}: {}",
        verdict.report["kind"].as_str().unwrap_or("case"),
        verdict.report["case"],
        verdict.outcome.tag()
    );
    Execution {
        summary: vec![line],
        outcomes: vec![verdict.outcome],
        report: verdict.report,
    }
}

fn run_file<F: Field>(path: &Path, kind: CaseKind) -> Result<Execution> {
    let v = io::read_json(path)?;
    let file = parse_case::<F>(&v, Some(kind))?;
    Ok(single(run_case(&file, &file_id(path))))
}

fn suite_execution<F: Field>(kinds: &[CaseKind], cli: &Cli, g: Option<usize>) -> Execution {
    let opts = SuiteOptions {
        g,
        depth: cli.depth,
    };
    let mut outcomes = Vec::new();
    let mut summary = Vec::new();
    let mut reports = Vec::new();
    for &kind in kinds {
        let s = run_suite::<F>(kind, cli.seed, cli.count, opts);
        summary.push(format!(
            "{}: {} cases, {} passed, {} failed, {} skipped, {} errors (seed {})",
            kind.tag(),
            s.count,
            s.passed(),
            s.failed(),
            s.skipped(),
            s.errors(),
            s.seed
        ));
        for (n, reason) in s.skips() {
            summary.push(format!("  case {n} skipped: {reason}"));
        }
        if !s.failing_cases().is_empty() {
            summary.push(format!("  failing cases: {:?}", s.failing_cases()));
        }
        outcomes.extend(s.outcomes().cloned());
        reports.push(s.to_json(cli.field.tag()));
    }
    let report = if reports.len() == 1 {
        reports.pop().expect("one report")
    } else {
        json!({"suites": reports})
    };
    Execution {
        report,
        outcomes,
        summary,
    }
}

fn verify<F: Field>(kind: CaseKind, args: &VerifyArgs, cli: &Cli) -> Result<Execution> {
    match (&args.file, args.random) {
        (_, true) => Ok(suite_execution::<F>(&[kind], cli, args.g)),
        (Some(path), false) => run_file::<F>(path, kind),
        (None, false) => Err(Error::parse("$", "give a case file or --random")),
    }
}

/// A bare cup-data file or a case file with `"kind"`.
fn cup_case<F: Field>(path: &Path, kind: CaseKind, i: Option<i64>) -> Result<Execution> {
    let v = io::read_json(path)?;
    let file = if v.get("kind").is_some() {
        parse_case::<F>(&v, Some(kind))?
    } else {
        let cup = io::cup_from_json::<F>(&v, "")?;
        let case = match i {
            Some(i) => Case::Annihilator { cup, i },
            None => Case::Cone { cup },
        };
        CaseFile {
            case,
            expected: None,
        }
    };
    Ok(single(run_case(&file, &file_id(path))))
}

fn complex_file<F: Field>(path: &Path) -> Result<FreeComplex<F>> {
    let v = io::read_json(path)?;
    match v.get("complex") {
        Some(c) => io::complex_from_json(c, "complex"),
        None => io::complex_from_json(&v, ""),
    }
}

fn plain(report: Value, line: String) -> Execution {
    Execution {
        report,
        outcomes: vec![Outcome::Pass],
        summary: vec![line],
    }
}

pub fn execute<F: Field>(cli: &Cli) -> Result<Execution> {
    match &cli.command {
        Command::Gb { file } => {
            let ideal = io::ideal_from_json::<F>(&io::read_json(file)?, "")?;
            let n = ideal.reduced_gb().len();
            Ok(plain(
                io::ideal_to_json(&ideal),
                format!("reduced basis with {n} elements"),
            ))
        }
        Command::JumpIdeal { file, i, k, alt } => {
            let complex = complex_file::<F>(file)?;
            let case = Case::JumpIdeal {
                complex,
                i: *i,
                k: *k,
                alt: *alt,
            };
            Ok(single(run_case(
                &CaseFile {
                    case,
                    expected: None,
                },
                &file_id(file),
            )))
        }
        Command::FiberDims { file, point, i } => {
            let complex = complex_file::<F>(file)?;
            let p = parse_point::<F>(point)?;
            let degrees: Vec<i64> = match i {
                Some(i) => vec![*i],
                None => (complex.lo()..=complex.hi()).collect(),
            };
            let mut dims = Map::new();
            for d in degrees {
                dims.insert(d.to_string(), json!(complex.fiber_cohomology_dim(&p, d)?));
            }
            let report = json!({"point": io::vector_to_json(&p), "dims": Value::Object(dims)});
            Ok(plain(report, "fiber dimensions computed".into()))
        }
        Command::Koszul { g } => {
            let k = koszul_family::<F>(*g)?;
            Ok(plain(
                io::complex_to_json(&k),
                format!("Koszul family with g = {g}"),
            ))
        }
        Command::Cone { file } => cup_case::<F>(file, CaseKind::Cone, None),
        Command::Annihilator { file, i } => cup_case::<F>(file, CaseKind::Annihilator, Some(*i)),
        Command::Verify { which } => match which {
            VerifyCommand::Prop21(a) => verify::<F>(CaseKind::Prop21, a, cli),
            VerifyCommand::LemmaImage(a) => verify::<F>(CaseKind::LemmaImage, a, cli),
            VerifyCommand::PropMain(a) => verify::<F>(CaseKind::PropMain, a, cli),
            VerifyCommand::Boundary(a) => verify::<F>(CaseKind::Boundary, a, cli),
            VerifyCommand::ThmLinear {
                file,
                random,
                g,
                point,
                i,
                k,
            } => {
                if *random {
                    return Ok(suite_execution::<F>(&[CaseKind::ThmLinear], cli, *g));
                }
                if let Some(path) = file {
                    return run_file::<F>(path, CaseKind::ThmLinear);
                }
                let g = g.ok_or_else(|| {
                    Error::parse("--g", "give a case file, --random, or --g with --i")
                })?;
                let i = i.ok_or_else(|| Error::parse("--i", "missing degree"))?;
                let model = AlgebraModel::exterior(g);
                let point = match point {
                    Some(p) => parse_point::<F>(p)?,
                    None => vec![F::zero(); g],
                };
                let k = match k {
                    Some(k) => *k,
                    None => model.fiber_cohomology(&point, i)?.dim(),
                };
                let case = Case::ThmLinear {
                    model,
                    point,
                    i,
                    k,
                    depth: cli.depth,
                };
                Ok(single(run_case(
                    &CaseFile {
                        case,
                        expected: None,
                    },
                    &json!("command line"),
                )))
            }
        },
        Command::Suite { kind, g } => {
            let kinds: Vec<CaseKind> = if kind == "all" {
                SUITE_KINDS.to_vec()
            } else {
                match CaseKind::from_tag(kind) {
                    Some(k) if SUITE_KINDS.contains(&k) => vec![k],
                    _ => {
                        return Err(Error::parse(
                            "kind",
                            format!("no random suite named `{kind}`"),
                        ))
                    }
                }
            };
            Ok(suite_execution::<F>(&kinds, cli, *g))
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = match cli.field {
        FieldKind::Q => execute::<Rational>(cli),
        FieldKind::Qi => execute::<GaussianRational>(cli),
    };
    let exec = match result {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&[Outcome::Error(e)]);
        }
    };
    let text = io::to_pretty(&exec.report);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    for line in &exec.summary {
        eprintln!("{line}");
    }
    exit_code(&exec.outcomes)
}
