use rayon::prelude::*;
use serde_json::{json, Value};

use crate::deformation::DEFAULT_DEPTH;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::random;

use super::case::{case_to_json, run_case, Case, CaseFile, CaseKind, Outcome, Verdict};

/// Options shared by the random suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Fixes the number of model generators instead of drawing it from `1..=3`.
    pub g: Option<usize>,
    pub depth: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            g: None,
            depth: DEFAULT_DEPTH,
        }
    }
}

/// The kinds that have a random generator.
pub const SUITE_KINDS: [CaseKind; 5] = [
    CaseKind::Prop21,
    CaseKind::LemmaImage,
    CaseKind::PropMain,
    CaseKind::Boundary,
    CaseKind::ThmLinear,
];

/// Case `index` of the suite `(kind, seed)`.
pub fn generate_case<F: Field>(
    kind: CaseKind,
    seed: u64,
    index: u64,
    opts: SuiteOptions,
) -> Result<Case<F>> {
    Ok(match kind {
        CaseKind::Prop21 => {
            let c = random::prop21_case(seed, index)?;
            Case::Prop21 {
                complex: c.complex,
                map: c.map,
                i: c.i,
                k: c.k,
            }
        }
        CaseKind::LemmaImage => {
            let c = random::lemma_image_case(seed, index);
            Case::LemmaImage {
                algebra: c.algebra,
                sigma: c.sigma,
                c: c.c,
            }
        }
        CaseKind::PropMain => {
            let c = random::model_case(seed, index, opts.g)?;
            Case::PropMain {
                model: c.model,
                map: c.map,
                i: c.i,
            }
        }
        CaseKind::Boundary => {
            let c = random::model_case(seed, index, opts.g)?;
            Case::Boundary {
                model: c.model,
                map: c.map,
                j: c.j,
                i: c.i,
            }
        }
        CaseKind::ThmLinear => {
            let (model, point, i) = random::thm_linear_case(seed, index, opts.g);
            let k = model.fiber_cohomology(&point, i)?.dim();
            Case::ThmLinear {
                model,
                point,
                i,
                k,
                depth: opts.depth,
            }
        }
        other => {
            return Err(Error::Precondition(format!(
                "no random generator for `{}` cases",
                other.tag()
            )));
        }
    })
}

/// Counts and per-case reports, in case-index order.
#[derive(Clone, Debug)]
pub struct SuiteSummary {
    pub kind: CaseKind,
    pub seed: u64,
    pub count: u64,
    pub verdicts: Vec<Verdict>,
}

impl SuiteSummary {
    fn count_where(&self, f: impl Fn(&Outcome) -> bool) -> usize {
        self.verdicts.iter().filter(|v| f(&v.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count_where(|o| *o == Outcome::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count_where(|o| *o == Outcome::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count_where(|o| matches!(o, Outcome::Skip(_)))
    }

    pub fn errors(&self) -> usize {
        self.count_where(|o| matches!(o, Outcome::Error(_)))
    }

    pub fn failing_cases(&self) -> Vec<u64> {
        (0..self.count)
            .filter(|&n| self.verdicts[n as usize].outcome == Outcome::Fail)
            .collect()
    }

    /// `(case, reason)` for every precondition skip.
    pub fn skips(&self) -> Vec<(u64, String)> {
        self.verdicts
            .iter()
            .enumerate()
            .filter_map(|(n, v)| match &v.outcome {
                Outcome::Skip(r) => Some((n as u64, r.clone())),
                _ => None,
            })
            .collect()
    }

    pub fn to_json(&self, field: &str) -> Value {
        json!({
            "kind": self.kind.tag(),
            "seed": self.seed,
            "count": self.count,
            "field": field,
            "prng": "ChaCha8, seeded from --seed, stream = case index",
            "passed": self.passed(),
            "failed": self.failed(),
            "skipped": self.skipped(),
            "errors": self.errors(),
            "failing_cases": self.failing_cases(),
            "skips": self.skips().into_iter().map(|(n, r)| json!({"case": n, "reason": r})).collect::<Vec<_>>(),
            "cases": self.verdicts.iter().map(|v| v.report.clone()).collect::<Vec<_>>(),
        })
    }

    pub fn outcomes(&self) -> impl Iterator<Item = &Outcome> {
        self.verdicts.iter().map(|v| &v.outcome)
    }
}

/// Runs `count` generated cases in parallel; reports are ordered by index.
/// Failing reports carry the generated input under `"input"`.
pub fn run_suite<F: Field>(
    kind: CaseKind,
    seed: u64,
    count: u64,
    opts: SuiteOptions,
) -> SuiteSummary {
    let verdicts = (0..count)
        .into_par_iter()
        .map(|n| {
            let id = json!(n);
            match generate_case::<F>(kind, seed, n, opts) {
                Ok(case) => {
                    let file = CaseFile { case, expected: None };
                    let mut v = run_case(&file, &id);
                    if v.outcome == Outcome::Fail {
                        if let Some(obj) = v.report.as_object_mut() {
                            obj.insert("input".into(), case_to_json(&file.case));
                        }
                    }
                    v
                }
                Err(e) => Verdict {
                    report: json!({"case": n, "kind": kind.tag(), "outcome": "error", "error": e.to_string()}),
                    outcome: Outcome::Error(e),
                },
            }
        })
        .collect();
    SuiteSummary {
        kind,
        seed,
        count,
        verdicts,
    }
}
