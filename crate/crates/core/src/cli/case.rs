use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::artinian::{verify_lemma_image, verify_prop21, AMatrix, ArtinianAlgebra, MapSpec};
use crate::deformation::{
    verify_boundary_formula, verify_prop_main, verify_thm_linear, AlgebraModel, CupData,
    DEFAULT_DEPTH,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freecomplex::FreeComplex;
use crate::io::*;
use crate::poly::Ring;

/// The `kind` tag of a case file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    JumpIdeal,
    Prop21,
    PropMain,
    ThmLinear,
    LemmaImage,
    Cone,
    Annihilator,
    Boundary,
}

impl CaseKind {
    pub const ALL: [CaseKind; 8] = [
        CaseKind::JumpIdeal,
        CaseKind::Prop21,
        CaseKind::PropMain,
        CaseKind::ThmLinear,
        CaseKind::LemmaImage,
        CaseKind::Cone,
        CaseKind::Annihilator,
        CaseKind::Boundary,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CaseKind::JumpIdeal => "jump-ideal",
            CaseKind::Prop21 => "prop21",
            CaseKind::PropMain => "prop-main",
            CaseKind::ThmLinear => "thm-linear",
            CaseKind::LemmaImage => "lemma-image",
            CaseKind::Cone => "cone",
            CaseKind::Annihilator => "annihilator",
            CaseKind::Boundary => "boundary",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

/// A validated case.
#[derive(Clone, Debug)]
pub enum Case<F> {
    JumpIdeal {
        complex: FreeComplex<F>,
        i: i64,
        k: i64,
        alt: bool,
    },
    Prop21 {
        complex: FreeComplex<F>,
        map: MapSpec<F>,
        i: i64,
        k: usize,
    },
    PropMain {
        model: AlgebraModel<F>,
        map: MapSpec<F>,
        i: i64,
    },
    ThmLinear {
        model: AlgebraModel<F>,
        point: Vec<F>,
        i: i64,
        k: usize,
        depth: u32,
    },
    LemmaImage {
        algebra: Arc<ArtinianAlgebra<F>>,
        sigma: AMatrix<F>,
        c: i64,
    },
    Cone {
        cup: CupData<F>,
    },
    Annihilator {
        cup: CupData<F>,
        i: i64,
    },
    Boundary {
        model: AlgebraModel<F>,
        map: MapSpec<F>,
        j: usize,
        i: i64,
    },
}

impl<F> Case<F> {
    pub fn kind(&self) -> CaseKind {
        match self {
            Case::JumpIdeal { .. } => CaseKind::JumpIdeal,
            Case::Prop21 { .. } => CaseKind::Prop21,
            Case::PropMain { .. } => CaseKind::PropMain,
            Case::ThmLinear { .. } => CaseKind::ThmLinear,
            Case::LemmaImage { .. } => CaseKind::LemmaImage,
            Case::Cone { .. } => CaseKind::Cone,
            Case::Annihilator { .. } => CaseKind::Annihilator,
            Case::Boundary { .. } => CaseKind::Boundary,
        }
    }
}

/// A case together with its optional golden block.
#[derive(Clone, Debug)]
pub struct CaseFile<F> {
    pub case: Case<F>,
    /// Every key present here must appear in the report with an equal value.
    pub expected: Option<Value>,
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    i64_of(field(v, key, "")?, key)
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    usize_of(field(v, key, "")?, key)
}

fn model_ring<F: Field>(model: &AlgebraModel<F>) -> Arc<Ring> {
    Ring::numbered("x", model.g())
}

/// `kind` is required unless `expect` supplies it.
pub fn parse_case<F: Field>(v: &Value, expect: Option<CaseKind>) -> Result<CaseFile<F>> {
    let kind = match v.get("kind") {
        Some(t) => {
            let tag = str_of(t, "kind")?;
            let kind = CaseKind::from_tag(tag)
                .ok_or_else(|| Error::parse("kind", format!("unknown kind `{tag}`")))?;
            if let Some(e) = expect {
                if e != kind {
                    return Err(Error::parse(
                        "kind",
                        format!("expected a `{}` case, found `{tag}`", e.tag()),
                    ));
                }
            }
            kind
        }
        None => expect.ok_or_else(|| Error::parse("$", "missing field `kind`"))?,
    };
    let algebra = || -> Result<Arc<ArtinianAlgebra<F>>> {
        Ok(Arc::new(algebra_from_json(
            field(v, "algebra", "")?,
            "algebra",
        )?))
    };
    let model = || model_from_json::<F>(field(v, "model", "")?, "model");
    let case = match kind {
        CaseKind::JumpIdeal => Case::JumpIdeal {
            complex: complex_from_json(field(v, "complex", "")?, "complex")?,
            i: get_i64(v, "i")?,
            k: get_i64(v, "k")?,
            alt: match v.get("alt") {
                Some(b) => b
                    .as_bool()
                    .ok_or_else(|| Error::parse("alt", "expected a boolean"))?,
                None => false,
            },
        },
        CaseKind::Prop21 => {
            let complex: FreeComplex<F> = complex_from_json(field(v, "complex", "")?, "complex")?;
            let alg = algebra()?;
            let map = map_from_json(complex.ring(), &alg, field(v, "map", "")?, "map")?;
            Case::Prop21 {
                complex,
                map,
                i: get_i64(v, "i")?,
                k: get_usize(v, "k")?,
            }
        }
        CaseKind::PropMain | CaseKind::Boundary => {
            let model = model()?;
            let alg = algebra()?;
            let map = map_from_json(&model_ring(&model), &alg, field(v, "map", "")?, "map")?;
            let i = get_i64(v, "i")?;
            if kind == CaseKind::PropMain {
                Case::PropMain { model, map, i }
            } else {
                Case::Boundary {
                    model,
                    map,
                    j: get_usize(v, "j")?,
                    i,
                }
            }
        }
        CaseKind::ThmLinear => {
            let model = model()?;
            let point = vector_from_json(field(v, "point", "")?, Some(model.g()), "point")?;
            Case::ThmLinear {
                model,
                point,
                i: get_i64(v, "i")?,
                k: get_usize(v, "k")?,
                depth: match v.get("depth") {
                    Some(d) => usize_of(d, "depth")? as u32,
                    None => DEFAULT_DEPTH,
                },
            }
        }
        CaseKind::LemmaImage => {
            let alg = algebra()?;
            let sigma = amatrix_from_json(&alg, field(v, "sigma", "")?, "sigma")?;
            Case::LemmaImage {
                algebra: alg,
                sigma,
                c: get_i64(v, "c")?,
            }
        }
        CaseKind::Cone => Case::Cone {
            cup: cup_from_json(field(v, "cup", "")?, "cup")?,
        },
        CaseKind::Annihilator => Case::Annihilator {
            cup: cup_from_json(field(v, "cup", "")?, "cup")?,
            i: get_i64(v, "i")?,
        },
    };
    Ok(CaseFile {
        case,
        expected: v.get("expected").cloned(),
    })
}

/// Canonical serialization; `parse_case` of the result yields an equal case.
pub fn case_to_json<F: Field>(case: &Case<F>) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), json!(case.kind().tag()));
    match case {
        Case::JumpIdeal { complex, i, k, alt } => {
            o.insert("complex".into(), complex_to_json(complex));
            o.insert("i".into(), json!(i));
            o.insert("k".into(), json!(k));
            o.insert("alt".into(), json!(alt));
        }
        Case::Prop21 { complex, map, i, k } => {
            o.insert("complex".into(), complex_to_json(complex));
            o.insert("algebra".into(), algebra_to_json(map.algebra()));
            o.insert("map".into(), map_to_json(map));
            o.insert("i".into(), json!(i));
            o.insert("k".into(), json!(k));
        }
        Case::PropMain { model, map, i } => {
            o.insert("model".into(), model_to_json(model));
            o.insert("algebra".into(), algebra_to_json(map.algebra()));
            o.insert("map".into(), map_to_json(map));
            o.insert("i".into(), json!(i));
        }
        Case::Boundary { model, map, j, i } => {
            o.insert("model".into(), model_to_json(model));
            o.insert("algebra".into(), algebra_to_json(map.algebra()));
            o.insert("map".into(), map_to_json(map));
            o.insert("j".into(), json!(j));
            o.insert("i".into(), json!(i));
        }
        Case::ThmLinear {
            model,
            point,
            i,
            k,
            depth,
        } => {
            o.insert("model".into(), model_to_json(model));
            o.insert("point".into(), vector_to_json(point));
            o.insert("i".into(), json!(i));
            o.insert("k".into(), json!(k));
            o.insert("depth".into(), json!(depth));
        }
        Case::LemmaImage { algebra, sigma, c } => {
            o.insert("algebra".into(), algebra_to_json(algebra));
            o.insert("sigma".into(), amatrix_to_json(sigma));
            o.insert("c".into(), json!(c));
        }
        Case::Cone { cup } => {
            o.insert("cup".into(), cup_to_json(cup));
        }
        Case::Annihilator { cup, i } => {
            o.insert("cup".into(), cup_to_json(cup));
            o.insert("i".into(), json!(i));
        }
    }
    Value::Object(o)
}

/// How a case ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A mathematical counterexample or a golden mismatch.
    Fail,
    /// The case's hypothesis does not hold; not a counterexample.
    Skip(String),
    Error(Error),
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skip(_) => "precondition-failed",
            Outcome::Error(_) => "error",
        }
    }
}

/// A verdict report: fields in a fixed order, no timing.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub report: Value,
}

struct ReportBuilder(Map<String, Value>);

impl ReportBuilder {
    fn new(kind: CaseKind, id: &Value) -> Self {
        let mut m = Map::new();
        m.insert("case".into(), id.clone());
        m.insert("kind".into(), json!(kind.tag()));
        ReportBuilder(m)
    }

    fn put(mut self, key: &str, v: Value) -> Self {
        self.0.insert(key.into(), v);
        self
    }

    fn finish(mut self, outcome: Outcome) -> Verdict {
        self.0.insert("outcome".into(), json!(outcome.tag()));
        if let Outcome::Skip(reason) = &outcome {
            self.0.insert("reason".into(), json!(reason));
        }
        if let Outcome::Error(e) = &outcome {
            self.0.insert("error".into(), json!(e.to_string()));
        }
        Verdict {
            outcome,
            report: Value::Object(self.0),
        }
    }
}

fn pass_if(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// Dispatches a case to its verifier. `id` identifies the case in the report.
pub fn run_case<F: Field>(file: &CaseFile<F>, id: &Value) -> Verdict {
    let kind = file.case.kind();
    let verdict = match run_inner(&file.case, id) {
        Ok(v) => v,
        Err(Error::Precondition(reason)) => {
            ReportBuilder::new(kind, id).finish(Outcome::Skip(reason))
        }
        Err(e) => ReportBuilder::new(kind, id).finish(Outcome::Error(e)),
    };
    match &file.expected {
        Some(expected) => check_expected(verdict, expected),
        None => verdict,
    }
}

fn check_expected(mut verdict: Verdict, expected: &Value) -> Verdict {
    let mismatches: Vec<String> = match expected.as_object() {
        Some(obj) => obj
            .iter()
            .filter(|(k, v)| verdict.report.get(k.as_str()) != Some(*v))
            .map(|(k, _)| k.clone())
            .collect(),
        None => vec!["$".into()],
    };
    if let Some(obj) = verdict.report.as_object_mut() {
        obj.insert("expected_matches".into(), json!(mismatches.is_empty()));
        if !mismatches.is_empty() {
            obj.insert("expected_mismatches".into(), json!(mismatches));
            obj.insert("outcome".into(), json!(Outcome::Fail.tag()));
        }
    }
    if !mismatches.is_empty() && matches!(verdict.outcome, Outcome::Pass | Outcome::Skip(_)) {
        verdict.outcome = Outcome::Fail;
    }
    verdict
}

fn run_inner<F: Field>(case: &Case<F>, id: &Value) -> Result<Verdict> {
    let r = ReportBuilder::new(case.kind(), id);
    Ok(match case {
        Case::JumpIdeal { complex, i, k, alt } => {
            let ideal = if *alt {
                complex.jump_ideal_alt(*i, *k)?
            } else {
                complex.jump_ideal(*i, *k)?
            };
            r.put("i", json!(i))
                .put("k", json!(k))
                .put("alt", json!(alt))
                .put("linear", json!(ideal.is_linear()))
                .put("ideal", ideal_to_json(&ideal))
                .finish(Outcome::Pass)
        }
        Case::Prop21 { complex, map, i, k } => {
            let v = verify_prop21(complex, map, *i, *k)?;
            match &v.sides {
                None => r
                    .put("i", json!(i))
                    .put("k", json!(k))
                    .put("fiber_dim", json!(v.fiber_dim))
                    .finish(Outcome::Skip(format!(
                        "fiber dimension {} differs from k = {k}",
                        v.fiber_dim
                    ))),
                Some(s) => {
                    let eq = s.side_i == s.side_ii;
                    r.put("i", json!(i))
                        .put("k", json!(k))
                        .put("fiber_dim", json!(v.fiber_dim))
                        .put("side_i", json!(s.side_i))
                        .put("side_ii", json!(s.side_ii))
                        .put("equivalent", json!(eq))
                        .put(
                            "witness",
                            json!({
                                "jump_ideal": ideal_to_json(&s.jump_ideal),
                                "kernel": ideal_to_json(&s.kernel),
                                "cohomology_dim": s.cohomology_dim,
                                "min_generators": s.min_generators,
                            }),
                        )
                        .finish(pass_if(eq))
                }
            }
        }
        Case::LemmaImage { algebra, sigma, c } => {
            let v = verify_lemma_image(algebra, sigma, *c)?;
            let r = r
                .put("c", json!(c))
                .put("top_minors_vanish", json!(v.top_minors_vanish))
                .put("residue_minors_unit", json!(v.residue_minors_unit));
            match v.image {
                None => r.finish(Outcome::Skip("the minor hypotheses do not hold".into())),
                Some((free, k0)) => r
                    .put("free", json!(free))
                    .put("rank", json!(k0))
                    .put("image_dim", json!(v.image_dim))
                    .finish(pass_if(v.holds() == Some(true))),
            }
        }
        Case::PropMain { model, map, i } => {
            let v = verify_prop_main(model, map, *i)?;
            let s = &v.sides;
            let p21 = verify_prop21(&model.family()?, map, *i, v.k)?;
            let cross = p21.sides.as_ref().map(|p| p.side_ii);
            let cross_ok = cross == Some(s.side_i);
            let ok = v.equivalent()
                && (!s.side_i || (s.shadow_dim && s.shadow_surjective))
                && (!s.side_ii || s.exact_iii != Some(false))
                && cross_ok;
            r.put("i", json!(i))
                .put("k", json!(v.k))
                .put("l", json!(v.l))
                .put("side_i", json!(s.side_i))
                .put("side_ii", json!(s.side_ii))
                .put("equivalent", json!(v.equivalent()))
                .put("shadow_dim", json!(s.shadow_dim))
                .put("shadow_surjective", json!(s.shadow_surjective))
                .put("exact_iii", json!(s.exact_iii))
                .put("polynomial_pipeline_free", json!(cross))
                .put(
                    "witness",
                    json!({
                        "cohomology_dim": s.cohomology_dim,
                        "min_generators": s.min_generators,
                        "derivative_space": subspace_to_json(&s.derivative),
                        "annihilator": subspace_to_json(&s.annihilator),
                    }),
                )
                .finish(pass_if(ok))
        }
        Case::Boundary { model, map, j, i } => {
            let v = verify_boundary_formula(model, map, *j, *i)?;
            r.put("j", json!(j))
                .put("i", json!(i))
                .put("formula_holds", json!(v.formula_holds))
                .put("extension_holds", json!(v.extension_holds))
                .put(
                    "witness",
                    json!({
                        "connecting": matrix_to_json(&v.connecting),
                        "formula": matrix_to_json(&v.formula),
                        "extension": matrix_to_json(&v.extension),
                    }),
                )
                .finish(pass_if(v.formula_holds))
        }
        Case::ThmLinear {
            model,
            point,
            i,
            k,
            depth,
        } => {
            let v = verify_thm_linear(model, point, *i, *k, *depth)?;
            r.put("i", json!(i))
                .put("k", json!(k))
                .put("depth", json!(depth))
                .put("equal_mod", json!(v.equal_mod))
                .put("verified_to_depth", json!(v.holds()))
                .put("jump_ideal", ideal_to_json(&v.jump_ideal))
                .put("linear_ideal", ideal_to_json(&v.linear_ideal))
                .finish(pass_if(v.holds()))
        }
        Case::Cone { cup } => r
            .put("ideal", ideal_to_json(&cup.cone_ideal()))
            .finish(Outcome::Pass),
        Case::Annihilator { cup, i } => {
            let ann = cup.annihilator(*i)?;
            r.put("i", json!(i))
                .put("subspace", subspace_to_json(&ann.subspace))
                .put("ideal", ideal_to_json(&ann.ideal))
                .finish(Outcome::Pass)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::freecomplex::koszul_family;

    type Q = Rational;

    fn prop21_json() -> Value {
        json!({
            "kind": "prop21",
            "complex": complex_to_json(&koszul_family::<Q>(1).unwrap()),
            "algebra": {"vars": ["e"], "rel": ["e^2"]},
            "map": {"point": ["0"], "images": [["0", "1"]]},
            "i": 0, "k": 1,
            "expected": {"side_i": false, "side_ii": false, "equivalent": true}
        })
    }

    #[test]
    fn prop21_case_file() {
        let file = parse_case::<Q>(&prop21_json(), None).unwrap();
        let v = run_case(&file, &json!("koszul1"));
        assert_eq!(v.outcome, Outcome::Pass);
        assert_eq!(v.report["expected_matches"], json!(true));
    }

    #[test]
    fn golden_mismatch_is_a_failure() {
        let mut j = prop21_json();
        j["expected"]["side_i"] = json!(true);
        let v = run_case(&parse_case::<Q>(&j, None).unwrap(), &json!(0));
        assert_eq!(v.outcome, Outcome::Fail);
    }

    #[test]
    fn serialization_round_trips() {
        let file = parse_case::<Q>(&prop21_json(), None).unwrap();
        let once = case_to_json(&file.case);
        let twice = case_to_json(&parse_case::<Q>(&once, None).unwrap().case);
        assert_eq!(once, twice);
    }

    #[test]
    fn kind_mismatch() {
        assert!(parse_case::<Q>(&prop21_json(), Some(CaseKind::Cone)).is_err());
        assert!(parse_case::<Q>(&json!({"kind": "nope"}), None).is_err());
    }

    #[test]
    fn thm_linear_precondition_is_a_skip() {
        let j = json!({"kind": "thm-linear", "model": {"exterior": 2}, "point": ["0", "0"], "i": 1, "k": 1});
        let v = run_case(&parse_case::<Q>(&j, None).unwrap(), &json!(0));
        assert!(matches!(v.outcome, Outcome::Skip(_)));
    }
}
