//! Parameter sweeps over a family member or a normal-form constant.

use clap::ValueEnum;
use homog3_core::{
    analyze, member_report, s4_family, so2_family, AnalysisReport, Error, MetricLieAlgebra, NormalForm,
    Rational, SolverOutcome, StructureFamily,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::render;

/// Upper bound on the number of samples in one sweep.
pub const MAX_SAMPLES: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Param {
    /// Parameter of the S4 or SO(2) family.
    R,
    C1,
    C2,
    C3,
    Alpha,
    Beta,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::R => "r",
            Param::C1 => "c1",
            Param::C2 => "c2",
            Param::C3 => "c3",
            Param::Alpha => "alpha",
            Param::Beta => "beta",
        }
    }
}

/// `from, from + step, ..., ≤ to`, ascending.
pub fn samples(from: &Rational, to: &Rational, step: &Rational) -> Result<Vec<Rational>, Error> {
    if !step.is_positive() {
        return Err(Error::Parse("--step must be positive".into()));
    }
    if from > to {
        return Err(Error::Parse("--from must not exceed --to".into()));
    }
    let mut out = Vec::new();
    let mut t = from.clone();
    while &t <= to {
        if out.len() == MAX_SAMPLES {
            return Err(Error::Parse(format!("sweep exceeds {MAX_SAMPLES} samples")));
        }
        out.push(t.clone());
        t = &t + step;
    }
    Ok(out)
}

fn family_of(g: &MetricLieAlgebra) -> Result<StructureFamily, Error> {
    match g.normal_form() {
        NormalForm::Unimodular(_) => s4_family(g),
        NormalForm::NonUnimodular { .. } => so2_family(g),
        NormalForm::Generic => Err(Error::GenericForm),
    }
}

fn substitute(g: &MetricLieAlgebra, p: Param, t: &Rational) -> Result<MetricLieAlgebra, Error> {
    match (g.normal_form(), p) {
        (NormalForm::Unimodular(c), Param::C1 | Param::C2 | Param::C3) => {
            let mut c = c.clone();
            let i = match p {
                Param::C1 => 0,
                Param::C2 => 1,
                _ => 2,
            };
            c[i] = t.clone();
            let [a, b, d] = c;
            Ok(MetricLieAlgebra::unimodular(a, b, d))
        }
        (NormalForm::NonUnimodular { alpha, beta }, Param::Alpha | Param::Beta) => {
            if p == Param::Alpha {
                MetricLieAlgebra::nonunimodular(t.clone(), beta.clone())
            } else {
                MetricLieAlgebra::nonunimodular(alpha.clone(), t.clone())
            }
        }
        _ => Err(Error::WrongNormalForm(format!(
            "parameter {} does not belong to this normal form",
            p.name()
        ))),
    }
}

fn summary(rep: &AnalysisReport) -> String {
    match &rep.solver {
        SolverOutcome::LocallySymmetric { note } => note.clone(),
        SolverOutcome::SpaceForm { curvature, note } => format!("constant curvature {curvature}; {note}"),
        SolverOutcome::Structures { .. } => {
            let classes: Vec<&str> = rep.structures.iter().map(|s| s.tv_class.label()).collect();
            format!(
                "{} isolated [{}], {} families",
                rep.structures.len(),
                classes.join(", "),
                rep.families.len()
            )
        }
    }
}

/// One evaluated sample: JSON value and text line, or the failure.
pub struct Sample {
    pub parameter: Rational,
    pub result: Result<(Value, String), Error>,
}

pub fn run(g: &MetricLieAlgebra, p: Param, ts: &[Rational]) -> Result<Vec<Sample>, Error> {
    let family = if p == Param::R { Some(family_of(g)?) } else { None };
    Ok(ts
        .par_iter()
        .map(|t| {
            let result = match &family {
                Some(fam) => member_report(g, fam, t).map(|m| {
                    let mut v = serde_json::to_value(&m).expect("report serializes");
                    v["param"] = json!(p.name());
                    (v, render::member_line(p.name(), &m))
                }),
                None => substitute(g, p, t).and_then(|h| analyze(&h)).map(|rep| {
                    let line = format!("{} = {t}: {}", p.name(), summary(&rep));
                    (json!({ "param": p.name(), "parameter": t, "report": rep }), line)
                }),
            };
            Sample {
                parameter: t.clone(),
                result,
            }
        })
        .collect())
}

/// Largest denominator bit-length among rational strings in a JSON value.
pub fn max_denom_bits(v: &Value) -> u64 {
    match v {
        Value::String(s) if s.contains('/') => s.parse::<Rational>().map_or(0, |r| r.denom_bits()),
        Value::Array(a) => a.iter().map(max_denom_bits).max().unwrap_or(0),
        Value::Object(o) => o.values().map(max_denom_bits).max().unwrap_or(0),
        _ => 0,
    }
}
