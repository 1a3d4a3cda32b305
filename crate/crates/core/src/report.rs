//! End-to-end analysis of a metric Lie algebra: classification, curvature,
//! structure enumeration, per-structure reconstruction and contact data,
//! with JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::contact::{contact_report, ContactReport};
use crate::curvature::{constant_curvature_check, is_locally_symmetric, riemann};
use crate::homstruct::{
    as_curvature_data, as_verify, tv_decompose, HomStructure, SolverOutcome, StructureFamily, TvClass,
    solve_left_invariant,
};
use crate::lie::{AlgebraSpec, MetricLieAlgebra, MilnorClass, MilnorGroup};
use crate::linalg::Matrix;
use crate::poly::{solve_quadratic_small, Poly};
use crate::rational::Rational;
use crate::reconstruct::{build_transitive_algebra, fingerprint, AlgebraFingerprint, ReconstructedAlgebra};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor: Option<MilnorClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isometry_dimension: Option<u32>,
    pub unimodular: bool,
    pub algebra: AlgebraFingerprint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureSummary {
    pub scalar: Rational,
    pub ric: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_ricci: Option<Vec<Rational>>,
    /// `K(e1,e2), K(e1,e3), K(e2,e3)`.
    pub sectional: [Rational; 3],
    pub locally_symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant_curvature: Option<Rational>,
}

/// A single verified structure with its transitive algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    #[serde(rename = "S")]
    pub s: HomStructure,
    pub tv_class: TvClass,
    pub ambrose_singer: bool,
    pub holonomy_dim: usize,
    pub reconstruction: ReconstructedAlgebra,
    pub coset_hint: String,
}

/// A parameter value where a family member changes type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialParameter {
    pub parameter: Rational,
    pub tv_class: TvClass,
    pub holonomy_dim: usize,
    pub flat: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: StructureFamily,
    pub generic_tv_class: TvClass,
    pub generic_holonomy_dim: usize,
    pub generic_fingerprint: AlgebraFingerprint,
    pub generic_coset_hint: String,
    pub special_parameters: Vec<SpecialParameter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: AlgebraSpec,
    pub classification: Classification,
    pub curvature: CurvatureSummary,
    pub solver: SolverOutcome,
    pub structures: Vec<StructureReport>,
    pub families: Vec<FamilyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contact: Option<ContactReport>,
}

/// Coset-type label read off the fingerprint and the isotropy dimension.
pub fn coset_hint(rec: &ReconstructedAlgebra) -> String {
    let fp = fingerprint(&rec.total);
    let group = if rec.isotropy_dim() == 0 {
        match fp.milnor_group {
            Some(g) => g.label().to_string(),
            None if fp.solvable => "solvable L".to_string(),
            None => "L".to_string(),
        }
    } else {
        let semisimple_part = match (fp.derived_killing_inertia.plus, fp.derived_killing_inertia.minus) {
            (2, 1) => Some(MilnorGroup::Sl2R),
            (0, 3) => Some(MilnorGroup::Su2),
            _ => None,
        };
        let base = match semisimple_part {
            Some(g) if fp.center_dim == rec.dim() - 3 => format!("{}×R^{}", g.label(), fp.center_dim),
            Some(g) => format!("{} extension", g.label()),
            None if fp.nilpotent => "nilpotent L".to_string(),
            None if fp.solvable => "solvable L".to_string(),
            None => "L".to_string(),
        };
        let base = base.replace("×R^1", "×R");
        let iso = if rec.isotropy_dim() == 1 {
            "SO(2)".to_string()
        } else {
            format!("H{}", rec.isotropy_dim())
        };
        format!("{base}/{iso}")
    };
    format!("{group} (dim L = {}, dim H = {})", rec.dim(), rec.isotropy_dim())
}

fn structure_report(g: &MetricLieAlgebra, s: &HomStructure) -> Result<StructureReport, Error> {
    let reconstruction = build_transitive_algebra(g, s)?;
    Ok(StructureReport {
        s: s.clone(),
        tv_class: tv_decompose(s)?.class,
        ambrose_singer: as_verify(g, s).passes(),
        holonomy_dim: reconstruction.isotropy_dim(),
        coset_hint: coset_hint(&reconstruction),
        reconstruction,
    })
}

/// Zero set in `t` of `a + t b`.
enum ZeroSet {
    All,
    Point(Rational),
    Empty,
}

fn affine_zero_set(a: &[Rational], b: &[Rational]) -> ZeroSet {
    let mut t: Option<Rational> = None;
    for (x, y) in a.iter().zip(b) {
        if y.is_zero() {
            if !x.is_zero() {
                return ZeroSet::Empty;
            }
        } else {
            let r = -(x / y);
            match &t {
                Some(t0) if *t0 != r => return ZeroSet::Empty,
                _ => t = Some(r),
            }
        }
    }
    t.map_or(ZeroSet::All, ZeroSet::Point)
}

/// Parameters at which some Tricerri–Vanhecke component switches on or off.
fn tv_special_parameters(fam: &StructureFamily) -> Result<Vec<Rational>, Error> {
    let d0 = tv_decompose(&fam.member(&Rational::zero()))?;
    let d1 = tv_decompose(&fam.member(&Rational::one()))?;
    let parts = |d: &crate::homstruct::TvDecomposition| [d.s1.flat(), d.s2.flat(), d.s3.flat()];
    let (p0, p1) = (parts(&d0), parts(&d1));
    let mut out = Vec::new();
    for k in 0..3 {
        let slope: Vec<Rational> = p1[k].iter().zip(&p0[k]).map(|(x, y)| x - y).collect();
        if let ZeroSet::Point(t) = affine_zero_set(&p0[k], &slope) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Parameters at which the Ambrose–Singer connection is flat.
pub fn flat_parameters(g: &MetricLieAlgebra, fam: &StructureFamily) -> Vec<Rational> {
    let at = |t: i64| as_curvature_data(g, &fam.member(&Rational::from_int(t))).r;
    let (f0, f1, fm) = (at(0), at(1), at(-1));
    let half = Rational::new(1, 2);
    let polys: Vec<Poly> = (0..f0.len())
        .map(|i| {
            let c2 = (&f1[i] + &fm[i]) * &half - &f0[i];
            let c1 = (&f1[i] - &fm[i]) * &half;
            let mut p = Poly::constant(1, f0[i].clone());
            p.add_term(vec![1], c1);
            p.add_term(vec![2], c2);
            p
        })
        .filter(|p| !p.is_zero())
        .collect();
    if polys.is_empty() {
        return vec![];
    }
    let sol = solve_quadratic_small(&polys);
    sol.points.into_iter().map(|p| p[0].clone()).collect()
}

pub fn family_report(g: &MetricLieAlgebra, fam: &StructureFamily) -> Result<FamilyReport, Error> {
    let flat = flat_parameters(g, fam);
    let mut special = tv_special_parameters(fam)?;
    special.extend(flat.iter().cloned());
    special.sort();
    special.dedup();
    let special_parameters = special
        .iter()
        .map(|t| {
            let s = fam.member(t);
            let rec = build_transitive_algebra(g, &s)?;
            Ok(SpecialParameter {
                parameter: t.clone(),
                tv_class: tv_decompose(&s)?.class,
                holonomy_dim: rec.isotropy_dim(),
                flat: flat.contains(t),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let generic_t = (0i64..)
        .map(Rational::from_int)
        .find(|t| !special.contains(t))
        .expect("finitely many special parameters");
    let s = fam.member(&generic_t);
    let rec = build_transitive_algebra(g, &s)?;
    Ok(FamilyReport {
        family: fam.clone(),
        generic_tv_class: tv_decompose(&s)?.class,
        generic_holonomy_dim: rec.isotropy_dim(),
        generic_fingerprint: fingerprint(&rec.total),
        generic_coset_hint: coset_hint(&rec),
        special_parameters,
    })
}

pub fn classify(g: &MetricLieAlgebra) -> Classification {
    Classification {
        milnor: g.milnor_classify().ok(),
        isometry_dimension: g.isometry_dimension().ok(),
        unimodular: g.is_unimodular(),
        algebra: fingerprint(g.algebra()),
    }
}

pub fn curvature_summary(g: &MetricLieAlgebra) -> CurvatureSummary {
    let data = riemann(g);
    CurvatureSummary {
        principal_ricci: data.principal_ricci(),
        sectional: [
            data.sectional(0, 1).clone(),
            data.sectional(0, 2).clone(),
            data.sectional(1, 2).clone(),
        ],
        scalar: data.scalar,
        ric: data.ric,
        locally_symmetric: is_locally_symmetric(g),
        constant_curvature: constant_curvature_check(g),
    }
}

/// Classify, compute curvature, enumerate structures, reconstruct each one,
/// and add contact data when the normal form carries a standard structure.
pub fn analyze(g: &MetricLieAlgebra) -> Result<AnalysisReport, Error> {
    let solver = solve_left_invariant(g)?;
    let structures = solver
        .structures()
        .iter()
        .map(|s| structure_report(g, s))
        .collect::<Result<Vec<_>, Error>>()?;
    let families = solver
        .families()
        .iter()
        .map(|f| family_report(g, f))
        .collect::<Result<Vec<_>, Error>>()?;
    let contact = match contact_report(g) {
        Ok(c) => Some(c),
        Err(Error::UnsupportedForm) => None,
        Err(e) => return Err(e),
    };
    Ok(AnalysisReport {
        input: g.spec(),
        classification: classify(g),
        curvature: curvature_summary(g),
        solver,
        structures,
        families,
        contact,
    })
}

/// Data on one member of a one-parameter family, as emitted by sweeps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub parameter: Rational,
    #[serde(rename = "S")]
    pub s: HomStructure,
    pub tv_class: TvClass,
    pub ambrose_singer: bool,
    pub holonomy_dim: usize,
    pub fingerprint: AlgebraFingerprint,
    pub coset_hint: String,
}

pub fn member_report(g: &MetricLieAlgebra, fam: &StructureFamily, t: &Rational) -> Result<MemberReport, Error> {
    let s = fam.member(t);
    let rec = build_transitive_algebra(g, &s)?;
    Ok(MemberReport {
        parameter: t.clone(),
        tv_class: tv_decompose(&s)?.class,
        ambrose_singer: true,
        holonomy_dim: rec.isotropy_dim(),
        fingerprint: fingerprint(&rec.total),
        coset_hint: coset_hint(&rec),
        s,
    })
}

fn render_structure(out: &mut String, s: &HomStructure) {
    let comps = s.nonzero_components();
    if comps.is_empty() {
        out.push_str("    S = 0\n");
        return;
    }
    for ([i, j, k], v) in comps {
        let _ = writeln!(out, "    S_{}{}{} = {}", i + 1, j + 1, k + 1, v);
    }
}

fn render_fingerprint(out: &mut String, fp: &AlgebraFingerprint) {
    let _ = writeln!(
        out,
        "    derived series {:?}, lower central {:?}, center dim {}, Killing inertia {}, derived Killing inertia {}",
        fp.derived_series_dims, fp.lower_central_dims, fp.center_dim, fp.killing_inertia, fp.derived_killing_inertia
    );
}

fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "-".to_string(), Rational::to_string)
}

/// Human-readable rendering in the notation `c_i`, `ρ_i`, `μ_i`, `T1..T3`.
pub fn render_text(rep: &AnalysisReport) -> String {
    let mut out = String::new();
    match &rep.input {
        AlgebraSpec::Unimodular { c } => {
            let _ = writeln!(out, "unimodular (c1, c2, c3) = ({}, {}, {})", c[0], c[1], c[2]);
            let half = Rational::new(1, 2);
            let mu: Vec<Rational> = (0..3)
                .map(|i| (&c[0] + &c[1] + &c[2]) * &half - &c[i])
                .collect();
            let _ = writeln!(out, "  μ = ({}, {}, {})", mu[0], mu[1], mu[2]);
        }
        AlgebraSpec::Nonunimodular { alpha, beta } => {
            let _ = writeln!(out, "non-unimodular (α, β) = ({alpha}, {beta})");
        }
        AlgebraSpec::Generic { .. } => out.push_str("generic structure constants\n"),
    }
    let cls = &rep.classification;
    match &cls.milnor {
        Some(MilnorClass::Unimodular { signs, group }) => {
            let _ = writeln!(out, "  Milnor signs {signs:?}: {group}");
        }
        Some(MilnorClass::Nonunimodular { milnor_invariant, chi, .. }) => {
            let _ = writeln!(out, "  Milnor invariant D = {milnor_invariant}, χ = {}", opt(chi));
        }
        None => {}
    }
    if let Some(d) = cls.isometry_dimension {
        let _ = writeln!(out, "  isometry group dimension {d}");
    }
    let c = &rep.curvature;
    let _ = writeln!(out, "curvature");
    if let Some(rho) = &c.principal_ricci {
        let _ = writeln!(out, "  ρ = ({}, {}, {})", rho[0], rho[1], rho[2]);
    } else {
        for i in 0..3 {
            let row: Vec<String> = c.ric.row(i).iter().map(Rational::to_string).collect();
            let _ = writeln!(out, "  Ric row {}: [{}]", i + 1, row.join(", "));
        }
    }
    let _ = writeln!(out, "  scalar = {}", c.scalar);
    let _ = writeln!(
        out,
        "  K12 = {}, K13 = {}, K23 = {}",
        c.sectional[0], c.sectional[1], c.sectional[2]
    );
    match &rep.solver {
        SolverOutcome::LocallySymmetric { note } => {
            let _ = writeln!(out, "structures: {note}");
        }
        SolverOutcome::SpaceForm { curvature, note } => {
            let _ = writeln!(out, "structures: curvature {curvature}; {note}");
        }
        SolverOutcome::Structures { unresolved, notes, .. } => {
            let _ = writeln!(
                out,
                "structures: {} isolated, {} one-parameter families",
                rep.structures.len(),
                rep.families.len()
            );
            for comp in unresolved {
                let _ = writeln!(out, "  unresolved component: {}", comp.join(", "));
            }
            for n in notes {
                let _ = writeln!(out, "  note: {n}");
            }
        }
    }
    for (n, s) in rep.structures.iter().enumerate() {
        let _ = writeln!(out, "  structure {} [{}] {}", n + 1, s.tv_class, s.coset_hint);
        render_structure(&mut out, &s.s);
        render_fingerprint(&mut out, &fingerprint(&s.reconstruction.total));
    }
    for (n, f) in rep.families.iter().enumerate() {
        let p = &f.family.parameter;
        let _ = writeln!(
            out,
            "  family {} in {p}: generic [{}] {}",
            n + 1,
            f.generic_tv_class,
            f.generic_coset_hint
        );
        out.push_str("    base\n");
        render_structure(&mut out, &f.family.base);
        out.push_str("    direction\n");
        render_structure(&mut out, &f.family.direction);
        for sp in &f.special_parameters {
            let _ = writeln!(
                out,
                "    {p} = {}: [{}], holonomy dim {}{}",
                sp.parameter,
                sp.tv_class,
                sp.holonomy_dim,
                if sp.flat { ", flat" } else { "" }
            );
        }
    }
    if let Some(ct) = &rep.contact {
        out.push_str("contact\n");
        let _ = writeln!(out, "  contact constant {}", opt(&ct.contact_constant));
        let _ = writeln!(out, "  (κ, μ) = ({}, {})", opt(&ct.kappa), opt(&ct.mu));
        let _ = writeln!(out, "  Sasakian β = {}", opt(&ct.sasakian_beta));
        if let Some(k) = &ct.holomorphic_sectional_curvature {
            let _ = writeln!(out, "  holomorphic sectional curvature {k}");
        }
        let _ = writeln!(out, "  flat: {}", ct.flat);
        if let Some(b) = ct.boeckx_equals_minus {
            let _ = writeln!(out, "  S^B = S⁽⁻⁾: {b}");
        }
        if let Some(b) = ct.tw_equals_boeckx {
            let _ = writeln!(out, "  Tanaka–Webster = ∇ + S^B: {b}");
        }
    }
    out
}
