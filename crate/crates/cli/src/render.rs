//! Plain-text renderings of the per-command outputs.

use std::fmt::Write as _;

use homog3_core::{
    fingerprint, AmbroseSingerReport, ContactReport, HomStructure, MemberReport, Rational,
    ReconstructedAlgebra, SolverOutcome, StructureFamily, TvDecomposition,
};

fn components(out: &mut String, s: &HomStructure, indent: &str) {
    let comps = s.nonzero_components();
    if comps.is_empty() {
        let _ = writeln!(out, "{indent}S = 0");
    }
    for ([i, j, k], v) in comps {
        let _ = writeln!(out, "{indent}S_{}{}{} = {v}", i + 1, j + 1, k + 1);
    }
}

fn family(out: &mut String, f: &StructureFamily) {
    let _ = writeln!(out, "  line in {}:", f.parameter);
    out.push_str("    base\n");
    components(out, &f.base, "      ");
    out.push_str("    direction\n");
    components(out, &f.direction, "      ");
}

pub fn solver(o: &SolverOutcome) -> String {
    let mut out = String::new();
    match o {
        SolverOutcome::LocallySymmetric { note } => {
            let _ = writeln!(out, "{note}");
        }
        SolverOutcome::SpaceForm { curvature, note } => {
            let _ = writeln!(out, "constant curvature {curvature}: {note}");
        }
        SolverOutcome::Structures {
            structures,
            families,
            unresolved,
            notes,
        } => {
            let _ = writeln!(
                out,
                "{} isolated structures, {} one-parameter families",
                structures.len(),
                families.len()
            );
            for (n, s) in structures.iter().enumerate() {
                let _ = writeln!(out, "  structure {}", n + 1);
                components(&mut out, s, "    ");
            }
            for f in families {
                family(&mut out, f);
            }
            for u in unresolved {
                let _ = writeln!(out, "  unresolved: {}", u.join(", "));
            }
            for n in notes {
                let _ = writeln!(out, "  note: {n}");
            }
        }
    }
    out
}

fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn tv(d: &TvDecomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "class {}", d.class);
    let members: Vec<&str> = d.member_of.iter().map(|c| c.label()).collect();
    let _ = writeln!(out, "contained in {}", members.join(", "));
    let _ = writeln!(out, "trace vector ξ = {}", vector(&d.xi()));
    for (name, s) in [("T1", &d.s1), ("T2", &d.s2), ("T3", &d.s3)] {
        let _ = writeln!(out, "{name} component");
        components(&mut out, s, "  ");
    }
    out
}

pub fn verify(r: &AmbroseSingerReport) -> String {
    let mut out = String::new();
    let flag = |b: bool| if b { "ok" } else { "FAILS" };
    let _ = writeln!(out, "∇̃g = 0: {}", flag(r.metric_ok));
    let _ = writeln!(out, "∇̃Ric = 0: {}", flag(r.ricci_parallel_ok));
    let _ = writeln!(out, "∇̃R = 0: {}", flag(r.curvature_parallel_ok));
    let _ = writeln!(out, "∇̃S = 0: {}", flag(r.s_parallel_ok));
    for (name, list) in [
        ("metric", &r.metric_residual),
        ("Ric", &r.ricci_residual),
        ("R", &r.curvature_residual),
        ("S", &r.s_residual),
    ] {
        for res in list.iter().take(10) {
            let idx: Vec<String> = res.index.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "  {name} residual [{}] = {}", idx.join(","), res.value);
        }
    }
    let _ = writeln!(out, "{}", if r.passes() { "PASS" } else { "FAIL" });
    out
}

pub fn reconstruct(l: &ReconstructedAlgebra, hint: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim L = {}, dim H = {}: {hint}", l.dim(), l.isotropy_dim());
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            let v = l.total.bracket_basis(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                let _ = writeln!(out, "  [e{}, e{}] = {}", i + 1, j + 1, vector(&v));
            }
        }
    }
    let fp = fingerprint(&l.total);
    let _ = writeln!(
        out,
        "derived series {:?}, center dim {}, Killing inertia {}, derived Killing inertia {}",
        fp.derived_series_dims, fp.center_dim, fp.killing_inertia, fp.derived_killing_inertia
    );
    out
}

fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "-".into(), Rational::to_string)
}

pub fn contact(c: &ContactReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "contact constant {}", opt(&c.contact_constant));
    let h: Vec<String> = (0..3).map(|i| vector(c.h.row(i))).collect();
    let _ = writeln!(out, "h = [{}]", h.join(", "));
    let _ = writeln!(out, "(κ, μ) = ({}, {})", opt(&c.kappa), opt(&c.mu));
    let _ = writeln!(out, "Sasakian β = {}", opt(&c.sasakian_beta));
    if let Some(k) = &c.holomorphic_sectional_curvature {
        let _ = writeln!(out, "holomorphic sectional curvature {k}");
    }
    let _ = writeln!(out, "flat: {}", c.flat);
    if let Some(b) = c.boeckx_equals_minus {
        let _ = writeln!(out, "S^B = S⁽⁻⁾: {b}");
    }
    if let Some(b) = c.tw_equals_boeckx {
        let _ = writeln!(out, "Tanaka–Webster = ∇ + S^B: {b}");
    }
    out
}

pub fn member_line(name: &str, m: &MemberReport) -> String {
    format!(
        "{name} = {}: [{}] holonomy dim {} {}",
        m.parameter, m.tv_class, m.holonomy_dim, m.coset_hint
    )
}
