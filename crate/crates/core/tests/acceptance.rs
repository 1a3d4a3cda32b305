//! Acceptance criteria, one PASS/FAIL line each, exact equality throughout.

mod common;

use common::closed_form;
use common::elimination::solver_matches_elimination;
use homog3_core::contact::{holomorphic_sectional_curvature, KappaMu};
use homog3_core::{
    as_verify, boeckx_structure, build_transitive_algebra, is_locally_symmetric, kappa_mu, levi_civita,
    minus_structure, okumura_structure, q, qi, s4_family, sasakian_check, so2_family, solve_left_invariant,
    standard_acs, tanaka_webster, tv_decompose, verify_lie_morphism, Inertia, LieAlgebra, Matrix,
    MetricLieAlgebra, MilnorGroup, Rational, SolverOutcome, TvClass,
};
use rand::Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn uni(a: Rational, b: Rational, c: Rational) -> MetricLieAlgebra {
    MetricLieAlgebra::unimodular(a, b, c)
}

fn nonuni(a: Rational, b: Rational) -> MetricLieAlgebra {
    MetricLieAlgebra::nonunimodular(a, b).expect("normalized input")
}

fn only_minus(g: &MetricLieAlgebra) -> Outcome {
    let out = solve_left_invariant(g).map_err(|e| format!("{g:?}: {e}"))?;
    match &out {
        SolverOutcome::Structures { structures, families, .. } => ensure(
            families.is_empty() && structures.len() == 1 && structures[0] == minus_structure(g),
            || format!("{g:?}: expected exactly S⁽⁻⁾, got {out:?}"),
        ),
        _ => Err(format!("{g:?}: expected structures, got {out:?}")),
    }
}

/// Distinct constants: only `S⁽⁻⁾`.
fn criterion_1() -> Outcome {
    let mut rng = common::rng(101);
    let mut triples = vec![
        [qi(1), qi(2), qi(3)],
        [qi(1), qi(2), qi(4)],
        [qi(1), qi(2), qi(-3)],
        [q(1, 2), q(1, 3), q(5, 6)],
    ];
    while triples.len() < 50 {
        let t = [
            common::rand_q(&mut rng, 9, 4),
            common::rand_q(&mut rng, 9, 4),
            common::rand_q(&mut rng, 9, 4),
        ];
        if rng.gen_bool(0.2) {
            // c3 = c1 + c2
            let s = &t[0] + &t[1];
            if t[0] != t[1] && s != t[0] && s != t[1] {
                triples.push([t[0].clone(), t[1].clone(), s]);
            }
        } else if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
            triples.push(t);
        }
    }
    for [a, b, c] in triples {
        only_minus(&uni(a, b, c))?;
    }
    Ok(())
}

/// `(c, c, c3)`: one line through `S⁽⁻⁾` at `r = μ3`.
fn criterion_2() -> Outcome {
    let mut rng = common::rng(102);
    let mut n = 0;
    while n < 20 {
        let c = common::rand_q(&mut rng, 9, 4);
        let c3 = common::rand_q(&mut rng, 9, 4);
        if c == c3 || c3.is_zero() {
            continue;
        }
        n += 1;
        let g = uni(c.clone(), c.clone(), c3.clone());
        let out = solve_left_invariant(&g).map_err(|e| format!("{g:?}: {e}"))?;
        let fams = out.families();
        ensure(fams.len() == 1, || format!("{g:?}: expected one line, got {out:?}"))?;
        let s4 = s4_family(&g).map_err(|e| e.to_string())?;
        ensure(fams[0].same_line(&s4), || format!("{g:?}: solver line differs from the S4 line"))?;
        ensure(out.structures().iter().all(|s| s4.parameter_of(s).is_some()), || {
            format!("{g:?}: isolated structure off the line")
        })?;
        let mu3 = &c - &c3 * Rational::new(1, 2);
        ensure(s4.member(&mu3) == minus_structure(&g), || format!("{g:?}: member(μ3) ≠ S⁽⁻⁾"))?;
    }
    Ok(())
}

/// `g(α, β)`, `α ∉ {0, 1}`: only `S⁽⁻⁾`.
fn criterion_3() -> Outcome {
    let mut rng = common::rng(103);
    let mut n = 0;
    while n < 50 {
        let a = common::rand_nonneg_q(&mut rng, 9, 4);
        let b = common::rand_nonneg_q(&mut rng, 9, 4);
        if a.is_zero() || a.is_one() {
            continue;
        }
        n += 1;
        only_minus(&nonuni(a, b))?;
    }
    Ok(())
}

/// `SO(2)` family on `g(1, β)` and its holonomy.
fn criterion_4() -> Outcome {
    for beta in [qi(1), qi(2), q(1, 2)] {
        let g = nonuni(qi(1), beta.clone());
        let fam = so2_family(&g).map_err(|e| e.to_string())?;
        let out = solve_left_invariant(&g).map_err(|e| e.to_string())?;
        ensure(
            out.families().len() == 1 && out.families()[0].same_line(&fam),
            || format!("β = {beta}: solver lines {:?}", out.families()),
        )?;
        ensure(
            out.structures() == [minus_structure(&g)],
            || format!("β = {beta}: isolated structures {:?}", out.structures()),
        )?;
        let hol = |r: &Rational| -> Result<usize, String> {
            build_transitive_algebra(&g, &fam.member(r))
                .map(|l| l.isotropy_dim())
                .map_err(|e| format!("β = {beta}, r = {r}: {e}"))
        };
        for r in [qi(0), qi(5), qi(-1)] {
            let d = hol(&r)?;
            ensure(d == 1, || format!("β = {beta}, r = {r}: holonomy dim {d}"))?;
        }
        let flat_r = -((&beta * &beta + qi(2)) / &beta);
        let d = hol(&flat_r)?;
        ensure(d == 0, || format!("β = {beta}: holonomy dim {d} at r = {flat_r}"))?;

        let l0 = build_transitive_algebra(&g, &fam.member(&qi(0))).map_err(|e| e.to_string())?;
        let fp0 = homog3_core::fingerprint(&l0.total);
        ensure(
            fp0.dim == 4 && fp0.center_dim == 1 && fp0.derived_killing_inertia == Inertia::new(2, 1, 0),
            || format!("β = {beta}: r = 0 fingerprint {fp0:?}"),
        )?;
        let lf = build_transitive_algebra(&g, &fam.member(&flat_r)).map_err(|e| e.to_string())?;
        let fpf = homog3_core::fingerprint(&lf.total);
        ensure(
            fpf.dim == 3
                && fpf.killing_inertia == Inertia::new(2, 1, 0)
                && fpf.milnor_group == Some(MilnorGroup::Sl2R),
            || format!("β = {beta}: flat fingerprint {fpf:?}"),
        )?;
    }
    Ok(())
}

fn class_of(s: &homog3_core::HomStructure) -> Result<homog3_core::TvDecomposition, String> {
    tv_decompose(s).map_err(|e| e.to_string())
}

/// Tricerri–Vanhecke classes.
fn criterion_5() -> Outcome {
    let d = class_of(&minus_structure(&uni(qi(1), qi(2), qi(-3))))?;
    ensure(d.class == TvClass::T2, || format!("(1,2,-3): {}", d.class))?;
    let d = class_of(&minus_structure(&uni(qi(1), qi(2), qi(4))))?;
    ensure(d.class == TvClass::T2T3 && !d.is_in(TvClass::T2), || {
        format!("(1,2,4): {} / {:?}", d.class, d.member_of)
    })?;
    for beta in [qi(1), qi(2), q(1, 2)] {
        let fam = so2_family(&nonuni(qi(1), beta.clone())).map_err(|e| e.to_string())?;
        let d = class_of(&fam.member(&(qi(-2) * &beta)))?;
        ensure(d.class == TvClass::T2, || format!("β = {beta}, r = -2β: {}", d.class))?;
        let d = class_of(&fam.member(&beta))?;
        ensure(d.class == TvClass::T3, || format!("β = {beta}, r = β: {}", d.class))?;
    }
    Ok(())
}

/// Curvature against closed forms.
fn criterion_6() -> Outcome {
    let mut rng = common::rng(106);
    for _ in 0..500 {
        closed_form::check(&common::rand_unimodular(&mut rng))?;
        closed_form::check(&common::rand_nonunimodular(&mut rng))?;
    }
    Ok(())
}

/// Local symmetry exactly on `α = 0` and `(1, 0)`.
fn criterion_7() -> Outcome {
    for i in 0..=8 {
        let a = Rational::new(i, 4);
        for b in [qi(0), q(1, 2), qi(1)] {
            let expected = a.is_zero() || (a.is_one() && b.is_zero());
            let got = is_locally_symmetric(&nonuni(a.clone(), b.clone()));
            ensure(got == expected, || format!("(α, β) = ({a}, {b}): locally symmetric = {got}"))?;
        }
    }
    Ok(())
}

/// `∇̃R = 0` iff `∇̃Ric = 0` on random pairs.
fn criterion_8() -> Outcome {
    let mut rng = common::rng(108);
    let mut agree_true = 0;
    for n in 0..200 {
        let g = if n % 4 < 2 {
            common::rand_unimodular(&mut rng)
        } else {
            common::rand_nonunimodular(&mut rng)
        };
        let s = if n % 2 == 0 {
            common::rand_metrical(&mut rng)
        } else {
            let space = common::ricci_parallel_space(&g);
            common::structure_from_unknowns(&common::rand_point(&mut rng, &space))
        };
        let rep = as_verify(&g, &s);
        ensure(rep.curvature_parallel_ok == rep.ricci_parallel_ok, || {
            format!("{g:?}, S = {s:?}: ∇̃R = 0 is {}, ∇̃Ric = 0 is {}", rep.curvature_parallel_ok, rep.ricci_parallel_ok)
        })?;
        if rep.ricci_parallel_ok {
            agree_true += 1;
        }
    }
    ensure(agree_true >= 100, || format!("only {agree_true} samples had ∇̃Ric = 0"))
}

/// Brute-force elimination reproduces the solver.
fn criterion_9() -> Outcome {
    solver_matches_elimination(&uni(qi(1), qi(2), qi(4))).map_err(|e| format!("(1,2,4): {e}"))?;
    solver_matches_elimination(&nonuni(qi(1), qi(1))).map_err(|e| format!("g(1,1): {e}"))
}

/// Contact layer.
fn criterion_10() -> Outcome {
    let g = uni(qi(2), qi(1), qi(-1));
    let acs = standard_acs(&g).map_err(|e| e.to_string())?;
    let km = kappa_mu(&g, &acs);
    ensure(km == Some(KappaMu { kappa: qi(0), mu: Some(qi(2)) }), || format!("(2,1,-1): {km:?}"))?;
    let sb = boeckx_structure(&g, &acs, &qi(2)).map_err(|e| e.to_string())?;
    ensure(levi_civita(&g).plus(sb.tensor()) == tanaka_webster(&g, &acs), || {
        "(2,1,-1): Tanaka–Webster ≠ ∇ + S^B".into()
    })?;

    let g = uni(qi(2), qi(4), qi(1));
    let acs = standard_acs(&g).map_err(|e| e.to_string())?;
    let km = kappa_mu(&g, &acs);
    ensure(km == Some(KappaMu { kappa: q(-5, 4), mu: Some(qi(-3)) }), || format!("(2,4,1): {km:?}"))?;
    let sb = boeckx_structure(&g, &acs, &qi(-3)).map_err(|e| e.to_string())?;
    ensure(sb == minus_structure(&g), || "(2,4,1): S^B ≠ S⁽⁻⁾".into())?;

    let g = nonuni(qi(1), qi(1));
    let acs = standard_acs(&g).map_err(|e| e.to_string())?;
    let beta = sasakian_check(&g, &acs);
    ensure(beta == Some(qi(1)), || format!("g(1,1): Sasakian β = {beta:?}"))?;
    let k = holomorphic_sectional_curvature(&g, &acs);
    ensure(k == qi(-7), || format!("g(1,1): K12 = {k}"))?;
    let ok = okumura_structure(&g, &acs, &qi(-1)).map_err(|e| e.to_string())?;
    let tw = tanaka_webster(&g, &acs).difference(&levi_civita(&g));
    ensure(ok.structure.tensor() == &tw, || "g(1,1): Okumura r = -1 ≠ Tanaka–Webster".into())
}

fn ga1_plus_r() -> LieAlgebra {
    let z = Rational::zero;
    LieAlgebra::from_brackets(3, &[(0, 1, vec![qi(-1), z(), z()])]).expect("valid brackets")
}

/// Reconstruction from `S⁽⁻⁾` is the algebra itself.
fn criterion_11() -> Outcome {
    let mut rng = common::rng(111);
    let id = Matrix::identity(3);
    for n in 0..200 {
        let g = if n % 2 == 0 {
            common::rand_unimodular(&mut rng)
        } else {
            common::rand_nonunimodular(&mut rng)
        };
        let l = build_transitive_algebra(&g, &minus_structure(&g)).map_err(|e| format!("{g:?}: {e}"))?;
        ensure(l.isotropy_dim() == 0, || format!("{g:?}: isotropy {:?}", l.isotropy))?;
        let ok = verify_lie_morphism(&id, &l.total, g.algebra()).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{g:?}: identity is not an isomorphism"))?;
    }
    for beta in [qi(0), qi(1), q(3, 2), qi(2)] {
        let g = nonuni(qi(1), beta.clone());
        let f = Matrix::from_columns(&[
            vec![qi(0), qi(2), qi(2) * &beta],
            vec![q(1, 2), qi(0), qi(0)],
            vec![qi(0), qi(0), qi(1)],
        ]);
        let ok = verify_lie_morphism(&f, &ga1_plus_r(), g.algebra()).map_err(|e| e.to_string())?;
        ensure(ok, || format!("β = {beta}: ga(1)⊕R map is not an isomorphism"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("uniqueness for distinct constants", criterion_1),
        ("S4 family", criterion_2),
        ("non-unimodular, alpha not 0 or 1", criterion_3),
        ("SO(2) family and holonomy", criterion_4),
        ("Tricerri-Vanhecke classes", criterion_5),
        ("curvature closed forms", criterion_6),
        ("local symmetry boundary", criterion_7),
        ("parallel R iff parallel Ric", criterion_8),
        ("brute-force elimination", criterion_9),
        ("contact suite", criterion_10),
        ("reconstruction identity", criterion_11),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS {:>2} {name}", n + 1),
            Err(e) => {
                println!("FAIL {:>2} {name}: {e}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
