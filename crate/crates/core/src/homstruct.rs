//! Homogeneous Riemannian structures on three-dimensional metric Lie
//! algebras: the Tricerri–Vanhecke decomposition, Ambrose–Singer checks,
//! the canonical structures and the left-invariant solver.
//!
//! A structure is stored by `S_{ijk} = ⟨S(e_i) e_j, e_k⟩`; the Ambrose–Singer
//! connection is `∇̃ = ∇ + S`, i.e. `Γ̃^k_{ij} = Γ^k_{ij} + S_{ijk}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curvature::{covariant_derivative, curvature, flat_index, levi_civita, riemann, CurvatureData};
use crate::curvature::{constant_curvature_check, is_locally_symmetric, Connection};
use crate::lie::{zeros3, MetricLieAlgebra, NormalForm, Tensor3};
use crate::linalg::{char_poly_multiplicities, Matrix, Multiplicity};
use crate::poly::{solve_quadratic_small, Poly};
use crate::rational::Rational;
use crate::Error;

/// A left-invariant `(0,3)` tensor `S_{ijk}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomStructure {
    s: Tensor3,
}

impl Serialize for HomStructure {
    fn serialize<Ser: serde::Serializer>(&self, ser: Ser) -> Result<Ser::Ok, Ser::Error> {
        #[derive(Serialize)]
        struct J<'a> {
            #[serde(rename = "S")]
            s: &'a [Rational],
        }
        J { s: &self.flat() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for HomStructure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct J {
            #[serde(rename = "S")]
            s: Vec<Rational>,
        }
        let j = J::deserialize(d)?;
        HomStructure::from_flat(&j.s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for HomStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<String> = self
            .nonzero_components()
            .into_iter()
            .filter(|([_, j, k], _)| j < k)
            .map(|([i, j, k], v)| format!("S{}{}{}={}", i + 1, j + 1, k + 1, v))
            .collect();
        write!(f, "HomStructure({})", nonzero.join(", "))
    }
}

impl HomStructure {
    pub fn zero() -> Self {
        HomStructure { s: zeros3(3) }
    }

    pub fn from_tensor(s: Tensor3) -> Result<Self, Error> {
        if s.len() != 3 || s.iter().any(|m| m.len() != 3 || m.iter().any(|v| v.len() != 3)) {
            return Err(Error::DimensionMismatch("S must be 3 x 3 x 3".into()));
        }
        Ok(HomStructure { s })
    }

    /// 27 components in `i, j, k` order.
    pub fn from_flat(v: &[Rational]) -> Result<Self, Error> {
        if v.len() != 27 {
            return Err(Error::DimensionMismatch(format!(
                "S needs 27 components, got {}",
                v.len()
            )));
        }
        let mut s = zeros3(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    s[i][j][k] = v[flat_index(&[i, j, k])].clone();
                }
            }
        }
        Ok(HomStructure { s })
    }

    pub fn flat(&self) -> Vec<Rational> {
        self.s.iter().flatten().flatten().cloned().collect()
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.s
    }

    /// `S_{ijk}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.s[i][j][k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.s[i][j][k] = v;
    }

    /// Sets `S_{ijk} = v` and `S_{ikj} = -v`.
    pub fn set_skew(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.s[i][k][j] = -&v;
        self.s[i][j][k] = v;
    }

    /// `S(e_i) e_j`.
    pub fn apply(&self, i: usize, j: usize) -> Vec<Rational> {
        self.s[i][j].clone()
    }

    /// `S(X) Y` for arbitrary vectors.
    pub fn apply_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); 3];
        for i in 0..3 {
            for j in 0..3 {
                let w = &x[i] * &y[j];
                if w.is_zero() {
                    continue;
                }
                for k in 0..3 {
                    out[k] += &w * &self.s[i][j][k];
                }
            }
        }
        out
    }

    /// `S_{ijk} + S_{ikj} = 0` for all indices.
    pub fn is_metrical(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| (0..3).all(|k| self.s[i][j][k] == -&self.s[i][k][j])))
    }

    pub fn is_zero(&self) -> bool {
        self.s.iter().flatten().flatten().all(Rational::is_zero)
    }

    pub fn nonzero_components(&self) -> Vec<([usize; 3], Rational)> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if !self.s[i][j][k].is_zero() {
                        out.push(([i, j, k], self.s[i][j][k].clone()));
                    }
                }
            }
        }
        out
    }

    fn zip(&self, other: &HomStructure, f: impl Fn(&Rational, &Rational) -> Rational) -> HomStructure {
        let mut s = zeros3(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    s[i][j][k] = f(&self.s[i][j][k], &other.s[i][j][k]);
                }
            }
        }
        HomStructure { s }
    }

    pub fn add(&self, other: &HomStructure) -> HomStructure {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &HomStructure) -> HomStructure {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, t: &Rational) -> HomStructure {
        self.zip(self, |a, _| a * t)
    }

    /// `Σ S_{ijk} T_{ijk}`.
    pub fn inner(&self, other: &HomStructure) -> Rational {
        self.s
            .iter()
            .flatten()
            .flatten()
            .zip(other.s.iter().flatten().flatten())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `c12(S)(Z) = Σ_i S_{iiZ}`.
    pub fn trace12(&self) -> Vec<Rational> {
        (0..3).map(|z| (0..3).map(|i| &self.s[i][i][z]).sum()).collect()
    }

    /// Cyclic sum `S_{ijk} + S_{jki} + S_{kij}`.
    pub fn cyclic_sum(&self) -> HomStructure {
        let mut s = zeros3(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    s[i][j][k] = &self.s[i][j][k] + &self.s[j][k][i] + &self.s[k][i][j];
                }
            }
        }
        HomStructure { s }
    }

    /// `Γ + S` for the Levi-Civita connection of `g`.
    pub fn connection(&self, g: &MetricLieAlgebra) -> Connection {
        levi_civita(g).plus(&self.s)
    }
}

/// An affine family `base + t·direction` of structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFamily {
    pub base: HomStructure,
    pub direction: HomStructure,
    pub parameter: String,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    #[serde(rename = "S")]
    s: Vec<Rational>,
    direction: Vec<Rational>,
    parameter: String,
}

impl Serialize for StructureFamily {
    fn serialize<Ser: serde::Serializer>(&self, ser: Ser) -> Result<Ser::Ok, Ser::Error> {
        FamilyJson {
            s: self.base.flat(),
            direction: self.direction.flat(),
            parameter: self.parameter.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for StructureFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = FamilyJson::deserialize(d)?;
        Ok(StructureFamily {
            base: HomStructure::from_flat(&j.s).map_err(serde::de::Error::custom)?,
            direction: HomStructure::from_flat(&j.direction).map_err(serde::de::Error::custom)?,
            parameter: j.parameter,
        })
    }
}

impl StructureFamily {
    pub fn member(&self, t: &Rational) -> HomStructure {
        self.base.add(&self.direction.scale(t))
    }

    /// Parameter value at which the family passes through `s`.
    pub fn parameter_of(&self, s: &HomStructure) -> Option<Rational> {
        let d = self.direction.flat();
        let pivot = d.iter().position(|x| !x.is_zero())?;
        let t = (&s.flat()[pivot] - &self.base.flat()[pivot]) / &d[pivot];
        (self.member(&t) == *s).then_some(t)
    }

    /// Whether both families trace out the same line of structures.
    pub fn same_line(&self, other: &StructureFamily) -> bool {
        let parallel = {
            let a = self.direction.flat();
            let b = other.direction.flat();
            let pivot = a.iter().position(|x| !x.is_zero());
            match pivot {
                Some(p) if !b[p].is_zero() => {
                    let ratio = &b[p] / &a[p];
                    a.iter().zip(&b).all(|(x, y)| x * &ratio == *y)
                }
                _ => false,
            }
        };
        parallel && self.parameter_of(&other.base).is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Canonical {
    Minus,
    Plus,
    Zero,
}

/// `S = ∇^{(c)} - ∇` for the Cartan–Schouten connections: `∇^{(-)}_X Y = 0`,
/// `∇^{(+)}_X Y = [X,Y]`, `∇^{(0)}_X Y = ½[X,Y]` on left-invariant fields.
/// Plus and zero are not metrical in general; check with
/// [`HomStructure::is_metrical`].
pub fn canonical_structure(g: &MetricLieAlgebra, which: Canonical) -> HomStructure {
    let lc = levi_civita(g);
    let factor = match which {
        Canonical::Minus => Rational::zero(),
        Canonical::Plus => Rational::one(),
        Canonical::Zero => Rational::new(1, 2),
    };
    let mut s = zeros3(3);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                s[i][j][k] = &factor * g.c(i, j, k) - lc.coeff(i, j, k);
            }
        }
    }
    HomStructure { s }
}

pub fn minus_structure(g: &MetricLieAlgebra) -> HomStructure {
    canonical_structure(g, Canonical::Minus)
}

/// Members `S_{123} = -c3/2, S_{231} = -c3/2, S_{312} = -r` on `(c, c, c3)`.
pub fn s4_family(g: &MetricLieAlgebra) -> Result<StructureFamily, Error> {
    let c = match g.normal_form() {
        NormalForm::Unimodular(c) => c,
        _ => return Err(Error::WrongNormalForm("needs a unimodular algebra".into())),
    };
    if c[0] != c[1] || c[0] == c[2] || c[2].is_zero() {
        return Err(Error::WrongNormalForm(
            "needs constants (c, c, c3) with c != c3 and c3 != 0".into(),
        ));
    }
    let h = -(&c[2] * Rational::new(1, 2));
    Ok(so2_shape(h, "r"))
}

/// Members `S_{123} = -β, S_{231} = -β, S_{312} = -r` on `g(1, β)`, `β ≠ 0`.
pub fn so2_family(g: &MetricLieAlgebra) -> Result<StructureFamily, Error> {
    match g.normal_form() {
        NormalForm::NonUnimodular { alpha, beta } if alpha.is_one() && !beta.is_zero() => {
            Ok(so2_shape(-beta, "r"))
        }
        _ => Err(Error::WrongNormalForm(
            "needs the non-unimodular form with alpha = 1 and beta != 0".into(),
        )),
    }
}

fn so2_shape(value: Rational, parameter: &str) -> StructureFamily {
    let mut base = HomStructure::zero();
    base.set_skew(0, 1, 2, value.clone());
    base.set_skew(1, 2, 0, value);
    let mut direction = HomStructure::zero();
    direction.set_skew(2, 0, 1, -Rational::one());
    StructureFamily {
        base,
        direction,
        parameter: parameter.into(),
    }
}

/// One of the eight Tricerri–Vanhecke classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TvClass {
    #[serde(rename = "symmetric")]
    Symmetric,
    T1,
    T2,
    T3,
    #[serde(rename = "T1+T2")]
    T1T2,
    #[serde(rename = "T1+T3")]
    T1T3,
    #[serde(rename = "T2+T3")]
    T2T3,
    #[serde(rename = "T1+T2+T3")]
    T1T2T3,
}

impl TvClass {
    pub const ALL: [TvClass; 8] = [
        TvClass::Symmetric,
        TvClass::T1,
        TvClass::T2,
        TvClass::T3,
        TvClass::T1T2,
        TvClass::T1T3,
        TvClass::T2T3,
        TvClass::T1T2T3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TvClass::Symmetric => "symmetric",
            TvClass::T1 => "T1",
            TvClass::T2 => "T2",
            TvClass::T3 => "T3",
            TvClass::T1T2 => "T1+T2",
            TvClass::T1T3 => "T1+T3",
            TvClass::T2T3 => "T2+T3",
            TvClass::T1T2T3 => "T1+T2+T3",
        }
    }
}

impl fmt::Display for TvClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TvDecomposition {
    pub s1: HomStructure,
    pub s2: HomStructure,
    pub s3: HomStructure,
    /// `ω = ½ c12(S)`; the vector `ξ = -ω` is the trace vector.
    pub omega: Vec<Rational>,
    /// Smallest class whose defining condition holds.
    pub class: TvClass,
    /// Classes (of the eight) containing `S`.
    pub member_of: Vec<TvClass>,
}

impl TvDecomposition {
    pub fn is_in(&self, c: TvClass) -> bool {
        self.member_of.contains(&c)
    }

    /// `ξ = -½ tr_g S`.
    pub fn xi(&self) -> Vec<Rational> {
        self.omega.iter().map(|x| -x).collect()
    }
}

fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn tv_decompose(s: &HomStructure) -> Result<TvDecomposition, Error> {
    if !s.is_metrical() {
        return Err(Error::MetricalConditionViolated);
    }
    let half = Rational::new(1, 2);
    let third = Rational::new(1, 3);
    let omega: Vec<Rational> = s.trace12().iter().map(|x| x * &half).collect();
    let mut s1 = HomStructure::zero();
    // the T1⊕T3 test: S(X,Y,Z)+S(Y,X,Z) = 2g(X,Y)ω(Z) - g(Z,X)ω(Y) - g(Y,Z)ω(X)
    let mut t13 = true;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                s1.s[i][j][k] = delta(i, j) * &omega[k] - delta(i, k) * &omega[j];
                let lhs = s.get(i, j, k) + s.get(j, i, k);
                let rhs = Rational::from_int(2) * delta(i, j) * &omega[k]
                    - delta(k, i) * &omega[j]
                    - delta(j, k) * &omega[i];
                t13 &= lhs == rhs;
            }
        }
    }
    let s3 = s.cyclic_sum().scale(&third);
    let s2 = s.sub(&s1).sub(&s3);

    let cyclic_zero = s.cyclic_sum().is_zero();
    let trace_zero = s.trace12().iter().all(Rational::is_zero);
    let t1 = *s == s1;
    let t3 = (0..3).all(|i| (0..3).all(|j| (0..3).all(|k| *s.get(i, j, k) == -s.get(j, i, k))));
    let mut member_of = Vec::new();
    for c in TvClass::ALL {
        let holds = match c {
            TvClass::Symmetric => s.is_zero(),
            TvClass::T1 => t1,
            TvClass::T2 => cyclic_zero && trace_zero,
            TvClass::T3 => t3,
            TvClass::T1T2 => cyclic_zero,
            TvClass::T1T3 => t13,
            TvClass::T2T3 => trace_zero,
            TvClass::T1T2T3 => true,
        };
        if holds {
            member_of.push(c);
        }
    }
    let class = member_of[0];
    Ok(TvDecomposition {
        s1,
        s2,
        s3,
        omega,
        class,
        member_of,
    })
}

/// A nonzero component of a residual tensor, indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub index: Vec<usize>,
    pub value: Rational,
}

fn residuals(t: &[Rational], rank: usize) -> Vec<Residual> {
    t.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(f, v)| {
            let mut idx = vec![0; rank];
            let mut rest = f;
            for slot in (0..rank).rev() {
                idx[slot] = rest % 3 + 1;
                rest /= 3;
            }
            Residual {
                index: idx,
                value: v.clone(),
            }
        })
        .collect()
}

/// Outcome of checking `∇̃g = 0`, `∇̃Ric = 0`, `∇̃R = 0`, `∇̃S = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbroseSingerReport {
    pub metric_ok: bool,
    pub ricci_parallel_ok: bool,
    pub curvature_parallel_ok: bool,
    #[serde(rename = "S_parallel_ok")]
    pub s_parallel_ok: bool,
    /// Nonzero entries of `S_{ijk} + S_{ikj}`.
    pub metric_residual: Vec<Residual>,
    /// Nonzero entries of `(∇̃_m Ric)_{ab}`.
    pub ricci_residual: Vec<Residual>,
    /// Nonzero entries of `(∇̃_m R)_{ijkl}`.
    pub curvature_residual: Vec<Residual>,
    /// Nonzero entries of `(∇̃_i S)_{jkl}`.
    #[serde(rename = "S_residual")]
    pub s_residual: Vec<Residual>,
}

impl AmbroseSingerReport {
    pub fn passes(&self) -> bool {
        self.metric_ok && self.ricci_parallel_ok && self.curvature_parallel_ok && self.s_parallel_ok
    }
}

pub fn as_verify(g: &MetricLieAlgebra, s: &HomStructure) -> AmbroseSingerReport {
    as_verify_with(g, s, &riemann(g))
}

fn as_verify_with(g: &MetricLieAlgebra, s: &HomStructure, data: &CurvatureData) -> AmbroseSingerReport {
    let mut metric = vec![Rational::zero(); 27];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                metric[flat_index(&[i, j, k])] = s.get(i, j, k) + s.get(i, k, j);
            }
        }
    }
    let conn = s.connection(g);
    let ric = covariant_derivative(&conn, data.ric.entries(), 2);
    let curv = covariant_derivative(&conn, &data.r, 4);
    let sflat = s.flat();
    let spar = covariant_derivative(&conn, &sflat, 3);
    let metric_residual = residuals(&metric, 3);
    let ricci_residual = residuals(&ric, 3);
    let curvature_residual = residuals(&curv, 5);
    let s_residual = residuals(&spar, 4);
    AmbroseSingerReport {
        metric_ok: metric_residual.is_empty(),
        ricci_parallel_ok: ricci_residual.is_empty(),
        curvature_parallel_ok: curvature_residual.is_empty(),
        s_parallel_ok: s_residual.is_empty(),
        metric_residual,
        ricci_residual,
        curvature_residual,
        s_residual,
    }
}

/// Whether every member of the family is an Ambrose–Singer structure.
/// Residuals are polynomials of degree ≤ 2 in the parameter, so three
/// parameter values decide it.
pub fn family_passes(g: &MetricLieAlgebra, fam: &StructureFamily) -> bool {
    let data = riemann(g);
    [0, 1, -1]
        .iter()
        .all(|&t| as_verify_with(g, &fam.member(&Rational::from_int(t)), &data).passes())
}

/// Result of [`solve_left_invariant`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolverOutcome {
    /// `∇R = 0` without constant curvature.
    LocallySymmetric { note: String },
    /// Constant curvature `curvature`; moduli of structures not enumerated.
    SpaceForm { curvature: Rational, note: String },
    Structures {
        structures: Vec<HomStructure>,
        families: Vec<StructureFamily>,
        /// Components of the σ-system the solver could not parametrize,
        /// in the unknowns `σ_m = S_{m a b}` for the repeated Ricci pair `{a, b}`.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        unresolved: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        notes: Vec<String>,
    },
}

pub const LOCALLY_SYMMETRIC_NOTE: &str = "locally symmetric — classification out of scope (Abe/Ohno)";
pub const SPACE_FORM_NOTE: &str =
    "constant curvature; locally symmetric — classification out of scope (Abe/Ohno)";
pub const NON_LEFT_INVARIANT_NOTE: &str =
    "possible non-left-invariant extras exist for this input; only left-invariant structures are enumerated";

impl SolverOutcome {
    pub fn structures(&self) -> &[HomStructure] {
        match self {
            SolverOutcome::Structures { structures, .. } => structures,
            _ => &[],
        }
    }

    pub fn families(&self) -> &[StructureFamily] {
        match self {
            SolverOutcome::Structures { families, .. } => families,
            _ => &[],
        }
    }
}

/// Enumerates every left-invariant homogeneous Riemannian structure.
///
/// Locally symmetric input short-circuits. With distinct principal Ricci
/// curvatures the only candidate is `S⁽⁻⁾`. With one repeated pair `{a, b}`
/// the components `S_{m i j}`, `ρ_i ≠ ρ_j`, are forced to `-Γ^j_{mi}` by
/// `∇̃Ric = 0` and the remaining unknowns `σ_m = S_{m a b}` are found from
/// the quadratic system `∇̃S = 0`, `∇̃R = 0`, `∇̃Ric = 0`.
pub fn solve_left_invariant(g: &MetricLieAlgebra) -> Result<SolverOutcome, Error> {
    if is_locally_symmetric(g) {
        return Ok(match constant_curvature_check(g) {
            Some(k) => SolverOutcome::SpaceForm {
                curvature: k,
                note: SPACE_FORM_NOTE.into(),
            },
            None => SolverOutcome::LocallySymmetric {
                note: LOCALLY_SYMMETRIC_NOTE.into(),
            },
        });
    }
    let data = riemann(g);
    let pattern = char_poly_multiplicities(&data.ric)?.pattern;
    let mut notes = Vec::new();
    if g.has_non_left_invariant_extras() {
        notes.push(NON_LEFT_INVARIANT_NOTE.to_string());
    }
    match pattern {
        Multiplicity::Distinct => {
            let s = minus_structure(g);
            let structures = if as_verify_with(g, &s, &data).passes() {
                vec![s]
            } else {
                vec![]
            };
            Ok(SolverOutcome::Structures {
                structures,
                families: vec![],
                unresolved: vec![],
                notes,
            })
        }
        // Einstein in dimension three means constant curvature, caught above.
        Multiplicity::Triple => Ok(SolverOutcome::SpaceForm {
            curvature: &data.scalar / Rational::from_int(6),
            note: SPACE_FORM_NOTE.into(),
        }),
        Multiplicity::OneDouble => solve_double(g, &data, notes),
    }
}

/// Affine structure `S0 + Σ σ_m E_m` for the repeated pair and the
/// quadratic system its `σ` must satisfy.
pub struct SigmaSystem {
    pub pair: (usize, usize),
    pub base: HomStructure,
    pub units: [HomStructure; 3],
    pub equations: Vec<Poly>,
}

impl SigmaSystem {
    pub fn structure(&self, sigma: &[Rational]) -> HomStructure {
        let mut s = self.base.clone();
        for (u, x) in self.units.iter().zip(sigma) {
            s = s.add(&u.scale(x));
        }
        s
    }

    fn direction(&self, d: &[Rational]) -> HomStructure {
        let mut s = HomStructure::zero();
        for (u, x) in self.units.iter().zip(d) {
            s = s.add(&u.scale(x));
        }
        s
    }
}

/// Builds the σ-system for a diagonal Ricci tensor with exactly one repeated pair.
pub fn sigma_system(g: &MetricLieAlgebra) -> Result<SigmaSystem, Error> {
    let data = riemann(g);
    if !data.ric.is_diagonal() {
        return Err(Error::RicciNotDiagonal);
    }
    let rho = data.ric.diag();
    let pair = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(a, b)| rho[a] == rho[b])
        .ok_or_else(|| Error::WrongNormalForm("principal Ricci curvatures are distinct".into()))?;
    let lc = levi_civita(g);
    let mut base = HomStructure::zero();
    for m in 0..3 {
        for i in 0..3 {
            for j in 0..3 {
                if rho[i] != rho[j] {
                    base.set(m, i, j, -lc.coeff(m, i, j));
                }
            }
        }
    }
    let (a, b) = pair;
    let units = [0, 1, 2].map(|m| {
        let mut e = HomStructure::zero();
        e.set_skew(m, a, b, Rational::one());
        e
    });

    // residual(σ) = N(Γ + S0 + Σσ E, S0 + Σσ E) with N bilinear
    let g0 = lc.plus(base.tensor());
    let e_conn: Vec<Connection> = units.iter().map(|u| Connection { gamma: u.tensor().clone() }).collect();
    let n = 3;
    let mut equations: Vec<Poly> = Vec::new();
    let mut push_system = |constant: Vec<Rational>, linear: Vec<Vec<Rational>>, quad: Vec<Vec<Vec<Rational>>>| {
        for f in 0..constant.len() {
            let mut p = Poly::constant(n, constant[f].clone());
            for a in 0..n {
                let mut e = vec![0; n];
                e[a] = 1;
                p.add_term(e, linear[a][f].clone());
                for b in 0..n {
                    if quad.is_empty() {
                        continue;
                    }
                    let mut e = vec![0; n];
                    e[a] += 1;
                    e[b] += 1;
                    p.add_term(e, quad[a][b][f].clone());
                }
            }
            if !p.is_zero() && !equations.contains(&p) {
                equations.push(p);
            }
        }
    };
    // ∇̃S
    let s0 = base.flat();
    let eflat: Vec<Vec<Rational>> = units.iter().map(HomStructure::flat).collect();
    let constant = covariant_derivative(&g0, &s0, 3);
    let linear: Vec<Vec<Rational>> = (0..n)
        .map(|a| {
            let x = covariant_derivative(&e_conn[a], &s0, 3);
            let y = covariant_derivative(&g0, &eflat[a], 3);
            x.iter().zip(&y).map(|(p, q)| p + q).collect()
        })
        .collect();
    let quad: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|a| (0..n).map(|b| covariant_derivative(&e_conn[a], &eflat[b], 3)).collect())
        .collect();
    push_system(constant, linear, quad);
    // ∇̃Ric and ∇̃R are linear in σ
    for (t, p) in [(data.ric.entries().to_vec(), 2), (data.r.clone(), 4)] {
        let constant = covariant_derivative(&g0, &t, p);
        let linear = (0..n).map(|a| covariant_derivative(&e_conn[a], &t, p)).collect();
        push_system(constant, linear, vec![]);
    }
    Ok(SigmaSystem {
        pair,
        base,
        units,
        equations,
    })
}

/// The `S4` or `SO(2)` line in its parameter `r` when `fam` traces it out.
fn standard_parametrization(g: &MetricLieAlgebra, fam: StructureFamily) -> StructureFamily {
    [s4_family(g), so2_family(g)]
        .into_iter()
        .flatten()
        .find(|known| known.same_line(&fam))
        .unwrap_or(fam)
}

fn solve_double(g: &MetricLieAlgebra, data: &CurvatureData, notes: Vec<String>) -> Result<SolverOutcome, Error> {
    let sys = sigma_system(g)?;
    let sol = solve_quadratic_small(&sys.equations);
    let mut structures = Vec::new();
    for p in &sol.points {
        let s = sys.structure(p);
        if as_verify_with(g, &s, data).passes() {
            structures.push(s);
        }
    }
    let mut families = Vec::new();
    for l in &sol.lines {
        let fam = StructureFamily {
            base: sys.structure(&l.base),
            direction: sys.direction(&l.direction),
            parameter: "t".into(),
        };
        if family_passes(g, &fam) {
            families.push(standard_parametrization(g, fam));
        }
    }
    let unresolved = sol
        .unresolved
        .iter()
        .map(|comp| comp.iter().map(|p| p.to_string()).collect())
        .collect();
    Ok(SolverOutcome::Structures {
        structures,
        families,
        unresolved,
        notes,
    })
}

/// Matrix of `S(e_i)` acting on vectors.
pub fn structure_operator(s: &HomStructure, i: usize) -> Matrix {
    let mut m = Matrix::zeros(3, 3);
    for j in 0..3 {
        for k in 0..3 {
            m[(k, j)] = s.get(i, j, k).clone();
        }
    }
    m
}

/// Curvature of the Ambrose–Singer connection `∇ + S`.
pub fn as_curvature_data(g: &MetricLieAlgebra, s: &HomStructure) -> CurvatureData {
    curvature(g, &s.connection(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn uni(a: i64, b: i64, c: i64) -> MetricLieAlgebra {
        MetricLieAlgebra::unimodular(qi(a), qi(b), qi(c))
    }

    fn nonuni(a: Rational, b: Rational) -> MetricLieAlgebra {
        MetricLieAlgebra::nonunimodular(a, b).unwrap()
    }

    #[test]
    fn minus_on_124() {
        let s = minus_structure(&uni(1, 2, 4));
        assert_eq!(*s.get(0, 1, 2), q(-5, 2));
        assert_eq!(*s.get(1, 2, 0), q(-3, 2));
        assert_eq!(*s.get(2, 0, 1), q(1, 2));
        assert!(s.is_metrical());
        assert!(as_verify(&uni(1, 2, 4), &s).passes());
    }

    #[test]
    fn canonical_special_cases() {
        assert!(canonical_structure(&uni(3, 3, 3), Canonical::Zero).is_zero());
        assert!(canonical_structure(&uni(0, 0, 0), Canonical::Minus).is_zero());
        let plus = canonical_structure(&uni(1, 2, 4), Canonical::Plus);
        assert!(!plus.is_metrical());
        assert_eq!(tv_decompose(&plus), Err(Error::MetricalConditionViolated));
    }

    #[test]
    fn s4_examples() {
        let g = uni(1, 1, 3);
        let fam = s4_family(&g).unwrap();
        assert_eq!(fam.member(&q(-1, 2)), minus_structure(&g));
        let m0 = fam.member(&qi(0));
        assert_eq!(*m0.get(2, 0, 1), qi(0));
        assert_eq!(*m0.get(0, 1, 2), q(-3, 2));
        assert_eq!(*m0.get(1, 2, 0), q(-3, 2));
        assert!(matches!(s4_family(&uni(1, 2, 3)), Err(Error::WrongNormalForm(_))));
        assert!(family_passes(&g, &fam));
    }

    #[test]
    fn so2_examples() {
        let g = nonuni(qi(1), qi(1));
        let fam = so2_family(&g).unwrap();
        let m0 = fam.member(&qi(0));
        assert_eq!(*m0.get(2, 0, 1), qi(0));
        assert_eq!(*m0.get(0, 1, 2), qi(-1));
        assert_eq!(*m0.get(1, 2, 0), qi(-1));
        for r in [0, 5, -3] {
            assert!(as_verify(&g, &fam.member(&qi(r))).passes(), "r = {r}");
        }
        assert!(matches!(so2_family(&nonuni(q(1, 2), qi(1))), Err(Error::WrongNormalForm(_))));
    }

    #[test]
    fn tv_examples() {
        let d = tv_decompose(&minus_structure(&uni(1, 2, -3))).unwrap();
        assert_eq!(d.class, TvClass::T2);
        let d = tv_decompose(&minus_structure(&uni(1, 2, 4))).unwrap();
        assert_eq!(d.class, TvClass::T2T3);
        assert!(!d.is_in(TvClass::T2));
        let fam = so2_family(&nonuni(qi(1), qi(1))).unwrap();
        assert_eq!(tv_decompose(&fam.member(&qi(-2))).unwrap().class, TvClass::T2);
        assert_eq!(tv_decompose(&fam.member(&qi(1))).unwrap().class, TvClass::T3);
        let d = tv_decompose(&fam.member(&qi(7))).unwrap();
        assert_eq!(d.s1.add(&d.s2).add(&d.s3), fam.member(&qi(7)));
    }

    #[test]
    fn as_verify_rejects_zero_on_124() {
        let r = as_verify(&uni(1, 2, 4), &HomStructure::zero());
        assert!(r.metric_ok);
        assert!(!r.ricci_parallel_ok);
        assert!(!r.ricci_residual.is_empty());
        assert!(!r.passes());
    }

    #[test]
    fn solver_examples() {
        let g = uni(1, 2, 4);
        let out = solve_left_invariant(&g).unwrap();
        assert_eq!(out.structures(), &[minus_structure(&g)]);
        assert!(out.families().is_empty());

        let g = uni(1, 1, 3);
        let out = solve_left_invariant(&g).unwrap();
        assert!(out.structures().is_empty());
        assert_eq!(out.families().len(), 1);
        assert!(out.families()[0].same_line(&s4_family(&g).unwrap()));

        let g = nonuni(qi(1), qi(1));
        let out = solve_left_invariant(&g).unwrap();
        assert_eq!(out.structures(), &[minus_structure(&g)]);
        assert_eq!(out.families().len(), 1);
        assert!(out.families()[0].same_line(&so2_family(&g).unwrap()));
        let sys = sigma_system(&g).unwrap();
        assert_eq!(sys.structure(&[qi(0), qi(2), qi(1)]), minus_structure(&g));
        match &out {
            SolverOutcome::Structures { notes, .. } => assert_eq!(notes, &[NON_LEFT_INVARIANT_NOTE]),
            _ => panic!(),
        }

        let g = nonuni(q(1, 2), qi(1));
        let out = solve_left_invariant(&g).unwrap();
        assert_eq!(out.structures(), &[minus_structure(&g)]);
        assert!(out.families().is_empty());
    }

    #[test]
    fn solver_symmetric_markers() {
        match solve_left_invariant(&nonuni(qi(0), qi(3))).unwrap() {
            SolverOutcome::SpaceForm { curvature, note } => {
                assert_eq!(curvature, qi(-1));
                assert!(note.contains(LOCALLY_SYMMETRIC_NOTE));
            }
            other => panic!("{other:?}"),
        }
        match solve_left_invariant(&nonuni(qi(1), qi(0))).unwrap() {
            SolverOutcome::LocallySymmetric { note } => assert_eq!(note, LOCALLY_SYMMETRIC_NOTE),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solver_needs_diagonal_ricci() {
        let g = uni(1, 1, 3);
        let p = Matrix::from_rows(vec![
            vec![q(3, 5), qi(0), q(-4, 5)],
            vec![qi(0), qi(1), qi(0)],
            vec![q(4, 5), qi(0), q(3, 5)],
        ]);
        let rotated = MetricLieAlgebra::generic(g.algebra().change_basis(&p).unwrap().constants().clone()).unwrap();
        assert_eq!(solve_left_invariant(&rotated), Err(Error::RicciNotDiagonal));
    }

    #[test]
    fn json_shapes() {
        let s = minus_structure(&uni(1, 2, 4));
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["S"].as_array().unwrap().len(), 27);
        let back: HomStructure = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
        let fam = s4_family(&uni(1, 1, 3)).unwrap();
        let v = serde_json::to_value(&fam).unwrap();
        assert_eq!(v["parameter"], "r");
        assert_eq!(v["direction"].as_array().unwrap().len(), 27);
        let back: StructureFamily = serde_json::from_value(v).unwrap();
        assert_eq!(back, fam);
    }
}
