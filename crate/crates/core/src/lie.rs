//! Lie algebras given by structure constants, and metric Lie algebras of
//! dimension three in Milnor normal form.
//!
//! Structure constants are stored as `c[i][j][k] = c^k_{ij}`, so that
//! `[e_i, e_j] = Σ_k c^k_{ij} e_k`. Indices are 0-based in code.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::Error;

pub type Tensor3 = Vec<Vec<Vec<Rational>>>;

pub(crate) fn zeros3(n: usize) -> Tensor3 {
    vec![vec![vec![Rational::zero(); n]; n]; n]
}

/// A finite-dimensional real Lie algebra with rational structure constants.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebra")]
pub struct LieAlgebra {
    dim: usize,
    c: Tensor3,
}

#[derive(Deserialize)]
struct RawAlgebra {
    dim: usize,
    c: Tensor3,
}

impl TryFrom<RawAlgebra> for LieAlgebra {
    type Error = Error;
    fn try_from(raw: RawAlgebra) -> Result<Self, Error> {
        let alg = LieAlgebra::new(raw.c)?;
        if alg.dim != raw.dim {
            return Err(Error::DimensionMismatch(format!(
                "declared dim {} but constants have dim {}",
                raw.dim, alg.dim
            )));
        }
        Ok(alg)
    }
}

impl LieAlgebra {
    /// Validates shape, antisymmetry and the Jacobi identity.
    pub fn new(c: Tensor3) -> Result<Self, Error> {
        let n = c.len();
        if c.iter().any(|m| m.len() != n || m.iter().any(|v| v.len() != n)) {
            return Err(Error::InvalidAlgebra(
                "structure constants must be an n x n x n array".into(),
            ));
        }
        let alg = LieAlgebra { dim: n, c };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if alg.c[i][j][k] != -&alg.c[j][i][k] {
                        return Err(Error::InvalidAlgebra(format!(
                            "bracket not antisymmetric at c^{}_{{{}{}}}",
                            k + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        if let Some(msg) = alg.jacobi_defect() {
            return Err(Error::InvalidAlgebra(msg));
        }
        Ok(alg)
    }

    /// Builds from the nonzero brackets `[e_i, e_j] = v` with `i < j`.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<Rational>)]) -> Result<Self, Error> {
        let mut c = zeros3(dim);
        for (i, j, v) in brackets {
            if v.len() != dim || *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket [e{}, e{}] does not fit dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            for k in 0..dim {
                c[*i][*j][k] = v[k].clone();
                c[*j][*i][k] = -&v[k];
            }
        }
        LieAlgebra::new(c)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: zeros3(dim),
        }
    }

    pub(crate) fn new_unchecked(c: Tensor3) -> Self {
        LieAlgebra { dim: c.len(), c }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.c
    }

    /// `c^k_{ij}`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        self.c[i][j].clone()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for k in 0..n {
                    out[k] += &s * &self.c[i][j][k];
                }
            }
        }
        out
    }

    /// Matrix of `ad(x)`, columns indexed by the basis.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    m[(k, j)] += &x[i] * &self.c[i][j][k];
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&unit(self.dim, i))
    }

    /// First failing Jacobi component, if any.
    pub fn jacobi_defect(&self) -> Option<String> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = Rational::zero();
                        for m in 0..n {
                            s += &self.c[i][j][m] * &self.c[m][k][l];
                            s += &self.c[j][k][m] * &self.c[m][i][l];
                            s += &self.c[k][i][m] * &self.c[m][j][l];
                        }
                        if !s.is_zero() {
                            return Some(format!(
                                "Jacobi identity fails for (e{}, e{}, e{}) in component e{}",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    /// `tr ad(e_i)` for each basis vector.
    pub fn trace_form(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| &self.c[i][j][j]).sum())
            .collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.trace_form().iter().all(Rational::is_zero)
    }

    /// Basis of `{X : tr ad(X) = 0}`.
    pub fn unimodular_kernel(&self) -> Vec<Vec<Rational>> {
        Matrix::from_rows(vec![self.trace_form()]).null_space()
    }

    /// Killing form `B(e_i, e_j) = tr(ad e_i ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim;
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut b = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                b[(i, j)] = t.clone();
                b[(j, i)] = t;
            }
        }
        b
    }

    /// Pushes the algebra forward along an invertible change of basis whose
    /// columns are the new basis vectors written in the old basis.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, Error> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch("change of basis has wrong size".into()));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("change of basis is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
        let mut c = zeros3(n);
        for i in 0..n {
            for j in 0..n {
                let v = inv.mul_vec(&self.bracket(&cols[i], &cols[j]));
                c[i][j] = v;
            }
        }
        Ok(LieAlgebra::new_unchecked(c))
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim {}", self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.c[i][j].iter().any(|x| !x.is_zero()) {
                    write!(f, ", [e{},e{}]={:?}", i + 1, j + 1, self.c[i][j])?;
                }
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// JSON description of a metric Lie algebra in an orthonormal basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum AlgebraSpec {
    Unimodular { c: [Rational; 3] },
    Nonunimodular { alpha: Rational, beta: Rational },
    Generic { c: Tensor3 },
}

/// Which Milnor normal form, if any, the basis is in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    Unimodular([Rational; 3]),
    NonUnimodular { alpha: Rational, beta: Rational },
    Generic,
}

/// A three-dimensional Lie algebra with the basis declared orthonormal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "AlgebraSpec", try_from = "AlgebraSpec")]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    normal_form: NormalForm,
}

impl From<MetricLieAlgebra> for AlgebraSpec {
    fn from(g: MetricLieAlgebra) -> Self {
        g.spec()
    }
}

impl TryFrom<AlgebraSpec> for MetricLieAlgebra {
    type Error = Error;
    fn try_from(spec: AlgebraSpec) -> Result<Self, Error> {
        MetricLieAlgebra::from_spec(spec)
    }
}

/// Sign-pattern class of a unimodular algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MilnorGroup {
    #[serde(rename = "SU(2)")]
    Su2,
    #[serde(rename = "SL(2,R)")]
    Sl2R,
    #[serde(rename = "SE(2)")]
    Se2,
    #[serde(rename = "SE(1,1)")]
    Se11,
    #[serde(rename = "Nil3")]
    Nil,
    #[serde(rename = "R3")]
    Abelian,
}

impl MilnorGroup {
    /// Class of a sign triple, up to permutation and global sign.
    pub fn from_signs(signs: [i32; 3]) -> MilnorGroup {
        let plus = signs.iter().filter(|&&s| s > 0).count();
        let minus = signs.iter().filter(|&&s| s < 0).count();
        let (p, m) = if minus > plus { (minus, plus) } else { (plus, minus) };
        match (p, m) {
            (3, 0) => MilnorGroup::Su2,
            (2, 1) => MilnorGroup::Sl2R,
            (2, 0) => MilnorGroup::Se2,
            (1, 1) => MilnorGroup::Se11,
            (1, 0) => MilnorGroup::Nil,
            _ => MilnorGroup::Abelian,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MilnorGroup::Su2 => "SU(2)",
            MilnorGroup::Sl2R => "SL(2,R)",
            MilnorGroup::Se2 => "SE(2)",
            MilnorGroup::Se11 => "SE(1,1)",
            MilnorGroup::Nil => "Nil3",
            MilnorGroup::Abelian => "R3",
        }
    }

    /// Canonical sign triple, `(+,+,-)` style.
    pub fn canonical_signs(self) -> [i32; 3] {
        match self {
            MilnorGroup::Su2 => [1, 1, 1],
            MilnorGroup::Sl2R => [1, 1, -1],
            MilnorGroup::Se2 => [1, 1, 0],
            MilnorGroup::Se11 => [1, -1, 0],
            MilnorGroup::Nil => [1, 0, 0],
            MilnorGroup::Abelian => [0, 0, 0],
        }
    }
}

impl fmt::Display for MilnorGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Result of [`MetricLieAlgebra::milnor_classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MilnorClass {
    Unimodular {
        signs: [i32; 3],
        group: MilnorGroup,
    },
    Nonunimodular {
        /// `det A = (1-α²)(1+β²)`.
        milnor_invariant: Rational,
        /// `4/D`, `None` standing for infinity.
        chi: Option<Rational>,
        /// Coefficients of `λ² + p λ + q` as `[q, p, 1]`.
        char_poly: [Rational; 3],
    },
}

impl MetricLieAlgebra {
    /// `[e1,e2]=c3 e3, [e2,e3]=c1 e1, [e3,e1]=c2 e2`.
    pub fn unimodular(c1: Rational, c2: Rational, c3: Rational) -> Self {
        let z = Rational::zero;
        let algebra = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![z(), z(), c3.clone()]),
                (1, 2, vec![c1.clone(), z(), z()]),
                (0, 2, vec![z(), -&c2, z()]),
            ],
        )
        .expect("unimodular brackets always satisfy Jacobi");
        MetricLieAlgebra {
            algebra,
            normal_form: NormalForm::Unimodular([c1, c2, c3]),
        }
    }

    /// `[e1,e2]=(1+α)e2+(1+α)βe3, [e2,e3]=0, [e3,e1]=(1-α)βe2-(1-α)e3`.
    pub fn nonunimodular(alpha: Rational, beta: Rational) -> Result<Self, Error> {
        if alpha.is_negative() || beta.is_negative() {
            return Err(Error::NormalizationViolated);
        }
        let one = Rational::one();
        let p = &one + &alpha;
        let m = &one - &alpha;
        let z = Rational::zero;
        let algebra = LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![z(), p.clone(), &p * &beta]),
                // [e1,e3] = -[e3,e1]
                (0, 2, vec![z(), -(&m * &beta), m.clone()]),
            ],
        )?;
        Ok(MetricLieAlgebra {
            algebra,
            normal_form: NormalForm::NonUnimodular { alpha, beta },
        })
    }

    /// Arbitrary constants `c[i][j][k] = c^k_{ij}` in an orthonormal basis.
    pub fn generic(c: Tensor3) -> Result<Self, Error> {
        let algebra = LieAlgebra::new(c)?;
        if algebra.dim() != 3 {
            return Err(Error::DimensionMismatch(format!(
                "metric Lie algebras here are 3-dimensional, got {}",
                algebra.dim()
            )));
        }
        Ok(MetricLieAlgebra {
            algebra,
            normal_form: NormalForm::Generic,
        })
    }

    pub fn from_spec(spec: AlgebraSpec) -> Result<Self, Error> {
        match spec {
            AlgebraSpec::Unimodular { c: [a, b, c] } => Ok(MetricLieAlgebra::unimodular(a, b, c)),
            AlgebraSpec::Nonunimodular { alpha, beta } => MetricLieAlgebra::nonunimodular(alpha, beta),
            AlgebraSpec::Generic { c } => MetricLieAlgebra::generic(c),
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        match &self.normal_form {
            NormalForm::Unimodular(c) => AlgebraSpec::Unimodular { c: c.clone() },
            NormalForm::NonUnimodular { alpha, beta } => AlgebraSpec::Nonunimodular {
                alpha: alpha.clone(),
                beta: beta.clone(),
            },
            NormalForm::Generic => AlgebraSpec::Generic {
                c: self.algebra.constants().clone(),
            },
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.normal_form
    }

    /// Same brackets, normal-form tag dropped.
    pub fn forget_normal_form(&self) -> MetricLieAlgebra {
        MetricLieAlgebra {
            algebra: self.algebra.clone(),
            normal_form: NormalForm::Generic,
        }
    }

    /// `c^k_{ij}`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.algebra.c(i, j, k)
    }

    pub fn is_unimodular(&self) -> bool {
        self.algebra.is_unimodular()
    }

    pub fn unimodular_kernel(&self) -> Vec<Vec<Rational>> {
        self.algebra.unimodular_kernel()
    }

    /// `u[i][j][k] = ⟨U(e_i, e_j), e_k⟩` where
    /// `2⟨U(X,Y),Z⟩ = ⟨X,[Z,Y]⟩ + ⟨Y,[Z,X]⟩`.
    pub fn bi_invariance_obstruction(&self) -> Tensor3 {
        let half = Rational::new(1, 2);
        let mut u = zeros3(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    u[i][j][k] = (self.c(k, j, i) + self.c(k, i, j)) * &half;
                }
            }
        }
        u
    }

    /// `L` with `[X,Y] = L(X × Y)` for the orientation making the basis
    /// positive, and whether it is self-adjoint.
    pub fn vector_product_operator(&self) -> (Matrix, bool) {
        // e2×e3 = e1, e3×e1 = e2, e1×e2 = e3
        let cols = vec![
            self.algebra.bracket_basis(1, 2),
            self.algebra.bracket_basis(2, 0),
            self.algebra.bracket_basis(0, 1),
        ];
        let l = Matrix::from_columns(&cols);
        let sa = l.is_symmetric();
        (l, sa)
    }

    pub fn milnor_classify(&self) -> Result<MilnorClass, Error> {
        match &self.normal_form {
            NormalForm::Unimodular(c) => {
                let signs = [c[0].signum(), c[1].signum(), c[2].signum()];
                Ok(MilnorClass::Unimodular {
                    signs,
                    group: MilnorGroup::from_signs(signs),
                })
            }
            NormalForm::NonUnimodular { alpha, beta } => {
                let one = Rational::one();
                let d = (&one - alpha * alpha) * (&one + beta * beta);
                let chi = (!d.is_zero()).then(|| Rational::from_int(4) / &d);
                Ok(MilnorClass::Nonunimodular {
                    char_poly: [d.clone(), Rational::from_int(-2), one],
                    milnor_invariant: d,
                    chi,
                })
            }
            NormalForm::Generic => Err(Error::GenericForm),
        }
    }

    /// The matrix `A` of the non-unimodular normal form.
    pub fn nonunimodular_matrix(&self) -> Result<Matrix, Error> {
        match &self.normal_form {
            NormalForm::NonUnimodular { .. } => {
                // [e1,e2] = a11 e2 + a21 e3, [e1,e3] = a12 e2 + a22 e3
                let a11 = self.c(0, 1, 1).clone();
                let a21 = self.c(0, 1, 2).clone();
                let a12 = self.c(0, 2, 1).clone();
                let a22 = self.c(0, 2, 2).clone();
                Ok(Matrix::from_rows(vec![vec![a11, a12], vec![a21, a22]]))
            }
            NormalForm::Generic => Err(Error::GenericForm),
            NormalForm::Unimodular(_) => Err(Error::WrongNormalForm(
                "the A matrix exists only for the non-unimodular form".into(),
            )),
        }
    }

    pub fn isometry_dimension(&self) -> Result<u32, Error> {
        match &self.normal_form {
            NormalForm::Unimodular(c) => {
                if c[0] == c[1] && c[1] == c[2] {
                    return Ok(6);
                }
                for (a, b, t) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
                    if c[a] == c[b] {
                        return Ok(if c[t].is_zero() { 6 } else { 4 });
                    }
                }
                Ok(3)
            }
            NormalForm::NonUnimodular { alpha, .. } => Ok(if alpha.is_zero() {
                6
            } else if alpha.is_one() {
                4
            } else {
                3
            }),
            NormalForm::Generic => Err(Error::GenericForm),
        }
    }

    /// True for inputs that also carry homogeneous structures which are not
    /// left-invariant: `sl(2,R)`-type unimodular algebras with a four-dimensional
    /// isometry group or constants with `c_a = c_b - c_t`, and `g(1, β)`, `β ≠ 0`.
    pub fn has_non_left_invariant_extras(&self) -> bool {
        match &self.normal_form {
            NormalForm::Unimodular(c) => {
                let signs = [c[0].signum(), c[1].signum(), c[2].signum()];
                if MilnorGroup::from_signs(signs) != MilnorGroup::Sl2R {
                    return false;
                }
                let four = self.isometry_dimension() == Ok(4);
                let perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)];
                four || perms.iter().any(|&(a, b, t)| c[a] == &c[b] - &c[t])
            }
            NormalForm::NonUnimodular { alpha, beta } => alpha.is_one() && !beta.is_zero(),
            NormalForm::Generic => false,
        }
    }
}
