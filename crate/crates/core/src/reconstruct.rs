//! Holonomy of the Ambrose–Singer connection and the transitive Lie algebra
//! `𝔩 = 𝔪 ⊕ 𝔥` it determines, plus isomorphism invariants for small Lie
//! algebras.
//!
//! Basis of `𝔩`: `e_1, e_2, e_3` span `𝔪`, the holonomy generators follow.
//! Brackets: `[U, V] = UV - VU`, `[U, X] = U(X)` and
//! `[X, Y] = -R̃(X, Y) - S(X)Y + S(Y)X`.

use serde::{Deserialize, Serialize};

use crate::homstruct::{as_verify, HomStructure};
use crate::lie::{zeros3, LieAlgebra, MetricLieAlgebra, MilnorGroup, Tensor3};
use crate::linalg::{inertia, solve_linear, Inertia, Matrix};
use crate::rational::Rational;
use crate::Error;

/// `R̃(e_i, e_j)` for `∇̃ = ∇ + S`; entry `(k, l)` is the `e_k` coefficient
/// of `R̃(e_i, e_j) e_l`.
pub fn as_curvature(g: &MetricLieAlgebra, s: &HomStructure) -> Result<Vec<Vec<Matrix>>, Error> {
    if !as_verify(g, s).passes() {
        return Err(Error::NotAmbroseSinger);
    }
    Ok(s.connection(g).curvature_operators(g.algebra()))
}

fn flatten(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn independent_of(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Rational::is_zero) {
        return false;
    }
    let mut rows: Vec<Vec<Rational>> = basis.to_vec();
    rows.push(v.to_vec());
    Matrix::from_rows(rows).rank() == basis.len() + 1
}

/// Coordinates of `v` in the span of `basis`, if it lies there.
fn coordinates(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return v.iter().all(Rational::is_zero).then(Vec::new);
    }
    let a = Matrix::from_columns(basis);
    let sol = solve_linear(&a, v).ok()?;
    Some(sol.particular)
}

/// Basis of the Lie algebra of skew matrices generated by the curvature
/// operators, seeded with `-R̃(e_1,e_2), -R̃(e_2,e_3), -R̃(e_3,e_1)`.
pub fn holonomy_algebra(rt: &[Vec<Matrix>]) -> Result<Vec<Matrix>, Error> {
    let mut basis: Vec<Matrix> = Vec::new();
    let mut flat: Vec<Vec<Rational>> = Vec::new();
    let minus = -Rational::one();
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let m = rt[i][j].scale(&minus);
        let f = flatten(&m);
        if independent_of(&flat, &f) {
            flat.push(f);
            basis.push(m);
        }
    }
    loop {
        let mut grew = false;
        let snapshot = basis.clone();
        for a in 0..snapshot.len() {
            for b in a + 1..snapshot.len() {
                let m = snapshot[a].commutator(&snapshot[b]);
                let f = flatten(&m);
                if independent_of(&flat, &f) {
                    flat.push(f);
                    basis.push(m);
                    grew = true;
                }
            }
        }
        if basis.len() > 3 {
            return Err(Error::ClosureDiverged);
        }
        if !grew {
            return Ok(basis);
        }
    }
}

/// `𝔩 = 𝔪 ⊕ 𝔥` with `𝔪 = span(e_1, e_2, e_3)` carrying the identity metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructedAlgebra {
    pub total: LieAlgebra,
    /// 0-based indices of the basis vectors spanning `𝔥`.
    pub isotropy: Vec<usize>,
    pub holonomy_generators: Vec<Matrix>,
    pub m_metric: Matrix,
}

#[derive(Serialize, Deserialize)]
struct ReconstructedJson {
    dim: usize,
    brackets: Tensor3,
    isotropy: Vec<usize>,
    holonomy_generators: Vec<Matrix>,
    fingerprint: AlgebraFingerprint,
}

impl Serialize for ReconstructedAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReconstructedJson {
            dim: self.total.dim(),
            brackets: self.total.constants().clone(),
            isotropy: self.isotropy.iter().map(|i| i + 1).collect(),
            holonomy_generators: self.holonomy_generators.clone(),
            fingerprint: fingerprint(&self.total),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ReconstructedAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ReconstructedJson::deserialize(d)?;
        let total = LieAlgebra::new(j.brackets).map_err(serde::de::Error::custom)?;
        if total.dim() != j.dim {
            return Err(serde::de::Error::custom("dim does not match brackets"));
        }
        Ok(ReconstructedAlgebra {
            total,
            isotropy: j.isotropy.iter().map(|i| i - 1).collect(),
            holonomy_generators: j.holonomy_generators,
            m_metric: Matrix::identity(3),
        })
    }
}

impl ReconstructedAlgebra {
    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn isotropy_dim(&self) -> usize {
        self.isotropy.len()
    }

    pub fn m_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|i| !self.isotropy.contains(i)).collect()
    }

    /// `[𝔥, 𝔪] ⊆ 𝔪`.
    pub fn is_reductive(&self) -> bool {
        self.isotropy.iter().all(|&u| {
            self.m_indices().iter().all(|&x| {
                let v = self.total.bracket_basis(u, x);
                self.isotropy.iter().all(|&h| v[h].is_zero())
            })
        })
    }
}

/// Assembles `𝔩` from a verified structure.
pub fn build_transitive_algebra(g: &MetricLieAlgebra, s: &HomStructure) -> Result<ReconstructedAlgebra, Error> {
    let rt = as_curvature(g, s)?;
    let hol = holonomy_algebra(&rt)?;
    let h = hol.len();
    let n = 3 + h;
    let hflat: Vec<Vec<Rational>> = hol.iter().map(flatten).collect();
    let hcoords = |m: &Matrix| -> Result<Vec<Rational>, Error> {
        coordinates(&hflat, &flatten(m))
            .ok_or_else(|| Error::JacobiFailed("curvature operator outside the holonomy algebra".into()))
    };
    let mut c = zeros3(n);
    let mut set = |i: usize, j: usize, v: Vec<Rational>| {
        for k in 0..n {
            c[j][i][k] = -&v[k];
            c[i][j][k] = v[k].clone();
        }
    };
    let minus = -Rational::one();
    for i in 0..3 {
        for j in i + 1..3 {
            let mut v = vec![Rational::zero(); n];
            let sxy = s.apply(i, j);
            let syx = s.apply(j, i);
            for k in 0..3 {
                v[k] = &syx[k] - &sxy[k];
            }
            for (a, x) in hcoords(&rt[i][j].scale(&minus))?.into_iter().enumerate() {
                v[3 + a] = x;
            }
            set(i, j, v);
        }
    }
    for (a, u) in hol.iter().enumerate() {
        for x in 0..3 {
            let mut v = vec![Rational::zero(); n];
            for (k, val) in u.column(x).into_iter().enumerate() {
                v[k] = val;
            }
            set(3 + a, x, v);
        }
        for (b, w) in hol.iter().enumerate().skip(a + 1) {
            let mut v = vec![Rational::zero(); n];
            for (k, x) in hcoords(&u.commutator(w))?.into_iter().enumerate() {
                v[3 + k] = x;
            }
            set(3 + a, 3 + b, v);
        }
    }
    let total = LieAlgebra::new(c).map_err(|e| match e {
        Error::InvalidAlgebra(msg) => Error::JacobiFailed(msg),
        other => other,
    })?;
    let out = ReconstructedAlgebra {
        total,
        isotropy: (3..n).collect(),
        holonomy_generators: hol,
        m_metric: Matrix::identity(3),
    };
    debug_assert!(out.is_reductive());
    Ok(out)
}

/// Isomorphism invariants of a small Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraFingerprint {
    pub dim: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    pub killing_inertia: Inertia,
    /// Inertia of the Killing form of `[𝔩, 𝔩]` as an algebra in its own right.
    pub derived_killing_inertia: Inertia,
    pub solvable: bool,
    pub nilpotent: bool,
    pub unimodular: bool,
    /// Milnor class of a three-dimensional unimodular algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_group: Option<MilnorGroup>,
}

fn span_basis(vectors: Vec<Vec<Rational>>, n: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return vec![];
    }
    let (r, pivots) = Matrix::from_rows(vectors).rref();
    (0..pivots.len()).map(|i| (0..n).map(|j| r[(i, j)].clone()).collect()).collect()
}

fn bracket_span(l: &LieAlgebra, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut vs = Vec::new();
    for x in a {
        for y in b {
            vs.push(l.bracket(x, y));
        }
    }
    span_basis(vs, l.dim())
}

fn identity_basis(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| crate::lie::unit(n, i)).collect()
}

/// The subalgebra spanned by `basis`, in that basis.
fn restrict(l: &LieAlgebra, basis: &[Vec<Rational>]) -> LieAlgebra {
    let d = basis.len();
    let mut c = zeros3(d);
    for i in 0..d {
        for j in 0..d {
            c[i][j] = coordinates(basis, &l.bracket(&basis[i], &basis[j]))
                .expect("span is closed under the bracket");
        }
    }
    LieAlgebra::new_unchecked(c)
}

fn series(l: &LieAlgebra, lower_central: bool) -> Vec<usize> {
    let n = l.dim();
    let whole = identity_basis(n);
    let mut cur = whole.clone();
    let mut dims = vec![n];
    loop {
        let next = if lower_central {
            bracket_span(l, &whole, &cur)
        } else {
            bracket_span(l, &cur, &cur)
        };
        if next.len() == cur.len() {
            return dims;
        }
        dims.push(next.len());
        cur = next;
    }
}

pub fn fingerprint(l: &LieAlgebra) -> AlgebraFingerprint {
    let n = l.dim();
    let derived_series_dims = series(l, false);
    let lower_central_dims = series(l, true);
    // center: x with Σ_i x_i c^k_{ij} = 0 for all j, k
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| l.c(i, j, k).clone()).collect());
        }
    }
    let center_dim = if n == 0 { 0 } else { Matrix::from_rows(rows).null_space().len() };
    let killing_inertia = inertia(&l.killing_form()).expect("Killing form is symmetric");
    let derived = bracket_span(l, &identity_basis(n), &identity_basis(n));
    let derived_killing_inertia = if derived.is_empty() {
        Inertia::new(0, 0, 0)
    } else {
        inertia(&restrict(l, &derived).killing_form()).expect("Killing form is symmetric")
    };
    let unimodular = l.is_unimodular();
    let milnor_group = (n == 3 && unimodular).then(|| {
        let ml = MetricLieAlgebra::generic(l.constants().clone()).expect("valid 3-dimensional algebra");
        let (op, _) = ml.vector_product_operator();
        let sig = inertia(&op).expect("unimodular L is self-adjoint");
        let mut signs = [0i32; 3];
        for (slot, s) in signs.iter_mut().zip(
            std::iter::repeat_n(1, sig.plus).chain(std::iter::repeat_n(-1, sig.minus)),
        ) {
            *slot = s;
        }
        MilnorGroup::from_signs(signs)
    });
    AlgebraFingerprint {
        dim: n,
        solvable: derived_series_dims.last() == Some(&0) || n == 0,
        nilpotent: lower_central_dims.last() == Some(&0) || n == 0,
        derived_series_dims,
        lower_central_dims,
        center_dim,
        killing_inertia,
        derived_killing_inertia,
        unimodular,
        milnor_group,
    }
}

/// Whether `f` (column `j` is the image of basis vector `j`) is an invertible
/// bracket-preserving map `a → b`.
pub fn verify_lie_morphism(f: &Matrix, a: &LieAlgebra, b: &LieAlgebra) -> Result<bool, Error> {
    let n = a.dim();
    if b.dim() != n || f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{} between algebras of dims {} and {}",
            f.rows(),
            f.cols(),
            n,
            b.dim()
        )));
    }
    if f.determinant().is_zero() {
        return Ok(false);
    }
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| f.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if f.mul_vec(&a.bracket_basis(i, j)) != b.bracket(&cols[i], &cols[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Lie isomorphism that maps isotropy to isotropy, `𝔪` to `𝔪`, and is an
/// isometry on `𝔪`.
pub fn verify_isomorphism(f: &Matrix, a: &ReconstructedAlgebra, b: &ReconstructedAlgebra) -> Result<bool, Error> {
    if !verify_lie_morphism(f, &a.total, &b.total)? {
        return Ok(false);
    }
    let bm = b.m_indices();
    for &h in &a.isotropy {
        if bm.iter().any(|&k| !f[(k, h)].is_zero()) {
            return Ok(false);
        }
    }
    let am = a.m_indices();
    for &x in &am {
        if b.isotropy.iter().any(|&k| !f[(k, x)].is_zero()) {
            return Ok(false);
        }
    }
    if am.len() != bm.len() {
        return Ok(false);
    }
    // F|𝔪 in the m-bases must be orthogonal
    let block = Matrix::from_rows(
        bm.iter()
            .map(|&r| am.iter().map(|&c| f[(r, c)].clone()).collect())
            .collect(),
    );
    Ok(block.transpose().mul(&block) == Matrix::identity(am.len()))
}
