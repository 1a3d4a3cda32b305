//! Levi-Civita connection and curvature of a left-invariant metric.
//!
//! Conventions: `R(X,Y) = [∇_X, ∇_Y] - ∇_{[X,Y]}` and
//! `R_{ijkl} = ⟨R(e_i, e_j) e_l, e_k⟩`, so `R_{ijij}` is the sectional
//! curvature of the plane `e_i ∧ e_j` and a space of constant curvature `k`
//! has `R_{ijkl} = k(δ_ik δ_jl - δ_il δ_jk)`. Ricci is
//! `Ric(X,Y) = tr(Z ↦ R(Z,Y)X)`.

use serde::{Deserialize, Serialize};

use crate::lie::{zeros3, LieAlgebra, MetricLieAlgebra, Tensor3};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// A left-invariant linear connection, `∇_{e_i} e_j = Σ_k Γ^k_{ij} e_k`,
/// stored as `gamma[i][j][k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connection {
    pub gamma: Tensor3,
}

impl Connection {
    pub fn zero(n: usize) -> Self {
        Connection { gamma: zeros3(n) }
    }

    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// `Γ^k_{ij}`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.gamma[i][j][k]
    }

    /// `∇_{e_i} e_j`.
    pub fn nabla(&self, i: usize, j: usize) -> Vec<Rational> {
        self.gamma[i][j].clone()
    }

    /// Matrix of `∇_{e_i}` acting on vectors.
    pub fn operator(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.gamma[i][j][k].clone();
            }
        }
        m
    }

    /// `Γ^k_{ij} = -Γ^j_{ik}`, i.e. `∇g = 0` in an orthonormal basis.
    pub fn is_metric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.gamma[i][j][k] == -&self.gamma[i][k][j]))
        })
    }

    /// `Γ^k_{ij} - Γ^k_{ji} = c^k_{ij}`.
    pub fn is_torsion_free(&self, alg: &LieAlgebra) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| &self.gamma[i][j][k] - &self.gamma[j][i][k] == *alg.c(i, j, k))
            })
        })
    }

    /// `Γ + S` where `S(e_i)e_j = Σ_k s[i][j][k] e_k`.
    pub fn plus(&self, s: &Tensor3) -> Connection {
        let n = self.dim();
        let mut gamma = self.gamma.clone();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    gamma[i][j][k] += &s[i][j][k];
                }
            }
        }
        Connection { gamma }
    }

    /// `Γ - Γ'` as a difference tensor.
    pub fn difference(&self, other: &Connection) -> Tensor3 {
        let n = self.dim();
        let mut d = zeros3(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    d[i][j][k] = &self.gamma[i][j][k] - &other.gamma[i][j][k];
                }
            }
        }
        d
    }

    /// Curvature operators: entry `(k, l)` of `ops[i][j]` is the `e_k`
    /// coefficient of `R(e_i, e_j) e_l`.
    pub fn curvature_operators(&self, alg: &LieAlgebra) -> Vec<Vec<Matrix>> {
        let n = self.dim();
        let ops: Vec<Matrix> = (0..n).map(|i| self.operator(i)).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut r = ops[i].commutator(&ops[j]);
                        for m in 0..n {
                            let c = alg.c(i, j, m);
                            if !c.is_zero() {
                                r = r.sub(&ops[m].scale(c));
                            }
                        }
                        r
                    })
                    .collect()
            })
            .collect()
    }
}

/// Koszul formula: `Γ^k_{ij} = ½(-c^i_{jk} + c^j_{ki} + c^k_{ij})`.
pub fn levi_civita(g: &MetricLieAlgebra) -> Connection {
    let half = Rational::new(1, 2);
    let mut gamma = zeros3(3);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                gamma[i][j][k] = (-g.c(j, k, i) + g.c(k, i, j) + g.c(i, j, k)) * &half;
            }
        }
    }
    Connection { gamma }
}

/// Flat index of a component of a rank-`p` tensor over a 3-dimensional space.
pub fn flat_index(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * 3 + i)
}

fn multi_index(mut flat: usize, p: usize) -> Vec<usize> {
    let mut idx = vec![0; p];
    for slot in (0..p).rev() {
        idx[slot] = flat % 3;
        flat /= 3;
    }
    idx
}

/// Covariant derivative of a left-invariant `(0,p)` tensor stored flat.
/// The result has rank `p+1`, derivative index first:
/// `(∇_m T)_{i_1..i_p} = -Σ_q Σ_n Γ^n_{m i_q} T_{i_1..n..i_p}`.
pub fn covariant_derivative(conn: &Connection, t: &[Rational], p: usize) -> Vec<Rational> {
    let size = 3usize.pow(p as u32);
    assert_eq!(t.len(), size);
    let mut out = vec![Rational::zero(); 3 * size];
    for (m, block) in out.chunks_mut(size).enumerate() {
        for (f, slot) in block.iter_mut().enumerate() {
            let idx = multi_index(f, p);
            let mut acc = Rational::zero();
            for q in 0..p {
                let mut j = idx.clone();
                for n in 0..3 {
                    let gam = conn.coeff(m, idx[q], n);
                    if gam.is_zero() {
                        continue;
                    }
                    j[q] = n;
                    acc -= gam * &t[flat_index(&j)];
                }
            }
            *slot = acc;
        }
    }
    out
}

/// Full curvature of a metric connection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureData {
    /// `R_{ijkl}` flat in `i, j, k, l` order.
    pub r: Vec<Rational>,
    pub ric: Matrix,
    pub scalar: Rational,
}

#[derive(Serialize, Deserialize)]
struct CurvatureJson {
    #[serde(rename = "R")]
    r: Vec<Rational>,
    ric: Matrix,
    scalar: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    principal_ricci: Option<Vec<Rational>>,
}

impl Serialize for CurvatureData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CurvatureJson {
            r: self.r.clone(),
            ric: self.ric.clone(),
            scalar: self.scalar.clone(),
            principal_ricci: self.principal_ricci(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurvatureData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = CurvatureJson::deserialize(d)?;
        if j.r.len() != 81 {
            return Err(serde::de::Error::custom("R must have 81 entries"));
        }
        Ok(CurvatureData {
            r: j.r,
            ric: j.ric,
            scalar: j.scalar,
        })
    }
}

impl CurvatureData {
    pub fn from_operators(ops: &[Vec<Matrix>]) -> Self {
        let mut r = vec![Rational::zero(); 81];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        r[flat_index(&[i, j, k, l])] = ops[i][j][(k, l)].clone();
                    }
                }
            }
        }
        let mut ric = Matrix::zeros(3, 3);
        for a in 0..3 {
            for b in 0..3 {
                ric[(a, b)] = (0..3).map(|m| &r[flat_index(&[m, b, m, a])]).sum();
            }
        }
        let scalar = ric.trace();
        CurvatureData { r, ric, scalar }
    }

    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.r[flat_index(&[i, j, k, l])]
    }

    /// Sectional curvature of `e_i ∧ e_j`, `i ≠ j`.
    pub fn sectional(&self, i: usize, j: usize) -> &Rational {
        self.r(i, j, i, j)
    }

    /// Diagonal of Ric when the basis diagonalizes it.
    pub fn principal_ricci(&self) -> Option<Vec<Rational>> {
        self.ric.is_diagonal().then(|| self.ric.diag())
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Rational::is_zero)
    }

    /// Pairwise antisymmetry, pair symmetry and first Bianchi identity.
    pub fn has_symmetries(&self) -> bool {
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let v = self.r(i, j, k, l);
                        if *v != -self.r(j, i, k, l) || *v != -self.r(i, j, l, k) || v != self.r(k, l, i, j) {
                            return false;
                        }
                        if !(v + self.r(j, k, i, l) + self.r(k, i, j, l)).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        self.ric.is_symmetric()
    }
}

/// Curvature of `conn` on the algebra of `g`.
pub fn curvature(g: &MetricLieAlgebra, conn: &Connection) -> CurvatureData {
    CurvatureData::from_operators(&conn.curvature_operators(g.algebra()))
}

/// Curvature of the Levi-Civita connection.
pub fn riemann(g: &MetricLieAlgebra) -> CurvatureData {
    curvature(g, &levi_civita(g))
}

/// `(∇_{e_m} R)_{ijkl}`, flat in `m, i, j, k, l` order.
pub fn nabla_r(g: &MetricLieAlgebra, conn: &Connection) -> Vec<Rational> {
    let data = curvature(g, conn);
    covariant_derivative(conn, &data.r, 4)
}

pub fn is_locally_symmetric(g: &MetricLieAlgebra) -> bool {
    nabla_r(g, &levi_civita(g)).iter().all(Rational::is_zero)
}

/// `Some(k)` when `R_{ijkl} = k(δ_ik δ_jl - δ_il δ_jk)`.
pub fn constant_curvature_check(g: &MetricLieAlgebra) -> Option<Rational> {
    let data = riemann(g);
    let k = data.r(0, 1, 0, 1).clone();
    let delta = |a: usize, b: usize| if a == b { Rational::one() } else { Rational::zero() };
    for i in 0..3 {
        for j in 0..3 {
            for a in 0..3 {
                for b in 0..3 {
                    let expected = &k * (delta(i, a) * delta(j, b) - delta(i, b) * delta(j, a));
                    if *data.r(i, j, a, b) != expected {
                        return None;
                    }
                }
            }
        }
    }
    Some(k)
}
