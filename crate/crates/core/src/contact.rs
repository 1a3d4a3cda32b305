//! Left-invariant almost contact metric structures on three-dimensional
//! metric Lie algebras: contact constant, `h = ½ £_ξ φ`, `(κ, μ)` detection,
//! `β`-Sasakian check, and the Boeckx, Tanaka–Webster and Okumura
//! connections written as difference tensors.
//!
//! Exterior derivative of a left-invariant 1-form: `dη(X,Y) = -½ η([X,Y])`.

use serde::{Deserialize, Serialize};

use crate::curvature::{levi_civita, riemann, Connection};
use crate::homstruct::{minus_structure, so2_family, HomStructure};
use crate::lie::{MetricLieAlgebra, NormalForm};
use crate::linalg::{solve_linear, Matrix};
use crate::rational::Rational;
use crate::Error;

/// `(φ, ξ, η)` in the orthonormal basis of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlmostContactStructure {
    pub phi: Matrix,
    pub xi: Vec<Rational>,
    pub eta: Vec<Rational>,
}

impl AlmostContactStructure {
    /// `φ² = -I + η⊗ξ`, `η(ξ) = 1`, `g(φX, φY) = g(X,Y) - η(X)η(Y)`.
    pub fn is_valid(&self) -> bool {
        let n = 3;
        let xi_eta = Matrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| &self.xi[i] * &self.eta[j]).collect())
                .collect(),
        );
        let eta_eta = Matrix::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| &self.eta[i] * &self.eta[j]).collect())
                .collect(),
        );
        let id = Matrix::identity(n);
        let eta_xi: Rational = self.eta.iter().zip(&self.xi).map(|(a, b)| a * b).sum();
        self.phi.mul(&self.phi) == xi_eta.sub(&id)
            && eta_xi.is_one()
            && self.phi.transpose().mul(&self.phi) == id.sub(&eta_eta)
    }

    /// `η ∘ φ = 0` and `φ ξ = 0`.
    pub fn annihilates_reeb(&self) -> bool {
        self.phi.mul_vec(&self.xi).iter().all(Rational::is_zero)
            && self.phi.transpose().mul_vec(&self.eta).iter().all(Rational::is_zero)
    }

    fn eta_of(&self, x: &[Rational]) -> Rational {
        self.eta.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

fn unit(i: usize) -> Vec<Rational> {
    crate::lie::unit(3, i)
}

/// `ξ = e1, φe2 = e3, φe3 = -e2` on unimodular algebras;
/// `ξ = e3, φe1 = e2, φe2 = -e1` on `g(1, β)`.
pub fn standard_acs(g: &MetricLieAlgebra) -> Result<AlmostContactStructure, Error> {
    let z = Rational::zero;
    let one = Rational::one;
    let (phi_cols, xi) = match g.normal_form() {
        NormalForm::Unimodular(_) => (
            vec![vec![z(), z(), z()], vec![z(), z(), one()], vec![z(), -one(), z()]],
            0,
        ),
        NormalForm::NonUnimodular { alpha, .. } if alpha.is_one() => (
            vec![vec![z(), one(), z()], vec![-one(), z(), z()], vec![z(), z(), z()]],
            2,
        ),
        _ => return Err(Error::UnsupportedForm),
    };
    let acs = AlmostContactStructure {
        phi: Matrix::from_columns(&phi_cols),
        xi: unit(xi),
        eta: unit(xi),
    };
    debug_assert!(acs.is_valid());
    Ok(acs)
}

/// `dη(e_i, e_j)`.
pub fn d_eta(g: &MetricLieAlgebra, acs: &AlmostContactStructure, i: usize, j: usize) -> Rational {
    -(acs.eta_of(&g.algebra().bracket_basis(i, j)) * Rational::new(1, 2))
}

/// Nonzero `β` with `dη(X,Y) = β g(X, φY)` for all `X, Y`.
pub fn contact_metric_constant(g: &MetricLieAlgebra, acs: &AlmostContactStructure) -> Option<Rational> {
    // g(e_i, φ e_j) = φ_{ij}
    let (i0, j0) = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .find(|&(i, j)| !acs.phi[(i, j)].is_zero())?;
    let beta = d_eta(g, acs, i0, j0) / &acs.phi[(i0, j0)];
    if beta.is_zero() {
        return None;
    }
    let ok = (0..3).all(|i| (0..3).all(|j| d_eta(g, acs, i, j) == &beta * &acs.phi[(i, j)]));
    ok.then_some(beta)
}

/// `h = ½ £_ξ φ` with `(£_ξ φ)X = [ξ, φX] - φ[ξ, X]`.
pub fn h_tensor(g: &MetricLieAlgebra, acs: &AlmostContactStructure) -> Matrix {
    let alg = g.algebra();
    let half = Rational::new(1, 2);
    let cols: Vec<Vec<Rational>> = (0..3)
        .map(|j| {
            let a = alg.bracket(&acs.xi, &acs.phi.column(j));
            let b = acs.phi.mul_vec(&alg.bracket(&acs.xi, &unit(j)));
            a.iter().zip(&b).map(|(x, y)| (x - y) * &half).collect()
        })
        .collect();
    Matrix::from_columns(&cols)
}

/// `(κ, μ)` with `R(X,Y)ξ = (κI + μh)(η(Y)X - η(X)Y)`; `μ` is `None` when
/// `h = 0` leaves it undetermined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaMu {
    pub kappa: Rational,
    pub mu: Option<Rational>,
}

pub fn kappa_mu(g: &MetricLieAlgebra, acs: &AlmostContactStructure) -> Option<KappaMu> {
    let ops = levi_civita(g).curvature_operators(g.algebra());
    let h = h_tensor(g, acs);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let lhs = ops[i][j].mul_vec(&acs.xi);
            let v: Vec<Rational> = (0..3)
                .map(|k| &acs.eta[j] * &unit(i)[k] - &acs.eta[i] * &unit(j)[k])
                .collect();
            let hv = h.mul_vec(&v);
            for k in 0..3 {
                rows.push(vec![v[k].clone(), hv[k].clone()]);
                rhs.push(lhs[k].clone());
            }
        }
    }
    let sol = solve_linear(&Matrix::from_rows(rows), &rhs).ok()?;
    // κ is always pinned down; μ only when h ≠ 0
    match sol.dim() {
        0 => Some(KappaMu {
            kappa: sol.particular[0].clone(),
            mu: Some(sol.particular[1].clone()),
        }),
        1 if sol.kernel[0][0].is_zero() => Some(KappaMu {
            kappa: sol.particular[0].clone(),
            mu: None,
        }),
        _ => None,
    }
}

/// Nonzero `β` with `(∇_X φ)Y = β(g(X,Y)ξ - η(Y)X)`.
pub fn sasakian_check(g: &MetricLieAlgebra, acs: &AlmostContactStructure) -> Option<Rational> {
    let conn = levi_civita(g);
    let mut beta: Option<Rational> = None;
    let mut pairs = Vec::new();
    for i in 0..3 {
        let nabla_phi = conn.operator(i).commutator(&acs.phi);
        for j in 0..3 {
            let lhs = nabla_phi.column(j);
            let gij = if i == j { Rational::one() } else { Rational::zero() };
            let rhs: Vec<Rational> = (0..3)
                .map(|k| &gij * &acs.xi[k] - &acs.eta[j] * &unit(i)[k])
                .collect();
            pairs.push((lhs, rhs));
        }
    }
    for (lhs, rhs) in &pairs {
        if let Some(k) = rhs.iter().position(|x| !x.is_zero()) {
            beta = Some(&lhs[k] / &rhs[k]);
            break;
        }
    }
    let beta = beta?;
    if beta.is_zero() {
        return None;
    }
    pairs
        .iter()
        .all(|(lhs, rhs)| lhs.iter().zip(rhs).all(|(l, r)| *l == &beta * r))
        .then_some(beta)
}

/// Sectional curvature of the plane orthogonal to `ξ`.
pub fn holomorphic_sectional_curvature(g: &MetricLieAlgebra, acs: &AlmostContactStructure) -> Rational {
    let x = Matrix::from_rows(vec![acs.eta.clone()])
        .null_space()
        .into_iter()
        .next()
        .expect("η is nonzero");
    let y = acs.phi.mul_vec(&x);
    let ops = levi_civita(g).curvature_operators(g.algebra());
    // ⟨R(X,Y)Y, X⟩ by bilinearity
    let mut rxy = Matrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let w = &x[i] * &y[j];
            if !w.is_zero() {
                rxy = rxy.add(&ops[i][j].scale(&w));
            }
        }
    }
    let num: Rational = rxy.mul_vec(&y).iter().zip(&x).map(|(a, b)| a * b).sum();
    let dot = |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(p, q)| p * q).sum() };
    num / (dot(&x, &x) * dot(&y, &y) - dot(&x, &y).pow(2))
}

/// Difference tensor `-g(φ(I+h)X, Y)ξ + c·η(X)φY + η(Y)φ(I+h)X`.
fn contact_tensor(acs: &AlmostContactStructure, h: &Matrix, c: &Rational) -> HomStructure {
    let a = acs.phi.mul(&Matrix::identity(3).add(h));
    let mut s = HomStructure::zero();
    for i in 0..3 {
        let ae_i = a.column(i);
        for j in 0..3 {
            let phi_ej = acs.phi.column(j);
            for k in 0..3 {
                let v = -(&ae_i[j] * &acs.xi[k]) + c * &acs.eta[i] * &phi_ej[k] + &acs.eta[j] * &ae_i[k];
                s.set(i, j, k, v);
            }
        }
    }
    s
}

/// `S^B(X)Y = -g(φ(I+h)X,Y)ξ + (μ/2)η(X)φY + η(Y)φ(I+h)X`.
pub fn boeckx_structure(
    g: &MetricLieAlgebra,
    acs: &AlmostContactStructure,
    mu: &Rational,
) -> Result<HomStructure, Error> {
    let h = h_tensor(g, acs);
    if h.is_zero() {
        return Err(Error::SasakianInput);
    }
    Ok(contact_tensor(acs, &h, &(mu * Rational::new(1, 2))))
}

/// `∇̂_X Y = ∇_X Y - g(φ(I+h)X,Y)ξ + η(X)φY + η(Y)φ(I+h)X`.
pub fn tanaka_webster(g: &MetricLieAlgebra, acs: &AlmostContactStructure) -> Connection {
    let h = h_tensor(g, acs);
    levi_civita(g).plus(contact_tensor(acs, &h, &Rational::one()).tensor())
}

pub fn equal_structures(a: &HomStructure, b: &HomStructure) -> bool {
    a == b
}

pub fn equal_connections(a: &Connection, b: &Connection) -> bool {
    a == b
}

/// Member `r` of the `SO(2)` family of `g(1, β)`, with a flag recording
/// whether `βg(X,Y)ξ - rη(X)φY + βη(Y)φX` reproduces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OkumuraStructure {
    pub structure: HomStructure,
    pub display_matches: bool,
}

pub fn okumura_structure(
    g: &MetricLieAlgebra,
    acs: &AlmostContactStructure,
    r: &Rational,
) -> Result<OkumuraStructure, Error> {
    let structure = so2_family(g)?.member(r);
    let beta = match g.normal_form() {
        NormalForm::NonUnimodular { beta, .. } => beta.clone(),
        _ => unreachable!("so2_family accepted the input"),
    };
    let mut display = HomStructure::zero();
    for i in 0..3 {
        for j in 0..3 {
            let gij = if i == j { Rational::one() } else { Rational::zero() };
            let phi_ej = acs.phi.column(j);
            let phi_ei = acs.phi.column(i);
            for k in 0..3 {
                let v = &beta * &gij * &acs.xi[k] - r * &acs.eta[i] * &phi_ej[k]
                    + &beta * &acs.eta[j] * &phi_ei[k];
                display.set(i, j, k, v);
            }
        }
    }
    Ok(OkumuraStructure {
        display_matches: display == structure,
        structure,
    })
}

/// Contact data of an algebra carrying its standard almost contact structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactReport {
    pub contact_constant: Option<Rational>,
    pub h: Matrix,
    pub kappa: Option<Rational>,
    pub mu: Option<Rational>,
    pub sasakian_beta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holomorphic_sectional_curvature: Option<Rational>,
    pub flat: bool,
    /// `S^B = S⁽⁻⁾`, when `S^B` is defined (non-Sasakian with known `μ`).
    pub boeckx_equals_minus: Option<bool>,
    /// `∇ + S^B` equals the Tanaka–Webster connection.
    pub tw_equals_boeckx: Option<bool>,
}

pub fn contact_report(g: &MetricLieAlgebra) -> Result<ContactReport, Error> {
    let acs = standard_acs(g)?;
    let h = h_tensor(g, &acs);
    let contact_constant = contact_metric_constant(g, &acs);
    // (κ, μ) presupposes a contact metric structure, i.e. contact constant 1
    let km = contact_constant
        .as_ref()
        .filter(|b| b.is_one())
        .and_then(|_| kappa_mu(g, &acs));
    let sasakian_beta = sasakian_check(g, &acs);
    let mu = km.as_ref().and_then(|k| k.mu.clone());
    let boeckx = mu
        .as_ref()
        .filter(|_| !h.is_zero())
        .map(|m| boeckx_structure(g, &acs, m).expect("h is nonzero"));
    let boeckx_equals_minus = boeckx.as_ref().map(|b| equal_structures(b, &minus_structure(g)));
    let tw_equals_boeckx = boeckx
        .as_ref()
        .map(|b| equal_connections(&levi_civita(g).plus(b.tensor()), &tanaka_webster(g, &acs)));
    Ok(ContactReport {
        contact_constant,
        holomorphic_sectional_curvature: sasakian_beta
            .as_ref()
            .map(|_| holomorphic_sectional_curvature(g, &acs)),
        h,
        kappa: km.map(|k| k.kappa),
        mu,
        sasakian_beta,
        flat: riemann(g).is_zero(),
        boeckx_equals_minus,
        tw_equals_boeckx,
    })
}
