//! Closed-form Levi-Civita connection, curvature and Ricci tables for both
//! normal forms.

use homog3_core::{levi_civita, riemann, Matrix, MetricLieAlgebra, NormalForm, Rational};

/// `∇_{e_i} e_j` tables and the `A_{ij}` with `R(e_i,e_j)e_i = A_{ij} e_j`.
pub struct ClosedForm {
    pub nabla: [[[Rational; 3]; 3]; 3],
    pub a12: Rational,
    pub a13: Rational,
    pub a23: Rational,
    pub rho: [Rational; 3],
}

fn z() -> Rational {
    Rational::zero()
}

fn v(x: Rational, y: Rational, w: Rational) -> [Rational; 3] {
    [x, y, w]
}

pub fn unimodular_closed_form(c: &[Rational; 3]) -> ClosedForm {
    let half = Rational::new(1, 2);
    let s = (&c[0] + &c[1] + &c[2]) * &half;
    let mu = [&s - &c[0], &s - &c[1], &s - &c[2]];
    let two = Rational::from_int(2);
    ClosedForm {
        nabla: [
            [v(z(), z(), z()), v(z(), z(), mu[0].clone()), v(z(), -&mu[0], z())],
            [v(z(), z(), -&mu[1]), v(z(), z(), z()), v(mu[1].clone(), z(), z())],
            [v(z(), mu[2].clone(), z()), v(-&mu[2], z(), z()), v(z(), z(), z())],
        ],
        a12: &mu[0] * &mu[1] - &c[2] * &mu[2],
        a23: &mu[1] * &mu[2] - &c[0] * &mu[0],
        a13: &mu[2] * &mu[0] - &c[1] * &mu[1],
        rho: [
            &two * &mu[1] * &mu[2],
            &two * &mu[0] * &mu[2],
            &two * &mu[0] * &mu[1],
        ],
    }
}

pub fn nonunimodular_closed_form(a: &Rational, b: &Rational) -> ClosedForm {
    let one = Rational::one();
    let two = Rational::from_int(2);
    let p = &one + a;
    let m = &one - a;
    let ab = a * b;
    let ab2 = &ab * b;
    let bb = &one + b * b;
    ClosedForm {
        nabla: [
            [v(z(), z(), z()), v(z(), z(), b.clone()), v(z(), -b, z())],
            [v(z(), -&p, -&ab), v(p.clone(), z(), z()), v(ab.clone(), z(), z())],
            [v(z(), -&ab, -&m), v(ab.clone(), z(), z()), v(m.clone(), z(), z())],
        ],
        a12: &ab2 + &p * &p + &ab2 * &p,
        a13: -(&ab2 - &m * &m + &ab2 * &m),
        a23: &one - a * a * &bb,
        rho: [
            -(&two * (&one + a * a * &bb)),
            -(&two * (&one + a * &bb)),
            -(&two * (&one - a * &bb)),
        ],
    }
}

pub fn closed_form(g: &MetricLieAlgebra) -> ClosedForm {
    match g.normal_form() {
        NormalForm::Unimodular(c) => unimodular_closed_form(c),
        NormalForm::NonUnimodular { alpha, beta } => nonunimodular_closed_form(alpha, beta),
        NormalForm::Generic => panic!("closed forms exist only for normal forms"),
    }
}

/// Curvature operators `R(e_i,e_j)` assembled from the closed form:
/// `R(e_i,e_j)e_i = A e_j`, `R(e_i,e_j)e_j = -A e_i`, third vector killed.
fn closed_operators(cf: &ClosedForm) -> Vec<Vec<Matrix>> {
    let mut ops = vec![vec![Matrix::zeros(3, 3); 3]; 3];
    for (i, j, a) in [(0, 1, &cf.a12), (0, 2, &cf.a13), (1, 2, &cf.a23)] {
        let mut m = Matrix::zeros(3, 3);
        m[(j, i)] = a.clone();
        m[(i, j)] = -a;
        ops[j][i] = m.scale(&-Rational::one());
        ops[i][j] = m;
    }
    ops
}

pub fn check(g: &MetricLieAlgebra) -> Result<(), String> {
    let cf = closed_form(g);
    let lc = levi_civita(g);
    for i in 0..3 {
        for j in 0..3 {
            if lc.nabla(i, j) != cf.nabla[i][j].to_vec() {
                return Err(format!("{g:?}: nabla_{}{} mismatch", i + 1, j + 1));
            }
        }
    }
    let data = riemann(g);
    let ops = closed_operators(&cf);
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    if *data.r(i, j, k, l) != ops[i][j][(k, l)] {
                        return Err(format!("{g:?}: R_{}{}{}{} mismatch", i + 1, j + 1, k + 1, l + 1));
                    }
                }
            }
        }
    }
    if data.ric != Matrix::diagonal(&cf.rho) {
        return Err(format!("{g:?}: Ricci mismatch"));
    }
    let scalar: Rational = cf.rho.iter().sum();
    if data.scalar != scalar {
        return Err(format!("{g:?}: scalar mismatch"));
    }
    Ok(())
}

