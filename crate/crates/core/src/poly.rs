//! Polynomials over the rationals and the small quadratic-system solver.
//!
//! [`solve_quadratic_small`] handles systems of total degree at most two in a
//! handful of unknowns by structured elimination: linear equations are
//! substituted away, semidefinite quadrics are split into sums of squares,
//! and quadrics that factor over the rationals are branched on. Anything left
//! over is reported verbatim in [`SolutionSet::unresolved`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{inertia, solve_linear, AffineSpace, Matrix};
use crate::rational::Rational;

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = &r[top] / &lead;
            let shift = top - dd;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Sparse multivariate polynomial in `nvars` unknowns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// `Σ coeffs[i]·x_i + constant`.
    pub fn linear(coeffs: &[Rational], constant: Rational) -> Self {
        let n = coeffs.len();
        let mut p = Poly::constant(n, constant);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars])
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.nvars, Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * xi.pow(k))
            })
            .sum()
    }

    /// Substitutes `x_i ↦ subs[i]`; the result lives in the unknowns of `subs`.
    pub fn compose(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars);
        let m = subs.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(m);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(m, c.clone());
            for (k, s) in e.iter().zip(subs) {
                if *k > 0 {
                    term = term.mul(&s.pow(*k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Linear coefficients and constant of a polynomial of degree ≤ 1.
    pub fn as_linear(&self) -> Option<(Vec<Rational>, Rational)> {
        if self.degree().unwrap_or(0) > 1 {
            return None;
        }
        let coeffs = (0..self.nvars)
            .map(|i| {
                let mut e = vec![0; self.nvars];
                e[i] = 1;
                self.coefficient(&e)
            })
            .collect();
        Some((coeffs, self.constant_term()))
    }

    /// Homogenized symmetric matrix of a degree ≤ 2 polynomial; the last
    /// index stands for the constant 1.
    pub fn homogenized_matrix(&self) -> Option<Matrix> {
        if self.degree().unwrap_or(0) > 2 {
            return None;
        }
        let n = self.nvars;
        let mut h = Matrix::zeros(n + 1, n + 1);
        let half = Rational::new(1, 2);
        for (e, c) in &self.terms {
            let idx: Vec<usize> = e
                .iter()
                .enumerate()
                .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
                .collect();
            match idx.as_slice() {
                [] => h[(n, n)] += c,
                [i] => {
                    h[(*i, n)] += c * &half;
                    h[(n, *i)] += c * &half;
                }
                [i, j] if i == j => h[(*i, *i)] += c,
                [i, j] => {
                    h[(*i, *j)] += c * &half;
                    h[(*j, *i)] += c * &half;
                }
                _ => unreachable!(),
            }
        }
        Some(h)
    }

    fn to_unipoly(&self) -> UniPoly {
        assert_eq!(self.nvars, 1);
        let deg = self.degree().unwrap_or(0) as usize;
        UniPoly::new((0..=deg).map(|k| self.coefficient(&[k as u32])).collect())
    }

    /// Part of the polynomial that is exactly linear in `x_i`, divided by `x_i`.
    fn linear_coefficient_in(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 1 {
                let mut e2 = e.clone();
                e2[i] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    fn without_var(&self, i: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == 0)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn square_coefficient(&self, i: usize) -> Rational {
        let mut e = vec![0; self.nvars];
        e[i] = 2;
        self.coefficient(&e)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first, then by variable order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            let sign = match (k, neg) {
                (0, true) => "-".to_string(),
                (0, false) => String::new(),
                (_, true) => " - ".to_string(),
                (_, false) => " + ".to_string(),
            };
            let body = if monomial.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                monomial.join("*")
            } else {
                format!("{}*{}", abs, monomial.join("*"))
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An affine line `base + t·direction` with `direction ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineLine {
    pub base: Vec<Rational>,
    pub direction: Vec<Rational>,
}

impl AffineLine {
    /// Direction scaled so its first nonzero entry is 1, base moved so that
    /// coordinate is 0. Two lines are equal as sets iff their canonical forms match.
    pub fn canonical(&self) -> AffineLine {
        let pivot = self
            .direction
            .iter()
            .position(|d| !d.is_zero())
            .expect("line with zero direction");
        let inv = self.direction[pivot].recip();
        let direction: Vec<Rational> = self.direction.iter().map(|d| d * &inv).collect();
        let shift = self.base[pivot].clone();
        let base = self
            .base
            .iter()
            .zip(&direction)
            .map(|(b, d)| b - &(&shift * d))
            .collect();
        AffineLine { base, direction }
    }

    pub fn point_at(&self, t: &Rational) -> Vec<Rational> {
        self.base
            .iter()
            .zip(&self.direction)
            .map(|(b, d)| b + &(t * d))
            .collect()
    }

    /// Parameter of `p` on the line, if `p` lies on it.
    pub fn parameter_of(&self, p: &[Rational]) -> Option<Rational> {
        let pivot = self.direction.iter().position(|d| !d.is_zero())?;
        let t = (&p[pivot] - &self.base[pivot]) / &self.direction[pivot];
        (self.point_at(&t) == p).then_some(t)
    }
}

/// Rational points and rational affine lines of a polynomial system, plus
/// any component the solver could not parametrize.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolutionSet {
    pub points: Vec<Vec<Rational>>,
    pub lines: Vec<AffineLine>,
    /// One entry per unresolved component, each a list of defining polynomials
    /// in the original unknowns.
    pub unresolved: Vec<Vec<Poly>>,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.lines.is_empty() && self.unresolved.is_empty()
    }

    fn normalize(&mut self) {
        let mut lines: Vec<AffineLine> = Vec::new();
        for l in self.lines.drain(..).map(|l| l.canonical()) {
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
        let mut points: Vec<Vec<Rational>> = Vec::new();
        for p in self.points.drain(..) {
            if !points.contains(&p) && lines.iter().all(|l| l.parameter_of(&p).is_none()) {
                points.push(p);
            }
        }
        points.sort();
        lines.sort_by(|a, b| (&a.direction, &a.base).cmp(&(&b.direction, &b.base)));
        self.points = points;
        self.lines = lines;
    }
}

enum SquareSplit {
    /// The quadric has no real zeros.
    Empty,
    /// The quadric vanishes exactly where all of these affine forms vanish.
    Linear(Vec<Poly>),
}

/// Sum-of-squares split of a semidefinite quadric.
fn split_squares(q: &Poly) -> Option<SquareSplit> {
    let h = q.homogenized_matrix()?;
    let n = q.nvars();
    let mut quad = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            quad[(i, j)] = h[(i, j)].clone();
        }
    }
    let sig = inertia(&quad).ok()?;
    if sig.plus > 0 && sig.minus > 0 || sig.plus + sig.minus == 0 {
        return None;
    }
    let mut rest = if sig.minus > 0 {
        q.scale(&-Rational::one())
    } else {
        q.clone()
    };
    let mut squares = Vec::new();
    while let Some(j) = (0..n).find(|&j| rest.square_coefficient(j).is_positive()) {
        let a = rest.square_coefficient(j);
        let l = rest.linear_coefficient_in(j).without_var(j);
        let form = Poly::var(n, j).add(&l.scale(&(&a * Rational::from_int(2)).recip()));
        rest = rest.sub(&form.mul(&form).scale(&a));
        squares.push(form);
    }
    match rest.degree() {
        None => Some(SquareSplit::Linear(squares)),
        Some(0) => {
            let c = rest.constant_term();
            c.is_positive().then_some(SquareSplit::Empty)
        }
        _ => None,
    }
}

/// Affine `ℓ` with `ℓ² = d`, if one exists over the rationals.
fn exact_square_root(d: &Poly) -> Option<Poly> {
    if d.is_zero() {
        return Some(Poly::zero(d.nvars()));
    }
    let h = d.homogenized_matrix()?;
    let n = d.nvars();
    let i = (0..=n).find(|&i| h[(i, i)].is_positive())?;
    let s = h[(i, i)].sqrt_exact()?;
    let inv = s.recip();
    let coeffs: Vec<Rational> = (0..n).map(|k| &h[(i, k)] * &inv).collect();
    let l = Poly::linear(&coeffs, &h[(i, n)] * &inv);
    (l.mul(&l) == *d).then_some(l)
}

/// Splits `q` into two affine factors over the rationals.
fn factor_quadric(q: &Poly) -> Option<(Poly, Poly)> {
    if q.degree() != Some(2) {
        return None;
    }
    let n = q.nvars();
    if let Some(x) = (0..n).find(|&i| !q.square_coefficient(i).is_zero()) {
        // q = a x² + B x + C
        let a = q.square_coefficient(x);
        let b = q.linear_coefficient_in(x).without_var(x);
        let c = q.without_var(x);
        let four_a = &a * Rational::from_int(4);
        let disc = b.mul(&b).sub(&c.scale(&four_a));
        let root = exact_square_root(&disc)?;
        let two_a_inv = (&a * Rational::from_int(2)).recip();
        let xv = Poly::var(n, x);
        // x - (-B ± ℓ)/(2a)
        let l1 = xv.add(&b.sub(&root).scale(&two_a_inv));
        let l2 = xv.add(&b.add(&root).scale(&two_a_inv));
        debug_assert_eq!(l1.mul(&l2).scale(&a), *q);
        return Some((l1, l2));
    }
    // No pure squares: shear x ↦ x + y along a mixed term to create one.
    let (x, y) = q.terms().find_map(|(e, _)| {
        let idx: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        (idx.len() == 2).then(|| (idx[0], idx[1]))
    })?;
    let shear = |sign: i64| -> Vec<Poly> {
        (0..n)
            .map(|i| {
                if i == x {
                    Poly::var(n, x).add(&Poly::var(n, y).scale(&Rational::from_int(sign)))
                } else {
                    Poly::var(n, i)
                }
            })
            .collect()
    };
    let sheared = q.compose(&shear(1));
    let (l1, l2) = factor_quadric(&sheared)?;
    let back = shear(-1);
    Some((l1.compose(&back), l2.compose(&back)))
}

struct Frame {
    space: AffineSpace,
    polys: Vec<Poly>,
}

fn identity_space(n: usize) -> AffineSpace {
    AffineSpace {
        particular: vec![Rational::zero(); n],
        kernel: (0..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); n];
                v[i] = Rational::one();
                v
            })
            .collect(),
    }
}

/// Restricts the frame to the common zeros of its linear equations.
/// Returns `false` if the system became inconsistent.
fn absorb_linear(frame: &mut Frame) -> bool {
    loop {
        frame.polys.retain(|p| !p.is_zero());
        if frame.polys.iter().any(|p| p.degree() == Some(0)) {
            return false;
        }
        let linear: Vec<(Vec<Rational>, Rational)> =
            frame.polys.iter().filter_map(Poly::as_linear).collect();
        if linear.is_empty() {
            return true;
        }
        let f = frame.space.dim();
        let a = Matrix::from_rows(linear.iter().map(|(c, _)| c.clone()).collect());
        let rhs: Vec<Rational> = linear.iter().map(|(_, c)| -c).collect();
        let sub = match solve_linear(&a, &rhs) {
            Ok(s) => s,
            Err(_) => return false,
        };
        // t = sub.particular + Σ s_i sub.kernel_i
        let m = sub.dim();
        let subs: Vec<Poly> = (0..f)
            .map(|j| {
                let coeffs: Vec<Rational> = sub.kernel.iter().map(|k| k[j].clone()).collect();
                Poly::linear(&coeffs, sub.particular[j].clone())
            })
            .collect();
        let particular = frame.space.point(&sub.particular);
        let kernel = sub
            .kernel
            .iter()
            .map(|w| {
                let mut v = vec![Rational::zero(); frame.space.ambient_dim()];
                for (wj, kj) in w.iter().zip(&frame.space.kernel) {
                    for (vi, ki) in v.iter_mut().zip(kj) {
                        *vi += wj * ki;
                    }
                }
                v
            })
            .collect();
        frame.polys = frame
            .polys
            .iter()
            .filter(|p| p.degree().unwrap_or(0) > 1)
            .map(|p| {
                if f == 0 {
                    p.clone()
                } else if m == 0 {
                    Poly::constant(0, p.eval(&sub.particular))
                } else {
                    p.compose(&subs)
                }
            })
            .collect();
        frame.space = AffineSpace { particular, kernel };
    }
}

/// Expresses the frame's remaining equations in the original unknowns,
/// together with the linear equations cutting out its affine space.
fn describe_in_original(frame: &Frame) -> Vec<Poly> {
    let space = &frame.space;
    let n = space.ambient_dim();
    let f = space.dim();
    let mut out = Vec::new();
    if f < n {
        let k = Matrix::from_columns(&space.kernel).transpose();
        let normals = if f == 0 {
            identity_space(n).kernel
        } else {
            k.null_space()
        };
        for nv in normals {
            let c: Rational = nv.iter().zip(&space.particular).map(|(a, b)| a * b).sum();
            out.push(Poly::linear(&nv, -c));
        }
    }
    if f == 0 {
        return out;
    }
    // t = K_I^{-1}(x_I - p_I) on a set I of pivot coordinates
    let kt = Matrix::from_columns(&space.kernel).transpose();
    let (_, pivots) = kt.rref();
    let ki = Matrix::from_rows(
        pivots
            .iter()
            .map(|&r| space.kernel.iter().map(|k| k[r].clone()).collect())
            .collect(),
    );
    let inv = ki.inverse().expect("pivot block is invertible");
    let subs: Vec<Poly> = (0..f)
        .map(|t| {
            let mut p = Poly::zero(n);
            for (col, &r) in pivots.iter().enumerate() {
                let coef = &inv[(t, col)];
                p = p.add(&Poly::var(n, r).scale(coef));
                p = p.add(&Poly::constant(n, -(coef * &space.particular[r])));
            }
            p
        })
        .collect();
    out.extend(frame.polys.iter().map(|p| p.compose(&subs)));
    out
}

fn solve_frame(mut frame: Frame, out: &mut SolutionSet, depth: usize) {
    if !absorb_linear(&mut frame) {
        return;
    }
    let f = frame.space.dim();
    if frame.polys.is_empty() {
        match f {
            0 => out.points.push(frame.space.particular.clone()),
            1 => out.lines.push(AffineLine {
                base: frame.space.particular.clone(),
                direction: frame.space.kernel[0].clone(),
            }),
            _ => out.unresolved.push(describe_in_original(&frame)),
        }
        return;
    }
    if f == 1 {
        let g = frame
            .polys
            .iter()
            .map(Poly::to_unipoly)
            .reduce(|a, b| a.gcd(&b))
            .expect("nonempty");
        let point = |t: Rational| frame.space.point(&[t]);
        match g.degree() {
            Some(0) | None => {}
            Some(1) => {
                let c = g.coefficients();
                out.points.push(point(-(&c[0] / &c[1])));
            }
            Some(2) => {
                let c = g.coefficients();
                let disc = &c[1] * &c[1] - Rational::from_int(4) * &c[0] * &c[2];
                if disc.is_negative() {
                    return;
                }
                match disc.sqrt_exact() {
                    Some(s) => {
                        let two_a = &c[2] * Rational::from_int(2);
                        out.points.push(point((-&c[1] + &s) / &two_a));
                        out.points.push(point((-&c[1] - &s) / &two_a));
                    }
                    None => {
                        frame.polys = vec![poly_from_unipoly(&g)];
                        out.unresolved.push(describe_in_original(&frame));
                    }
                }
            }
            _ => {
                frame.polys = vec![poly_from_unipoly(&g)];
                out.unresolved.push(describe_in_original(&frame));
            }
        }
        return;
    }
    if depth > 16 {
        out.unresolved.push(describe_in_original(&frame));
        return;
    }
    for (i, p) in frame.polys.iter().enumerate() {
        match split_squares(p) {
            Some(SquareSplit::Empty) => return,
            Some(SquareSplit::Linear(forms)) => {
                let mut polys = frame.polys.clone();
                polys.remove(i);
                polys.extend(forms);
                return solve_frame(
                    Frame {
                        space: frame.space,
                        polys,
                    },
                    out,
                    depth + 1,
                );
            }
            None => {}
        }
    }
    for p in &frame.polys {
        if let Some((l1, l2)) = factor_quadric(p) {
            for l in [l1, l2] {
                let mut polys = frame.polys.clone();
                polys.push(l);
                solve_frame(
                    Frame {
                        space: frame.space.clone(),
                        polys,
                    },
                    out,
                    depth + 1,
                );
            }
            return;
        }
    }
    out.unresolved.push(describe_in_original(&frame));
}

fn poly_from_unipoly(u: &UniPoly) -> Poly {
    let mut p = Poly::zero(1);
    for (k, c) in u.coefficients().iter().enumerate() {
        p.add_term(vec![k as u32], c.clone());
    }
    p
}

/// Rational points and lines of a system of polynomials of degree ≤ 2.
///
/// Every reported point and every point of every reported line satisfies
/// all equations exactly. Components that are neither (a conic, a plane, a
/// pair of conjugate irrational points) are returned in `unresolved`.
pub fn solve_quadratic_small(polys: &[Poly]) -> SolutionSet {
    let n = polys.first().map_or(0, Poly::nvars);
    assert!(polys.iter().all(|p| p.nvars() == n), "mixed variable counts");
    let mut out = SolutionSet::default();
    if polys.iter().any(|p| p.degree().unwrap_or(0) > 2) {
        out.unresolved.push(polys.to_vec());
        return out;
    }
    let frame = Frame {
        space: identity_space(n),
        polys: polys.to_vec(),
    };
    solve_frame(frame, &mut out, 0);
    out.normalize();
    out
}

/// Checks whether `x` is a common zero.
pub fn satisfies(polys: &[Poly], x: &[Rational]) -> bool {
    polys.iter().all(|p| p.eval(x).is_zero())
}
