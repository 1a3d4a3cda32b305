//! Seeded samplers and a Buchberger-based oracle shared by the integration
//! tests.

#![allow(dead_code)]

pub mod closed_form;
pub mod elimination;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use homog3_core::{levi_civita, riemann, HomStructure, MetricLieAlgebra, Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ num`, `1 ≤ q ≤ den`.
pub fn rand_q(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn rand_nonneg_q(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(0..=num), rng.gen_range(1..=den))
}

pub fn rand_unimodular(rng: &mut impl Rng) -> MetricLieAlgebra {
    MetricLieAlgebra::unimodular(rand_q(rng, 9, 4), rand_q(rng, 9, 4), rand_q(rng, 9, 4))
}

pub fn rand_nonunimodular(rng: &mut impl Rng) -> MetricLieAlgebra {
    MetricLieAlgebra::nonunimodular(rand_nonneg_q(rng, 9, 4), rand_nonneg_q(rng, 9, 4)).unwrap()
}

/// Random metrical tensor: `S_{ijk} = -S_{ikj}`.
pub fn rand_metrical(rng: &mut impl Rng) -> HomStructure {
    let mut s = HomStructure::zero();
    for i in 0..3 {
        for (j, k) in PAIRS {
            s.set_skew(i, j, k, rand_q(rng, 6, 3));
        }
    }
    s
}

/// Skew pairs `(j, k)`, `j < k`, indexing the nine metrical unknowns
/// `x_{3i + p} = S_{i j k}`.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub fn structure_from_unknowns(x: &[Rational]) -> HomStructure {
    let mut s = HomStructure::zero();
    for i in 0..3 {
        for (p, &(j, k)) in PAIRS.iter().enumerate() {
            s.set_skew(i, j, k, x[3 * i + p].clone());
        }
    }
    s
}

pub fn unknowns_of(s: &HomStructure) -> Vec<Rational> {
    (0..3)
        .flat_map(|i| PAIRS.iter().map(move |&(j, k)| s.get(i, j, k).clone()))
        .collect()
}

/// `S_{ijk}` as a polynomial in the nine unknowns.
fn s_poly(i: usize, j: usize, k: usize) -> Poly {
    if j == k {
        return Poly::zero(9);
    }
    let (a, b, sign) = if j < k { (j, k, 1) } else { (k, j, -1) };
    let p = PAIRS.iter().position(|&x| x == (a, b)).unwrap();
    Poly::var(9, 3 * i + p).scale(&Rational::from_int(sign))
}

/// `Γ̃^n_{m a}` (the `e_n` coefficient of `∇̃_{e_m} e_a`) as a polynomial.
fn gamma_tilde(g: &MetricLieAlgebra, m: usize, a: usize, n: usize) -> Poly {
    let lc = levi_civita(g);
    Poly::constant(9, lc.coeff(m, a, n).clone()).add(&s_poly(m, a, n))
}

/// `(∇̃_m T)` for a tensor with polynomial entries, flat row-major index.
fn nabla_tilde(g: &MetricLieAlgebra, t: &[Poly], rank: usize, m: usize) -> Vec<Poly> {
    let size = 3usize.pow(rank as u32);
    let gt: Vec<Vec<Poly>> = (0..3)
        .map(|a| (0..3).map(|n| gamma_tilde(g, m, a, n)).collect())
        .collect();
    (0..size)
        .map(|f| {
            let idx = unflatten(f, rank);
            let mut acc = Poly::zero(9);
            for q in 0..rank {
                for n in 0..3 {
                    let mut jdx = idx.clone();
                    jdx[q] = n;
                    acc = acc.sub(&gt[idx[q]][n].mul(&t[flatten(&jdx)]));
                }
            }
            acc
        })
        .collect()
}

fn flatten(idx: &[usize]) -> usize {
    idx.iter().fold(0, |a, &i| 3 * a + i)
}

fn unflatten(mut f: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for slot in (0..rank).rev() {
        idx[slot] = f % 3;
        f /= 3;
    }
    idx
}

/// `∇̃Ric = 0`, `∇̃R = 0`, `∇̃S = 0` written out in the nine unknowns.
pub fn ambrose_singer_system(g: &MetricLieAlgebra) -> Vec<Poly> {
    let data = riemann(g);
    let ric: Vec<Poly> = (0..9)
        .map(|f| Poly::constant(9, data.ric[(f / 3, f % 3)].clone()))
        .collect();
    let r: Vec<Poly> = (0..81)
        .map(|f| {
            let i = unflatten(f, 4);
            Poly::constant(9, data.r(i[0], i[1], i[2], i[3]).clone())
        })
        .collect();
    let s: Vec<Poly> = (0..27)
        .map(|f| {
            let i = unflatten(f, 3);
            s_poly(i[0], i[1], i[2])
        })
        .collect();
    let mut out = Vec::new();
    for m in 0..3 {
        out.extend(nabla_tilde(g, &ric, 2, m));
        out.extend(nabla_tilde(g, &r, 4, m));
        out.extend(nabla_tilde(g, &s, 3, m));
    }
    out.retain(|p| !p.is_zero());
    out
}

/// Monomial under graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono(pub Vec<u32>);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let da: u32 = self.0.iter().sum();
        let db: u32 = other.0.iter().sum();
        da.cmp(&db).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mono {
    fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, by: &Mono) -> Mono {
        Mono(self.0.iter().zip(&by.0).map(|(a, b)| a - b).collect())
    }

    fn lcm(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn times(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Polynomial with terms kept in grevlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly(pub BTreeMap<Mono, Rational>);

impl MPoly {
    pub fn from_poly(p: &Poly) -> MPoly {
        MPoly(p.terms().map(|(e, c)| (Mono(e.to_vec()), c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.0.last_key_value()
    }

    /// `self - c·x^m·g`.
    fn sub_scaled(&mut self, c: &Rational, m: &Mono, g: &MPoly) {
        for (e, v) in &g.0 {
            let key = e.times(m);
            let entry = self.0.entry(key.clone()).or_insert_with(Rational::zero);
            *entry -= c * v;
            if entry.is_zero() {
                self.0.remove(&key);
            }
        }
    }

    fn monic(mut self) -> MPoly {
        if let Some((_, c)) = self.leading() {
            let inv = c.recip();
            for v in self.0.values_mut() {
                *v = &*v * &inv;
            }
        }
        self
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly(BTreeMap::new());
        for (a, x) in &self.0 {
            let neg = MPoly(other.0.iter().map(|(b, y)| (b.clone(), -(x * y))).collect());
            out.sub_scaled(&Rational::one(), a, &neg);
        }
        out
    }
}

/// Remainder of `f` on division by `basis`.
pub fn reduce(f: &MPoly, basis: &[MPoly]) -> MPoly {
    let mut p = f.clone();
    let mut r = MPoly(BTreeMap::new());
    while let Some((lm, lc)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find(|g| g.leading().unwrap().0.divides(&lm));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                let q = lm.quotient(gm);
                p.sub_scaled(&(&lc / gc), &q, g);
            }
            None => {
                p.0.remove(&lm);
                r.0.insert(lm, lc);
            }
        }
    }
    r
}

fn s_polynomial(f: &MPoly, g: &MPoly) -> MPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let mut out = MPoly(BTreeMap::new());
    out.sub_scaled(&-fc.recip(), &l.quotient(fm), f);
    out.sub_scaled(&gc.recip(), &l.quotient(gm), g);
    out
}

/// Reduced Gröbner basis by Buchberger's algorithm with the coprime
/// leading-monomial criterion.
pub fn groebner(input: &[Poly]) -> Vec<MPoly> {
    let mut basis: Vec<MPoly> = Vec::new();
    for p in input {
        let r = reduce(&MPoly::from_poly(p), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (a, b) = (basis[i].leading().unwrap().0, basis[j].leading().unwrap().0);
        if a.coprime(b) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimal, then reduced
    let mut minimal: Vec<MPoly> = Vec::new();
    for (n, g) in basis.iter().enumerate() {
        let lm = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(m, h)| {
            let hm = h.leading().unwrap().0;
            m != n && hm.divides(lm) && (hm != lm || m < n)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::new();
    for n in 0..minimal.len() {
        let others: Vec<MPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != n)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = minimal[n].leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = minimal[n].clone();
        tail.0.remove(&lm);
        let mut r = reduce(&tail, &others);
        r.0.insert(lm, lc);
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// Whether some power `h^m`, `m ≤ max_power`, lies in the ideal.
pub fn in_radical(h: &MPoly, basis: &[MPoly], max_power: u32) -> bool {
    let mut pow = h.clone();
    for _ in 0..max_power {
        if reduce(&pow, basis).is_zero() {
            return true;
        }
        pow = pow.mul(h);
    }
    false
}

/// Linear polynomial `x_v - a` in `n` unknowns.
pub fn coordinate_minus(n: usize, v: usize, a: &Rational) -> MPoly {
    MPoly::from_poly(&Poly::var(n, v).sub(&Poly::constant(n, a.clone())))
}

/// Linear equations cutting out the line `base + t·dir`: for a pivot
/// `p` with `dir_p ≠ 0`, `dir_p (x_v - base_v) - dir_v (x_p - base_p)`.
pub fn line_equations(base: &[Rational], dir: &[Rational]) -> Vec<MPoly> {
    let n = base.len();
    let p = dir.iter().position(|d| !d.is_zero()).expect("nonzero direction");
    (0..n)
        .filter(|&v| v != p)
        .map(|v| {
            let mut coeffs = vec![Rational::zero(); n];
            coeffs[v] = dir[p].clone();
            coeffs[p] = -dir[v].clone();
            let constant = -(&dir[p] * &base[v]) + &dir[v] * &base[p];
            MPoly::from_poly(&Poly::linear(&coeffs, constant))
        })
        .collect()
}

/// Ideal equations of a single point.
pub fn point_equations(x: &[Rational]) -> Vec<MPoly> {
    (0..x.len()).map(|v| coordinate_minus(x.len(), v, &x[v])).collect()
}

/// Affine space of metrical `S` (in the nine unknowns) with `∇̃Ric = 0`.
pub fn ricci_parallel_space(g: &MetricLieAlgebra) -> homog3_core::AffineSpace {
    let data = riemann(g);
    let ric: Vec<Poly> = (0..9)
        .map(|f| Poly::constant(9, data.ric[(f / 3, f % 3)].clone()))
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for m in 0..3 {
        for p in nabla_tilde(g, &ric, 2, m) {
            let (coeffs, constant) = p.as_linear().expect("∇̃Ric is affine in S");
            rows.push(coeffs);
            rhs.push(-constant);
        }
    }
    homog3_core::solve_linear(&homog3_core::Matrix::from_rows(rows), &rhs)
        .expect("S⁽⁻⁾ always makes Ric parallel")
}

/// Random point of an affine space.
pub fn rand_point(rng: &mut impl Rng, space: &homog3_core::AffineSpace) -> Vec<Rational> {
    let mut x = space.particular.clone();
    for k in &space.kernel {
        let t = rand_q(rng, 5, 3);
        for (xi, ki) in x.iter_mut().zip(k) {
            *xi += &t * ki;
        }
    }
    x
}
