//! Comparison of the solver with a full nine-unknown elimination.

use super::{ambrose_singer_system, groebner, in_radical, line_equations, point_equations, unknowns_of, MPoly};
use homog3_core::{solve_left_invariant, MetricLieAlgebra, Rational};

/// Whether the solver's points and lines are exactly the zero set of the
/// full system: every listed component satisfies the system, and every
/// product of one defining equation per component lies in its radical.
pub fn solver_matches_elimination(g: &MetricLieAlgebra) -> Result<(), String> {
    let system = ambrose_singer_system(g);
    let basis = groebner(&system);
    let outcome = solve_left_invariant(g).map_err(|e| e.to_string())?;
    let mut components: Vec<Vec<MPoly>> = Vec::new();
    for s in outcome.structures() {
        let x = unknowns_of(s);
        if system.iter().any(|p| !p.eval(&x).is_zero()) {
            return Err("solver point violates the system".into());
        }
        components.push(point_equations(&x));
    }
    for fam in outcome.families() {
        let base = unknowns_of(&fam.base);
        let dir = unknowns_of(&fam.direction);
        // the system is quadratic, so vanishing at three parameters is identical vanishing
        for t in [-1, 0, 1] {
            let x: Vec<Rational> = base.iter().zip(&dir).map(|(b, d)| b + Rational::from_int(t) * d).collect();
            if system.iter().any(|p| !p.eval(&x).is_zero()) {
                return Err("solver family violates the system".into());
            }
        }
        components.push(line_equations(&base, &dir));
    }
    if components.is_empty() {
        let one_in_ideal = basis.len() == 1 && basis[0].0.len() == 1 && basis[0].0.keys().all(|m| m.0.iter().all(|&e| e == 0));
        return if one_in_ideal {
            Ok(())
        } else {
            Err("solver found nothing but the system is consistent".into())
        };
    }
    if covers(&basis, &components) {
        Ok(())
    } else {
        Err("elimination leaves solutions the solver misses".into())
    }
}

/// `V(basis) ⊆ ∪ V(component)`: each product of one generator per
/// component vanishes on `V(basis)`.
pub fn covers(basis: &[MPoly], components: &[Vec<MPoly>]) -> bool {
    let mut products: Vec<MPoly> = components[0].clone();
    for comp in &components[1..] {
        products = products
            .iter()
            .flat_map(|a| comp.iter().map(move |b| a.mul(b)))
            .collect();
    }
    products.iter().all(|h| in_radical(h, basis, 4))
}

