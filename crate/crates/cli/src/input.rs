//! Algebra and structure inputs from files or inline flags.

use std::fs;
use std::path::Path;

use homog3_core::{
    canonical_structure, AlgebraSpec, Canonical, Error, HomStructure, MetricLieAlgebra, Rational,
};

/// Comma-separated exact rationals, e.g. `1,-1/2,3`.
pub fn parse_list(s: &str, expected: usize, what: &str) -> Result<Vec<Rational>, Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != expected {
        return Err(Error::Parse(format!(
            "{what} expects {expected} comma-separated rationals, got {:?}",
            s
        )));
    }
    parts.iter().map(|p| p.parse()).collect()
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn algebra_from_file(path: &Path) -> Result<MetricLieAlgebra, Error> {
    let spec: AlgebraSpec = serde_json::from_str(&read(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    MetricLieAlgebra::from_spec(spec)
}

pub fn unimodular(s: &str) -> Result<MetricLieAlgebra, Error> {
    let c = parse_list(s, 3, "--unimodular")?;
    Ok(MetricLieAlgebra::unimodular(c[0].clone(), c[1].clone(), c[2].clone()))
}

pub fn nonunimodular(s: &str) -> Result<MetricLieAlgebra, Error> {
    let c = parse_list(s, 2, "--nonunimodular")?;
    MetricLieAlgebra::nonunimodular(c[0].clone(), c[1].clone())
}

pub fn structure_from_file(path: &Path) -> Result<HomStructure, Error> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn canonical(g: &MetricLieAlgebra, which: Canonical) -> HomStructure {
    canonical_structure(g, which)
}
