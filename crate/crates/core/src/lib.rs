//! Exact computations on three-dimensional metric Lie algebras: Levi-Civita
//! connection and curvature, homogeneous Riemannian structures and their
//! Tricerri–Vanhecke types, the left-invariant Ambrose–Singer solver,
//! reconstruction of the transitive algebra, and the contact layer.
//!
//! Every scalar is a [`Rational`]; there are no tolerances.

pub mod rational;
pub mod linalg;
pub mod poly;
pub mod lie;
pub mod curvature;
pub mod homstruct;
pub mod reconstruct;
pub mod contact;
pub mod report;

pub use linalg::{inertia, solve_linear, AffineSpace, Inertia, Matrix, Multiplicity};
pub use poly::{solve_quadratic_small, AffineLine, Poly, SolutionSet, UniPoly};
pub use rational::{q, qi, Rational};

pub use contact::{
    boeckx_structure, contact_metric_constant, contact_report, h_tensor, kappa_mu, okumura_structure,
    sasakian_check, standard_acs, tanaka_webster, AlmostContactStructure, ContactReport, KappaMu,
};
pub use curvature::{
    covariant_derivative, curvature, is_locally_symmetric, levi_civita, nabla_r, riemann, Connection,
    CurvatureData,
};
pub use homstruct::{
    as_verify, canonical_structure, minus_structure, s4_family, so2_family, solve_left_invariant,
    tv_decompose, AmbroseSingerReport, Canonical, HomStructure, SolverOutcome, StructureFamily, TvClass,
    TvDecomposition,
};
pub use lie::{AlgebraSpec, LieAlgebra, MetricLieAlgebra, MilnorClass, MilnorGroup, NormalForm, Tensor3};
pub use reconstruct::{
    build_transitive_algebra, fingerprint, holonomy_algebra, verify_isomorphism, verify_lie_morphism,
    AlgebraFingerprint, ReconstructedAlgebra,
};
pub use report::{analyze, member_report, render_text, AnalysisReport, MemberReport};

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("linear system is inconsistent")]
    Infeasible,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("normal form requires alpha >= 0 and beta >= 0")]
    NormalizationViolated,
    #[error("operation needs a Milnor normal form, got a generic algebra")]
    GenericForm,
    #[error("wrong normal form: {0}")]
    WrongNormalForm(String),
    #[error("S is not skew in its last two slots")]
    MetricalConditionViolated,
    #[error("Ricci tensor is not diagonal in the given basis; supply a Milnor frame")]
    RicciNotDiagonal,
    #[error("S is not an Ambrose-Singer structure")]
    NotAmbroseSinger,
    #[error("holonomy closure exceeded the skew-symmetric dimension")]
    ClosureDiverged,
    #[error("Jacobi identity fails: {0}")]
    JacobiFailed(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no standard almost contact structure for this normal form")]
    UnsupportedForm,
    #[error("boeckx structure needs a non-Sasakian input (h = 0 here)")]
    SasakianInput,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("denominator exceeds {0} bits")]
    DenominatorTooLarge(u64),
}
