use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("gram matrix is not Hermitian")]
    NotHermitian,
    #[error("gram matrix is singular")]
    DegenerateForm,
    #[error("space must be a Hilbert space (positive definite gram)")]
    HilbertRequired,
    #[error("relation must act in a single space")]
    SameSpaceRequired,
    #[error("direct orthogonal sum needs two distinct space objects")]
    SharedSpace,
    #[error("relations are not disjoint: S ∩ T has dimension {0}")]
    NotDisjoint(usize),
    #[error("Green identity fails on basis pair ({i}, {j}) with defect {defect}")]
    GreenIdentityViolation { i: usize, j: usize, defect: Box<Scalar> },
    #[error("relation is not symmetric in the graph-side space")]
    SymmetryRequired,
    #[error("no supplied point is of regular type for S")]
    EmptyRegularSet,
    #[error("Weyl value at {0} is not an everywhere defined operator")]
    NonOperatorWeylValue(Box<Scalar>),
    #[error("points must lie in the open upper half-plane and be distinct")]
    InvalidSamplePoints,
    #[error("operation requires float mode")]
    FloatModeRequired,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("signature is unbalanced (κ₊ = {positive}, κ₋ = {negative})")]
    UnbalancedSignature { positive: usize, negative: usize },
    #[error("requested neutral dimension {requested} exceeds {max}")]
    NeutralTooLarge { requested: usize, max: usize },
    #[error("space carries no rational splitting basis; neutral subspaces cannot be generated exactly")]
    NoRationalSplitting,
    #[error("generation exhausted its retry budget: {0}")]
    GenerationExhausted(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("two computation routes disagree: {0}")]
    RouteMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
