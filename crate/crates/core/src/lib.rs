//! Exact calculus of linear relations between finite-dimensional Krein spaces,
//! Green's boundary relations, and a randomized property harness.

pub mod error;
pub mod green;
pub mod harness;
pub mod json;
pub mod matrix;
pub mod relation;
pub mod scalar;
pub mod space;
pub mod spectrum;
pub mod subspace;

pub use error::{Error, Result};
pub use green::{BoundaryClassification, BoundaryFlags, GreensBoundaryRelation, WeylSample};
pub use harness::{replay, run_suite, Counterexample, GeneratorConfig, PropertyReport, Status};
pub use json::{parse_instance, Instance};
pub use matrix::{Matrix, Vector};
pub use relation::{LinearRelation, Parts, RelationClassification};
pub use scalar::{Rational, Scalar};
pub use space::{KreinSpace, Space, SubspaceClass};
pub use spectrum::{FloatConfig, Mode, Spectrum};
pub use subspace::Subspace;
