//! Finite-dimensional superalgebras given by structure constants.

mod algebra;
pub mod catalog;
mod envelope;
mod identities;
mod isomorphism;

pub use algebra::{SparseVec, SuperAlgebra};
pub use catalog::{
    catalog, check_algebra, default_samples, lookup, verify_catalog, CatalogEntry, CatalogLabel, CatalogOptions, CatalogReport,
    CatalogRow,
};
pub use envelope::{grassmann_envelope, EnvelopeBasis, GrassmannEnvelope, MAX_GRASSMANN_GENERATORS};
pub use isomorphism::{
    family_isomorphism_check, is_isomorphic, is_isomorphism, ChangeOfBasis, IsomorphismOptions, IsomorphismVerdict,
};
pub use identities::{identity_residual, verify_identity, IdentityKind, IdentityVerdict};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{}syntax error: {message}", line_prefix(*line))]
    Syntax { line: usize, message: String },
    #[error("{}c_{{{i}{j}}}^{k} breaks the grading", opt_line_prefix(*line))]
    Grading { line: Option<usize>, i: usize, j: usize, k: usize },
    #[error("{}basis index {index} out of range 1..={dim}", opt_line_prefix(*line))]
    IndexOutOfRange { line: Option<usize>, index: usize, dim: usize },
    #[error("catalog entry {entry} lists conflicting products e{i}e{j} and its partner")]
    CatalogConflict { entry: String, i: usize, j: usize },
    #[error("{0} is a family and needs a parameter value")]
    MissingParameter(String),
    #[error("{0} takes no parameter")]
    UnexpectedParameter(String),
    #[error("the Grassmann envelope needs an even product")]
    OddProduct,
    #[error("{generators} Grassmann generators cannot host odd dimension {odd_dim}")]
    TruncationTooSmall { generators: usize, odd_dim: usize },
    #[error("{generators} Grassmann generators exceed the supported {max}")]
    TruncationTooLarge { generators: usize, max: usize },
    #[error("{0} is not a parameterized family")]
    NotAFamily(String),
    #[error("parameter {value} lies outside the domain of {family}")]
    ParameterOutOfDomain { family: String, value: String },
}

fn line_prefix(line: usize) -> String {
    format!("line {line}: ")
}

fn opt_line_prefix(line: Option<usize>) -> String {
    line.map(line_prefix).unwrap_or_default()
}
