//! The free Zinbiel superalgebra on a graded alphabet.
//!
//! Elements are [`FreeElement`]s in the word basis; every word is the
//! left-nested product of its letters. The shuffle, Zinbiel and bracket
//! products, the map `p` and the skew-rcom normal form live here, together
//! with the expression language used by the command line.

mod alphabet;
mod brackets;
pub mod expansions;
pub mod laws;
pub mod sweep;
pub mod expr;
mod multidegree;
mod pmap;
mod product;
mod shuffle;

pub use alphabet::Alphabet;
pub use brackets::{bracket_monomial_span, BracketSpans};
pub use expr::{expand, parse_expr, BracketExpr, ParseError};
pub use multidegree::Multidegree;
pub use pmap::{bar, is_tortkara_element, p_map, p_map_word, skew_rcom_basis};
pub use product::{
    left_nested, super_anticommutator, super_anticommutator_into, super_commutator,
    super_commutator_into, truncated_free_algebra, zinbiel_product, zinbiel_product_into, zinbiel_words,
};
pub use shuffle::{shuffle_by_enumeration, shuffle_words, super_shuffle, super_shuffle_into};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeError {
    #[error("alphabet must declare at least one generator")]
    EmptyAlphabet,
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("malformed alphabet declaration `{0}` (expected name:even|odd)")]
    MalformedAlphabet(String),
    #[error("unbound generator `{0}`")]
    UnboundGenerator(String),
    #[error("degree too low: {0}")]
    DegreeTooLow(String),
    #[error("criterion needs degree greater than 1, found a degree-1 component")]
    CriterionInapplicable,
    #[error("malformed multidegree `{0}`")]
    MalformedMultidegree(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
