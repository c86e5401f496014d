//! Mapping classes of a one-boundary surface acting on curve arrangements.
//!
//! Dehn twists are performed by surgery on passage words: each crossing of the
//! target with the twisting curve is resolved by inserting parallel copies of
//! the twisting curve. Twist words compose right to left. Every twist has a
//! homological shadow, a symplectic transvection.

pub mod symplectic;
pub mod twist;
pub mod word;

pub use symplectic::SymplecticMatrix;
pub use twist::{
    acts_trivially, apply_word, apply_word_to_passages, basis_curves, conjugate_word, dehn_twist,
    homology_action, twist_passages,
};
pub use word::TwistWord;

use surface_model::SurfaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("twisting curve `{0}` is not embedded")]
    NotEmbedded(String),
    #[error("twist exponent must be nonzero")]
    ZeroExponent,
    #[error("bad twist token `{0}`")]
    BadToken(String),
    #[error("curve `{name}` already exists with a different word")]
    NameClash { name: String },
    #[error("word length exceeded the budget of {0} letters")]
    Budget(usize),
}
