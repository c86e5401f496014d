//! Combinatorial model of a genus-g surface with one boundary circle.
//!
//! The surface is a disk `P` with `2g` bands attached along its boundary.
//! Closed curves are recorded by the handles they pass through together with
//! a strand order inside every handle; crossings live in `P` as interleaved
//! chords. The crate provides minimal position by local moves, geometric and
//! algebraic intersection numbers, crossing words and a line-oriented dataset
//! format.

pub mod arrangement;
pub mod dataset;
pub mod homology;
pub mod surface;
pub mod word;

pub use arrangement::{Arrangement, Curve, Verdict, Violation};
pub use dataset::{parse_dataset, write_dataset};
pub use homology::HomologyClass;
pub use surface::{build_surface, dual_arc_label, SurfaceModel};
pub use word::{Letter, Word};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("duplicate curve `{0}`")]
    DuplicateCurve(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("inconsistent strand order: {0}")]
    InvalidOrder(String),
    #[error("curve `{0}` is not embedded")]
    NotEmbedded(String),
}
