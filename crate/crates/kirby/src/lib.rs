//! Kirby diagrams drawn on a surface.
//!
//! A Lefschetz fibration over the disk with fiber `Σ_g` is the 0-handle, `2g`
//! 1-handles drawn as dotted dual arcs of the surface bands, the boundary
//! 2-handle and one 2-handle per vanishing cycle. Every 2-handle is carried by
//! its attaching word in the generators `x_i, y_i` dual to the dotted arcs.
//! Slides and cancellations act on these words; each step is checked against
//! the Euler characteristic and the first homology and logged in a replayable
//! certificate.

pub mod certificate;
pub mod schedule;
pub mod shadow;
pub mod tietze;

pub use certificate::{replay, MoveCertificate, MoveRecord, Step, StepVerdict, Summary};
pub use schedule::{run_schedule, Schedule, SlideHint, Wave};
pub use shadow::{build_kirby, Band, KirbyShadow, PresentationShadow, TwoHandle};

use fibration::FibrationError;
use surface_model::SurfaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KirbyError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Fibration(#[from] FibrationError),
    #[error("a Kirby diagram on a surface needs a factorization over the disk")]
    DiskBaseRequired,
    #[error("unknown 2-handle `{0}`")]
    UnknownHandle(String),
    #[error("unknown or inactive 1-handle `{0}`")]
    UnknownOneHandle(String),
    #[error("2-handle label `{0}` is already used")]
    DuplicateLabel(String),
    #[error("a handle cannot slide over itself: `{0}`")]
    SelfSlide(String),
    #[error("band {0} does not fit the two attaching words")]
    BadBand(String),
    #[error("({one}, {two}) is not a canceling pair: the word passes {count} times")]
    NotCancelable { one: String, two: String, count: usize },
    #[error("malformed certificate: {0}")]
    Format(String),
}
