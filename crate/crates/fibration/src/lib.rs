//! Lefschetz fibrations over the disk and the sphere given by monodromy
//! factorizations on the ribbon surface model.
//!
//! The crate synthesizes and validates the curve configuration used by the
//! Gurtas involution word `W`, builds the factorizations `₍Φ_K₎(W)² · W²` of
//! the knot surgered elliptic surface and `W · ₍Φ_K^{-1}₎(W)` of its disk
//! halves, applies Hurwitz moves and computes exact invariants.

pub mod algebra;
pub mod contract;
pub mod data;
pub mod factorization;
pub mod synthesis;
pub mod words;

pub use algebra::{char_poly, invariant_factors, AbelianGroup, Poly};
pub use contract::{battery_names, with_battery, ContractReport, DatasetContract};
pub use data::{load_dataset, shipped_dataset};
pub use factorization::{
    d_prime_name, enk_factorization, fibration_invariants, lemma52_factorization, Base, Factorization,
    FibrationInvariants, HurwitzMove,
};
pub use synthesis::{fiber_genus, synthesize};
pub use words::{gurtas_length, gurtas_word, torus_knot_monodromy};

use mcg_engine::EngineError;
use surface_model::SurfaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FibrationError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dataset contract clause ({clause}) fails: {detail}")]
    ContractViolation { clause: String, detail: String },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("total monodromy does not act trivially on the battery")]
    ClosureFailed,
    #[error("malformed record: {0}")]
    Format(String),
}
