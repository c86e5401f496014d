//! End-to-end pipelines: the disk-piece handle calculus, the closed-manifold
//! handle count, and the curve identities behind them.

pub mod pipeline;
pub mod relations;

pub use pipeline::{
    assemble_theorem, lemma52_schedule, run_lemma52, run_lemma52_with, step_budget_from_env, verify, Lemma52Run, TheoremReport,
    VerifyReport, STEP_BUDGET_VAR,
};
pub use relations::{
    alexander_check, gurtas_relation, verify_conjugation_identities, verify_with, CheckLine, ConjugationReport,
};

use fibration::FibrationError;
use kirby::KirbyError;
use mcg_engine::EngineError;
use surface_model::SurfaceError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScenarioError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Fibration(#[from] FibrationError),
    #[error(transparent)]
    Kirby(#[from] KirbyError),
    #[error("certificate is not successful: {0}")]
    CertificateFailed(String),
}

impl ScenarioError {
    /// Errors caused by the input rather than by a failed verification. A
    /// dataset that breaks the contract is inadmissible input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            ScenarioError::Surface(SurfaceError::Parse { .. })
                | ScenarioError::Surface(SurfaceError::InvalidParameter(_))
                | ScenarioError::Fibration(FibrationError::InvalidParameter(_))
                | ScenarioError::Fibration(FibrationError::Format(_))
                | ScenarioError::Fibration(FibrationError::ContractViolation { .. })
                | ScenarioError::Fibration(FibrationError::Surface(SurfaceError::Parse { .. }))
                | ScenarioError::Fibration(FibrationError::Surface(SurfaceError::InvalidParameter(_)))
        )
    }
}
