//! The disk-piece schedule and the closed-manifold assembly.

use fibration::synthesis::{c_name, d_name};
use fibration::factorization::copy_name;
use fibration::{d_prime_name, enk_factorization, lemma52_factorization, DatasetContract, Factorization};
use kirby::shadow::BOUNDARY_LABEL;
use kirby::{build_kirby, run_schedule, MoveCertificate, Schedule, SlideHint, Wave};
use serde::{Deserialize, Serialize};
use surface_model::Arrangement;

use crate::ScenarioError;

/// Environment variable bounding the number of moves of a schedule.
pub const STEP_BUDGET_VAR: &str = "ENK_STEP_BUDGET";

pub fn step_budget_from_env() -> Option<usize> {
    std::env::var(STEP_BUDGET_VAR).ok().and_then(|v| v.trim().parse().ok())
}

fn slid_label(i: usize) -> String {
    format!("h{i}")
}

fn pair_label(i: usize, j: usize) -> String {
    format!("h{i},{j}")
}

/// Slides `h_{t_{a_{i+1}}(D_i)}` over `h_{D_i}` giving `h_{i+1}`, then
/// `h_{D_{2h-j}}` over `h_{D_{2h-1-j}}` giving `h_{2h-1-j,2h-j}`. Cancellation
/// waves: the `c` copies, the `h_i`, the `h_{j,j+1}`, then `h_{D′_{2h}}`;
/// `h_{D_0}` and the boundary handle are never canceled.
pub fn lemma52_schedule(h: usize, n: usize) -> Schedule {
    let mut slides = Vec::new();
    for i in 0..2 * h {
        slides.push(SlideHint { moving: d_prime_name(i), over: d_name(i), result: slid_label(i + 1), band: None });
    }
    for j in 0..2 * h {
        slides.push(SlideHint {
            moving: d_name(2 * h - j),
            over: d_name(2 * h - 1 - j),
            result: pair_label(2 * h - 1 - j, 2 * h - j),
            band: None,
        });
    }
    let mut copies = Vec::new();
    for k in 1..=2 * n - 1 {
        let base = c_name(k);
        for tag in ["", "p"] {
            copies.push(copy_name(&base, tag, 0));
            if k < 2 * n - 1 {
                copies.push(copy_name(&base, tag, 1));
            }
        }
    }
    let waves = vec![
        Wave { name: "c copies".into(), handles: copies },
        Wave { name: "h_i".into(), handles: (1..=2 * h).map(slid_label).collect() },
        Wave { name: "h_{j,j+1}".into(), handles: (0..2 * h).map(|j| pair_label(j, j + 1)).collect() },
        Wave { name: "D'_2h".into(), handles: vec![d_prime_name(2 * h)] },
    ];
    Schedule {
        slides,
        waves,
        excluded: vec![d_name(0), BOUNDARY_LABEL.to_string()],
        greedy_fallback: true,
        max_steps: step_budget_from_env(),
    }
}

/// The disk piece `X` with monodromy `W · W′` and its certificate.
#[derive(Debug, Clone)]
pub struct Lemma52Run {
    pub h: usize,
    pub n: usize,
    pub factorization: Factorization,
    pub certificate: MoveCertificate,
}

pub fn run_lemma52(h: usize, n: usize, dataset: &Arrangement) -> Result<Lemma52Run, ScenarioError> {
    run_lemma52_with(h, n, dataset, &lemma52_schedule(h, n))
}

pub fn run_lemma52_with(
    h: usize,
    n: usize,
    dataset: &Arrangement,
    schedule: &Schedule,
) -> Result<Lemma52Run, ScenarioError> {
    DatasetContract::new(h, n)?.require(dataset)?;
    let factorization = lemma52_factorization(h, n, dataset)?;
    let diagram = build_kirby(&factorization)?;
    let title = format!("disk piece W.W' for h={h}, n={n}");
    let certificate = run_schedule(&diagram, schedule, &title)?;
    Ok(Lemma52Run { h, n, factorization, certificate })
}

/// Handle counts of the closed manifold obtained by gluing the disk piece to
/// a second copy turned upside down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub h: usize,
    pub n: usize,
    pub certificate: String,
    pub disk_piece_two_handles: usize,
    pub handle_vector: [usize; 5],
    pub euler: i64,
    pub euler_from_fibration: i64,
    pub b2: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremReport {
    pub fn to_text(&self) -> String {
        let v = self.handle_vector;
        let mut s = format!(
            "E({})_K, K = T(2,{}): handles (n0..n4) = ({}, {}, {}, {}, {}), chi = {} (fibration: {}), b2 = {}\n",
            self.n,
            2 * self.h + 1,
            v[0],
            v[1],
            v[2],
            v[3],
            v[4],
            self.euler,
            self.euler_from_fibration,
            self.b2
        );
        if let Some(note) = &self.note {
            s.push_str(note);
            s.push('\n');
        }
        s
    }
}

/// The closed handle vector `(1, 0, 2 n_2, 0, 1)` from a successful disk-piece
/// certificate with `n_2` two-handles.
pub fn assemble_theorem(run: &Lemma52Run, dataset: &Arrangement) -> Result<TheoremReport, ScenarioError> {
    let s = &run.certificate.summary;
    if !s.success {
        return Err(ScenarioError::CertificateFailed(s.stalled.clone().unwrap_or_else(|| "a step failed".into())));
    }
    let (h, n) = (run.h, run.n);
    let two = s.handles.two;
    let handle_vector = [1, 0, 2 * two, 0, 1];
    let euler = 1 + 2 * two as i64 + 1;
    let enk = enk_factorization(h, n, dataset)?;
    let note = (n == 1).then(|| {
        format!(
            "E(1)_{{2,{q}}} admits a handle decomposition without 1- and 3-handles, since E(1)_{{T(2,{q})}} is diffeomorphic to E(1)_{{2,{q}}}.",
            q = 2 * h + 1
        )
    });
    Ok(TheoremReport {
        h,
        n,
        certificate: run.certificate.title.clone(),
        disk_piece_two_handles: two,
        handle_vector,
        euler,
        euler_from_fibration: enk.invariants()?.euler,
        b2: 2 * two,
        note,
    })
}

/// Output of `verify`: the disk-piece certificate and, on success, the
/// closed-manifold report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    pub certificate: MoveCertificate,
}

impl VerifyReport {
    /// Certified exactly when the certificate is successful.
    pub fn certified(&self) -> bool {
        self.certificate.summary.success
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ScenarioError> {
        serde_json::from_str(s).map_err(|e| ScenarioError::Kirby(kirby::KirbyError::Format(e.to_string())))
    }

    pub fn to_text(&self) -> String {
        let mut s = self.certificate.to_text();
        if let Some(t) = &self.theorem {
            s.push_str(&t.to_text());
        }
        s
    }
}

/// Runs the disk piece and, when it succeeds, the closed-manifold assembly.
pub fn verify(h: usize, n: usize, dataset: &Arrangement) -> Result<VerifyReport, ScenarioError> {
    let run = run_lemma52(h, n, dataset)?;
    let theorem = if run.certificate.summary.success { Some(assemble_theorem(&run, dataset)?) } else { None };
    Ok(VerifyReport { theorem, certificate: run.certificate })
}
