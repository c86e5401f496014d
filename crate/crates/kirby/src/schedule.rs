//! Schedule-driven slides and cancellations.

use serde::{Deserialize, Serialize};
use surface_model::dual_arc_label;

use crate::certificate::{record_diagram, summarize, verdict, MoveCertificate, MoveRecord, Step, FORMAT};
use crate::shadow::{Band, KirbyShadow};
use crate::KirbyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideHint {
    pub moving: String,
    pub over: String,
    pub result: String,
    #[serde(default)]
    pub band: Option<Band>,
}

/// 2-handles whose canceling pairs are tried together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wave {
    pub name: String,
    pub handles: Vec<String>,
}

/// Slides first, then cancellation waves, then optionally a greedy pass over
/// every handle that is not excluded.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Schedule {
    pub slides: Vec<SlideHint>,
    pub waves: Vec<Wave>,
    pub excluded: Vec<String>,
    pub greedy_fallback: bool,
    /// Upper bound on the number of moves.
    pub max_steps: Option<usize>,
}

pub const FALLBACK_WAVE: &str = "greedy";

/// The canceling pair with the shortest word among the allowed handles, ties
/// broken by label and then by arc.
fn pick(k: &KirbyShadow, allowed: impl Fn(&str) -> bool) -> Option<(usize, String)> {
    k.find_canceling_pairs()
        .into_iter()
        .filter(|(_, l)| allowed(l))
        .min_by(|(a1, l1), (a2, l2)| {
            let w1 = k.handle(l1).map(|h| h.word.len()).unwrap_or(usize::MAX);
            let w2 = k.handle(l2).map(|h| h.word.len()).unwrap_or(usize::MAX);
            (w1, l1, a1).cmp(&(w2, l2, a2))
        })
}

type Membership<'a> = Box<dyn Fn(&str) -> bool + 'a>;

/// Runs the schedule and logs every move with its verdict. Unknown labels in
/// slide hints are errors; a schedule that leaves dotted arcs behind yields a
/// certificate whose summary is marked unsuccessful.
pub fn run_schedule(k: &KirbyShadow, schedule: &Schedule, title: &str) -> Result<MoveCertificate, KirbyError> {
    let initial = record_diagram(k);
    let mut cur = k.clone();
    let mut steps: Vec<Step> = Vec::new();
    let budget = schedule.max_steps.unwrap_or(usize::MAX);
    let push = |cur: &mut KirbyShadow, next: KirbyShadow, record: MoveRecord, steps: &mut Vec<Step>| {
        steps.push(Step { index: steps.len(), record, verdict: verdict(cur, &next) });
        *cur = next;
    };
    for s in &schedule.slides {
        if steps.len() >= budget {
            break;
        }
        let (next, band) = cur.handle_slide(&s.moving, &s.over, &s.result, s.band)?;
        let record = MoveRecord::Slide { moving: s.moving.clone(), over: s.over.clone(), result: s.result.clone(), band };
        push(&mut cur, next, record, &mut steps);
    }
    let excluded = |l: &str| schedule.excluded.iter().any(|e| e == l);
    let mut waves: Vec<(&str, Membership<'_>)> = schedule
        .waves
        .iter()
        .map(|w| {
            let f: Box<dyn Fn(&str) -> bool> = Box::new(move |l: &str| w.handles.iter().any(|x| x == l));
            (w.name.as_str(), f)
        })
        .collect();
    if schedule.greedy_fallback {
        waves.push((FALLBACK_WAVE, Box::new(|_: &str| true)));
    }
    for (name, member) in &waves {
        while steps.len() < budget && !cur.active().is_empty() {
            let Some((arc, label)) = pick(&cur, |l| member(l) && !excluded(l)) else { break };
            let next = cur.cancel(arc, &label)?;
            let record = MoveRecord::Cancel { one_handle: dual_arc_label(arc), two_handle: label, wave: name.to_string() };
            push(&mut cur, next, record, &mut steps);
        }
    }
    let summary = summarize(&cur, &schedule.excluded, &steps, schedule.max_steps);
    Ok(MoveCertificate {
        format: FORMAT.to_string(),
        title: title.to_string(),
        step_budget: schedule.max_steps,
        initial,
        steps,
        summary,
    })
}
