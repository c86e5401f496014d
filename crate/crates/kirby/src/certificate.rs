//! Replayable move certificates.

use serde::{Deserialize, Serialize};
use surface_model::word::format_word;
use surface_model::{dual_arc_label, Word};

use crate::shadow::{Band, KirbyShadow, TwoHandle};
use crate::KirbyError;

pub const FORMAT: &str = "kirby-certificate/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleRecord {
    pub label: String,
    pub level: i64,
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub genus: usize,
    pub one_handles: Vec<String>,
    pub two_handles: Vec<HandleRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum MoveRecord {
    Slide { moving: String, over: String, result: String, band: Band },
    Cancel { one_handle: String, two_handle: String, wave: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepVerdict {
    pub euler_before: i64,
    pub euler_after: i64,
    pub h1_before: String,
    pub h1_after: String,
    pub one_handles: usize,
    pub two_handles: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub index: usize,
    #[serde(flatten)]
    pub record: MoveRecord,
    pub verdict: StepVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleCounts {
    pub zero: usize,
    pub one: usize,
    pub two: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub success: bool,
    pub handles: HandleCounts,
    pub excluded: Vec<String>,
    pub two_handles_without_excluded: usize,
    pub euler: i64,
    pub h1: String,
    pub generators: usize,
    pub relators: usize,
    pub all_steps_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stalled: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub format: String,
    pub title: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step_budget: Option<usize>,
    pub initial: DiagramRecord,
    pub steps: Vec<Step>,
    pub summary: Summary,
}

impl MoveCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, KirbyError> {
        let c: MoveCertificate = serde_json::from_str(s).map_err(|e| KirbyError::Format(e.to_string()))?;
        if c.format != FORMAT {
            return Err(KirbyError::Format(format!("unknown format `{}`", c.format)));
        }
        Ok(c)
    }

    /// Plain-text rendering of the log and the summary.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.title);
        s.push_str(&format!(
            "initial: {} dotted arcs, {} two-handles\n",
            self.initial.one_handles.len(),
            self.initial.two_handles.len()
        ));
        for st in &self.steps {
            let what = match &st.record {
                MoveRecord::Slide { moving, over, result, band } => {
                    format!("slide {moving} over {over} -> {result} band {band}")
                }
                MoveRecord::Cancel { one_handle, two_handle, wave } => {
                    format!("cancel ({one_handle}, {two_handle}) [{wave}]")
                }
            };
            s.push_str(&format!(
                "{:>3} {:<48} chi {} -> {}  H1 {} -> {}  {}\n",
                st.index,
                what,
                st.verdict.euler_before,
                st.verdict.euler_after,
                st.verdict.h1_before,
                st.verdict.h1_after,
                if st.verdict.ok { "ok" } else { "FAIL" }
            ));
        }
        let m = &self.summary;
        s.push_str(&format!(
            "result: {}\nhandles (0, 1, 2) = ({}, {}, {}); without {}: {}\nchi = {}, H1 = {}\n",
            if m.success { "certified" } else { "not certified" },
            m.handles.zero,
            m.handles.one,
            m.handles.two,
            m.excluded.join(", "),
            m.two_handles_without_excluded,
            m.euler,
            m.h1
        ));
        if let Some(st) = &m.stalled {
            s.push_str(&format!("stalled: {st}\n"));
        }
        s
    }
}

/// Parses words written as `x1 y2^-1 …`.
pub fn parse_word(s: &str) -> Result<Word, KirbyError> {
    s.split_whitespace()
        .map(|tok| {
            let (name, inv) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let bad = || KirbyError::Format(format!("bad generator `{tok}`"));
            let (kind, idx) = name.split_at(1.min(name.len()));
            let i: i32 = idx.parse().map_err(|_| bad())?;
            if i < 1 {
                return Err(bad());
            }
            let h = match kind {
                "x" => 2 * i - 1,
                "y" => 2 * i,
                _ => return Err(bad()),
            };
            Ok(if inv { -h } else { h })
        })
        .collect()
}

pub fn record_diagram(k: &KirbyShadow) -> DiagramRecord {
    DiagramRecord {
        genus: k.genus(),
        one_handles: k.active_labels(),
        two_handles: k
            .handles()
            .iter()
            .map(|h| HandleRecord {
                label: h.label.clone(),
                level: h.level,
                word: format_word(&h.word),
                curve: h.curve.clone(),
            })
            .collect(),
    }
}

pub fn restore_diagram(d: &DiagramRecord) -> Result<KirbyShadow, KirbyError> {
    let surface = surface_model::SurfaceModel::standard(d.genus)?;
    let active = d
        .one_handles
        .iter()
        .map(|l| surface.handle_of_label(l).ok_or_else(|| KirbyError::UnknownOneHandle(l.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let handles = d
        .two_handles
        .iter()
        .map(|h| {
            Ok(TwoHandle { label: h.label.clone(), level: h.level, word: parse_word(&h.word)?, curve: h.curve.clone() })
        })
        .collect::<Result<Vec<_>, KirbyError>>()?;
    KirbyShadow::with_active(d.genus, active, handles)
}

pub(crate) fn verdict(before: &KirbyShadow, after: &KirbyShadow) -> StepVerdict {
    let (h1b, h1a) = (before.h1(), after.h1());
    StepVerdict {
        euler_before: before.euler(),
        euler_after: after.euler(),
        ok: before.euler() == after.euler() && h1b == h1a,
        h1_before: h1b.to_string(),
        h1_after: h1a.to_string(),
        one_handles: after.one_handle_count(),
        two_handles: after.two_handle_count(),
    }
}

/// Summary of a final diagram; it depends on nothing else.
pub(crate) fn summarize(k: &KirbyShadow, excluded: &[String], steps: &[Step], budget: Option<usize>) -> Summary {
    let present_excluded = excluded.iter().filter(|l| k.handle(l).is_ok()).count();
    let all_steps_ok = steps.iter().all(|s| s.verdict.ok);
    let left: Vec<String> = k.active_labels();
    Summary {
        success: left.is_empty() && all_steps_ok,
        handles: HandleCounts { zero: 1, one: k.one_handle_count(), two: k.two_handle_count() },
        excluded: excluded.to_vec(),
        two_handles_without_excluded: k.two_handle_count() - present_excluded,
        euler: k.euler(),
        h1: k.h1().to_string(),
        generators: k.one_handle_count(),
        relators: k.two_handle_count(),
        all_steps_ok,
        stalled: (!left.is_empty()).then(|| match budget {
            Some(b) if steps.len() >= b => format!("step budget of {b} exhausted with {} active", left.join(", ")),
            _ => format!("no canceling pair for {}", left.join(", ")),
        }),
    }
}

fn arc_of(k: &KirbyShadow, label: &str) -> Result<usize, KirbyError> {
    k.active()
        .iter()
        .copied()
        .find(|&h| dual_arc_label(h) == label)
        .ok_or_else(|| KirbyError::UnknownOneHandle(label.to_string()))
}

/// Applies one logged move.
pub fn apply_record(k: &KirbyShadow, r: &MoveRecord) -> Result<KirbyShadow, KirbyError> {
    match r {
        MoveRecord::Slide { moving, over, result, band } => Ok(k.handle_slide(moving, over, result, Some(*band))?.0),
        MoveRecord::Cancel { one_handle, two_handle, .. } => k.cancel(arc_of(k, one_handle)?, two_handle),
    }
}

/// Rebuilds a certificate from its initial diagram and its move list alone.
/// A faithful certificate satisfies `replay(c)?.to_json() == c.to_json()`.
pub fn replay(c: &MoveCertificate) -> Result<MoveCertificate, KirbyError> {
    let mut k = restore_diagram(&c.initial)?;
    let mut steps = Vec::with_capacity(c.steps.len());
    for (index, st) in c.steps.iter().enumerate() {
        let next = apply_record(&k, &st.record)?;
        steps.push(Step { index, record: st.record.clone(), verdict: verdict(&k, &next) });
        k = next;
    }
    let summary = summarize(&k, &c.summary.excluded, &steps, c.step_budget);
    Ok(MoveCertificate {
        format: FORMAT.to_string(),
        title: c.title.clone(),
        step_budget: c.step_budget,
        initial: c.initial.clone(),
        steps,
        summary,
    })
}
