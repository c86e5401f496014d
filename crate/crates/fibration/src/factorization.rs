//! Monodromy factorizations and their isomorphism moves.

use std::collections::{HashMap, HashSet};
use std::fmt;

use mcg_engine::{
    acts_trivially, apply_word_to_passages, conjugate_word, homology_action, twist_passages, SymplecticMatrix,
    TwistWord,
};
use serde::{Deserialize, Serialize};
use surface_model::{parse_dataset, write_dataset, Arrangement, Curve, Word};

use crate::algebra::AbelianGroup;
use crate::contract::{battery_names, with_battery, DatasetContract};
use crate::synthesis::{c_name, chain_name, d_name};
use crate::words::{gurtas_word, torus_knot_monodromy};
use crate::FibrationError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Disk,
    Sphere,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Disk => "disk",
            Base::Sphere => "sphere",
        })
    }
}

/// A positive factorization `t_{v_m} ⋯ t_{v_1}` over a disk or a sphere.
/// Every vanishing cycle is a distinct curve of the arrangement; repeated
/// cycles are carried as parallel copies.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    base: Base,
    arrangement: Arrangement,
    monodromy: TwistWord,
}

/// Isomorphism moves on a factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HurwitzMove {
    /// Moves the first `k` written letters to the end.
    Rotate(usize),
    /// Replaces written letters `p, p+1`, that is `t_{v_{i+1}} t_{v_i}`, by
    /// `t_{v_i} t_{t_{v_i}^{-1}(v_{i+1})}`.
    Transpose(usize),
    /// Replaces every cycle `v` by `φ(v)`.
    Conjugate(TwistWord),
}

/// Euler characteristic and first homology of the total space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationInvariants {
    pub genus: usize,
    pub base: Base,
    pub cycles: usize,
    pub euler: i64,
    pub h1: AbelianGroup,
}

#[derive(Serialize, Deserialize)]
struct Record {
    genus: usize,
    base: Base,
    monodromy: String,
    dataset: String,
}

fn fresh_name(arr: &Arrangement, taken: &HashSet<String>, stem: &str) -> String {
    (1..)
        .map(|k| format!("{stem}h{k}"))
        .find(|s| !arr.contains(s) && !taken.contains(s))
        .expect("unbounded supply of names")
}

impl Factorization {
    /// Checks that every letter is a positive twist about a distinct essential
    /// curve. Closure over the sphere is checked by [`Factorization::check_closure`].
    pub fn new(base: Base, arrangement: Arrangement, monodromy: TwistWord) -> Result<Self, FibrationError> {
        if base == Base::Sphere && monodromy.is_empty() {
            return Err(FibrationError::InvalidFactorization("a sphere factorization needs a cycle".into()));
        }
        let mut seen = HashSet::new();
        for (name, e) in &monodromy.letters {
            if *e != 1 {
                return Err(FibrationError::InvalidFactorization(format!("`{name}` has exponent {e}")));
            }
            if !seen.insert(name.as_str()) {
                return Err(FibrationError::InvalidFactorization(format!("`{name}` is used twice")));
            }
            if !arrangement.is_embedded(name)? {
                return Err(mcg_engine::EngineError::NotEmbedded(name.clone()).into());
            }
            if !is_essential(&arrangement, name)? {
                return Err(FibrationError::InvalidFactorization(format!("`{name}` is inessential")));
            }
        }
        Ok(Factorization { base, arrangement, monodromy })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn genus(&self) -> usize {
        self.arrangement.surface().genus()
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// The word in written order: the last letter acts first.
    pub fn monodromy(&self) -> &TwistWord {
        &self.monodromy
    }

    pub fn len(&self) -> usize {
        self.monodromy.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monodromy.is_empty()
    }

    /// Vanishing cycles `v_1, …, v_m` in the order they act.
    pub fn cycles(&self) -> Vec<&str> {
        self.monodromy.acting_order().map(|(n, _)| n.as_str()).collect()
    }

    pub fn total_action(&self) -> Result<SymplecticMatrix, FibrationError> {
        Ok(homology_action(&self.arrangement, &self.monodromy)?)
    }

    /// Over a sphere, the total monodromy must act trivially on the battery.
    pub fn check_closure(&self, battery: &[&str]) -> Result<bool, FibrationError> {
        if self.base == Base::Disk {
            return Ok(true);
        }
        Ok(acts_trivially(&self.arrangement, &self.monodromy, battery)?)
    }

    pub fn apply(&self, mv: &HurwitzMove) -> Result<Factorization, FibrationError> {
        let m = self.len();
        match mv {
            HurwitzMove::Rotate(k) => {
                let k = if m == 0 { 0 } else { k % m };
                let mut letters = self.monodromy.letters[k..].to_vec();
                letters.extend_from_slice(&self.monodromy.letters[..k]);
                Ok(Factorization { monodromy: TwistWord::new(letters), ..self.clone() })
            }
            HurwitzMove::Transpose(p) => {
                if p + 1 >= m {
                    return Err(FibrationError::IndexOutOfRange { index: *p, len: m });
                }
                let next = &self.monodromy.letters[*p].0;
                let first = &self.monodromy.letters[p + 1].0;
                let img = twist_passages(
                    self.arrangement.surface(),
                    self.arrangement.passages(first)?,
                    self.arrangement.passages(next)?,
                    -1,
                );
                let name = fresh_name(&self.arrangement, &HashSet::new(), next);
                let arrangement = self.arrangement.with_curve(Curve::new(name.clone(), img))?;
                let mut letters = self.monodromy.letters.clone();
                letters[*p] = (first.clone(), 1);
                letters[p + 1] = (name, 1);
                Factorization::new(self.base, arrangement, TwistWord::new(letters))
            }
            HurwitzMove::Conjugate(phi) => {
                let prefix = (1..)
                    .map(|k| format!("g{k}_"))
                    .find(|p| self.arrangement.names().all(|n| !n.starts_with(p.as_str())))
                    .expect("unbounded supply of prefixes");
                let (arrangement, monodromy) = conjugate_word(&self.arrangement, phi, &self.monodromy, &prefix)?;
                Factorization::new(self.base, arrangement, monodromy)
            }
        }
    }

    pub fn invariants(&self) -> Result<FibrationInvariants, FibrationError> {
        fibration_invariants(self)
    }

    /// Deterministic JSON: base, genus, the word and the curve dataset.
    pub fn to_json(&self) -> String {
        let rec = Record {
            genus: self.genus(),
            base: self.base,
            monodromy: self.monodromy.to_string(),
            dataset: write_dataset(&self.arrangement),
        };
        serde_json::to_string_pretty(&rec).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<Factorization, FibrationError> {
        let rec: Record = serde_json::from_str(s).map_err(|e| FibrationError::Format(e.to_string()))?;
        let arrangement = parse_dataset(&rec.dataset)?;
        if arrangement.surface().genus() != rec.genus {
            return Err(FibrationError::Format(format!("genus {} disagrees with the dataset", rec.genus)));
        }
        let monodromy: TwistWord = rec.monodromy.parse()?;
        Factorization::new(rec.base, arrangement, monodromy)
    }
}

/// Nonzero homology class, or else a nonzero intersection with some other
/// curve of the arrangement.
pub fn is_essential(arr: &Arrangement, name: &str) -> Result<bool, FibrationError> {
    if !arr.homology_class(name)?.is_zero() {
        return Ok(true);
    }
    for other in arr.names() {
        if other != name && arr.geometric_intersection(name, other)? > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// χ of the total space and `H_1` from the abelianized vanishing cycles.
pub fn fibration_invariants(f: &Factorization) -> Result<FibrationInvariants, FibrationError> {
    let g = f.genus();
    let m = f.len() as i64;
    let fiber = 2 - 2 * g as i64;
    let euler = match f.base {
        Base::Disk => fiber + m,
        Base::Sphere => 2 * fiber + m,
    };
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(f.len() + 1);
    for name in f.cycles() {
        rows.push(f.arrangement.homology_class(name)?.0);
    }
    if f.base == Base::Sphere {
        // The boundary relator is a product of commutators.
        rows.push(vec![0; 2 * g]);
    }
    Ok(FibrationInvariants { genus: g, base: f.base, cycles: f.len(), euler, h1: AbelianGroup::from_relations(2 * g, &rows) })
}

/// Name of the `occurrence`-th copy (from 0) of `base` in a block tagged `tag`.
pub fn copy_name(base: &str, tag: &str, occurrence: usize) -> String {
    match occurrence {
        0 => format!("{base}{tag}"),
        1 => format!("{base}{tag}b"),
        k => format!("{base}{tag}b{k}"),
    }
}

/// Materializes `₍φ₎(w)` with one curve per letter, named by [`copy_name`].
fn materialize(
    arr: &Arrangement,
    w: &TwistWord,
    phi: Option<&TwistWord>,
    tag: &str,
    images: &mut HashMap<String, Word>,
) -> Result<(Vec<Curve>, TwistWord), FibrationError> {
    let mut count: HashMap<&str, usize> = HashMap::new();
    let mut curves = Vec::new();
    let mut letters = Vec::new();
    for (name, e) in &w.letters {
        let img = match phi {
            None => arr.passages(name)?.to_vec(),
            Some(phi) => match images.get(name) {
                Some(img) => img.clone(),
                None => {
                    let img = apply_word_to_passages(arr, phi, arr.passages(name)?, None)?;
                    images.insert(name.clone(), img.clone());
                    img
                }
            },
        };
        let occ = count.entry(name.as_str()).or_insert(0);
        let new_name = copy_name(name, tag, *occ);
        *occ += 1;
        curves.push(Curve::new(new_name.clone(), img));
        letters.push((new_name, *e));
    }
    Ok((curves, TwistWord::new(letters)))
}

/// Concatenates the blocks `₍φ₎(w)` in written order. Each block gets its own
/// copies of the curves, named with the block's tag; `None` stands for the
/// identity. The battery's basis curves are added to the arrangement.
pub fn from_blocks(
    arr: &Arrangement,
    base: Base,
    blocks: &[(Option<&TwistWord>, &str)],
    w: &TwistWord,
) -> Result<Factorization, FibrationError> {
    let mut curves = Vec::new();
    let mut word = TwistWord::identity();
    let mut caches: HashMap<String, HashMap<String, Word>> = HashMap::new();
    for (phi, tag) in blocks {
        let images = caches.entry(phi.map(|p| p.to_string()).unwrap_or_default()).or_default();
        let (c, b) = materialize(arr, w, *phi, tag, images)?;
        curves.extend(c);
        word = word.then_after(&b);
    }
    let full = with_battery(arr)?.with_curves(curves)?;
    Factorization::new(base, full, word)
}

/// `₍Φ_K₎(W)² · W²` over the sphere; closure is checked on the battery.
pub fn enk_factorization(h: usize, n: usize, dataset: &Arrangement) -> Result<Factorization, FibrationError> {
    DatasetContract::new(h, n)?;
    let w = gurtas_word(h, n)?;
    let phi = torus_knot_monodromy(h)?;
    let f = from_blocks(dataset, Base::Sphere, &[(Some(&phi), "k"), (Some(&phi), "l"), (None, ""), (None, "w")], &w)?;
    let names = battery_names(h, n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    if !f.check_closure(&refs)? {
        return Err(FibrationError::ClosureFailed);
    }
    Ok(f)
}

/// `W · W′` over the disk with `W′ = ₍Φ_K^{-1}₎(W)`; the curves of `W′` carry the tag `p`.
pub fn lemma52_factorization(h: usize, n: usize, dataset: &Arrangement) -> Result<Factorization, FibrationError> {
    DatasetContract::new(h, n)?;
    let w = gurtas_word(h, n)?;
    let phi_inv = torus_knot_monodromy(h)?.inverse();
    from_blocks(dataset, Base::Disk, &[(None, ""), (Some(&phi_inv), "p")], &w)
}

/// Label of the `W′` copy of `D_j`: `t_{a_{j+1}}(D_j)` for `j < 2h`, `D′_{2h}` for `j = 2h`.
pub fn d_prime_name(j: usize) -> String {
    copy_name(&d_name(j), "p", 0)
}

/// Chain and `c` names, re-exported for callers building batteries.
pub fn curve_names(h: usize, n: usize) -> (Vec<String>, Vec<String>, Vec<String>) {
    (
        (1..=2 * h).map(chain_name).collect(),
        (1..=2 * n - 1).map(c_name).collect(),
        (0..=2 * h).map(d_name).collect(),
    )
}
