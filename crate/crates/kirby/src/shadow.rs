//! The diagram: active dotted arcs and leveled 2-handles.

use std::fmt;

use fibration::{AbelianGroup, Base, Factorization};
use serde::{Deserialize, Serialize};
use surface_model::word::{cyclic_reduce, generator_name, handle_of, inverse, rotate, to_generators};
use surface_model::{dual_arc_label, Letter, SurfaceModel, Word};

use crate::KirbyError;

/// Label of the 2-handle attached along the boundary of the fiber.
pub const BOUNDARY_LABEL: &str = "bd";

/// A 2-handle with its attaching word in the generators dual to the dotted
/// arcs. `curve` names the vanishing cycle while the handle is still attached
/// along a curve of the fiber; slides replace it by a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHandle {
    pub label: String,
    pub level: i64,
    pub word: Word,
    pub curve: Option<String>,
}

/// Band for a slide: the moving word is cut before its letter `moving_at`, the
/// other word (inverted when `sign` is `-1`) before its letter `over_at`, and
/// the two are joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Band {
    pub moving_at: usize,
    pub over_at: usize,
    pub sign: i32,
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {:+})", self.moving_at, self.over_at, self.sign)
    }
}

/// Generators and relators read off the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationShadow {
    pub generators: Vec<usize>,
    pub relators: Vec<(String, Word)>,
}

impl PresentationShadow {
    /// Abelianization of the presentation.
    pub fn h1(&self) -> AbelianGroup {
        let col = |h: usize| self.generators.iter().position(|&g| g == h);
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|(_, w)| {
                let mut r = vec![0; self.generators.len()];
                for &l in w {
                    if let Some(c) = col(handle_of(l)) {
                        r[c] += i64::from(l.signum());
                    }
                }
                r
            })
            .collect();
        AbelianGroup::from_relations(self.generators.len(), &rows)
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|&h| generator_name(h)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KirbyShadow {
    genus: usize,
    active: Vec<usize>,
    handles: Vec<TwoHandle>,
}

/// Occurrences of handle `h` in a word.
pub fn passages_through(w: &[Letter], h: usize) -> usize {
    w.iter().filter(|&&l| handle_of(l) == h).count()
}

fn substitute(w: &[Letter], h: usize, rep: &[Letter]) -> Word {
    let inv = inverse(rep);
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if handle_of(l) != h {
            out.push(l);
        } else if l > 0 {
            out.extend_from_slice(rep);
        } else {
            out.extend_from_slice(&inv);
        }
    }
    cyclic_reduce(&out)
}

/// Joins two cyclic words along a band.
pub fn band_sum(moving: &[Letter], over: &[Letter], band: Band) -> Result<Word, KirbyError> {
    if band.moving_at >= moving.len().max(1) || band.over_at >= over.len().max(1) || band.sign.abs() != 1 {
        return Err(KirbyError::BadBand(band.to_string()));
    }
    let o = if band.sign > 0 { over.to_vec() } else { inverse(over) };
    let mut w = rotate(moving, band.moving_at);
    w.extend(rotate(&o, band.over_at));
    Ok(cyclic_reduce(&w))
}

/// The band giving the shortest reduced sum; ties go to the first band in
/// the order (sign `+1` first, then cut points ascending).
pub fn shortest_band(moving: &[Letter], over: &[Letter]) -> (Band, Word) {
    let mut best: Option<(Band, Word)> = None;
    for sign in [1, -1] {
        for moving_at in 0..moving.len().max(1) {
            for over_at in 0..over.len().max(1) {
                let band = Band { moving_at, over_at, sign };
                let w = band_sum(moving, over, band).expect("band within range");
                if best.as_ref().is_none_or(|(_, b)| w.len() < b.len()) {
                    best = Some((band, w));
                }
            }
        }
    }
    best.expect("at least one band")
}

impl KirbyShadow {
    /// A diagram from attaching words over the generators of `Σ_g`, with all
    /// `2g` dotted arcs active. Words are kept as given until [`KirbyShadow::reduce`].
    pub fn from_words(genus: usize, handles: Vec<TwoHandle>) -> Result<Self, KirbyError> {
        let mut handles = handles;
        handles.sort_by_key(|h| h.level);
        for (i, h) in handles.iter().enumerate() {
            if handles[..i].iter().any(|o| o.label == h.label) {
                return Err(KirbyError::DuplicateLabel(h.label.clone()));
            }
            if handles[..i].iter().any(|o| o.level == h.level) {
                return Err(KirbyError::Format(format!("level {} is used twice", h.level)));
            }
            if h.word.iter().any(|&l| l == 0 || handle_of(l) > 2 * genus) {
                return Err(KirbyError::Format(format!("word of `{}` leaves the surface", h.label)));
            }
        }
        Ok(KirbyShadow { genus, active: (1..=2 * genus).collect(), handles })
    }

    /// Restores a diagram with a given set of active dotted arcs.
    pub fn with_active(genus: usize, active: Vec<usize>, handles: Vec<TwoHandle>) -> Result<Self, KirbyError> {
        let mut k = KirbyShadow::from_words(genus, handles)?;
        if active.iter().any(|&h| h == 0 || h > 2 * genus) {
            return Err(KirbyError::Format("active handle out of range".into()));
        }
        let mut active = active;
        active.sort_unstable();
        active.dedup();
        k.active = active;
        Ok(k)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Active dotted arcs as handle indices.
    pub fn active(&self) -> &[usize] {
        &self.active
    }

    pub fn active_labels(&self) -> Vec<String> {
        self.active.iter().map(|&h| dual_arc_label(h)).collect()
    }

    /// 2-handles from the lowest level up.
    pub fn handles(&self) -> &[TwoHandle] {
        &self.handles
    }

    pub fn handle(&self, label: &str) -> Result<&TwoHandle, KirbyError> {
        self.handles.iter().find(|h| h.label == label).ok_or_else(|| KirbyError::UnknownHandle(label.to_string()))
    }

    pub fn one_handle_count(&self) -> usize {
        self.active.len()
    }

    pub fn two_handle_count(&self) -> usize {
        self.handles.len()
    }

    /// `1 - #(1-handles) + #(2-handles)`.
    pub fn euler(&self) -> i64 {
        1 - self.active.len() as i64 + self.handles.len() as i64
    }

    pub fn presentation(&self) -> PresentationShadow {
        PresentationShadow {
            generators: self.active.clone(),
            relators: self.handles.iter().map(|h| (h.label.clone(), h.word.clone())).collect(),
        }
    }

    pub fn h1(&self) -> AbelianGroup {
        self.presentation().h1()
    }

    /// Cyclic reduction of every attaching word: removes the bigons between a
    /// word and the dotted arcs.
    pub fn reduce(&self) -> KirbyShadow {
        let mut k = self.clone();
        for h in &mut k.handles {
            h.word = cyclic_reduce(&h.word);
        }
        k
    }

    /// Slides `moving` over `over` along `band`, or along the shortest band.
    /// The moving handle keeps its level and is renamed `result`.
    pub fn handle_slide(
        &self,
        moving: &str,
        over: &str,
        result: &str,
        band: Option<Band>,
    ) -> Result<(KirbyShadow, Band), KirbyError> {
        if moving == over {
            return Err(KirbyError::SelfSlide(moving.to_string()));
        }
        let m = self.handle(moving)?;
        let o = self.handle(over)?;
        if result != moving && self.handle(result).is_ok() {
            return Err(KirbyError::DuplicateLabel(result.to_string()));
        }
        let (band, word) = match band {
            Some(b) => (b, band_sum(&m.word, &o.word, b)?),
            None => shortest_band(&m.word, &o.word),
        };
        let mut k = self.clone();
        let h = k.handles.iter_mut().find(|h| h.label == moving).expect("checked above");
        h.label = result.to_string();
        h.word = word;
        h.curve = None;
        Ok((k, band))
    }

    /// Pairs (dotted arc, 2-handle) whose word passes the arc exactly once.
    pub fn find_canceling_pairs(&self) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        for h in &self.handles {
            for &a in &self.active {
                if passages_through(&h.word, a) == 1 {
                    out.push((a, h.label.clone()));
                }
            }
        }
        out
    }

    /// Removes a canceling pair; every other passage through the arc is
    /// rerouted along the rest of the canceled handle's word.
    pub fn cancel(&self, one: usize, two: &str) -> Result<KirbyShadow, KirbyError> {
        if !self.active.contains(&one) {
            return Err(KirbyError::UnknownOneHandle(dual_arc_label(one)));
        }
        let h = self.handle(two)?;
        let count = passages_through(&h.word, one);
        if count != 1 {
            return Err(KirbyError::NotCancelable { one: dual_arc_label(one), two: two.to_string(), count });
        }
        let p = h.word.iter().position(|&l| handle_of(l) == one).expect("counted once");
        let r = rotate(&h.word, p);
        // r = x·rest or x^{-1}·rest, so x = rest^{-1} or x = rest.
        let rep = if r[0] > 0 { inverse(&r[1..]) } else { r[1..].to_vec() };
        let mut k = self.clone();
        k.handles.retain(|o| o.label != two);
        for o in &mut k.handles {
            if passages_through(&o.word, one) > 0 {
                o.word = substitute(&o.word, one, &rep);
                o.curve = None;
            }
        }
        k.active.retain(|&a| a != one);
        Ok(k)
    }
}

/// The diagram of a fibration over the disk: all dotted arcs, the boundary
/// handle at level 0 and the vanishing cycles at levels `1..=m` in the order
/// they act.
pub fn build_kirby(f: &Factorization) -> Result<KirbyShadow, KirbyError> {
    if f.base() != Base::Disk {
        return Err(KirbyError::DiskBaseRequired);
    }
    let surface: &SurfaceModel = f.arrangement().surface();
    let mut handles = vec![TwoHandle {
        label: BOUNDARY_LABEL.to_string(),
        level: 0,
        word: to_generators(&surface.boundary_word()),
        curve: None,
    }];
    for (i, name) in f.cycles().into_iter().enumerate() {
        handles.push(TwoHandle {
            label: name.to_string(),
            level: i as i64 + 1,
            word: to_generators(&cyclic_reduce(f.arrangement().passages(name)?)),
            curve: Some(name.to_string()),
        });
    }
    KirbyShadow::from_words(surface.genus(), handles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handle(label: &str, level: i64, word: Word) -> TwoHandle {
        TwoHandle { label: label.into(), level, word, curve: None }
    }

    fn torus_diagram(extra: Vec<TwoHandle>) -> KirbyShadow {
        let mut hs = vec![handle(BOUNDARY_LABEL, 0, vec![1, 2, -1, -2])];
        hs.extend(extra);
        KirbyShadow::from_words(1, hs).unwrap()
    }

    #[test]
    fn product_diagram() {
        let k = torus_diagram(vec![]);
        assert_eq!(k.one_handle_count(), 2);
        assert_eq!(k.h1().to_string(), "Z^2");
        assert_eq!(k.euler(), 0);
        assert!(k.find_canceling_pairs().is_empty());
    }

    #[test]
    fn single_passage_cancels() {
        let k = torus_diagram(vec![handle("h", 1, vec![1])]);
        assert_eq!(k.find_canceling_pairs(), vec![(1, "h".to_string())]);
        let c = k.cancel(1, "h").unwrap();
        assert_eq!(c.one_handle_count(), 1);
        assert_eq!(c.euler(), k.euler());
        assert_eq!(c.h1(), k.h1());
        assert_eq!(c.handle(BOUNDARY_LABEL).unwrap().word, Vec::<Letter>::new());
    }

    #[test]
    fn bigon_hides_a_canceling_pair() {
        let k = torus_diagram(vec![handle("h", 1, vec![2, 1, -2, 2])]);
        assert!(!k.find_canceling_pairs().contains(&(2, "h".to_string())));
        let r = k.reduce();
        assert!(r.find_canceling_pairs().contains(&(2, "h".to_string())));
        assert!(matches!(k.cancel(2, "h"), Err(KirbyError::NotCancelable { count: 3, .. })));
    }

    #[test]
    fn slide_keeps_invariants() {
        let k = torus_diagram(vec![handle("u", 1, vec![1, 2]), handle("v", 2, vec![2])]);
        let (s, band) = k.handle_slide("u", "v", "w", None).unwrap();
        assert_eq!(s.handle("w").unwrap().word.len(), 1);
        assert_eq!(band.sign, -1);
        assert_eq!(s.h1(), k.h1());
        assert_eq!(s.euler(), k.euler());
        assert!(k.handle_slide("u", "u", "w", None).is_err());
        assert!(k.handle_slide("u", "v", "v", None).is_err());
        let explicit = k.handle_slide("u", "v", "w", Some(band)).unwrap();
        assert_eq!(explicit.0, s);
    }

    #[test]
    fn levels_and_labels_are_distinct() {
        assert!(KirbyShadow::from_words(1, vec![handle("a", 0, vec![1]), handle("a", 1, vec![2])]).is_err());
        assert!(KirbyShadow::from_words(1, vec![handle("a", 0, vec![1]), handle("b", 0, vec![2])]).is_err());
        assert!(KirbyShadow::from_words(1, vec![handle("a", 0, vec![3])]).is_err());
    }
}
