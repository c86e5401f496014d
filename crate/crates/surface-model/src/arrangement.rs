//! Curves drawn on the ribbon model.
//!
//! A curve is a cyclic passage word. Inside a handle all strands run parallel
//! in a fixed left-to-right order (left as seen looking along the positive
//! direction of the handle). In the base disk `P` every vertex of a curve, the
//! gap between two consecutive passages, is a chord joining two slot points on
//! `∂P`; two curves cross exactly where their chords interleave.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::homology::HomologyClass;
use crate::surface::SurfaceModel;
use crate::word::{
    abelianize, canonical, cyclic_reduce, handle_of, inverse, to_generators, Letter, Word,
};
use crate::SurfaceError;

/// A named closed curve given by its cyclic passage word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub passages: Word,
}

impl Curve {
    pub fn new(name: impl Into<String>, passages: Word) -> Self {
        Curve { name: name.into(), passages }
    }
}

/// Passage `index` of curve number `curve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub curve: usize,
    pub index: usize,
}

/// First violated invariant found by [`Arrangement::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A passage letter names no handle of the surface.
    BadLetter { curve: String, index: usize, letter: Letter },
    /// A handle's strand order is not a permutation of its passages.
    StrandOrder { handle: usize, detail: String },
    /// Two chords of the same curve interleave: the curve is not embedded.
    SelfCrossing { curve: String, first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadLetter { curve, index, letter } => {
                write!(f, "curve {curve}: passage {index} has invalid letter {letter}")
            }
            Violation::StrandOrder { handle, detail } => {
                write!(f, "handle H{handle}: {detail}")
            }
            Violation::SelfCrossing { curve, first, second } => write!(
                f,
                "curve {curve} is not embedded: chords at vertices {first} and {second} interleave"
            ),
        }
    }
}

/// Outcome of validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// A multicurve on Σ_g minus a disk with its strand orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    surface: SurfaceModel,
    curves: Vec<Curve>,
    bands: Vec<Vec<Strand>>,
    slots: Vec<Vec<usize>>,
}

/// Counterclockwise distance from `a` to `b` on a circle of `n` points.
pub fn ccw_distance(n: usize, a: usize, b: usize) -> usize {
    (b + n - a) % n
}

/// Whether chords `(a, b)` and `(c, d)` interleave on a circle of `n` points.
pub fn chords_cross(n: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let span = ccw_distance(n, a, b);
    (ccw_distance(n, a, c) < span) != (ccw_distance(n, a, d) < span)
}

fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

/// Default strand order. Two strands of one handle are compared by the
/// passage sequences they continue into, read in the handle's positive
/// direction: first the past, then the future. At the first disagreement the
/// two continuations leave along different end-intervals, and their
/// counterclockwise order seen from the common previous interval decides
/// which strand is left. Identical sequences only occur for parallel copies,
/// which are stacked by curve number on a fixed side of the curve.
///
/// Each letter is replaced by its counterclockwise rank as seen from its
/// predecessor, so that the geometric comparison becomes a lexicographic one;
/// all cyclic windows are then ranked at once by prefix doubling.
struct StrandRanks {
    backward: Vec<[Vec<u32>; 2]>,
    forward: Vec<[Vec<u32>; 2]>,
    flipped: Vec<Vec<bool>>,
}

fn ccw_rank(surface: &SurfaceModel, from: Letter, to: Letter) -> u32 {
    let n = surface.ends();
    ((surface.position(to) + n - surface.position(from)) % n) as u32
}

/// Rank of every cyclic window of length at least `window` in every sequence.
fn window_ranks(seqs: &[Vec<u32>], window: usize) -> Vec<Vec<u32>> {
    let mut rank: Vec<Vec<u32>> = seqs.to_vec();
    let mut len = 1;
    let mut keys: Vec<(u64, usize, usize)> = Vec::new();
    while len < window {
        keys.clear();
        for (s, r) in rank.iter().enumerate() {
            let n = r.len();
            for p in 0..n {
                keys.push(((u64::from(r[p]) << 32) | u64::from(r[(p + len) % n]), s, p));
            }
        }
        keys.sort_unstable();
        let mut next: Vec<Vec<u32>> = rank.iter().map(|r| vec![0; r.len()]).collect();
        let mut current = 0u32;
        for (k, &(key, s, p)) in keys.iter().enumerate() {
            if k > 0 && key != keys[k - 1].0 {
                current += 1;
            }
            next[s][p] = current;
        }
        rank = next;
        len *= 2;
    }
    rank
}

impl StrandRanks {
    fn new(surface: &SurfaceModel, words: &[&[Letter]]) -> Self {
        let max_len = words.iter().map(|w| w.len()).max().unwrap_or(0);
        let mut fseq = Vec::new();
        let mut bseq = Vec::new();
        for w in words {
            for u in [w.to_vec(), inverse(w)] {
                let n = u.len();
                fseq.push((0..n).map(|p| ccw_rank(surface, -u[(p + n - 1) % n], u[p])).collect());
                let b: Vec<u32> = (0..n).map(|p| ccw_rank(surface, u[(p + 1) % n], -u[p])).collect();
                bseq.push(b.into_iter().rev().collect());
            }
        }
        let window = 2 * max_len + 2;
        let f = window_ranks(&fseq, window);
        let b = window_ranks(&bseq, window);
        let mut forward = Vec::with_capacity(words.len());
        let mut backward = Vec::with_capacity(words.len());
        let mut fi = f.into_iter();
        let mut bi = b.into_iter();
        for _ in words {
            let (f0, f1) = (fi.next().unwrap_or_default(), fi.next().unwrap_or_default());
            let (b0, b1) = (bi.next().unwrap_or_default(), bi.next().unwrap_or_default());
            forward.push([f0, f1]);
            backward.push([b0, b1]);
        }
        let flipped = words.iter().map(|w| w.iter().map(|&l| l < 0).collect()).collect();
        StrandRanks { backward, forward, flipped }
    }

    fn flipped(&self, s: Strand) -> bool {
        self.flipped[s.curve][s.index]
    }

    /// Ranks of the past and the future of a strand in its handle's direction.
    fn key(&self, s: Strand) -> (u32, u32) {
        let n = self.flipped[s.curve].len();
        let (side, i) = if self.flipped(s) { (1, n - 1 - s.index) } else { (0, s.index) };
        let b = self.backward[s.curve][side][(n - i) % n];
        let f = self.forward[s.curve][side][(i + 1) % n];
        (b, f)
    }

    /// `Less` means `a` is left of `b`.
    fn compare(&self, a: Strand, b: Strand) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let (ka, kb) = (self.key(a), self.key(b));
        let r = ka.0.cmp(&kb.0).then(kb.1.cmp(&ka.1));
        if r != Ordering::Equal {
            return r;
        }
        let low = a.min(b);
        let low_left = !self.flipped(low);
        if (a == low) == low_left {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

fn check_letters(surface: &SurfaceModel, curves: &[Curve]) -> Result<(), SurfaceError> {
    let mut names = HashSet::new();
    for c in curves {
        if !names.insert(c.name.as_str()) {
            return Err(SurfaceError::DuplicateCurve(c.name.clone()));
        }
        if c.name.is_empty() || c.name.chars().any(|ch| ch.is_whitespace() || ch == '.') {
            return Err(SurfaceError::InvalidParameter(format!(
                "curve name `{}` must be nonempty without whitespace or dots",
                c.name
            )));
        }
        for &l in &c.passages {
            if l == 0 || handle_of(l) > surface.handle_count() {
                return Err(SurfaceError::InvalidParameter(format!(
                    "curve {}: letter {l} names no handle",
                    c.name
                )));
            }
        }
    }
    Ok(())
}

fn default_bands(surface: &SurfaceModel, curves: &[Curve]) -> Vec<Vec<Strand>> {
    let words: Vec<&[Letter]> = curves.iter().map(|c| c.passages.as_slice()).collect();
    let cmp = StrandRanks::new(surface, &words);
    let mut bands = vec![Vec::new(); surface.handle_count()];
    for (ci, c) in curves.iter().enumerate() {
        for (i, &l) in c.passages.iter().enumerate() {
            bands[handle_of(l) - 1].push(Strand { curve: ci, index: i });
        }
    }
    for b in &mut bands {
        b.sort_by(|&x, &y| cmp.compare(x, y));
    }
    bands
}

/// Indices kept by cyclic reduction of `w`.
fn cyclic_reduce_indices(w: &[Letter]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(w.len());
    for (i, &l) in w.iter().enumerate() {
        if stack.last().is_some_and(|&j| w[j] == -l) {
            stack.pop();
        } else {
            stack.push(i);
        }
    }
    let (mut lo, mut hi) = (0, stack.len());
    while hi - lo > 1 && w[stack[lo]] == -w[stack[hi - 1]] {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

impl Arrangement {
    /// Arrangement without curves.
    pub fn empty(surface: SurfaceModel) -> Self {
        let bands = vec![Vec::new(); surface.handle_count()];
        Arrangement { surface, curves: Vec::new(), bands, slots: Vec::new() }
    }

    /// Curves laid out in the default strand order.
    pub fn from_curves(surface: SurfaceModel, curves: Vec<Curve>) -> Result<Self, SurfaceError> {
        check_letters(&surface, &curves)?;
        let bands = default_bands(&surface, &curves);
        Ok(Self::assemble(surface, curves, bands))
    }

    /// Curves with explicit strand orders, `bands[k-1]` listing the strands of
    /// `H_k` from left to right.
    pub fn with_orders(
        surface: SurfaceModel,
        curves: Vec<Curve>,
        bands: Vec<Vec<Strand>>,
    ) -> Result<Self, SurfaceError> {
        check_letters(&surface, &curves)?;
        if bands.len() != surface.handle_count() {
            return Err(SurfaceError::InvalidOrder(format!(
                "{} strand orders for {} handles",
                bands.len(),
                surface.handle_count()
            )));
        }
        let mut seen: Vec<Vec<bool>> = curves.iter().map(|c| vec![false; c.passages.len()]).collect();
        for (k, band) in bands.iter().enumerate() {
            for s in band {
                let ok = curves
                    .get(s.curve)
                    .and_then(|c| c.passages.get(s.index))
                    .is_some_and(|&l| handle_of(l) == k + 1);
                if !ok || seen[s.curve][s.index] {
                    return Err(SurfaceError::InvalidOrder(format!(
                        "handle H{}: strand {}.{} does not belong there or repeats",
                        k + 1,
                        curves.get(s.curve).map_or("?", |c| c.name.as_str()),
                        s.index
                    )));
                }
                seen[s.curve][s.index] = true;
            }
        }
        for (ci, row) in seen.iter().enumerate() {
            if let Some(i) = row.iter().position(|&b| !b) {
                return Err(SurfaceError::InvalidOrder(format!(
                    "strand {}.{i} is missing from the order of H{}",
                    curves[ci].name,
                    handle_of(curves[ci].passages[i])
                )));
            }
        }
        Ok(Self::assemble(surface, curves, bands))
    }

    fn assemble(surface: SurfaceModel, curves: Vec<Curve>, bands: Vec<Vec<Strand>>) -> Self {
        let mut slots: Vec<Vec<usize>> = curves.iter().map(|c| vec![0; c.passages.len()]).collect();
        for band in &bands {
            for (s, st) in band.iter().enumerate() {
                slots[st.curve][st.index] = s;
            }
        }
        Arrangement { surface, curves, bands, slots }
    }

    pub fn surface(&self) -> &SurfaceModel {
        &self.surface
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.curves.iter().map(|c| c.name.as_str())
    }

    /// Strand order of handle `H_k`, left to right.
    pub fn band(&self, k: usize) -> &[Strand] {
        &self.bands[k - 1]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, SurfaceError> {
        self.curves
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| SurfaceError::UnknownCurve(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.curves.iter().any(|c| c.name == name)
    }

    pub fn curve(&self, name: &str) -> Result<&Curve, SurfaceError> {
        Ok(&self.curves[self.index_of(name)?])
    }

    pub fn passages(&self, name: &str) -> Result<&[Letter], SurfaceError> {
        Ok(&self.curve(name)?.passages)
    }

    /// A new arrangement with `curve` added, laid out in default order.
    pub fn with_curve(&self, curve: Curve) -> Result<Self, SurfaceError> {
        let mut curves = self.curves.clone();
        curves.push(curve);
        Self::from_curves(self.surface.clone(), curves)
    }

    /// A new arrangement with several curves added or replaced by name,
    /// laid out in default order.
    pub fn with_curves(&self, new: Vec<Curve>) -> Result<Self, SurfaceError> {
        let mut curves = self.curves.clone();
        for c in new {
            match curves.iter_mut().find(|x| x.name == c.name) {
                Some(slot) => slot.passages = c.passages,
                None => curves.push(c),
            }
        }
        Self::from_curves(self.surface.clone(), curves)
    }

    /// Sub-arrangement on the named curves, in default order.
    pub fn restrict(&self, names: &[&str]) -> Result<Self, SurfaceError> {
        let mut curves = Vec::with_capacity(names.len());
        for n in names {
            curves.push(self.curve(n)?.clone());
        }
        Self::from_curves(self.surface.clone(), curves)
    }

    fn modulus(&self) -> usize {
        self.bands.iter().map(Vec::len).max().unwrap_or(0) + 1
    }

    /// Number of slot points of the chord circle.
    pub fn circle_size(&self) -> usize {
        self.surface.ends() * self.modulus()
    }

    fn endpoint(&self, curve: usize, index: usize, half_edge: Letter, modulus: usize) -> usize {
        let m = self.bands[handle_of(half_edge) - 1].len();
        let s = self.slots[curve][index];
        let t = if half_edge > 0 { m - 1 - s } else { s };
        self.surface.position(half_edge) * modulus + t
    }

    fn chord_with(&self, curve: usize, vertex: usize, modulus: usize) -> (usize, usize) {
        let u = &self.curves[curve].passages;
        let prev = (vertex + u.len() - 1) % u.len();
        (
            self.endpoint(curve, prev, -u[prev], modulus),
            self.endpoint(curve, vertex, u[vertex], modulus),
        )
    }

    /// Chord at vertex `vertex` of curve number `curve`: it joins the return of
    /// passage `vertex - 1` to the exit of passage `vertex`.
    pub fn chord(&self, curve: usize, vertex: usize) -> (usize, usize) {
        self.chord_with(curve, vertex, self.modulus())
    }

    /// All chords of curve number `curve`.
    pub fn chords(&self, curve: usize) -> Vec<(usize, usize)> {
        let m = self.modulus();
        (0..self.curves[curve].passages.len()).map(|v| self.chord_with(curve, v, m)).collect()
    }

    fn all_chords(&self) -> Vec<Vec<(usize, usize)>> {
        (0..self.curves.len()).map(|c| self.chords(c)).collect()
    }

    /// Interleaved chord pairs between curve numbers `a` and `b` in the current layout.
    pub fn crossings_between_indices(&self, a: usize, b: usize) -> usize {
        let n = self.circle_size();
        let ca = self.chords(a);
        let cb = self.chords(b);
        ca.iter().map(|&x| cb.iter().filter(|&&y| chords_cross(n, x, y)).count()).sum()
    }

    /// Interleaved chord pairs of different curves in the current layout.
    pub fn total_crossings(&self) -> usize {
        let n = self.circle_size();
        let all = self.all_chords();
        let mut t = 0;
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                for &x in &all[a] {
                    t += all[b].iter().filter(|&&y| chords_cross(n, x, y)).count();
                }
            }
        }
        t
    }

    /// A pair of interleaving chords of curve number `c`, if any.
    fn self_crossing(&self, c: usize) -> Option<(usize, usize)> {
        let n = self.circle_size();
        let ch = self.chords(c);
        let mut ends: Vec<(usize, usize)> = Vec::with_capacity(2 * ch.len());
        for (v, &(a, b)) in ch.iter().enumerate() {
            ends.push((a, v));
            ends.push((b, v));
        }
        ends.sort_unstable();
        let mut stack: Vec<usize> = Vec::new();
        let mut nested = true;
        for &(_, v) in &ends {
            if stack.last() == Some(&v) {
                stack.pop();
            } else if stack.contains(&v) {
                nested = false;
                break;
            } else {
                stack.push(v);
            }
        }
        if nested {
            return None;
        }
        for a in 0..ch.len() {
            for b in a + 1..ch.len() {
                if chords_cross(n, ch[a], ch[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Checks the arrangement invariants and reports the first violation.
    pub fn validate(&self) -> Verdict {
        for c in &self.curves {
            for (i, &l) in c.passages.iter().enumerate() {
                if l == 0 || handle_of(l) > self.surface.handle_count() {
                    return Verdict::Invalid(Violation::BadLetter {
                        curve: c.name.clone(),
                        index: i,
                        letter: l,
                    });
                }
            }
        }
        let mut count = vec![0usize; self.surface.handle_count()];
        for c in &self.curves {
            for &l in &c.passages {
                count[handle_of(l) - 1] += 1;
            }
        }
        for (k, band) in self.bands.iter().enumerate() {
            let distinct: HashSet<&Strand> = band.iter().collect();
            let fits = band.iter().all(|s| {
                self.curves
                    .get(s.curve)
                    .and_then(|c| c.passages.get(s.index))
                    .is_some_and(|&l| handle_of(l) == k + 1)
            });
            if !fits || distinct.len() != band.len() || band.len() != count[k] {
                return Verdict::Invalid(Violation::StrandOrder {
                    handle: k + 1,
                    detail: format!(
                        "{} ordered strands for {} passages",
                        band.len(),
                        count[k]
                    ),
                });
            }
        }
        for (ci, c) in self.curves.iter().enumerate() {
            if let Some((first, second)) = self.self_crossing(ci) {
                return Verdict::Invalid(Violation::SelfCrossing {
                    curve: c.name.clone(),
                    first,
                    second,
                });
            }
        }
        Verdict::Valid
    }

    /// Whether the named curve has no self-interleaving chords.
    pub fn is_embedded(&self, name: &str) -> Result<bool, SurfaceError> {
        let c = self.index_of(name)?;
        Ok(self.self_crossing(c).is_none())
    }

    /// Removes handle bigons while keeping the surviving strands in place.
    fn without_bigons(&self) -> Self {
        let mut keep: Vec<Vec<Option<usize>>> = Vec::with_capacity(self.curves.len());
        let mut curves = Vec::with_capacity(self.curves.len());
        for c in &self.curves {
            let idx = cyclic_reduce_indices(&c.passages);
            let mut map = vec![None; c.passages.len()];
            for (new, &old) in idx.iter().enumerate() {
                map[old] = Some(new);
            }
            keep.push(map);
            curves.push(Curve::new(c.name.clone(), idx.iter().map(|&i| c.passages[i]).collect()));
        }
        let bands = self
            .bands
            .iter()
            .map(|b| {
                b.iter()
                    .filter_map(|s| keep[s.curve][s.index].map(|i| Strand { curve: s.curve, index: i }))
                    .collect()
            })
            .collect();
        Self::assemble(self.surface.clone(), curves, bands)
    }

    /// Minimal position by local moves: handle bigons are removed, then strand
    /// swaps along parallel runs are applied while they lower the crossing
    /// count. Both the current layout and the default layout are driven to a
    /// fixpoint; the one with fewer crossings is returned, the current one on
    /// ties.
    pub fn reduce(&self) -> Self {
        let mut current = self.without_bigons();
        current.swap_fixpoint();
        let reduced: Vec<Curve> = current.curves.clone();
        let mut fresh = Self::assemble(
            self.surface.clone(),
            reduced.clone(),
            default_bands(&self.surface, &reduced),
        );
        if fresh.bands == current.bands {
            return current;
        }
        fresh.swap_fixpoint();
        if fresh.total_crossings() < current.total_crossings() {
            fresh
        } else {
            current
        }
    }

    /// Repeated passes over all adjacent strand pairs. A pair of strands of
    /// different curves is followed along its maximal parallel run; when two
    /// vertices of the run are crossings, exchanging the strands between them
    /// removes both crossings and changes nothing else, since the exchanged
    /// slot points are adjacent. Runs examined without success are skipped for
    /// the rest of the pass.
    fn swap_fixpoint(&mut self) {
        loop {
            let mut changed = false;
            let mut covered: HashSet<(Strand, Strand)> = HashSet::new();
            for k in 0..self.bands.len() {
                for s in 0..self.bands[k].len().saturating_sub(1) {
                    let (p, q) = (self.bands[k][s], self.bands[k][s + 1]);
                    if p.curve == q.curve || covered.contains(&(p, q)) {
                        continue;
                    }
                    let same = self.curves[p.curve].passages[p.index]
                        == self.curves[q.curve].passages[q.index];
                    let (run, closed) = self.run_from(p, q, same);
                    let last = if closed { run.len() - 1 } else { run.len() };
                    let mut xs = (0..=last).filter(|&t| self.vertex_crossing(&run, t, same));
                    match (xs.next(), xs.next()) {
                        (Some(a), Some(b)) => {
                            for &(x, y) in &run[a..b] {
                                self.swap_strands(x, y);
                            }
                            changed = true;
                        }
                        _ => covered.extend(run.iter().flat_map(|&(x, y)| [(x, y), (y, x)])),
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn swap_strands(&mut self, p: Strand, q: Strand) {
        let k = handle_of(self.curves[p.curve].passages[p.index]) - 1;
        let (a, b) = (self.slots[p.curve][p.index], self.slots[q.curve][q.index]);
        self.bands[k].swap(a, b);
        self.slots[p.curve][p.index] = b;
        self.slots[q.curve][q.index] = a;
    }

    /// Maximal parallel run through the adjacent strands `p`, `q`, and whether
    /// it closes up.
    fn run_from(&self, p: Strand, q: Strand, same: bool) -> (Vec<(Strand, Strand)>, bool) {
        let limit = self.curves[p.curve].passages.len() + self.curves[q.curve].passages.len();
        let next = |(a, b): (Strand, Strand), dir: isize| -> Option<(Strand, Strand)> {
            let u = &self.curves[a.curve].passages;
            let v = &self.curves[b.curve].passages;
            let i2 = wrap(a.index as isize + dir, u.len());
            let j2 = wrap(b.index as isize + if same { dir } else { -dir }, v.len());
            let parallel = if same { u[i2] == v[j2] } else { u[i2] == -v[j2] };
            if !parallel {
                return None;
            }
            let (sa, sb) = (self.slots[a.curve][i2], self.slots[b.curve][j2]);
            if sa.abs_diff(sb) != 1 {
                return None;
            }
            Some((Strand { curve: a.curve, index: i2 }, Strand { curve: b.curve, index: j2 }))
        };
        let mut run = vec![(p, q)];
        let mut seen: HashSet<(Strand, Strand)> = HashSet::new();
        seen.insert((p, q));
        let mut f = (p, q);
        while run.len() <= limit {
            match next(f, 1) {
                Some(x) if seen.insert(x) => {
                    run.push(x);
                    f = x;
                }
                Some(x) if x == (p, q) => return (run, true),
                _ => break,
            }
        }
        let mut b = (p, q);
        let mut front = Vec::new();
        while run.len() + front.len() <= limit {
            match next(b, -1) {
                Some(x) if seen.insert(x) => {
                    front.push(x);
                    b = x;
                }
                _ => break,
            }
        }
        front.reverse();
        front.extend(run);
        (front, false)
    }

    fn vertex_crossing(&self, run: &[(Strand, Strand)], t: usize, same: bool) -> bool {
        let n = self.circle_size();
        let m = self.modulus();
        let (a, b) = if t < run.len() { run[t] } else { run[run.len() - 1] };
        let nu = self.curves[a.curve].passages.len();
        let nv = self.curves[b.curve].passages.len();
        let (va, vb) = if t < run.len() {
            (a.index, if same { b.index } else { (b.index + 1) % nv })
        } else {
            ((a.index + 1) % nu, if same { (b.index + 1) % nv } else { b.index })
        };
        chords_cross(n, self.chord_with(a.curve, va, m), self.chord_with(b.curve, vb, m))
    }

    /// Geometric intersection number of two curves: interleavings left after
    /// reducing the two-curve sub-arrangement.
    pub fn geometric_intersection(&self, c: &str, d: &str) -> Result<usize, SurfaceError> {
        let (ci, di) = (self.index_of(c)?, self.index_of(d)?);
        if ci == di {
            return Ok(0);
        }
        Ok(intersection_number(&self.surface, &self.curves[ci].passages, &self.curves[di].passages))
    }

    /// Signed passage counts in the basis `([α_1], [β_1], ...)`.
    pub fn homology_class(&self, c: &str) -> Result<HomologyClass, SurfaceError> {
        Ok(class_of(&self.surface, self.passages(c)?))
    }

    /// Cyclically reduced generator word read off the dual arcs.
    pub fn crossing_word(&self, c: &str) -> Result<Word, SurfaceError> {
        Ok(to_generators(&cyclic_reduce(self.passages(c)?)))
    }

    /// Isotopy test: equal reduced cyclic words up to rotation and reversal,
    /// cross-checked by equal intersection numbers with every other curve.
    pub fn curves_equal(&self, c: &str, d: &str) -> Result<bool, SurfaceError> {
        let (ci, di) = (self.index_of(c)?, self.index_of(d)?);
        if ci == di {
            return Ok(true);
        }
        let (u, v) = (&self.curves[ci].passages, &self.curves[di].passages);
        if canonical(u) != canonical(v) {
            return Ok(false);
        }
        for (ei, e) in self.curves.iter().enumerate() {
            if ei == ci || ei == di {
                continue;
            }
            if intersection_number(&self.surface, u, &e.passages)
                != intersection_number(&self.surface, v, &e.passages)
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strand-order listing keyed by handle, as `(curve name, passage index)`.
    pub fn strand_names(&self, k: usize) -> Vec<(&str, usize)> {
        self.bands[k - 1]
            .iter()
            .map(|s| (self.curves[s.curve].name.as_str(), s.index))
            .collect()
    }

    /// Name lookup table.
    pub fn name_map(&self) -> HashMap<&str, usize> {
        self.curves.iter().enumerate().map(|(i, c)| (c.name.as_str(), i)).collect()
    }
}

/// Homology class of a passage word.
pub fn class_of(surface: &SurfaceModel, passages: &[Letter]) -> HomologyClass {
    HomologyClass(abelianize(&to_generators(passages), surface.genus()))
}

/// Geometric intersection number of two passage words.
pub fn intersection_number(surface: &SurfaceModel, u: &[Letter], v: &[Letter]) -> usize {
    let curves = vec![Curve::new("u", cyclic_reduce(u)), Curve::new("v", cyclic_reduce(v))];
    let bands = default_bands(surface, &curves);
    let mut a = Arrangement::assemble(surface.clone(), curves, bands);
    a.swap_fixpoint();
    a.crossings_between_indices(0, 1)
}

/// Whether a passage word is represented by a simple closed curve.
pub fn is_simple(surface: &SurfaceModel, w: &[Letter]) -> bool {
    let curves = vec![Curve::new("c", cyclic_reduce(w))];
    let bands = default_bands(surface, &curves);
    let a = Arrangement::assemble(surface.clone(), curves, bands);
    a.self_crossing(0).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_surface;

    /// Default strand order: strands are compared by the passage sequences they
    /// continue into, read in the handle's positive direction, past first and
    /// then future. Identical sequences only occur for parallel copies, which are
    /// stacked by curve number on a fixed side of the curve.
        struct Comparator<'a> {
        surface: &'a SurfaceModel,
        words: Vec<&'a [Letter]>,
        inverses: Vec<Word>,
    }
    
    impl<'a> Comparator<'a> {
        fn new(surface: &'a SurfaceModel, words: Vec<&'a [Letter]>) -> Self {
            let inverses = words.iter().map(|w| inverse(w)).collect();
            Comparator { surface, words, inverses }
        }
    
        fn flipped(&self, s: Strand) -> bool {
            self.words[s.curve][s.index] < 0
        }
    
        fn normalized(&self, s: Strand) -> (&[Letter], usize) {
            let w = self.words[s.curve];
            if self.flipped(s) {
                (&self.inverses[s.curve], w.len() - 1 - s.index)
            } else {
                (w, s.index)
            }
        }
    
        fn forward(&self, u: &[Letter], i: usize, v: &[Letter], j: usize) -> Ordering {
            let (nu, nv) = (u.len(), v.len());
            for t in 1..=nu + nv + 1 {
                let a = u[(i + t) % nu];
                let b = v[(j + t) % nv];
                if a != b {
                    let hin = -u[(i + t - 1) % nu];
                    return if self.surface.ccw_before(hin, b, a) {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        }
    
        fn backward(&self, u: &[Letter], i: usize, v: &[Letter], j: usize) -> Ordering {
            let (nu, nv) = (u.len(), v.len());
            for t in 1..=(nu + nv + 1) as isize {
                let a = u[wrap(i as isize - t, nu)];
                let b = v[wrap(j as isize - t, nv)];
                if a != b {
                    let o = u[wrap(i as isize - t + 1, nu)];
                    return if self.surface.ccw_before(o, -a, -b) {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                }
            }
            Ordering::Equal
        }
    
        /// `Less` means `a` is left of `b`.
        fn compare(&self, a: Strand, b: Strand) -> Ordering {
            if a == b {
                return Ordering::Equal;
            }
            let (u, i) = self.normalized(a);
            let (v, j) = self.normalized(b);
            let r = self.backward(u, i, v, j).then_with(|| self.forward(u, i, v, j));
            if r != Ordering::Equal {
                return r;
            }
            let low = a.min(b);
            let low_left = !self.flipped(low);
            if (a == low) == low_left {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
    }

    #[test]
    fn ranked_order_matches_direct_comparison() {
        let s = build_surface(2).unwrap();
        let words: Vec<Word> = vec![
            vec![1, 2, 3, -4, -3],
            vec![1, 2, 3, -4, -3],
            vec![2, 3, 2, 3, 1],
            vec![-1, -2, -1, -2, 4],
            vec![1, 1, 2, -3],
            vec![3, 2, 3, 2, 3, -1],
        ];
        let refs: Vec<&[Letter]> = words.iter().map(Vec::as_slice).collect();
        let direct = Comparator::new(&s, refs.clone());
        let ranked = StrandRanks::new(&s, &refs);
        let strands: Vec<Strand> = words
            .iter()
            .enumerate()
            .flat_map(|(c, w)| (0..w.len()).map(move |i| Strand { curve: c, index: i }))
            .collect();
        for &a in &strands {
            for &b in &strands {
                if handle_of(words[a.curve][a.index]) == handle_of(words[b.curve][b.index]) {
                    assert_eq!(direct.compare(a, b), ranked.compare(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    fn arr(g: i64, curves: &[(&str, &[Letter])]) -> Arrangement {
        let cs = curves.iter().map(|(n, w)| Curve::new(*n, w.to_vec())).collect();
        Arrangement::from_curves(build_surface(g).unwrap(), cs).unwrap()
    }

    #[test]
    fn empty_is_valid() {
        assert!(Arrangement::empty(build_surface(2).unwrap()).validate().is_valid());
    }

    #[test]
    fn non_simple_word_is_flagged() {
        let a = arr(2, &[("c", &[1, -3])]);
        match a.validate() {
            Verdict::Invalid(Violation::SelfCrossing { curve, .. }) => assert_eq!(curve, "c"),
            v => panic!("unexpected verdict {v:?}"),
        }
    }

    #[test]
    fn basis_curves_meet_once() {
        let a = arr(1, &[("a", &[1]), ("b", &[2])]);
        assert_eq!(a.geometric_intersection("a", "b").unwrap(), 1);
        assert_eq!(a.total_crossings(), 1);
    }

    #[test]
    fn bigon_is_removed() {
        let a = arr(2, &[("c", &[3, 1, -1, 2])]).reduce();
        assert_eq!(a.passages("c").unwrap(), &[3, 2]);
    }

    #[test]
    fn disjoint_curves_unchanged() {
        let a = arr(2, &[("a", &[1]), ("b", &[3])]);
        assert_eq!(a.reduce(), a);
    }

    #[test]
    fn parallel_copies_are_disjoint() {
        let w: &[Letter] = &[1, 2, 3, -4, -3];
        let a = arr(2, &[("c", w), ("d", w)]);
        assert_eq!(a.total_crossings(), 0);
    }

    #[test]
    fn chord_crossing_rule() {
        assert!(chords_cross(8, (0, 4), (2, 6)));
        assert!(!chords_cross(8, (0, 4), (1, 3)));
        assert!(!chords_cross(8, (0, 4), (5, 7)));
    }

    #[test]
    fn crossing_word_of_boundary_is_commutator_product() {
        let s = build_surface(2).unwrap();
        let a = arr(2, &[("d", &s.boundary_word())]);
        assert_eq!(a.crossing_word("d").unwrap(), vec![1, 2, -1, -2, 3, 4, -3, -4]);
        assert!(a.homology_class("d").unwrap().is_zero());
    }

    #[test]
    fn unknown_curve_errors() {
        let a = arr(1, &[("a", &[1])]);
        assert!(matches!(a.homology_class("z"), Err(SurfaceError::UnknownCurve(_))));
    }
}
