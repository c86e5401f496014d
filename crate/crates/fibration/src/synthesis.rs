//! Synthesis of the Gurtas curve configuration on the standard surface.
//!
//! The curves are first drawn on a symmetric one-vertex model of
//! `Σ_{2h+n-1}^1`: the standard genus-`2h` blocks with `2n-2` extra bands
//! inserted at the first gap and at its antipode. Rotation by half a turn is
//! an involution `ι` of this model, and every curve `D_j` is the lift
//! `w · (half of the boundary) · ι(w)^{-1}`. A Nielsen cut-and-paste carrying
//! the boundary word to the standard product of commutators then moves the
//! configuration onto the standard model.

use surface_model::word::{canonical, cyclic_reduce, free_reduce, inverse, to_generators, Letter, Word};
use surface_model::{Arrangement, Curve, SurfaceModel};

use crate::FibrationError;

/// Curve names of the configuration at `(h, n)`.
pub fn chain_name(k: usize) -> String {
    format!("a{k}")
}

pub fn c_name(k: usize) -> String {
    format!("c{k}")
}

pub fn d_name(j: usize) -> String {
    format!("D{j}")
}

/// Genus of the fiber, `2h + n - 1`.
pub fn fiber_genus(h: usize, n: usize) -> usize {
    2 * h + n - 1
}

pub(crate) fn check_parameters(h: usize, n: usize) -> Result<(), FibrationError> {
    if h == 0 || n == 0 {
        return Err(FibrationError::InvalidParameter(format!("h={h}, n={n}: both must be positive")));
    }
    Ok(())
}

struct Symmetric {
    surface: SurfaceModel,
    h: i32,
}

impl Symmetric {
    fn new(h: usize, n: usize) -> Result<Self, FibrationError> {
        let std = SurfaceModel::standard(2 * h)?.order().to_vec();
        let middle: Vec<Letter> = (1..=(2 * n - 2) as i32).map(|k| 4 * h as i32 + k).collect();
        let mut first = middle.clone();
        first.extend_from_slice(&std);
        let antipode = 4 * h + middle.len();
        let mut order = first[..antipode].to_vec();
        order.extend(middle.iter().map(|m| -m));
        order.extend_from_slice(&first[antipode..]);
        Ok(Symmetric { surface: SurfaceModel::from_order(order)?, h: h as i32 })
    }

    /// The half-turn `ι`: block `i` goes to block `i + h`, middle bands are reversed.
    fn involution(&self, w: &[Letter]) -> Word {
        let h = self.h;
        w.iter()
            .map(|&l| {
                let (a, s) = (l.abs(), l.signum());
                if a <= 4 * h {
                    let i = (a + 1) / 2;
                    let kind = a - 2 * (i - 1);
                    let j = (i - 1 + h) % (2 * h) + 1;
                    s * (2 * (j - 1) + kind)
                } else {
                    -s * a
                }
            })
            .collect()
    }

    /// `w · (half of the boundary starting at offset t) · ι(w)^{-1}`.
    fn lift(&self, face: &[Letter], w: &[Letter], t: usize) -> Word {
        let n = face.len();
        let mut out = w.to_vec();
        out.extend((0..n / 2).map(|k| face[(t + k) % n]));
        out.extend(inverse(&self.involution(w)));
        canonical(&cyclic_reduce(&out))
    }
}

/// Handle paths `w` and boundary offsets `t` of the lifts `D_0, …, D_{2h}`.
fn d_lifts(h: usize) -> Vec<(Word, usize)> {
    if h == 1 {
        return vec![(vec![-2], 0), (vec![-2], 1), (vec![], 1)];
    }
    let path = |k: usize| -> Word { (k..=h).rev().map(|i| -2 * i as i32).collect() };
    let mut p1 = path(2);
    p1.push(1);
    let mut s = vec![(path(2), 3), (p1.clone(), 3), (p1, 4), (path(2), 5)];
    for k in 3..=h {
        s.push((path(k), 4 * (k - 2) + 1));
        s.push((path(k), 4 * (k - 1) + 1));
    }
    s.push((vec![], 4 * (h - 1) + 1));
    s
}

/// The chain `a_1, …, a_{2h}` with consecutive curves meeting once.
fn chain(h: usize) -> Vec<Word> {
    let mut a = vec![vec![1], vec![2]];
    for i in 2..=h as i32 {
        let odd = if i == 2 {
            vec![-3, -1]
        } else {
            vec![-(2 * i - 1), -(2 * i - 2), 2 * i - 3, 2 * i - 2]
        };
        a.push(odd);
        a.push(vec![2 * i]);
    }
    a
}

fn substitute(words: &mut [Word], a: Letter, rep: &[Letter]) {
    let rep_inv = inverse(rep);
    for w in words.iter_mut() {
        let mut out = Vec::with_capacity(w.len());
        for &l in w.iter() {
            if l == a {
                out.extend_from_slice(rep);
            } else if l == -a {
                out.extend_from_slice(&rep_inv);
            } else {
                out.push(l);
            }
        }
        *w = free_reduce(&out);
    }
}

fn find(w: &[Letter], l: Letter) -> usize {
    w.iter().position(|&x| x == l).expect("boundary word uses every end once")
}

/// Carries `curves` along a free-group automorphism taking the boundary word
/// `face` to `∏ [x_i, y_i]` in standard passage letters.
fn normalize(face: &[Letter], curves: &[Word]) -> Vec<Word> {
    // words[0] is the boundary, the rest are the curves.
    let mut words: Vec<Word> = std::iter::once(face.to_vec()).chain(curves.iter().cloned()).collect();
    let mut blocks: Vec<(Letter, Letter)> = Vec::new();
    while !words[0].is_empty() {
        let u = words[0].clone();
        let (i, k, j) = (0..u.len())
            .find_map(|i| {
                let j = find(&u, -u[i]);
                if j < i {
                    return None;
                }
                (i + 1..j).find(|&k| u[j + 1..].contains(&-u[k])).map(|k| (i, k, j))
            })
            .expect("a one-boundary surface has an interleaved pair");
        let (al, be) = (u[i], u[k]);
        let k2 = find(&u, -be);
        let (y, z, u2, v) = (&u[i + 1..k], &u[k + 1..j], &u[j + 1..k2], &u[k2 + 1..]);
        let mut rep = vec![al];
        rep.extend(inverse(y));
        substitute(&mut words, al, &rep);
        let mut rep = vec![be];
        rep.extend(inverse(y));
        rep.extend(inverse(z));
        substitute(&mut words, be, &rep);
        let mut r: Word = u2.to_vec();
        r.extend_from_slice(z);
        r.extend_from_slice(y);
        let mut rep = r.clone();
        rep.push(-al);
        substitute(&mut words, al, &rep);
        let mut expected = u[..i].to_vec();
        expected.extend_from_slice(&r);
        expected.extend([-al, be, al, -be]);
        expected.extend_from_slice(v);
        assert_eq!(words[0], expected, "cut-and-paste step");
        for &l in v {
            for zz in [al, be] {
                substitute(&mut words, zz, &[l, zz, -l]);
            }
        }
        let n = words[0].len();
        assert_eq!(words[0][n - 4..], [-al, be, al, -be], "commutator split");
        words[0].truncate(n - 4);
        blocks.insert(0, (-al, -be));
    }
    let mut rename = vec![0; 2 * blocks.len() + 1];
    for (b, &(x, y)) in blocks.iter().enumerate() {
        let b = b as i32;
        rename[x.unsigned_abs() as usize] = (2 * b + 1) * x.signum();
        rename[y.unsigned_abs() as usize] = (2 * b + 2) * y.signum();
    }
    words[1..]
        .iter()
        .map(|w| cyclic_reduce(&w.iter().map(|&l| rename[l.unsigned_abs() as usize] * l.signum()).collect::<Word>()))
        .collect()
}

/// Renumbers genus blocks so that block `first` becomes the first one. On the
/// standard model this is a rotation of the base disk.
fn rotate_blocks(w: &[Letter], first: usize, genus: usize) -> Word {
    w.iter()
        .map(|&l| {
            let k = l.unsigned_abs() as usize - 1;
            let block = (k / 2 + genus - first) % genus;
            (2 * block + k % 2 + 1) as Letter * l.signum()
        })
        .collect()
}

/// Moves the `h` blocks after the `n - 1` middle blocks in front of them, so
/// the order becomes chain, mirror, middle. With `C` the product of the
/// middle commutators, `C · [mirror] = [mirror'] · C` for the generators
/// `x' = C x C^{-1}`; substituting `x ↦ C^{-1} x C` fixes the boundary word.
fn mirror_before_middle(w: &[Letter], h: usize, n: usize) -> Word {
    let genus = fiber_genus(h, n);
    let middle = h..h + n - 1;
    let block = |l: Letter| (l.unsigned_abs() as usize - 1) / 2;
    let c: Word = middle
        .clone()
        .flat_map(|b| {
            let (x, y) = (2 * b as Letter + 1, 2 * b as Letter + 2);
            [x, y, -x, -y]
        })
        .collect();
    let mut out = Vec::new();
    for &l in &to_generators(w) {
        if block(l) >= middle.end {
            out.extend(inverse(&c));
            out.push(l);
            out.extend(c.iter().copied());
        } else {
            out.push(l);
        }
    }
    let relabeled: Word = free_reduce(&out)
        .into_iter()
        .map(|l| {
            let b = block(l);
            let nb = if middle.contains(&b) { b + h } else if b >= middle.end { b + 1 - n } else { b };
            debug_assert!(nb < genus);
            l.signum() * (2 * nb as Letter + 1 + ((l.unsigned_abs() as Letter - 1) % 2))
        })
        .collect();
    cyclic_reduce(&to_generators(&relabeled))
}

/// The configuration `a_1…a_{2h}`, `c_1…c_{2n-1}`, `D_0…D_{2h}` on the
/// standard model of genus `2h + n - 1`, in reduced position.
pub fn synthesize(h: usize, n: usize) -> Result<Arrangement, FibrationError> {
    check_parameters(h, n)?;
    let model = Symmetric::new(h, n)?;
    let old_face = SurfaceModel::standard(2 * h)?.boundary_word();
    let face = model.surface.boundary_word();
    let at = |t: usize| find(&face, old_face[t]);
    let mut names = Vec::new();
    let mut words = Vec::new();
    for (k, w) in chain(h).into_iter().enumerate() {
        names.push(chain_name(k + 1));
        words.push(w);
    }
    let m: Vec<Letter> = (1..=(2 * n - 2) as i32).map(|k| 4 * h as i32 + k).collect();
    for k in 0..(2 * n).saturating_sub(3) {
        names.push(c_name(k + 1));
        words.push(vec![-m[k + 1], m[k]]);
    }
    if n > 1 {
        names.push(c_name(2 * n - 2));
        words.push(vec![-m[2 * n - 3]]);
    }
    names.push(c_name(2 * n - 1));
    words.push(model.lift(&face, &[], at(if n == 1 { 0 } else { 4 * h })));
    for (j, (w, t)) in d_lifts(h).into_iter().enumerate() {
        names.push(d_name(j));
        words.push(model.lift(&face, &w, at(t)));
    }
    let mapped = normalize(&face, &words);
    let first = mapped[..2 * h].iter().flatten().map(|&l| (l.unsigned_abs() as usize - 1) / 2).min().unwrap_or(0);
    let mapped: Vec<Word> = mapped
        .iter()
        .map(|w| mirror_before_middle(&rotate_blocks(w, first, fiber_genus(h, n)), h, n))
        .collect();
    let surface = SurfaceModel::standard(fiber_genus(h, n))?;
    let curves = names.into_iter().zip(mapped).map(|(name, w)| Curve::new(name, w)).collect();
    Ok(Arrangement::from_curves(surface, curves)?.reduce())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_model_has_one_boundary() {
        for (h, n) in [(1, 1), (2, 3), (3, 2)] {
            let m = Symmetric::new(h, n).unwrap();
            assert_eq!(m.surface.genus(), fiber_genus(h, n));
            assert_eq!(m.surface.boundary_components(), 1);
        }
    }

    #[test]
    fn involution_squares_to_identity() {
        let m = Symmetric::new(2, 2).unwrap();
        let w: Word = (1..=10).chain((1..=10).map(|l| -l)).collect();
        assert_eq!(m.involution(&m.involution(&w)), w);
    }

    #[test]
    fn normalization_preserves_the_boundary_pattern() {
        let m = Symmetric::new(2, 2).unwrap();
        let face = m.surface.boundary_word();
        let out = normalize(&face, std::slice::from_ref(&face));
        let std = SurfaceModel::standard(5).unwrap().boundary_word();
        assert_eq!(canonical(&out[0]), canonical(&std));
    }

    #[test]
    fn moving_the_mirror_blocks_fixes_the_boundary() {
        for (h, n) in [(1, 1), (1, 3), (2, 2), (3, 3)] {
            let b = SurfaceModel::standard(fiber_genus(h, n)).unwrap().boundary_word();
            assert_eq!(canonical(&mirror_before_middle(&b, h, n)), canonical(&b));
        }
    }

    #[test]
    fn d_spec_counts() {
        for h in 1..=4 {
            assert_eq!(d_lifts(h).len(), 2 * h + 1);
            assert_eq!(chain(h).len(), 2 * h);
        }
    }
}
