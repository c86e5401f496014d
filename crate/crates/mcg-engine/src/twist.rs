//! Dehn twist surgery and twist-word evaluation.

use std::collections::{HashMap, HashSet};

use surface_model::arrangement::{ccw_distance, chords_cross, is_simple};
use surface_model::word::{canonical, cyclic_reduce, inverse, rotate, Letter, Word};
use surface_model::{Arrangement, Curve, HomologyClass, SurfaceModel};

use crate::symplectic::SymplecticMatrix;
use crate::word::TwistWord;
use crate::EngineError;

/// Image of the passage word `d` under `t_c^k`.
///
/// `c` and `d` are put in transverse position by the default layout. Walking
/// along `d`, every crossing with `c` is replaced by `|k|` turns around `c`,
/// inserted in the order the crossings are met. For `k > 0` the strand turns
/// to the side fixed by the orientation convention: the homology image is
/// `x + k ⟨x, [c]⟩ [c]`. The result is cyclically reduced.
pub fn twist_passages(surface: &SurfaceModel, c: &[Letter], d: &[Letter], k: i64) -> Word {
    let c = cyclic_reduce(c);
    let d = cyclic_reduce(d);
    if c.is_empty() || d.is_empty() || k == 0 {
        return d;
    }
    let arr = Arrangement::from_curves(
        surface.clone(),
        vec![Curve::new("c", c.clone()), Curve::new("d", d.clone())],
    )
    .expect("letters were checked by the caller");
    let n = arr.circle_size();
    let cc = arr.chords(0);
    let dc = arr.chords(1);
    let reps = k.unsigned_abs() as usize;
    let mut out: Word = Vec::with_capacity(d.len());
    for (i, &(a, b)) in dc.iter().enumerate() {
        let span = ccw_distance(n, a, b);
        let mut hits: Vec<(usize, usize, bool)> = Vec::new();
        for (j, &(p, q)) in cc.iter().enumerate() {
            if !chords_cross(n, (a, b), (p, q)) {
                continue;
            }
            let (near, forward) =
                if ccw_distance(n, a, p) < span { (p, false) } else { (q, true) };
            hits.push((ccw_distance(n, a, near), j, forward));
        }
        hits.sort_unstable();
        for (_, j, forward) in hits {
            let around = rotate(&c, j);
            let seg = if forward == (k > 0) { around } else { inverse(&around) };
            for _ in 0..reps {
                out.extend_from_slice(&seg);
            }
        }
        out.push(d[i]);
    }
    cyclic_reduce(&out)
}

fn ensure_embedded(
    arr: &Arrangement,
    name: &str,
    cache: &mut HashSet<String>,
) -> Result<(), EngineError> {
    if cache.contains(name) {
        return Ok(());
    }
    if !is_simple(arr.surface(), arr.passages(name)?) {
        return Err(EngineError::NotEmbedded(name.to_string()));
    }
    cache.insert(name.to_string());
    Ok(())
}

/// Replaces every target by its image under `t_c^k`; the result is reduced.
pub fn dehn_twist(
    arr: &Arrangement,
    c: &str,
    k: i64,
    targets: &[&str],
) -> Result<Arrangement, EngineError> {
    if k == 0 {
        return Err(EngineError::ZeroExponent);
    }
    ensure_embedded(arr, c, &mut HashSet::new())?;
    let cw = arr.passages(c)?;
    let mut new = Vec::with_capacity(targets.len());
    for t in targets {
        let d = arr.passages(t)?;
        new.push(Curve::new(*t, twist_passages(arr.surface(), cw, d, k)));
    }
    Ok(arr.with_curves(new)?.reduce())
}

/// Image of a passage word under a twist word, letters acting right to left.
/// With a budget, fails once an intermediate word grows past it.
pub fn apply_word_to_passages(
    arr: &Arrangement,
    w: &TwistWord,
    d: &[Letter],
    budget: Option<usize>,
) -> Result<Word, EngineError> {
    let mut checked = HashSet::new();
    for (name, e) in &w.letters {
        if *e == 0 {
            return Err(EngineError::ZeroExponent);
        }
        ensure_embedded(arr, name, &mut checked)?;
    }
    let mut cur = cyclic_reduce(d);
    for (name, e) in w.acting_order() {
        cur = twist_passages(arr.surface(), arr.passages(name)?, &cur, i64::from(*e));
        if let Some(b) = budget {
            if cur.len() > b {
                return Err(EngineError::Budget(b));
            }
        }
    }
    Ok(cur)
}

/// Applies `w` to the targets; the resulting arrangement is reduced.
pub fn apply_word(
    arr: &Arrangement,
    w: &TwistWord,
    targets: &[&str],
) -> Result<Arrangement, EngineError> {
    let mut new = Vec::with_capacity(targets.len());
    for t in targets {
        let img = apply_word_to_passages(arr, w, arr.passages(t)?, None)?;
        new.push(Curve::new(*t, img));
    }
    Ok(arr.with_curves(new)?.reduce())
}

/// Homological action `T_{v_m}^{e_m} ⋯ T_{v_1}^{e_1}`.
pub fn homology_action(arr: &Arrangement, w: &TwistWord) -> Result<SymplecticMatrix, EngineError> {
    let mut m = SymplecticMatrix::identity(arr.surface().handle_count());
    let mut classes: HashMap<&str, HomologyClass> = HashMap::new();
    for (name, e) in &w.letters {
        if !classes.contains_key(name.as_str()) {
            classes.insert(name, arr.homology_class(name)?);
        }
        m = &m * &SymplecticMatrix::transvection(&classes[name.as_str()], i64::from(*e));
    }
    Ok(m)
}

/// `₍φ₎(V) = t_{φ(v_m)} ⋯ t_{φ(v_1)}`: every curve of `v` is carried by `φ`
/// and added to the arrangement as `prefix` + its name.
pub fn conjugate_word(
    arr: &Arrangement,
    phi: &TwistWord,
    v: &TwistWord,
    prefix: &str,
) -> Result<(Arrangement, TwistWord), EngineError> {
    let mut images: Vec<Curve> = Vec::new();
    let mut renamed = HashMap::new();
    for (name, _) in &v.letters {
        if renamed.contains_key(name) {
            continue;
        }
        let new_name = format!("{prefix}{name}");
        let img = apply_word_to_passages(arr, phi, arr.passages(name)?, None)?;
        if let Ok(old) = arr.passages(&new_name) {
            if canonical(old) != canonical(&img) {
                return Err(EngineError::NameClash { name: new_name });
            }
        }
        images.push(Curve::new(new_name.clone(), img));
        renamed.insert(name.clone(), new_name);
    }
    let out = arr.with_curves(images)?;
    let word = TwistWord::new(v.letters.iter().map(|(n, e)| (renamed[n].clone(), *e)).collect());
    Ok((out, word))
}

/// True when `w` acts as the identity on homology and fixes every battery
/// curve up to isotopy.
pub fn acts_trivially(
    arr: &Arrangement,
    w: &TwistWord,
    battery: &[&str],
) -> Result<bool, EngineError> {
    if !homology_action(arr, w)?.is_identity() {
        return Ok(false);
    }
    let mut curves = Vec::with_capacity(2 * battery.len());
    for b in battery {
        let orig = arr.passages(b)?.to_vec();
        let img = apply_word_to_passages(arr, w, &orig, None)?;
        if canonical(&img) != canonical(&orig) {
            return Ok(false);
        }
        curves.push(Curve::new(*b, orig));
        curves.push(Curve::new(format!("{b}~"), img));
    }
    let check = Arrangement::from_curves(arr.surface().clone(), curves)?;
    for b in battery {
        if !check.curves_equal(b, &format!("{b}~"))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Curves `alpha_i` through `H_{2i-1}` and `beta_i` through `H_{2i}`,
/// oriented to represent `[α_i]` and `[β_i]`.
pub fn basis_curves(genus: usize) -> Vec<Curve> {
    (1..=genus as i32)
        .flat_map(|i| {
            [Curve::new(format!("alpha{i}"), vec![2 * i - 1]), Curve::new(format!("beta{i}"), vec![-2 * i])]
        })
        .collect()
}
