//! Signed letter words.
//!
//! Two alphabets share the representation. A passage word records how a
//! curve runs through the handles: letter `k` crosses `H_k` in its positive
//! direction, `-k` in the negative one. A generator word is over
//! `x_1, y_1, ..., x_g, y_g` with `x_i = 2i-1` and `y_i = 2i`; the passage
//! `H_{2i-1}⁺` reads `x_i` and the passage `H_{2i}⁻` reads `y_i`, so the
//! boundary circle reads `∏ [x_i, y_i]`.

/// A signed handle letter; never zero.
pub type Letter = i32;

/// A word over handle letters.
pub type Word = Vec<Letter>;

/// Handle index `1..=2g` of a letter.
pub fn handle_of(l: Letter) -> usize {
    l.unsigned_abs() as usize
}

/// Formal inverse.
pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

/// Free reduction.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by removal of cancelling first/last letters.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let r = free_reduce(w);
    let mut lo = 0;
    let mut hi = r.len();
    while hi - lo > 1 && r[lo] == -r[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    r[lo..hi].to_vec()
}

/// Rotation starting at index `i`.
pub fn rotate(w: &[Letter], i: usize) -> Word {
    if w.is_empty() {
        return Vec::new();
    }
    let i = i % w.len();
    let mut out = w[i..].to_vec();
    out.extend_from_slice(&w[..i]);
    out
}

/// Canonical representative of the free homotopy class of an unoriented
/// closed curve: least rotation of the cyclic reduction or of its inverse.
pub fn canonical(w: &[Letter]) -> Word {
    let r = cyclic_reduce(w);
    if r.is_empty() {
        return r;
    }
    let mut best: Option<Word> = None;
    for v in [r.clone(), inverse(&r)] {
        for i in 0..v.len() {
            let cand = rotate(&v, i);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Generator word of a passage word.
pub fn to_generators(w: &[Letter]) -> Word {
    w.iter().map(|&l| if l % 2 == 0 { -l } else { l }).collect()
}

/// Passage word of a generator word.
pub fn to_passages(w: &[Letter]) -> Word {
    to_generators(w)
}

/// Signed letter counts in the basis `(x_1, y_1, ..., x_g, y_g)`.
pub fn abelianize(w: &[Letter], genus: usize) -> Vec<i64> {
    let mut v = vec![0i64; 2 * genus];
    for &l in w {
        let h = handle_of(l);
        if h >= 1 && h <= 2 * genus {
            v[h - 1] += if l > 0 { 1 } else { -1 };
        }
    }
    v
}

/// Generator name of a positive letter: `x1`, `y1`, `x2`, ...
pub fn generator_name(h: usize) -> String {
    let i = h.div_ceil(2);
    if h % 2 == 1 {
        format!("x{i}")
    } else {
        format!("y{i}")
    }
}

/// Human-readable word, e.g. `x1 y2^-1`.
pub fn format_word(w: &[Letter]) -> String {
    w.iter()
        .map(|&l| {
            let n = generator_name(handle_of(l));
            if l > 0 {
                n
            } else {
                format!("{n}^-1")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
