//! A second presentation engine, written independently of the diagram code,
//! used to cross-check certificates. Words are lists of named letters with
//! exponent `±1`; the abelian invariants come from a Smith reduction by
//! repeated division.

use std::collections::{BTreeMap, BTreeSet};

use surface_model::word::generator_name;

use crate::certificate::{MoveCertificate, MoveRecord};
use crate::shadow::PresentationShadow;

type Syl = (String, i32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: BTreeSet<String>,
    pub relators: BTreeMap<String, Vec<Syl>>,
}

fn inv(w: &[Syl]) -> Vec<Syl> {
    w.iter().rev().map(|(g, e)| (g.clone(), -e)).collect()
}

fn cyc_red(w: Vec<Syl>) -> Vec<Syl> {
    let mut st: Vec<Syl> = Vec::new();
    for s in w {
        match st.last() {
            Some(t) if t.0 == s.0 && t.1 == -s.1 => {
                st.pop();
            }
            _ => st.push(s),
        }
    }
    let mut dq: std::collections::VecDeque<Syl> = st.into();
    while dq.len() > 1 {
        let (f, b) = (dq.front().expect("nonempty"), dq.back().expect("nonempty"));
        if f.0 == b.0 && f.1 == -b.1 {
            dq.pop_front();
            dq.pop_back();
        } else {
            break;
        }
    }
    dq.into()
}

fn rot(w: &[Syl], i: usize) -> Vec<Syl> {
    if w.is_empty() {
        return Vec::new();
    }
    let i = i % w.len();
    w[i..].iter().chain(w[..i].iter()).cloned().collect()
}

fn arc_to_generator(label: &str) -> Option<String> {
    let (kind, idx) = if let Some(r) = label.strip_prefix("alpha*") {
        ("x", r)
    } else {
        ("y", label.strip_prefix("beta*")?)
    };
    Some(format!("{kind}{idx}"))
}

impl Presentation {
    pub fn from_shadow(p: &PresentationShadow) -> Self {
        Presentation {
            generators: p.generators.iter().map(|&h| generator_name(h)).collect(),
            relators: p
                .relators
                .iter()
                .map(|(l, w)| (l.clone(), w.iter().map(|&x| (generator_name(x.unsigned_abs() as usize), x.signum())).collect()))
                .collect(),
        }
    }

    pub fn slide(&mut self, moving: &str, over: &str, result: &str, at: (usize, usize), sign: i32) -> Result<(), String> {
        let m = self.relators.get(moving).ok_or(format!("no relator {moving}"))?.clone();
        let mut o = self.relators.get(over).ok_or(format!("no relator {over}"))?.clone();
        if sign < 0 {
            o = inv(&o);
        }
        let mut w = rot(&m, at.0);
        w.extend(rot(&o, at.1));
        self.relators.remove(moving);
        self.relators.insert(result.to_string(), cyc_red(w));
        Ok(())
    }

    /// Removes generator `g` using relator `r`, in which it occurs once.
    pub fn eliminate(&mut self, g: &str, r: &str) -> Result<(), String> {
        let w = self.relators.remove(r).ok_or(format!("no relator {r}"))?;
        let hits: Vec<usize> = w.iter().enumerate().filter(|(_, s)| s.0 == g).map(|(i, _)| i).collect();
        if hits.len() != 1 {
            return Err(format!("{g} occurs {} times in {r}", hits.len()));
        }
        let w = rot(&w, hits[0]);
        let tail = w[1..].to_vec();
        let value = if w[0].1 == 1 { inv(&tail) } else { tail };
        let value_inv = inv(&value);
        for rel in self.relators.values_mut() {
            let mut out = Vec::new();
            for s in rel.iter() {
                if s.0 == g {
                    out.extend(if s.1 == 1 { value.iter().cloned() } else { value_inv.iter().cloned() });
                } else {
                    out.push(s.clone());
                }
            }
            *rel = cyc_red(out);
        }
        self.generators.remove(g);
        Ok(())
    }

    /// Follows the move list of a certificate.
    pub fn follow(&mut self, c: &MoveCertificate) -> Result<(), String> {
        for st in &c.steps {
            match &st.record {
                MoveRecord::Slide { moving, over, result, band } => {
                    self.slide(moving, over, result, (band.moving_at, band.over_at), band.sign)?
                }
                MoveRecord::Cancel { one_handle, two_handle, .. } => {
                    let g = arc_to_generator(one_handle).ok_or(format!("bad arc {one_handle}"))?;
                    self.eliminate(&g, two_handle)?
                }
            }
        }
        Ok(())
    }

    /// `(free rank, torsion coefficients > 1)` of the abelianization.
    pub fn abelian_invariants(&self) -> (usize, Vec<i64>) {
        let gens: Vec<&String> = self.generators.iter().collect();
        let m: Vec<Vec<i128>> = self
            .relators
            .values()
            .map(|w| {
                gens.iter().map(|g| w.iter().filter(|s| &s.0 == *g).map(|s| i128::from(s.1)).sum()).collect()
            })
            .collect();
        let mut d = diagonalize(m, gens.len());
        // Make the diagonal a divisibility chain.
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                let g = gcd(d[i], d[j]);
                let l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
            }
        }
        let rank = d.len();
        (gens.len() - rank, d.into_iter().filter(|&x| x != 1).map(|x| x as i64).collect())
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Nonzero diagonal entries after reducing by the smallest pivot until its
/// row and column are clear.
fn diagonalize(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        let smallest = |m: &[Vec<i128>], cells: &mut dyn Iterator<Item = (usize, usize)>| {
            cells.filter(|&(i, j)| m[i][j] != 0).min_by_key(|&(i, j)| m[i][j].abs())
        };
        let Some((i, j)) = smallest(&m, &mut (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else { break };
        let mut pivot = (i, j);
        loop {
            m.swap(t, pivot.0);
            for row in m.iter_mut() {
                row.swap(t, pivot.1);
            }
            let p = m[t][t];
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    let pivot = m[t].clone();
                    for (x, p) in m[i][t..cols].iter_mut().zip(&pivot[t..cols]) {
                        *x -= q * p;
                    }
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
            }
            let rest = (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
            match smallest(&m, &mut rest.collect::<Vec<_>>().into_iter()) {
                Some(next) => pivot = next,
                None => break,
            }
        }
        out.push(m[t][t].abs());
    }
    out
}
