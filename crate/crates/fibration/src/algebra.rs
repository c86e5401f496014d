//! Exact integer linear algebra: Smith normal form and characteristic
//! polynomials.

/// Invariant factors of an integer matrix: the nonzero diagonal entries
/// `d_1 | d_2 | …` of its Smith normal form, all positive.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else { break };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    let pivot = a[t].clone();
                    for (x, p) in a[i][t..n].iter_mut().zip(&pivot[t..n]) {
                        *x -= q * p;
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for r in a.iter_mut().skip(t) {
                        r[j] -= q * r[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // Divisibility: fold any entry the pivot does not divide into row t.
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % a[t][t] != 0));
                match bad {
                    Some(i) => {
                        let other = a[i].clone();
                        for (x, y) in a[t][t..n].iter_mut().zip(&other[t..n]) {
                            *x += y;
                        }
                    }
                    None => break,
                }
            }
            let (pi, pj) = smallest_nonzero(&a, t).expect("pivot row is nonzero");
            a.swap(t, pi);
            for r in a.iter_mut() {
                r.swap(t, pj);
            }
        }
        diag.push(i64::try_from(a[t][t].abs()).expect("invariant factor fits in i64"));
        t += 1;
    }
    diag
}

fn smallest_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, r) in a.iter().enumerate().skip(t) {
        for (j, &x) in r.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(b, _, _)| x.abs() < b) {
                best = Some((x.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Abelian group `Z^free ⊕ ⊕ Z/d` presented by `rows` as relations on
/// `columns` generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn from_relations(columns: usize, rows: &[Vec<i64>]) -> Self {
        let d = invariant_factors(rows);
        AbelianGroup { free_rank: columns - d.len(), torsion: d.into_iter().filter(|&x| x != 1).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".into() } else { format!("Z^{}", self.free_rank) });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Integer polynomial, coefficients from the constant term up.
pub type Poly = Vec<i64>;

/// `det(tI - M)` by the Faddeev–LeVerrier recursion, exact over the integers.
pub fn char_poly(m: &[Vec<i64>]) -> Poly {
    let n = m.len();
    let a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0.
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * mk[l][j]).sum::<i128>();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        mk = next;
        let trace: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * mk[l][i]).sum::<i128>()).sum();
        coeffs[n - k] = -trace / k as i128;
    }
    coeffs.into_iter().map(|c| i64::try_from(c).expect("coefficient fits in i64")).collect()
}

pub fn poly_mul(p: &[i64], q: &[i64]) -> Poly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Human-readable form in the variable `t`, highest degree first.
pub fn format_poly(p: &[i64]) -> String {
    let mut s = String::new();
    for (d, &c) in p.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        let a = c.abs();
        let mono = match d {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{d}"),
        };
        if a != 1 || d == 0 {
            s.push_str(&a.to_string());
        }
        s.push_str(&mono);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
