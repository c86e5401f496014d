//! One-vertex ribbon model: a base disk `P` with `2g` bands.

use crate::word::{handle_of, Letter, Word};
use crate::SurfaceError;

/// Σ_g minus an open disk, as the disk `P` with handles `H_1..H_{2g}`.
///
/// `order` lists the `4g` end-intervals on `∂P` counterclockwise. The
/// interval of letter `l` is where a strand leaves `P` when it reads `l`;
/// the interval of `-l` is where it comes back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
    order: Vec<Letter>,
    pos: Vec<usize>,
}

fn slot_of(l: Letter) -> usize {
    let h = handle_of(l);
    2 * (h - 1) + usize::from(l < 0)
}

impl SurfaceModel {
    /// Standard model: per genus block `(e⁺_{2i-1}, e⁺_{2i}, e⁻_{2i-1}, e⁻_{2i})`.
    pub fn standard(genus: usize) -> Result<Self, SurfaceError> {
        if genus == 0 {
            return Err(SurfaceError::InvalidParameter("genus must be positive".into()));
        }
        let mut order = Vec::with_capacity(4 * genus);
        for i in 1..=genus as i32 {
            order.extend([2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]);
        }
        Self::from_order(order)
    }

    /// A general one-vertex ribbon structure; it must have exactly one
    /// boundary circle.
    pub fn from_order(order: Vec<Letter>) -> Result<Self, SurfaceError> {
        let n = order.len();
        if n == 0 || !n.is_multiple_of(4) {
            return Err(SurfaceError::InvalidParameter(format!(
                "cyclic order of length {n} is not 4g"
            )));
        }
        let genus = n / 4;
        let mut pos = vec![usize::MAX; n];
        for (k, &l) in order.iter().enumerate() {
            let h = handle_of(l);
            if l == 0 || h > 2 * genus || pos[slot_of(l)] != usize::MAX {
                return Err(SurfaceError::InvalidParameter(format!(
                    "letter {l} is out of range or repeated"
                )));
            }
            pos[slot_of(l)] = k;
        }
        let s = SurfaceModel { genus, order, pos };
        if s.boundary_components() != 1 {
            return Err(SurfaceError::InvalidParameter(
                "ribbon structure has more than one boundary circle".into(),
            ));
        }
        Ok(s)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn handle_count(&self) -> usize {
        2 * self.genus
    }

    /// Number of end-intervals on `∂P`.
    pub fn ends(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[Letter] {
        &self.order
    }

    /// Counterclockwise position of the end-interval of `l`.
    pub fn position(&self, l: Letter) -> usize {
        self.pos[slot_of(l)]
    }

    /// True when `a` comes strictly before `b` going counterclockwise from `start`.
    pub fn ccw_before(&self, start: Letter, a: Letter, b: Letter) -> bool {
        let n = self.ends();
        let p0 = self.position(start);
        (self.position(a) + n - p0) % n < (self.position(b) + n - p0) % n
    }

    fn next_boundary(&self, l: Letter) -> Letter {
        self.order[(self.position(-l) + 1) % self.ends()]
    }

    /// Passage word of the boundary circle, starting at the first interval.
    pub fn boundary_word(&self) -> Word {
        let mut w = vec![self.order[0]];
        for _ in 1..self.ends() {
            let last = *w.last().unwrap_or(&self.order[0]);
            w.push(self.next_boundary(last));
        }
        w
    }

    /// Boundary circles traced combinatorially.
    pub fn boundary_components(&self) -> usize {
        let mut seen = vec![false; self.ends()];
        let mut count = 0;
        for &s in &self.order {
            if seen[self.position(s)] {
                continue;
            }
            count += 1;
            let mut l = s;
            while !seen[self.position(l)] {
                seen[self.position(l)] = true;
                l = self.next_boundary(l);
            }
        }
        count
    }

    /// χ of one disk plus `2g` bands.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.handle_count() as i64
    }

    /// Dotted dual arc of a handle: `alpha*i` for `H_{2i-1}`, `beta*i` for `H_{2i}`.
    pub fn dual_arc_label(&self, handle: usize) -> String {
        dual_arc_label(handle)
    }

    /// Handle carrying a dual-arc label.
    pub fn handle_of_label(&self, label: &str) -> Option<usize> {
        let (kind, idx) = if let Some(r) = label.strip_prefix("alpha*") {
            (1usize, r)
        } else {
            let r = label.strip_prefix("beta*")?;
            (0usize, r)
        };
        let i: usize = idx.parse().ok()?;
        if i == 0 || i > self.genus {
            return None;
        }
        Some(2 * i - kind)
    }
}

/// Dual arc label of handle `h`.
pub fn dual_arc_label(handle: usize) -> String {
    let i = handle.div_ceil(2);
    if handle % 2 == 1 {
        format!("alpha*{i}")
    } else {
        format!("beta*{i}")
    }
}

/// `build_surface(g)`.
pub fn build_surface(genus: i64) -> Result<SurfaceModel, SurfaceError> {
    if genus <= 0 {
        return Err(SurfaceError::InvalidParameter(format!("genus {genus} must be positive")));
    }
    SurfaceModel::standard(genus as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_counts() {
        let s = build_surface(1).unwrap();
        assert_eq!(s.handle_count(), 2);
        assert_eq!(s.euler_characteristic(), -1);
        assert_eq!(s.boundary_components(), 1);
    }

    #[test]
    fn genus_two_labels() {
        let s = build_surface(2).unwrap();
        let labels: Vec<_> = (1..=4).map(|h| s.dual_arc_label(h)).collect();
        assert_eq!(labels, ["alpha*1", "beta*1", "alpha*2", "beta*2"]);
        for h in 1..=4 {
            assert_eq!(s.handle_of_label(&labels[h - 1]), Some(h));
        }
    }

    #[test]
    fn seven_from_parameters() {
        let (h, n) = (3i64, 2i64);
        let s = build_surface(2 * h + n - 1).unwrap();
        assert_eq!(s.genus(), 7);
        assert_eq!(s.handle_count(), 14);
    }

    #[test]
    fn rejects_nonpositive_genus() {
        assert!(build_surface(0).is_err());
        assert!(build_surface(-2).is_err());
    }

    #[test]
    fn standard_boundary_word() {
        let s = build_surface(2).unwrap();
        assert_eq!(s.boundary_word(), vec![1, -2, -1, 2, 3, -4, -3, 4]);
    }

    #[test]
    fn two_boundary_orders_rejected() {
        assert!(SurfaceModel::from_order(vec![1, -1, 2, -2]).is_err());
    }
}
