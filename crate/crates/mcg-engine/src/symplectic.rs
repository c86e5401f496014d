//! Integer matrices acting on `H_1(Σ_g)`.

use std::fmt;
use std::ops::Mul;

use surface_model::HomologyClass;

/// Square integer matrix, row-major, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl SymplecticMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        SymplecticMatrix { dim, data }
    }

    /// Standard skew form `J` with `⟨e_{2i-1}, e_{2i}⟩ = 1`.
    pub fn form(genus: usize) -> Self {
        let dim = 2 * genus;
        let mut m = SymplecticMatrix { dim, data: vec![0; dim * dim] };
        for i in 0..genus {
            m.data[(2 * i) * dim + 2 * i + 1] = 1;
            m.data[(2 * i + 1) * dim + 2 * i] = -1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        SymplecticMatrix { dim, data: rows.into_iter().flatten().collect() }
    }

    /// `x ↦ x + k ⟨x, c⟩ c`.
    pub fn transvection(c: &HomologyClass, k: i64) -> Self {
        let dim = c.coords().len();
        let mut m = Self::identity(dim);
        for j in 0..dim {
            let mut e = vec![0; dim];
            e[j] = 1;
            let col = HomologyClass(e).transvect(c, k);
            for i in 0..dim {
                m.data[i * dim + j] = col.coords()[i];
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        SymplecticMatrix { dim: n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// `MᵀJM = J`.
    pub fn preserves_form(&self) -> bool {
        let j = Self::form(self.dim / 2);
        &(&self.transpose() * &j) * self == j
    }

    /// Inverse of a form-preserving matrix: `M⁻¹ = -J Mᵀ J`.
    pub fn symplectic_inverse(&self) -> Self {
        let j = Self::form(self.dim / 2);
        let m = &(&j * &self.transpose()) * &j;
        SymplecticMatrix { dim: self.dim, data: m.data.iter().map(|x| -x).collect() }
    }

    pub fn apply(&self, x: &HomologyClass) -> HomologyClass {
        let n = self.dim;
        HomologyClass(
            (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * x.coords()[j]).sum()).collect(),
        )
    }

    /// Leading principal block of size `k`.
    pub fn block(&self, k: usize) -> Vec<Vec<i64>> {
        (0..k).map(|i| (0..k).map(|j| self.get(i, j)).collect()).collect()
    }
}

impl Mul for &SymplecticMatrix {
    type Output = SymplecticMatrix;
    fn mul(self, o: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let n = self.dim;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * o.data[k * n + j];
                }
            }
        }
        SymplecticMatrix { dim: n, data }
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let parts: Vec<String> = r.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", parts.join(" "))?;
        }
        Ok(())
    }
}
