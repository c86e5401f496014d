//! First homology of Σ_g with its intersection pairing.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Integer vector in the basis `([α_1], [β_1], ..., [α_g], [β_g])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass(pub Vec<i64>);

impl HomologyClass {
    pub fn zero(genus: usize) -> Self {
        HomologyClass(vec![0; 2 * genus])
    }

    /// Basis vector `[α_i]` (`beta = false`) or `[β_i]`, with `i` from 1.
    pub fn basis(genus: usize, i: usize, beta: bool) -> Self {
        let mut v = vec![0; 2 * genus];
        v[2 * (i - 1) + usize::from(beta)] = 1;
        HomologyClass(v)
    }

    pub fn genus(&self) -> usize {
        self.0.len() / 2
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Standard skew pairing with `⟨[α_i], [β_i]⟩ = 1`.
    pub fn pairing(&self, other: &Self) -> i64 {
        assert_eq!(self.0.len(), other.0.len(), "genus mismatch");
        self.0
            .chunks(2)
            .zip(other.0.chunks(2))
            .map(|(u, v)| u[0] * v[1] - u[1] * v[0])
            .sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        HomologyClass(self.0.iter().map(|x| x * k).collect())
    }

    /// Transvection `x ↦ x + k ⟨x, c⟩ c`.
    pub fn transvect(&self, c: &Self, k: i64) -> Self {
        self + &c.scale(k * self.pairing(c))
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;
    fn add(self, o: &HomologyClass) -> HomologyClass {
        HomologyClass(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HomologyClass {
    type Output = HomologyClass;
    fn sub(self, o: &HomologyClass) -> HomologyClass {
        HomologyClass(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        self.scale(-1)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
