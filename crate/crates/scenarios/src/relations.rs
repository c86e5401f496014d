//! Curve identities: `W² = id`, the action of `Φ_K^{-1}` and the Alexander
//! polynomial of the torus knot.

use fibration::algebra::{format_poly, poly_mul};
use fibration::contract::{alexander_numerator, torus_knot_block_poly};
use fibration::synthesis::{c_name, chain_name, d_name};
use fibration::{battery_names, gurtas_word, lemma52_factorization, torus_knot_monodromy, with_battery, d_prime_name};
use mcg_engine::{acts_trivially, apply_word_to_passages, dehn_twist, homology_action, TwistWord};
use serde::{Deserialize, Serialize};
use surface_model::word::canonical;
use surface_model::{Arrangement, Curve};

use crate::ScenarioError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationReport {
    pub h: usize,
    pub n: usize,
    pub checks: Vec<CheckLine>,
}

impl ConjugationReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
    }
}

fn equal_as_curves(arr: &Arrangement, a: Vec<i32>, b: Vec<i32>) -> Result<bool, ScenarioError> {
    let both = arr.with_curves(vec![Curve::new("lhs", a), Curve::new("rhs", b)])?;
    Ok(both.curves_equal("lhs", "rhs")?)
}

/// Runs `Φ_K^{-1}(c_k) = c_k`, `Φ_K^{-1}(D_j) = t_{a_{j+1}}(D_j)` and the
/// materialization of `D′_{2h} = t_{a_1} ⋯ t_{a_{2h}}(D_{2h})`.
pub fn verify_conjugation_identities(h: usize, n: usize, dataset: &Arrangement) -> Result<ConjugationReport, ScenarioError> {
    verify_with(h, n, dataset, &torus_knot_monodromy(h)?.inverse())
}

/// The same checks for an arbitrary word in place of `Φ_K^{-1}`.
pub fn verify_with(h: usize, n: usize, dataset: &Arrangement, phi_inv: &TwistWord) -> Result<ConjugationReport, ScenarioError> {
    let mut checks = Vec::new();
    for k in 1..=2 * n - 1 {
        let c = dataset.passages(&c_name(k))?.to_vec();
        let img = apply_word_to_passages(dataset, phi_inv, &c, None)?;
        checks.push(CheckLine { name: format!("Phi^-1(c{k}) = c{k}"), holds: equal_as_curves(dataset, img, c)? });
    }
    for j in 0..2 * h {
        let d = dataset.passages(&d_name(j))?.to_vec();
        let img = apply_word_to_passages(dataset, phi_inv, &d, None)?;
        let t = dehn_twist(dataset, &chain_name(j + 1), 1, &[&d_name(j)])?;
        let target = t.passages(&d_name(j))?.to_vec();
        checks.push(CheckLine {
            name: format!("Phi^-1(D{j}) = t_a{}(D{j})", j + 1),
            holds: equal_as_curves(dataset, img, target)?,
        });
    }
    let top = dataset.passages(&d_name(2 * h))?.to_vec();
    let chain: Vec<String> = (1..=2 * h).map(chain_name).collect();
    let d_prime = apply_word_to_passages(dataset, &TwistWord::from_names(&chain, 1), &top, None)?;
    let img = apply_word_to_passages(dataset, phi_inv, &top, None)?;
    let l52 = lemma52_factorization(h, n, dataset)?;
    let materialized = l52.arrangement().passages(&d_prime_name(2 * h))?.to_vec();
    let embedded = l52.arrangement().is_embedded(&d_prime_name(2 * h))?;
    checks.push(CheckLine {
        name: format!("D'{} = t_a1 ... t_a{}(D{}) is materialized and embedded", 2 * h, 2 * h, 2 * h),
        holds: embedded && canonical(&materialized) == canonical(&d_prime) && equal_as_curves(dataset, img, d_prime)?,
    });
    Ok(ConjugationReport { h, n, checks })
}

/// `W(h, n)²` acts trivially: identity on homology and every battery curve fixed.
pub fn gurtas_relation(h: usize, n: usize, dataset: &Arrangement) -> Result<(bool, bool), ScenarioError> {
    let full = with_battery(dataset)?;
    let w2 = gurtas_word(h, n)?.pow(2);
    let names = battery_names(h, n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let homology = homology_action(&full, &w2)?.is_identity();
    Ok((homology, acts_trivially(&full, &w2, &refs)?))
}

/// Characteristic polynomial of the torus-knot block and whether
/// `p(t) (t + 1) = ±(t^{2h+1} + 1)`.
pub fn alexander_check(h: usize, dataset: &Arrangement) -> Result<(String, bool), ScenarioError> {
    let Some(p) = torus_knot_block_poly(dataset, h)? else {
        return Ok(("chain leaves the torus-knot block".into(), false));
    };
    let q = poly_mul(&p, &[1, 1]);
    let target = alexander_numerator(h);
    let neg: Vec<i64> = target.iter().map(|x| -x).collect();
    Ok((format_poly(&p), q == target || q == neg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_dataset() {
        let ds = fibration::load_dataset(1, 1, None).unwrap();
        assert_eq!(alexander_check(1, &ds).unwrap(), ("t^2 - t + 1".to_string(), true));
        assert_eq!(gurtas_relation(1, 1, &ds).unwrap(), (true, true));
        let r = verify_conjugation_identities(1, 1, &ds).unwrap();
        assert_eq!(r.checks.len(), 1 + 2 + 1);
        assert!(r.failures().is_empty());
    }
}
