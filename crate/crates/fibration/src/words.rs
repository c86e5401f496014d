//! The twist words of the construction.

use mcg_engine::TwistWord;

use crate::synthesis::{c_name, chain_name, check_parameters, d_name};
use crate::FibrationError;

/// `W = t_{c_{2n-2}} ⋯ t_{c_1} t_{c_1} ⋯ t_{c_{2n-2}} t_{D_0} ⋯ t_{D_{2h}} t_{c_{2n-1}}`.
pub fn gurtas_word(h: usize, n: usize) -> Result<TwistWord, FibrationError> {
    check_parameters(h, n)?;
    let mut names: Vec<String> = (1..=2 * n - 2).rev().map(c_name).collect();
    names.extend((1..=2 * n - 2).map(c_name));
    names.extend((0..=2 * h).map(d_name));
    names.push(c_name(2 * n - 1));
    Ok(TwistWord::from_names(&names, 1))
}

/// `Φ_K = t_{a_{2h}}^{-1} ⋯ t_{a_2}^{-1} t_{a_1}^{-1}` for `K = T(2, 2h+1)`.
pub fn torus_knot_monodromy(h: usize) -> Result<TwistWord, FibrationError> {
    check_parameters(h, 1)?;
    let names: Vec<String> = (1..=2 * h).rev().map(chain_name).collect();
    Ok(TwistWord::from_names(&names, -1))
}

/// Expected length of `W(h, n)`.
pub fn gurtas_length(h: usize, n: usize) -> usize {
    4 * n + 2 * h - 2
}
