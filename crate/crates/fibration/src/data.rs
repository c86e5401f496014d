//! Shipped curve datasets.

use std::path::Path;

use surface_model::{parse_dataset, Arrangement};

use crate::synthesis::{check_parameters, synthesize};
use crate::FibrationError;

macro_rules! shipped {
    ($($h:literal $n:literal),*) => {
        /// Text of the shipped dataset at `(h, n)`, if one is shipped.
        pub fn shipped_dataset(h: usize, n: usize) -> Option<&'static str> {
            match (h, n) {
                $(($h, $n) => Some(include_str!(concat!("../data/gurtas_h", $h, "_n", $n, ".txt"))),)*
                _ => None,
            }
        }
    };
}

shipped!(1 1, 1 2, 1 3, 2 1, 2 2, 2 3, 3 1, 3 2, 3 3);

/// Reads the dataset at `path`, or the shipped one, or synthesizes it.
pub fn load_dataset(h: usize, n: usize, path: Option<&Path>) -> Result<Arrangement, FibrationError> {
    check_parameters(h, n)?;
    if let Some(p) = path {
        let text = std::fs::read_to_string(p).map_err(|e| FibrationError::Format(format!("{}: {e}", p.display())))?;
        return Ok(parse_dataset(&text)?);
    }
    match shipped_dataset(h, n) {
        Some(text) => Ok(parse_dataset(text)?),
        None => synthesize(h, n),
    }
}
