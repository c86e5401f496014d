//! Twist words `t_{v_m}^{e_m} ⋯ t_{v_1}^{e_1}`.

use std::fmt;
use std::str::FromStr;

use crate::EngineError;

/// Letters in written order; the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct TwistWord {
    pub letters: Vec<(String, i32)>,
}

impl TwistWord {
    pub fn identity() -> Self {
        TwistWord::default()
    }

    pub fn new(letters: Vec<(String, i32)>) -> Self {
        TwistWord { letters }
    }

    /// `t_{names[0]} t_{names[1]} ⋯` with a common exponent.
    pub fn from_names<S: AsRef<str>>(names: &[S], exponent: i32) -> Self {
        TwistWord { letters: names.iter().map(|n| (n.as_ref().to_string(), exponent)).collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        TwistWord { letters: self.letters.iter().rev().map(|(n, e)| (n.clone(), -e)).collect() }
    }

    /// Written concatenation `self · other`: `other` acts first.
    pub fn then_after(&self, other: &TwistWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TwistWord { letters }
    }

    pub fn pow(&self, k: usize) -> Self {
        TwistWord { letters: (0..k).flat_map(|_| self.letters.iter().cloned()).collect() }
    }

    /// Letters in the order they act.
    pub fn acting_order(&self) -> impl Iterator<Item = &(String, i32)> {
        self.letters.iter().rev()
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|(n, e)| if *e > 0 { format!("{n}^+{e}") } else { format!("{n}^{e}") })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

impl FromStr for TwistWord {
    type Err = EngineError;

    /// Whitespace-separated tokens `NAME^+1` or `NAME^-1`.
    fn from_str(s: &str) -> Result<Self, EngineError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, exp) =
                tok.rsplit_once('^').ok_or_else(|| EngineError::BadToken(tok.to_string()))?;
            let e = match exp {
                "+1" | "1" => 1,
                "-1" => -1,
                _ => return Err(EngineError::BadToken(tok.to_string())),
            };
            if name.is_empty() {
                return Err(EngineError::BadToken(tok.to_string()));
            }
            letters.push((name.to_string(), e));
        }
        Ok(TwistWord { letters })
    }
}
