//! Free words over a generating alphabet.
//!
//! A [`FreeWord`] is an unreduced word in generators and their inverses,
//! stored as run-length letters `(generator index, exponent)`. It is the
//! input language of collection, the word problem, and the protocol
//! message formats.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::fmt;

use crate::error::WordError;

/// An unreduced word in an alphabet of `alphabet` generators.
///
/// Letters are `(index, exponent)` pairs with zero-based indices and
/// nonzero exponents. The empty word denotes the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<(usize, BigInt)>,
    alphabet: usize,
}

impl FreeWord {
    /// The empty word over `alphabet` generators.
    pub fn identity(alphabet: usize) -> Self {
        FreeWord {
            letters: Vec::new(),
            alphabet,
        }
    }

    /// Builds a word from letters, dropping zero exponents.
    pub fn new<I>(alphabet: usize, letters: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut out = Vec::new();
        for (idx, exp) in letters {
            if idx >= alphabet {
                return Err(WordError::IndexOutOfRange {
                    index: idx,
                    alphabet,
                });
            }
            if !exp.is_zero() {
                out.push((idx, exp));
            }
        }
        Ok(FreeWord {
            letters: out,
            alphabet,
        })
    }

    /// Single-letter word `g_idx^exp`.
    pub fn letter(alphabet: usize, idx: usize, exp: i64) -> Result<Self, WordError> {
        Self::new(alphabet, [(idx, BigInt::from(exp))])
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn letters(&self) -> &[(usize, BigInt)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word length `|w|` counting letter multiplicity, i.e. the sum of
    /// absolute exponents.
    pub fn length(&self) -> BigInt {
        self.letters
            .iter()
            .map(|(_, e)| e.abs())
            .fold(BigInt::zero(), |a, b| a + b)
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        FreeWord {
            letters,
            alphabet: self.alphabet.max(other.alphabet),
        }
    }

    /// The formal inverse: letters reversed with negated exponents.
    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(i, e)| (*i, -e))
                .collect(),
            alphabet: self.alphabet,
        }
    }

    /// Conjugate `u^-1 self u`.
    pub fn conjugated_by(&self, u: &FreeWord) -> FreeWord {
        u.inverse().concat(self).concat(u)
    }

    /// Free reduction: merges adjacent runs of the same generator and
    /// drops cancelled runs. Does not use any group relations.
    pub fn free_reduce(&self) -> FreeWord {
        let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(self.letters.len());
        for (idx, exp) in &self.letters {
            if exp.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((last, acc)) if last == idx => {
                    *acc += exp;
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((*idx, exp.clone())),
            }
        }
        FreeWord {
            letters: out,
            alphabet: self.alphabet,
        }
    }

    /// Parses a whitespace-separated word like `g1^2 g3^-1` or `a b^-1`.
    ///
    /// Atoms are `g<k>` (1-based index) or a generator name from `names`,
    /// optionally followed by `^<int>`. The atom `1` alone denotes the
    /// identity word.
    pub fn parse(text: &str, alphabet: usize, names: &[String]) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(FreeWord::identity(alphabet));
        }
        for atom in trimmed.split_whitespace() {
            let (base, exp) = match atom.split_once('^') {
                Some((b, e)) => {
                    let exp: BigInt = e
                        .parse()
                        .map_err(|_| WordError::BadAtom(atom.to_string()))?;
                    (b, exp)
                }
                None => (atom, BigInt::one()),
            };
            let idx = resolve_generator(base, alphabet, names)
                .ok_or_else(|| WordError::BadAtom(atom.to_string()))?;
            if !exp.is_zero() {
                letters.push((idx, exp));
            }
        }
        FreeWord::new(alphabet, letters)
    }

    /// Renders the word using generator `names` (falling back to `g<k>`).
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.letters.len());
        for (idx, exp) in &self.letters {
            let name = names
                .get(*idx)
                .cloned()
                .unwrap_or_else(|| format!("g{}", idx + 1));
            if exp.is_one() {
                parts.push(name);
            } else {
                parts.push(format!("{}^{}", name, exp));
            }
        }
        parts.join(" ")
    }
}

fn resolve_generator(base: &str, alphabet: usize, names: &[String]) -> Option<usize> {
    if let Some(pos) = names.iter().position(|n| n == base) {
        return Some(pos);
    }
    if let Some(num) = base.strip_prefix('g') {
        if let Ok(k) = num.parse::<usize>() {
            if k >= 1 && k <= alphabet {
                return Some(k - 1);
            }
        }
    }
    None
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = FreeWord::parse("g1^2 g3^-1 g1", 3, &[]).unwrap();
        assert_eq!(w.letters().len(), 3);
        assert_eq!(w.display(&[]), "g1^2 g3^-1 g1");
    }

    #[test]
    fn parse_named_generators() {
        let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let w = FreeWord::parse("a b^-1", 2, &names).unwrap();
        assert_eq!(w.letters(), &[(0, BigInt::one()), (1, BigInt::from(-1))]);
    }

    #[test]
    fn identity_atom() {
        let w = FreeWord::parse("1", 4, &[]).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn free_reduction_cancels() {
        let w = FreeWord::parse("g1 g2 g2^-1 g1^-1", 2, &[]).unwrap();
        assert!(w.free_reduce().is_empty());
    }

    #[test]
    fn inverse_reverses_and_negates() {
        let w = FreeWord::parse("g1 g2^3", 2, &[]).unwrap();
        let wi = w.inverse();
        assert_eq!(wi.display(&[]), "g2^-3 g1^-1");
        assert!(w.concat(&wi).free_reduce().is_empty());
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(FreeWord::parse("g5", 3, &[]).is_err());
        assert!(FreeWord::letter(2, 2, 1).is_err());
    }

    #[test]
    fn length_counts_multiplicity() {
        let w = FreeWord::parse("g1^2 g2^-3", 2, &[]).unwrap();
        assert_eq!(w.length(), BigInt::from(5));
    }
}
