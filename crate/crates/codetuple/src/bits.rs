//! Finite binary strings with the prefix/suffix/longest-common-prefix algebra
//! that the rest of the crate is built on.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence over `{0, 1}`. The empty string is written `λ` in docs.
///
/// The first bit of the textual form `"1011"` is the first element of the
/// sequence. Ordering is plain lexicographic; the canonical `(length, lex)`
/// order used for enumeration is applied explicitly where needed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    /// Builds a bit string from raw bits; every element must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        debug_assert!(bits.iter().all(|b| *b <= 1));
        BitString(bits.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn push(&mut self, bit: u8) {
        debug_assert!(bit <= 1);
        self.0.push(bit);
    }

    /// `self ++ other`.
    pub fn concat(&self, other: &BitString) -> BitString {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        BitString(out)
    }

    pub fn extend(&mut self, other: &BitString) {
        self.0.extend_from_slice(&other.0);
    }

    /// Whether `self ⪯ other`, i.e. `self` is a prefix of `other`.
    /// `λ` is a prefix of everything.
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Whether one of the two strings is a prefix of the other.
    pub fn comparable(&self, other: &BitString) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// The string with its first bit removed (`suf` in the usual notation).
    pub fn tail(&self) -> Result<BitString> {
        if self.is_empty() {
            return Err(Error::EmptyBitString);
        }
        Ok(BitString(self.0[1..].to_vec()))
    }

    /// The suffix starting at position `i`; `i = len` yields `λ`.
    pub fn suffix_from(&self, i: usize) -> BitString {
        BitString(self.0[i..].to_vec())
    }

    /// The prefix holding the first `n` bits.
    pub fn prefix(&self, n: usize) -> BitString {
        BitString(self.0[..n].to_vec())
    }

    pub fn longest_common_prefix(a: &BitString, b: &BitString) -> BitString {
        let n = a
            .0
            .iter()
            .zip(&b.0)
            .take_while(|(x, y)| x == y)
            .count();
        BitString(a.0[..n].to_vec())
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().copied()
    }

    /// All strings of exactly `len` bits in lexicographic order.
    pub fn all_of_len(len: usize) -> Vec<BitString> {
        let mut out = Vec::with_capacity(1 << len);
        for v in 0u64..(1u64 << len) {
            let bits: Vec<u8> = (0..len)
                .map(|i| ((v >> (len - 1 - i)) & 1) as u8)
                .collect();
            out.push(BitString(bits));
        }
        out
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "λ")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::InvalidBitString(s.to_string())),
            }
        }
        Ok(BitString(bits))
    }
}

/// Shorthand used throughout the tests.
pub fn bits(s: &str) -> BitString {
    s.parse().expect("literal bit string")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_prefix_of_everything() {
        assert!(bits("").is_prefix_of(&bits("1011")));
        assert!(bits("").is_prefix_of(&bits("")));
        assert_eq!(bits("").len(), 0);
    }

    #[test]
    fn tail_drops_first_bit() {
        assert_eq!(bits("1011").tail().unwrap(), bits("011"));
        assert_eq!(bits("1").tail().unwrap(), bits(""));
        assert_eq!(bits("").tail(), Err(Error::EmptyBitString));
    }

    #[test]
    fn lcp_by_inspection() {
        assert_eq!(
            BitString::longest_common_prefix(&bits("1101"), &bits("1110")),
            bits("11")
        );
        assert_eq!(
            BitString::longest_common_prefix(&bits("00"), &bits("11")),
            bits("")
        );
        assert_eq!(
            BitString::longest_common_prefix(&bits("101"), &bits("101")),
            bits("101")
        );
    }

    #[test]
    fn parse_rejects_non_binary() {
        assert!("012".parse::<BitString>().is_err());
        assert_eq!("".parse::<BitString>().unwrap(), BitString::empty());
    }

    #[test]
    fn all_of_len_is_lexicographic() {
        let all = BitString::all_of_len(2);
        assert_eq!(all, vec![bits("00"), bits("01"), bits("10"), bits("11")]);
    }
}
