//! Source alphabets and symbols.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A symbol, identified by its position in the alphabet declaration.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub usize);

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

#[derive(Debug)]
struct Inner {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered set of at least two distinct symbol names. The declaration
/// order is canonical and drives every deterministic tie-break downstream.
///
/// Cloning is cheap; the symbol table is shared.
#[derive(Clone, Debug)]
pub struct Alphabet(Arc<Inner>);

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.len() < 2 {
            return Err(Error::AlphabetTooSmall(symbols.len()));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet(Arc::new(Inner { symbols, index })))
    }

    /// Alphabet size, σ.
    pub fn len(&self) -> usize {
        self.0.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // σ ≥ 2 by construction
    }

    pub fn names(&self) -> &[String] {
        &self.0.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.0.symbols[s.0]
    }

    pub fn index_of(&self, name: &str) -> Result<Symbol> {
        self.0
            .index
            .get(name)
            .map(|i| Symbol(*i))
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.0 < self.len()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(Symbol)
    }

    /// Parses a whitespace-separated symbol sequence.
    pub fn parse_sequence(&self, text: &str) -> Result<Vec<Symbol>> {
        text.split_whitespace().map(|t| self.index_of(t)).collect()
    }

    pub fn format_sequence(&self, seq: &[Symbol]) -> String {
        seq.iter()
            .map(|s| self.name(*s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.symbols == other.0.symbols
    }
}

impl Eq for Alphabet {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_and_duplicate() {
        assert_eq!(
            Alphabet::new(["a"]).unwrap_err(),
            Error::AlphabetTooSmall(1)
        );
        assert_eq!(
            Alphabet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateSymbol("a".into())
        );
    }

    #[test]
    fn lookup_round_trip() {
        let a = Alphabet::new(["a", "b", "c"]).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.index_of("b").unwrap(), Symbol(1));
        assert_eq!(a.name(Symbol(2)), "c");
        assert!(a.index_of("d").is_err());
        assert_eq!(a.parse_sequence("c a b").unwrap(), vec![Symbol(2), Symbol(0), Symbol(1)]);
    }
}
