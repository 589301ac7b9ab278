//! Code tables and code-tuples: the time-variant encoder model.

use crate::alphabet::{Alphabet, Symbol};
use crate::bits::BitString;
use crate::error::{Error, Result};

/// One code table: a total mapping from symbols to codewords. Codewords may
/// be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CodeTable {
    codewords: Vec<BitString>,
}

impl CodeTable {
    pub fn new(codewords: Vec<BitString>) -> Self {
        CodeTable { codewords }
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codeword(&self, s: Symbol) -> &BitString {
        &self.codewords[s.0]
    }

    pub fn codewords(&self) -> &[BitString] {
        &self.codewords
    }

    pub fn max_len(&self) -> usize {
        self.codewords.iter().map(BitString::len).max().unwrap_or(0)
    }
}

/// An `m`-code-tuple: `m` code tables plus `m` transition maps. Encoding a
/// symbol from table `i` emits `tables[i][s]` and moves to table
/// `transitions[i][s]`.
///
/// Immutable after validation; cloning shares the alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeTuple {
    alphabet: Alphabet,
    tables: Vec<CodeTable>,
    transitions: Vec<Vec<usize>>,
}

impl CodeTuple {
    /// Validates raw tuple data: every table and transition map must be
    /// total over the alphabet and every transition target in range.
    pub fn new(
        alphabet: Alphabet,
        tables: Vec<CodeTable>,
        transitions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if alphabet.len() < 2 {
            return Err(Error::AlphabetTooSmall(alphabet.len()));
        }
        let m = tables.len();
        if m == 0 {
            return Err(Error::EmptyTuple);
        }
        if transitions.len() != m {
            return Err(Error::MissingSymbol {
                table: transitions.len().min(m),
                expected: m,
                got: transitions.len(),
            });
        }
        let sigma = alphabet.len();
        for (i, t) in tables.iter().enumerate() {
            if t.len() != sigma {
                return Err(Error::MissingSymbol {
                    table: i,
                    expected: sigma,
                    got: t.len(),
                });
            }
        }
        for (i, row) in transitions.iter().enumerate() {
            if row.len() != sigma {
                return Err(Error::MissingSymbol {
                    table: i,
                    expected: sigma,
                    got: row.len(),
                });
            }
            for &target in row {
                if target >= m {
                    return Err(Error::IndexOutOfRange {
                        index: target,
                        tables: m,
                    });
                }
            }
        }
        Ok(CodeTuple {
            alphabet,
            tables,
            transitions,
        })
    }

    /// Number of tables, `m = |F|`.
    pub fn table_count(&self) -> usize {
        self.tables.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn table(&self, i: usize) -> &CodeTable {
        &self.tables[i]
    }

    pub fn tables(&self) -> &[CodeTable] {
        &self.tables
    }

    pub fn codeword(&self, table: usize, s: Symbol) -> &BitString {
        self.tables[table].codeword(s)
    }

    /// The transition map τ_i applied to one symbol.
    pub fn transition(&self, table: usize, s: Symbol) -> usize {
        self.transitions[table][s.0]
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn max_codeword_len(&self) -> usize {
        self.tables.iter().map(CodeTable::max_len).max().unwrap_or(0)
    }

    pub(crate) fn check_table_index(&self, i: usize) -> Result<()> {
        if i >= self.table_count() {
            return Err(Error::IndexOutOfRange {
                index: i,
                tables: self.table_count(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_symbol(&self, s: Symbol) -> Result<()> {
        if !self.alphabet.contains(s) {
            return Err(Error::UnknownSymbol(format!("#{}", s.0)));
        }
        Ok(())
    }
}
