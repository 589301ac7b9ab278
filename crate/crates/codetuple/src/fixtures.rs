//! Hand-built example tuples and distributions exercised throughout the
//! test suites, the benches, and the shipped JSON fixtures.

use crate::alphabet::{Alphabet, Symbol};
use crate::bits::BitString;
use crate::dist::Distribution;
use crate::rational::ratio;
use crate::tuple::{CodeTable, CodeTuple};

fn table(words: &[&str]) -> CodeTable {
    CodeTable::new(words.iter().map(|w| w.parse().unwrap()).collect())
}

fn tuple(alphabet: Alphabet, tables: &[(&[&str], &[usize])]) -> CodeTuple {
    CodeTuple::new(
        alphabet,
        tables.iter().map(|(w, _)| table(w)).collect(),
        tables.iter().map(|(_, t)| t.to_vec()).collect(),
    )
    .expect("fixture data is valid")
}

pub fn abc() -> Alphabet {
    Alphabet::new(["a", "b", "c"]).unwrap()
}

pub fn abcd() -> Alphabet {
    Alphabet::new(["a", "b", "c", "d"]).unwrap()
}

pub fn abcde() -> Alphabet {
    Alphabet::new(["a", "b", "c", "d", "e"]).unwrap()
}

/// Splits a string of single-character symbol names into a symbol sequence.
pub fn seq(alphabet: &Alphabet, text: &str) -> Vec<Symbol> {
    text.chars()
        .map(|c| alphabet.index_of(&c.to_string()).expect("fixture symbol"))
        .collect()
}

/// The classic prefix-free four-symbol table (a→000, b→001, c→01, d→1) as a
/// 1-code-tuple. Optimal for [`mu4`].
pub fn single_table_huffman() -> CodeTuple {
    tuple(abcd(), &[(&["000", "001", "01", "1"], &[0, 0, 0, 0])])
}

/// A two-table code with 2-bit decoding delay that beats the single-table
/// optimum on [`mu4`]: average length 28/15 < 19/10.
pub fn two_table_aifv() -> CodeTuple {
    tuple(
        abcd(),
        &[
            (&["100", "00", "01", "1"], &[0, 0, 0, 1]),
            (&["1100", "11", "01", "10"], &[0, 1, 0, 0]),
        ],
    )
}

/// Four tables over {a,b,c}; table 3 loops on itself emitting nothing, so
/// the tuple is not extendable. 2-bit but not 1-bit delay decodable.
pub fn alpha() -> CodeTuple {
    tuple(
        abc(),
        &[
            (&["", "000", "001"], &[1, 1, 2]),
            (&["110", "", "110"], &[3, 2, 1]),
            (&["010", "011", "10"], &[0, 1, 2]),
            (&["", "", ""], &[3, 3, 3]),
        ],
    )
}

/// Three tables over {a,b,c,d,e}; 1-bit but not 0-bit delay decodable.
pub fn beta() -> CodeTuple {
    tuple(
        abcde(),
        &[
            (&["11", "", "101", "1011", "1101"], &[2, 1, 1, 1, 2]),
            (&["0110", "0110", "01", "0111", "01110"], &[1, 2, 1, 2, 2]),
            (&["10", "11", "1000", "1001", "11100"], &[2, 1, 0, 1, 2]),
        ],
    )
}

/// The rotation of [`beta`]; 0-bit delay decodable.
pub fn gamma() -> CodeTuple {
    tuple(
        abcde(),
        &[
            (&["111", "0", "1010", "10110", "11011"], &[2, 1, 1, 1, 2]),
            (&["1100", "1101", "10", "1111", "11101"], &[1, 2, 1, 2, 2]),
            (&["01", "10", "000", "0010", "11001"], &[2, 1, 0, 1, 2]),
        ],
    )
}

/// The rotation of [`gamma`] and a rotation fixpoint: every first-bit set
/// is {0,1}.
pub fn delta() -> CodeTuple {
    tuple(
        abcde(),
        &[
            (&["111", "01", "10101", "101101", "11011"], &[2, 1, 1, 1, 2]),
            (&["1001", "101", "01", "111", "1101"], &[1, 2, 1, 2, 2]),
            (&["01", "101", "000", "00101", "11001"], &[2, 1, 0, 1, 2]),
        ],
    )
}

/// (1/10, 2/10, 3/10, 4/10) over {a,b,c,d}.
pub fn mu4() -> Distribution {
    Distribution::new(
        abcd(),
        vec![ratio(1, 10), ratio(2, 10), ratio(3, 10), ratio(4, 10)],
    )
    .unwrap()
}

/// (1/10, 2/10, 2/10, 2/10, 3/10) over {a,b,c,d,e}.
pub fn mu5() -> Distribution {
    Distribution::new(
        abcde(),
        vec![
            ratio(1, 10),
            ratio(2, 10),
            ratio(2, 10),
            ratio(2, 10),
            ratio(3, 10),
        ],
    )
    .unwrap()
}

/// Every tuple fixture paired with a short label, for sweep-style tests.
pub fn all_tuples() -> Vec<(&'static str, CodeTuple)> {
    vec![
        ("huffman", single_table_huffman()),
        ("aifv", two_table_aifv()),
        ("alpha", alpha()),
        ("beta", beta()),
        ("gamma", gamma()),
        ("delta", delta()),
    ]
}

/// Parses a codeword literal in tests.
pub fn bitstr(s: &str) -> BitString {
    s.parse().unwrap()
}
