//! The extended encoding map `f*_i` and table-index map `τ*_i`, plus a
//! streaming encoder.

use crate::alphabet::Symbol;
use crate::bits::BitString;
use crate::error::Result;
use crate::tuple::CodeTuple;

/// Encodes `x` starting from table `i` and returns the emitted codeword
/// sequence `f*_i(x)`. The empty input encodes to the empty string.
///
/// Implemented as a fold rather than by literal recursion so that the call
/// depth does not grow with `|x|`.
pub fn encode_star(f: &CodeTuple, i: usize, x: &[Symbol]) -> Result<BitString> {
    f.check_table_index(i)?;
    let mut out = BitString::empty();
    let mut table = i;
    for &s in x {
        f.check_symbol(s)?;
        out.extend(f.codeword(table, s));
        table = f.transition(table, s);
    }
    Ok(out)
}

/// The table index in effect after encoding `x` from table `i`, `τ*_i(x)`.
/// For the empty input this is `i` itself.
pub fn next_table(f: &CodeTuple, i: usize, x: &[Symbol]) -> Result<usize> {
    f.check_table_index(i)?;
    let mut table = i;
    for &s in x {
        f.check_symbol(s)?;
        table = f.transition(table, s);
    }
    Ok(table)
}

/// A position in the encoding process: the tuple plus the current table.
/// Advancing returns a fresh state, so states can be kept and forked freely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EncoderState<'a> {
    tuple: &'a CodeTuple,
    table: usize,
}

impl<'a> EncoderState<'a> {
    pub fn new(tuple: &'a CodeTuple, start: usize) -> Result<Self> {
        tuple.check_table_index(start)?;
        Ok(EncoderState { tuple, table: start })
    }

    pub fn table(&self) -> usize {
        self.table
    }

    /// Emits one symbol: returns the bits written and the successor state.
    /// Folding `step` over a sequence reproduces [`encode_star`] and
    /// [`next_table`].
    pub fn step(&self, s: Symbol) -> Result<(BitString, EncoderState<'a>)> {
        self.tuple.check_symbol(s)?;
        let emitted = self.tuple.codeword(self.table, s).clone();
        let next = EncoderState {
            tuple: self.tuple,
            table: self.tuple.transition(self.table, s),
        };
        Ok((emitted, next))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;
    use crate::error::Error;
    use crate::fixtures;

    #[test]
    fn beta_from_table_two() {
        let f = fixtures::beta();
        let x = fixtures::seq(f.alphabet(), "baed");
        assert_eq!(encode_star(&f, 2, &x).unwrap(), bits("110110011101001"));
        assert_eq!(next_table(&f, 2, &x).unwrap(), 1);
    }

    #[test]
    fn empty_input_is_identity() {
        let f = fixtures::beta();
        for i in 0..f.table_count() {
            assert_eq!(encode_star(&f, i, &[]).unwrap(), BitString::empty());
            assert_eq!(next_table(&f, i, &[]).unwrap(), i);
        }
    }

    #[test]
    fn huffman_table_encodes_flat() {
        let f = fixtures::single_table_huffman();
        let x = fixtures::seq(f.alphabet(), "adbac");
        assert_eq!(encode_star(&f, 0, &x).unwrap(), bits("000100100001"));
    }

    #[test]
    fn aifv_pair_encodes_flat() {
        let f = fixtures::two_table_aifv();
        let x = fixtures::seq(f.alphabet(), "adbac");
        assert_eq!(encode_star(&f, 0, &x).unwrap(), bits("100111110001"));
        // τ* over "ad": a stays on table 0, d moves to table 1.
        let ad = fixtures::seq(f.alphabet(), "ad");
        assert_eq!(next_table(&f, 0, &ad).unwrap(), 1);
    }

    #[test]
    fn stepping_matches_the_fold() {
        let f = fixtures::beta();
        let (emitted, state) = EncoderState::new(&f, 2)
            .unwrap()
            .step(Symbol(1))
            .unwrap();
        assert_eq!(emitted, bits("11"));
        assert_eq!(state.table(), 1);

        let g = fixtures::gamma();
        let (emitted, state) = EncoderState::new(&g, 0)
            .unwrap()
            .step(Symbol(1))
            .unwrap();
        assert_eq!(emitted, bits("0"));
        assert_eq!(state.table(), 1);
    }

    #[test]
    fn bad_inputs_error() {
        let f = fixtures::beta();
        assert!(matches!(
            encode_star(&f, 9, &[]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            encode_star(&f, 0, &[Symbol(99)]),
            Err(Error::UnknownSymbol(_))
        ));
    }
}
