//! Structural analyses of a code-tuple: which bits can begin its output,
//! which bit is forced, whether it can always keep emitting, and where the
//! output tree first branches.

use std::collections::HashSet;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::tuple::{CodeTable, CodeTuple};

/// The subset of {0, 1} whose members can start some output emitted from a
/// given table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FirstBitSet {
    pub zero: bool,
    pub one: bool,
}

impl FirstBitSet {
    pub const EMPTY: FirstBitSet = FirstBitSet { zero: false, one: false };
    pub const BOTH: FirstBitSet = FirstBitSet { zero: true, one: true };

    pub fn is_empty(&self) -> bool {
        !self.zero && !self.one
    }

    pub fn is_both(&self) -> bool {
        self.zero && self.one
    }

    pub fn contains(&self, bit: u8) -> bool {
        if bit == 0 {
            self.zero
        } else {
            self.one
        }
    }

    /// Whether `self ⊇ other`.
    pub fn superset_of(&self, other: &FirstBitSet) -> bool {
        (self.zero || !other.zero) && (self.one || !other.one)
    }
}

/// The forced first bit of a table's output: the unique member of the
/// first-bit set when it is a singleton, `Empty` (λ) when both bits occur.
/// Undefined when the set is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcedBit {
    Zero,
    One,
    Empty,
}

impl ForcedBit {
    pub fn len(&self) -> usize {
        match self {
            ForcedBit::Empty => 0,
            _ => 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ForcedBit::Empty)
    }

    pub fn bit_string(&self) -> BitString {
        match self {
            ForcedBit::Zero => BitString::from_bits(&[0]),
            ForcedBit::One => BitString::from_bits(&[1]),
            ForcedBit::Empty => BitString::empty(),
        }
    }
}

/// The exact set of achievable first bits of output from table `i`,
/// computed as a reachability closure over transitions whose codeword is
/// empty. A bit is achievable iff some table reachable from `i` through
/// λ-emitting symbols holds a codeword starting with it.
pub fn first_bit_set(f: &CodeTuple, i: usize) -> Result<FirstBitSet> {
    f.check_table_index(i)?;
    let mut set = FirstBitSet::EMPTY;
    let mut seen = vec![false; f.table_count()];
    let mut stack = vec![i];
    seen[i] = true;
    while let Some(t) = stack.pop() {
        for s in f.alphabet().symbols() {
            let w = f.codeword(t, s);
            match w.first() {
                Some(0) => set.zero = true,
                Some(_) => set.one = true,
                None => {
                    let next = f.transition(t, s);
                    if !seen[next] {
                        seen[next] = true;
                        stack.push(next);
                    }
                }
            }
            if set.is_both() {
                return Ok(set);
            }
        }
    }
    Ok(set)
}

pub fn forced_bit(f: &CodeTuple, i: usize) -> Result<ForcedBit> {
    let set = first_bit_set(f, i)?;
    match (set.zero, set.one) {
        (true, false) => Ok(ForcedBit::Zero),
        (false, true) => Ok(ForcedBit::One),
        (true, true) => Ok(ForcedBit::Empty),
        (false, false) => Err(Error::UndefinedForcedBit(i)),
    }
}

/// Whether every table can emit at least one bit of output, i.e. every
/// first-bit set is non-empty.
pub fn is_extendable(f: &CodeTuple) -> bool {
    (0..f.table_count()).all(|i| !first_bit_set(f, i).unwrap().is_empty())
}

/// Whether every first-bit set equals {0, 1}.
pub fn is_fork(f: &CodeTuple) -> bool {
    (0..f.table_count()).all(|i| first_bit_set(f, i).unwrap().is_both())
}

/// Whether no codeword of the table is a prefix of another. Any empty or
/// duplicate codeword fails this.
pub fn is_prefix_free(table: &CodeTable) -> bool {
    let words = table.codewords();
    for (i, w) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if i != j && w.is_prefix_of(v) {
                return false;
            }
        }
    }
    true
}

/// Default iteration budget for [`fork_depth`].
pub fn default_fork_budget(f: &CodeTuple) -> usize {
    f.max_codeword_len().max(1) * f.table_count() * 4
}

/// The depth of the shallowest branching point of the output tree rooted at
/// table `i`: the number of forced bits emitted before both continuations
/// 0 and 1 become achievable.
///
/// Tracks the set of live output configurations `(table, bits committed
/// beyond the accepted prefix)` and advances one forced bit at a time.
/// Returns `NoForkFound` if no branch appears within the budget, which
/// signals a tuple outside the extendable, delay-decodable class (or a
/// budget that is too small).
pub fn fork_depth(f: &CodeTuple, i: usize) -> Result<usize> {
    fork_depth_with_budget(f, i, default_fork_budget(f))
}

pub fn fork_depth_with_budget(f: &CodeTuple, i: usize, budget: usize) -> Result<usize> {
    f.check_table_index(i)?;
    // A configuration holds a non-empty pending emission; expansion walks
    // λ-codeword transitions until each branch commits a real codeword.
    let mut configs: HashSet<(usize, BitString)> = HashSet::new();
    expand(f, i, &mut configs);
    for depth in 0..=budget {
        let mut zero = false;
        let mut one = false;
        for (_, s) in &configs {
            match s.bit(0) {
                0 => zero = true,
                _ => one = true,
            }
        }
        if zero && one {
            return Ok(depth);
        }
        if !zero && !one {
            // The output tree died out; only possible outside F_ext.
            return Err(Error::NoForkFound { budget });
        }
        let mut next: HashSet<(usize, BitString)> = HashSet::new();
        for (t, s) in &configs {
            let rest = s.suffix_from(1);
            if rest.is_empty() {
                expand(f, *t, &mut next);
            } else {
                next.insert((*t, rest));
            }
        }
        configs = next;
    }
    Err(Error::NoForkFound { budget })
}

/// Replaces a `(table, λ)` configuration by the set of configurations after
/// the next non-empty codeword, following λ codewords with cycle detection.
fn expand(f: &CodeTuple, start: usize, out: &mut HashSet<(usize, BitString)>) {
    let mut seen = vec![false; f.table_count()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(t) = stack.pop() {
        for s in f.alphabet().symbols() {
            let w = f.codeword(t, s);
            let next = f.transition(t, s);
            if w.is_empty() {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            } else {
                out.insert((next, w.clone()));
            }
        }
    }
}
