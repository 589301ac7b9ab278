//! Huffman code construction over exact rational probabilities, plus the
//! Kraft sum.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_traits::Zero;

use crate::bits::BitString;
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::rational::{pow2_inverse, Rational};
use crate::tuple::CodeTable;

/// A prefix-free table of minimal expected length, together with that
/// length.
#[derive(Clone, Debug, PartialEq)]
pub struct HuffmanResult {
    pub table: CodeTable,
    pub length: Rational,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    prob: Rational,
    min_symbol: usize,
    seq: usize,
}

enum Node {
    Leaf(usize),
    Internal(Box<Node>, Box<Node>),
}

struct HeapEntry {
    key: Key,
    node: Node,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

/// Builds a Huffman code for `mu`. Ties in the merge queue are broken by
/// (probability, earliest contained symbol, creation order), and bit 0 goes
/// to the lower-ordered branch of every merge, so the output is
/// deterministic.
pub fn huffman_code(mu: &Distribution) -> Result<HuffmanResult> {
    let sigma = mu.alphabet().len();
    if sigma < 2 {
        return Err(Error::AlphabetTooSmall(sigma));
    }
    let mut heap: BinaryHeap<Reverse<HeapEntry>> = BinaryHeap::new();
    for s in mu.alphabet().symbols() {
        heap.push(Reverse(HeapEntry {
            key: Key {
                prob: mu.prob(s).clone(),
                min_symbol: s.0,
                seq: s.0,
            },
            node: Node::Leaf(s.0),
        }));
    }
    let mut seq = sigma;
    while heap.len() >= 2 {
        let Reverse(lo) = heap.pop().unwrap();
        let Reverse(hi) = heap.pop().unwrap();
        heap.push(Reverse(HeapEntry {
            key: Key {
                prob: lo.key.prob + hi.key.prob,
                min_symbol: lo.key.min_symbol.min(hi.key.min_symbol),
                seq,
            },
            node: Node::Internal(Box::new(lo.node), Box::new(hi.node)),
        }));
        seq += 1;
    }
    let Reverse(HeapEntry { node: root, .. }) = heap.pop().unwrap();

    let mut codewords = vec![BitString::empty(); sigma];
    assign(&root, BitString::empty(), &mut codewords);
    let table = CodeTable::new(codewords);
    let mut length = Rational::zero();
    for s in mu.alphabet().symbols() {
        length += mu.prob(s) * Rational::from_integer(table.codeword(s).len().into());
    }
    Ok(HuffmanResult { table, length })
}

fn assign(node: &Node, prefix: BitString, out: &mut [BitString]) {
    match node {
        Node::Leaf(sym) => out[*sym] = prefix,
        Node::Internal(lo, hi) => {
            let mut zero = prefix.clone();
            zero.push(0);
            let mut one = prefix;
            one.push(1);
            assign(lo, zero, out);
            assign(hi, one, out);
        }
    }
}

/// Σ 2^(−|f(s)|) over the table; an empty codeword contributes 1.
pub fn kraft_sum(table: &CodeTable) -> Rational {
    table
        .codewords()
        .iter()
        .fold(Rational::zero(), |acc, w| acc + pow2_inverse(w.len()))
}

/// The minimal expected codeword length over prefix-free tables.
pub fn huffman_length(mu: &Distribution) -> Result<Rational> {
    Ok(huffman_code(mu)?.length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::dist::Distribution;
    use crate::fixtures;
    use crate::rational::ratio;
    use crate::structure::is_prefix_free;
    use num_traits::One;

    /// Independent optimum: exhaustive search over all codeword-length
    /// vectors satisfying the Kraft inequality, which by standard coding
    /// theory bounds the expected length of every prefix-free table from
    /// below and is achieved by some prefix-free table.
    fn exhaustive_optimal_length(mu: &Distribution, max_len: usize) -> Rational {
        let sigma = mu.alphabet().len();
        let mut best: Option<Rational> = None;
        let mut lens = vec![1usize; sigma];
        loop {
            let kraft: Rational = lens.iter().fold(Rational::zero(), |a, l| {
                a + crate::rational::pow2_inverse(*l)
            });
            if kraft <= Rational::one() {
                let mut cost = Rational::zero();
                for (i, l) in lens.iter().enumerate() {
                    cost += mu.probs()[i].clone() * Rational::from_integer((*l).into());
                }
                if best.as_ref().map_or(true, |b| cost < *b) {
                    best = Some(cost);
                }
            }
            // Odometer over length vectors in [1, max_len]^σ.
            let mut pos = 0;
            loop {
                if pos == sigma {
                    return best.expect("some feasible length vector");
                }
                lens[pos] += 1;
                if lens[pos] <= max_len {
                    break;
                }
                lens[pos] = 1;
                pos += 1;
            }
        }
    }

    #[test]
    fn four_symbol_baseline() {
        let mu = fixtures::mu4();
        let res = huffman_code(&mu).unwrap();
        assert_eq!(res.length, ratio(19, 10));
        let mut lens: Vec<usize> = res.table.codewords().iter().map(|w| w.len()).collect();
        assert_eq!(lens, vec![3, 3, 2, 1]);
        lens.sort_unstable();
        assert!(is_prefix_free(&res.table));
        assert_eq!(kraft_sum(&res.table), ratio(1, 1));
        assert_eq!(huffman_length(&mu).unwrap(), ratio(19, 10));
        assert_eq!(res.length, exhaustive_optimal_length(&mu, 4));
    }

    #[test]
    fn two_symbols() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let mu = Distribution::new(a, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        let res = huffman_code(&mu).unwrap();
        assert_eq!(res.length, ratio(1, 1));
        let lens: Vec<usize> = res.table.codewords().iter().map(|w| w.len()).collect();
        assert_eq!(lens, vec![1, 1]);
    }

    #[test]
    fn uniform_five_symbols() {
        let a = Alphabet::new(["a", "b", "c", "d", "e"]).unwrap();
        let mu = Distribution::uniform(a);
        let res = huffman_code(&mu).unwrap();
        let mut lens: Vec<usize> = res.table.codewords().iter().map(|w| w.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![2, 2, 2, 3, 3]);
        assert_eq!(res.length, ratio(12, 5));
        assert_eq!(res.length, exhaustive_optimal_length(&mu, 4));
    }

    #[test]
    fn five_symbol_example_distribution() {
        // Optimal lengths are (3, 3, 2, 2, 2): expected length 23/10,
        // matching the exhaustive oracle.
        let mu = fixtures::mu5();
        let res = huffman_code(&mu).unwrap();
        assert_eq!(res.length, ratio(23, 10));
        assert_eq!(res.length, exhaustive_optimal_length(&mu, 5));
    }

    #[test]
    fn kraft_sums_by_arithmetic() {
        let h = fixtures::single_table_huffman();
        assert_eq!(kraft_sum(h.table(0)), ratio(1, 1));

        // {0, 1, 10} is not uniquely decodable: the sum exceeds 1.
        let t = CodeTable::new(vec![
            fixtures::bitstr("0"),
            fixtures::bitstr("1"),
            fixtures::bitstr("10"),
        ]);
        assert_eq!(kraft_sum(&t), ratio(5, 4));

        // All-λ table: each codeword contributes 1.
        let a = fixtures::alpha();
        assert_eq!(kraft_sum(a.table(3)), ratio(3, 1));
    }

    #[test]
    fn sibling_property() {
        // The two least likely symbols get maximal, equal-length codewords.
        let mu = fixtures::mu4();
        let res = huffman_code(&mu).unwrap();
        let lens: Vec<usize> = res.table.codewords().iter().map(|w| w.len()).collect();
        let max = *lens.iter().max().unwrap();
        assert_eq!(lens[0], max);
        assert_eq!(lens[1], max);
    }
}
