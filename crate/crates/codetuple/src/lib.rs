//! Time-variant variable-length codes with bounded decoding delay.
//!
//! A code-tuple couples `m` code tables with `m` transition maps: each
//! encoded symbol picks the table for the next one, so the encoder is a
//! finite-state machine over tables. This crate implements:
//!
//! - the encoder (`encode`) and a k-bit-lookahead decoder (`delay`),
//! - an exact decision procedure for k-bit-delay decodability, with
//!   certified counterexamples and an independent brute-force refuter,
//! - structural analyses (`structure`): first-bit sets, forced bits,
//!   extendability, fork membership and fork depth, prefix-freeness,
//! - the rotation transform (`rotate`) that shifts forced bits across
//!   codeword boundaries, and the reduction it induces from 1-bit-delay
//!   decodable tuples to instantaneous ones,
//! - exact average-length analysis over the table-index Markov chain
//!   (`markov`) and Huffman baselines (`huffman`),
//! - an enumeration harness (`explore`) that sweeps bounded tuple spaces
//!   and confirms, at desk scale, that nothing 1-bit-delay decodable beats
//!   the Huffman length.
//!
//! All probability and length arithmetic is exact rational; nothing is
//! compared through floating point.
//!
//! ```
//! use codetuple::{fixtures, encode, delay, markov, rational::ratio};
//!
//! let f = fixtures::two_table_aifv();
//! let mu = fixtures::mu4();
//! let x = fixtures::seq(f.alphabet(), "adbac");
//! let bits = encode::encode_star(&f, 0, &x).unwrap();
//! assert_eq!(bits.to_string(), "100111110001");
//! assert_eq!(delay::decode(&f, 0, &bits, 2).unwrap()[..3], x[..3]);
//! assert!(delay::is_k_bit_delay_decodable(&f, 2));
//! assert_eq!(markov::average_length(&f, &mu).unwrap(), ratio(28, 15));
//! ```

pub mod alphabet;
pub mod bits;
pub mod delay;
pub mod dist;
pub mod encode;
pub mod error;
pub mod explore;
pub mod fixtures;
pub mod huffman;
pub mod markov;
pub mod rational;
pub mod rotate;
pub mod structure;
pub mod tuple;

pub use alphabet::{Alphabet, Symbol};
pub use bits::BitString;
pub use delay::{CompetitorConfig, DelayWitness, PairClass};
pub use dist::Distribution;
pub use error::{Error, Result};
pub use explore::{SearchSpace, TheoremReport};
pub use huffman::HuffmanResult;
pub use markov::{StationaryDistribution, TransitionMatrix};
pub use rational::Rational;
pub use rotate::RotationTrace;
pub use structure::{FirstBitSet, ForcedBit};
pub use tuple::{CodeTable, CodeTuple};
