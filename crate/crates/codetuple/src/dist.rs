//! Symbol probability distributions with exact rational entries.

use num_traits::{One, Signed, Zero};

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A probability distribution over an alphabet. Every entry is strictly
/// positive and the entries sum to exactly 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    alphabet: Alphabet,
    probs: Vec<Rational>,
}

impl Distribution {
    pub fn new(alphabet: Alphabet, probs: Vec<Rational>) -> Result<Self> {
        if probs.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch);
        }
        for (i, p) in probs.iter().enumerate() {
            if !p.is_positive() {
                return Err(Error::NonPositiveProbability(
                    alphabet.name(Symbol(i)).to_string(),
                ));
            }
        }
        let sum: Rational = probs.iter().fold(Rational::zero(), |a, p| a + p);
        if !sum.is_one() {
            return Err(Error::ProbabilitySum(sum.to_string()));
        }
        Ok(Distribution { alphabet, probs })
    }

    pub fn uniform(alphabet: Alphabet) -> Self {
        let n = alphabet.len();
        let probs = vec![Rational::new(1.into(), (n as i64).into()); n];
        Distribution { alphabet, probs }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn prob(&self, s: Symbol) -> &Rational {
        &self.probs[s.0]
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn accepts_exact_unit_sum() {
        let a = Alphabet::new(["a", "b", "c", "d"]).unwrap();
        let d = Distribution::new(
            a,
            vec![ratio(1, 10), ratio(2, 10), ratio(3, 10), ratio(4, 10)],
        )
        .unwrap();
        assert_eq!(d.prob(Symbol(3)), &ratio(2, 5));
    }

    #[test]
    fn rejects_bad_sums_and_zeros() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        assert!(matches!(
            Distribution::new(a.clone(), vec![ratio(1, 2), ratio(1, 3)]),
            Err(Error::ProbabilitySum(_))
        ));
        assert!(matches!(
            Distribution::new(a.clone(), vec![ratio(0, 1), ratio(1, 1)]),
            Err(Error::NonPositiveProbability(_))
        ));
        assert!(matches!(
            Distribution::new(a, vec![ratio(1, 1)]),
            Err(Error::AlphabetMismatch)
        ));
    }
}
