//! The table-index Markov chain of a code-tuple: transition probabilities,
//! regularity, the stationary distribution, and average codeword lengths.
//! All arithmetic is exact.

use num_traits::{One, Signed, Zero};

use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tuple::CodeTuple;

/// Row-stochastic m×m matrix: entry (i, j) is the probability of moving to
/// table j immediately after encoding from table i.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrix {
    entries: Vec<Vec<Rational>>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }
}

/// The unique solution of πQ = π, Σπ = 1 for a regular tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct StationaryDistribution {
    pi: Vec<Rational>,
}

impl StationaryDistribution {
    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    pub fn entry(&self, i: usize) -> &Rational {
        &self.pi[i]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.pi
    }
}

fn check_alphabets(f: &CodeTuple, mu: &Distribution) -> Result<()> {
    if f.alphabet() != mu.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

/// Q(F): entry (i, j) sums μ(s) over the symbols with τ_i(s) = j.
pub fn transition_matrix(f: &CodeTuple, mu: &Distribution) -> Result<TransitionMatrix> {
    check_alphabets(f, mu)?;
    let m = f.table_count();
    let mut entries = vec![vec![Rational::zero(); m]; m];
    for i in 0..m {
        for s in f.alphabet().symbols() {
            let j = f.transition(i, s);
            entries[i][j] += mu.prob(s);
        }
    }
    Ok(TransitionMatrix { entries })
}

/// Outcome of eliminating the stationary system: the rank of the
/// coefficient matrix (Qᵀ − I stacked with the all-ones row) and, when that
/// rank is full, the unique solution.
struct Elimination {
    rank: usize,
    solution: Option<Vec<Rational>>,
}

/// Exact Gauss-Jordan elimination of the (m+1)×m system
/// (Qᵀ − I)π = 0, Σπ = 1.
fn eliminate(q: &TransitionMatrix) -> Result<Elimination> {
    let m = q.size();
    // Augmented rows: m columns of coefficients plus the right-hand side.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for j in 0..m {
        let mut row = Vec::with_capacity(m + 1);
        for i in 0..m {
            let mut v = q.entry(i, j).clone();
            if i == j {
                v -= Rational::one();
            }
            row.push(v);
        }
        row.push(Rational::zero());
        rows.push(row);
    }
    rows.push(vec![Rational::one(); m + 1]);

    let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0;
    for col in 0..m {
        let Some(r) = (next_row..rows.len()).find(|r| !rows[*r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, r);
        let inv = rows[next_row][col].recip();
        for v in rows[next_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..=m {
                    let delta = &factor * &rows[next_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_rows.push((next_row, col));
        next_row += 1;
    }
    let rank = pivot_rows.len();
    if rank < m {
        return Ok(Elimination { rank, solution: None });
    }
    // Full rank: the remaining row must have reduced to 0 = 0, since a
    // stationary distribution always exists for a row-stochastic matrix.
    for row in rows.iter().skip(rank) {
        if !row[m].is_zero() {
            return Err(Error::InternalInvariantViolation(
                "stationary system is inconsistent".into(),
            ));
        }
    }
    let mut solution = vec![Rational::zero(); m];
    for (row, col) in pivot_rows {
        solution[col] = rows[row][m].clone();
    }
    Ok(Elimination {
        rank,
        solution: Some(solution),
    })
}

/// Whether πQ = π, Σπ = 1 has exactly one solution, decided by an exact
/// rank computation.
pub fn is_regular(f: &CodeTuple, mu: &Distribution) -> Result<bool> {
    let q = transition_matrix(f, mu)?;
    Ok(eliminate(&q)?.rank == q.size())
}

/// The unique stationary distribution of a regular tuple.
pub fn stationary(f: &CodeTuple, mu: &Distribution) -> Result<StationaryDistribution> {
    let q = transition_matrix(f, mu)?;
    let elim = eliminate(&q)?;
    let Some(pi) = elim.solution else {
        return Err(Error::NotRegular);
    };
    // A unique solution of a stochastic system is a probability vector;
    // anything else is an elimination bug.
    if pi.iter().any(|p| p.is_negative()) {
        return Err(Error::InternalInvariantViolation(
            "stationary solution has a negative entry".into(),
        ));
    }
    Ok(StationaryDistribution { pi })
}

/// Expected codeword length of a single table, Σ |f_i(s)|·μ(s).
pub fn table_length(f: &CodeTuple, i: usize, mu: &Distribution) -> Result<Rational> {
    check_alphabets(f, mu)?;
    f.check_table_index(i)?;
    let mut sum = Rational::zero();
    for s in f.alphabet().symbols() {
        sum += mu.prob(s) * Rational::from_integer(f.codeword(i, s).len().into());
    }
    Ok(sum)
}

/// The stationary-weighted average codeword length L(F) = Σ π_i L_i.
pub fn average_length(f: &CodeTuple, mu: &Distribution) -> Result<Rational> {
    let pi = stationary(f, mu)?;
    let mut sum = Rational::zero();
    for i in 0..f.table_count() {
        sum += pi.entry(i) * table_length(f, i, mu)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fixtures;
    use crate::rational::ratio;
    use crate::tuple::{CodeTable, CodeTuple};

    fn beta_and_mu() -> (CodeTuple, Distribution) {
        (fixtures::beta(), fixtures::mu5())
    }

    #[test]
    fn beta_transition_matrix() {
        let (f, mu) = beta_and_mu();
        let q = transition_matrix(&f, &mu).unwrap();
        let expect = [
            [ratio(0, 1), ratio(3, 5), ratio(2, 5)],
            [ratio(0, 1), ratio(3, 10), ratio(7, 10)],
            [ratio(1, 5), ratio(2, 5), ratio(2, 5)],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.entry(i, j), &expect[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn rows_are_stochastic() {
        let (f, mu) = beta_and_mu();
        let q = transition_matrix(&f, &mu).unwrap();
        for i in 0..q.size() {
            let sum: Rational = q.row(i).iter().cloned().sum();
            assert!(sum.is_one());
        }
    }

    #[test]
    fn beta_stationary_distribution() {
        let (f, mu) = beta_and_mu();
        assert!(is_regular(&f, &mu).unwrap());
        let pi = stationary(&f, &mu).unwrap();
        assert_eq!(pi.entries(), &[ratio(7, 68), ratio(26, 68), ratio(35, 68)]);
    }

    #[test]
    fn beta_lengths() {
        let (f, mu) = beta_and_mu();
        assert_eq!(table_length(&f, 0, &mu).unwrap(), ratio(14, 5));
        assert_eq!(table_length(&f, 1, &mu).unwrap(), ratio(39, 10));
        assert_eq!(table_length(&f, 2, &mu).unwrap(), ratio(37, 10));
        assert_eq!(average_length(&f, &mu).unwrap(), ratio(501, 136));
    }

    #[test]
    fn single_table_is_always_regular() {
        let f = fixtures::single_table_huffman();
        let mu = fixtures::mu4();
        let q = transition_matrix(&f, &mu).unwrap();
        assert_eq!(q.entry(0, 0), &ratio(1, 1));
        assert!(is_regular(&f, &mu).unwrap());
        assert_eq!(stationary(&f, &mu).unwrap().entries(), &[ratio(1, 1)]);
        assert_eq!(average_length(&f, &mu).unwrap(), ratio(19, 10));
    }

    #[test]
    fn aifv_pair_values() {
        let f = fixtures::two_table_aifv();
        let mu = fixtures::mu4();
        let q = transition_matrix(&f, &mu).unwrap();
        assert_eq!(q.row(0), &[ratio(3, 5), ratio(2, 5)]);
        assert_eq!(q.row(1), &[ratio(4, 5), ratio(1, 5)]);

        // Independent two-state closed form: π = (q10, q01) / (q01 + q10).
        let denom = q.entry(0, 1) + q.entry(1, 0);
        let closed = [q.entry(1, 0) / &denom, q.entry(0, 1) / &denom];
        assert_eq!(closed, [ratio(2, 3), ratio(1, 3)]);

        let pi = stationary(&f, &mu).unwrap();
        assert_eq!(pi.entries(), &closed);
        assert_eq!(average_length(&f, &mu).unwrap(), ratio(28, 15));
        assert!(average_length(&f, &mu).unwrap() < ratio(19, 10));
    }

    #[test]
    fn two_absorbing_states_are_not_regular() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let f = CodeTuple::new(
            a.clone(),
            vec![
                CodeTable::new(vec![fixtures::bitstr("0"), fixtures::bitstr("1")]),
                CodeTable::new(vec![fixtures::bitstr("0"), fixtures::bitstr("1")]),
            ],
            vec![vec![0, 0], vec![1, 1]],
        )
        .unwrap();
        let mu = Distribution::new(a, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert!(!is_regular(&f, &mu).unwrap());
        assert_eq!(stationary(&f, &mu), Err(Error::NotRegular));
    }

    #[test]
    fn empty_table_has_zero_length() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let f = CodeTuple::new(
            a.clone(),
            vec![CodeTable::new(vec![
                fixtures::bitstr(""),
                fixtures::bitstr(""),
            ])],
            vec![vec![0, 0]],
        )
        .unwrap();
        let mu = Distribution::new(a, vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(table_length(&f, 0, &mu).unwrap(), ratio(0, 1));
    }

    #[test]
    fn mismatched_alphabets_error() {
        let f = fixtures::beta();
        let mu = fixtures::mu4();
        assert_eq!(
            transition_matrix(&f, &mu).unwrap_err(),
            Error::AlphabetMismatch
        );
    }
}
