//! The rotation transform: moving each table's forced bit across codeword
//! boundaries. Iterated rotation normalizes a decodable tuple into one
//! whose every first-bit set is {0,1}, which for delay 1 lands in the
//! instantaneous class with the same average length.

use crate::delay::is_k_bit_delay_decodable;
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::markov::{is_regular, table_length};
use crate::structure::{first_bit_set, fork_depth, forced_bit, is_fork, is_prefix_free, ForcedBit};
use crate::tuple::{CodeTable, CodeTuple};

/// The rotation orbit of a tuple: `steps[0]` is the input, each later entry
/// the rotation of the previous, and `steps[fixpoint_index]` is in the fork
/// class (rotating it returns itself).
#[derive(Clone, Debug)]
pub struct RotationTrace {
    pub steps: Vec<CodeTuple>,
    pub fixpoint_index: usize,
}

/// Applies one rotation: each codeword gains the forced bit of its
/// successor table at the back and, when the table's own first bit is
/// forced, loses that bit at the front. Transitions are unchanged.
///
/// Requires an extendable tuple; a table with an empty first-bit set has no
/// forced bit to move.
pub fn rotate(f: &CodeTuple) -> Result<CodeTuple> {
    let m = f.table_count();
    let mut forced: Vec<ForcedBit> = Vec::with_capacity(m);
    for i in 0..m {
        forced.push(forced_bit(f, i).map_err(|_| Error::NotExtendable)?);
    }
    let mut tables = Vec::with_capacity(m);
    for i in 0..m {
        let keep_head = first_bit_set(f, i)?.is_both();
        let mut words = Vec::with_capacity(f.alphabet().len());
        for s in f.alphabet().symbols() {
            let appended = f
                .codeword(i, s)
                .concat(&forced[f.transition(i, s)].bit_string());
            if keep_head {
                words.push(appended);
            } else {
                debug_assert_eq!(
                    appended.first(),
                    forced[i].bit_string().first(),
                    "a singleton first-bit set forces the head bit"
                );
                words.push(appended.tail()?);
            }
        }
        tables.push(CodeTable::new(words));
    }
    CodeTuple::new(f.alphabet().clone(), tables, f.transitions().to_vec())
}

/// Which preconditions [`normalize_to_fork`] verifies before iterating.
#[derive(Clone, Copy, Debug)]
pub struct NormalizeOptions {
    pub check_extendable: bool,
    pub check_k_dec: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            check_extendable: true,
            check_k_dec: true,
        }
    }
}

/// Rotates until every first-bit set is {0,1}, recording each step. The
/// step count is capped by the largest fork depth of the input; exceeding
/// the cap would contradict the descent of fork depths under rotation and
/// is reported as an internal invariant violation.
pub fn rotation_trace(f: &CodeTuple, k: usize, opts: NormalizeOptions) -> Result<RotationTrace> {
    if opts.check_extendable && !crate::structure::is_extendable(f) {
        return Err(Error::NotExtendable);
    }
    if opts.check_k_dec && !is_k_bit_delay_decodable(f, k) {
        return Err(Error::NotKDec { k });
    }
    let mut cap = 0usize;
    for i in 0..f.table_count() {
        cap = cap.max(fork_depth(f, i)?);
    }
    let mut steps = vec![f.clone()];
    for _ in 0..=cap {
        let current = steps.last().unwrap();
        if is_fork(current) {
            return Ok(RotationTrace {
                fixpoint_index: steps.len() - 1,
                steps,
            });
        }
        let next = rotate(current)?;
        steps.push(next);
    }
    if is_fork(steps.last().unwrap()) {
        return Ok(RotationTrace {
            fixpoint_index: steps.len() - 1,
            steps,
        });
    }
    Err(Error::InternalInvariantViolation(format!(
        "no fork fixpoint within {cap} rotations"
    )))
}

/// Returns the fork-class tuple reached by iterated rotation together with
/// the number of rotations applied.
pub fn normalize_to_fork(
    f: &CodeTuple,
    k: usize,
    opts: NormalizeOptions,
) -> Result<(CodeTuple, usize)> {
    let trace = rotation_trace(f, k, opts)?;
    let steps = trace.fixpoint_index;
    Ok((trace.steps.into_iter().nth(steps).unwrap(), steps))
}

/// Transforms a 1-bit-delay decodable tuple into an instantaneous one with
/// the same average length, by normalizing into the fork class. Every table
/// of the result must come out prefix-free; anything else would contradict
/// the reduction and is reported as an internal invariant violation.
pub fn reduce_1dec_to_0dec(f: &CodeTuple) -> Result<CodeTuple> {
    let (out, _) = normalize_to_fork(f, 1, NormalizeOptions::default())?;
    if !out.tables().iter().all(is_prefix_free) {
        return Err(Error::InternalInvariantViolation(
            "fork normalization of a 1-bit-delay decodable tuple is not prefix-free".into(),
        ));
    }
    Ok(out)
}

/// Extracts the single table minimizing the per-table average length
/// (lowest index on ties) as a 1-code-tuple. Its average length never
/// exceeds the tuple's.
pub fn best_single_table(f: &CodeTuple, mu: &Distribution) -> Result<CodeTuple> {
    if !is_regular(f, mu)? {
        return Err(Error::NotRegular);
    }
    let mut best = 0usize;
    let mut best_len = table_length(f, 0, mu)?;
    for i in 1..f.table_count() {
        let len = table_length(f, i, mu)?;
        if len < best_len {
            best = i;
            best_len = len;
        }
    }
    CodeTuple::new(
        f.alphabet().clone(),
        vec![f.table(best).clone()],
        vec![vec![0; f.alphabet().len()]],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encode::{encode_star, next_table};
    use crate::fixtures;
    use crate::markov::average_length;
    use crate::rational::ratio;

    #[test]
    fn rotation_chain_is_bit_exact() {
        assert_eq!(rotate(&fixtures::beta()).unwrap(), fixtures::gamma());
        assert_eq!(rotate(&fixtures::gamma()).unwrap(), fixtures::delta());
        assert_eq!(rotate(&fixtures::delta()).unwrap(), fixtures::delta());
    }

    #[test]
    fn non_extendable_tuple_is_rejected() {
        assert_eq!(rotate(&fixtures::alpha()).unwrap_err(), Error::NotExtendable);
    }

    #[test]
    fn rotation_identity_on_a_sequence() {
        // d_i ++ rotated-output == output ++ d_next, on the worked example.
        let f = fixtures::beta();
        let rotated = rotate(&f).unwrap();
        let x = fixtures::seq(f.alphabet(), "baed");
        let d2 = forced_bit(&f, 2).unwrap().bit_string();
        let lhs = d2.concat(&encode_star(&rotated, 2, &x).unwrap());
        let out = encode_star(&f, 2, &x).unwrap();
        let d_end = forced_bit(&f, next_table(&f, 2, &x).unwrap())
            .unwrap()
            .bit_string();
        let rhs = out.concat(&d_end);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, fixtures::bitstr("1101100111010010"));
        assert_eq!(lhs.len(), 16);
    }

    #[test]
    fn beta_normalizes_to_delta_in_two_steps() {
        let (out, steps) =
            normalize_to_fork(&fixtures::beta(), 1, NormalizeOptions::default()).unwrap();
        assert_eq!(out, fixtures::delta());
        assert_eq!(steps, 2);
    }

    #[test]
    fn delta_is_already_a_fixpoint() {
        let (out, steps) =
            normalize_to_fork(&fixtures::delta(), 0, NormalizeOptions::default()).unwrap();
        assert_eq!(out, fixtures::delta());
        assert_eq!(steps, 0);
    }

    #[test]
    fn trace_records_the_orbit() {
        let trace = rotation_trace(&fixtures::beta(), 1, NormalizeOptions::default()).unwrap();
        assert_eq!(trace.steps.len(), 3);
        assert_eq!(trace.fixpoint_index, 2);
        assert_eq!(trace.steps[1], fixtures::gamma());
        assert!(crate::structure::is_fork(&trace.steps[2]));
    }

    #[test]
    fn reduction_reaches_the_instantaneous_class() {
        let out = reduce_1dec_to_0dec(&fixtures::beta()).unwrap();
        assert_eq!(out, fixtures::delta());
        assert!(is_k_bit_delay_decodable(&out, 0));
        let mu = fixtures::mu5();
        assert_eq!(
            average_length(&out, &mu).unwrap(),
            average_length(&fixtures::beta(), &mu).unwrap()
        );
    }

    #[test]
    fn preconditions_are_reported() {
        assert_eq!(
            normalize_to_fork(&fixtures::alpha(), 1, NormalizeOptions::default()).unwrap_err(),
            Error::NotExtendable
        );
        assert_eq!(
            normalize_to_fork(&fixtures::beta(), 0, NormalizeOptions::default()).unwrap_err(),
            Error::NotKDec { k: 0 }
        );
    }

    #[test]
    fn best_table_extraction() {
        let mu = fixtures::mu5();
        let d = fixtures::delta();
        let single = best_single_table(&d, &mu).unwrap();
        assert_eq!(single.table_count(), 1);
        assert_eq!(single.table(0), d.table(1)); // L_1 = 3.2 is minimal
        assert_eq!(average_length(&single, &mu).unwrap(), ratio(16, 5));

        let b = fixtures::beta();
        let single = best_single_table(&b, &mu).unwrap();
        assert_eq!(single.table(0), b.table(0)); // L_0 = 2.8 is minimal
        assert_eq!(average_length(&single, &mu).unwrap(), ratio(14, 5));

        let h = fixtures::single_table_huffman();
        let same = best_single_table(&h, &fixtures::mu4()).unwrap();
        assert_eq!(same, h);
    }
}
