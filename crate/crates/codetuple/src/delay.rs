//! Deciding k-bit-delay decodability, classifying (sequence, lookahead)
//! pairs, refuting by bounded brute force, and decoding with k-bit
//! lookahead.
//!
//! The verifier explores pairs of a reference parse and a competitor parse.
//! A competitor is an alternative parse that diverged from the reference at
//! some symbol yet stays bit-compatible with everything the reference has
//! emitted. Its configuration keeps only the competitor's current table and
//! its surplus: the bits it has emitted beyond the reference output.
//! Normalization keeps every competitor ahead or even, so a surplus is
//! always a suffix of a single competitor codeword and the state space is
//! finite. The tuple fails at delay k exactly when some reachable pair
//! admits a common k-bit continuation on both sides.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::alphabet::Symbol;
use crate::bits::BitString;
use crate::encode::{encode_star, next_table};
use crate::error::{Error, Result};
use crate::structure::is_prefix_free;
use crate::tuple::CodeTuple;

/// State of the decodability automaton: the table the reference parse sits
/// in, the table the competitor parse sits in, and the competitor's surplus
/// bits beyond the reference output.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompetitorConfig {
    pub ref_table: usize,
    pub comp_table: usize,
    pub surplus: BitString,
}

/// Classification of a pair (x, c) relative to a start table: every
/// consistent continuation extends x (positive), none does (negative), both
/// vacuously because nothing is consistent, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    PositiveOnly,
    NegativeOnly,
    Both,
    Neither,
}

/// A certified failure of k-bit-delay decodability: the pair
/// `(reference, lookahead)` from `start_table` has both an extending and a
/// diverging consistent continuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelayWitness {
    pub start_table: usize,
    pub reference: Vec<Symbol>,
    pub lookahead: BitString,
    pub extending: Vec<Symbol>,
    pub diverging: Vec<Symbol>,
}

/// The achievable k-bit continuations after table `j`: every `c ∈ C^k` such
/// that some source sequence's output from `j` starts with `c`.
pub fn follow_set(f: &CodeTuple, j: usize, k: usize) -> Result<BTreeSet<BitString>> {
    f.check_table_index(j)?;
    Ok(follow_vec(f, j, k).into_iter().collect())
}

fn follow_vec(f: &CodeTuple, j: usize, k: usize) -> Vec<BitString> {
    if k == 0 {
        return vec![BitString::empty()];
    }
    let mut out: BTreeSet<BitString> = BTreeSet::new();
    let mut seen: HashSet<(usize, BitString)> = HashSet::new();
    let mut queue: VecDeque<(usize, BitString)> = VecDeque::new();
    seen.insert((j, BitString::empty()));
    queue.push_back((j, BitString::empty()));
    while let Some((t, acc)) = queue.pop_front() {
        for s in f.alphabet().symbols() {
            let w = f.codeword(t, s);
            if acc.len() + w.len() >= k {
                out.insert(acc.concat(w).prefix(k));
            } else {
                let next = (f.transition(t, s), acc.concat(w));
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Finds a sequence `y` whose output from table `j` starts with `target`,
/// shortest first; `None` when no output ever covers the target.
pub(crate) fn achieve(f: &CodeTuple, j: usize, target: &BitString) -> Option<Vec<Symbol>> {
    if target.is_empty() {
        return Some(Vec::new());
    }
    // BFS over (table, number of target bits matched).
    let n = target.len();
    let m = f.table_count();
    let idx = |t: usize, matched: usize| t * (n + 1) + matched;
    let mut parent: Vec<Option<(usize, Symbol)>> = vec![None; m * (n + 1)];
    let mut seen = vec![false; m * (n + 1)];
    let mut queue = VecDeque::new();
    seen[idx(j, 0)] = true;
    queue.push_back((j, 0usize));
    while let Some((t, matched)) = queue.pop_front() {
        for s in f.alphabet().symbols() {
            let w = f.codeword(t, s);
            let rest = &target.bits()[matched..];
            if w.len() >= rest.len() {
                if w.bits()[..rest.len()] == *rest {
                    let mut path = vec![s];
                    let mut cur = idx(t, matched);
                    while let Some((prev, sym)) = parent[cur] {
                        path.push(sym);
                        cur = prev;
                    }
                    path.reverse();
                    return Some(path);
                }
            } else if *w.bits() == rest[..w.len()] {
                let (nt, nm) = (f.transition(t, s), matched + w.len());
                let ni = idx(nt, nm);
                if !seen[ni] {
                    seen[ni] = true;
                    parent[ni] = Some((idx(t, matched), s));
                    queue.push_back((nt, nm));
                }
            }
        }
    }
    None
}

/// Shared tables for one automaton run.
struct Ctx<'a> {
    f: &'a CodeTuple,
    m: usize,
    k: usize,
    /// Every suffix of every codeword, sorted; surpluses index into this.
    suffixes: Vec<BitString>,
    /// follow[j][k'] for k' in 0..=k, each sorted.
    follow: Vec<Vec<Vec<BitString>>>,
}

impl<'a> Ctx<'a> {
    fn new(f: &'a CodeTuple, k: usize) -> Self {
        let m = f.table_count();
        let mut suffixes: BTreeSet<BitString> = BTreeSet::new();
        suffixes.insert(BitString::empty());
        for t in 0..m {
            for s in f.alphabet().symbols() {
                let w = f.codeword(t, s);
                for cut in 0..=w.len() {
                    suffixes.insert(w.suffix_from(cut));
                }
            }
        }
        let suffixes: Vec<BitString> = suffixes.into_iter().collect();
        let follow = (0..m)
            .map(|j| (0..=k).map(|kk| follow_vec(f, j, kk)).collect())
            .collect();
        Ctx {
            f,
            m,
            k,
            suffixes,
            follow,
        }
    }

    fn sid(&self, bits: &[u8]) -> u32 {
        self.suffixes
            .binary_search_by(|probe| probe.bits().cmp(bits))
            .expect("surplus is a codeword suffix") as u32
    }

    fn state(&self, j: usize, ct: usize, sid: u32) -> u32 {
        ((j * self.m + ct) * self.suffixes.len()) as u32 + sid
    }

    fn unpack(&self, state: u32) -> (usize, usize, u32) {
        let s = self.suffixes.len() as u32;
        let sid = state % s;
        let rest = (state / s) as usize;
        (rest / self.m, rest % self.m, sid)
    }

    fn state_count(&self) -> usize {
        self.m * self.m * self.suffixes.len()
    }

    /// The lexicographically least k-bit lookahead achievable by both the
    /// reference from `j` and the competitor from `(ct, surplus)`, if any.
    fn bad_lookahead(&self, j: usize, ct: usize, sid: u32) -> Option<BitString> {
        let s = &self.suffixes[sid as usize];
        if s.len() >= self.k {
            let c = s.prefix(self.k);
            if self.follow[j][self.k].binary_search(&c).is_ok() {
                return Some(c);
            }
            return None;
        }
        let rest_len = self.k - s.len();
        for c in &self.follow[j][self.k] {
            if s.is_prefix_of(c) {
                let rest = c.suffix_from(s.len());
                if self.follow[ct][rest_len].binary_search(&rest).is_ok() {
                    return Some(c.clone());
                }
            }
        }
        None
    }

    /// Advances a competitor that is behind by `pending` reference bits
    /// through every matching symbol choice until it is ahead or even.
    /// Yields (competitor table, surplus id, symbols consumed).
    fn normalize(&self, ct: usize, pending: &[u8]) -> Vec<(usize, u32, Vec<Symbol>)> {
        let mut out = Vec::new();
        let mut visited: HashSet<(usize, usize)> = HashSet::new();
        self.normalize_rec(ct, pending, &mut Vec::new(), &mut visited, &mut out);
        out
    }

    fn normalize_rec(
        &self,
        ct: usize,
        pending: &[u8],
        path: &mut Vec<Symbol>,
        visited: &mut HashSet<(usize, usize)>,
        out: &mut Vec<(usize, u32, Vec<Symbol>)>,
    ) {
        // `pending` only ever shrinks from the front of the original
        // emission, so (table, remaining length) identifies a search node.
        if !visited.insert((ct, pending.len())) {
            return;
        }
        for s in self.f.alphabet().symbols() {
            let w = self.f.codeword(ct, s);
            let next = self.f.transition(ct, s);
            if w.len() >= pending.len() {
                if w.bits()[..pending.len()] == *pending {
                    path.push(s);
                    out.push((next, self.sid(&w.bits()[pending.len()..]), path.clone()));
                    path.pop();
                }
            } else if *w.bits() == pending[..w.len()] {
                path.push(s);
                self.normalize_rec(next, &pending[w.len()..], path, visited, out);
                path.pop();
            }
        }
    }

    /// Successor states when the reference reads `ref_sym` from
    /// (j, ct, sid). The competitor consumes the reference emission from its
    /// surplus, dying on a bit mismatch and re-normalizing when the surplus
    /// runs out mid-emission.
    fn step(&self, j: usize, ct: usize, sid: u32, ref_sym: Symbol) -> Vec<(u32, Vec<Symbol>)> {
        let e = self.f.codeword(j, ref_sym);
        let s = &self.suffixes[sid as usize];
        let j2 = self.f.transition(j, ref_sym);
        if e.len() <= s.len() {
            if s.bits()[..e.len()] == *e.bits() {
                return vec![(self.state(j2, ct, self.sid(&s.bits()[e.len()..])), Vec::new())];
            }
            return Vec::new();
        }
        if e.bits()[..s.len()] == *s.bits() {
            return self
                .normalize(ct, &e.bits()[s.len()..])
                .into_iter()
                .map(|(ct2, sid2, path)| (self.state(j2, ct2, sid2), path))
                .collect();
        }
        Vec::new()
    }

    /// Spawn states: one per start table, reference symbol, and distinct
    /// competitor symbol whose codeword is prefix-comparable with the
    /// reference codeword. Any deeper divergence point is equivalent to a
    /// first-step divergence from the table reached there.
    fn spawns(&self) -> Vec<(u32, usize, Symbol, Vec<Symbol>)> {
        let mut out = Vec::new();
        for start in 0..self.m {
            for ref_sym in self.f.alphabet().symbols() {
                let e = self.f.codeword(start, ref_sym);
                let j2 = self.f.transition(start, ref_sym);
                for comp_sym in self.f.alphabet().symbols() {
                    if comp_sym == ref_sym {
                        continue;
                    }
                    let w = self.f.codeword(start, comp_sym);
                    let ct = self.f.transition(start, comp_sym);
                    if e.len() <= w.len() {
                        if w.bits()[..e.len()] == *e.bits() {
                            out.push((
                                self.state(j2, ct, self.sid(&w.bits()[e.len()..])),
                                start,
                                ref_sym,
                                vec![comp_sym],
                            ));
                        }
                    } else if *w.bits() == e.bits()[..w.len()] {
                        for (ct2, sid2, path) in self.normalize(ct, &e.bits()[w.len()..]) {
                            let mut comp = vec![comp_sym];
                            comp.extend(path);
                            out.push((self.state(j2, ct2, sid2), start, ref_sym, comp));
                        }
                    }
                }
            }
        }
        out
    }
}

struct EdgeRec {
    parent: Option<u32>,
    start: usize,
    ref_sym: Symbol,
    comp: Vec<Symbol>,
}

/// Breadth-first reachability over (reference table, competitor config)
/// pairs. `None` when no reachable pair is bad; `Some(witness)` when
/// tracking, `Some(None)` when a bad pair was found without tracking.
fn automaton_run(f: &CodeTuple, k: usize, track: bool) -> Option<Option<DelayWitness>> {
    debug_assert!(k >= 1);
    let ctx = Ctx::new(f, k);
    let mut disc_of: Vec<i64> = vec![-1; ctx.state_count()];
    let mut discovered: Vec<u32> = Vec::new();
    let mut edges: Vec<EdgeRec> = Vec::new();
    let mut bad: Option<(usize, BitString)> = None;

    'search: {
        for (state, start, ref_sym, comp) in ctx.spawns() {
            if disc_of[state as usize] >= 0 {
                continue;
            }
            disc_of[state as usize] = discovered.len() as i64;
            discovered.push(state);
            if track {
                edges.push(EdgeRec {
                    parent: None,
                    start,
                    ref_sym,
                    comp,
                });
            }
            let (j, ct, sid) = ctx.unpack(state);
            if let Some(c) = ctx.bad_lookahead(j, ct, sid) {
                bad = Some((discovered.len() - 1, c));
                break 'search;
            }
        }
        let mut head = 0usize;
        while head < discovered.len() {
            let state = discovered[head];
            let (j, ct, sid) = ctx.unpack(state);
            for ref_sym in f.alphabet().symbols() {
                for (child, advance) in ctx.step(j, ct, sid, ref_sym) {
                    if disc_of[child as usize] >= 0 {
                        continue;
                    }
                    disc_of[child as usize] = discovered.len() as i64;
                    discovered.push(child);
                    if track {
                        edges.push(EdgeRec {
                            parent: Some(head as u32),
                            start: 0,
                            ref_sym,
                            comp: advance,
                        });
                    }
                    let (cj, cct, csid) = ctx.unpack(child);
                    if let Some(c) = ctx.bad_lookahead(cj, cct, csid) {
                        bad = Some((discovered.len() - 1, c));
                        break 'search;
                    }
                }
            }
            head += 1;
        }
    }

    let (bad_disc, c) = bad?;
    if !track {
        return Some(None);
    }

    // Rebuild the reference and competitor source sequences along the path.
    let mut ref_syms = Vec::new();
    let mut comp_chunks = Vec::new();
    let mut cur = bad_disc;
    let start = loop {
        let e = &edges[cur];
        ref_syms.push(e.ref_sym);
        comp_chunks.push(e.comp.clone());
        match e.parent {
            Some(p) => cur = p as usize,
            None => break e.start,
        }
    };
    ref_syms.reverse();
    comp_chunks.reverse();
    let mut comp_syms: Vec<Symbol> = comp_chunks.into_iter().flatten().collect();

    let (j, ct, sid) = ctx.unpack(discovered[bad_disc]);
    let surplus = &ctx.suffixes[sid as usize];
    let mut extending = ref_syms.clone();
    extending.extend(achieve(f, j, &c).expect("lookahead drawn from the follow set"));
    if surplus.len() < k {
        let rest = c.suffix_from(surplus.len());
        comp_syms.extend(achieve(f, ct, &rest).expect("competitor continuation checked"));
    }
    let witness = DelayWitness {
        start_table: start,
        reference: ref_syms,
        lookahead: c,
        extending,
        diverging: comp_syms,
    };
    debug_assert!(witness_certifies(f, &witness));
    Some(Some(witness))
}

/// Exact decision of k-bit-delay decodability. Delay 0 is decided through
/// prefix-freeness of every table; positive delays run the competitor
/// automaton.
pub fn is_k_bit_delay_decodable(f: &CodeTuple, k: usize) -> bool {
    if k == 0 {
        return f.tables().iter().all(is_prefix_free);
    }
    automaton_run(f, k, false).is_none()
}

/// As [`is_k_bit_delay_decodable`], but on failure returns a certified
/// witness; `None` means the tuple is k-bit-delay decodable. The automaton
/// witness has a shortest reference sequence; the reported lookahead is the
/// lexicographically least one for that state.
pub fn delay_witness(f: &CodeTuple, k: usize) -> Option<DelayWitness> {
    if k == 0 {
        for (i, _) in f.tables().iter().enumerate() {
            for s in f.alphabet().symbols() {
                for s2 in f.alphabet().symbols() {
                    if s != s2 && f.codeword(i, s).is_prefix_of(f.codeword(i, s2)) {
                        let witness = DelayWitness {
                            start_table: i,
                            reference: vec![s],
                            lookahead: BitString::empty(),
                            extending: vec![s],
                            diverging: vec![s2],
                        };
                        debug_assert!(witness_certifies(f, &witness));
                        return Some(witness);
                    }
                }
            }
        }
        return None;
    }
    automaton_run(f, k, true).map(|w| w.expect("tracked run carries a witness"))
}

/// Direct evaluation of the two witness conditions: the extending sequence
/// must extend the reference, the diverging one must not, and both outputs
/// must cover the reference output followed by the lookahead.
pub fn witness_certifies(f: &CodeTuple, w: &DelayWitness) -> bool {
    let (Ok(out_ref), Ok(out_ext), Ok(out_div)) = (
        encode_star(f, w.start_table, &w.reference),
        encode_star(f, w.start_table, &w.extending),
        encode_star(f, w.start_table, &w.diverging),
    ) else {
        return false;
    };
    let target = out_ref.concat(&w.lookahead);
    target.is_prefix_of(&out_ext)
        && seq_prefix(&w.reference, &w.extending)
        && target.is_prefix_of(&out_div)
        && !seq_prefix(&w.reference, &w.diverging)
}

fn seq_prefix(a: &[Symbol], b: &[Symbol]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

/// Exact classification of the pair `(x, c)` from table `i`: runs the
/// competitor construction along the specific `x` and tests the extending
/// and diverging existentials independently.
pub fn classify_pair(f: &CodeTuple, i: usize, x: &[Symbol], c: &BitString) -> Result<PairClass> {
    f.check_table_index(i)?;
    let j_end = next_table(f, i, x)?;
    let has_extending = achieve(f, j_end, c).is_some();

    let ctx = Ctx::new(f, c.len().max(1));
    let mut configs: HashSet<(usize, u32)> = HashSet::new();
    let mut j = i;
    let mut emitted = 0usize;
    let mut emitted_lens = vec![0usize];
    for &sym in x {
        f.check_symbol(sym)?;
        let e = f.codeword(j, sym);
        let mut next: HashSet<(usize, u32)> = HashSet::new();
        for (ct, sid) in &configs {
            let s = &ctx.suffixes[*sid as usize];
            if e.len() <= s.len() {
                if s.bits()[..e.len()] == *e.bits() {
                    next.insert((*ct, ctx.sid(&s.bits()[e.len()..])));
                }
            } else if e.bits()[..s.len()] == *s.bits() {
                for (ct2, sid2, _) in ctx.normalize(*ct, &e.bits()[s.len()..]) {
                    next.insert((ct2, sid2));
                }
            }
        }
        for other in f.alphabet().symbols() {
            if other == sym {
                continue;
            }
            let w = f.codeword(j, other);
            let ct = f.transition(j, other);
            if e.len() <= w.len() {
                if w.bits()[..e.len()] == *e.bits() {
                    next.insert((ct, ctx.sid(&w.bits()[e.len()..])));
                }
            } else if *w.bits() == e.bits()[..w.len()] {
                for (ct2, sid2, _) in ctx.normalize(ct, &e.bits()[w.len()..]) {
                    next.insert((ct2, sid2));
                }
            }
        }
        configs = next;
        j = f.transition(j, sym);
        emitted += e.len();
        emitted_lens.push(emitted);
    }

    let mut has_diverging = configs.iter().any(|(ct, sid)| {
        let s = &ctx.suffixes[*sid as usize];
        if c.len() <= s.len() {
            *c.bits() == s.bits()[..c.len()]
        } else {
            *s.bits() == c.bits()[..s.len()] && achieve(f, *ct, &c.suffix_from(s.len())).is_some()
        }
    });
    // A proper prefix of x with identical output is a diverging parse when
    // the lookahead is empty.
    if !has_diverging && c.is_empty() && !x.is_empty() {
        has_diverging = emitted_lens[..x.len()].iter().any(|l| *l == emitted);
    }

    Ok(match (has_diverging, has_extending) {
        (false, true) => PairClass::PositiveOnly,
        (true, false) => PairClass::NegativeOnly,
        (false, false) => PairClass::Both,
        (true, true) => PairClass::Neither,
    })
}

fn next_seq(digits: &mut [usize], radix: usize) -> bool {
    for pos in (0..digits.len()).rev() {
        digits[pos] += 1;
        if digits[pos] < radix {
            return true;
        }
        digits[pos] = 0;
    }
    false
}

/// Bounded, automaton-free falsifier. Scans every reference `x` with
/// `|x| ≤ max_len`, every start table, and every `c ∈ C^k` in
/// (|x|, lex x, table, lex c) order, searching for the two witnesses among
/// all `x'` with `|x'| ≤ 2·max_len`. A returned witness is sound; returning
/// nothing proves nothing beyond the bound.
pub fn brute_force_refute(f: &CodeTuple, k: usize, max_len: usize) -> Option<DelayWitness> {
    let sigma = f.alphabet().len();
    let lookaheads = BitString::all_of_len(k);
    for len in 1..=max_len {
        let mut digits = vec![0usize; len];
        loop {
            let x: Vec<Symbol> = digits.iter().map(|d| Symbol(*d)).collect();
            for i in 0..f.table_count() {
                for c in &lookaheads {
                    let target = encode_star(f, i, &x).unwrap().concat(c);
                    if let Some(div) = bounded_diverging(f, i, &x, &target, 2 * max_len) {
                        if let Some(ext) = bounded_extending(f, i, &x, c, 2 * max_len) {
                            let w = DelayWitness {
                                start_table: i,
                                reference: x.clone(),
                                lookahead: c.clone(),
                                extending: ext,
                                diverging: div,
                            };
                            debug_assert!(witness_certifies(f, &w));
                            return Some(w);
                        }
                    }
                }
            }
            if !next_seq(&mut digits, sigma) {
                break;
            }
        }
    }
    None
}

/// Depth-first search for an x' that does not extend x and whose output
/// covers `target`, pruning branches whose output already disagrees.
fn bounded_diverging(
    f: &CodeTuple,
    i: usize,
    x: &[Symbol],
    target: &BitString,
    max_len: usize,
) -> Option<Vec<Symbol>> {
    fn rec(
        f: &CodeTuple,
        table: usize,
        x: &[Symbol],
        target: &BitString,
        max_len: usize,
        path: &mut Vec<Symbol>,
        matched: usize,
    ) -> bool {
        let extends_x = seq_prefix(x, path);
        if matched >= target.len() {
            // Output covered: success unless x' extends x. Descendants of
            // an extension still extend x, so either way stop here.
            return !extends_x;
        }
        if extends_x || path.len() >= max_len {
            return false;
        }
        for s in f.alphabet().symbols() {
            let w = f.codeword(table, s);
            let rest = &target.bits()[matched..];
            let overlap = w.len().min(rest.len());
            if w.bits()[..overlap] != rest[..overlap] {
                continue;
            }
            path.push(s);
            if rec(f, f.transition(table, s), x, target, max_len, path, matched + w.len()) {
                return true;
            }
            path.pop();
        }
        false
    }

    let mut path = Vec::new();
    if rec(f, i, x, target, max_len, &mut path, 0) {
        Some(path)
    } else {
        None
    }
}

/// Depth-first search for an extension of x whose further output covers the
/// lookahead `c`.
fn bounded_extending(
    f: &CodeTuple,
    i: usize,
    x: &[Symbol],
    c: &BitString,
    max_len: usize,
) -> Option<Vec<Symbol>> {
    fn rec(
        f: &CodeTuple,
        table: usize,
        c: &BitString,
        budget: usize,
        path: &mut Vec<Symbol>,
        matched: usize,
    ) -> bool {
        if matched >= c.len() {
            return true;
        }
        if path.len() >= budget {
            return false;
        }
        for s in f.alphabet().symbols() {
            let w = f.codeword(table, s);
            let rest = &c.bits()[matched..];
            let overlap = w.len().min(rest.len());
            if w.bits()[..overlap] != rest[..overlap] {
                continue;
            }
            path.push(s);
            if rec(f, f.transition(table, s), c, budget, path, matched + w.len()) {
                return true;
            }
            path.pop();
        }
        false
    }

    let j = next_table(f, i, x).ok()?;
    let mut tail = Vec::new();
    if rec(f, j, c, max_len.saturating_sub(x.len()), &mut tail, 0) {
        let mut out = x.to_vec();
        out.extend(tail);
        Some(out)
    } else {
        None
    }
}

/// Decodes a bit stream with k-bit lookahead, emitting the longest prefix
/// of the source it can certify. A symbol is emitted only when its codeword
/// matches the stream and the following k bits make the pair positive with
/// a consistent continuation, so for a stream extending a genuine encoding
/// every symbol whose codeword plus k lookahead bits lie inside the stream
/// is recovered.
pub fn decode(f: &CodeTuple, i: usize, bits: &BitString, k: usize) -> Result<Vec<Symbol>> {
    f.check_table_index(i)?;
    let mut j = i;
    let mut pos = 0usize;
    let mut out = Vec::new();
    loop {
        let mut chosen: Option<Symbol> = None;
        for s in f.alphabet().symbols() {
            let w = f.codeword(j, s);
            if pos + w.len() + k > bits.len() {
                continue;
            }
            if bits.bits()[pos..pos + w.len()] != *w.bits() {
                continue;
            }
            let c = BitString::from_bits(&bits.bits()[pos + w.len()..pos + w.len() + k]);
            if classify_pair(f, j, &[s], &c)? == PairClass::PositiveOnly {
                if chosen.is_some() {
                    return Err(Error::NotDecodable(pos));
                }
                chosen = Some(s);
            }
        }
        match chosen {
            Some(s) => {
                out.push(s);
                pos += f.codeword(j, s).len();
                j = f.transition(j, s);
            }
            None => break,
        }
    }
    let remaining = bits.suffix_from(pos);
    if achieve(f, j, &remaining).is_none() {
        return Err(Error::InvalidStream(pos));
    }
    Ok(out)
}
