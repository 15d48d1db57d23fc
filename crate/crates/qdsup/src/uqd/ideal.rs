//! Graded reduction modulo the one-sided Serre ideals.
//!
//! The positive part of each presented algebra is free on the E-letters
//! modulo the ideal generated by the Serre elements; the negative part
//! mirrors it letter for letter. Reduction uses a rewriting system on letter
//! words, ordered degree-lexicographically with `0 < 1 < 2 < 3`: each rule
//! rewrites its leading word into strictly smaller words of the same weight.
//!
//! Rules are completed lazily, one multidegree at a time. Since the ideal is
//! graded by letter counts and a subword's counts never exceed the word's,
//! saturating all overlap compositions at every multidegree below a target
//! makes reduction at the target confluent and complete. The completion for
//! one multidegree runs under a write lock (single writer per diagram);
//! finished multidegrees serve readers concurrently through a memo table.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, RwLock};

use dashmap::DashMap;

use crate::cartan::DiagramId;
use crate::coeff::Coeff;
use crate::engine::Engine;
use crate::error::{Error, Result};

/// Letter counts of a one-sided word; the grading of the rewriting system.
pub type Counts = [u8; 4];

pub fn counts_of(word: &[u8]) -> Counts {
    let mut c = [0u8; 4];
    for &i in word {
        c[i as usize] += 1;
    }
    c
}

fn height(c: Counts) -> u32 {
    c.iter().map(|&x| x as u32).sum()
}

/// A normalized expansion of a word: irreducible words with coefficients.
pub type Expansion<S> = Vec<(Vec<u8>, S)>;

struct Rule<S> {
    lead: Vec<u8>,
    /// The rewriting of the lead (monic): `lead = sum tail` in the quotient.
    tail: Expansion<S>,
    counts: Counts,
}

struct RuleSet<S> {
    rules: Vec<Rule<S>>,
    /// Rule indices grouped by the first letter of the lead.
    by_first: [Vec<usize>; 4],
    done: HashSet<Counts>,
}

impl<S: Coeff> RuleSet<S> {
    fn new() -> Self {
        RuleSet {
            rules: Vec::new(),
            by_first: Default::default(),
            done: HashSet::new(),
        }
    }

    /// First reducible occurrence: `(position, rule index)`.
    fn find_occurrence(&self, word: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            for &ri in &self.by_first[word[pos] as usize] {
                let lead = &self.rules[ri].lead;
                if lead.len() <= word.len() - pos && &word[pos..pos + lead.len()] == &lead[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    fn add_rule(&mut self, rule: Rule<S>) {
        self.by_first[rule.lead[0] as usize].push(self.rules.len());
        self.rules.push(rule);
    }
}

/// Rewriting engine for the one-sided Serre ideal of one diagram.
pub struct IdealRewriter<S: Coeff> {
    d: DiagramId,
    /// E-side Serre generators as letter polynomials, with their counts.
    generators: Vec<(Counts, BTreeMap<Vec<u8>, S>)>,
    state: RwLock<RuleSet<S>>,
    memo: DashMap<Vec<u8>, Arc<Expansion<S>>>,
}

impl<S: Coeff> Engine<S> {
    /// The per-diagram rewriter, created on first use.
    pub fn rewriter(&self, d: DiagramId) -> Arc<IdealRewriter<S>> {
        if let Some(hit) = self.rewriters.get(&d.0) {
            return hit.clone();
        }
        let rw = Arc::new(IdealRewriter::new(self, d));
        self.rewriters
            .entry(d.0)
            .or_insert_with(|| rw.clone())
            .clone()
    }
}

impl<S: Coeff> IdealRewriter<S> {
    fn new(engine: &Engine<S>, d: DiagramId) -> Self {
        let mut generators = Vec::new();
        for (_label, g) in super::serre_e_generators(engine, d) {
            let mut poly: BTreeMap<Vec<u8>, S> = BTreeMap::new();
            let mut cts: Option<Counts> = None;
            for (m, c) in &g.terms {
                assert!(
                    m.fword.is_empty() && !m.sigma && m.kw == [0; 4] && m.klam == 0,
                    "Serre generator is not a pure E-side element"
                );
                let wc = counts_of(&m.eword);
                match cts {
                    None => cts = Some(wc),
                    Some(prev) => assert_eq!(prev, wc, "inhomogeneous Serre generator"),
                }
                poly.insert(m.eword.clone(), c.clone());
            }
            if let Some(cts) = cts {
                generators.push((cts, poly));
            }
        }
        IdealRewriter {
            d,
            generators,
            state: RwLock::new(RuleSet::new()),
            memo: DashMap::new(),
        }
    }

    pub fn diagram(&self) -> DiagramId {
        self.d
    }

    /// Reduce a one-sided letter word to its normal form.
    pub fn reduce_word(&self, engine: &Engine<S>, word: &[u8]) -> Result<Arc<Expansion<S>>> {
        let cts = counts_of(word);
        if height(cts) > engine.cfg.height_bound {
            return Err(Error::BoundExceeded {
                height: height(cts),
                bound: engine.cfg.height_bound,
            });
        }
        self.ensure_done(engine, cts);
        Ok(self.nf_memo(&engine.ctx, word))
    }

    /// Reduce a letter polynomial (no memoization; used by tests and the
    /// ideal-basis API as an alternative route).
    pub fn reduce_poly_direct(
        &self,
        engine: &Engine<S>,
        poly: &BTreeMap<Vec<u8>, S>,
    ) -> Result<BTreeMap<Vec<u8>, S>> {
        let mut max = [0u8; 4];
        for w in poly.keys() {
            let c = counts_of(w);
            for t in 0..4 {
                max[t] = max[t].max(c[t]);
            }
        }
        if height(max) > engine.cfg.height_bound {
            return Err(Error::BoundExceeded {
                height: height(max),
                bound: engine.cfg.height_bound,
            });
        }
        for w in poly.keys() {
            self.ensure_done(engine, counts_of(w));
        }
        let state = self.state.read().unwrap();
        Ok(reduce_poly(&state, poly.clone()))
    }

    /// Quotient-basis words (irreducible words) of one multidegree.
    pub fn irreducible_words(&self, engine: &Engine<S>, cts: Counts) -> Result<Vec<Vec<u8>>> {
        if height(cts) > engine.cfg.height_bound {
            return Err(Error::BoundExceeded {
                height: height(cts),
                bound: engine.cfg.height_bound,
            });
        }
        self.ensure_done(engine, cts);
        let state = self.state.read().unwrap();
        let mut out = Vec::new();
        for w in words_of_counts(cts) {
            if state.find_occurrence(&w).is_none() {
                out.push(w);
            }
        }
        Ok(out)
    }

    fn ensure_done(&self, engine: &Engine<S>, cts: Counts) {
        {
            let state = self.state.read().unwrap();
            if state.done.contains(&cts) {
                return;
            }
        }
        let mut state = self.state.write().unwrap();
        // Process every multidegree below the target in a linear extension of
        // the componentwise order.
        let mut grid: Vec<Counts> = Vec::new();
        for a in 0..=cts[0] {
            for b in 0..=cts[1] {
                for c in 0..=cts[2] {
                    for e in 0..=cts[3] {
                        grid.push([a, b, c, e]);
                    }
                }
            }
        }
        grid.sort_by_key(|c| (height(*c), *c));
        for nu in grid {
            if state.done.contains(&nu) {
                continue;
            }
            self.complete_weight(engine, &mut state, nu);
            state.done.insert(nu);
        }
    }

    /// Saturate one multidegree: seed with the Serre generators of that
    /// weight, then resolve every overlap composition landing there.
    fn complete_weight(&self, _engine: &Engine<S>, state: &mut RuleSet<S>, nu: Counts) {
        let mut queue: Vec<BTreeMap<Vec<u8>, S>> = Vec::new();
        for (c, poly) in &self.generators {
            if *c == nu {
                queue.push(poly.clone());
            }
        }
        // Overlap compositions of existing rules landing exactly at nu.
        let pairs: Vec<(usize, usize)> = {
            let n = state.rules.len();
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        };
        for (i, j) in pairs {
            compositions_at(state, i, j, nu, &mut queue);
        }
        while let Some(cand) = queue.pop() {
            let red = reduce_poly(state, cand);
            if red.is_empty() {
                continue;
            }
            // Monic rule on the deglex-largest word.
            let lead = red.keys().next_back().unwrap().clone();
            let lc = red[&lead].clone();
            let lci = lc.inv().expect("leading coefficient invertible");
            let tail: Expansion<S> = red
                .iter()
                .filter(|(w, _)| **w != lead)
                .map(|(w, c)| (w.clone(), c.neg().mul(&lci)))
                .collect();
            let new_idx = state.rules.len();
            state.add_rule(Rule {
                lead,
                tail,
                counts: nu,
            });
            // New compositions with every rule (including itself) at nu.
            for other in 0..=new_idx {
                compositions_at(state, new_idx, other, nu, &mut queue);
                if other != new_idx {
                    compositions_at(state, other, new_idx, nu, &mut queue);
                }
            }
        }
    }

    /// Memoized normal form of a word whose multidegree is complete.
    ///
    /// Iterative post-order evaluation: children (one-step rewrites) are
    /// resolved before their parent, so recursion depth stays flat even for
    /// long rewriting chains.
    fn nf_memo(&self, ctx: &S::Ctx, word: &[u8]) -> Arc<Expansion<S>> {
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let state = self.state.read().unwrap();
        let mut stack: Vec<Vec<u8>> = vec![word.to_vec()];
        while let Some(w) = stack.last().cloned() {
            if self.memo.contains_key(&w) {
                stack.pop();
                continue;
            }
            match state.find_occurrence(&w) {
                None => {
                    self.memo
                        .insert(w.clone(), Arc::new(vec![(w, S::one(ctx))]));
                    stack.pop();
                }
                Some((pos, ri)) => {
                    let rule = &state.rules[ri];
                    let endpos = pos + rule.lead.len();
                    let children: Vec<(Vec<u8>, &S)> = rule
                        .tail
                        .iter()
                        .map(|(t, k)| {
                            let mut nw = Vec::with_capacity(w.len());
                            nw.extend_from_slice(&w[..pos]);
                            nw.extend_from_slice(t);
                            nw.extend_from_slice(&w[endpos..]);
                            (nw, k)
                        })
                        .collect();
                    let mut missing = false;
                    for (cw, _) in &children {
                        if !self.memo.contains_key(cw) {
                            stack.push(cw.clone());
                            missing = true;
                        }
                    }
                    if !missing {
                        let mut acc: BTreeMap<Vec<u8>, S> = BTreeMap::new();
                        for (cw, k) in &children {
                            let exp = self.memo.get(cw).expect("child resolved").clone();
                            for (u, c) in exp.iter() {
                                merge_term(&mut acc, u.clone(), c.mul(k));
                            }
                        }
                        self.memo
                            .insert(w.clone(), Arc::new(acc.into_iter().collect()));
                        stack.pop();
                    }
                }
            }
        }
        self.memo.get(word).expect("root resolved").clone()
    }
}

/// All words with the given letter counts (multiset permutations).
pub fn words_of_counts(cts: Counts) -> Vec<Vec<u8>> {
    let total: usize = cts.iter().map(|&c| c as usize).sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    fn rec(cts: &mut Counts, cur: &mut Vec<u8>, total: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..4u8 {
            if cts[i as usize] > 0 {
                cts[i as usize] -= 1;
                cur.push(i);
                rec(cts, cur, total, out);
                cur.pop();
                cts[i as usize] += 1;
            }
        }
    }
    let mut c = cts;
    rec(&mut c, &mut cur, total, &mut out);
    out
}

/// Push the overlap compositions of rules `i` (left) and `j` (right) whose
/// composed word has multidegree `nu`.
fn compositions_at<S: Coeff>(
    state: &RuleSet<S>,
    i: usize,
    j: usize,
    nu: Counts,
    queue: &mut Vec<BTreeMap<Vec<u8>, S>>,
) {
    let l1 = &state.rules[i].lead;
    let l2 = &state.rules[j].lead;
    let max_t = l1.len().min(l2.len()) - 1;
    for t in 1..=max_t {
        if l1[l1.len() - t..] != l2[..t] {
            continue;
        }
        // Composed word A B C with |B| = t.
        let a = &l1[..l1.len() - t];
        let c = &l2[t..];
        let mut cts = state.rules[i].counts;
        for &x in c {
            cts[x as usize] += 1;
        }
        if cts != nu {
            continue;
        }
        // tail1 * C - A * tail2
        let mut poly: BTreeMap<Vec<u8>, S> = BTreeMap::new();
        for (w, k) in &state.rules[i].tail {
            let mut word = w.clone();
            word.extend_from_slice(c);
            merge_term(&mut poly, word, k.clone());
        }
        for (w, k) in &state.rules[j].tail {
            let mut word = a.to_vec();
            word.extend_from_slice(w);
            merge_term(&mut poly, word, k.neg());
        }
        if !poly.is_empty() {
            queue.push(poly);
        }
    }
}

fn merge_term<S: Coeff>(poly: &mut BTreeMap<Vec<u8>, S>, word: Vec<u8>, c: S) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match poly.entry(word) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Full reduction of a letter polynomial by the current rules.
fn reduce_poly<S: Coeff>(state: &RuleSet<S>, poly: BTreeMap<Vec<u8>, S>) -> BTreeMap<Vec<u8>, S> {
    let mut pending = poly;
    let mut out: BTreeMap<Vec<u8>, S> = BTreeMap::new();
    while let Some((word, coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        match state.find_occurrence(&word) {
            None => merge_term(&mut out, word, coeff),
            Some((pos, ri)) => {
                let rule = &state.rules[ri];
                let endpos = pos + rule.lead.len();
                for (t, k) in &rule.tail {
                    let mut w = Vec::with_capacity(word.len());
                    w.extend_from_slice(&word[..pos]);
                    w.extend_from_slice(t);
                    w.extend_from_slice(&word[endpos..]);
                    merge_term(&mut pending, w, coeff.mul(k));
                }
            }
        }
    }
    out
}
