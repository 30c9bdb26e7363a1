//! Bounded-length language comparison.
//!
//! Words over an alphabet of size `k` with length at most `n` are numbered
//! shortlex: the empty word is 0, then the `k` words of length one, and so
//! on. A language is then a bit per word. Regex languages are computed
//! bottom-up with one table per distinct subterm; automaton languages by
//! epsilon-closed subset simulation. The two computations share no code
//! with the elimination algorithms they check.

use std::collections::HashMap;

use super::graph::{Automaton, Label};
use super::regex::Regex;

/// All words up to a length bound, as indices into an alphabet.
#[derive(Debug, Clone)]
pub struct Words {
    k: usize,
    max_len: usize,
    // offset[len] = number of words shorter than len
    offset: Vec<usize>,
}

impl Words {
    pub fn new(alphabet_size: usize, max_len: usize) -> Self {
        let mut offset = vec![0usize];
        let mut count = 1usize;
        for _ in 0..=max_len {
            let last = *offset.last().unwrap();
            offset.push(last.saturating_add(count));
            count = count.saturating_mul(alphabet_size);
        }
        Words { k: alphabet_size, max_len, offset }
    }

    pub fn count(&self) -> usize {
        self.offset[self.max_len + 1]
    }

    fn power(&self, e: usize) -> usize {
        self.k.pow(e as u32)
    }

    fn id(&self, len: usize, value: usize) -> usize {
        self.offset[len] + value
    }

    fn split_id(&self, id: usize) -> (usize, usize) {
        let len = (0..=self.max_len).rev().find(|&l| self.offset[l] <= id).unwrap();
        (len, id - self.offset[len])
    }

    /// The letters of word `id`, first letter most significant.
    pub fn word(&self, id: usize) -> Vec<usize> {
        let (len, mut value) = self.split_id(id);
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = value % self.k.max(1);
            value /= self.k.max(1);
        }
        out
    }
}

/// Languages of regexes cut off at a length bound, memoized per subterm.
pub struct RegexOracle<'a> {
    words: Words,
    alphabet: &'a [String],
    memo: HashMap<*const Regex, Vec<bool>>,
}

impl<'a> RegexOracle<'a> {
    pub fn new(alphabet: &'a [String], max_len: usize) -> Self {
        RegexOracle {
            words: Words::new(alphabet.len(), max_len),
            alphabet,
            memo: HashMap::new(),
        }
    }

    pub fn words(&self) -> &Words {
        &self.words
    }

    /// Bit per word: whether `r` matches it. Subterms are remembered by
    /// address, so `r` and everything shared with it must stay alive (and
    /// unmoved) while this oracle is in use.
    pub fn language(&mut self, r: &Regex) -> &[bool] {
        let key = r as *const Regex;
        if !self.memo.contains_key(&key) {
            let lang = self.compute(r);
            self.memo.insert(key, lang);
        }
        &self.memo[&key]
    }

    fn compute(&mut self, r: &Regex) -> Vec<bool> {
        let w = self.words.clone();
        let mut out = vec![false; w.count()];
        match r {
            Regex::Empty => {}
            Regex::Epsilon => out[0] = true,
            Regex::Letter(a) => {
                if let Some(i) = self.alphabet.iter().position(|s| **s == **a) {
                    if w.max_len >= 1 {
                        out[w.id(1, i)] = true;
                    }
                }
            }
            Regex::Union(a, b) => {
                let x = self.language(a).to_vec();
                let y = self.language(b);
                out.iter_mut().zip(x.iter().zip(y)).for_each(|(o, (p, q))| *o = *p || *q);
            }
            Regex::Concat(a, b) => {
                let x = self.language(a).to_vec();
                let y = self.language(b).to_vec();
                for len in 0..=w.max_len {
                    for value in 0..w.power(len) {
                        out[w.id(len, value)] = (0..=len).any(|k| {
                            let p = w.power(len - k);
                            x[w.id(k, value / p)] && y[w.id(len - k, value % p)]
                        });
                    }
                }
            }
            Regex::Star(a) => {
                let x = self.language(a).to_vec();
                out[0] = true;
                // A nonempty word is in a* iff it splits as u v with u a
                // nonempty word of a and v shorter, already decided.
                for len in 1..=w.max_len {
                    for value in 0..w.power(len) {
                        out[w.id(len, value)] = (1..=len).any(|k| {
                            let p = w.power(len - k);
                            x[w.id(k, value / p)] && out[w.id(len - k, value % p)]
                        });
                    }
                }
            }
        }
        out
    }
}

/// Bit per word: whether some path from `initial` to `fin` spells it,
/// epsilon edges allowed. Letters outside `alphabet` never occur in words.
pub fn automaton_language(g: &Automaton, initial: &[usize], fin: &[usize], max_len: usize) -> Vec<bool> {
    let words = Words::new(g.alphabet.len(), max_len);
    let n = g.states.len();
    let closure = |set: &mut Vec<bool>| {
        let mut stack: Vec<usize> = (0..n).filter(|&s| set[s]).collect();
        while let Some(s) = stack.pop() {
            for (src, label, tgt) in &g.edges {
                if *src == s && *label == Label::Eps && !set[*tgt] {
                    set[*tgt] = true;
                    stack.push(*tgt);
                }
            }
        }
    };
    let mut start = vec![false; n];
    initial.iter().for_each(|&s| start[s] = true);
    closure(&mut start);
    let mut out = vec![false; words.count()];
    // Breadth-first over words in shortlex order: the states reached by
    // word w.a come from those reached by w.
    let mut layer = vec![start];
    for len in 0..=max_len {
        for (value, set) in layer.iter().enumerate() {
            out[words.id(len, value)] = fin.iter().any(|&f| set[f]);
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * g.alphabet.len());
        for set in &layer {
            for a in &g.alphabet {
                let mut step = vec![false; n];
                for (src, label, tgt) in &g.edges {
                    if set[*src] && matches!(label, Label::Letter(l) if l == a) {
                        step[*tgt] = true;
                    }
                }
                closure(&mut step);
                next.push(step);
            }
        }
        layer = next;
    }
    out
}

/// True iff `r` and the automaton (from its initial to its final states)
/// accept the same words of length at most `max_len` over the automaton's
/// alphabet.
pub fn bounded_equiv(r: &Regex, g: &Automaton, max_len: usize) -> bool {
    bounded_counterexample(r, g, &g.initial, &g.final_states, max_len).is_none()
}

/// The first word (shortlex) on which `r` and the automaton run between
/// the given states disagree.
pub fn bounded_counterexample(
    r: &Regex,
    g: &Automaton,
    initial: &[usize],
    fin: &[usize],
    max_len: usize,
) -> Option<Vec<String>> {
    let mut oracle = RegexOracle::new(&g.alphabet, max_len);
    let lhs = oracle.language(r).to_vec();
    let rhs = automaton_language(g, initial, fin, max_len);
    let words = oracle.words().clone();
    (0..lhs.len())
        .find(|&i| lhs[i] != rhs[i])
        .map(|i| words.word(i).into_iter().map(|a| g.alphabet[a].clone()).collect())
}

/// True iff both regexes accept the same words of length at most `max_len`.
pub fn regex_bounded_eq(a: &Regex, b: &Regex, alphabet: &[String], max_len: usize) -> bool {
    let mut oracle = RegexOracle::new(alphabet, max_len);
    let x = oracle.language(a).to_vec();
    x == oracle.language(b)
}
