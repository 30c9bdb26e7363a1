use std::fmt;

use crate::diagram::fresh_name;
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

use super::regex::{is_valid_letter, Regex};

/// An automaton edge label: a letter or an epsilon move.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Letter(String),
    Eps,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Letter(a) => f.write_str(a),
            Label::Eps => f.write_str("eps"),
        }
    }
}

/// A graph with labelled edges and two lists of designated states, read as
/// a cospan `initial -> graph <- final` of graphs with discrete feet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph<L> {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub edges: Vec<(usize, L, usize)>,
    pub initial: Vec<usize>,
    pub final_states: Vec<usize>,
}

pub type Automaton = LabelledGraph<Label>;
pub type RegexGraph = LabelledGraph<Regex>;

impl<L> LabelledGraph<L> {
    fn check_shape(&self) -> Result<()> {
        for (i, s) in self.states.iter().enumerate() {
            if self.states[..i].contains(s) {
                return Err(Error::DuplicateName { what: "state", name: s.clone() });
            }
        }
        let bound = self.states.len();
        let refs = self
            .edges
            .iter()
            .flat_map(|(s, _, t)| [*s, *t])
            .chain(self.initial.iter().copied())
            .chain(self.final_states.iter().copied());
        for index in refs {
            if index >= bound {
                return Err(Error::BadIndex { what: "state", index, bound });
            }
        }
        Ok(())
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }
}

impl Automaton {
    pub fn new(
        alphabet: Vec<String>,
        states: Vec<String>,
        edges: Vec<(usize, Label, usize)>,
        initial: Vec<usize>,
        final_states: Vec<usize>,
    ) -> Result<Self> {
        let g = LabelledGraph { alphabet, states, edges, initial, final_states };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.alphabet.iter().enumerate() {
            if !is_valid_letter(a) {
                return Err(Error::Alphabet(format!("`{a}` cannot be used as a letter")));
            }
            if self.alphabet[..i].contains(a) {
                return Err(Error::Alphabet(format!("letter `{a}` is listed twice")));
            }
        }
        self.check_shape()?;
        for (_, label, _) in &self.edges {
            if let Label::Letter(a) = label {
                if !self.alphabet.contains(a) {
                    return Err(Error::Alphabet(format!("letter `{a}` is not in the alphabet")));
                }
            }
        }
        Ok(())
    }

    /// The same automaton with other designated states.
    pub fn with_ends(&self, initial: Vec<usize>, final_states: Vec<usize>) -> Automaton {
        LabelledGraph { initial, final_states, ..self.clone() }
    }
}

/// Labels every edge with the singleton language of its letter (or of the
/// empty word).
pub fn phi1(g: &Automaton) -> Result<RegexGraph> {
    g.validate()?;
    Ok(LabelledGraph {
        alphabet: g.alphabet.clone(),
        states: g.states.clone(),
        edges: g
            .edges
            .iter()
            .map(|(s, l, t)| {
                let r = match l {
                    Label::Letter(a) => Regex::letter(a),
                    Label::Eps => Regex::Epsilon,
                };
                (*s, r, *t)
            })
            .collect(),
        initial: g.initial.clone(),
        final_states: g.final_states.clone(),
    })
}

/// Composite of two labelled-graph cospans: both graphs side by side with
/// the `k`-th final state of `a` glued to the `k`-th initial state of `b`.
/// Glued states keep the first name in their class; clashing names in `b`
/// get a suffix.
pub fn compose_graphs<L: Clone>(a: &LabelledGraph<L>, b: &LabelledGraph<L>) -> Result<LabelledGraph<L>> {
    a.check_shape()?;
    b.check_shape()?;
    if a.final_states.len() != b.initial.len() {
        return Err(Error::boundary(
            "compose_graphs",
            format!("{} final states", a.final_states.len()),
            format!("{} initial states", b.initial.len()),
        ));
    }
    let n = a.states.len();
    let mut uf = UnionFind::new(n + b.states.len());
    for (&x, &y) in a.final_states.iter().zip(&b.initial) {
        uf.union(x, n + y);
    }
    let q = uf.quotient();
    let mut names: Vec<Option<String>> = vec![None; q.cod()];
    let mut taken: Vec<String> = Vec::new();
    for (i, s) in a.states.iter().chain(&b.states).enumerate() {
        let c = q.apply(i);
        if names[c].is_none() {
            let name = fresh_name(s, |cand| taken.iter().any(|t| t == cand));
            taken.push(name.clone());
            names[c] = Some(name);
        }
    }
    let mut alphabet = a.alphabet.clone();
    for l in &b.alphabet {
        if !alphabet.contains(l) {
            alphabet.push(l.clone());
        }
    }
    let edges = a
        .edges
        .iter()
        .map(|(s, l, t)| (q.apply(*s), l.clone(), q.apply(*t)))
        .chain(b.edges.iter().map(|(s, l, t)| (q.apply(n + s), l.clone(), q.apply(n + t))))
        .collect();
    Ok(LabelledGraph {
        alphabet,
        states: names.into_iter().map(|s| s.expect("every class has a member")).collect(),
        edges,
        initial: a.initial.iter().map(|&s| q.apply(s)).collect(),
        final_states: b.final_states.iter().map(|&s| q.apply(n + s)).collect(),
    })
}
