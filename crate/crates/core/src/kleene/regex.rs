use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A regular expression. Subterms are shared, so matrices built by
/// elimination stay small in memory even when their printed form is long.
///
/// The associated constructors [`Regex::union`], [`Regex::concat`] and
/// [`Regex::star`] simplify as they build; the variants themselves do not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(Arc<str>),
    Union(Arc<Regex>, Arc<Regex>),
    Concat(Arc<Regex>, Arc<Regex>),
    Star(Arc<Regex>),
}

impl Regex {
    pub fn letter(a: &str) -> Regex {
        Regex::Letter(a.into())
    }

    /// `a + b` with `0 + r = r`, `r + r = r`, `e + r.r* = r*` and
    /// `e + r* = r*` (in either order).
    pub fn union(a: Regex, b: Regex) -> Regex {
        match (&a, &b) {
            (Regex::Empty, _) => b,
            (_, Regex::Empty) => a,
            _ if a == b => a,
            (Regex::Epsilon, other) | (other, Regex::Epsilon) => match other {
                Regex::Star(_) => other.clone(),
                Regex::Concat(l, r) if matches!(&**r, Regex::Star(inner) if inner == l) => (**r).clone(),
                _ => Regex::Union(Arc::new(a), Arc::new(b)),
            },
            _ => Regex::Union(Arc::new(a), Arc::new(b)),
        }
    }

    /// `a . b` with `0` absorbing and `e` neutral.
    pub fn concat(a: Regex, b: Regex) -> Regex {
        match (&a, &b) {
            (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
            (Regex::Epsilon, _) => b,
            (_, Regex::Epsilon) => a,
            _ => Regex::Concat(Arc::new(a), Arc::new(b)),
        }
    }

    /// `a*` with `0* = e* = e` and `r** = r*`.
    pub fn star(a: Regex) -> Regex {
        match a {
            Regex::Empty | Regex::Epsilon => Regex::Epsilon,
            Regex::Star(_) => a,
            _ => Regex::Star(Arc::new(a)),
        }
    }

    pub fn union_all(parts: impl IntoIterator<Item = Regex>) -> Regex {
        parts.into_iter().fold(Regex::Empty, Regex::union)
    }

    /// Rebuilds `self` bottom-up through the simplifying constructors.
    /// Every rule shrinks the term, so one pass reaches the fixpoint.
    pub fn simplify(&self) -> Regex {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => self.clone(),
            Regex::Union(a, b) => Regex::union(a.simplify(), b.simplify()),
            Regex::Concat(a, b) => Regex::concat(a.simplify(), b.simplify()),
            Regex::Star(a) => Regex::star(a.simplify()),
        }
    }

    /// Number of nodes in the expression tree (shared subterms counted each
    /// time they occur).
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => 1,
            Regex::Union(a, b) | Regex::Concat(a, b) => 1 + a.size() + b.size(),
            Regex::Star(a) => 1 + a.size(),
        }
    }

    /// Calls `visit` with every letter occurrence.
    pub fn for_each_letter(&self, visit: &mut impl FnMut(&str)) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Letter(a) => visit(a),
            Regex::Union(a, b) | Regex::Concat(a, b) => {
                a.for_each_letter(visit);
                b.for_each_letter(visit);
            }
            Regex::Star(a) => a.for_each_letter(visit),
        }
    }

    /// Whether `word` (a sequence of letters) matches. Straightforward
    /// dynamic programming over substrings; see the oracle module for the
    /// batched version.
    pub fn matches<S: AsRef<str>>(&self, word: &[S]) -> bool {
        let n = word.len();
        self.table(word)[n]
    }

    // Row-major (i, j) -> whether word[i..j] matches, for i <= j.
    fn table<S: AsRef<str>>(&self, word: &[S]) -> Vec<bool> {
        let n = word.len();
        let w = n + 1;
        let mut t = vec![false; w * w];
        match self {
            Regex::Empty => {}
            Regex::Epsilon => (0..=n).for_each(|i| t[i * w + i] = true),
            Regex::Letter(a) => (0..n).for_each(|i| t[i * w + i + 1] = word[i].as_ref() == &**a),
            Regex::Union(a, b) => {
                let (x, y) = (a.table(word), b.table(word));
                t.iter_mut().enumerate().for_each(|(k, v)| *v = x[k] || y[k]);
            }
            Regex::Concat(a, b) => {
                let (x, y) = (a.table(word), b.table(word));
                for i in 0..=n {
                    for j in i..=n {
                        t[i * w + j] = (i..=j).any(|k| x[i * w + k] && y[k * w + j]);
                    }
                }
            }
            Regex::Star(a) => {
                let x = a.table(word);
                for i in (0..=n).rev() {
                    t[i * w + i] = true;
                    for j in i + 1..=n {
                        t[i * w + j] = (i + 1..=j).any(|k| x[i * w + k] && t[k * w + j]);
                    }
                }
            }
        }
        t
    }
}

/// Prints `0`, `e`, letters, `(l+r)`, `(l.r)` and `(r)*`.
impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regex::Empty => f.write_str("0"),
            Regex::Epsilon => f.write_str("e"),
            Regex::Letter(a) => f.write_str(a),
            Regex::Union(a, b) => write!(f, "({a}+{b})"),
            Regex::Concat(a, b) => write!(f, "({a}.{b})"),
            Regex::Star(a) => write!(f, "({a})*"),
        }
    }
}

/// Whether `s` can be used as a letter: alphanumeric or `_`, and not one of
/// the reserved words `0`, `e` and `eps`.
pub fn is_valid_letter(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(s, "0" | "e" | "eps")
}

/// Parses the printed form. Also accepts unparenthesized input with the
/// usual precedence (star, then `.`, then `+`).
pub fn parse_regex(src: &str) -> Result<Regex> {
    let chars: Vec<char> = src.chars().collect();
    let mut p = RegexParser { chars, pos: 0 };
    let r = p.union()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(r)
}

struct RegexParser {
    chars: Vec<char>,
    pos: usize,
}

impl RegexParser {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn union(&mut self) -> Result<Regex> {
        let mut r = self.concat()?;
        while self.eat('+') {
            r = Regex::Union(Arc::new(r), Arc::new(self.concat()?));
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut r = self.postfix()?;
        while self.eat('.') {
            r = Regex::Concat(Arc::new(r), Arc::new(self.postfix()?));
        }
        Ok(r)
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while self.eat('*') {
            r = Regex::Star(Arc::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        if self.eat('(') {
            let r = self.union()?;
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(r);
        }
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        let word: String = self.chars[start..self.pos].iter().collect();
        match word.as_str() {
            "" => Err(self.error("expected a regular expression")),
            "0" => Ok(Regex::Empty),
            "e" => Ok(Regex::Epsilon),
            "eps" => {
                self.pos = start;
                Err(self.error("`eps` is reserved"))
            }
            _ => Ok(Regex::letter(&word)),
        }
    }
}
