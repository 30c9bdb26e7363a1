//! Expressions in the free wscc category on a set of generators.
//!
//! Composition is stored in diagrammatic order: `Seq(a, b)` is `a` followed
//! by `b`. The text syntax also accepts the applicative `.` (right factor
//! first) so formulas written in that order can be entered as they are.

mod compile;
mod eval;
mod expand;
mod parse;

use std::fmt;

use crate::cospan::Constant;
use crate::dcospan::DiscreteCospan;
use crate::diagram::Obj;
use crate::error::{Error, Result};
use crate::finset::FinFn;

pub use compile::compile;
pub use eval::{eval, eval_diagram, eval_mode};
pub use expand::{expand_discrete, reverse};
pub use parse::{is_valid_name, parse_program, Program};

/// A generating arrow `f : src -> tgt` with its function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub src: Obj,
    pub tgt: Obj,
    pub map: FinFn,
}

impl Generator {
    pub fn new(name: impl Into<String>, src: Obj, tgt: Obj, map: FinFn) -> Result<Self> {
        let name = name.into();
        if map.dom() != src.size || map.cod() != tgt.size {
            return Err(Error::boundary(
                "generator",
                format!("{name}: {}:{} -> {}:{}", src.name, src.size, tgt.name, tgt.size),
                map.boundary(),
            ));
        }
        Ok(Generator { name, src, tgt, map })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(Constant<Vec<Obj>>),
    Gen(Generator),
    Disc(DiscreteCospan),
    Seq(Box<Expr>, Box<Expr>),
    Ten(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn id(objects: Vec<Obj>) -> Expr {
        Expr::Const(Constant::Id(objects))
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Expr) -> Expr {
        Expr::Seq(Box::new(self), Box::new(next))
    }

    pub fn tensor(self, other: Expr) -> Expr {
        Expr::Ten(Box::new(self), Box::new(other))
    }

    /// Left-nested sequential composite; `None` for an empty sequence.
    pub fn seq_all(parts: impl IntoIterator<Item = Expr>) -> Option<Expr> {
        parts.into_iter().reduce(Expr::then)
    }

    /// Left-nested tensor; the empty tensor is the identity on no objects.
    pub fn ten_all(parts: impl IntoIterator<Item = Expr>) -> Expr {
        parts
            .into_iter()
            .reduce(Expr::tensor)
            .unwrap_or_else(|| Expr::id(Vec::new()))
    }

    /// The source and target object lists, checking every sequential
    /// composite along the way.
    pub fn boundary(&self) -> Result<(Vec<Obj>, Vec<Obj>)> {
        match self {
            Expr::Const(c) => Ok(constant_boundary(c)),
            Expr::Gen(g) => Ok((vec![g.src.clone()], vec![g.tgt.clone()])),
            Expr::Disc(d) => {
                d.validate()?;
                Ok((d.left.clone(), d.right.clone()))
            }
            Expr::Seq(a, b) => {
                let (src, mid) = a.boundary()?;
                let (mid2, tgt) = b.boundary()?;
                check_match(&mid, &mid2)?;
                Ok((src, tgt))
            }
            Expr::Ten(a, b) => {
                let (mut s, mut t) = a.boundary()?;
                let (s2, t2) = b.boundary()?;
                s.extend(s2);
                t.extend(t2);
                Ok((s, t))
            }
        }
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            Expr::Seq(a, b) | Expr::Ten(a, b) => a.size() + b.size(),
            _ => 1,
        }
    }

    /// Flattens nested `Seq` (or `Ten`) nodes into their factors.
    fn factors<'a>(&'a self, seq: bool, out: &mut Vec<&'a Expr>) {
        match self {
            Expr::Seq(a, b) if seq => {
                a.factors(seq, out);
                b.factors(seq, out);
            }
            Expr::Ten(a, b) if !seq => {
                a.factors(seq, out);
                b.factors(seq, out);
            }
            other => out.push(other),
        }
    }
}

pub(crate) fn constant_boundary(c: &Constant<Vec<Obj>>) -> (Vec<Obj>, Vec<Obj>) {
    let twice = |l: &Vec<Obj>| l.iter().chain(l).cloned().collect::<Vec<_>>();
    match c {
        Constant::Id(l) => (l.clone(), l.clone()),
        Constant::Sym(a, b) => (
            a.iter().chain(b).cloned().collect(),
            b.iter().chain(a).cloned().collect(),
        ),
        Constant::Mult(l) => (twice(l), l.clone()),
        Constant::Comult(l) => (l.clone(), twice(l)),
        Constant::Unit(l) => (Vec::new(), l.clone()),
        Constant::Counit(l) => (l.clone(), Vec::new()),
        Constant::Eta(l) => (Vec::new(), twice(l)),
        Constant::Eps(l) => (twice(l), Vec::new()),
    }
}

pub(crate) fn check_match(left: &[Obj], right: &[Obj]) -> Result<()> {
    if left != right {
        return Err(Error::TypeMismatch {
            left: list_text(left),
            right: list_text(right),
        });
    }
    Ok(())
}

/// `A+B+C`, or `I` for the empty list.
pub fn list_text(objects: &[Obj]) -> String {
    if objects.is_empty() {
        return "I".to_string();
    }
    objects.iter().map(|o| o.name.as_str()).collect::<Vec<_>>().join("+")
}

fn index_text(map: &[usize]) -> String {
    map.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => match c {
                Constant::Sym(a, b) => write!(f, "sym({},{})", list_text(a), list_text(b)),
                other => write!(f, "{}({})", other.kind().keyword(), list_text(other.objects()[0])),
            },
            Expr::Gen(g) => write!(f, "gen({})", g.name),
            Expr::Disc(d) => write!(
                f,
                "disc[{}|{}]({} -> {} <- {})",
                index_text(&d.phi),
                index_text(&d.psi),
                list_text(&d.left),
                list_text(&d.center),
                list_text(&d.right)
            ),
            Expr::Seq(..) => {
                let mut parts = Vec::new();
                self.factors(true, &mut parts);
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ; ")?;
                    }
                    match p {
                        Expr::Ten(..) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            Expr::Ten(..) => {
                let mut parts = Vec::new();
                self.factors(false, &mut parts);
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    match p {
                        Expr::Seq(..) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}
