//! The well-supported compact closed categories `cospan(FinSet)` and
//! `span(FinSet)`.
//!
//! In `cospan`, composition is pushout and the tensor is disjoint sum, with
//! the empty set as unit. In `span`, composition is pullback and the tensor
//! is cartesian product, with the one-element set as unit. Both are
//! represented by concrete arrows that are brought into a canonical form
//! after every operation, so isomorphic arrows built the same way compare
//! equal with `==`; [`Wscc::iso_eq`] compares arbitrary representatives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finset::{pullback, pushout, FinFn};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Cospan,
    Span,
}

impl Mode {
    /// Size of the monoidal unit.
    pub fn unit(self) -> usize {
        match self {
            Mode::Cospan => 0,
            Mode::Span => 1,
        }
    }

    /// Size of the tensor of objects of the given sizes.
    pub fn tensor_size(self, sizes: impl IntoIterator<Item = usize>) -> usize {
        match self {
            Mode::Cospan => sizes.into_iter().sum(),
            Mode::Span => sizes.into_iter().product(),
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cospan" => Ok(Mode::Cospan),
            "span" => Ok(Mode::Span),
            other => Err(format!("unknown mode `{other}` (expected cospan or span)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cospan => "cospan",
            Mode::Span => "span",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructuralKind {
    Id,
    Sym,
    Mult,
    Unit,
    Comult,
    Counit,
    Eta,
    Eps,
}

impl StructuralKind {
    pub const ALL: [StructuralKind; 8] = [
        StructuralKind::Id,
        StructuralKind::Sym,
        StructuralKind::Mult,
        StructuralKind::Unit,
        StructuralKind::Comult,
        StructuralKind::Counit,
        StructuralKind::Eta,
        StructuralKind::Eps,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            StructuralKind::Id => "id",
            StructuralKind::Sym => "sym",
            StructuralKind::Mult => "mult",
            StructuralKind::Unit => "unit",
            StructuralKind::Comult => "comult",
            StructuralKind::Counit => "counit",
            StructuralKind::Eta => "eta",
            StructuralKind::Eps => "eps",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }
}

/// A structural constant of a wscc category, parameterised by its object(s).
///
/// `O` is whatever stands for an object: a size for the finite-set algebras,
/// a list of named objects inside expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constant<O> {
    /// `1_A : A -> A`
    Id(O),
    /// `A (x) B -> B (x) A`
    Sym(O, O),
    /// `A (x) A -> A`
    Mult(O),
    /// `I -> A`
    Unit(O),
    /// `A -> A (x) A`
    Comult(O),
    /// `A -> I`
    Counit(O),
    /// `I -> A (x) A`, equal to the unit followed by the comultiplication.
    Eta(O),
    /// `A (x) A -> I`, equal to the multiplication followed by the counit.
    Eps(O),
}

impl<O> Constant<O> {
    pub fn kind(&self) -> StructuralKind {
        match self {
            Constant::Id(_) => StructuralKind::Id,
            Constant::Sym(..) => StructuralKind::Sym,
            Constant::Mult(_) => StructuralKind::Mult,
            Constant::Unit(_) => StructuralKind::Unit,
            Constant::Comult(_) => StructuralKind::Comult,
            Constant::Counit(_) => StructuralKind::Counit,
            Constant::Eta(_) => StructuralKind::Eta,
            Constant::Eps(_) => StructuralKind::Eps,
        }
    }

    /// Builds a constant of the given kind; `second` is used only by `Sym`.
    pub fn of_kind(kind: StructuralKind, first: O, second: O) -> Self {
        match kind {
            StructuralKind::Id => Constant::Id(first),
            StructuralKind::Sym => Constant::Sym(first, second),
            StructuralKind::Mult => Constant::Mult(first),
            StructuralKind::Unit => Constant::Unit(first),
            StructuralKind::Comult => Constant::Comult(first),
            StructuralKind::Counit => Constant::Counit(first),
            StructuralKind::Eta => Constant::Eta(first),
            StructuralKind::Eps => Constant::Eps(first),
        }
    }

    pub fn map<P>(&self, mut f: impl FnMut(&O) -> P) -> Constant<P> {
        match self {
            Constant::Id(a) => Constant::Id(f(a)),
            Constant::Sym(a, b) => {
                let a = f(a);
                Constant::Sym(a, f(b))
            }
            Constant::Mult(a) => Constant::Mult(f(a)),
            Constant::Unit(a) => Constant::Unit(f(a)),
            Constant::Comult(a) => Constant::Comult(f(a)),
            Constant::Counit(a) => Constant::Counit(f(a)),
            Constant::Eta(a) => Constant::Eta(f(a)),
            Constant::Eps(a) => Constant::Eps(f(a)),
        }
    }

    pub fn objects(&self) -> Vec<&O> {
        match self {
            Constant::Sym(a, b) => vec![a, b],
            Constant::Id(a)
            | Constant::Mult(a)
            | Constant::Unit(a)
            | Constant::Comult(a)
            | Constant::Counit(a)
            | Constant::Eta(a)
            | Constant::Eps(a) => vec![a],
        }
    }
}

impl<O: Clone> Constant<O> {
    /// The mirror-image constant (reverse every arrow).
    pub fn reversed(&self) -> Self {
        match self {
            Constant::Id(a) => Constant::Id(a.clone()),
            Constant::Sym(a, b) => Constant::Sym(b.clone(), a.clone()),
            Constant::Mult(a) => Constant::Comult(a.clone()),
            Constant::Comult(a) => Constant::Mult(a.clone()),
            Constant::Unit(a) => Constant::Counit(a.clone()),
            Constant::Counit(a) => Constant::Unit(a.clone()),
            Constant::Eta(a) => Constant::Eps(a.clone()),
            Constant::Eps(a) => Constant::Eta(a.clone()),
        }
    }
}

/// Operations shared by `cospan(FinSet)` and `span(FinSet)`.
///
/// Objects are finite sets given by their size; the tensor of objects is
/// computed with [`Mode::tensor_size`].
pub trait Wscc: Sized + Clone + PartialEq + fmt::Display + fmt::Debug {
    const MODE: Mode;

    fn source(&self) -> usize;
    fn target(&self) -> usize;
    fn apex(&self) -> usize;

    fn identity(n: usize) -> Self;
    fn constant(c: &Constant<usize>) -> Self;
    fn lift(f: &FinFn, direction: Direction) -> Self;

    /// The image of a discrete cospan `I -phi-> J <-psi- K` whose summands
    /// have the given sizes.
    fn discrete(
        left: &[usize],
        center: &[usize],
        right: &[usize],
        phi: &[usize],
        psi: &[usize],
    ) -> Result<Self>;

    /// `self` followed by `other`.
    fn compose(&self, other: &Self) -> Result<Self>;
    fn tensor(&self, other: &Self) -> Self;
    fn canonical(&self) -> Self;

    /// Equality up to an isomorphism of apexes commuting with both legs.
    fn iso_eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    fn boundary(&self) -> String {
        format!("[{}]->[{}]", self.source(), self.target())
    }
}

/// A cospan `left -> apex <- right`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cospan {
    leg_l: FinFn,
    leg_r: FinFn,
}

impl Cospan {
    pub fn new(leg_l: FinFn, leg_r: FinFn) -> Result<Self> {
        if leg_l.cod() != leg_r.cod() {
            return Err(Error::boundary("cospan", leg_l.boundary(), leg_r.boundary()));
        }
        Ok(Cospan { leg_l, leg_r })
    }

    pub fn left(&self) -> usize {
        self.leg_l.dom()
    }

    pub fn right(&self) -> usize {
        self.leg_r.dom()
    }

    pub fn leg_l(&self) -> &FinFn {
        &self.leg_l
    }

    pub fn leg_r(&self) -> &FinFn {
        &self.leg_r
    }

    /// Apex elements not in the image of either leg.
    pub fn untouched(&self) -> usize {
        let mut hit = vec![false; self.apex()];
        for &e in self.leg_l.table().iter().chain(self.leg_r.table()) {
            hit[e] = true;
        }
        hit.into_iter().filter(|h| !h).count()
    }

    /// The cospan with its feet exchanged.
    pub fn reversed(&self) -> Cospan {
        Cospan {
            leg_l: self.leg_r.clone(),
            leg_r: self.leg_l.clone(),
        }
    }
}

impl Wscc for Cospan {
    const MODE: Mode = Mode::Cospan;

    fn source(&self) -> usize {
        self.leg_l.dom()
    }

    fn target(&self) -> usize {
        self.leg_r.dom()
    }

    fn apex(&self) -> usize {
        self.leg_l.cod()
    }

    fn identity(n: usize) -> Self {
        Cospan {
            leg_l: FinFn::identity(n),
            leg_r: FinFn::identity(n),
        }
    }

    fn constant(c: &Constant<usize>) -> Self {
        match *c {
            Constant::Id(a) => Cospan::identity(a),
            Constant::Sym(a, b) => Cospan::lift(&FinFn::swap_sum(a, b), Direction::Forward),
            Constant::Mult(a) => Cospan::lift(&FinFn::codiagonal(a), Direction::Forward),
            Constant::Comult(a) => Cospan::lift(&FinFn::codiagonal(a), Direction::Backward),
            Constant::Unit(a) => Cospan::lift(&FinFn::initial(a), Direction::Forward),
            Constant::Counit(a) => Cospan::lift(&FinFn::initial(a), Direction::Backward),
            Constant::Eta(a) => Cospan {
                leg_l: FinFn::initial(a),
                leg_r: FinFn::codiagonal(a),
            },
            Constant::Eps(a) => Cospan {
                leg_l: FinFn::codiagonal(a),
                leg_r: FinFn::initial(a),
            },
        }
    }

    fn lift(f: &FinFn, direction: Direction) -> Self {
        let id = FinFn::identity(f.cod());
        match direction {
            Direction::Forward => Cospan {
                leg_l: f.clone(),
                leg_r: id,
            },
            Direction::Backward => Cospan {
                leg_l: id,
                leg_r: f.clone(),
            },
        }
    }

    fn discrete(
        left: &[usize],
        center: &[usize],
        right: &[usize],
        phi: &[usize],
        psi: &[usize],
    ) -> Result<Self> {
        Cospan::new(
            FinFn::block_map(left, center, phi)?,
            FinFn::block_map(right, center, psi)?,
        )
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        if self.target() != other.source() {
            return Err(Error::boundary("compose", self.boundary(), other.boundary()));
        }
        let (to_p_left, to_p_right) = pushout(&self.leg_r, &other.leg_l)?;
        let composite = Cospan {
            leg_l: self.leg_l.compose(&to_p_left)?,
            leg_r: other.leg_r.compose(&to_p_right)?,
        };
        Ok(composite.canonical())
    }

    fn tensor(&self, other: &Self) -> Self {
        Cospan {
            leg_l: self.leg_l.sum(&other.leg_l),
            leg_r: self.leg_r.sum(&other.leg_r),
        }
        .canonical()
    }

    /// Renumbers the apex in order of first appearance, scanning the left
    /// leg and then the right leg; untouched elements go last.
    fn canonical(&self) -> Self {
        let apex = self.apex();
        let mut relabel = vec![usize::MAX; apex];
        let mut next = 0;
        for &e in self.leg_l.table().iter().chain(self.leg_r.table()) {
            if relabel[e] == usize::MAX {
                relabel[e] = next;
                next += 1;
            }
        }
        for r in relabel.iter_mut().filter(|r| **r == usize::MAX) {
            *r = next;
            next += 1;
        }
        let map = |f: &FinFn| FinFn::from_parts(f.table().iter().map(|&e| relabel[e]).collect(), apex);
        Cospan {
            leg_l: map(&self.leg_l),
            leg_r: map(&self.leg_r),
        }
    }
}

impl fmt::Display for Cospan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -{}-> {} <-{}- {}",
            self.left(),
            table_text(&self.leg_l),
            self.apex(),
            table_text(&self.leg_r),
            self.right()
        )
    }
}

impl fmt::Debug for Cospan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cospan({self})")
    }
}

/// A span `left <- apex -> right`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Span {
    leg_l: FinFn,
    leg_r: FinFn,
}

impl Span {
    pub fn new(leg_l: FinFn, leg_r: FinFn) -> Result<Self> {
        if leg_l.dom() != leg_r.dom() {
            return Err(Error::boundary("span", leg_l.boundary(), leg_r.boundary()));
        }
        Ok(Span { leg_l, leg_r })
    }

    pub fn left(&self) -> usize {
        self.leg_l.cod()
    }

    pub fn right(&self) -> usize {
        self.leg_r.cod()
    }

    pub fn leg_l(&self) -> &FinFn {
        &self.leg_l
    }

    pub fn leg_r(&self) -> &FinFn {
        &self.leg_r
    }

    pub fn reversed(&self) -> Span {
        Span {
            leg_l: self.leg_r.clone(),
            leg_r: self.leg_l.clone(),
        }
    }
}

impl Wscc for Span {
    const MODE: Mode = Mode::Span;

    fn source(&self) -> usize {
        self.leg_l.cod()
    }

    fn target(&self) -> usize {
        self.leg_r.cod()
    }

    fn apex(&self) -> usize {
        self.leg_l.dom()
    }

    fn identity(n: usize) -> Self {
        Span {
            leg_l: FinFn::identity(n),
            leg_r: FinFn::identity(n),
        }
    }

    fn constant(c: &Constant<usize>) -> Self {
        match *c {
            Constant::Id(a) => Span::identity(a),
            Constant::Sym(a, b) => Span::lift(&FinFn::swap_product(a, b), Direction::Forward),
            Constant::Mult(a) => Span::lift(&FinFn::diagonal(a), Direction::Backward),
            Constant::Comult(a) => Span::lift(&FinFn::diagonal(a), Direction::Forward),
            Constant::Unit(a) => Span::lift(&FinFn::terminal(a), Direction::Backward),
            Constant::Counit(a) => Span::lift(&FinFn::terminal(a), Direction::Forward),
            Constant::Eta(a) => Span {
                leg_l: FinFn::terminal(a),
                leg_r: FinFn::diagonal(a),
            },
            Constant::Eps(a) => Span {
                leg_l: FinFn::diagonal(a),
                leg_r: FinFn::terminal(a),
            },
        }
    }

    /// Forward: `dom f <-1- dom f -f-> cod f`; backward is its mirror image.
    fn lift(f: &FinFn, direction: Direction) -> Self {
        let id = FinFn::identity(f.dom());
        match direction {
            Direction::Forward => Span {
                leg_l: id,
                leg_r: f.clone(),
            },
            Direction::Backward => Span {
                leg_l: f.clone(),
                leg_r: id,
            },
        }
    }

    fn discrete(
        left: &[usize],
        center: &[usize],
        right: &[usize],
        phi: &[usize],
        psi: &[usize],
    ) -> Result<Self> {
        Span::new(
            FinFn::restriction(left, center, phi)?,
            FinFn::restriction(right, center, psi)?,
        )
    }

    fn compose(&self, other: &Self) -> Result<Self> {
        if self.target() != other.source() {
            return Err(Error::boundary("compose", self.boundary(), other.boundary()));
        }
        let (p_self, p_other) = pullback(&self.leg_r, &other.leg_l)?;
        let composite = Span {
            leg_l: p_self.compose(&self.leg_l)?,
            leg_r: p_other.compose(&other.leg_r)?,
        };
        Ok(composite.canonical())
    }

    fn tensor(&self, other: &Self) -> Self {
        Span {
            leg_l: self.leg_l.product(&other.leg_l),
            leg_r: self.leg_r.product(&other.leg_r),
        }
        .canonical()
    }

    /// Sorts apex elements by their pair of images; the iso class of a
    /// span is exactly this multiset of pairs.
    fn canonical(&self) -> Self {
        let mut pairs: Vec<(usize, usize)> = self
            .leg_l
            .table()
            .iter()
            .copied()
            .zip(self.leg_r.table().iter().copied())
            .collect();
        pairs.sort_unstable();
        Span {
            leg_l: FinFn::from_parts(pairs.iter().map(|p| p.0).collect(), self.left()),
            leg_r: FinFn::from_parts(pairs.iter().map(|p| p.1).collect(), self.right()),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <-{}- {} -{}-> {}",
            self.left(),
            table_text(&self.leg_l),
            self.apex(),
            table_text(&self.leg_r),
            self.right()
        )
    }
}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Span({self})")
    }
}

fn table_text(f: &FinFn) -> String {
    let items: Vec<String> = f.table().iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

/// An arrow of either algebra, for callers that pick the mode at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arrow {
    Cospan(Cospan),
    Span(Span),
}

impl Arrow {
    pub fn mode(&self) -> Mode {
        match self {
            Arrow::Cospan(_) => Mode::Cospan,
            Arrow::Span(_) => Mode::Span,
        }
    }

    pub fn apex(&self) -> usize {
        match self {
            Arrow::Cospan(c) => c.apex(),
            Arrow::Span(s) => s.apex(),
        }
    }

    pub fn iso_eq(&self, other: &Arrow) -> bool {
        match (self, other) {
            (Arrow::Cospan(a), Arrow::Cospan(b)) => a.iso_eq(b),
            (Arrow::Span(a), Arrow::Span(b)) => a.iso_eq(b),
            _ => false,
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arrow::Cospan(c) => c.fmt(f),
            Arrow::Span(s) => s.fmt(f),
        }
    }
}

/// A structural constant on a single object of the given size.
pub fn constant(kind: StructuralKind, size: usize, mode: Mode) -> Arrow {
    let c = Constant::of_kind(kind, size, size);
    match mode {
        Mode::Cospan => Arrow::Cospan(Cospan::constant(&c)),
        Mode::Span => Arrow::Span(Span::constant(&c)),
    }
}

pub fn lift(f: &FinFn, direction: Direction, mode: Mode) -> Arrow {
    match mode {
        Mode::Cospan => Arrow::Cospan(Cospan::lift(f, direction)),
        Mode::Span => Arrow::Span(Span::lift(f, direction)),
    }
}

#[derive(Serialize, Deserialize)]
struct RawArrow {
    mode: Mode,
    left: usize,
    right: usize,
    apex: usize,
    leg_left: Vec<usize>,
    leg_right: Vec<usize>,
}

impl Serialize for Arrow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (leg_l, leg_r, left, right, apex) = match self {
            Arrow::Cospan(c) => (c.leg_l(), c.leg_r(), c.left(), c.right(), c.apex()),
            Arrow::Span(sp) => (sp.leg_l(), sp.leg_r(), sp.left(), sp.right(), sp.apex()),
        };
        RawArrow {
            mode: self.mode(),
            left,
            right,
            apex,
            leg_left: leg_l.table().to_vec(),
            leg_right: leg_r.table().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arrow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawArrow::deserialize(d)?;
        let build = || -> Result<Arrow> {
            match raw.mode {
                Mode::Cospan => {
                    let l = FinFn::new(raw.leg_left.clone(), raw.apex)?;
                    let r = FinFn::new(raw.leg_right.clone(), raw.apex)?;
                    if l.dom() != raw.left || r.dom() != raw.right {
                        return Err(Error::IllFormed("cospan feet do not match legs".into()));
                    }
                    Ok(Arrow::Cospan(Cospan::new(l, r)?))
                }
                Mode::Span => {
                    let l = FinFn::new(raw.leg_left.clone(), raw.left)?;
                    let r = FinFn::new(raw.leg_right.clone(), raw.right)?;
                    if l.dom() != raw.apex || r.dom() != raw.apex {
                        return Err(Error::IllFormed("span apex does not match legs".into()));
                    }
                    Ok(Arrow::Span(Span::new(l, r)?))
                }
            }
        };
        build().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ff(table: &[usize], cod: usize) -> FinFn {
        FinFn::new(table.to_vec(), cod).unwrap()
    }

    #[test]
    fn cospan_constants() {
        let m = Cospan::constant(&Constant::Mult(2));
        assert_eq!(m.apex(), 2);
        assert_eq!(m.leg_l().table(), &[0, 1, 0, 1]);
        assert!(m.leg_r().is_identity());

        let eta = Cospan::constant(&Constant::Eta(1));
        assert_eq!((eta.source(), eta.target(), eta.apex()), (0, 2, 1));
        assert_eq!(eta.leg_r().table(), &[0, 0]);
    }

    #[test]
    fn span_mult_uses_the_diagonal() {
        let m = Span::constant(&Constant::Mult(2));
        assert_eq!((m.source(), m.apex(), m.target()), (4, 2, 2));
        assert_eq!(m.leg_l().table(), &[0, 3]);
        assert!(m.leg_r().is_identity());
        let comult = Span::constant(&Constant::Comult(2));
        assert!(comult.compose(&m).unwrap().iso_eq(&Span::identity(2)));
    }

    #[test]
    fn lifts() {
        assert_eq!(Cospan::lift(&FinFn::identity(3), Direction::Forward), Cospan::identity(3));
        let f = ff(&[0, 0], 1);
        let l = Cospan::lift(&f, Direction::Forward);
        assert_eq!((l.source(), l.target(), l.apex()), (2, 1, 1));
        let back = Cospan::lift(&f, Direction::Backward);
        let c = back.compose(&l).unwrap();
        assert_eq!(c.apex(), 1);
    }

    #[test]
    fn compose_examples() {
        let a = Cospan::lift(&ff(&[1, 0, 1], 2), Direction::Backward);
        assert!(a.compose(&Cospan::identity(3)).unwrap().iso_eq(&a));

        let delta = Cospan::constant(&Constant::Comult(1));
        let nabla = Cospan::constant(&Constant::Mult(1));
        let c = delta.compose(&nabla).unwrap();
        assert_eq!((c.source(), c.target(), c.apex()), (1, 1, 1));
        assert!(c.iso_eq(&Cospan::identity(1)));

        let c = Cospan::lift(&ff(&[0, 1], 3), Direction::Forward)
            .compose(&Cospan::lift(&ff(&[0, 0, 0], 1), Direction::Forward))
            .unwrap();
        assert!(c.iso_eq(&Cospan::lift(&ff(&[0, 0], 1), Direction::Forward)));
    }

    #[test]
    fn compose_rejects_mismatched_feet() {
        let err = Cospan::identity(2).compose(&Cospan::identity(3)).unwrap_err();
        assert!(matches!(err, Error::Boundary { op: "compose", .. }));
    }

    #[test]
    fn tensor_examples() {
        let a = Cospan::constant(&Constant::Eps(2));
        assert_eq!(a.tensor(&Cospan::identity(0)), a.canonical());
        let f = ff(&[1, 0], 2);
        let g = ff(&[0, 0, 1], 2);
        assert!(Cospan::lift(&f, Direction::Forward)
            .tensor(&Cospan::lift(&g, Direction::Forward))
            .iso_eq(&Cospan::lift(&f.sum(&g), Direction::Forward)));
        let m = Cospan::constant(&Constant::Mult(1));
        let t = m.tensor(&m);
        assert_eq!((t.source(), t.apex(), t.target()), (4, 2, 2));
        assert_eq!(t.leg_l().table(), &[0, 0, 1, 1]);
    }

    #[test]
    fn iso_eq_examples() {
        let c = Cospan::new(ff(&[2, 0], 4), ff(&[1, 2, 2], 4)).unwrap();
        let perm = ff(&[3, 1, 0, 2], 4);
        let relabelled = Cospan::new(
            c.leg_l().compose(&perm).unwrap(),
            c.leg_r().compose(&perm).unwrap(),
        )
        .unwrap();
        assert!(c.iso_eq(&relabelled));
        let bigger = Cospan::new(ff(&[2, 0], 5), ff(&[1, 2, 2], 5)).unwrap();
        assert!(!c.iso_eq(&bigger));
    }

    #[test]
    fn three_way_identification_associates() {
        let a = Cospan::lift(&ff(&[0, 0, 1], 2), Direction::Forward);
        let b = Cospan::lift(&ff(&[0, 1], 2), Direction::Backward).compose(&Cospan::lift(&ff(&[0, 0], 1), Direction::Forward)).unwrap();
        let c = Cospan::constant(&Constant::Comult(1));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert!(left.iso_eq(&right));
        assert_eq!(left.apex(), 1);
    }

    #[test]
    fn canonical_puts_untouched_last() {
        let c = Cospan::new(ff(&[2], 3), ff(&[0], 3)).unwrap();
        let k = c.canonical();
        assert_eq!(k.leg_l().table(), &[0]);
        assert_eq!(k.leg_r().table(), &[1]);
        assert_eq!(k.untouched(), 1);
    }

    #[test]
    fn text_form() {
        let m = Cospan::constant(&Constant::Mult(1));
        assert_eq!(m.to_string(), "2 -[0,0]-> 1 <-[0]- 1");
        let s = Span::constant(&Constant::Mult(1));
        assert_eq!(s.to_string(), "1 <-[0]- 1 -[0]-> 1");
    }

    #[test]
    fn arrow_json_round_trip() {
        let a = Arrow::Cospan(Cospan::constant(&Constant::Eta(2)));
        let text = serde_json::to_string(&a).unwrap();
        let back: Arrow = serde_json::from_str(&text).unwrap();
        assert!(a.iso_eq(&back));
        let bad = r#"{"mode":"cospan","left":1,"right":0,"apex":1,"leg_left":[3],"leg_right":[]}"#;
        assert!(serde_json::from_str::<Arrow>(bad).is_err());
    }
}
