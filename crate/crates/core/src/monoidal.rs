//! Monoidal diagrams in finite sets under `+`, where an arc runs from a word
//! of vertices to a word of vertices, and their colimits.
//!
//! The feedback shape `f : A+C -> B+C`, with `C` wired back to itself, has
//! as colimit the orbits of `A+B+C` under `x ~ f(x)`.

use crate::cospan::{Constant, Cospan, Direction, Wscc};
use crate::diagram::{Cocone, LabeledDiagram, Vertex};
use crate::error::{Error, Result};
use crate::finset::{coequalizer, offsets, FinFn};
use crate::oracle::{count_factorizations, for_each_function};

/// An arc from the word `src` to the word `tgt`, labelled by a function
/// from the sum of the source labels to the sum of the target labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalArc {
    pub name: String,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub map: FinFn,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonoidalDiagram {
    vertices: Vec<Vertex>,
    arcs: Vec<MonoidalArc>,
}

impl MonoidalDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, size: usize) -> Result<usize> {
        let name = name.into();
        if self.vertex_index(&name).is_some() {
            return Err(Error::DuplicateName { what: "vertex", name });
        }
        self.vertices.push(Vertex { name, size });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arc(&mut self, name: impl Into<String>, src: Vec<usize>, tgt: Vec<usize>, map: FinFn) -> Result<usize> {
        let name = name.into();
        if self.arcs.iter().any(|a| a.name == name) {
            return Err(Error::DuplicateName { what: "arc", name });
        }
        let bound = self.vertices.len();
        if let Some(&v) = src.iter().chain(&tgt).find(|&&v| v >= bound) {
            return Err(Error::BadIndex { what: "vertex", index: v, bound });
        }
        let (a, b) = (self.word_size(&src), self.word_size(&tgt));
        if map.dom() != a || map.cod() != b {
            return Err(Error::boundary("arc label", format!("{name}: [{a}]->[{b}]"), map.boundary()));
        }
        self.arcs.push(MonoidalArc { name, src, tgt, map });
        Ok(self.arcs.len() - 1)
    }

    /// Adds an arc between words of named vertices.
    pub fn connect(&mut self, name: impl Into<String>, src: &[&str], tgt: &[&str], table: Vec<usize>) -> Result<usize> {
        let src = self.require_all(src)?;
        let tgt = self.require_all(tgt)?;
        let map = FinFn::new(table, self.word_size(&tgt))?;
        self.add_arc(name, src, tgt, map)
    }

    fn require_all(&self, names: &[&str]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| {
                self.vertex_index(n).ok_or_else(|| Error::UnknownName {
                    what: "vertex",
                    name: n.to_string(),
                })
            })
            .collect()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[MonoidalArc] {
        &self.arcs
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.size).collect()
    }

    pub fn total_size(&self) -> usize {
        self.vertices.iter().map(|v| v.size).sum()
    }

    /// Sum of the labels along a word.
    pub fn word_size(&self, word: &[usize]) -> usize {
        word.iter().map(|&v| self.vertices[v].size).sum()
    }

    /// Positions in the sum of all vertex labels of the elements of the sum
    /// along `word`.
    fn word_positions(&self, word: &[usize], off: &[usize]) -> Vec<usize> {
        word.iter()
            .flat_map(|&v| (0..self.vertices[v].size).map(move |x| off[v] + x))
            .collect()
    }

    /// Every ordinary diagram is a monoidal one with words of length one.
    pub fn from_diagram(d: &LabeledDiagram) -> Self {
        MonoidalDiagram {
            vertices: d.vertices().to_vec(),
            arcs: d
                .edges()
                .iter()
                .map(|e| MonoidalArc {
                    name: e.name.clone(),
                    src: vec![e.src],
                    tgt: vec![e.tgt],
                    map: e.map.clone(),
                })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut copy = MonoidalDiagram {
            vertices: Vec::new(),
            arcs: Vec::new(),
        };
        for v in &self.vertices {
            copy.add_vertex(v.name.clone(), v.size)?;
        }
        for a in &self.arcs {
            copy.add_arc(a.name.clone(), a.src.clone(), a.tgt.clone(), a.map.clone())?;
        }
        Ok(())
    }

    /// True iff the legs `q_v` satisfy `[q_tgt] . f = [q_src]` for every arc,
    /// with `[q_w]` the cotuple of the legs along the word `w`.
    pub fn is_cocone(&self, c: &Cocone) -> bool {
        c.legs.len() == self.vertices.len()
            && c.legs.iter().zip(&self.vertices).all(|(l, v)| l.dom() == v.size && l.cod() == c.apex)
            && self.is_cocone_family(&c.cotuple())
    }

    fn is_cocone_family(&self, family: &FinFn) -> bool {
        let off = offsets(&self.sizes());
        self.arcs.iter().all(|a| {
            let src = self.word_positions(&a.src, &off);
            let tgt = self.word_positions(&a.tgt, &off);
            (0..a.map.dom()).all(|x| family.apply(tgt[a.map.apply(x)]) == family.apply(src[x]))
        })
    }
}

/// The colimit of a monoidal diagram: the coequalizer of the two maps
/// `sum_arcs (sum along src) => sum_vertices`, one including each source
/// word and the other applying the arc and then including the target word.
pub fn mon_colimit(d: &MonoidalDiagram) -> Cocone {
    let sizes = d.sizes();
    let off = offsets(&sizes);
    let total = off[sizes.len()];
    let (mut u, mut v) = (Vec::new(), Vec::new());
    for a in &d.arcs {
        let src = d.word_positions(&a.src, &off);
        let tgt = d.word_positions(&a.tgt, &off);
        for (x, &s) in src.iter().enumerate() {
            u.push(s);
            v.push(tgt[a.map.apply(x)]);
        }
    }
    let q = coequalizer(&FinFn::from_parts(u, total), &FinFn::from_parts(v, total))
        .expect("both maps share their boundary by construction");
    let legs = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| FinFn::from_parts(q.table()[off[i]..off[i] + s].to_vec(), q.cod()))
        .collect();
    Cocone { apex: q.cod(), legs }
}

/// True iff `c` is a cocone on `d` through which every cocone with apex of
/// size at most `bound` factors exactly once. Brute force.
pub fn universal_monoidal_cocone_oracle(d: &MonoidalDiagram, c: &Cocone, bound: usize) -> bool {
    if !d.is_cocone(c) {
        return false;
    }
    let legs = c.cotuple();
    let total = d.total_size();
    (0..=bound).all(|n| {
        let mut ok = true;
        for_each_function(total, n, |family| {
            if ok && d.is_cocone_family(&FinFn::from_parts(family.to_vec(), n)) {
                ok = count_factorizations(legs.table(), c.apex, family, n) == 1;
            }
        });
        ok
    })
}

/// A monoidal diagram with discrete feet, given as lists of centre vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalDiagramCospan {
    pub center: MonoidalDiagram,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl MonoidalDiagramCospan {
    pub fn new(center: MonoidalDiagram, left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        center.validate()?;
        let bound = center.vertices.len();
        if let Some(&v) = left.iter().chain(&right).find(|&&v| v >= bound) {
            return Err(Error::BadIndex { what: "foot vertex", index: v, bound });
        }
        Ok(MonoidalDiagramCospan { center, left, right })
    }

    /// The feedback shape: vertices `A, B, C`, one arc `f : A C -> B C`,
    /// left foot `A` and right foot `B`.
    pub fn feedback(a: usize, b: usize, c: usize, f: &FinFn) -> Result<Self> {
        let mut d = MonoidalDiagram::new();
        d.add_vertex("A", a)?;
        d.add_vertex("B", b)?;
        d.add_vertex("C", c)?;
        d.add_arc("f", vec![0, 2], vec![1, 2], f.clone())?;
        MonoidalDiagramCospan::new(d, vec![0], vec![1])
    }

    /// The colimit of the centre with the feet mapped through its legs.
    pub fn colim(&self) -> Cospan {
        let c = mon_colimit(&self.center);
        let foot = |vs: &[usize]| {
            let table = vs.iter().flat_map(|&v| c.legs[v].table().iter().copied()).collect();
            FinFn::from_parts(table, c.apex)
        };
        Cospan::new(foot(&self.left), foot(&self.right))
            .expect("both feet land in the apex")
            .canonical()
    }
}

fn check_feedback(a: usize, b: usize, c: usize, f: &FinFn) -> Result<()> {
    if f.dom() != a + c || f.cod() != b + c {
        return Err(Error::boundary(
            "feedback",
            format!("[{}]->[{}]", a + c, b + c),
            f.boundary(),
        ));
    }
    Ok(())
}

/// `(1_A * eta_C) ; (f * 1_C) ; (1_B * eps_C)` in cospans, for
/// `f : A+C -> B+C`. The apex is the set of orbits of `A+B+C` under `x ~ f(x)`.
pub fn feedback_cospan(a: usize, b: usize, c: usize, f: &FinFn) -> Result<Cospan> {
    check_feedback(a, b, c, f)?;
    let first = Cospan::identity(a).tensor(&Cospan::constant(&Constant::Eta(c)));
    let second = Cospan::lift(f, Direction::Forward).tensor(&Cospan::identity(c));
    let third = Cospan::identity(b).tensor(&Cospan::constant(&Constant::Eps(c)));
    first.compose(&second)?.compose(&third)
}

/// The partial function `A -> B` obtained by iterating `f : A+C -> B+C`
/// until it leaves `C`; `None` where the iteration is trapped in a cycle.
pub fn trace_partial_fn(a: usize, b: usize, c: usize, f: &FinFn) -> Result<Vec<Option<usize>>> {
    check_feedback(a, b, c, f)?;
    let mut out = Vec::with_capacity(a);
    for x in 0..a {
        let mut visited = vec![false; c];
        let mut y = f.apply(x);
        let value = loop {
            if y < b {
                break Some(y);
            }
            let k = y - b;
            if visited[k] {
                break None;
            }
            visited[k] = true;
            y = f.apply(a + k);
        };
        out.push(value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::colimit_classical;

    fn ff(table: &[usize], cod: usize) -> FinFn {
        FinFn::new(table.to_vec(), cod).unwrap()
    }

    #[test]
    fn single_orbit() {
        let mut d = MonoidalDiagram::new();
        for n in ["A", "B", "C"] {
            d.add_vertex(n, 1).unwrap();
        }
        // f(a) = c, f(c) = b
        d.connect("f", &["A", "C"], &["B", "C"], vec![1, 0]).unwrap();
        let c = mon_colimit(&d);
        assert_eq!(c.apex, 1);
        assert!(universal_monoidal_cocone_oracle(&d, &c, 3));
    }

    #[test]
    fn degenerate_words_agree_with_ordinary_colimits() {
        let mut d = LabeledDiagram::discrete([("A", 2), ("B", 3)]).unwrap();
        d.connect("f", "A", "B", vec![0, 1]).unwrap();
        d.connect("g", "A", "B", vec![1, 2]).unwrap();
        assert_eq!(mon_colimit(&MonoidalDiagram::from_diagram(&d)), colimit_classical(&d));
        let empty = MonoidalDiagram::from_diagram(&LabeledDiagram::discrete([("A", 2), ("B", 1)]).unwrap());
        assert_eq!(mon_colimit(&empty).apex, 3);
    }

    #[test]
    fn empty_words_are_the_unit() {
        let mut d = MonoidalDiagram::new();
        d.add_vertex("A", 2).unwrap();
        d.add_arc("z", vec![], vec![0], FinFn::initial(2)).unwrap();
        d.add_arc("w", vec![0, 0], vec![], FinFn::initial(0)).unwrap_err();
        let c = mon_colimit(&d);
        assert_eq!(c.apex, 2);
        assert!(universal_monoidal_cocone_oracle(&d, &c, 3));
    }

    #[test]
    fn feedback_examples() {
        let f = ff(&[1, 0], 2);
        let c = feedback_cospan(1, 1, 1, &f).unwrap();
        assert_eq!((c.apex(), c.leg_l().table(), c.leg_r().table()), (1, &[0][..], &[0][..]));
        assert_eq!(trace_partial_fn(1, 1, 1, &f).unwrap(), vec![Some(0)]);

        let f = ff(&[1, 1], 2);
        let c = feedback_cospan(1, 1, 1, &f).unwrap();
        assert_eq!((c.apex(), c.leg_l().table(), c.leg_r().table()), (2, &[0][..], &[1][..]));
        assert_eq!(trace_partial_fn(1, 1, 1, &f).unwrap(), vec![None]);

        let f = ff(&[2, 0], 3);
        assert!(feedback_cospan(2, 3, 0, &f).unwrap().iso_eq(&Cospan::lift(&f, Direction::Forward)));
        assert_eq!(trace_partial_fn(2, 3, 0, &f).unwrap(), vec![Some(2), Some(0)]);
        assert!(feedback_cospan(1, 1, 1, &ff(&[0], 2)).is_err());
    }

    #[test]
    fn feedback_matches_the_monoidal_diagram() {
        let f = ff(&[3, 1, 0, 2], 4);
        let d = MonoidalDiagramCospan::feedback(2, 2, 2, &f).unwrap();
        assert!(d.colim().iso_eq(&feedback_cospan(2, 2, 2, &f).unwrap()));
    }
}
