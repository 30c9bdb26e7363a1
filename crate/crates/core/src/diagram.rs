//! Finite diagrams of finite sets and their classical colimits and limits.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finset::{coequalizer, offsets, FinFn};

/// A named finite set. Used both for diagram vertices and for the objects
/// appearing in expressions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: String,
    pub size: usize,
}

pub type Obj = Vertex;

impl Vertex {
    pub fn new(name: impl Into<String>, size: usize) -> Self {
        Vertex {
            name: name.into(),
            size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub map: FinFn,
}

/// A finite graph whose vertices are labelled by finite sets and whose edges
/// are labelled by functions between the labels of their endpoints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabeledDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl LabeledDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// A diagram with the given vertices and no edges.
    pub fn discrete<S: Into<String>>(vertices: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        let mut d = LabeledDiagram::new();
        for (name, size) in vertices {
            d.add_vertex(name, size)?;
        }
        Ok(d)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, size: usize) -> Result<usize> {
        let name = name.into();
        if self.vertex_index(&name).is_some() {
            return Err(Error::DuplicateName { what: "vertex", name });
        }
        self.vertices.push(Vertex { name, size });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_edge(
        &mut self,
        name: impl Into<String>,
        src: usize,
        tgt: usize,
        map: FinFn,
    ) -> Result<usize> {
        let name = name.into();
        if self.edges.iter().any(|e| e.name == name) {
            return Err(Error::DuplicateName { what: "edge", name });
        }
        for v in [src, tgt] {
            if v >= self.vertices.len() {
                return Err(Error::BadIndex {
                    what: "vertex",
                    index: v,
                    bound: self.vertices.len(),
                });
            }
        }
        let (a, b) = (self.vertices[src].size, self.vertices[tgt].size);
        if map.dom() != a || map.cod() != b {
            return Err(Error::boundary(
                "edge label",
                format!("{name}: [{a}]->[{b}]"),
                map.boundary(),
            ));
        }
        self.edges.push(Edge { name, src, tgt, map });
        Ok(self.edges.len() - 1)
    }

    /// Adds an edge between named vertices.
    pub fn connect(&mut self, name: impl Into<String>, src: &str, tgt: &str, table: Vec<usize>) -> Result<usize> {
        let s = self.require_vertex(src)?;
        let t = self.require_vertex(tgt)?;
        let map = FinFn::new(table, self.vertices[t].size)?;
        self.add_edge(name, s, t, map)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name).ok_or_else(|| Error::UnknownName {
            what: "vertex",
            name: name.to_string(),
        })
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.size).collect()
    }

    pub fn total_size(&self) -> usize {
        self.vertices.iter().map(|v| v.size).sum()
    }

    /// Re-checks every invariant; diagrams built through the public
    /// constructors always pass.
    pub fn validate(&self) -> Result<()> {
        let mut names = HashSet::new();
        for v in &self.vertices {
            if !names.insert(v.name.as_str()) {
                return Err(Error::DuplicateName { what: "vertex", name: v.name.clone() });
            }
        }
        let mut names = HashSet::new();
        for e in &self.edges {
            if !names.insert(e.name.as_str()) {
                return Err(Error::DuplicateName { what: "edge", name: e.name.clone() });
            }
            let ok = e.src < self.vertices.len()
                && e.tgt < self.vertices.len()
                && e.map.dom() == self.vertices[e.src].size
                && e.map.cod() == self.vertices[e.tgt].size;
            if !ok {
                return Err(Error::IllFormed(format!("edge `{}` does not fit its endpoints", e.name)));
            }
        }
        Ok(())
    }

    /// Disjoint union; the names of `other` are suffixed where they collide.
    pub(crate) fn disjoint_union(&self, other: &LabeledDiagram) -> LabeledDiagram {
        let mut out = self.clone();
        let n = self.vertices.len();
        for v in &other.vertices {
            let name = fresh_name(&v.name, |c| out.vertex_index(c).is_some());
            out.vertices.push(Vertex { name, size: v.size });
        }
        for e in &other.edges {
            let name = fresh_name(&e.name, |c| out.edges.iter().any(|x| x.name == c));
            out.edges.push(Edge {
                name,
                src: e.src + n,
                tgt: e.tgt + n,
                map: e.map.clone(),
            });
        }
        out
    }

    /// The quotient of the vertex set along `q`, keeping every edge.
    /// Vertices in one class must carry equal sizes; the class takes the
    /// name of its least member.
    pub(crate) fn quotient_vertices(&self, q: &FinFn) -> Result<LabeledDiagram> {
        let mut rep: Vec<Option<usize>> = vec![None; q.cod()];
        for (v, &c) in q.table().iter().enumerate() {
            match rep[c] {
                None => rep[c] = Some(v),
                Some(r) if self.vertices[r].size != self.vertices[v].size => {
                    return Err(Error::LabelClash {
                        left: self.vertices[r].name.clone(),
                        left_size: self.vertices[r].size,
                        right: self.vertices[v].name.clone(),
                        right_size: self.vertices[v].size,
                    })
                }
                Some(_) => {}
            }
        }
        let vertices = rep
            .into_iter()
            .map(|r| self.vertices[r.expect("quotient maps are surjective")].clone())
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                name: e.name.clone(),
                src: q.apply(e.src),
                tgt: q.apply(e.tgt),
                map: e.map.clone(),
            })
            .collect();
        Ok(LabeledDiagram { vertices, edges })
    }
}

pub(crate) fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_string();
    }
    (1..)
        .map(|k| format!("{base}_{k}"))
        .find(|c| !taken(c))
        .expect("unbounded")
}

/// A cocone: one leg per vertex into a common apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocone {
    pub apex: usize,
    pub legs: Vec<FinFn>,
}

impl Cocone {
    /// True iff the legs fit the diagram and commute with every edge.
    pub fn is_cocone_on(&self, d: &LabeledDiagram) -> bool {
        self.legs.len() == d.vertices.len()
            && self
                .legs
                .iter()
                .zip(&d.vertices)
                .all(|(l, v)| l.dom() == v.size && l.cod() == self.apex)
            && d.edges.iter().all(|e| {
                (0..e.map.dom())
                    .all(|x| self.legs[e.tgt].apply(e.map.apply(x)) == self.legs[e.src].apply(x))
            })
    }

    /// The legs assembled into one map out of the sum of the vertex sets.
    pub fn cotuple(&self) -> FinFn {
        let table = self.legs.iter().flat_map(|l| l.table().iter().copied()).collect();
        FinFn::from_parts(table, self.apex)
    }
}

/// A cone: one leg per vertex out of a common apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub apex: usize,
    pub legs: Vec<FinFn>,
}

impl Cone {
    pub fn is_cone_on(&self, d: &LabeledDiagram) -> bool {
        self.legs.len() == d.vertices.len()
            && self
                .legs
                .iter()
                .zip(&d.vertices)
                .all(|(l, v)| l.cod() == v.size && l.dom() == self.apex)
            && d.edges.iter().all(|e| {
                (0..self.apex)
                    .all(|p| e.map.apply(self.legs[e.src].apply(p)) == self.legs[e.tgt].apply(p))
            })
    }
}

/// The colimit of `d` as the coequalizer of the two maps
/// `sum_edges dom(e) => sum_vertices V` (the injection of each edge's domain,
/// and the edge's function followed by the injection of its codomain).
pub fn colimit_classical(d: &LabeledDiagram) -> Cocone {
    let sizes = d.sizes();
    let off = offsets(&sizes);
    let total = off[sizes.len()];
    let (mut u, mut v) = (Vec::new(), Vec::new());
    for e in &d.edges {
        for x in 0..e.map.dom() {
            u.push(off[e.src] + x);
            v.push(off[e.tgt] + e.map.apply(x));
        }
    }
    let q = coequalizer(
        &FinFn::from_parts(u, total),
        &FinFn::from_parts(v, total),
    )
    .expect("both maps share their boundary by construction");
    let legs = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| FinFn::from_parts(q.table()[off[i]..off[i] + s].to_vec(), q.cod()))
        .collect();
    Cocone { apex: q.cod(), legs }
}

/// The limit of `d`: compatible families `(x_v)` in the product of all vertex
/// sets, enumerated in row-major order.
pub fn limit_classical(d: &LabeledDiagram) -> Cone {
    let sizes = d.sizes();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::with_capacity(sizes.len());
    extend_compatible(d, &sizes, &mut current, &mut members);
    let apex = members.len();
    let legs = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| FinFn::from_parts(members.iter().map(|m| m[i]).collect(), s))
        .collect();
    Cone { apex, legs }
}

// Depth-first over vertices in order, pruning as soon as an edge between
// assigned vertices is violated; the output order is row-major.
fn extend_compatible(
    d: &LabeledDiagram,
    sizes: &[usize],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let k = current.len();
    if k == sizes.len() {
        out.push(current.clone());
        return;
    }
    for x in 0..sizes[k] {
        current.push(x);
        let ok = d.edges.iter().all(|e| {
            let (s, t) = (e.src, e.tgt);
            if s.max(t) != k {
                return true;
            }
            e.map.apply(current[s]) == current[t]
        });
        if ok {
            extend_compatible(d, sizes, current, out);
        }
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parallel_pair(f: Vec<usize>, g: Vec<usize>) -> LabeledDiagram {
        let mut d = LabeledDiagram::discrete([("A", 2), ("B", 3)]).unwrap();
        d.connect("f", "A", "B", f).unwrap();
        d.connect("g", "A", "B", g).unwrap();
        d
    }

    #[test]
    fn colimit_of_discrete_is_sum() {
        let d = LabeledDiagram::discrete([("X", 1), ("Y", 2)]).unwrap();
        let c = colimit_classical(&d);
        assert_eq!(c.apex, 3);
        assert_eq!(c.legs[0].table(), &[0]);
        assert_eq!(c.legs[1].table(), &[1, 2]);
    }

    #[test]
    fn colimit_of_parallel_pair() {
        let c = colimit_classical(&parallel_pair(vec![1, 2], vec![0, 1]));
        assert_eq!(c.apex, 1);
        assert!(c.is_cocone_on(&parallel_pair(vec![1, 2], vec![0, 1])));
    }

    #[test]
    fn colimit_of_empty_is_initial() {
        assert_eq!(colimit_classical(&LabeledDiagram::new()).apex, 0);
    }

    #[test]
    fn limit_of_parallel_pair_is_equalizer() {
        let d = parallel_pair(vec![0, 2], vec![0, 1]);
        let c = limit_classical(&d);
        assert_eq!(c.apex, 1);
        assert_eq!(c.legs[0].table(), &[0]);
        assert_eq!(c.legs[1].table(), &[0]);
        assert!(c.is_cone_on(&d));
    }

    #[test]
    fn rejects_ill_typed_edges() {
        let mut d = LabeledDiagram::discrete([("A", 2), ("B", 3)]).unwrap();
        assert!(d.connect("f", "A", "B", vec![0]).is_err());
        assert!(d.connect("f", "A", "B", vec![0, 3]).is_err());
        assert!(d.connect("f", "A", "C", vec![0, 0]).is_err());
        d.connect("f", "A", "B", vec![0, 0]).unwrap();
        assert!(matches!(
            d.connect("f", "A", "B", vec![0, 0]),
            Err(Error::DuplicateName { .. })
        ));
        assert!(d.add_vertex("A", 1).is_err());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let taken = ["A", "A_1"];
        assert_eq!(fresh_name("A", |c| taken.contains(&c)), "A_2");
        assert_eq!(fresh_name("B", |c| taken.contains(&c)), "B");
    }
}
