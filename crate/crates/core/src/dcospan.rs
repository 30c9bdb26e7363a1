//! Cospans of diagrams with discrete feet, and the colimit and limit
//! functors out of them.
//!
//! Composition glues two centre graphs along their shared discrete foot.
//! This is a pushout of graphs, so vertices get identified but edges never
//! do; nothing here takes colimits of finite sets until [`colim_functor`].

use crate::cospan::{Constant, Cospan, Span, Wscc};
use crate::diagram::{colimit_classical, fresh_name, limit_classical, LabeledDiagram, Obj};
use crate::error::{Error, Result};
use crate::finset::FinFn;
use crate::union_find::UnionFind;

/// A cospan `{left} -> center <- {right}` whose feet are discrete diagrams,
/// given as lists of center vertices (repetitions allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCospan {
    center: LabeledDiagram,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl DiagramCospan {
    pub fn new(center: LabeledDiagram, left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        center.validate()?;
        let n = center.vertices().len();
        for &v in left.iter().chain(&right) {
            if v >= n {
                return Err(Error::BadIndex {
                    what: "foot vertex",
                    index: v,
                    bound: n,
                });
            }
        }
        Ok(DiagramCospan { center, left, right })
    }

    /// A diagram with no boundary.
    pub fn closed(center: LabeledDiagram) -> Self {
        DiagramCospan {
            center,
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    pub fn center(&self) -> &LabeledDiagram {
        &self.center
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// The objects of the left foot, in order.
    pub fn left_objects(&self) -> Vec<Obj> {
        self.left.iter().map(|&v| self.center.vertices()[v].clone()).collect()
    }

    pub fn right_objects(&self) -> Vec<Obj> {
        self.right.iter().map(|&v| self.center.vertices()[v].clone()).collect()
    }

    pub fn left_sizes(&self) -> Vec<usize> {
        self.left.iter().map(|&v| self.center.vertices()[v].size).collect()
    }

    pub fn right_sizes(&self) -> Vec<usize> {
        self.right.iter().map(|&v| self.center.vertices()[v].size).collect()
    }

    pub fn identity(objects: &[Obj]) -> Self {
        DiscreteCospan::identity(objects).to_diagram_cospan()
    }

    /// `{A} -> {A -f-> B} <- {B}`.
    pub fn generator(name: &str, src: &Obj, tgt: &Obj, f: &FinFn) -> Result<Self> {
        let mut center = LabeledDiagram::new();
        let s = center.add_vertex(src.name.clone(), src.size)?;
        let tname = fresh_name(&tgt.name, |c| c == src.name);
        let t = center.add_vertex(tname, tgt.size)?;
        center.add_edge(name, s, t, f.clone())?;
        Ok(DiagramCospan {
            center,
            left: vec![s],
            right: vec![t],
        })
    }

    pub fn reversed(&self) -> Self {
        DiagramCospan {
            center: self.center.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

/// A cospan `I -phi-> J <-psi- K` of discrete diagrams, each given as a list
/// of objects. `phi` and `psi` must send every object to an equal one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiscreteCospan {
    pub left: Vec<Obj>,
    pub center: Vec<Obj>,
    pub right: Vec<Obj>,
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
}

impl DiscreteCospan {
    pub fn new(
        left: Vec<Obj>,
        center: Vec<Obj>,
        right: Vec<Obj>,
        phi: Vec<usize>,
        psi: Vec<usize>,
    ) -> Result<Self> {
        let d = DiscreteCospan {
            left,
            center,
            right,
            phi,
            psi,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        for (foot, map, side) in [(&self.left, &self.phi, "left"), (&self.right, &self.psi, "right")] {
            if foot.len() != map.len() {
                return Err(Error::IllFormed(format!(
                    "discrete cospan: {side} foot has {} objects but its map has {} entries",
                    foot.len(),
                    map.len()
                )));
            }
            for (i, &j) in map.iter().enumerate() {
                let target = self.center.get(j).ok_or(Error::BadIndex {
                    what: "discrete summand",
                    index: j,
                    bound: self.center.len(),
                })?;
                if *target != foot[i] {
                    return Err(Error::boundary(
                        "discrete cospan",
                        format!("{}:{}", foot[i].name, foot[i].size),
                        format!("{}:{}", target.name, target.size),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn identity(objects: &[Obj]) -> Self {
        let id: Vec<usize> = (0..objects.len()).collect();
        DiscreteCospan {
            left: objects.to_vec(),
            center: objects.to_vec(),
            right: objects.to_vec(),
            phi: id.clone(),
            psi: id,
        }
    }

    /// The vertex-level form of a structural constant.
    pub fn constant(c: &Constant<Vec<Obj>>) -> Self {
        let doubled = |l: &Vec<Obj>| -> (Vec<Obj>, Vec<usize>) {
            let n = l.len();
            (l.iter().chain(l).cloned().collect(), (0..n).chain(0..n).collect())
        };
        let id = |n: usize| -> Vec<usize> { (0..n).collect() };
        match c {
            Constant::Id(l) => DiscreteCospan::identity(l),
            Constant::Sym(a, b) => {
                let (na, nb) = (a.len(), b.len());
                let center: Vec<Obj> = a.iter().chain(b).cloned().collect();
                let right: Vec<Obj> = b.iter().chain(a).cloned().collect();
                let psi = (na..na + nb).chain(0..na).collect();
                DiscreteCospan {
                    left: center.clone(),
                    center,
                    right,
                    phi: id(na + nb),
                    psi,
                }
            }
            Constant::Mult(l) => {
                let (left, phi) = doubled(l);
                DiscreteCospan {
                    left,
                    center: l.clone(),
                    right: l.clone(),
                    phi,
                    psi: id(l.len()),
                }
            }
            Constant::Unit(l) => DiscreteCospan {
                left: Vec::new(),
                center: l.clone(),
                right: l.clone(),
                phi: Vec::new(),
                psi: id(l.len()),
            },
            Constant::Eta(l) => {
                let (right, psi) = doubled(l);
                DiscreteCospan {
                    left: Vec::new(),
                    center: l.clone(),
                    right,
                    phi: Vec::new(),
                    psi,
                }
            }
            Constant::Comult(_) | Constant::Counit(_) | Constant::Eps(_) => {
                DiscreteCospan::constant(&c.reversed()).reversed()
            }
        }
    }

    pub fn reversed(&self) -> Self {
        DiscreteCospan {
            left: self.right.clone(),
            center: self.center.clone(),
            right: self.left.clone(),
            phi: self.psi.clone(),
            psi: self.phi.clone(),
        }
    }

    fn sizes(objects: &[Obj]) -> Vec<usize> {
        objects.iter().map(|o| o.size).collect()
    }

    /// The diagram cospan with this discrete center.
    pub fn to_diagram_cospan(&self) -> DiagramCospan {
        let mut center = LabeledDiagram::new();
        for o in &self.center {
            let name = fresh_name(&o.name, |c| center.vertex_index(c).is_some());
            center.add_vertex(name, o.size).expect("fresh names are unique");
        }
        DiagramCospan {
            center,
            left: self.phi.clone(),
            right: self.psi.clone(),
        }
    }

    /// Generic image in either finite-set algebra.
    pub fn evaluate<W: Wscc>(&self) -> Result<W> {
        W::discrete(
            &Self::sizes(&self.left),
            &Self::sizes(&self.center),
            &Self::sizes(&self.right),
            &self.phi,
            &self.psi,
        )
    }
}

/// The colimit image of a discrete cospan: the leg out of the `i`-th summand
/// is the injection of the `phi(i)`-th summand.
pub fn disc_colim(d: &DiscreteCospan) -> Result<Cospan> {
    d.evaluate::<Cospan>()
}

/// The limit image of a discrete cospan: restriction of tuples.
pub fn disc_lim(d: &DiscreteCospan) -> Result<Span> {
    d.evaluate::<Span>()
}

pub fn dconstant(c: &Constant<Vec<Obj>>) -> DiagramCospan {
    DiscreteCospan::constant(c).to_diagram_cospan()
}

/// Glues the right foot of `a` to the left foot of `b`.
pub fn dcompose(a: &DiagramCospan, b: &DiagramCospan) -> Result<DiagramCospan> {
    let (ra, lb) = (a.right_sizes(), b.left_sizes());
    if ra != lb {
        return Err(Error::boundary("dcompose", format!("{ra:?}"), format!("{lb:?}")));
    }
    let union = a.center.disjoint_union(&b.center);
    let na = a.center.vertices().len();
    let mut uf = UnionFind::new(union.vertices().len());
    for (&x, &y) in a.right.iter().zip(&b.left) {
        uf.union(x, na + y);
    }
    let q = uf.quotient();
    let center = union.quotient_vertices(&q)?;
    Ok(DiagramCospan {
        center,
        left: a.left.iter().map(|&v| q.apply(v)).collect(),
        right: b.right.iter().map(|&v| q.apply(na + v)).collect(),
    })
}

/// Disjoint union of centers, feet placed side by side.
pub fn dtensor(a: &DiagramCospan, b: &DiagramCospan) -> DiagramCospan {
    let na = a.center.vertices().len();
    DiagramCospan {
        center: a.center.disjoint_union(&b.center),
        left: a.left.iter().copied().chain(b.left.iter().map(|&v| na + v)).collect(),
        right: a.right.iter().copied().chain(b.right.iter().map(|&v| na + v)).collect(),
    }
}

/// Takes the colimit of the center; each foot maps in through the cocone
/// legs of the vertices it references.
pub fn colim_functor(c: &DiagramCospan) -> Cospan {
    let cocone = colimit_classical(&c.center);
    let foot = |refs: &[usize]| {
        let table = refs.iter().flat_map(|&v| cocone.legs[v].table().iter().copied()).collect();
        FinFn::new(table, cocone.apex).expect("cocone legs land in the apex")
    };
    Cospan::new(foot(&c.left), foot(&c.right))
        .expect("both feet share the apex")
        .canonical()
}

/// Takes the limit of the center; each foot receives the product of the
/// cone legs of the vertices it references.
pub fn lim_functor(c: &DiagramCospan) -> Span {
    let cone = limit_classical(&c.center);
    let foot = |refs: &[usize]| {
        let cod: usize = refs.iter().map(|&v| c.center.vertices()[v].size).product();
        let table = (0..cone.apex)
            .map(|p| {
                refs.iter().fold(0, |acc, &v| {
                    acc * c.center.vertices()[v].size + cone.legs[v].apply(p)
                })
            })
            .collect();
        FinFn::new(table, cod).expect("tuples are encoded in range")
    };
    Span::new(foot(&c.left), foot(&c.right))
        .expect("both feet share the apex")
        .canonical()
}
