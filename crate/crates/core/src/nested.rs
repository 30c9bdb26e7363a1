//! Diagrams of diagrams, and the two ways of taking their colimit.
//!
//! Flattening first (the colimit in labelled graphs, then in finite sets)
//! and colimiting each node first (then colimiting the resulting diagram of
//! finite sets) give isomorphic results. [`nested_colim_check`] computes both
//! together with the comparison map between them.

use serde::Serialize;

use crate::diagram::{colimit_classical, Cocone, LabeledDiagram};
use crate::error::{Error, Result};
use crate::finset::FinFn;
use crate::union_find::UnionFind;

/// A morphism of labelled diagrams between two nodes of a
/// [`DiagramOfDiagrams`]. Vertices go to vertices of the same size and edges
/// to edges with the same function between the image vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramMorphism {
    pub src: usize,
    pub tgt: usize,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiagramOfDiagrams {
    pub nodes: Vec<LabeledDiagram>,
    pub arrows: Vec<DiagramMorphism>,
}

impl DiagramOfDiagrams {
    /// Nodes with no arrows between them.
    pub fn discrete(nodes: Vec<LabeledDiagram>) -> Self {
        DiagramOfDiagrams { nodes, arrows: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        for d in &self.nodes {
            d.validate()?;
        }
        for (k, m) in self.arrows.iter().enumerate() {
            let bound = self.nodes.len();
            for n in [m.src, m.tgt] {
                if n >= bound {
                    return Err(Error::BadIndex { what: "node", index: n, bound });
                }
            }
            let (s, t) = (&self.nodes[m.src], &self.nodes[m.tgt]);
            let bad = |why: String| Error::IllFormed(format!("arrow {k}: {why}"));
            if m.vertex_map.len() != s.vertices().len() || m.edge_map.len() != s.edges().len() {
                return Err(bad("maps do not cover the source diagram".into()));
            }
            for (v, &w) in m.vertex_map.iter().enumerate() {
                if w >= t.vertices().len() {
                    return Err(bad(format!("vertex {v} is sent out of range")));
                }
                if s.vertices()[v].size != t.vertices()[w].size {
                    return Err(bad(format!(
                        "vertex `{}` is sent to `{}` of a different size",
                        s.vertices()[v].name,
                        t.vertices()[w].name
                    )));
                }
            }
            for (e, &f) in m.edge_map.iter().enumerate() {
                let Some(img) = t.edges().get(f) else {
                    return Err(bad(format!("edge {e} is sent out of range")));
                };
                let src = &s.edges()[e];
                if img.src != m.vertex_map[src.src] || img.tgt != m.vertex_map[src.tgt] || img.map != src.map {
                    return Err(bad(format!("edge `{}` is not sent to a matching edge", src.name)));
                }
            }
        }
        Ok(())
    }

    fn vertex_offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for d in &self.nodes {
            off.push(off.last().unwrap() + d.vertices().len());
        }
        off
    }

    /// The colimit in labelled graphs: all nodes side by side, with every
    /// vertex and edge identified with its images.
    pub fn flatten(&self) -> Result<LabeledDiagram> {
        self.validate()?;
        let voff = self.vertex_offsets();
        let mut eoff = vec![0];
        for d in &self.nodes {
            eoff.push(eoff.last().unwrap() + d.edges().len());
        }
        let mut vu = UnionFind::new(voff[self.nodes.len()]);
        let mut eu = UnionFind::new(eoff[self.nodes.len()]);
        for m in &self.arrows {
            for (v, &w) in m.vertex_map.iter().enumerate() {
                vu.union(voff[m.src] + v, voff[m.tgt] + w);
            }
            for (e, &f) in m.edge_map.iter().enumerate() {
                eu.union(eoff[m.src] + e, eoff[m.tgt] + f);
            }
        }
        let vq = vu.quotient();
        let eq = eu.quotient();
        let mut out = LabeledDiagram::new();
        let mut seen = vec![false; vq.cod()];
        for (i, d) in self.nodes.iter().enumerate() {
            for (v, vert) in d.vertices().iter().enumerate() {
                let c = vq.apply(voff[i] + v);
                if !seen[c] {
                    seen[c] = true;
                    out.add_vertex(format!("{}.{}", i, vert.name), vert.size)?;
                }
            }
        }
        let mut seen = vec![false; eq.cod()];
        for (i, d) in self.nodes.iter().enumerate() {
            for (e, edge) in d.edges().iter().enumerate() {
                let c = eq.apply(eoff[i] + e);
                if !seen[c] {
                    seen[c] = true;
                    let s = vq.apply(voff[i] + edge.src);
                    let t = vq.apply(voff[i] + edge.tgt);
                    out.add_edge(format!("{}.{}", i, edge.name), s, t, edge.map.clone())?;
                }
            }
        }
        Ok(out)
    }

    /// The diagram of finite sets obtained by colimiting every node, with
    /// the induced maps along the arrows; also returns the node cocones.
    pub fn colimit_each(&self) -> Result<(LabeledDiagram, Vec<Cocone>)> {
        self.validate()?;
        let cocones: Vec<Cocone> = self.nodes.iter().map(colimit_classical).collect();
        let mut out = LabeledDiagram::new();
        for (i, c) in cocones.iter().enumerate() {
            out.add_vertex(format!("colim{i}"), c.apex)?;
        }
        for (k, m) in self.arrows.iter().enumerate() {
            let (cs, ct) = (&cocones[m.src], &cocones[m.tgt]);
            let mut table = vec![None; cs.apex];
            for (v, leg) in cs.legs.iter().enumerate() {
                for x in 0..leg.dom() {
                    let image = ct.legs[m.vertex_map[v]].apply(x);
                    let slot = &mut table[leg.apply(x)];
                    debug_assert!(slot.is_none_or(|y| y == image), "induced map is well defined");
                    *slot = Some(image);
                }
            }
            // Every element of a colimit is hit by some leg.
            let table = table.into_iter().map(|y| y.expect("legs are jointly surjective")).collect();
            out.add_edge(format!("m{k}"), m.src, m.tgt, FinFn::new(table, ct.apex)?)?;
        }
        Ok((out, cocones))
    }
}

/// Both sides of the nested colimit comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedReport {
    pub flattened_size: usize,
    pub nested_size: usize,
    /// The comparison map from the flattened colimit to the nested one.
    pub witness: Vec<usize>,
    pub iso: bool,
}

/// Computes the colimit of the flattened diagram and the colimit of the
/// node-wise colimits, and the canonical map between them. `iso` holds iff
/// that map is well defined and bijective.
pub fn nested_colim_check(dd: &DiagramOfDiagrams) -> Result<NestedReport> {
    let flat = dd.flatten()?;
    let lhs = colimit_classical(&flat);
    let (nested, cocones) = dd.colimit_each()?;
    let rhs = colimit_classical(&nested);

    // An element x of vertex v of node i is sent to rhs_i(colim_i,v(x)) on
    // the right and to lhs_[v](x) on the left.
    let voff = dd.vertex_offsets();
    let mut vu = UnionFind::new(voff[dd.nodes.len()]);
    for m in &dd.arrows {
        for (v, &w) in m.vertex_map.iter().enumerate() {
            vu.union(voff[m.src] + v, voff[m.tgt] + w);
        }
    }
    let vq = vu.quotient();
    let mut witness = vec![None; lhs.apex];
    let mut well_defined = true;
    for (i, d) in dd.nodes.iter().enumerate() {
        for v in 0..d.vertices().len() {
            let class = vq.apply(voff[i] + v);
            for x in 0..d.vertices()[v].size {
                let right = rhs.legs[i].apply(cocones[i].legs[v].apply(x));
                let slot = &mut witness[lhs.legs[class].apply(x)];
                if slot.is_some_and(|y| y != right) {
                    well_defined = false;
                }
                *slot = Some(right);
            }
        }
    }
    let witness: Vec<usize> = witness.into_iter().map(|y| y.unwrap_or(usize::MAX)).collect();
    let iso = well_defined
        && lhs.apex == rhs.apex
        && FinFn::new(witness.clone(), rhs.apex).is_ok_and(|w| w.is_injective() && w.is_surjective());
    Ok(NestedReport {
        flattened_size: lhs.apex,
        nested_size: rhs.apex,
        witness,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_nodes_give_the_triple_sum() {
        let dd = DiagramOfDiagrams::discrete(vec![
            LabeledDiagram::discrete([("A", 2)]).unwrap(),
            LabeledDiagram::discrete([("B", 1), ("C", 3)]).unwrap(),
        ]);
        let r = nested_colim_check(&dd).unwrap();
        assert_eq!((r.flattened_size, r.nested_size), (6, 6));
        assert!(r.iso);
        assert_eq!(r.witness, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn single_node() {
        let mut d = LabeledDiagram::discrete([("A", 2), ("B", 3)]).unwrap();
        d.connect("f", "A", "B", vec![0, 1]).unwrap();
        d.connect("g", "A", "B", vec![1, 2]).unwrap();
        let r = nested_colim_check(&DiagramOfDiagrams::discrete(vec![d])).unwrap();
        assert_eq!((r.flattened_size, r.nested_size, r.iso), (1, 1, true));
    }

    #[test]
    fn gluing_along_a_shared_edge() {
        // {A -f-> B} included into both {A -f-> B, B -g-> C} and
        // {A -f-> B, A -h-> D}; the pushout glues the two along f.
        let mut base = LabeledDiagram::discrete([("A", 2), ("B", 2)]).unwrap();
        base.connect("f", "A", "B", vec![0, 0]).unwrap();
        let mut left = base.clone();
        left.add_vertex("C", 1).unwrap();
        left.connect("g", "B", "C", vec![0, 0]).unwrap();
        let mut right = base.clone();
        right.add_vertex("D", 3).unwrap();
        right.connect("h", "A", "D", vec![0, 2]).unwrap();
        let dd = DiagramOfDiagrams {
            nodes: vec![base, left, right],
            arrows: vec![
                DiagramMorphism { src: 0, tgt: 1, vertex_map: vec![0, 1], edge_map: vec![0] },
                DiagramMorphism { src: 0, tgt: 2, vertex_map: vec![0, 1], edge_map: vec![0] },
            ],
        };
        let flat = dd.flatten().unwrap();
        assert_eq!((flat.vertices().len(), flat.edges().len()), (4, 3));
        let r = nested_colim_check(&dd).unwrap();
        // Only the middle point of D escapes the class of C.
        assert_eq!(r.flattened_size, 2);
        assert!(r.iso);
    }

    #[test]
    fn rejects_label_changing_morphisms() {
        let dd = DiagramOfDiagrams {
            nodes: vec![
                LabeledDiagram::discrete([("A", 2)]).unwrap(),
                LabeledDiagram::discrete([("B", 3)]).unwrap(),
            ],
            arrows: vec![DiagramMorphism { src: 0, tgt: 1, vertex_map: vec![0], edge_map: vec![] }],
        };
        assert!(nested_colim_check(&dd).is_err());
    }
}
