//! Seeded random instances for the check suites and property tests.
//!
//! Every case draws from its own ChaCha stream, selected by the case index,
//! so case `k` of a run is the same whatever else the run contains.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cospan::{Constant, StructuralKind};
use crate::dcospan::DiagramCospan;
use crate::diagram::{LabeledDiagram, Obj};
use crate::expr::Expr;
use crate::finset::FinFn;
use crate::kleene::{Automaton, Label, LangCat, Regex};
use crate::nested::{DiagramMorphism, DiagramOfDiagrams};

/// The generator for case `case` of a run seeded with `seed`.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

pub fn random_fn(rng: &mut impl Rng, dom: usize, cod: usize) -> Option<FinFn> {
    if cod == 0 && dom > 0 {
        return None;
    }
    let table = (0..dom).map(|_| rng.gen_range(0..cod)).collect();
    Some(FinFn::new(table, cod).expect("in range"))
}

/// Up to `max_vertices` vertices `v0, v1, ...` of size at most `max_size`
/// and up to twice as many edges.
pub fn random_diagram(rng: &mut impl Rng, max_vertices: usize, max_size: usize) -> LabeledDiagram {
    let n = rng.gen_range(0..=max_vertices);
    let mut d = LabeledDiagram::new();
    for i in 0..n {
        d.add_vertex(format!("v{i}"), rng.gen_range(0..=max_size)).expect("fresh name");
    }
    add_random_edges(rng, &mut d, 2 * n);
    d
}

fn add_random_edges(rng: &mut impl Rng, d: &mut LabeledDiagram, max_edges: usize) {
    let n = d.vertices().len();
    if n == 0 {
        return;
    }
    for _ in 0..rng.gen_range(0..=max_edges) {
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (a, b) = (d.vertices()[s].size, d.vertices()[t].size);
        if let Some(f) = random_fn(rng, a, b) {
            let name = format!("e{}", d.edges().len());
            d.add_edge(name, s, t, f).expect("fits");
        }
    }
}

fn random_foot(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..n)).collect()
}

/// Shape of the boundary of a random diagram cospan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Random,
    /// Both feet empty.
    Closed,
    /// Every vertex appears in some foot.
    Full,
}

pub fn random_diagram_cospan(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_size: usize,
    boundary: Boundary,
) -> DiagramCospan {
    let center = random_diagram(rng, max_vertices, max_size);
    let n = center.vertices().len();
    let (left, right) = match boundary {
        Boundary::Random => (random_foot(rng, n), random_foot(rng, n)),
        Boundary::Closed => (Vec::new(), Vec::new()),
        Boundary::Full => {
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(rng);
            let cut = rng.gen_range(0..=n);
            let mut left = all[..cut].to_vec();
            let mut right = all[cut..].to_vec();
            left.extend(random_foot(rng, n));
            right.extend(random_foot(rng, n));
            (left, right)
        }
    };
    DiagramCospan::new(center, left, right).expect("valid by construction")
}

/// A diagram cospan whose left foot has the given sizes.
pub fn random_diagram_cospan_from(
    rng: &mut impl Rng,
    foot: &[usize],
    max_vertices: usize,
    max_size: usize,
) -> DiagramCospan {
    let mut d = LabeledDiagram::new();
    let mut left = Vec::with_capacity(foot.len());
    for &size in foot {
        // Reuse an existing vertex of the right size now and then, so feet
        // with repeated entries occur.
        let candidates: Vec<usize> = (0..d.vertices().len()).filter(|&v| d.vertices()[v].size == size).collect();
        let v = match candidates.choose(rng) {
            Some(&v) if rng.gen_bool(0.3) => v,
            _ => d.add_vertex(format!("v{}", d.vertices().len()), size).expect("fresh name"),
        };
        left.push(v);
    }
    let extra = max_vertices.saturating_sub(d.vertices().len());
    for _ in 0..rng.gen_range(0..=extra) {
        let i = d.vertices().len();
        d.add_vertex(format!("v{i}"), rng.gen_range(0..=max_size)).expect("fresh name");
    }
    let n = d.vertices().len();
    add_random_edges(rng, &mut d, 2 * n);
    let right = random_foot(rng, n);
    DiagramCospan::new(d, left, right).expect("valid by construction")
}

/// Two diagram cospans that can be composed.
pub fn random_composable_pair(rng: &mut impl Rng, max_vertices: usize, max_size: usize) -> (DiagramCospan, DiagramCospan) {
    let a = random_diagram_cospan(rng, max_vertices, max_size, Boundary::Random);
    let b = random_diagram_cospan_from(rng, &a.right_sizes(), max_vertices, max_size);
    (a, b)
}

/// Between zero and three objects drawn from a small pool, so that lists
/// share objects.
pub fn random_objects(rng: &mut impl Rng, max_size: usize) -> Vec<Obj> {
    let pool: Vec<Obj> = ["A", "B", "C"]
        .iter()
        .enumerate()
        .map(|(i, n)| Obj::new(*n, (i * 2 + 1).min(max_size)))
        .collect();
    (0..rng.gen_range(0..=3)).map(|_| pool.choose(rng).unwrap().clone()).collect()
}

pub fn random_constant(rng: &mut impl Rng, max_size: usize) -> Constant<Vec<Obj>> {
    let kind = *StructuralKind::ALL.choose(rng).unwrap();
    Constant::of_kind(kind, random_objects(rng, max_size), random_objects(rng, max_size))
}

/// The same expression with every chain of `;` and every chain of `*`
/// rebracketed at random.
pub fn reassociate(rng: &mut impl Rng, e: &Expr) -> Expr {
    fn factors(e: &Expr, seq: bool, out: &mut Vec<Expr>) {
        match e {
            Expr::Seq(a, b) if seq => {
                factors(a, seq, out);
                factors(b, seq, out);
            }
            Expr::Ten(a, b) if !seq => {
                factors(a, seq, out);
                factors(b, seq, out);
            }
            other => out.push(other.clone()),
        }
    }
    fn build(rng: &mut impl Rng, parts: &[Expr], seq: bool) -> Expr {
        if parts.len() == 1 {
            return parts[0].clone();
        }
        let cut = rng.gen_range(1..parts.len());
        let (l, r) = (build(rng, &parts[..cut], seq), build(rng, &parts[cut..], seq));
        if seq {
            l.then(r)
        } else {
            l.tensor(r)
        }
    }
    let seq = match e {
        Expr::Seq(..) => true,
        Expr::Ten(..) => false,
        leaf => return leaf.clone(),
    };
    let mut parts = Vec::new();
    factors(e, seq, &mut parts);
    let parts: Vec<Expr> = parts.iter().map(|p| reassociate(rng, p)).collect();
    build(rng, &parts, seq)
}

/// A diagram of diagrams whose nodes have total size at most `max_total`.
///
/// Some nodes are random; the others are built as copies of parts of an
/// earlier node, which guarantees a morphism into it. A few extra arrows
/// between arbitrary nodes are added when one is found by search.
pub fn random_diagram_of_diagrams(rng: &mut impl Rng, max_total: usize) -> DiagramOfDiagrams {
    let mut dd = DiagramOfDiagrams::default();
    let mut budget = max_total;
    for _ in 0..rng.gen_range(1..=4) {
        if dd.nodes.is_empty() || rng.gen_bool(0.4) {
            let d = random_diagram(rng, 3, 3.min(budget));
            if d.total_size() > budget {
                continue;
            }
            budget -= d.total_size();
            dd.nodes.push(d);
        } else {
            let target = rng.gen_range(0..dd.nodes.len());
            let (d, vertex_map, edge_map) = random_subdiagram(rng, &dd.nodes[target]);
            if d.total_size() > budget {
                continue;
            }
            budget -= d.total_size();
            dd.nodes.push(d);
            dd.arrows.push(DiagramMorphism { src: dd.nodes.len() - 1, tgt: target, vertex_map, edge_map });
        }
    }
    for _ in 0..if dd.nodes.is_empty() { 0 } else { 2 } {
        let (s, t) = (rng.gen_range(0..dd.nodes.len()), rng.gen_range(0..dd.nodes.len()));
        if let Some((vertex_map, edge_map)) = find_morphism(rng, &dd.nodes[s], &dd.nodes[t]) {
            dd.arrows.push(DiagramMorphism { src: s, tgt: t, vertex_map, edge_map });
        }
    }
    dd
}

// Vertices of the copy are picked from `d` with repetition; the copy gets
// an edge for some of the edges of `d` between picked vertices.
fn random_subdiagram(rng: &mut impl Rng, d: &LabeledDiagram) -> (LabeledDiagram, Vec<usize>, Vec<usize>) {
    let mut out = LabeledDiagram::new();
    let mut vertex_map = Vec::new();
    if d.vertices().is_empty() {
        return (out, vertex_map, Vec::new());
    }
    for i in 0..rng.gen_range(0..=3) {
        let v = rng.gen_range(0..d.vertices().len());
        out.add_vertex(format!("u{i}"), d.vertices()[v].size).expect("fresh name");
        vertex_map.push(v);
    }
    let mut edge_map = Vec::new();
    for (k, e) in d.edges().iter().enumerate() {
        let srcs: Vec<usize> = (0..vertex_map.len()).filter(|&i| vertex_map[i] == e.src).collect();
        let tgts: Vec<usize> = (0..vertex_map.len()).filter(|&i| vertex_map[i] == e.tgt).collect();
        if let (Some(&s), Some(&t)) = (srcs.choose(rng), tgts.choose(rng)) {
            if rng.gen_bool(0.7) {
                out.add_edge(format!("c{}", edge_map.len()), s, t, e.map.clone()).expect("fits");
                edge_map.push(k);
            }
        }
    }
    (out, vertex_map, edge_map)
}

// A few random attempts at a vertex assignment that extends to edges.
fn find_morphism(rng: &mut impl Rng, s: &LabeledDiagram, t: &LabeledDiagram) -> Option<(Vec<usize>, Vec<usize>)> {
    'attempt: for _ in 0..8 {
        let mut vertex_map = Vec::new();
        for v in s.vertices() {
            let options: Vec<usize> = (0..t.vertices().len()).filter(|&w| t.vertices()[w].size == v.size).collect();
            vertex_map.push(*options.choose(rng)?);
        }
        let mut edge_map = Vec::new();
        for e in s.edges() {
            let options: Vec<usize> = (0..t.edges().len())
                .filter(|&f| {
                    let g = &t.edges()[f];
                    g.src == vertex_map[e.src] && g.tgt == vertex_map[e.tgt] && g.map == e.map
                })
                .collect();
            match options.choose(rng) {
                Some(&f) => edge_map.push(f),
                None => continue 'attempt,
            }
        }
        return Some((vertex_map, edge_map));
    }
    None
}

/// An automaton with at most `max_states` states over `{a, b}`, at most
/// `max_edges` edges (some of them epsilon moves) and nonempty lists of
/// initial and final states.
pub fn random_automaton(rng: &mut impl Rng, max_states: usize, max_edges: usize) -> Automaton {
    let n = rng.gen_range(1..=max_states);
    let labels = [Label::Letter("a".into()), Label::Letter("b".into()), Label::Eps];
    let edges = (0..rng.gen_range(0..=max_edges))
        .map(|_| (rng.gen_range(0..n), labels.choose(rng).unwrap().clone(), rng.gen_range(0..n)))
        .collect();
    let pick = |rng: &mut dyn rand::RngCore| -> Vec<usize> {
        let mut states: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        if states.is_empty() {
            states.push(rng.gen_range(0..n));
        }
        states
    };
    let initial = pick(rng);
    let final_states = pick(rng);
    Automaton::new(
        vec!["a".into(), "b".into()],
        (0..n).map(|i| format!("q{i}")).collect(),
        edges,
        initial,
        final_states,
    )
    .expect("valid by construction")
}

/// A regex over `{a, b}` of depth at most `depth`, built with the raw
/// (non-simplifying) variants.
pub fn random_regex(rng: &mut impl Rng, depth: usize) -> Regex {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return match rng.gen_range(0..4) {
            0 => Regex::Empty,
            1 => Regex::Epsilon,
            2 => Regex::letter("a"),
            _ => Regex::letter("b"),
        };
    }
    let op = rng.gen_range(0..3);
    let mut sub = || Arc::new(random_regex(rng, depth - 1));
    match op {
        0 => Regex::Union(sub(), sub()),
        1 => Regex::Concat(sub(), sub()),
        _ => Regex::Star(sub()),
    }
}

/// The free language category on a random matrix of single letters and
/// epsilons.
pub fn random_lang_cat(rng: &mut impl Rng, n: usize) -> LangCat {
    let entries = [Regex::Empty, Regex::Empty, Regex::Epsilon, Regex::letter("a"), Regex::letter("b")];
    let edges = (0..n)
        .map(|_| (0..n).map(|_| entries.choose(rng).unwrap().clone()).collect())
        .collect();
    LangCat::free((0..n).map(|i| format!("x{i}")).collect(), edges).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dcospan::dcompose;

    #[test]
    fn streams_are_reproducible() {
        let a = random_diagram(&mut case_rng(7, 3), 4, 4);
        let b = random_diagram(&mut case_rng(7, 3), 4, 4);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_instances_are_valid() {
        for case in 0..200 {
            let mut rng = case_rng(1, case);
            let (a, b) = random_composable_pair(&mut rng, 4, 4);
            dcompose(&a, &b).unwrap();
            random_diagram_of_diagrams(&mut rng, 8).validate().unwrap();
            random_automaton(&mut rng, 5, 8).validate().unwrap();
        }
    }
}
