//! File formats: diagram and automaton JSON, DOT rendering.
//!
//! Diagram JSON:
//!
//! ```text
//! {"vertices":[{"name":"A","size":2},{"name":"B","size":3}],
//!  "edges":[{"name":"f","src":"A","tgt":"B","map":[0,2]}],
//!  "left":["A"],"right":["B"]}
//! ```
//!
//! An edge whose `src` or `tgt` is a list of names makes the whole file a
//! monoidal diagram. Automaton JSON lists `alphabet`, `states`, `edges` with
//! `src`, `label`, `tgt` (label `"eps"` for the empty word), `initial` and
//! `final`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::cospan::{Arrow, Wscc};
use crate::dcospan::DiagramCospan;
use crate::diagram::{fresh_name, LabeledDiagram};
use crate::error::{Error, Result};
use crate::expr::is_valid_name;
use crate::finset::FinFn;
use crate::kleene::{Automaton, KleeneTable, Label};
use crate::monoidal::{MonoidalDiagram, MonoidalDiagramCospan};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    name: String,
    size: usize,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawWord {
    One(String),
    Many(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    name: String,
    src: RawWord,
    tgt: RawWord,
    map: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    vertices: Vec<RawVertex>,
    #[serde(default)]
    edges: Vec<RawEdge>,
    #[serde(default)]
    left: Vec<String>,
    #[serde(default)]
    right: Vec<String>,
}

/// A parsed diagram file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramInput {
    Plain(DiagramCospan),
    Monoidal(MonoidalDiagramCospan),
}

fn feet(names: &[String], find: impl Fn(&str) -> Option<usize>) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|n| find(n).ok_or_else(|| Error::UnknownName { what: "foot vertex", name: n.clone() }))
        .collect()
}

pub fn parse_diagram(src: &str) -> Result<DiagramInput> {
    let raw: RawDiagram = serde_json::from_str(src)?;
    let monoidal = raw
        .edges
        .iter()
        .any(|e| matches!(e.src, RawWord::Many(_)) || matches!(e.tgt, RawWord::Many(_)));
    if monoidal {
        let mut d = MonoidalDiagram::new();
        for v in &raw.vertices {
            d.add_vertex(v.name.clone(), v.size)?;
        }
        fn word(w: &RawWord) -> Vec<&str> {
            match w {
                RawWord::One(s) => vec![s.as_str()],
                RawWord::Many(v) => v.iter().map(String::as_str).collect(),
            }
        }
        for e in &raw.edges {
            d.connect(e.name.clone(), &word(&e.src), &word(&e.tgt), e.map.clone())?;
        }
        let left = feet(&raw.left, |n| d.vertex_index(n))?;
        let right = feet(&raw.right, |n| d.vertex_index(n))?;
        return Ok(DiagramInput::Monoidal(MonoidalDiagramCospan::new(d, left, right)?));
    }
    let mut d = LabeledDiagram::new();
    for v in &raw.vertices {
        d.add_vertex(v.name.clone(), v.size)?;
    }
    for e in &raw.edges {
        let (RawWord::One(s), RawWord::One(t)) = (&e.src, &e.tgt) else {
            unreachable!("word lists were routed to the monoidal reader")
        };
        d.connect(e.name.clone(), s, t, e.map.clone())?;
    }
    let left = feet(&raw.left, |n| d.vertex_index(n))?;
    let right = feet(&raw.right, |n| d.vertex_index(n))?;
    Ok(DiagramInput::Plain(DiagramCospan::new(d, left, right)?))
}

pub fn diagram_to_json(c: &DiagramCospan) -> Value {
    let d = c.center();
    let name = |v: usize| d.vertices()[v].name.clone();
    json!({
        "vertices": d.vertices().iter().map(|v| json!({"name": v.name, "size": v.size})).collect::<Vec<_>>(),
        "edges": d.edges().iter().map(|e| json!({
            "name": e.name, "src": name(e.src), "tgt": name(e.tgt), "map": e.map.table()
        })).collect::<Vec<_>>(),
        "left": c.left().iter().map(|&v| name(v)).collect::<Vec<_>>(),
        "right": c.right().iter().map(|&v| name(v)).collect::<Vec<_>>(),
    })
}

pub fn monoidal_to_json(c: &MonoidalDiagramCospan) -> Value {
    let d = &c.center;
    let name = |v: usize| d.vertices()[v].name.clone();
    let word = |w: &[usize]| w.iter().map(|&v| name(v)).collect::<Vec<_>>();
    json!({
        "vertices": d.vertices().iter().map(|v| json!({"name": v.name, "size": v.size})).collect::<Vec<_>>(),
        "edges": d.arcs().iter().map(|a| json!({
            "name": a.name, "src": word(&a.src), "tgt": word(&a.tgt), "map": a.map.table()
        })).collect::<Vec<_>>(),
        "left": word(&c.left),
        "right": word(&c.right),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTransition {
    src: String,
    label: String,
    tgt: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAutomaton {
    alphabet: Vec<String>,
    states: Vec<String>,
    #[serde(default)]
    edges: Vec<RawTransition>,
    #[serde(default)]
    initial: Vec<String>,
    #[serde(default, rename = "final")]
    final_states: Vec<String>,
}

pub fn parse_automaton(src: &str) -> Result<Automaton> {
    let raw: RawAutomaton = serde_json::from_str(src)?;
    let mut seen = HashSet::new();
    if let Some(dup) = raw.states.iter().find(|s| !seen.insert(s.as_str())) {
        return Err(Error::DuplicateName { what: "state", name: dup.clone() });
    }
    let state = |n: &str| {
        raw.states.iter().position(|s| s == n).ok_or_else(|| Error::UnknownName {
            what: "state",
            name: n.to_string(),
        })
    };
    let edges = raw
        .edges
        .iter()
        .map(|e| {
            let label = if e.label == "eps" { Label::Eps } else { Label::Letter(e.label.clone()) };
            Ok((state(&e.src)?, label, state(&e.tgt)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let initial = raw.initial.iter().map(|n| state(n)).collect::<Result<Vec<_>>>()?;
    let fin = raw.final_states.iter().map(|n| state(n)).collect::<Result<Vec<_>>>()?;
    Automaton::new(raw.alphabet.clone(), raw.states.clone(), edges, initial, fin)
}

pub fn automaton_to_json(g: &Automaton) -> Value {
    json!({
        "alphabet": g.alphabet,
        "states": g.states,
        "edges": g.edges.iter().map(|(s, l, t)| json!({
            "src": g.states[*s], "label": l.to_string(), "tgt": g.states[*t]
        })).collect::<Vec<_>>(),
        "initial": g.initial.iter().map(|&s| g.states[s].clone()).collect::<Vec<_>>(),
        "final": g.final_states.iter().map(|&s| g.states[s].clone()).collect::<Vec<_>>(),
    })
}

pub fn kleene_to_json(t: &KleeneTable) -> Value {
    let mut rows = Vec::new();
    for (i, from) in t.initial.iter().enumerate() {
        for (f, to) in t.final_states.iter().enumerate() {
            rows.push(json!({"initial": from, "final": to, "regex": t.entries[i][f].to_string()}));
        }
    }
    json!({ "entries": rows })
}

/// `q0 -> q1 : regex`, one line per pair.
pub fn kleene_text(t: &KleeneTable) -> String {
    let mut out = String::new();
    for (i, from) in t.initial.iter().enumerate() {
        for (f, to) in t.final_states.iter().enumerate() {
            writeln!(out, "{from} -> {to} : {}", t.entries[i][f]).unwrap();
        }
    }
    out
}

fn sanitize(name: &str) -> String {
    let mut s: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
        .collect();
    if !s.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
        s.insert(0, '_');
    }
    if !is_valid_name(&s) {
        s.push('_');
    }
    s
}

/// The same diagram cospan with vertex and edge names rewritten, where
/// needed, so that they can appear in expression text. Names that are
/// already valid are kept.
pub fn printable(c: &DiagramCospan) -> DiagramCospan {
    let d = c.center();
    let mut out = LabeledDiagram::new();
    let mut taken: HashSet<String> = HashSet::new();
    let rename = |name: &str, taken: &mut HashSet<String>| {
        let base = if is_valid_name(name) { name.to_string() } else { sanitize(name) };
        let fresh = fresh_name(&base, |n| taken.contains(n));
        taken.insert(fresh.clone());
        fresh
    };
    for v in d.vertices() {
        let name = rename(&v.name, &mut taken);
        out.add_vertex(name, v.size).expect("fresh names");
    }
    let mut taken_edges = HashSet::new();
    for e in d.edges() {
        let name = rename(&e.name, &mut taken_edges);
        out.add_edge(name, e.src, e.tgt, e.map.clone()).expect("same shape");
    }
    DiagramCospan::new(out, c.left().to_vec(), c.right().to_vec()).expect("same feet")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn feet_dot(out: &mut String, side: &str, names: &[String]) {
    for (k, n) in names.iter().enumerate() {
        writeln!(out, "  {side}{k} [shape=point];").unwrap();
        writeln!(out, "  {side}{k} -> {} [style=dashed, arrowhead=none];", quote(n)).unwrap();
    }
}

pub fn diagram_dot(c: &DiagramCospan) -> String {
    let d = c.center();
    let mut out = String::from("digraph diagram {\n");
    for v in d.vertices() {
        writeln!(out, "  {} [label={}];", quote(&v.name), quote(&format!("{} ({})", v.name, v.size))).unwrap();
    }
    for e in d.edges() {
        let (s, t) = (&d.vertices()[e.src].name, &d.vertices()[e.tgt].name);
        writeln!(out, "  {} -> {} [label={}];", quote(s), quote(t), quote(&e.name)).unwrap();
    }
    let name = |v: &usize| d.vertices()[*v].name.clone();
    feet_dot(&mut out, "left", &c.left().iter().map(name).collect::<Vec<_>>());
    feet_dot(&mut out, "right", &c.right().iter().map(name).collect::<Vec<_>>());
    out.push_str("}\n");
    out
}

pub fn monoidal_dot(c: &MonoidalDiagramCospan) -> String {
    let d = &c.center;
    let mut out = String::from("digraph diagram {\n");
    for v in d.vertices() {
        writeln!(out, "  {} [label={}];", quote(&v.name), quote(&format!("{} ({})", v.name, v.size))).unwrap();
    }
    for (k, a) in d.arcs().iter().enumerate() {
        writeln!(out, "  arc{k} [shape=box, label={}];", quote(&a.name)).unwrap();
        for (i, &s) in a.src.iter().enumerate() {
            writeln!(out, "  {} -> arc{k} [taillabel=\"{i}\"];", quote(&d.vertices()[s].name)).unwrap();
        }
        for (i, &t) in a.tgt.iter().enumerate() {
            writeln!(out, "  arc{k} -> {} [headlabel=\"{i}\"];", quote(&d.vertices()[t].name)).unwrap();
        }
    }
    let name = |v: &usize| d.vertices()[*v].name.clone();
    feet_dot(&mut out, "left", &c.left.iter().map(name).collect::<Vec<_>>());
    feet_dot(&mut out, "right", &c.right.iter().map(name).collect::<Vec<_>>());
    out.push_str("}\n");
    out
}

/// Left feet, apex and right feet as three ranks of points, legs as edges.
pub fn arrow_dot(a: &Arrow) -> String {
    let (l, r, apex, legs): (usize, usize, usize, [(&FinFn, &str); 2]) = match a {
        Arrow::Cospan(c) => (c.left(), c.right(), c.apex(), [(c.leg_l(), "l"), (c.leg_r(), "r")]),
        Arrow::Span(s) => (s.left(), s.right(), s.apex(), [(s.leg_l(), "l"), (s.leg_r(), "r")]),
    };
    let mut out = format!("digraph {} {{\n  rankdir=LR;\n", a.mode());
    for (side, n) in [("l", l), ("m", apex), ("r", r)] {
        let nodes: Vec<String> = (0..n).map(|i| format!("{side}{i}")).collect();
        writeln!(out, "  {{ rank=same; {} }}", nodes.join("; ")).unwrap();
    }
    for (leg, side) in legs {
        for (x, &y) in leg.table().iter().enumerate() {
            let line = match (a, side) {
                (Arrow::Cospan(_), "l") => format!("  l{x} -> m{y};"),
                (Arrow::Cospan(_), _) => format!("  r{x} -> m{y};"),
                (Arrow::Span(_), "l") => format!("  m{x} -> l{y};"),
                (Arrow::Span(_), _) => format!("  m{x} -> r{y};"),
            };
            out.push_str(&line);
            out.push('\n');
        }
    }
    out.push_str("}\n");
    out
}

pub fn automaton_dot(g: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for (i, s) in g.states.iter().enumerate() {
        let shape = if g.final_states.contains(&i) { "doublecircle" } else { "circle" };
        writeln!(out, "  {} [shape={shape}];", quote(s)).unwrap();
        if g.initial.contains(&i) {
            writeln!(out, "  start{i} [shape=point];\n  start{i} -> {};", quote(s)).unwrap();
        }
    }
    for (s, l, t) in &g.edges {
        writeln!(out, "  {} -> {} [label={}];", quote(&g.states[*s]), quote(&g.states[*t]), quote(&l.to_string()))
            .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dcospan::colim_functor;
    use crate::expr::{compile, eval, parse_program, Program};
    use crate::Cospan;

    const PAIR: &str = r#"{"vertices":[{"name":"A","size":2},{"name":"B","size":3}],
        "edges":[{"name":"f","src":"A","tgt":"B","map":[0,2]},{"name":"g","src":"A","tgt":"B","map":[1,2]}]}"#;

    #[test]
    fn plain_round_trip() {
        let DiagramInput::Plain(c) = parse_diagram(PAIR).unwrap() else { panic!() };
        assert_eq!(colim_functor(&c).apex(), 2);
        let again = parse_diagram(&diagram_to_json(&c).to_string()).unwrap();
        assert_eq!(again, DiagramInput::Plain(c));
    }

    #[test]
    fn word_lists_make_a_monoidal_diagram() {
        let src = r#"{"vertices":[{"name":"A","size":1},{"name":"B","size":1},{"name":"C","size":1}],
            "edges":[{"name":"f","src":["A","C"],"tgt":["B","C"],"map":[1,0]}],
            "left":["A"],"right":["B"]}"#;
        let DiagramInput::Monoidal(m) = parse_diagram(src).unwrap() else { panic!() };
        assert_eq!(m.colim().apex(), 1);
        let again = parse_diagram(&monoidal_to_json(&m).to_string()).unwrap();
        assert_eq!(again, DiagramInput::Monoidal(m));
    }

    #[test]
    fn bad_files() {
        let e = parse_diagram("{\"vertices\": [").unwrap_err();
        assert!(e.is_parse());
        let e = parse_diagram(r#"{"vertices":[{"name":"A","size":1}],"left":["Q"]}"#).unwrap_err();
        assert!(matches!(e, Error::UnknownName { .. }));
        let e = parse_diagram(r#"{"vertices":[{"name":"A","size":1}],
            "edges":[{"name":"f","src":"A","tgt":"A","map":[3]}]}"#)
        .unwrap_err();
        assert!(!e.is_parse());
    }

    #[test]
    fn awkward_names_still_compile_to_parsable_text() {
        let src = r#"{"vertices":[{"name":"eta","size":2},{"name":"1 x","size":1},{"name":"_1_x","size":1}],
            "edges":[{"name":"f-g","src":"eta","tgt":"1 x","map":[0,0]}],
            "left":["eta"],"right":["_1_x"]}"#;
        let DiagramInput::Plain(c) = parse_diagram(src).unwrap() else { panic!() };
        let p = printable(&c);
        let names: Vec<&str> = p.center().vertices().iter().map(|v| v.name.as_str()).collect();
        assert_eq!(names, ["eta_", "_1_x", "_1_x_1"]);
        let text = Program::from_expr(compile(&p)).to_string();
        let back = parse_program(&text).unwrap();
        let x: Cospan = eval(&back.expr).unwrap();
        assert!(x.iso_eq(&colim_functor(&c)));
    }

    #[test]
    fn automaton_round_trip() {
        let src = r#"{"alphabet":["a","b"],"states":["q0","q1"],
            "edges":[{"src":"q0","label":"a","tgt":"q0"},{"src":"q0","label":"b","tgt":"q1"},
                     {"src":"q1","label":"eps","tgt":"q0"}],
            "initial":["q0"],"final":["q1"]}"#;
        let g = parse_automaton(src).unwrap();
        assert_eq!(g.edges[2].1, Label::Eps);
        assert_eq!(parse_automaton(&automaton_to_json(&g).to_string()).unwrap(), g);
        assert!(parse_automaton(r#"{"alphabet":["a"],"states":["q","q"]}"#).is_err());
        assert!(parse_automaton(r#"{"alphabet":["a"],"states":["q"],"initial":["p"]}"#).is_err());
    }

    #[test]
    fn dot_mentions_every_edge() {
        let DiagramInput::Plain(c) = parse_diagram(PAIR).unwrap() else { panic!() };
        let dot = diagram_dot(&c);
        assert!(dot.contains("\"A\" -> \"B\" [label=\"f\"]"));
        let f = FinFn::new(vec![0, 0], 1).unwrap();
        let a = Arrow::Cospan(Cospan::lift(&f, crate::Direction::Forward));
        assert_eq!(arrow_dot(&a).matches("->").count(), 3);
    }
}
