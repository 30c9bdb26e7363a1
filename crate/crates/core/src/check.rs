//! Named property suites with seeded, reproducible cases.
//!
//! Cases run in parallel, but results are gathered by case index, so a
//! report depends only on the configuration.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cospan::{Constant, Cospan, Mode, Span, Wscc};
use crate::dcospan::{colim_functor, dcompose, dconstant, dtensor, lim_functor, DiagramCospan};
use crate::diagram::Obj;
use crate::expr::{compile, eval, eval_diagram, expand_discrete, Expr, Generator};
use crate::finset::{coequalizer, FinFn};
use crate::gen::{self, Boundary};
use crate::kleene::{
    automaton_language, compose_graphs, identify_objects, kleene_pipeline, lang_compose, phi1, phi2, phi3,
    regex_bounded_eq, Automaton, Corelation, LangCospan, Regex, RegexOracle,
};
use crate::monoidal::{
    feedback_cospan, mon_colimit, trace_partial_fn, universal_monoidal_cocone_oracle, MonoidalDiagram,
    MonoidalDiagramCospan,
};
use crate::nested::nested_colim_check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Separable,
    Functoriality,
    Compiler,
    Duality,
    Nested,
    Feedback,
    Monoidal,
    Kleene,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Separable,
        Suite::Functoriality,
        Suite::Compiler,
        Suite::Duality,
        Suite::Nested,
        Suite::Feedback,
        Suite::Monoidal,
        Suite::Kleene,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Separable => "separable",
            Suite::Functoriality => "functoriality",
            Suite::Compiler => "compiler",
            Suite::Duality => "duality",
            Suite::Nested => "nested",
            Suite::Feedback => "feedback",
            Suite::Monoidal => "monoidal",
            Suite::Kleene => "kleene",
        }
    }

    /// Whether the suite enumerates its cases rather than sampling them.
    pub fn is_exhaustive(self) -> bool {
        matches!(self, Suite::Separable | Suite::Duality)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|k| k.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckConfig {
    pub seed: u64,
    /// Number of sampled cases; ignored by exhaustive suites.
    pub cases: usize,
    /// Bound on object sizes.
    pub sizes: usize,
    /// Bound on word length for language comparisons.
    pub max_len: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 1, cases: 200, sizes: 4, max_len: 8 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub case: u64,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: CheckConfig,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<Failure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Command line that reruns this suite with the same configuration.
    pub fn reproducer(&self) -> String {
        let c = &self.config;
        format!(
            "cocone check {} --seed {} --cases {} --sizes {} --max-len {}",
            self.suite, c.seed, c.cases, c.sizes, c.max_len
        )
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "seed: {}", self.config.seed)?;
        writeln!(f, "cases: {}", self.cases)?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failed: {}", self.failed)?;
        if let Some(fail) = &self.first_failure {
            writeln!(f, "first counterexample (case {}):", fail.case)?;
            writeln!(f, "{}", serde_json::to_string(&fail.detail).expect("json values serialize"))?;
            writeln!(f, "reproduce: {}", self.reproducer())?;
        }
        Ok(())
    }
}

type Outcome = Result<(), Value>;

fn run(suite: Suite, config: CheckConfig, cases: usize, case: impl Fn(u64) -> Outcome + Sync + Send) -> SuiteReport {
    let outcomes: Vec<Outcome> = (0..cases as u64).into_par_iter().map(case).collect();
    let failed = outcomes.iter().filter(|o| o.is_err()).count();
    let first_failure = outcomes
        .into_iter()
        .enumerate()
        .find_map(|(k, o)| o.err().map(|detail| Failure { case: k as u64, detail }));
    SuiteReport { suite, config, cases, passed: cases - failed, failed, first_failure }
}

pub fn run_suite(suite: Suite, config: CheckConfig) -> SuiteReport {
    match suite {
        Suite::Separable => separable(config),
        Suite::Functoriality => functoriality(config),
        Suite::Compiler => compiler(config),
        Suite::Duality => duality(config),
        Suite::Nested => nested(config),
        Suite::Feedback => feedback(config),
        Suite::Monoidal => monoidal(config),
        Suite::Kleene => kleene(config),
    }
}

/// The defining equations of a commutative separable algebra on an object
/// of size `n`, plus the snake equations and the symmetry involution, each
/// as a pair of sides.
pub fn separable_axioms<W: Wscc>(n: usize) -> Vec<(&'static str, W, W)> {
    let c = |k: Constant<usize>| W::constant(&k);
    let one = W::identity(n);
    let two = W::identity(W::MODE.tensor_size([n, n]));
    let (mult, comult) = (c(Constant::Mult(n)), c(Constant::Comult(n)));
    let (unit, counit) = (c(Constant::Unit(n)), c(Constant::Counit(n)));
    let (eta, eps) = (c(Constant::Eta(n)), c(Constant::Eps(n)));
    let sym = c(Constant::Sym(n, n));
    let seq = |a: &W, b: &W| a.compose(b).expect("axiom sides are well typed");
    let ten = |a: &W, b: &W| a.tensor(b);
    vec![
        ("mult is associative", seq(&ten(&mult, &one), &mult), seq(&ten(&one, &mult), &mult)),
        ("unit is a left unit", seq(&ten(&unit, &one), &mult), one.clone()),
        ("unit is a right unit", seq(&ten(&one, &unit), &mult), one.clone()),
        ("mult is commutative", seq(&sym, &mult), mult.clone()),
        ("comult is coassociative", seq(&comult, &ten(&comult, &one)), seq(&comult, &ten(&one, &comult))),
        ("counit is a left counit", seq(&comult, &ten(&counit, &one)), one.clone()),
        ("counit is a right counit", seq(&comult, &ten(&one, &counit)), one.clone()),
        ("comult is cocommutative", seq(&comult, &sym), comult.clone()),
        ("frobenius, left form", seq(&ten(&comult, &one), &ten(&one, &mult)), seq(&mult, &comult)),
        ("frobenius, right form", seq(&ten(&one, &comult), &ten(&mult, &one)), seq(&mult, &comult)),
        ("separability", seq(&comult, &mult), one.clone()),
        ("eta is unit then comult", seq(&unit, &comult), eta.clone()),
        ("eps is mult then counit", seq(&mult, &counit), eps.clone()),
        ("snake, left", seq(&ten(&one, &eta), &ten(&eps, &one)), one.clone()),
        ("snake, right", seq(&ten(&eta, &one), &ten(&one, &eps)), one.clone()),
        ("symmetry is an involution", seq(&sym, &sym), two),
    ]
}

fn separable(config: CheckConfig) -> SuiteReport {
    let per_size = separable_axioms::<Cospan>(0).len();
    let mut items = Vec::new();
    for mode in [Mode::Cospan, Mode::Span] {
        for n in 0..=config.sizes {
            for k in 0..per_size {
                items.push((mode, n, k));
            }
        }
    }
    fn side_check<W: Wscc>(n: usize, k: usize) -> Outcome {
        let (name, l, r) = separable_axioms::<W>(n).swap_remove(k);
        if l.iso_eq(&r) {
            Ok(())
        } else {
            Err(json!({"axiom": name, "mode": W::MODE.to_string(), "size": n,
                       "left": l.to_string(), "right": r.to_string()}))
        }
    }
    run(Suite::Separable, config, items.len(), |i| {
        let (mode, n, k) = items[i as usize];
        match mode {
            Mode::Cospan => side_check::<Cospan>(n, k),
            Mode::Span => side_check::<Span>(n, k),
        }
    })
}

fn functoriality(config: CheckConfig) -> SuiteReport {
    run(Suite::Functoriality, config, config.cases, |case| {
        let mut rng = gen::case_rng(config.seed, case);
        let (a, b) = gen::random_composable_pair(&mut rng, 4, config.sizes);
        let c = gen::random_constant(&mut rng, config.sizes);
        let fail = |what: &str| {
            Err(json!({"property": what, "a": crate::io::diagram_to_json(&a), "b": crate::io::diagram_to_json(&b),
                       "constant": format!("{}", Expr::Const(c.clone()))}))
        };
        let ab = dcompose(&a, &b).map_err(|e| json!({"error": e.to_string(), "a": crate::io::diagram_to_json(&a)}))?;
        let (ca, cb) = (colim_functor(&a), colim_functor(&b));
        if !colim_functor(&ab).iso_eq(&ca.compose(&cb).expect("feet agree")) {
            return fail("colim preserves composition");
        }
        if !colim_functor(&dtensor(&a, &b)).iso_eq(&ca.tensor(&cb)) {
            return fail("colim preserves tensor");
        }
        let (la, lb) = (lim_functor(&a), lim_functor(&b));
        if !lim_functor(&ab).iso_eq(&la.compose(&lb).expect("feet agree")) {
            return fail("lim preserves composition");
        }
        if !lim_functor(&dtensor(&a, &b)).iso_eq(&la.tensor(&lb)) {
            return fail("lim preserves tensor");
        }
        let d = dconstant(&c);
        let sizes = |m: Mode| c.map(|l| m.tensor_size(l.iter().map(|o| o.size)));
        if !colim_functor(&d).iso_eq(&Cospan::constant(&sizes(Mode::Cospan))) {
            return fail("colim preserves constants");
        }
        if !lim_functor(&d).iso_eq(&Span::constant(&sizes(Mode::Span))) {
            return fail("lim preserves constants");
        }
        Ok(())
    })
}

// Span evaluation of a compiled expression multiplies sizes together; past
// this bound the intermediate apexes get too large to be worth checking.
const SPAN_BUDGET: usize = 4096;

fn span_cost(c: &DiagramCospan) -> usize {
    let d = c.center();
    let objects: usize = d.vertices().iter().map(|v| v.size.max(1)).product();
    let sources: usize = d.edges().iter().map(|e| d.vertices()[e.src].size.max(1)).product();
    objects.saturating_mul(objects).saturating_mul(sources)
}

fn compiler(config: CheckConfig) -> SuiteReport {
    run(Suite::Compiler, config, config.cases, |case| {
        let mut rng = gen::case_rng(config.seed, case);
        let boundary = match case % 4 {
            0 => Boundary::Closed,
            1 => Boundary::Full,
            _ => Boundary::Random,
        };
        let c = gen::random_diagram_cospan(&mut rng, 4, config.sizes, boundary);
        let e = compile(&c);
        let fail = |what: &str, got: String| {
            Err(json!({"property": what, "diagram": crate::io::diagram_to_json(&c), "expression": e.to_string(), "got": got}))
        };
        let want = colim_functor(&c);
        let got: Cospan = match eval(&e) {
            Ok(v) => v,
            Err(err) => return fail("compiled expression is well typed", err.to_string()),
        };
        if !got.iso_eq(&want) {
            return fail("eval(compile(c)) is colim(c)", got.to_string());
        }
        let shuffled = gen::reassociate(&mut rng, &e);
        let got: Cospan = eval(&shuffled).map_err(|err| json!({"error": err.to_string()}))?;
        if !got.iso_eq(&want) {
            return fail("rebracketing does not change the value", shuffled.to_string());
        }
        let back = eval_diagram(&e).map_err(|err| json!({"error": err.to_string()}))?;
        if !colim_functor(&back).iso_eq(&want) {
            return fail("the expression denotes the same diagram", crate::io::diagram_to_json(&back).to_string());
        }
        let expanded: Cospan = eval(&expand_discrete(&e)).map_err(|err| json!({"error": err.to_string()}))?;
        if !expanded.iso_eq(&want) {
            return fail("expanding discrete nodes does not change the value", expanded.to_string());
        }
        if span_cost(&c) <= SPAN_BUDGET {
            let got: Span = eval(&e).map_err(|err| json!({"error": err.to_string()}))?;
            if !got.iso_eq(&lim_functor(&c)) {
                return fail("span evaluation of compile(c) is lim(c)", got.to_string());
            }
        }
        Ok(())
    })
}

/// `comult(A) ; (f * g) ; mult(B)`.
pub fn parallel_pair_expr(f: &FinFn, g: &FinFn) -> Expr {
    let (a, b) = (Obj::new("A", f.dom()), Obj::new("B", f.cod()));
    let gen = |name: &str, h: &FinFn| Expr::Gen(Generator::new(name, a.clone(), b.clone(), h.clone()).expect("fits"));
    Expr::Const(Constant::Comult(vec![a.clone()]))
        .then(gen("f", f).tensor(gen("g", g)))
        .then(Expr::Const(Constant::Mult(vec![b.clone()])))
}

fn duality(config: CheckConfig) -> SuiteReport {
    let mut shapes = Vec::new();
    for a in 0..=config.sizes {
        for b in 0..=config.sizes {
            let count = if a == 0 { 1 } else { b.pow(a as u32) };
            shapes.push((a, b, count * count));
        }
    }
    let total: usize = shapes.iter().map(|s| s.2).sum();
    run(Suite::Duality, config, total, |case| {
        let mut k = case as usize;
        let &(a, b, count) = shapes
            .iter()
            .find(|s| {
                if k < s.2 {
                    true
                } else {
                    k -= s.2;
                    false
                }
            })
            .expect("case in range");
        let per = (count as f64).sqrt().round() as usize;
        let decode = |mut x: usize| {
            let mut t = vec![0; a];
            for slot in t.iter_mut().rev() {
                *slot = x % b.max(1);
                x /= b.max(1);
            }
            FinFn::new(t, b).expect("in range")
        };
        let (f, g) = (decode(k / per), decode(k % per));
        let e = parallel_pair_expr(&f, &g);
        let s: Span = eval(&e).map_err(|err| json!({"error": err.to_string()}))?;
        let fixed: Vec<usize> = (0..a).filter(|&x| f.apply(x) == g.apply(x)).collect();
        let scan_ok = s.apex() == fixed.len()
            && s.leg_l().table() == fixed.as_slice()
            && (0..s.apex()).all(|p| s.leg_r().apply(p) == f.apply(s.leg_l().apply(p)));
        let c: Cospan = eval(&e).map_err(|err| json!({"error": err.to_string()}))?;
        let q = coequalizer(&f, &g).expect("parallel");
        let expected = Cospan::new(f.compose(&q).expect("composable"), q).expect("same apex");
        let coeq_ok = c.iso_eq(&expected);
        if scan_ok && coeq_ok {
            Ok(())
        } else {
            Err(json!({"f": f.table(), "g": g.table(), "span": s.to_string(), "cospan": c.to_string()}))
        }
    })
}

fn nested(config: CheckConfig) -> SuiteReport {
    run(Suite::Nested, config, config.cases, |case| {
        let mut rng = gen::case_rng(config.seed, case);
        let dd = gen::random_diagram_of_diagrams(&mut rng, 8);
        match nested_colim_check(&dd) {
            Ok(r) if r.iso && r.flattened_size == r.nested_size => Ok(()),
            Ok(r) => Err(json!({"report": r, "nodes": dd.nodes.len(), "arrows": dd.arrows.len()})),
            Err(e) => Err(json!({"error": e.to_string()})),
        }
    })
}

/// Connected components of `x -- f(x)` on `A+B+C`, by depth-first search.
fn orbit_count(a: usize, b: usize, c: usize, f: &FinFn) -> usize {
    let n = a + b + c;
    // Elements of A+C and B+C as positions in A+B+C.
    let input = |i: usize| if i < a { i } else { a + b + (i - a) };
    let output = |j: usize| if j < b { a + j } else { a + b + (j - b) };
    let mut adj = vec![Vec::new(); n];
    for i in 0..a + c {
        let (x, y) = (input(i), output(f.apply(i)));
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

fn feedback(config: CheckConfig) -> SuiteReport {
    let mut shapes = Vec::new();
    for a in 0..=config.sizes {
        for b in 0..=config.sizes {
            for c in 0..=config.sizes {
                if a + c == 0 || b + c > 0 {
                    shapes.push((a, b, c));
                }
            }
        }
    }
    run(Suite::Feedback, config, config.cases.max(shapes.len()), |case| {
        let (a, b, c) = shapes[case as usize % shapes.len()];
        let mut rng = gen::case_rng(config.seed, case);
        let f = gen::random_fn(&mut rng, a + c, b + c).expect("shape admits a function");
        let fail = |what: &str| Err(json!({"property": what, "a": a, "b": b, "c": c, "f": f.table()}));
        let cospan = feedback_cospan(a, b, c, &f).map_err(|e| json!({"error": e.to_string()}))?;
        if cospan.apex() != orbit_count(a, b, c, &f) {
            return fail("apex is the number of orbits");
        }
        let trace = trace_partial_fn(a, b, c, &f).map_err(|e| json!({"error": e.to_string()}))?;
        let mut graph: Vec<(usize, usize)> =
            trace.iter().enumerate().filter_map(|(x, y)| y.map(|y| (x, y))).collect();
        graph.sort_unstable();
        let mut related = Vec::new();
        for x in 0..a {
            for y in 0..b {
                if cospan.leg_l().apply(x) == cospan.leg_r().apply(y) {
                    related.push((x, y));
                }
            }
        }
        if related != graph {
            return fail("pullback is the graph of the traced function");
        }
        let d = MonoidalDiagramCospan::feedback(a, b, c, &f).map_err(|e| json!({"error": e.to_string()}))?;
        if !d.colim().iso_eq(&cospan) {
            return fail("composite agrees with the monoidal colimit");
        }
        Ok(())
    })
}

fn random_monoidal(rng: &mut impl Rng, max_total: usize) -> MonoidalDiagram {
    let mut d = MonoidalDiagram::new();
    let mut budget = max_total;
    for i in 0..rng.gen_range(1..=3) {
        let size = rng.gen_range(0..=budget.min(3));
        budget -= size;
        d.add_vertex(format!("v{i}"), size).expect("fresh name");
    }
    let n = d.vertices().len();
    for k in 0..rng.gen_range(0..=3) {
        let word = |rng: &mut dyn rand::RngCore| -> Vec<usize> {
            (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..n)).collect()
        };
        let (src, tgt) = (word(rng), word(rng));
        if let Some(f) = gen::random_fn(rng, d.word_size(&src), d.word_size(&tgt)) {
            d.add_arc(format!("a{k}"), src, tgt, f).expect("fits");
        }
    }
    d
}

fn monoidal(config: CheckConfig) -> SuiteReport {
    run(Suite::Monoidal, config, config.cases, |case| {
        let mut rng = gen::case_rng(config.seed, case);
        let d = random_monoidal(&mut rng, 6);
        let c = mon_colimit(&d);
        if !universal_monoidal_cocone_oracle(&d, &c, 3) {
            return Err(json!({"property": "colimit is universal", "apex": c.apex,
                              "sizes": d.sizes(), "arcs": d.arcs().len()}));
        }
        let plain = gen::random_diagram(&mut rng, 3, config.sizes);
        if mon_colimit(&MonoidalDiagram::from_diagram(&plain)) != crate::diagram::colimit_classical(&plain) {
            return Err(json!({"property": "one-letter words give the ordinary colimit"}));
        }
        Ok(())
    })
}

fn foot_homs(c: &LangCospan) -> Vec<Regex> {
    let Corelation(k) = phi3(c);
    let feet: Vec<usize> = k.left.iter().chain(&k.right).copied().collect();
    feet.iter()
        .flat_map(|&i| feet.iter().map(move |&j| (i, j)))
        .map(|(i, j)| k.center.hom[i][j].clone())
        .collect()
}

fn homs_bounded_eq(x: &[Regex], y: &[Regex], alphabet: &[String], max_len: usize) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(p, q)| regex_bounded_eq(p, q, alphabet, max_len))
}

fn kleene(config: CheckConfig) -> SuiteReport {
    let alphabet: Vec<String> = vec!["a".into(), "b".into()];
    let alphabet = &alphabet;
    run(Suite::Kleene, config, config.cases, |case| {
        let mut rng = gen::case_rng(config.seed, case);
        let g = gen::random_automaton(&mut rng, 5, 8);
        let table = kleene_pipeline(&g).map_err(|e| json!({"error": e.to_string()}))?;
        let mut oracle = RegexOracle::new(&g.alphabet, config.max_len);
        for (i, &init) in g.initial.iter().enumerate() {
            for (j, &fin) in g.final_states.iter().enumerate() {
                let r = &table.entries[i][j];
                let mut letters_ok = true;
                r.for_each_letter(&mut |l| letters_ok &= g.alphabet.iter().any(|a| a == l));
                let lhs = oracle.language(r).to_vec();
                if !letters_ok || lhs != automaton_language(&g, &[init], &[fin], config.max_len) {
                    return Err(json!({"property": "pipeline regex accepts what the automaton accepts",
                                      "automaton": crate::io::automaton_to_json(&g), "initial": g.states[init],
                                      "final": g.states[fin], "regex": r.to_string()}));
                }
            }
        }

        let raw = gen::random_regex(&mut rng, 5);
        if !regex_bounded_eq(&raw, &raw.simplify(), alphabet, config.max_len) {
            return Err(json!({"property": "simplification keeps the language", "regex": raw.to_string()}));
        }

        // Two disjoint identifications, in both orders.
        let cat = gen::random_lang_cat(&mut rng, 4);
        let first = identify_objects(&cat, 0, 1).expect("in range");
        let first = identify_objects(&first.cat, first.remap[2], first.remap[3]).expect("in range");
        let second = identify_objects(&cat, 2, 3).expect("in range");
        let second = identify_objects(&second.cat, second.remap[0], second.remap[1]).expect("in range");
        let flat = |c: &crate::kleene::LangCat| c.hom.iter().flatten().cloned().collect::<Vec<_>>();
        if !homs_bounded_eq(&flat(&first.cat), &flat(&second.cat), alphabet, config.max_len) {
            return Err(json!({"property": "identification order does not matter", "case": case}));
        }

        // Gluing automata and composing their language cospans agree, and
        // composition associates.
        let h = gen::random_automaton(&mut rng, 3, 4);
        let h = h.with_ends(
            (0..g.final_states.len()).map(|_| rng.gen_range(0..h.states.len())).collect(),
            h.final_states.clone(),
        );
        let k = gen::random_automaton(&mut rng, 3, 4);
        let k = k.with_ends(
            (0..h.final_states.len()).map(|_| rng.gen_range(0..k.states.len())).collect(),
            k.final_states.clone(),
        );
        let lang = |x: &Automaton| phi2(&phi1(x).expect("valid"));
        let (lg, lh, lk) = (lang(&g), lang(&h), lang(&k));
        let glued = lang(&compose_graphs(&g, &h).expect("feet agree"));
        let composed = lang_compose(&lg, &lh).expect("feet agree");
        if !homs_bounded_eq(&foot_homs(&glued), &foot_homs(&composed), alphabet, config.max_len) {
            return Err(json!({"property": "gluing then phi2 is phi2 then composing",
                              "g": crate::io::automaton_to_json(&g), "h": crate::io::automaton_to_json(&h)}));
        }
        let left = lang_compose(&composed, &lk).expect("feet agree");
        let right = lang_compose(&lg, &lang_compose(&lh, &lk).expect("feet agree")).expect("feet agree");
        if !homs_bounded_eq(&foot_homs(&left), &foot_homs(&right), alphabet, config.max_len) {
            return Err(json!({"property": "composition associates", "g": crate::io::automaton_to_json(&g),
                              "h": crate::io::automaton_to_json(&h), "k": crate::io::automaton_to_json(&k)}));
        }
        Ok(())
    })
}
