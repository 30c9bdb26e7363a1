use proptest::collection::vec;
use proptest::prelude::*;

use cocone::check::separable_axioms;
use cocone::dcospan::{colim_functor, lim_functor, DiagramCospan};
use cocone::diagram::{colimit_classical, limit_classical};
use cocone::expr::{compile, eval, parse_program, reverse, Program};
use cocone::gen::{self, case_rng, Boundary};
use cocone::io::{diagram_to_json, parse_diagram, printable, DiagramInput};
use cocone::kleene::{identify_objects, parse_regex, regex_bounded_eq, Regex};
use cocone::monoidal::{mon_colimit, MonoidalDiagram};
use cocone::oracle::{universal_cocone_oracle, universal_cone_oracle};
use cocone::{Arrow, Constant, Cospan, FinFn, LabeledDiagram, Span, Wscc};

fn table(len: usize, cod: usize) -> BoxedStrategy<FinFn> {
    if cod == 0 {
        assert_eq!(len, 0);
        return Just(FinFn::new(vec![], 0).unwrap()).boxed();
    }
    vec(0..cod, len).prop_map(move |t| FinFn::new(t, cod).unwrap()).boxed()
}

fn cospan(l: usize, r: usize) -> BoxedStrategy<Cospan> {
    let least = usize::from(l + r > 0);
    (least..=5)
        .prop_flat_map(move |apex| (table(l, apex), table(r, apex)))
        .prop_map(|(a, b)| Cospan::new(a, b).unwrap())
        .boxed()
}

fn span(l: usize, r: usize) -> BoxedStrategy<Span> {
    let most: usize = if l == 0 || r == 0 { 0 } else { 5 };
    (0..=most)
        .prop_flat_map(move |apex| (table(apex, l), table(apex, r)))
        .prop_map(|(a, b)| Span::new(a, b).unwrap())
        .boxed()
}

fn sizes(n: usize) -> impl Strategy<Value = Vec<usize>> {
    vec(0..=5usize, n)
}

fn chain<W: Wscc + 'static>(arrow: fn(usize, usize) -> BoxedStrategy<W>) -> impl Strategy<Value = (W, W, W)> {
    sizes(4).prop_flat_map(move |s| (arrow(s[0], s[1]), arrow(s[1], s[2]), arrow(s[2], s[3])))
}

fn category_laws<W: Wscc>(x: &W, y: &W, z: &W) -> Result<(), TestCaseError> {
    let xy_z = x.compose(y).unwrap().compose(z).unwrap();
    let x_yz = x.compose(&y.compose(z).unwrap()).unwrap();
    prop_assert!(xy_z.iso_eq(&x_yz));
    prop_assert!(W::identity(x.source()).compose(x).unwrap().iso_eq(x));
    prop_assert!(x.compose(&W::identity(x.target())).unwrap().iso_eq(x));
    prop_assert_eq!(x.canonical(), x.canonical().canonical());
    // interchange
    let lhs = x.tensor(z).compose(&y.tensor(&W::identity(z.target()))).unwrap();
    let rhs = x.compose(y).unwrap().tensor(z);
    prop_assert!(lhs.iso_eq(&rhs));
    Ok(())
}

/// `x ; y` rewritten as `(1 * eta) ; (x * 1 * y) ; (eps * 1)`.
fn composite_by_trace<W: Wscc>(x: &W, y: &W) -> Result<(), TestCaseError> {
    let (a, b, c) = (x.source(), x.target(), y.target());
    let eta = W::constant(&Constant::Eta(b));
    let eps = W::constant(&Constant::Eps(b));
    let open = W::identity(a).tensor(&eta);
    let middle = x.tensor(&W::identity(b)).tensor(y);
    let close = eps.tensor(&W::identity(c));
    let traced = open.compose(&middle).unwrap().compose(&close).unwrap();
    prop_assert!(traced.iso_eq(&x.compose(y).unwrap()));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cospans_form_a_monoidal_category((x, y, z) in chain(cospan)) {
        category_laws(&x, &y, &z)?;
        composite_by_trace(&x, &y)?;
    }

    #[test]
    fn spans_form_a_monoidal_category((x, y, z) in chain(span)) {
        category_laws(&x, &y, &z)?;
        composite_by_trace(&x, &y)?;
    }

    #[test]
    fn relabelling_the_apex_is_invisible(
        (c, perm) in (0..=3usize, 0..=3usize)
            .prop_flat_map(|(l, r)| cospan(l, r))
            .prop_flat_map(|c| {
                let n = c.apex();
                (Just(c), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            })
    ) {
        let p = FinFn::new(perm, c.apex()).unwrap();
        let moved = Cospan::new(c.leg_l().compose(&p).unwrap(), c.leg_r().compose(&p).unwrap()).unwrap();
        prop_assert!(moved.iso_eq(&c));
        prop_assert_eq!(moved.canonical(), c.canonical());
    }

    #[test]
    fn reversal_is_the_dagger((x, y, _) in chain(cospan)) {
        let r = x.compose(&y).unwrap().reversed();
        prop_assert!(r.iso_eq(&y.reversed().compose(&x.reversed()).unwrap()));
    }

    #[test]
    fn classical_colimits_and_limits_are_universal(seed in any::<u64>()) {
        let d = gen::random_diagram(&mut case_rng(seed, 0), 3, 3);
        prop_assert!(universal_cocone_oracle(&d, &colimit_classical(&d), 3));
        prop_assert!(universal_cone_oracle(&d, &limit_classical(&d), 3));
    }

    #[test]
    fn plain_diagrams_are_monoidal_diagrams(seed in any::<u64>()) {
        let d = gen::random_diagram(&mut case_rng(seed, 0), 4, 4);
        let m = mon_colimit(&MonoidalDiagram::from_diagram(&d));
        prop_assert_eq!(m.apex, colimit_classical(&d).apex);
    }

    #[test]
    fn compiled_programs_print_and_reparse(seed in any::<u64>(), closed in any::<bool>()) {
        let boundary = if closed { Boundary::Closed } else { Boundary::Random };
        let c = gen::random_diagram_cospan(&mut case_rng(seed, 0), 4, 3, boundary);
        let text = Program::from_expr(compile(&printable(&c))).to_string();
        let p = parse_program(&text).unwrap();
        prop_assert_eq!(p.to_string(), text);
        let x: Cospan = eval(&p.expr).unwrap();
        prop_assert!(x.iso_eq(&colim_functor(&c)));
    }

    #[test]
    fn reversed_expressions_evaluate_to_reversed_arrows(seed in any::<u64>()) {
        // Edge-free, since generators have no mirror image.
        let c = gen::random_diagram_cospan(&mut case_rng(seed, 0), 4, 3, Boundary::Random);
        let bare = LabeledDiagram::discrete(c.center().vertices().iter().map(|v| (v.name.clone(), v.size))).unwrap();
        let c = DiagramCospan::new(bare, c.left().to_vec(), c.right().to_vec()).unwrap();
        let e = compile(&c);
        let x: Cospan = eval(&reverse(&e).unwrap()).unwrap();
        prop_assert!(x.iso_eq(&colim_functor(&c).reversed()));
    }

    #[test]
    fn limits_and_colimits_of_diagram_cospans_agree_with_the_classical_ones(seed in any::<u64>()) {
        let c = gen::random_diagram_cospan(&mut case_rng(seed, 0), 4, 3, Boundary::Closed);
        prop_assert_eq!(colim_functor(&c).apex(), colimit_classical(c.center()).apex);
        prop_assert_eq!(lim_functor(&c).apex(), limit_classical(c.center()).apex);
    }

    #[test]
    fn diagram_json_round_trips(seed in any::<u64>()) {
        let c = gen::random_diagram_cospan(&mut case_rng(seed, 0), 4, 4, Boundary::Random);
        let back = parse_diagram(&diagram_to_json(&c).to_string()).unwrap();
        prop_assert_eq!(back, DiagramInput::Plain(c));
    }

    #[test]
    fn arrow_json_round_trips((x, _, _) in chain(cospan), (s, _, _) in chain(span)) {
        for a in [Arrow::Cospan(x), Arrow::Span(s)] {
            let back: Arrow = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert!(back.iso_eq(&a));
        }
    }

    #[test]
    fn simplification_keeps_the_language(seed in any::<u64>()) {
        let r = gen::random_regex(&mut case_rng(seed, 0), 5);
        let ab = ["a".to_string(), "b".to_string()];
        let s = r.simplify();
        prop_assert!(s.size() <= r.size());
        prop_assert!(regex_bounded_eq(&r, &s, &ab, 8));
    }

    #[test]
    fn regex_printing_round_trips(seed in any::<u64>()) {
        let r = gen::random_regex(&mut case_rng(seed, 0), 5);
        let text = r.to_string();
        prop_assert_eq!(parse_regex(&text).unwrap().to_string(), text);
    }

    #[test]
    fn identifications_commute(seed in any::<u64>(), n in 3..=5usize) {
        let mut rng = case_rng(seed, 0);
        let cat = gen::random_lang_cat(&mut rng, n);
        let ab = ["a".to_string(), "b".to_string()];
        let picks: Vec<usize> = (0..4).map(|k| (seed as usize >> (4 * k)) % n).collect();
        let (x, y, z, w) = (picks[0], picks[1], picks[2], picks[3]);
        let both = |first: (usize, usize), second: (usize, usize)| {
            let one = identify_objects(&cat, first.0, first.1).unwrap();
            let two = identify_objects(&one.cat, one.remap[second.0], one.remap[second.1]).unwrap();
            let place: Vec<usize> = (0..n).map(|i| two.remap[one.remap[i]]).collect();
            (two.cat, place)
        };
        let (a, pa) = both((x, y), (z, w));
        let (b, pb) = both((z, w), (x, y));
        for i in 0..n {
            for j in 0..n {
                let (u, v): (&Regex, &Regex) = (&a.hom[pa[i]][pa[j]], &b.hom[pb[i]][pb[j]]);
                prop_assert!(regex_bounded_eq(u, v, &ab, 8), "{} vs {}", u, v);
            }
        }
    }
}

#[test]
fn separable_axioms_hold_up_to_size_four() {
    for n in 0..=4 {
        for (name, lhs, rhs) in separable_axioms::<Cospan>(n) {
            assert!(lhs.iso_eq(&rhs), "cospan, size {n}: {name}");
        }
        for (name, lhs, rhs) in separable_axioms::<Span>(n) {
            assert!(lhs.iso_eq(&rhs), "span, size {n}: {name}");
        }
    }
}

#[test]
fn empty_diagram_has_empty_colimit() {
    let c = colimit_classical(&LabeledDiagram::new());
    assert_eq!(c.apex, 0);
}
