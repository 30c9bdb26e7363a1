use cocone::check::{run_suite, CheckConfig, Suite};

fn config(suite: Suite, seed: u64) -> CheckConfig {
    let base = CheckConfig { seed, ..CheckConfig::default() };
    match suite {
        Suite::Feedback => CheckConfig { cases: 500, sizes: 3, ..base },
        Suite::Nested | Suite::Kleene | Suite::Monoidal => CheckConfig { cases: 100, ..base },
        _ => base,
    }
}

#[test]
fn every_suite_passes_for_several_seeds() {
    for suite in Suite::ALL {
        let seeds: &[u64] = if suite.is_exhaustive() { &[1] } else { &[1, 2, 3] };
        for &seed in seeds {
            let report = run_suite(suite, config(suite, seed));
            assert!(report.ok(), "{report}");
        }
    }
}

#[test]
fn case_counts_meet_the_targets() {
    let cases = |s: Suite| run_suite(s, config(s, 1)).cases;
    assert!(cases(Suite::Functoriality) >= 200);
    assert!(cases(Suite::Compiler) >= 200);
    assert!(cases(Suite::Nested) >= 100);
    assert!(cases(Suite::Feedback) >= 500);
    assert!(cases(Suite::Kleene) >= 100);
    // 16 equations, sizes 0..=4, two modes
    assert_eq!(cases(Suite::Separable), 160);
    // all pairs f, g : [a] -> [b] with a, b <= 4
    let pairs: usize = (0..=4usize)
        .flat_map(|a| (0..=4usize).map(move |b| if a == 0 { 1 } else { b.pow(a as u32) }.pow(2)))
        .sum();
    assert_eq!(cases(Suite::Duality), pairs);
}

#[test]
fn reports_are_deterministic() {
    for suite in Suite::ALL {
        let c = CheckConfig { cases: 20, ..config(suite, 9) };
        assert_eq!(run_suite(suite, c), run_suite(suite, c));
    }
}
