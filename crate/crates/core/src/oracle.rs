//! Brute-force universal-property checks.
//!
//! These enumerate every cocone (or cone) up to a size bound and count
//! factorizations directly, so they share no code with the union-find
//! machinery they are used to test. Cost is exponential in the bound and in
//! the total size of the diagram; callers keep both small.

use crate::diagram::{Cocone, Cone, LabeledDiagram};
use crate::finset::offsets;

/// Calls `visit` with every table of a function `[dom] -> [cod]`, in
/// lexicographic order.
pub fn for_each_function(dom: usize, cod: usize, mut visit: impl FnMut(&[usize])) {
    if dom == 0 {
        visit(&[]);
        return;
    }
    if cod == 0 {
        return;
    }
    let mut table = vec![0usize; dom];
    loop {
        visit(&table);
        let mut k = dom;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            table[k] += 1;
            if table[k] < cod {
                break;
            }
            table[k] = 0;
        }
    }
}

/// Number of maps `h : apex -> [n]` with `h . legs = family`, where both
/// the legs and `family` are given as single maps out of a common domain.
pub(crate) fn count_factorizations(legs: &[usize], apex: usize, family: &[usize], n: usize) -> u64 {
    let mut required: Vec<Option<usize>> = vec![None; apex];
    for (&e, &y) in legs.iter().zip(family) {
        match required[e] {
            None => required[e] = Some(y),
            Some(z) if z != y => return 0,
            Some(_) => {}
        }
    }
    required
        .iter()
        .map(|r| if r.is_some() { 1 } else { n as u64 })
        .product()
}

/// True iff `c` is a cocone on `d` through which every cocone with apex of
/// size at most `bound` factors exactly once.
pub fn universal_cocone_oracle(d: &LabeledDiagram, c: &Cocone, bound: usize) -> bool {
    if !c.is_cocone_on(d) {
        return false;
    }
    let sizes = d.sizes();
    let off = offsets(&sizes);
    let total = off[sizes.len()];
    let legs = c.cotuple();
    let mut ok = true;
    for n in 0..=bound {
        for_each_function(total, n, |family| {
            if !ok {
                return;
            }
            let commutes = d.edges().iter().all(|e| {
                (0..e.map.dom()).all(|x| family[off[e.tgt] + e.map.apply(x)] == family[off[e.src] + x])
            });
            if commutes && count_factorizations(legs.table(), c.apex, family, n) != 1 {
                ok = false;
            }
        });
        if !ok {
            return false;
        }
    }
    true
}

/// Dual of [`universal_cocone_oracle`]: every cone on `d` with apex of size
/// at most `bound` factors through `c` exactly once.
pub fn universal_cone_oracle(d: &LabeledDiagram, c: &Cone, bound: usize) -> bool {
    if !c.is_cone_on(d) {
        return false;
    }
    let sizes = d.sizes();
    for m in 0..=bound {
        // A cone from [m] is a choice of one leg [m] -> A_v per vertex.
        let mut legs: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
        if !each_cone(d, &sizes, m, &mut legs, &mut |family| {
            (0..m).all(|x| {
                let hits = (0..c.apex)
                    .filter(|&p| (0..sizes.len()).all(|v| c.legs[v].apply(p) == family[v][x]))
                    .count();
                hits == 1
            })
        }) {
            return false;
        }
    }
    true
}

fn each_cone(
    d: &LabeledDiagram,
    sizes: &[usize],
    m: usize,
    legs: &mut Vec<Vec<usize>>,
    check: &mut dyn FnMut(&[Vec<usize>]) -> bool,
) -> bool {
    let k = legs.len();
    if k == sizes.len() {
        let commutes = d
            .edges()
            .iter()
            .all(|e| (0..m).all(|x| e.map.apply(legs[e.src][x]) == legs[e.tgt][x]));
        return !commutes || check(legs);
    }
    let mut all = true;
    for_each_function(m, sizes[k], |table| {
        if !all {
            return;
        }
        legs.push(table.to_vec());
        all = each_cone(d, sizes, m, legs, check);
        legs.pop();
    });
    all
}
