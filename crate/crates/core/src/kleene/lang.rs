use crate::diagram::fresh_name;
use crate::error::{Error, Result};

use super::graph::{phi1, Automaton, RegexGraph};
use super::regex::Regex;

/// A category enriched in languages, presented by a matrix of regexes:
/// `hom[x][y]` is the language of morphisms from `x` to `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangCat {
    pub objects: Vec<String>,
    pub hom: Vec<Vec<Regex>>,
}

impl LangCat {
    /// The free category on an edge matrix: all paths, with `e` on the
    /// diagonal.
    pub fn free(objects: Vec<String>, edges: Vec<Vec<Regex>>) -> Result<Self> {
        let n = objects.len();
        if edges.len() != n || edges.iter().any(|row| row.len() != n) {
            return Err(Error::IllFormed(format!("hom matrix is not {n} by {n}")));
        }
        Ok(LangCat { objects, hom: matrix_star(&edges) })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    /// The full subcategory on `keep`, in that order.
    pub fn restrict(&self, keep: &[usize]) -> LangCat {
        LangCat {
            objects: keep.iter().map(|&i| self.objects[i].clone()).collect(),
            hom: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.hom[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Both categories side by side with no morphisms between them. Names
    /// from `other` that clash get a suffix.
    pub fn disjoint_union(&self, other: &LangCat) -> LangCat {
        let mut objects = self.objects.clone();
        for o in &other.objects {
            let name = fresh_name(o, |c| objects.iter().any(|x| x == c));
            objects.push(name);
        }
        let (n, m) = (self.len(), other.len());
        let hom = (0..n + m)
            .map(|i| {
                (0..n + m)
                    .map(|j| match (i < n, j < n) {
                        (true, true) => self.hom[i][j].clone(),
                        (false, false) => other.hom[i - n][j - n].clone(),
                        _ => Regex::Empty,
                    })
                    .collect()
            })
            .collect();
        LangCat { objects, hom }
    }
}

/// Reflexive-transitive closure of a square regex matrix: entry `(i, j)` of
/// the result denotes every word along a path from `i` to `j`.
///
/// Eliminates one pivot `k` at a time in index order. With `s = N[k][k]*`,
/// row `k` becomes `s.N[k][j]`, column `k` becomes `N[i][k].s`, and every
/// other entry gains `N[i][k].s.N[k][j]`. At the end `e` is added on the
/// diagonal.
pub fn matrix_star(m: &[Vec<Regex>]) -> Vec<Vec<Regex>> {
    let n = m.len();
    let mut a: Vec<Vec<Regex>> = m.to_vec();
    for k in 0..n {
        let s = Regex::star(a[k][k].clone());
        let col: Vec<Regex> = (0..n).map(|i| a[i][k].clone()).collect();
        let row: Vec<Regex> = (0..n).map(|j| a[k][j].clone()).collect();
        for i in 0..n {
            for j in 0..n {
                a[i][j] = match (i == k, j == k) {
                    (true, true) => Regex::concat(row[k].clone(), s.clone()),
                    (true, false) => Regex::concat(s.clone(), row[j].clone()),
                    (false, true) => Regex::concat(col[i].clone(), s.clone()),
                    (false, false) => {
                        let through = Regex::concat(Regex::concat(col[i].clone(), s.clone()), row[j].clone());
                        Regex::union(a[i][j].clone(), through)
                    }
                };
            }
        }
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = Regex::union(Regex::Epsilon, row[i].clone());
    }
    a
}

/// Result of [`identify_objects`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identified {
    pub cat: LangCat,
    /// Old object index to new object index.
    pub remap: Vec<usize>,
    /// Set when `x == y` and nothing was done.
    pub noop: bool,
}

/// Merges objects `x` and `y` of a star-closed `X`, keeping the name and
/// position of `x`. With `Z` and `W` ranging over the new objects, each
/// standing for the set of old objects it replaces,
///
/// `X'(Z,W) = X(Z,W) + X(Z,{x,y}) . X({x,y},{x,y})* . X({x,y},W)`
///
/// where a hom between sets of objects is the union of the homs between
/// their members.
pub fn identify_objects(cat: &LangCat, x: usize, y: usize) -> Result<Identified> {
    let n = cat.len();
    for index in [x, y] {
        if index >= n {
            return Err(Error::BadIndex { what: "object", index, bound: n });
        }
    }
    if x == y {
        return Ok(Identified { cat: cat.clone(), remap: (0..n).collect(), noop: true });
    }
    let remap: Vec<usize> = (0..n)
        .map(|i| {
            let i = if i == y { x } else { i };
            if i > y {
                i - 1
            } else {
                i
            }
        })
        .collect();
    let survivors: Vec<usize> = (0..n).filter(|&i| i != y).collect();
    let members = |i: usize| if i == x { vec![x, y] } else { vec![i] };
    let hom_between = |zs: &[usize], ws: &[usize]| {
        Regex::union_all(zs.iter().flat_map(|&z| ws.iter().map(move |&w| cat.hom[z][w].clone())))
    };
    let pair = [x, y];
    let loop_star = Regex::star(hom_between(&pair, &pair));
    let into: Vec<Regex> = survivors.iter().map(|&z| hom_between(&members(z), &pair)).collect();
    let out_of: Vec<Regex> = survivors.iter().map(|&w| hom_between(&pair, &members(w))).collect();
    let hom = survivors
        .iter()
        .enumerate()
        .map(|(zi, &z)| {
            survivors
                .iter()
                .enumerate()
                .map(|(wi, &w)| {
                    let through = Regex::concat(Regex::concat(into[zi].clone(), loop_star.clone()), out_of[wi].clone());
                    Regex::union(hom_between(&members(z), &members(w)), through)
                })
                .collect()
        })
        .collect();
    let objects = survivors.iter().map(|&i| cat.objects[i].clone()).collect();
    Ok(Identified { cat: LangCat { objects, hom }, remap, noop: false })
}

/// A cospan of language categories: the feet are lists of objects of the
/// centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangCospan {
    pub center: LangCat,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl LangCospan {
    pub fn identity(objects: Vec<String>) -> Self {
        let n = objects.len();
        let hom = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Regex::Epsilon } else { Regex::Empty }).collect())
            .collect();
        LangCospan {
            center: LangCat { objects, hom },
            left: (0..n).collect(),
            right: (0..n).collect(),
        }
    }
}

/// Glues `a` and `b` along the middle foot: the two centres side by side,
/// then one [`identify_objects`] per middle foot position, in order.
pub fn lang_compose(a: &LangCospan, b: &LangCospan) -> Result<LangCospan> {
    if a.right.len() != b.left.len() {
        return Err(Error::boundary(
            "lang_compose",
            format!("{} right foot objects", a.right.len()),
            format!("{} left foot objects", b.left.len()),
        ));
    }
    let offset = a.center.len();
    let mut cat = a.center.disjoint_union(&b.center);
    let mut place: Vec<usize> = (0..cat.len()).collect();
    for (&x, &y) in a.right.iter().zip(&b.left) {
        let step = identify_objects(&cat, place[x], place[offset + y])?;
        place.iter_mut().for_each(|p| *p = step.remap[*p]);
        cat = step.cat;
    }
    Ok(LangCospan {
        center: cat,
        left: a.left.iter().map(|&i| place[i]).collect(),
        right: b.right.iter().map(|&i| place[offset + i]).collect(),
    })
}

/// The colimit of a regex-labelled graph: the free language category on its
/// states, parallel edges contributing the union of their labels. Initial
/// and final states become the feet.
pub fn phi2(g: &RegexGraph) -> LangCospan {
    let n = g.states.len();
    let mut edges = vec![vec![Regex::Empty; n]; n];
    for (s, r, t) in &g.edges {
        edges[*s][*t] = Regex::union(edges[*s][*t].clone(), r.clone());
    }
    LangCospan {
        center: LangCat { objects: g.states.clone(), hom: matrix_star(&edges) },
        left: g.initial.clone(),
        right: g.final_states.clone(),
    }
}

/// A cospan whose feet jointly cover every object of the centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corelation(pub LangCospan);

impl Corelation {
    pub fn is_jointly_surjective(c: &LangCospan) -> bool {
        (0..c.center.len()).all(|o| c.left.contains(&o) || c.right.contains(&o))
    }
}

/// Restricts the centre to the objects hit by a foot, in order of first
/// appearance along the left foot and then the right one.
pub fn phi3(c: &LangCospan) -> Corelation {
    let mut keep: Vec<usize> = Vec::new();
    for &o in c.left.iter().chain(&c.right) {
        if !keep.contains(&o) {
            keep.push(o);
        }
    }
    let place = |o: usize| keep.iter().position(|&k| k == o).expect("kept");
    Corelation(LangCospan {
        center: c.center.restrict(&keep),
        left: c.left.iter().map(|&o| place(o)).collect(),
        right: c.right.iter().map(|&o| place(o)).collect(),
    })
}

/// Regexes between every initial and every final state of an automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleeneTable {
    pub initial: Vec<String>,
    pub final_states: Vec<String>,
    /// `entries[i][f]` for the `i`-th initial and `f`-th final state.
    pub entries: Vec<Vec<Regex>>,
}

/// `phi3 . phi2 . phi1`, read off on initial times final states.
pub fn kleene_pipeline(g: &Automaton) -> Result<KleeneTable> {
    let Corelation(c) = phi3(&phi2(&phi1(g)?));
    let entries = c
        .left
        .iter()
        .map(|&i| c.right.iter().map(|&f| c.center.hom[i][f].clone()).collect())
        .collect();
    Ok(KleeneTable {
        initial: g.initial.iter().map(|&i| g.states[i].clone()).collect(),
        final_states: g.final_states.iter().map(|&f| g.states[f].clone()).collect(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kleene::graph::{compose_graphs, Label};
    use crate::kleene::oracle::regex_bounded_eq;
    use crate::kleene::regex::parse_regex;

    fn r(s: &str) -> Regex {
        parse_regex(s).unwrap().simplify()
    }

    fn ab() -> Vec<String> {
        ["a", "b", "x", "y"].iter().map(|s| s.to_string()).collect()
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("s{i}")).collect()
    }

    fn automaton(states: usize, edges: &[(usize, &str, usize)], initial: &[usize], fin: &[usize]) -> Automaton {
        Automaton::new(
            vec!["a".into(), "b".into()],
            names(states),
            edges
                .iter()
                .map(|&(s, l, t)| (s, if l == "eps" { Label::Eps } else { Label::Letter(l.into()) }, t))
                .collect(),
            initial.to_vec(),
            fin.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn matrix_star_examples() {
        assert_eq!(matrix_star(&[vec![Regex::Empty]]), vec![vec![Regex::Epsilon]]);
        let m = matrix_star(&[vec![Regex::Empty, r("a")], vec![Regex::Empty, Regex::Empty]]);
        assert_eq!(m[0][1], r("a"));
        assert_eq!((m[0][0].clone(), m[1][1].clone(), m[1][0].clone()), (Regex::Epsilon, Regex::Epsilon, Regex::Empty));
        assert_eq!(matrix_star(&[vec![r("a")]])[0][0].to_string(), "(a)*");
    }

    #[test]
    fn phi2_examples() {
        let c = phi2(&phi1(&automaton(2, &[(0, "a", 1), (1, "b", 1)], &[0], &[1])).unwrap());
        assert_eq!(c.center.hom[0][1].to_string(), "(a.(b)*)");
        let c = phi2(&phi1(&automaton(1, &[], &[0], &[0])).unwrap());
        assert_eq!(c.center.hom, vec![vec![Regex::Epsilon]]);
        let c = phi2(&phi1(&automaton(2, &[], &[], &[])).unwrap());
        assert_eq!(c.center.hom[0][1], Regex::Empty);
    }

    #[test]
    fn parallel_edges_are_unioned() {
        let c = phi2(&phi1(&automaton(2, &[(0, "a", 1), (0, "b", 1)], &[0], &[1])).unwrap());
        assert_eq!(c.center.hom[0][1].to_string(), "(a+b)");
    }

    #[test]
    fn identify_examples() {
        // z -a-> x -b-> w, y isolated: merging x and y gives a.b from z to w.
        let mut e = vec![vec![Regex::Empty; 4]; 4];
        e[0][1] = r("a");
        e[1][3] = r("b");
        let cat = LangCat::free(vec!["z".into(), "x".into(), "y".into(), "w".into()], e).unwrap();
        let id = identify_objects(&cat, 1, 2).unwrap();
        assert_eq!(id.cat.objects, ["z", "x", "w"]);
        assert_eq!(id.remap, vec![0, 1, 1, 2]);
        assert!(regex_bounded_eq(&id.cat.hom[0][2], &r("a.b"), &ab(), 6));

        let mut e = vec![vec![Regex::Empty; 2]; 2];
        e[0][1] = r("a");
        e[1][0] = r("b");
        let cat = LangCat::free(vec!["x".into(), "y".into()], e).unwrap();
        let id = identify_objects(&cat, 0, 1).unwrap();
        assert!(regex_bounded_eq(&id.cat.hom[0][0], &r("(a+b)*"), &ab(), 8));

        let cat = LangCat::free(names(2), vec![vec![Regex::Empty; 2]; 2]).unwrap();
        let id = identify_objects(&cat, 0, 1).unwrap();
        assert_eq!(id.cat.hom, vec![vec![Regex::Epsilon]]);
        assert!(identify_objects(&cat, 1, 1).unwrap().noop);
        assert!(identify_objects(&cat, 0, 2).is_err());
    }

    #[test]
    fn composing_chains() {
        let p = automaton(2, &[(0, "a", 1)], &[0], &[1]);
        let q = automaton(2, &[(0, "b", 1)], &[0], &[1]);
        let lp = phi2(&phi1(&p).unwrap());
        let lq = phi2(&phi1(&q).unwrap());
        let c = lang_compose(&lp, &lq).unwrap();
        assert_eq!(c.center.hom[c.left[0]][c.right[0]].to_string(), "(a.b)");
        let glued = phi2(&phi1(&compose_graphs(&p, &q).unwrap()).unwrap());
        assert_eq!(glued.center.hom[0][2].to_string(), "(a.b)");

        let id = LangCospan::identity(vec!["s1".into()]);
        let c = lang_compose(&lp, &id).unwrap();
        assert!(regex_bounded_eq(&c.center.hom[c.left[0]][c.right[0]], &r("a"), &ab(), 6));
    }

    #[test]
    fn gluing_creates_loops() {
        // p -x-> q glued to q' -y-> p', with both ends of each identified.
        let mut e = vec![vec![Regex::Empty; 2]; 2];
        e[0][1] = r("x");
        let a = LangCospan {
            center: LangCat::free(vec!["p".into(), "q".into()], e).unwrap(),
            left: vec![0],
            right: vec![1, 0],
        };
        let mut e = vec![vec![Regex::Empty; 2]; 2];
        e[0][1] = r("y");
        let b = LangCospan {
            center: LangCat::free(vec!["q'".into(), "p'".into()], e).unwrap(),
            left: vec![0, 1],
            right: vec![1],
        };
        let c = lang_compose(&a, &b).unwrap();
        assert_eq!(c.center.len(), 2);
        let pp = &c.center.hom[c.left[0]][c.left[0]];
        assert!(regex_bounded_eq(pp, &r("(x.y)*"), &ab(), 8));
    }

    #[test]
    fn phi3_examples() {
        let c = phi2(&phi1(&automaton(3, &[(0, "a", 1), (1, "b", 2)], &[0], &[2])).unwrap());
        let Corelation(k) = phi3(&c);
        assert_eq!(k.center.objects, ["s0", "s2"]);
        assert_eq!(k.center.hom[0][1].to_string(), "(a.b)");
        assert!(Corelation::is_jointly_surjective(&k));
        let Corelation(all) = phi3(&LangCospan { right: vec![1, 2], ..c.clone() });
        assert_eq!(all.center.hom, c.center.hom);
        let Corelation(none) = phi3(&LangCospan { left: vec![], right: vec![], ..c });
        assert!(none.center.is_empty());
    }

    #[test]
    fn pipeline_examples() {
        let t = kleene_pipeline(&automaton(2, &[(0, "a", 1)], &[0], &[1])).unwrap();
        assert_eq!(t.entries[0][0].to_string(), "a");
        let t = kleene_pipeline(&automaton(2, &[(0, "a", 0), (0, "b", 1)], &[0], &[1])).unwrap();
        assert_eq!(t.entries[0][0].to_string(), "((a)*.b)");
        let t = kleene_pipeline(&automaton(1, &[(0, "a", 0)], &[0], &[0])).unwrap();
        assert_eq!(t.entries[0][0].to_string(), "(a)*");
        let t = kleene_pipeline(&automaton(2, &[(1, "a", 1)], &[0], &[1])).unwrap();
        assert_eq!(t.entries[0][0].to_string(), "0");
    }
}
