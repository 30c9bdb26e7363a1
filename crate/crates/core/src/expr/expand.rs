use crate::cospan::Constant;
use crate::dcospan::DiscreteCospan;
use crate::diagram::Obj;
use crate::error::{Error, Result};

use super::Expr;

/// Replaces every discrete node by a word in the structural constants
/// (`id`, `sym`, `mult`, `unit` and their mirror images).
///
/// A discrete cospan `I -phi-> J <-psi- K` becomes `F(phi) ; F(psi)'` where
/// `F(phi)` first sorts `I` by `phi` with adjacent symmetries (a bubble-sort
/// network) and then merges each block with `mult`, or creates an empty
/// block with `unit`.
pub fn expand_discrete(e: &Expr) -> Expr {
    match e {
        Expr::Disc(d) => discrete_word(d),
        Expr::Seq(a, b) => expand_discrete(a).then(expand_discrete(b)),
        Expr::Ten(a, b) => expand_discrete(a).tensor(expand_discrete(b)),
        other => other.clone(),
    }
}

fn discrete_word(d: &DiscreteCospan) -> Expr {
    let forward = merge_word(&d.left, &d.center, &d.phi);
    let backward = reverse(&merge_word(&d.right, &d.center, &d.psi))
        .expect("merge words contain no generators");
    forward.then(backward)
}

fn merge_word(src: &[Obj], center: &[Obj], map: &[usize]) -> Expr {
    let mut layers = Vec::new();
    let mut order: Vec<usize> = (0..src.len()).collect();
    let key = |i: usize| (map[i], i);
    // Bubble sort; every swap is one layer.
    for pass in 0..order.len() {
        for p in 0..order.len().saturating_sub(pass + 1) {
            if key(order[p]) > key(order[p + 1]) {
                let objs: Vec<Obj> = order.iter().map(|&i| src[i].clone()).collect();
                let layer = Expr::ten_all([
                    Expr::id(objs[..p].to_vec()),
                    Expr::Const(Constant::Sym(vec![objs[p].clone()], vec![objs[p + 1].clone()])),
                    Expr::id(objs[p + 2..].to_vec()),
                ]);
                layers.push(layer);
                order.swap(p, p + 1);
            }
        }
    }
    let merges = Expr::ten_all(center.iter().enumerate().map(|(j, obj)| {
        let k = map.iter().filter(|&&m| m == j).count();
        match k {
            0 => Expr::Const(Constant::Unit(vec![obj.clone()])),
            1 => Expr::id(vec![obj.clone()]),
            _ => Expr::seq_all((0..k - 1).map(|step| {
                let rest = k - 2 - step;
                Expr::Const(Constant::Mult(vec![obj.clone()])).tensor(Expr::id(vec![obj.clone(); rest]))
            }))
            .expect("at least one merge"),
        }
    }));
    layers.push(merges);
    Expr::seq_all(layers).expect("at least one layer")
}

/// The mirror image of a structural word: reverses composition order and
/// swaps each constant for its reverse. Generators have no mirror image.
pub fn reverse(e: &Expr) -> Result<Expr> {
    Ok(match e {
        Expr::Const(c) => Expr::Const(c.reversed()),
        Expr::Disc(d) => Expr::Disc(d.reversed()),
        Expr::Gen(g) => {
            return Err(Error::IllFormed(format!("generator `{}` cannot be reversed", g.name)))
        }
        Expr::Seq(a, b) => reverse(b)?.then(reverse(a)?),
        Expr::Ten(a, b) => reverse(a)?.tensor(reverse(b)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospan::{Cospan, Span, Wscc};
    use crate::dcospan::{colim_functor, disc_colim, disc_lim};
    use crate::expr::{eval, eval_diagram};

    fn contains_disc(e: &Expr) -> bool {
        match e {
            Expr::Disc(_) => true,
            Expr::Seq(a, b) | Expr::Ten(a, b) => contains_disc(a) || contains_disc(b),
            _ => false,
        }
    }

    #[test]
    fn expanded_discrete_cospans_evaluate_equally() {
        let (a, b, c) = (Obj::new("A", 1), Obj::new("B", 2), Obj::new("C", 0));
        let d = DiscreteCospan::new(
            vec![b.clone(), a.clone(), b.clone(), c.clone()],
            vec![a.clone(), b.clone(), c.clone(), b.clone()],
            vec![b.clone(), a.clone(), a.clone()],
            vec![1, 0, 3, 2],
            vec![3, 0, 0],
        )
        .unwrap();
        let word = expand_discrete(&Expr::Disc(d.clone()));
        assert!(!contains_disc(&word));
        word.boundary().unwrap();
        assert!(eval::<Cospan>(&word).unwrap().iso_eq(&disc_colim(&d).unwrap()));
        assert!(eval::<Span>(&word).unwrap().iso_eq(&disc_lim(&d).unwrap()));
        let dc = eval_diagram(&word).unwrap();
        assert_eq!(dc.center().vertices().len(), 4);
        assert!(colim_functor(&dc).iso_eq(&disc_colim(&d).unwrap()));
    }

    #[test]
    fn generators_cannot_be_reversed() {
        let a = Obj::new("A", 1);
        let g = super::super::Generator::new("f", a.clone(), a, crate::FinFn::identity(1)).unwrap();
        assert!(reverse(&Expr::Gen(g)).is_err());
    }
}
