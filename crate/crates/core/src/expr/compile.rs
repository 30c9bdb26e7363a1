use crate::cospan::Constant;
use crate::dcospan::{DiagramCospan, DiscreteCospan};
use crate::diagram::Obj;

use super::{Expr, Generator};

/// Compiles a diagram cospan into an expression that evaluates back to it.
///
/// With `V` the list of vertices, `S` the list of edge sources, `T` the list
/// of edge targets and `E : S -> T` the tensor of all edges:
///
/// * closed diagrams become `eta(S) ; ((E ; i_cod) * i_dom) ; eps(V)`, where
///   `i_dom, i_cod : S, T -> V` are the discrete cospans indexing edge ends;
/// * otherwise `lambda ; comult(V) ; (W * id(V)) ; mult(V) ; rho'` with
///   `W = i_dom' ; E ; i_cod`, where primes mark reversed discrete cospans and
///   `lambda`, `rho` index the two feet.
pub fn compile(c: &DiagramCospan) -> Expr {
    let center = c.center();
    let objects: Vec<Obj> = center.vertices().to_vec();
    let edges = center.edges();
    let sources: Vec<Obj> = edges.iter().map(|e| objects[e.src].clone()).collect();
    let targets: Vec<Obj> = edges.iter().map(|e| objects[e.tgt].clone()).collect();

    let arcs = Expr::ten_all(edges.iter().map(|e| {
        Expr::Gen(Generator {
            name: e.name.clone(),
            src: objects[e.src].clone(),
            tgt: objects[e.tgt].clone(),
            map: e.map.clone(),
        })
    }));
    let identity: Vec<usize> = (0..objects.len()).collect();
    let indexing = |foot: &[Obj], map: Vec<usize>| DiscreteCospan {
        left: foot.to_vec(),
        center: objects.clone(),
        right: objects.clone(),
        phi: map,
        psi: identity.clone(),
    };
    let i_dom = indexing(&sources, edges.iter().map(|e| e.src).collect());
    let i_cod = indexing(&targets, edges.iter().map(|e| e.tgt).collect());

    if c.left().is_empty() && c.right().is_empty() {
        return Expr::Const(Constant::Eta(sources))
            .then(arcs.then(Expr::Disc(i_cod)).tensor(Expr::Disc(i_dom)))
            .then(Expr::Const(Constant::Eps(objects)));
    }

    let lambda = indexing(&c.left_objects(), c.left().to_vec());
    let rho = indexing(&c.right_objects(), c.right().to_vec());
    let body = Expr::Disc(i_dom.reversed()).then(arcs).then(Expr::Disc(i_cod));
    Expr::Disc(lambda)
        .then(Expr::Const(Constant::Comult(objects.clone())))
        .then(body.tensor(Expr::id(objects.clone())))
        .then(Expr::Const(Constant::Mult(objects)))
        .then(Expr::Disc(rho.reversed()))
}
