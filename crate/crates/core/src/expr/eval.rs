use crate::cospan::{Arrow, Cospan, Direction, Mode, Span, Wscc};
use crate::dcospan::{dcompose, dconstant, dtensor, DiagramCospan};
use crate::diagram::Obj;
use crate::error::Result;

use super::{check_match, Expr};

fn sizes<W: Wscc>(objects: &[Obj]) -> usize {
    W::MODE.tensor_size(objects.iter().map(|o| o.size))
}

/// Evaluates `e` in `cospan(FinSet)` or `span(FinSet)` by structural
/// recursion. Ill-typed sequential composites are reported with both object
/// lists.
pub fn eval<W: Wscc>(e: &Expr) -> Result<W> {
    eval_typed::<W>(e).map(|(w, _, _)| w)
}

fn eval_typed<W: Wscc>(e: &Expr) -> Result<(W, Vec<Obj>, Vec<Obj>)> {
    match e {
        Expr::Const(c) => {
            let (src, tgt) = super::constant_boundary(c);
            Ok((W::constant(&c.map(|l| sizes::<W>(l))), src, tgt))
        }
        Expr::Gen(g) => Ok((
            W::lift(&g.map, Direction::Forward),
            vec![g.src.clone()],
            vec![g.tgt.clone()],
        )),
        Expr::Disc(d) => {
            d.validate()?;
            Ok((d.evaluate::<W>()?, d.left.clone(), d.right.clone()))
        }
        Expr::Seq(a, b) => {
            let (wa, src, mid) = eval_typed::<W>(a)?;
            let (wb, mid2, tgt) = eval_typed::<W>(b)?;
            check_match(&mid, &mid2)?;
            Ok((wa.compose(&wb)?, src, tgt))
        }
        Expr::Ten(a, b) => {
            let (wa, mut src, mut tgt) = eval_typed::<W>(a)?;
            let (wb, src2, tgt2) = eval_typed::<W>(b)?;
            src.extend(src2);
            tgt.extend(tgt2);
            Ok((wa.tensor(&wb), src, tgt))
        }
    }
}

pub fn eval_mode(e: &Expr, mode: Mode) -> Result<Arrow> {
    Ok(match mode {
        Mode::Cospan => Arrow::Cospan(eval::<Cospan>(e)?),
        Mode::Span => Arrow::Span(eval::<Span>(e)?),
    })
}

/// Evaluates `e` in the category of diagram cospans itself, producing the
/// diagram the expression denotes.
pub fn eval_diagram(e: &Expr) -> Result<DiagramCospan> {
    e.boundary()?;
    eval_diagram_unchecked(e)
}

fn eval_diagram_unchecked(e: &Expr) -> Result<DiagramCospan> {
    match e {
        Expr::Const(c) => Ok(dconstant(c)),
        Expr::Gen(g) => DiagramCospan::generator(&g.name, &g.src, &g.tgt, &g.map),
        Expr::Disc(d) => Ok(d.to_diagram_cospan()),
        Expr::Seq(a, b) => dcompose(&eval_diagram_unchecked(a)?, &eval_diagram_unchecked(b)?),
        Expr::Ten(a, b) => Ok(dtensor(&eval_diagram_unchecked(a)?, &eval_diagram_unchecked(b)?)),
    }
}
