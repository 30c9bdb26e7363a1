//! Text syntax for expression programs.
//!
//! ```text
//! # declarations
//! object A = 2
//! object B = 3
//! gen f : A -> B = [0,1]
//! gen g : A -> B = [1,2]
//! # the expression
//! comult(A) ; (gen(f) * gen(g)) ; mult(B)
//! ```
//!
//! `;` composes left to right, `.` right to left, and `*` (or `+`) is the
//! tensor, binding tighter than either composition. A bare object name
//! stands for its identity and `I` for the empty list of objects. Discrete
//! cospans are written `disc[phi|psi](L -> C <- R)`.

use std::fmt;

use crate::cospan::{Constant, StructuralKind};
use crate::dcospan::DiscreteCospan;
use crate::diagram::Obj;
use crate::error::{Error, Result};
use crate::finset::FinFn;

use super::{list_text, Expr, Generator};

const RESERVED: &[&str] = &[
    "I", "id", "sym", "mult", "unit", "comult", "counit", "eta", "eps", "gen", "disc", "object",
];

/// Declarations plus one expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub objects: Vec<Obj>,
    pub generators: Vec<Generator>,
    pub expr: Expr,
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.objects {
            writeln!(f, "object {} = {}", o.name, o.size)?;
        }
        for g in &self.generators {
            let table: Vec<String> = g.map.table().iter().map(|v| v.to_string()).collect();
            writeln!(
                f,
                "gen {} : {} -> {} = [{}]",
                g.name,
                g.src.name,
                g.tgt.name,
                table.join(",")
            )?;
        }
        writeln!(f, "{}", self.expr)
    }
}

/// Whether `name` may be used for an object or generator.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && !RESERVED.contains(&name)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    Sym(&'static str),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    const PUNCT: &[&str] = &["->", "<-", "(", ")", "[", "]", ",", ";", ".", "*", "+", "=", ":", "|", "·"];
    let mut out = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        let mut k = 0;
        while k < chars.len() {
            let (byte, c) = chars[k];
            let column = k + 1;
            let at = |tok| Token { tok, line: ln + 1, column };
            if c.is_whitespace() {
                k += 1;
            } else if c.is_ascii_digit() {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let text: String = chars[start..k].iter().map(|p| p.1).collect();
                let n = text.parse().map_err(|_| Error::Parse {
                    line: ln + 1,
                    column,
                    message: format!("integer `{text}` is too large"),
                })?;
                out.push(at(Tok::Int(n)));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = k;
                while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_' || chars[k].1 == '\'') {
                    k += 1;
                }
                out.push(at(Tok::Ident(chars[start..k].iter().map(|p| p.1).collect())));
            } else if let Some(p) = PUNCT.iter().find(|p| line[byte..].starts_with(**p)) {
                k += p.chars().count();
                out.push(at(Tok::Sym(if *p == "·" { "." } else { p })));
            } else {
                return Err(Error::Parse {
                    line: ln + 1,
                    column,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    let (line, column) = out.last().map(|t| (t.line, t.column + 1)).unwrap_or((1, 1));
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    objects: Vec<Obj>,
    generators: Vec<Generator>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let t = &self.toks[self.pos];
        Error::Parse {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, sym: &str) -> bool {
        if *self.peek() == Tok::Sym(sym_static(sym)) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{sym}`, found {}", describe(self.peek()))))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            other => Err(self.error(format!("expected a name, found {}", describe(&other)))),
        }
    }

    fn int(&mut self) -> Result<usize> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            other => Err(self.error(format!("expected an integer, found {}", describe(&other)))),
        }
    }

    fn object(&mut self) -> Result<Obj> {
        let name = self.ident()?;
        self.objects
            .iter()
            .find(|o| o.name == name)
            .cloned()
            .ok_or_else(|| {
                self.pos -= 1;
                let e = self.error(format!("unknown object `{name}`"));
                self.pos += 1;
                e
            })
    }

    fn list(&mut self) -> Result<Vec<Obj>> {
        if *self.peek() == Tok::Ident("I".into()) {
            self.next();
            return Ok(Vec::new());
        }
        let mut out = vec![self.object()?];
        while self.eat("+") {
            out.push(self.object()?);
        }
        Ok(out)
    }

    fn indices(&mut self, stop: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if *self.peek() == Tok::Sym(sym_static(stop)) {
            return Ok(out);
        }
        out.push(self.int()?);
        while self.eat(",") {
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn declarations(&mut self) -> Result<()> {
        loop {
            match (self.peek().clone(), self.peek2().clone()) {
                (Tok::Ident(k), Tok::Ident(_)) if k == "object" => {
                    self.next();
                    let start = self.pos;
                    let name = self.ident()?;
                    if !is_valid_name(&name) || self.objects.iter().any(|o| o.name == name) {
                        self.pos = start;
                        return Err(self.error(format!("cannot declare object `{name}`")));
                    }
                    self.expect("=")?;
                    let size = self.int()?;
                    self.objects.push(Obj::new(name, size));
                }
                (Tok::Ident(k), Tok::Ident(_)) if k == "gen" => {
                    self.next();
                    let start = self.pos;
                    let name = self.ident()?;
                    if !is_valid_name(&name) || self.generators.iter().any(|g| g.name == name) {
                        self.pos = start;
                        return Err(self.error(format!("cannot declare generator `{name}`")));
                    }
                    self.expect(":")?;
                    let src = self.object()?;
                    self.expect("->")?;
                    let tgt = self.object()?;
                    self.expect("=")?;
                    self.expect("[")?;
                    let table = self.indices("]")?;
                    self.expect("]")?;
                    let map = FinFn::new(table, tgt.size).map_err(|e| {
                        self.pos = start;
                        self.error(e.to_string())
                    })?;
                    let g = Generator::new(name, src, tgt, map).map_err(|e| {
                        self.pos = start;
                        self.error(e.to_string())
                    })?;
                    self.generators.push(g);
                }
                _ => return Ok(()),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.tensor()?;
        loop {
            let at = self.pos;
            let (first, second) = if self.eat(";") {
                let next = self.tensor()?;
                (acc, next)
            } else if self.eat(".") {
                let next = self.tensor()?;
                (next, acc)
            } else {
                return Ok(acc);
            };
            self.check_seq(at, &first, &second)?;
            acc = first.then(second);
        }
    }

    fn check_seq(&self, at: usize, first: &Expr, second: &Expr) -> Result<()> {
        let (_, mid) = first.boundary()?;
        let (mid2, _) = second.boundary()?;
        if mid != mid2 {
            let t = &self.toks[at];
            return Err(Error::TypeMismatchAt {
                line: t.line,
                column: t.column,
                left: list_text(&mid),
                right: list_text(&mid2),
            });
        }
        Ok(())
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut acc = self.atom()?;
        while self.eat("*") || self.eat("+") {
            acc = acc.tensor(self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Expr> {
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        let word = match self.peek().clone() {
            Tok::Ident(w) => w,
            other => return Err(self.error(format!("expected an expression, found {}", describe(&other)))),
        };
        if word == "I" {
            self.next();
            return Ok(Expr::id(Vec::new()));
        }
        if let Some(kind) = StructuralKind::from_keyword(&word) {
            self.next();
            self.expect("(")?;
            let first = self.list()?;
            let second = if kind == StructuralKind::Sym {
                self.expect(",")?;
                self.list()?
            } else {
                Vec::new()
            };
            self.expect(")")?;
            return Ok(Expr::Const(Constant::of_kind(kind, first, second)));
        }
        match word.as_str() {
            "gen" => {
                self.next();
                self.expect("(")?;
                let at = self.pos;
                let name = self.ident()?;
                let g = self.generators.iter().find(|g| g.name == name).cloned().ok_or_else(|| {
                    self.pos = at;
                    self.error(format!("unknown generator `{name}`"))
                })?;
                self.expect(")")?;
                Ok(Expr::Gen(g))
            }
            "disc" => {
                self.next();
                let at = self.pos;
                self.expect("[")?;
                let phi = self.indices("|")?;
                self.expect("|")?;
                let psi = self.indices("]")?;
                self.expect("]")?;
                self.expect("(")?;
                let left = self.list()?;
                self.expect("->")?;
                let center = self.list()?;
                self.expect("<-")?;
                let right = self.list()?;
                self.expect(")")?;
                let d = DiscreteCospan::new(left, center, right, phi, psi).map_err(|e| {
                    self.pos = at;
                    self.error(e.to_string())
                })?;
                Ok(Expr::Disc(d))
            }
            _ => Ok(Expr::id(vec![self.object()?])),
        }
    }
}

fn sym_static(s: &str) -> &'static str {
    match s {
        "->" => "->",
        "<-" => "<-",
        "(" => "(",
        ")" => ")",
        "[" => "[",
        "]" => "]",
        "," => ",",
        ";" => ";",
        "." => ".",
        "*" => "*",
        "+" => "+",
        "=" => "=",
        ":" => ":",
        "|" => "|",
        _ => unreachable!("not a punctuation token: {s}"),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(s) => format!("`{s}`"),
        Tok::End => "end of input".to_string(),
    }
}

/// Parses declarations followed by a single expression.
pub fn parse_program(src: &str) -> Result<Program> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        objects: Vec::new(),
        generators: Vec::new(),
    };
    p.declarations()?;
    let expr = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(format!("unexpected {}", describe(p.peek()))));
    }
    Ok(Program {
        objects: p.objects,
        generators: p.generators,
        expr,
    })
}

impl Program {
    /// A program declaring exactly what `expr` mentions.
    pub fn from_expr(expr: Expr) -> Program {
        let mut objects: Vec<Obj> = Vec::new();
        let mut generators: Vec<Generator> = Vec::new();
        collect(&expr, &mut objects, &mut generators);
        Program { objects, generators, expr }
    }

    /// Object lists as they print, for diagnostics.
    pub fn object_list(&self) -> String {
        list_text(&self.objects)
    }
}

fn collect(e: &Expr, objects: &mut Vec<Obj>, generators: &mut Vec<Generator>) {
    let mut add = |o: &Obj| {
        if !objects.contains(o) {
            objects.push(o.clone());
        }
    };
    match e {
        Expr::Const(c) => c.objects().into_iter().flatten().for_each(&mut add),
        Expr::Gen(g) => {
            add(&g.src);
            add(&g.tgt);
            if !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        Expr::Disc(d) => d.left.iter().chain(&d.center).chain(&d.right).for_each(&mut add),
        Expr::Seq(a, b) | Expr::Ten(a, b) => {
            collect(a, objects, generators);
            collect(b, objects, generators);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospan::{Cospan, Wscc};
    use crate::expr::eval;

    const PAIR: &str = "object A = 2\nobject B = 3\ngen f : A -> B = [0,1]\ngen g : A -> B = [1,2]\n";

    #[test]
    fn parses_and_prints() {
        let p = parse_program(&format!("{PAIR}comult(A) ; (gen(f) * gen(g)) ; mult(B)")).unwrap();
        assert_eq!(p.expr.to_string(), "comult(A) ; (gen(f) * gen(g)) ; mult(B)");
        let again = parse_program(&p.to_string()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn applicative_order_matches_diagrammatic() {
        let a = parse_program(&format!("{PAIR}comult(A) ; (gen(f) * gen(g)) ; mult(B)")).unwrap();
        let b = parse_program(&format!("{PAIR}mult(B) · (gen(f) + gen(g)) . comult(A)")).unwrap();
        let (x, y): (Cospan, Cospan) = (eval(&a.expr).unwrap(), eval(&b.expr).unwrap());
        assert!(x.iso_eq(&y));
    }

    #[test]
    fn bare_objects_are_identities() {
        let p = parse_program("object A = 1\nobject C = 2\n(eps(A) + A + C) . (A + eta(A) + C)").unwrap();
        let c: Cospan = eval(&p.expr).unwrap();
        assert_eq!((c.source(), c.target()), (3, 3));
        let p = parse_program("object A = 1\nI * A").unwrap();
        assert_eq!(p.expr.to_string(), "id(I) * id(A)");
    }

    #[test]
    fn disc_syntax_round_trips() {
        let src = "object A = 1\nobject B = 2\ndisc[1,0|0,0](B+A -> A+B <- A+A)";
        let p = parse_program(src).unwrap();
        assert_eq!(p.expr.to_string(), "disc[1,0|0,0](B+A -> A+B <- A+A)");
        assert!(parse_program("object A = 1\nobject B = 1\ndisc[0|](A -> B <- I)").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_program("object A = 2\nmult(A) ; mult(Q)").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 2, column: 16, message: "unknown object `Q`".into() }
        );
        let err = parse_program("object A = 2\nmult(A) ;").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_program("object A = 2\ngen f : A -> A = [0,5]\nid(A)").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 5, .. }));
        assert!(parse_program("object eta = 2\nid(I)").is_err());
        assert!(parse_program("object A = 2\nid(A) $").is_err());
    }

    #[test]
    fn type_errors_point_at_the_operator() {
        let err = parse_program("object A = 2\nobject B = 1\nmult(A) ;\n  id(B)").unwrap_err();
        assert_eq!(
            err,
            Error::TypeMismatchAt { line: 3, column: 9, left: "A".into(), right: "B".into() }
        );
        assert!(!err.is_parse());
        let err = parse_program("object A = 2\nmult(A) . id(A)").unwrap_err();
        assert!(matches!(err, Error::TypeMismatchAt { line: 2, column: 9, .. }));
    }

    #[test]
    fn from_expr_declares_everything() {
        let p = parse_program(&format!("{PAIR}comult(A) ; (gen(f) * gen(g)) ; mult(B)")).unwrap();
        let q = Program::from_expr(p.expr.clone());
        assert_eq!(q, p);
        assert_eq!(q.object_list(), "A+B");
    }
}
