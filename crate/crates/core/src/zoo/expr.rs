//! Parser for the atom grammar and for family templates.
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor ('&' factor)*
//! factor := '(' expr ')' | atom
//! atom   := EMPTY | ALL | FIN(list) | COFIN(list)
//!         | PT(aff, range) | PT(range, w) | COLTAIL(aff, aff) | OMEGATAIL(aff)
//!         | A_PT(range) | B_PT | W0_PT | W_PT(range) | ATAIL(aff) | WTAIL(aff)
//!         | UP(point)
//! list   := (range (',' range)*)?
//! range  := aff ('..' aff)?
//! point  := aff | '(' aff ',' (aff | w) ')' | a(aff) | b | w0 | w(aff)
//! aff    := term (('+' | '-') term)*      term := NUM | NUM? PARAM
//! ```
//! `∪`, `∩` and `ω` are accepted for `|`, `&` and `w`.

use super::line::{Affine, Bound, Line};
use super::sets::{Carrier, Point, ZSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    LParen,
    RParen,
    Comma,
    DotDot,
    Pipe,
    Amp,
    Plus,
    Minus,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse("number too large".into()))?;
                    chars.next();
                }
                out.push(Tok::Num(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut id = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        id.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            'ω' => {
                chars.next();
                out.push(Tok::Ident("w".into()));
            }
            '.' => {
                chars.next();
                if chars.next() != Some('.') {
                    return Err(Error::Parse("expected '..'".into()));
                }
                out.push(Tok::DotDot);
            }
            _ => {
                chars.next();
                out.push(match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '|' | '∪' => Tok::Pipe,
                    '&' | '∩' => Tok::Amp,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    _ => return Err(Error::Parse(format!("unexpected character {c:?}"))),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub enum PointAst {
    Nat(Affine),
    J(Affine, Option<Affine>),
    A(Affine),
    B,
    W0,
    W(Affine),
}

type Range = (Affine, Affine);

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Empty,
    All,
    Fin(Vec<Range>),
    Cofin(Vec<Range>),
    Pt(Affine, Range),
    PtOmega(Range),
    ColTail(Affine, Affine),
    OmegaTail(Affine),
    APt(Range),
    BPt,
    W0Pt,
    WPt(Range),
    ATail(Affine),
    WTail(Affine),
    Up(PointAst),
    Union(Vec<Ast>),
    Inter(Vec<Ast>),
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    param: Option<&'a str>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn is_param(&self, id: &str) -> bool {
        self.param == Some(id)
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut parts = vec![self.term()?];
        while self.eat(&Tok::Pipe) {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Ast::Union(parts) })
    }

    fn term(&mut self) -> Result<Ast> {
        let mut parts = vec![self.factor()?];
        while self.eat(&Tok::Amp) {
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Ast::Inter(parts) })
    }

    fn factor(&mut self) -> Result<Ast> {
        if self.eat(&Tok::LParen) {
            let e = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(e);
        }
        let name = match self.next() {
            Some(Tok::Ident(id)) => id,
            t => return Err(Error::Parse(format!("expected an atom, found {t:?}"))),
        };
        let ast = match name.as_str() {
            "EMPTY" => Ast::Empty,
            "ALL" => Ast::All,
            "B_PT" => Ast::BPt,
            "W0_PT" => Ast::W0Pt,
            _ => {
                self.expect(Tok::LParen)?;
                let ast = match name.as_str() {
                    "FIN" => Ast::Fin(self.list()?),
                    "COFIN" => Ast::Cofin(self.list()?),
                    "PT" => {
                        let first = self.range()?;
                        self.expect(Tok::Comma)?;
                        if self.eat_omega() {
                            Ast::PtOmega(first)
                        } else if first.0 == first.1 {
                            Ast::Pt(first.0, self.range()?)
                        } else {
                            return Err(Error::Parse("PT column must be a single index".into()));
                        }
                    }
                    "COLTAIL" => {
                        let j = self.aff()?;
                        self.expect(Tok::Comma)?;
                        Ast::ColTail(j, self.aff()?)
                    }
                    "OMEGATAIL" => Ast::OmegaTail(self.aff()?),
                    "A_PT" => Ast::APt(self.range()?),
                    "W_PT" => Ast::WPt(self.range()?),
                    "ATAIL" => Ast::ATail(self.aff()?),
                    "WTAIL" => Ast::WTail(self.aff()?),
                    "UP" => Ast::Up(self.point()?),
                    other => return Err(Error::Parse(format!("unknown atom {other}"))),
                };
                self.expect(Tok::RParen)?;
                ast
            }
        };
        Ok(ast)
    }

    fn eat_omega(&mut self) -> bool {
        self.eat(&Tok::Ident("w".into()))
    }

    fn list(&mut self) -> Result<Vec<Range>> {
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::RParen) {
            return Ok(out);
        }
        out.push(self.range()?);
        while self.eat(&Tok::Comma) {
            out.push(self.range()?);
        }
        Ok(out)
    }

    fn range(&mut self) -> Result<Range> {
        let lo = self.aff()?;
        let hi = if self.eat(&Tok::DotDot) { self.aff()? } else { lo };
        Ok((lo, hi))
    }

    fn aff(&mut self) -> Result<Affine> {
        let mut acc = self.aff_term()?;
        loop {
            let sign = if self.eat(&Tok::Plus) {
                1
            } else if self.eat(&Tok::Minus) {
                -1
            } else {
                break;
            };
            let t = self.aff_term()?;
            if sign < 0 && t.slope > acc.slope {
                return Err(Error::Parse("parameter coefficient must be nonnegative".into()));
            }
            acc = Affine {
                slope: if sign > 0 { acc.slope + t.slope } else { acc.slope - t.slope },
                offset: acc.offset + sign * t.offset,
            };
        }
        Ok(acc)
    }

    fn aff_term(&mut self) -> Result<Affine> {
        match self.next() {
            Some(Tok::Num(v)) => {
                if let Some(Tok::Ident(id)) = self.peek() {
                    if self.is_param(id) {
                        self.pos += 1;
                        return Ok(Affine { slope: v, offset: 0 });
                    }
                }
                Ok(Affine { slope: 0, offset: v as i64 })
            }
            Some(Tok::Ident(id)) if self.is_param(&id) => Ok(Affine::PARAM),
            t => Err(Error::Parse(format!("expected a number, found {t:?}"))),
        }
    }

    fn point(&mut self) -> Result<PointAst> {
        if self.eat(&Tok::LParen) {
            let j = self.aff()?;
            self.expect(Tok::Comma)?;
            let k = if self.eat_omega() { None } else { Some(self.aff()?) };
            self.expect(Tok::RParen)?;
            return Ok(PointAst::J(j, k));
        }
        if let Some(Tok::Ident(id)) = self.peek().cloned() {
            if !self.is_param(&id) {
                self.pos += 1;
                return match id.as_str() {
                    "a" | "w" => {
                        self.expect(Tok::LParen)?;
                        let n = self.aff()?;
                        self.expect(Tok::RParen)?;
                        Ok(if id == "a" { PointAst::A(n) } else { PointAst::W(n) })
                    }
                    "b" => Ok(PointAst::B),
                    "w0" => Ok(PointAst::W0),
                    _ => Err(Error::Parse(format!("unknown point {id}"))),
                };
            }
        }
        Ok(PointAst::Nat(self.aff()?))
    }
}

pub fn parse(s: &str, param: Option<&str>) -> Result<Ast> {
    let mut p = Parser { toks: lex(s)?, pos: 0, param };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(ast)
}

pub fn parse_point(s: &str, param: Option<&str>) -> Result<PointAst> {
    let mut p = Parser { toks: lex(s)?, pos: 0, param };
    let pt = p.point()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(pt)
}

fn value<T: Bound>(a: &Affine, n: &T, min: u64) -> Result<T> {
    let v = T::affine(a.slope, a.offset, n)
        .ok_or_else(|| Error::Parse(format!("index {a} is negative")))?;
    if v < T::constant(min) {
        return Err(Error::Parse(format!("index {v} is below {min}")));
    }
    Ok(v)
}

fn column(a: &Affine) -> Result<u64> {
    match a.as_constant() {
        Some(j) if j >= 1 => Ok(j),
        _ => Err(Error::Parse(format!("column index {a} must be a constant ≥ 1"))),
    }
}

fn range_line<T: Bound>(r: &Range, n: &T, min: u64) -> Result<Line<T>> {
    Ok(Line::range(value(&r.0, n, min)?, value(&r.1, n, min)?))
}

fn grammar(c: Carrier, what: &str) -> Error {
    Error::WrongGrammar(format!("{what} is not in the grammar of {c:?}"))
}

pub fn eval_point<T: Bound>(p: &PointAst, c: Carrier, n: &T) -> Result<Point<T>> {
    let pt = match p {
        PointAst::Nat(v) => Point::Nat(value(v, n, 0)?),
        PointAst::J(j, k) => Point::J(
            column(j)?,
            match k {
                Some(k) => Some(value(k, n, 1)?),
                None => None,
            },
        ),
        PointAst::A(v) => Point::A(value(v, n, 1)?),
        PointAst::B => Point::B,
        PointAst::W0 => Point::W0,
        PointAst::W(v) => Point::W(value(v, n, 1)?),
    };
    if pt.carrier() != c {
        return Err(grammar(c, &format!("point {pt}")));
    }
    Ok(pt)
}

/// Evaluate with the parameter bound to `n`; constants ignore `n`.
pub fn eval<T: Bound>(ast: &Ast, c: Carrier, n: &T) -> Result<ZSet<T>> {
    let need = |want: Carrier, what: &str| if c == want { Ok(()) } else { Err(grammar(c, what)) };
    let mut s = ZSet::empty(c);
    match ast {
        Ast::Empty => {}
        Ast::All => s = ZSet::all(c),
        Ast::Fin(list) | Ast::Cofin(list) => {
            need(Carrier::Nat, "FIN/COFIN")?;
            let mut items = Line::empty();
            for r in list {
                items = items.union(&range_line(r, n, 0)?);
            }
            s = ZSet::nat(items, matches!(ast, Ast::Cofin(_)));
        }
        Ast::Pt(j, r) => {
            need(Carrier::Johnstone, "PT")?;
            let mut cols = std::collections::BTreeMap::new();
            cols.insert(column(j)?, range_line(r, n, 1)?);
            s = ZSet::johnstone(cols, Line::empty());
        }
        Ast::PtOmega(r) => {
            need(Carrier::Johnstone, "PT")?;
            if r.0.slope > 0 || r.1.slope > 0 {
                return Err(Error::Parse("column index must be constant".into()));
            }
            s = ZSet::johnstone(Default::default(), range_line(r, n, 1)?);
        }
        Ast::ColTail(j, k) => {
            need(Carrier::Johnstone, "COLTAIL")?;
            let mut cols = std::collections::BTreeMap::new();
            cols.insert(column(j)?, Line::tail(value(k, n, 1)?));
            s = ZSet::johnstone(cols, Line::empty());
        }
        Ast::OmegaTail(m) => {
            need(Carrier::Johnstone, "OMEGATAIL")?;
            s = ZSet::johnstone(Default::default(), Line::tail(value(m, n, 1)?));
        }
        Ast::APt(_) | Ast::BPt | Ast::W0Pt | Ast::WPt(_) | Ast::ATail(_) | Ast::WTail(_) => {
            need(Carrier::Ex334, "A_PT/B_PT/W0_PT/W_PT/ATAIL/WTAIL")?;
            if let ZSet::Ex334 { a, b, w0, w } = &mut s {
                match ast {
                    Ast::APt(r) => *a = range_line(r, n, 1)?,
                    Ast::BPt => *b = true,
                    Ast::W0Pt => *w0 = true,
                    Ast::WPt(r) => *w = range_line(r, n, 1)?,
                    Ast::ATail(v) => *a = Line::tail(value(v, n, 1)?),
                    Ast::WTail(v) => *w = Line::tail(value(v, n, 1)?),
                    _ => unreachable!(),
                }
            }
        }
        Ast::Up(p) => s = ZSet::up(&eval_point(p, c, n)?),
        Ast::Union(parts) => {
            for p in parts {
                s = s.union(&eval(p, c, n)?);
            }
        }
        Ast::Inter(parts) => {
            s = ZSet::all(c);
            for p in parts {
                s = s.intersection(&eval(p, c, n)?);
            }
        }
    }
    Ok(s)
}

fn point_coefficients(p: &PointAst, out: &mut Vec<Affine>) {
    match p {
        PointAst::Nat(a) | PointAst::A(a) | PointAst::W(a) => out.push(*a),
        PointAst::J(j, k) => {
            out.push(*j);
            out.extend(k);
        }
        PointAst::B | PointAst::W0 => {}
    }
}

fn coefficients(ast: &Ast, out: &mut Vec<Affine>) {
    match ast {
        Ast::Empty | Ast::All | Ast::BPt | Ast::W0Pt => {}
        Ast::Fin(l) | Ast::Cofin(l) => l.iter().for_each(|r| out.extend([r.0, r.1])),
        Ast::Pt(j, r) => out.extend([*j, r.0, r.1]),
        Ast::PtOmega(r) | Ast::APt(r) | Ast::WPt(r) => out.extend([r.0, r.1]),
        Ast::ColTail(a, b) => out.extend([*a, *b]),
        Ast::OmegaTail(a) | Ast::ATail(a) | Ast::WTail(a) => out.push(*a),
        Ast::Up(p) => point_coefficients(p, out),
        Ast::Union(ps) | Ast::Inter(ps) => ps.iter().for_each(|p| coefficients(p, out)),
    }
}

/// A parameter value beyond which every order comparison between the
/// thresholds of `asts`, evaluated at `n` and `n + 1`, agrees with the
/// eventual order.
pub fn stabilization_bound(asts: &[&Ast], points: &[&PointAst]) -> u64 {
    let mut cs = Vec::new();
    asts.iter().for_each(|a| coefficients(a, &mut cs));
    points.iter().for_each(|p| point_coefficients(p, &mut cs));
    let slope = cs.iter().map(|a| a.slope).max().unwrap_or(0);
    let offset = cs.iter().map(|a| a.offset.unsigned_abs()).max().unwrap_or(0);
    2 * (slope + offset) + 4
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(s: &str, c: Carrier) -> String {
        eval(&parse(s, None).unwrap(), c, &0u64).unwrap().to_string()
    }

    #[test]
    fn parses_atoms_and_normalizes() {
        assert_eq!(show("FIN(5,3,4)", Carrier::Nat), "FIN(3..5)");
        assert_eq!(show("COFIN(1) | FIN(1)", Carrier::Nat), "ALL");
        assert_eq!(show("UP((2,1))", Carrier::Johnstone), "COLTAIL(2,1) | OMEGATAIL(1)");
        assert_eq!(show("PT(2,3) | COLTAIL(2,1) ∪ PT(1,ω)", Carrier::Johnstone), "COLTAIL(2,1) | PT(1,w)");
        assert_eq!(show("UP(a(2)) & UP(b)", Carrier::Ex334), "WTAIL(2)");
        assert_eq!(show("(W_PT(1) | W_PT(2)) & WTAIL(2)", Carrier::Ex334), "W_PT(2)");
    }

    #[test]
    fn wrong_grammar_and_parse_errors() {
        let ast = parse("PT(1,1)", None).unwrap();
        assert!(matches!(eval(&ast, Carrier::Nat, &0u64), Err(Error::WrongGrammar(_))));
        assert!(matches!(parse("FIN(n)", None), Err(Error::Parse(_))));
        assert!(matches!(parse("FIN(1", None), Err(Error::Parse(_))));
        assert!(matches!(parse("FOO(1)", None), Err(Error::Parse(_))));
        let ast = parse("PT(0,1)", None).unwrap();
        assert!(matches!(eval(&ast, Carrier::Johnstone, &0u64), Err(Error::Parse(_))));
    }

    #[test]
    fn templates_evaluate_concretely_and_eventually() {
        let ast = parse("UP((1,n)) & UP((2,2))", Some("n")).unwrap();
        assert_eq!(eval(&ast, Carrier::Johnstone, &5u64).unwrap().to_string(), "OMEGATAIL(5)");
        assert_eq!(eval(&ast, Carrier::Johnstone, &1u64).unwrap().to_string(), "OMEGATAIL(2)");
        let ev = eval(&ast, Carrier::Johnstone, &Affine::PARAM).unwrap();
        assert_eq!(ev.to_string(), "OMEGATAIL(n)");
        assert!(ev.limit().is_empty());
        let ast = parse("COFIN(0..2n+1)", Some("n")).unwrap();
        assert_eq!(eval(&ast, Carrier::Nat, &2u64).unwrap().to_string(), "COFIN(0..5)");
        assert_eq!(eval(&ast, Carrier::Nat, &Affine::PARAM).unwrap().to_string(), "COFIN(0..2n+1)");
    }
}
