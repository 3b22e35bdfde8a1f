use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::lexer::{tokenize, Tok, Token};
use super::ParseContext;
use crate::diff_algebra::{DerivativeKey, DiffMonomial, DiffPolynomial};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::lattice::{Point, PointSet};
use crate::series::PowerSeries;
use crate::supports::SupportSet;
use crate::trop_poly::{TropMonomial, TropPolynomial};
use crate::tropical::VertexSet;

pub(crate) struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    end: usize,
    ctx: &'a ParseContext,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &str, ctx: &'a ParseContext) -> Result<Self> {
        Ok(Parser { toks: tokenize(src)?, at: 0, end: src.trim_end().len(), ctx })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos(), message: message.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.tok.clone());
        self.at += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.at < self.toks.len() {
            self.error("unexpected trailing input")
        } else {
            Ok(())
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.at += 1;
                Ok(v)
            }
            _ => self.error("expected an integer"),
        }
    }

    fn small_int(&mut self) -> Result<u32> {
        let pos = self.pos();
        let v = self.int()?;
        v.to_u32().ok_or(Error::Parse { position: pos, message: format!("integer {v} out of range") })
    }

    // ---- algebraic expressions ---------------------------------------

    fn constant(&self, c: FieldElement) -> DiffPolynomial {
        let s = PowerSeries::constant(self.ctx.m, self.ctx.field, c).expect("field checked");
        DiffPolynomial::from_series(self.ctx.n, s)
    }

    pub(crate) fn expr(&mut self) -> Result<DiffPolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<DiffPolynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<DiffPolynomial> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<DiffPolynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.small_int()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<DiffPolynomial> {
        let start = self.pos();
        match self.bump() {
            Some(Tok::Int(num)) => {
                let value = if self.eat('/') {
                    let den = self.int()?;
                    if den.is_zero() {
                        return Err(Error::Parse { position: start, message: "zero denominator".into() });
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(self.constant(FieldElement::rational(value)))
            }
            Some(Tok::Sym('(')) => {
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => self.identifier(&name, start),
            Some(Tok::Sym(c)) => {
                self.at -= 1;
                self.error(format!("unexpected '{c}'"))
            }
            None => self.error("unexpected end of input"),
        }
    }

    fn identifier(&mut self, name: &str, start: usize) -> Result<DiffPolynomial> {
        let err = |message: String| Err(Error::Parse { position: start, message });
        if name == "sqrtd" {
            return match self.ctx.field {
                Field::Quadratic(d) => Ok(self.constant(FieldElement::sqrt_d(d))),
                Field::Rationals => err("sqrtd needs a quadratic field".into()),
            };
        }
        if name == "O" {
            return self.big_o(start);
        }
        if let Some(axis) = indexed_name(name, 't', self.ctx.m) {
            let axis = match axis {
                Ok(a) => a,
                Err(msg) => return err(msg),
            };
            let s = PowerSeries::variable(self.ctx.m, self.ctx.field, axis)?;
            return Ok(DiffPolynomial::from_series(self.ctx.n, s));
        }
        if let Some(var) = indexed_name(name, 'x', self.ctx.n) {
            let var = match var {
                Ok(v) => v,
                Err(msg) => return err(msg),
            };
            let order = self.bracket_index()?;
            let key = DerivativeKey::new(var, order);
            return DiffPolynomial::variable(self.ctx.m, self.ctx.n, self.ctx.field, key);
        }
        err(format!("unknown identifier {name:?}"))
    }

    /// `O(t^N)`: the zero series known below total degree `N`.
    fn big_o(&mut self, start: usize) -> Result<DiffPolynomial> {
        self.expect('(')?;
        match self.bump() {
            Some(Tok::Ident(t)) if t == "t" => {}
            _ => return Err(Error::Parse { position: start, message: "expected O(t^N)".into() }),
        }
        self.expect('^')?;
        let n = self.small_int()?;
        self.expect(')')?;
        let s = PowerSeries::big_o(self.ctx.m, self.ctx.field, n);
        Ok(DiffPolynomial::from_series(self.ctx.n, s))
    }

    fn bracket_index(&mut self) -> Result<Point> {
        self.expect('[')?;
        let start = self.pos();
        let mut coords = vec![self.small_int()?];
        while self.eat(',') {
            coords.push(self.small_int()?);
        }
        self.expect(']')?;
        if coords.len() != self.ctx.m {
            return Err(Error::Parse {
                position: start,
                message: format!("derivative index has {} entries, expected {}", coords.len(), self.ctx.m),
            });
        }
        Ok(Point::new(coords))
    }

    // ---- point collections -------------------------------------------

    fn point(&mut self) -> Result<Point> {
        let start = self.pos();
        self.expect('(')?;
        let mut coords = vec![self.small_int()?];
        while self.eat(',') {
            coords.push(self.small_int()?);
        }
        self.expect(')')?;
        if coords.len() != self.ctx.m {
            return Err(Error::Parse {
                position: start,
                message: format!("point has {} coordinates, expected {}", coords.len(), self.ctx.m),
            });
        }
        Ok(Point::new(coords))
    }

    fn braced_points(&mut self) -> Result<PointSet> {
        self.expect('{')?;
        let mut set = PointSet::new(self.ctx.m);
        if self.eat('}') {
            return Ok(set);
        }
        set.insert(self.point()?)?;
        while self.eat(',') {
            set.insert(self.point()?)?;
        }
        self.expect('}')?;
        Ok(set)
    }

    pub(crate) fn support(&mut self) -> Result<SupportSet> {
        let mut explicit = PointSet::new(self.ctx.m);
        let mut cones = PointSet::new(self.ctx.m);
        loop {
            if matches!(self.peek(), Some(Tok::Ident(c)) if c == "cone") {
                self.at += 1;
                cones = cones.union(&self.braced_points()?)?;
            } else {
                explicit = explicit.union(&self.braced_points()?)?;
            }
            if !self.eat('+') {
                break;
            }
        }
        SupportSet::normalize(explicit, cones)
    }

    pub(crate) fn vertex_set(&mut self) -> Result<VertexSet> {
        Ok(VertexSet::new(&self.braced_points()?))
    }

    pub(crate) fn trop_poly(&mut self) -> Result<TropPolynomial> {
        let mut terms = Vec::new();
        loop {
            let coefficient = self.vertex_set()?;
            let mut exps = Vec::new();
            while self.eat('*') {
                let start = self.pos();
                let var = match self.bump() {
                    Some(Tok::Ident(name)) => match indexed_name(&name, 'x', self.ctx.n) {
                        Some(Ok(v)) => v,
                        Some(Err(msg)) => return Err(Error::Parse { position: start, message: msg }),
                        None => {
                            return Err(Error::Parse {
                                position: start,
                                message: format!("expected a differential variable, found {name:?}"),
                            })
                        }
                    },
                    _ => return Err(Error::Parse { position: start, message: "expected a differential variable".into() }),
                };
                let order = self.bracket_index()?;
                let e = if self.eat('^') { self.small_int()? } else { 1 };
                exps.push((DerivativeKey::new(var, order), e));
            }
            terms.push((coefficient, TropMonomial::from_exponents(exps)));
            if !self.eat('+') {
                break;
            }
        }
        TropPolynomial::from_terms(self.ctx.m, self.ctx.n, terms)
    }
}

/// Resolves `t3` / `x2` (1-based) or the bare letter when the count is one.
/// Returns `None` when `name` is not of this family.
fn indexed_name(name: &str, letter: char, count: usize) -> Option<std::result::Result<usize, String>> {
    let rest = name.strip_prefix(letter)?;
    if rest.is_empty() {
        return Some(if count == 1 {
            Ok(0)
        } else {
            Err(format!("bare '{letter}' is ambiguous with {count} choices; use {letter}1..{letter}{count}"))
        });
    }
    if !rest.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some(match rest.parse::<usize>() {
        Ok(k) if (1..=count).contains(&k) => Ok(k - 1),
        _ => Err(format!("{name} is outside {letter}1..{letter}{count}")),
    })
}

pub(crate) fn series_from_poly(p: DiffPolynomial, ctx: &ParseContext) -> Result<PowerSeries> {
    let mut out = PowerSeries::zero(ctx.m, ctx.field);
    for (m, c) in p.terms() {
        if *m != DiffMonomial::one() {
            return Err(Error::InvalidInput(format!(
                "series expression contains the differential variable {m}"
            )));
        }
        out = c.clone();
    }
    Ok(out)
}
