//! Text syntax for every value kind, plus JSON renderings.
//!
//! ```text
//! series        1/2*t2^2 + sqrtd*t1*t2 + t1^2 + O(t^5)
//! diff. poly    x1[1,0]^2 - 4*x1[0,0]     (-t1^2 + t2^2)*x1[1,0,1,0]
//! support       {(1,4),(2,3)} + cone{(0,5)}     {}
//! vertex set    {(0,2),(2,0)}
//! trop. poly    {(0,0)}*x1[0,0] + {(0,0)}*x1[1,0]^2
//! ```
//!
//! Numbers are exact integers or fractions `p/q`; `sqrtd` is `√d` of the
//! context field. `t` and `x` without an index are accepted when `m = 1`
//! and `n = 1` respectively. Whitespace is insignificant.

mod infer;
mod json;
mod lexer;
mod parser;
mod print;

use crate::diff_algebra::{DiffPolynomial, DiffSystem};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lattice::Point;
use crate::series::PowerSeries;
use crate::supports::SupportSet;
use crate::trop_poly::TropPolynomial;
use crate::tropical::VertexSet;

pub use infer::{infer_dimensions, Dimensions};
pub use json::{
    diff_poly_json, point_json, report_json, series_json, support_json, system_report_json,
    trop_poly_json, vertex_set_json,
};
pub use print::{print_diff_poly, print_series};

use parser::{series_from_poly, Parser};

/// Arity `m`, variable count `n` and coefficient field for parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseContext {
    pub m: usize,
    pub n: usize,
    pub field: Field,
}

impl ParseContext {
    pub fn new(m: usize, n: usize, field: Field) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidInput("m and n must be at least 1".to_string()));
        }
        if let Field::Quadratic(d) = field {
            Field::quadratic(d)?;
        }
        Ok(ParseContext { m, n, field })
    }
}

pub fn parse_diff_poly(text: &str, ctx: &ParseContext) -> Result<DiffPolynomial> {
    let mut p = Parser::new(text, ctx)?;
    let poly = p.expr()?;
    p.finish()?;
    Ok(poly)
}

pub fn parse_series(text: &str, ctx: &ParseContext) -> Result<PowerSeries> {
    series_from_poly(parse_diff_poly(text, ctx)?, ctx)
}

pub fn parse_support(text: &str, ctx: &ParseContext) -> Result<SupportSet> {
    let mut p = Parser::new(text, ctx)?;
    let s = p.support()?;
    p.finish()?;
    Ok(s)
}

pub fn parse_vertex_set(text: &str, ctx: &ParseContext) -> Result<VertexSet> {
    let mut p = Parser::new(text, ctx)?;
    let s = p.vertex_set()?;
    p.finish()?;
    Ok(s)
}

pub fn parse_trop_poly(text: &str, ctx: &ParseContext) -> Result<TropPolynomial> {
    let mut p = Parser::new(text, ctx)?;
    let t = p.trop_poly()?;
    p.finish()?;
    Ok(t)
}

/// A multi-index such as `(1,0)`.
pub fn parse_point(text: &str, ctx: &ParseContext) -> Result<Point> {
    let vs = parse_vertex_set(&format!("{{{text}}}"), ctx)?;
    let first = vs.iter().next().cloned();
    first.ok_or(Error::Parse { position: 0, message: "expected a point".into() })
}

/// A `;`-separated tuple of supports, e.g. `{(2,0)};{}`.
pub fn parse_support_tuple(text: &str, ctx: &ParseContext) -> Result<Vec<SupportSet>> {
    split_tuple(text).map(|part| parse_support(part, ctx)).collect()
}

/// A `;`-separated tuple of series.
pub fn parse_series_tuple(text: &str, ctx: &ParseContext) -> Result<Vec<PowerSeries>> {
    split_tuple(text).map(|part| parse_series(part, ctx)).collect()
}

fn split_tuple(text: &str) -> impl Iterator<Item = &str> {
    text.split(';').map(str::trim)
}

/// A system file: one differential polynomial per line; `#` starts a
/// comment and blank lines are skipped.
pub fn parse_system(text: &str, ctx: &ParseContext) -> Result<DiffSystem> {
    let mut polys = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        if !content.trim().is_empty() {
            let poly = parse_diff_poly(content, ctx).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse { position: offset + position, message },
                other => other,
            })?;
            polys.push(poly);
        }
        offset += line.len();
    }
    DiffSystem::new(polys)
}
