use std::fmt::{self, Write};

use num_traits::{Signed, Zero};

use crate::diff_algebra::DiffPolynomial;
use crate::field::FieldElement;
use crate::lattice::Point;
use crate::series::{Precision, PowerSeries};

fn t_monomial(j: &Point) -> String {
    let single = j.arity() == 1;
    let mut out = String::new();
    for (axis, &e) in j.coords().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        if single {
            out.push('t');
        } else {
            let _ = write!(out, "t{}", axis + 1);
        }
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
    out
}

/// Appends `± c*mono` to `out`, choosing the sign so that the printed
/// magnitude reads naturally.
fn push_term(out: &mut String, c: &FieldElement, mono: &str) {
    let negative = match c {
        FieldElement::Rational(a) => a.is_negative(),
        FieldElement::Quadratic { a, b, .. } => a.is_zero() && b.is_negative(),
    };
    let shown = if negative { (-c).to_string() } else { c.to_string() };
    let body = match (mono.is_empty(), shown == "1") {
        (true, _) => shown,
        (false, true) => mono.to_string(),
        (false, false) => format!("{shown}*{mono}"),
    };
    match (out.is_empty(), negative) {
        (true, false) => out.push_str(&body),
        (true, true) => {
            out.push('-');
            out.push_str(&body);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(&body);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(&body);
        }
    }
}

pub fn print_series(s: &PowerSeries) -> String {
    let mut out = String::new();
    for (j, c) in s.terms() {
        push_term(&mut out, c, &t_monomial(j));
    }
    match s.precision() {
        Precision::Exact if out.is_empty() => out.push('0'),
        Precision::Exact => {}
        Precision::TruncatedAt(n) => {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let _ = write!(out, "O(t^{n})");
        }
    }
    out
}

pub fn print_diff_poly(p: &DiffPolynomial) -> String {
    let mut out = String::new();
    for (m, c) in p.terms() {
        let mono = if m.is_one() { String::new() } else { m.to_string() };
        if c.is_constant() {
            let c0 = c.constant_term().expect("exact");
            push_term(&mut out, &c0, &mono);
        } else {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let _ = write!(out, "({})", print_series(c));
            if !mono.is_empty() {
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_series(self))
    }
}

impl fmt::Display for DiffPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_diff_poly(self))
    }
}
