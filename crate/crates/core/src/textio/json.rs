use serde_json::{json, Map, Value};

use super::print::{print_diff_poly, print_series};
use crate::diff_algebra::{DerivativeKey, DiffPolynomial};
use crate::lattice::{Point, PointSet};
use crate::series::{Precision, PowerSeries};
use crate::supports::SupportSet;
use crate::trop_poly::{SolutionReport, SystemReport, TropPolynomial};
use crate::tropical::VertexSet;

pub fn point_json(p: &Point) -> Value {
    json!(p.coords())
}

fn point_set_json(s: &PointSet) -> Value {
    Value::Array(s.iter().map(point_json).collect())
}

/// `[[1,4],[4,1]]`
pub fn vertex_set_json(v: &VertexSet) -> Value {
    point_set_json(v.points())
}

/// `{"explicit": [...], "cones": [...]}`
pub fn support_json(s: &SupportSet) -> Value {
    json!({
        "explicit": point_set_json(s.explicit()),
        "cones": point_set_json(s.cone_generators()),
    })
}

pub fn series_json(s: &PowerSeries) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .iter()
        .map(|(j, c)| json!({ "exponent": point_json(j), "coefficient": c.to_string() }))
        .collect();
    let precision = match s.precision() {
        Precision::Exact => Value::Null,
        Precision::TruncatedAt(n) => json!(n),
    };
    json!({ "text": print_series(s), "terms": terms, "precision": precision })
}

fn monomial_json<'a>(exps: impl Iterator<Item = (&'a DerivativeKey, &'a u32)>) -> Value {
    Value::Array(
        exps.map(|(k, e)| json!({ "var": k.var + 1, "order": point_json(&k.order), "power": e }))
            .collect(),
    )
}

pub fn diff_poly_json(p: &DiffPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| json!({ "coefficient": series_json(c), "monomial": monomial_json(m.exponents().iter()) }))
        .collect();
    json!({ "m": p.arity(), "n": p.nvars(), "text": print_diff_poly(p), "terms": terms })
}

pub fn trop_poly_json(p: &TropPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, a)| json!({ "coefficient": vertex_set_json(a), "monomial": monomial_json(m.exponents().iter()) }))
        .collect();
    json!({ "m": p.arity(), "n": p.nvars(), "text": p.to_string(), "terms": terms })
}

/// `{"evaluation": [[..]], "witnesses": {"(2,0)": [0, 1]}, "solution": bool}`
pub fn report_json(r: &SolutionReport) -> Value {
    let witnesses: Map<String, Value> =
        r.witnesses.iter().map(|(v, w)| (v.to_string(), json!(w))).collect();
    json!({
        "evaluation": vertex_set_json(&r.evaluation),
        "witnesses": witnesses,
        "solution": r.solution,
    })
}

pub fn system_report_json(r: &SystemReport) -> Value {
    json!({
        "reports": r.reports.iter().map(report_json).collect::<Vec<_>>(),
        "solution": r.solution,
    })
}
