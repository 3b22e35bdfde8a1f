//! Tropical differential polynomials `p = ⊕ a_M ⊙ ε_M`, their evaluation on
//! tuples of supports, and the tropical vanishing condition.
//!
//! A tuple `S` solves `p` when every vertex of `p(S)` lies in the term sets
//! `a_M ⊙ ε_M(S)` of at least two distinct monomials. Membership is read in
//! the term's vertex set, not in its Newton polygon.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::diff_algebra::{fmt_exponents, DerivativeKey};
use crate::error::{check_arity, Error, Result};
use crate::lattice::{grid, Point, PointSet};
use crate::supports::SupportSet;
use crate::tropical::VertexSet;

/// `ε_M = ⊙ x_{i,J}^{⊙ M_{i,J}}`
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TropMonomial {
    exponents: BTreeMap<DerivativeKey, u32>,
}

impl TropMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (DerivativeKey, u32)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (k, e) in exps {
            if e > 0 {
                *exponents.entry(k).or_insert(0) += e;
            }
        }
        TropMonomial { exponents }
    }

    pub fn exponents(&self) -> &BTreeMap<DerivativeKey, u32> {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `ε_M(S) = ⊙ Val_J(S_i)^{⊙ M_{i,J}}`.
    pub fn eval(&self, supports: &[SupportSet]) -> Result<VertexSet> {
        let arity = check_supports(supports)?;
        eval_monomial_unchecked(self, supports, arity)
    }
}

impl fmt::Display for TropMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_exponents(&self.exponents, f)
    }
}

fn check_supports(supports: &[SupportSet]) -> Result<usize> {
    let arity = supports.first().map(SupportSet::arity);
    if let Some(arity) = arity {
        for s in supports {
            check_arity(arity, s.arity())?;
        }
    }
    Ok(arity.unwrap_or(0))
}

fn eval_monomial_unchecked(
    monomial: &TropMonomial,
    supports: &[SupportSet],
    arity: usize,
) -> Result<VertexSet> {
    let mut acc = VertexSet::one(arity);
    for (key, &e) in &monomial.exponents {
        let s = supports.get(key.var).ok_or(Error::VariableCountMismatch {
            expected: key.var + 1,
            found: supports.len(),
        })?;
        let val = s.val(&key.order)?;
        if val.is_empty() {
            return Ok(VertexSet::zero(arity));
        }
        acc = acc.odot(&val.odot_power(e))?;
    }
    Ok(acc)
}

/// Free-function form of [`TropMonomial::eval`].
pub fn eval_monomial(monomial: &TropMonomial, supports: &[SupportSet]) -> Result<VertexSet> {
    monomial.eval(supports)
}

/// An element of `T[[t_1..t_m]]{x_1..x_n}`. Every coefficient is nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropPolynomial {
    arity: usize,
    nvars: usize,
    terms: BTreeMap<TropMonomial, VertexSet>,
}

impl TropPolynomial {
    pub fn zero(arity: usize, nvars: usize) -> Self {
        TropPolynomial { arity, nvars, terms: BTreeMap::new() }
    }

    /// Builds `⊕ a_M ⊙ ε_M`. Terms with `a_M = ∅` vanish and repeated
    /// monomials are merged with `⊕`.
    pub fn from_terms(
        arity: usize,
        nvars: usize,
        terms: impl IntoIterator<Item = (VertexSet, TropMonomial)>,
    ) -> Result<Self> {
        let mut out = Self::zero(arity, nvars);
        for (a, m) in terms {
            check_arity(arity, a.arity())?;
            for key in m.exponents.keys() {
                key.validate(arity, nvars)?;
            }
            if a.is_empty() {
                continue;
            }
            let merged = match out.terms.remove(&m) {
                Some(prev) => prev.oplus(&a)?,
                None => a,
            };
            out.terms.insert(m, merged);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in canonical order; a term's index in this order is the
    /// monomial index used in witness lists.
    pub fn terms(&self) -> &BTreeMap<TropMonomial, VertexSet> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_tuple(&self, supports: &[SupportSet]) -> Result<()> {
        if supports.len() != self.nvars {
            return Err(Error::VariableCountMismatch { expected: self.nvars, found: supports.len() });
        }
        for s in supports {
            check_arity(self.arity, s.arity())?;
        }
        Ok(())
    }

    /// The term sets `a_M ⊙ ε_M(S)` in canonical term order.
    pub fn term_sets(&self, supports: &[SupportSet]) -> Result<Vec<VertexSet>> {
        self.check_tuple(supports)?;
        self.terms
            .iter()
            .map(|(m, a)| a.odot(&eval_monomial_unchecked(m, supports, self.arity)?))
            .collect()
    }

    /// `p(S) = ⊕ a_M ⊙ ε_M(S)`.
    pub fn eval(&self, supports: &[SupportSet]) -> Result<VertexSet> {
        let sets = self.term_sets(supports)?;
        sets.iter().try_fold(VertexSet::zero(self.arity), |acc, s| acc.oplus(s))
    }

    /// Evaluates and records, for every vertex of `p(S)`, the terms whose
    /// vertex set contains it.
    pub fn is_solution(&self, supports: &[SupportSet]) -> Result<SolutionReport> {
        let term_sets = self.term_sets(supports)?;
        let evaluation =
            term_sets.iter().try_fold(VertexSet::zero(self.arity), |acc, s| acc.oplus(s))?;
        let witnesses: BTreeMap<Point, Vec<usize>> = evaluation
            .iter()
            .map(|v| {
                let idx = term_sets
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(v))
                    .map(|(i, _)| i)
                    .collect();
                (v.clone(), idx)
            })
            .collect();
        let solution = witnesses.values().all(|w| w.len() >= 2);
        Ok(SolutionReport { evaluation, term_sets, witnesses, solution })
    }
}

impl fmt::Display for TropPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("{}");
        }
        for (i, (m, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{a}")?;
            if !m.is_one() {
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of checking one tropical polynomial at a support tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    /// `p(S)`
    pub evaluation: VertexSet,
    /// `a_M ⊙ ε_M(S)` for each term, in canonical term order.
    pub term_sets: Vec<VertexSet>,
    /// Vertex of `p(S)` to the indices of the terms containing it.
    pub witnesses: BTreeMap<Point, Vec<usize>>,
    pub solution: bool,
}

impl SolutionReport {
    /// Vertices attained by fewer than two terms.
    pub fn unbalanced_vertices(&self) -> impl Iterator<Item = (&Point, &Vec<usize>)> + '_ {
        self.witnesses.iter().filter(|(_, w)| w.len() < 2)
    }
}

/// Reports for a family of tropical polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemReport {
    pub reports: Vec<SolutionReport>,
    pub solution: bool,
}

/// Conjunction of [`TropPolynomial::is_solution`] over `family`.
pub fn is_solution_system(family: &[TropPolynomial], supports: &[SupportSet]) -> Result<SystemReport> {
    let reports = family
        .iter()
        .map(|p| p.is_solution(supports))
        .collect::<Result<Vec<_>>>()?;
    let solution = reports.iter().all(|r| r.solution);
    Ok(SystemReport { reports, solution })
}

/// Search space for [`enumerate_solutions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    /// Candidate points lie in `[0, bounds]` componentwise.
    pub bounds: Point,
    /// Number of variables `n`.
    pub nvars: usize,
    /// At most this many points per component.
    pub max_points: usize,
    /// Refuse when the number of candidate tuples exceeds this.
    pub max_candidates: u128,
}

impl SearchBox {
    /// Number of candidate tuples, saturating at `u128::MAX`.
    pub fn candidate_count(&self) -> u128 {
        let cells = grid_size(&self.bounds);
        let per_component = subsets_up_to(cells, self.max_points as u128);
        (0..self.nvars).fold(1u128, |acc, _| acc.saturating_mul(per_component))
    }
}

fn grid_size(bounds: &Point) -> u128 {
    bounds
        .coords()
        .iter()
        .fold(1u128, |acc, &b| acc.saturating_mul(u128::from(b) + 1))
}

fn subsets_up_to(n: u128, k: u128) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for i in 0..=k.min(n) {
        total = total.saturating_add(binom);
        binom = binom.saturating_mul(n - i) / (i + 1);
    }
    total
}

/// All tuples of finite supports inside the search box that solve every
/// member of `family`, in lexicographic order.
pub fn enumerate_solutions(family: &[TropPolynomial], search: &SearchBox) -> Result<Vec<Vec<SupportSet>>> {
    let arity = search.bounds.arity();
    for p in family {
        check_arity(p.arity(), arity)?;
        if p.nvars() != search.nvars {
            return Err(Error::VariableCountMismatch { expected: p.nvars(), found: search.nvars });
        }
    }
    let count = search.candidate_count();
    if count > search.max_candidates {
        return Err(Error::CandidateCap { count, cap: search.max_candidates });
    }

    let cells = grid(&search.bounds);
    let mut components = Vec::new();
    let mut chosen = Vec::new();
    collect_subsets(&cells, 0, search.max_points, &mut chosen, &mut components);
    let mut components: Vec<SupportSet> = components
        .into_iter()
        .map(|pts| SupportSet::finite(PointSet::from_points(arity, pts).expect("grid arity")))
        .collect();
    components.sort();

    let base = components.len() as u128;
    let total = count;
    let hits: Vec<Vec<SupportSet>> = (0..total as u64)
        .into_par_iter()
        .map(|index| {
            let mut rest = u128::from(index);
            let mut tuple = vec![SupportSet::empty(arity); search.nvars];
            for slot in tuple.iter_mut().rev() {
                *slot = components[(rest % base) as usize].clone();
                rest /= base;
            }
            tuple
        })
        .filter_map(|tuple| match is_solution_system(family, &tuple) {
            Ok(report) if report.solution => Some(Ok(tuple)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hits)
}

fn collect_subsets(
    cells: &[Point],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<Point>,
    out: &mut Vec<Vec<Point>>,
) {
    out.push(chosen.clone());
    if remaining == 0 {
        return;
    }
    for i in start..cells.len() {
        chosen.push(cells[i].clone());
        collect_subsets(cells, i + 1, remaining - 1, chosen, out);
        chosen.pop();
    }
}
