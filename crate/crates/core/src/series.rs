//! Multivariate formal power series over an exact field.
//!
//! A series is either exact (a polynomial, every coefficient known) or
//! truncated at total degree `N`, meaning the coefficients of total degree
//! `< N` are authoritative and nothing is known beyond. Arithmetic on
//! truncated series keeps the largest precision that is still sound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{check_arity, Error, Result};
use crate::field::{Field, FieldElement};
use crate::lattice::{Point, PointSet};
use crate::supports::SupportSet;
use crate::tropical::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Precision {
    Exact,
    /// Coefficients of total degree `< N` are known.
    TruncatedAt(u32),
}

impl Precision {
    fn bound(self) -> Option<u64> {
        match self {
            Precision::Exact => None,
            Precision::TruncatedAt(n) => Some(u64::from(n)),
        }
    }

    fn from_bound(bound: Option<u64>) -> Precision {
        match bound {
            None => Precision::Exact,
            Some(n) => Precision::TruncatedAt(u32::try_from(n).unwrap_or(u32::MAX)),
        }
    }

    fn min(self, other: Precision) -> Precision {
        match (self.bound(), other.bound()) {
            (None, b) | (b, None) => Precision::from_bound(b),
            (Some(a), Some(b)) => Precision::from_bound(Some(a.min(b))),
        }
    }

    /// Whether the coefficient of `t^J` is known.
    pub fn covers(self, j: &Point) -> bool {
        self.bound().is_none_or(|n| j.total_degree() < n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    arity: usize,
    field: Field,
    terms: BTreeMap<Point, FieldElement>,
    precision: Precision,
}

impl PowerSeries {
    pub fn zero(arity: usize, field: Field) -> Self {
        PowerSeries { arity, field, terms: BTreeMap::new(), precision: Precision::Exact }
    }

    pub fn one(arity: usize, field: Field) -> Self {
        Self::constant(arity, field, FieldElement::one()).expect("1 is in every field")
    }

    pub fn constant(arity: usize, field: Field, c: FieldElement) -> Result<Self> {
        Self::monomial(arity, field, c, Point::origin(arity))
    }

    /// `c * t^J`
    pub fn monomial(arity: usize, field: Field, c: FieldElement, exponent: Point) -> Result<Self> {
        Self::from_terms(arity, field, [(exponent, c)])
    }

    /// The coordinate function `t_{axis+1}`.
    pub fn variable(arity: usize, field: Field, axis: usize) -> Result<Self> {
        if axis >= arity {
            return Err(Error::InvalidInput(format!("axis {axis} out of range for arity {arity}")));
        }
        Self::monomial(arity, field, FieldElement::one(), Point::unit(arity, axis))
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(
        arity: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Point, FieldElement)>,
    ) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (j, c) in terms {
            check_arity(arity, j.arity())?;
            check_field(field, c.field())?;
            accumulate(&mut out, j, c);
        }
        Ok(PowerSeries { arity, field, terms: out, precision: Precision::Exact })
    }

    /// The zero series known only below total degree `n`, i.e. `O(t^n)`.
    pub fn big_o(arity: usize, field: Field, n: u32) -> Self {
        PowerSeries { arity, field, terms: BTreeMap::new(), precision: Precision::TruncatedAt(n) }
    }

    /// Forgets everything at total degree `>= n`.
    pub fn truncate(&self, n: u32) -> Self {
        let mut out = self.clone();
        out.precision = self.precision.min(Precision::TruncatedAt(n));
        out.drop_unknown();
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision == Precision::Exact
    }

    pub fn terms(&self) -> &BTreeMap<Point, FieldElement> {
        &self.terms
    }

    /// True only for the exact zero series.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.is_exact()
    }

    /// Exact and supported at the origin only (or zero).
    pub fn is_constant(&self) -> bool {
        self.is_exact() && self.terms.keys().all(Point::is_origin)
    }

    /// The coefficient of `t^J`.
    pub fn coefficient(&self, j: &Point) -> Result<FieldElement> {
        check_arity(self.arity, j.arity())?;
        if !self.precision.covers(j) {
            return Err(Error::Precision(format!(
                "coefficient of t^{j} is beyond the series precision {:?}",
                self.precision
            )));
        }
        Ok(self.terms.get(j).cloned().unwrap_or_else(FieldElement::zero))
    }

    /// The value at `t = 0`.
    pub fn constant_term(&self) -> Result<FieldElement> {
        self.coefficient(&Point::origin(self.arity))
    }

    /// Smallest total degree of a known nonzero term, or the precision bound
    /// when none is known. `None` means the exact zero series.
    fn order(&self) -> Option<u64> {
        self.terms.keys().map(Point::total_degree).min().or(self.precision.bound())
    }

    fn drop_unknown(&mut self) {
        if let Some(n) = self.precision.bound() {
            self.terms.retain(|j, _| j.total_degree() < n);
        }
    }

    fn compatible(&self, other: &PowerSeries) -> Result<Field> {
        check_arity(self.arity, other.arity)?;
        self.field.join(other.field)
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let field = self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (j, c) in &other.terms {
            accumulate(&mut terms, j.clone(), c.clone());
        }
        let mut out =
            PowerSeries { arity: self.arity, field, terms, precision: self.precision.min(other.precision) };
        out.drop_unknown();
        Ok(out)
    }

    pub fn neg(&self) -> PowerSeries {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.add(&other.neg())
    }

    /// Product; for truncated factors the precision is
    /// `min(N_f + ord g, N_g + ord f)`.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let field = self.compatible(other)?;
        let bound = match (self.precision.bound(), other.precision.bound()) {
            (None, None) => None,
            (nf, ng) => {
                let via_f = nf.and_then(|n| other.order().map(|o| n + o));
                let via_g = ng.and_then(|n| self.order().map(|o| n + o));
                match (via_f, via_g) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                }
            }
        };
        let mut terms = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let k = i.add(j);
                if bound.is_some_and(|n| k.total_degree() >= n) {
                    continue;
                }
                accumulate(&mut terms, k, a * b);
            }
        }
        Ok(PowerSeries { arity: self.arity, field, terms, precision: Precision::from_bound(bound) })
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Result<PowerSeries> {
        let field = self.field.join(c.field())?;
        let terms = self
            .terms
            .iter()
            .map(|(j, a)| (j.clone(), a * c))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        Ok(PowerSeries { arity: self.arity, field, terms, precision: self.precision })
    }

    pub fn pow(&self, n: u32) -> PowerSeries {
        let mut acc = PowerSeries::one(self.arity, self.field);
        for _ in 0..n {
            acc = acc.mul(self).expect("same arity and field");
        }
        acc
    }

    /// Formal partial derivative along `axis` (0-based).
    pub fn derive(&self, axis: usize) -> Result<PowerSeries> {
        if axis >= self.arity {
            return Err(Error::InvalidInput(format!(
                "axis {axis} out of range for arity {}",
                self.arity
            )));
        }
        let mut terms = BTreeMap::new();
        for (j, c) in &self.terms {
            let e = j.coords()[axis];
            if e == 0 {
                continue;
            }
            let lowered = j.checked_sub(&Point::unit(self.arity, axis)).expect("e > 0");
            terms.insert(lowered, c.scale(&BigRational::from_integer(e.into())));
        }
        let precision = match self.precision {
            Precision::Exact => Precision::Exact,
            Precision::TruncatedAt(n) => Precision::TruncatedAt(n.saturating_sub(1)),
        };
        Ok(PowerSeries { arity: self.arity, field: self.field, terms, precision })
    }

    /// `Θ(I)`: differentiate `i_k` times along each axis `k`.
    pub fn theta(&self, order: &Point) -> Result<PowerSeries> {
        check_arity(self.arity, order.arity())?;
        let mut out = self.clone();
        for (axis, &times) in order.coords().iter().enumerate() {
            for _ in 0..times {
                out = out.derive(axis)?;
            }
        }
        Ok(out)
    }

    /// `Supp(φ)`. Only defined for exact series.
    pub fn support(&self) -> Result<SupportSet> {
        if !self.is_exact() {
            return Err(Error::Precision(
                "the support of a truncated series is not determined".to_string(),
            ));
        }
        let points = PointSet::from_points(self.arity, self.terms.keys().cloned())?;
        Ok(SupportSet::finite(points))
    }

    /// `trop(φ) = Vert(Supp(φ))`.
    pub fn trop(&self) -> Result<VertexSet> {
        Ok(self.support()?.vertices())
    }

    /// The Taylor coefficient `a_J = J! * [t^J] φ`, so `φ = Σ a_J t^J / J!`.
    pub fn taylor_coefficient(&self, j: &Point) -> Result<FieldElement> {
        Ok(self.coefficient(j)?.scale(&BigRational::from_integer(factorial(j))))
    }

    /// All nonzero known Taylor coefficients.
    pub fn taylor_coefficients(&self) -> BTreeMap<Point, FieldElement> {
        self.terms
            .iter()
            .map(|(j, c)| (j.clone(), c.scale(&BigRational::from_integer(factorial(j)))))
            .collect()
    }

    /// Inverse of [`taylor_coefficients`](Self::taylor_coefficients).
    pub fn from_taylor_coefficients(
        arity: usize,
        field: Field,
        coeffs: impl IntoIterator<Item = (Point, FieldElement)>,
    ) -> Result<Self> {
        let terms: Vec<_> = coeffs
            .into_iter()
            .map(|(j, a)| {
                let scale = BigRational::one() / BigRational::from_integer(factorial(&j));
                (j, a.scale(&scale))
            })
            .collect();
        Self::from_terms(arity, field, terms)
    }
}

/// `J! = j_1! ... j_m!`
pub fn factorial(j: &Point) -> BigInt {
    j.coords()
        .iter()
        .flat_map(|&c| 1..=c)
        .fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn check_field(field: Field, value: Field) -> Result<()> {
    if field.contains(value) {
        Ok(())
    } else {
        Err(Error::FieldMismatch { left: field.to_string(), right: value.to_string() })
    }
}

fn accumulate(terms: &mut BTreeMap<Point, FieldElement>, j: Point, c: FieldElement) {
    use std::collections::btree_map::Entry;
    match terms.entry(j) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}
