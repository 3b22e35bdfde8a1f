//! Differential polynomials `P = Σ α_M E_M` over power series coefficients.
//!
//! The derivations `δ_k = ∂/∂t_k` act on coefficients by formal
//! differentiation and on the derivative variables by `δ_k x_{i,J} =
//! x_{i,J+e_k}`, extended to products with the Leibniz rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;

use crate::error::{check_arity, Error, Result};
use crate::field::{Field, FieldElement};
use crate::lattice::{grid, Point};
use crate::series::PowerSeries;
use crate::trop_poly::{TropMonomial, TropPolynomial};

/// The derivative variable `x_{i,J}`; `var` is 0-based and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivativeKey {
    pub var: usize,
    pub order: Point,
}

impl DerivativeKey {
    pub fn new(var: usize, order: impl Into<Point>) -> Self {
        DerivativeKey { var, order: order.into() }
    }

    /// `x_{i,J+e_axis}`
    pub fn shifted(&self, axis: usize) -> DerivativeKey {
        let unit = Point::unit(self.order.arity(), axis);
        DerivativeKey { var: self.var, order: self.order.add(&unit) }
    }

    pub(crate) fn validate(&self, arity: usize, nvars: usize) -> Result<()> {
        check_arity(arity, self.order.arity())?;
        if self.var >= nvars {
            return Err(Error::InvalidInput(format!(
                "variable x{} outside x1..x{nvars}",
                self.var + 1
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DerivativeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}[", self.var + 1)?;
        for (i, c) in self.order.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Sparse exponent map shared by classical and tropical monomials.
pub(crate) fn fmt_exponents(exps: &BTreeMap<DerivativeKey, u32>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, (key, &e)) in exps.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        write!(f, "{key}")?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// A differential monomial `E_M = Π x_{i,J}^{M_{i,J}}`, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiffMonomial {
    exponents: BTreeMap<DerivativeKey, u32>,
}

impl DiffMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(key: DerivativeKey) -> Self {
        DiffMonomial { exponents: BTreeMap::from([(key, 1)]) }
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (DerivativeKey, u32)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (k, e) in exps {
            if e > 0 {
                *exponents.entry(k).or_insert(0) += e;
            }
        }
        DiffMonomial { exponents }
    }

    pub fn exponents(&self) -> &BTreeMap<DerivativeKey, u32> {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    /// `max ||J||_inf` over the variables that occur.
    pub fn order(&self) -> u32 {
        self.exponents.keys().map(|k| k.order.max_norm()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &DiffMonomial) -> DiffMonomial {
        let mut out = self.clone();
        for (k, e) in &other.exponents {
            *out.exponents.entry(k.clone()).or_insert(0) += e;
        }
        out
    }

    /// Leibniz rule: `δ_axis E_M` as a list of `(multiplicity, monomial)`.
    fn derive(&self, axis: usize) -> Vec<(u32, DiffMonomial)> {
        self.exponents
            .iter()
            .map(|(key, &e)| {
                let mut exps = self.exponents.clone();
                if e == 1 {
                    exps.remove(key);
                } else {
                    exps.insert(key.clone(), e - 1);
                }
                *exps.entry(key.shifted(axis)).or_insert(0) += 1;
                (e, DiffMonomial { exponents: exps })
            })
            .collect()
    }

    pub fn to_tropical(&self) -> TropMonomial {
        TropMonomial::from_exponents(self.exponents.clone())
    }
}

impl fmt::Display for DiffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        fmt_exponents(&self.exponents, f)
    }
}

/// An element of `K[[t_1..t_m]]{x_1..x_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffPolynomial {
    arity: usize,
    nvars: usize,
    field: Field,
    terms: BTreeMap<DiffMonomial, PowerSeries>,
}

impl DiffPolynomial {
    pub fn zero(arity: usize, nvars: usize, field: Field) -> Self {
        DiffPolynomial { arity, nvars, field, terms: BTreeMap::new() }
    }

    /// The polynomial with the single term `α * 1`.
    pub fn from_series(nvars: usize, coefficient: PowerSeries) -> Self {
        let mut p = Self::zero(coefficient.arity(), nvars, coefficient.field());
        p.push(DiffMonomial::one(), coefficient);
        p
    }

    pub fn variable(arity: usize, nvars: usize, field: Field, key: DerivativeKey) -> Result<Self> {
        key.validate(arity, nvars)?;
        let mut p = Self::zero(arity, nvars, field);
        p.push(DiffMonomial::var(key), PowerSeries::one(arity, field));
        Ok(p)
    }

    pub fn from_terms(
        arity: usize,
        nvars: usize,
        field: Field,
        terms: impl IntoIterator<Item = (PowerSeries, DiffMonomial)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity, nvars, field);
        for (coefficient, monomial) in terms {
            check_arity(arity, coefficient.arity())?;
            p.field = p.field.join(coefficient.field())?;
            for key in monomial.exponents.keys() {
                key.validate(arity, nvars)?;
            }
            p.push(monomial, coefficient);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<DiffMonomial, PowerSeries> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal order of a derivative variable that occurs.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(DiffMonomial::order).max().unwrap_or(0)
    }

    /// Whether every coefficient is an exact series.
    pub fn is_exact(&self) -> bool {
        self.terms.values().all(PowerSeries::is_exact)
    }

    fn push(&mut self, monomial: DiffMonomial, coefficient: PowerSeries) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(e) => {
                if !coefficient.is_zero() {
                    e.insert(coefficient);
                }
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&coefficient).expect("checked by caller");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn compatible(&self, other: &DiffPolynomial) -> Result<Field> {
        check_arity(self.arity, other.arity)?;
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch { expected: self.nvars, found: other.nvars });
        }
        self.field.join(other.field)
    }

    pub fn add(&self, other: &DiffPolynomial) -> Result<DiffPolynomial> {
        let field = self.compatible(other)?;
        let mut out = self.clone();
        out.field = field;
        for (m, c) in &other.terms {
            out.push(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> DiffPolynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &DiffPolynomial) -> Result<DiffPolynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &DiffPolynomial) -> Result<DiffPolynomial> {
        let field = self.compatible(other)?;
        let mut out = Self::zero(self.arity, self.nvars, field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.push(m1.mul(m2), c1.mul(c2)?);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> DiffPolynomial {
        let one = PowerSeries::one(self.arity, self.field);
        let mut acc = Self::from_series(self.nvars, one);
        for _ in 0..n {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplies every coefficient by the series `s`.
    pub fn mul_series(&self, s: &PowerSeries) -> Result<DiffPolynomial> {
        check_arity(self.arity, s.arity())?;
        let field = self.field.join(s.field())?;
        let mut out = Self::zero(self.arity, self.nvars, field);
        for (m, c) in &self.terms {
            out.push(m.clone(), c.mul(s)?);
        }
        Ok(out)
    }

    /// `δ_axis P` (0-based axis).
    pub fn derive(&self, axis: usize) -> Result<DiffPolynomial> {
        if axis >= self.arity {
            return Err(Error::InvalidInput(format!(
                "axis {axis} out of range for arity {}",
                self.arity
            )));
        }
        let mut out = Self::zero(self.arity, self.nvars, self.field);
        for (m, c) in &self.terms {
            out.push(m.clone(), c.derive(axis)?);
            for (mult, dm) in m.derive(axis) {
                out.push(dm, c.scalar_mul(&FieldElement::from_integer(mult))?);
            }
        }
        Ok(out)
    }

    /// `Θ(I) P`, applying `δ_k` `i_k` times for each axis.
    pub fn theta_poly(&self, order: &Point) -> Result<DiffPolynomial> {
        check_arity(self.arity, order.arity())?;
        let mut out = self.clone();
        for (axis, &times) in order.coords().iter().enumerate() {
            for _ in 0..times {
                out = out.derive(axis)?;
            }
        }
        Ok(out)
    }

    /// `P(φ)`: substitutes `Θ(J) φ_i` for every `x_{i,J}` and expands.
    pub fn evaluate(&self, phi: &[PowerSeries]) -> Result<PowerSeries> {
        if phi.len() != self.nvars {
            return Err(Error::VariableCountMismatch { expected: self.nvars, found: phi.len() });
        }
        let mut field = self.field;
        for s in phi {
            check_arity(self.arity, s.arity())?;
            field = field.join(s.field())?;
        }
        let mut derivatives: HashMap<&DerivativeKey, PowerSeries> = HashMap::new();
        let mut total = PowerSeries::zero(self.arity, field);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (key, &e) in &m.exponents {
                if !derivatives.contains_key(key) {
                    derivatives.insert(key, phi[key.var].theta(&key.order)?);
                }
                term = term.mul(&derivatives[key].pow(e))?;
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }

    /// `F_I = (Θ(I) P)|_{t=0}`: a polynomial with constant coefficients in
    /// the variables `x_{i,J}`.
    pub fn taylor_coeff_poly(&self, order: &Point) -> Result<DiffPolynomial> {
        let derived = self.theta_poly(order)?;
        let mut out = Self::zero(self.arity, self.nvars, self.field);
        for (m, c) in &derived.terms {
            let c0 = c.constant_term()?;
            out.push(m.clone(), PowerSeries::constant(self.arity, self.field, c0)?);
        }
        Ok(out)
    }

    /// Evaluates a polynomial with constant coefficients at field values
    /// for the variables, as used for the Taylor-coefficient polynomials.
    pub fn substitute<F>(&self, mut value: F) -> Result<FieldElement>
    where
        F: FnMut(&DerivativeKey) -> FieldElement,
    {
        let mut total = FieldElement::zero();
        for (m, c) in &self.terms {
            if !c.is_constant() {
                return Err(Error::InvalidInput(format!(
                    "substitution needs constant coefficients, found a series coefficient on {m}"
                )));
            }
            let mut term = c.constant_term()?;
            for (key, &e) in &m.exponents {
                let v = value(key);
                check_field_value(self.field, &v)?;
                for _ in 0..e {
                    term = &term * &v;
                }
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// `trop(P) = ⊕ trop(α_M) ⊙ ε_M`. Coefficients must be exact.
    pub fn tropicalize(&self) -> Result<TropPolynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((c.trop()?, m.to_tropical()));
        }
        TropPolynomial::from_terms(self.arity, self.nvars, terms)
    }
}

fn check_field_value(field: Field, v: &FieldElement) -> Result<()> {
    field.join(v.field()).map(|_| ())
}

/// Scales a constant-coefficient evaluation by `1 / I!`.
pub(crate) fn divide_by_factorial(v: &FieldElement, order: &Point) -> FieldElement {
    let f = crate::series::factorial(order);
    v.scale(&BigRational::new(1.into(), f))
}

/// A finite ordered system `{P_1, ..., P_s}` in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSystem {
    polys: Vec<DiffPolynomial>,
}

/// One sampled element `Θ(I) P_ℓ` of the differential ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledPolynomial {
    /// Index `ℓ` (0-based) of the generator.
    pub generator: usize,
    pub order: Point,
    pub poly: DiffPolynomial,
}

impl DiffSystem {
    pub fn new(polys: Vec<DiffPolynomial>) -> Result<Self> {
        if let Some(first) = polys.first() {
            for p in &polys[1..] {
                first.compatible(p)?;
            }
        }
        Ok(DiffSystem { polys })
    }

    pub fn polys(&self) -> &[DiffPolynomial] {
        &self.polys
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    /// The finite sample `{Θ(I) P_ℓ : ||I||_inf <= bound}` of the
    /// differential ideal generated by the system, ordered by generator and
    /// then lexicographically by `I`.
    pub fn derivative_sample(&self, bound: u32) -> Result<Vec<SampledPolynomial>> {
        let mut out = Vec::new();
        for (generator, p) in self.polys.iter().enumerate() {
            for order in grid(&Point::new(vec![bound; p.arity()])) {
                let poly = p.theta_poly(&order)?;
                out.push(SampledPolynomial { generator, order, poly });
            }
        }
        Ok(out)
    }

    /// Checks `P_ℓ(φ) = 0` for every member of the system.
    pub fn vanishes_at(&self, phi: &[PowerSeries]) -> Result<bool> {
        for p in &self.polys {
            let v = p.evaluate(phi)?;
            if !v.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Coefficient of `t^I` in `P(φ)` computed through the Taylor formula,
/// `F_I(a) / I!` with `a_{i,J}` the Taylor coefficients of `φ_i`.
pub fn taylor_formula_coefficient(
    p: &DiffPolynomial,
    phi: &[PowerSeries],
    order: &Point,
) -> Result<FieldElement> {
    if phi.len() != p.nvars() {
        return Err(Error::VariableCountMismatch { expected: p.nvars(), found: phi.len() });
    }
    let f = p.taylor_coeff_poly(order)?;
    let mut failure = None;
    let value = f.substitute(|key| match phi[key.var].taylor_coefficient(&key.order) {
        Ok(v) => v,
        Err(e) => {
            failure.get_or_insert(e);
            FieldElement::zero()
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(divide_by_factorial(&value, order))
}
