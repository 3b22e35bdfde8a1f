//! Exact coefficient fields: the rationals and real quadratic extensions
//! `Q(√d)` for a positive nonsquare integer `d`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `Q(√d)`
    Quadratic(u64),
}

impl Field {
    pub fn quadratic(d: u64) -> Result<Field> {
        if d < 2 || d.sqrt() * d.sqrt() == d {
            return Err(Error::InvalidInput(format!("{d} is not a positive nonsquare integer")));
        }
        Ok(Field::Quadratic(d))
    }

    /// The smallest field containing both. `Q` embeds in every `Q(√d)`;
    /// two different quadratic extensions are incompatible.
    pub fn join(self, other: Field) -> Result<Field> {
        match (self, other) {
            (Field::Rationals, f) | (f, Field::Rationals) => Ok(f),
            (Field::Quadratic(a), Field::Quadratic(b)) if a == b => Ok(self),
            _ => Err(Error::FieldMismatch { left: self.to_string(), right: other.to_string() }),
        }
    }

    pub fn contains(self, other: Field) -> bool {
        self.join(other) == Ok(self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("Q"),
            Field::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// An exact field element `a + b√d`.
///
/// Elements with `b = 0` are always stored as `Rational`, which makes the
/// derived equality exact. Arithmetic between elements of two different
/// quadratic fields panics; the series layer checks fields before combining
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Quadratic { a: BigRational, b: BigRational, d: u64 },
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        FieldElement::Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        FieldElement::Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        FieldElement::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn rational(q: BigRational) -> Self {
        FieldElement::Rational(q)
    }

    /// `a + b√d`, normalized.
    pub fn quadratic(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() {
            FieldElement::Rational(a)
        } else {
            FieldElement::Quadratic { a, b, d }
        }
    }

    /// `√d`
    pub fn sqrt_d(d: u64) -> Self {
        Self::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Quadratic { d, .. } => Field::Quadratic(*d),
        }
    }

    /// The rational part `a`.
    pub fn rational_part(&self) -> &BigRational {
        match self {
            FieldElement::Rational(a) | FieldElement::Quadratic { a, .. } => a,
        }
    }

    /// The coefficient `b` of `√d`.
    pub fn irrational_part(&self) -> BigRational {
        match self {
            FieldElement::Rational(_) => BigRational::zero(),
            FieldElement::Quadratic { b, .. } => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Rational(a) if a.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, FieldElement::Rational(a) if a.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(a) => Some(a),
            FieldElement::Quadratic { .. } => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(a * q),
            FieldElement::Quadratic { a, b, d } => Self::quadratic(a * q, b * q, *d),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        match self {
            FieldElement::Rational(a) if a.is_zero() => None,
            FieldElement::Rational(a) => Some(FieldElement::Rational(a.recip())),
            FieldElement::Quadratic { a, b, d } => {
                // (a + b√d)^-1 = (a - b√d) / (a^2 - d b^2); the norm is
                // nonzero because d is not a square.
                let norm = a * a - b * b * BigRational::from_integer((*d).into());
                Some(Self::quadratic(a / &norm, -(b / &norm), *d))
            }
        }
    }

    fn common_d(&self, other: &Self) -> Option<u64> {
        match (self.field(), other.field()) {
            (Field::Rationals, Field::Rationals) => None,
            (Field::Quadratic(d), Field::Rationals) | (Field::Rationals, Field::Quadratic(d)) => Some(d),
            (Field::Quadratic(d), Field::Quadratic(e)) => {
                assert_eq!(d, e, "arithmetic across Q(sqrt({d})) and Q(sqrt({e}))");
                Some(d)
            }
        }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        match self.common_d(rhs) {
            None => FieldElement::Rational(self.rational_part() + rhs.rational_part()),
            Some(d) => FieldElement::quadratic(
                self.rational_part() + rhs.rational_part(),
                self.irrational_part() + rhs.irrational_part(),
                d,
            ),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match self.common_d(rhs) {
            None => FieldElement::Rational(self.rational_part() * rhs.rational_part()),
            Some(d) => {
                let (a, b) = (self.rational_part(), self.irrational_part());
                let (c, e) = (rhs.rational_part(), rhs.irrational_part());
                let dq = BigRational::from_integer(d.into());
                FieldElement::quadratic(a * c + &b * &e * dq, a * &e + &b * c, d)
            }
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Quadratic { a, b, d } => FieldElement::Quadratic { a: -a, b: -b, d: *d },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_integer(n)
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Prints in the input syntax: `1/2`, `-3*sqrtd`, `(1 - 2*sqrtd)`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(a) => fmt_rational(a, f),
            FieldElement::Quadratic { a, b, .. } => {
                let wrap = !a.is_zero();
                if wrap {
                    f.write_str("(")?;
                    fmt_rational(a, f)?;
                    f.write_str(if b.is_negative() { " - " } else { " + " })?;
                } else if b.is_negative() {
                    f.write_str("-")?;
                }
                let mag = b.abs();
                if !mag.is_one() {
                    fmt_rational(&mag, f)?;
                    f.write_str("*")?;
                }
                f.write_str("sqrtd")?;
                if wrap {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn norm_identity_example() {
        let d = 2;
        let x = FieldElement::quadratic(q(3, 1), q(1, 2), d);
        let y = FieldElement::quadratic(q(3, 1), q(-1, 2), d);
        // 9 - 2 * 1/4
        assert_eq!(&x * &y, FieldElement::rational(q(17, 2)));
    }

    #[test]
    fn sqrt_squared_is_d() {
        let r = FieldElement::sqrt_d(5);
        assert_eq!(&r * &r, FieldElement::from_integer(5));
    }

    #[test]
    fn inverse() {
        let x = FieldElement::quadratic(q(1, 1), q(1, 1), 2);
        assert_eq!(&x * &x.inv().unwrap(), FieldElement::one());
        assert!(FieldElement::zero().inv().is_none());
    }

    #[test]
    fn cancellation_normalizes_to_rational() {
        let x = FieldElement::quadratic(q(1, 1), q(2, 3), 3);
        let y = FieldElement::quadratic(q(0, 1), q(2, 3), 3);
        assert_eq!(&x - &y, FieldElement::one());
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn quadratic_field_validation() {
        assert!(Field::quadratic(2).is_ok());
        assert!(Field::quadratic(4).is_err());
        assert!(Field::quadratic(1).is_err());
        assert!(Field::quadratic(0).is_err());
    }

    #[test]
    fn join_rules() {
        assert_eq!(Field::Rationals.join(Field::Quadratic(2)), Ok(Field::Quadratic(2)));
        assert!(Field::Quadratic(2).join(Field::Quadratic(3)).is_err());
    }

    #[test]
    #[should_panic]
    fn mixing_quadratic_fields_panics() {
        let _ = &FieldElement::sqrt_d(2) + &FieldElement::sqrt_d(3);
    }

    #[test]
    fn display() {
        assert_eq!(FieldElement::from_ratio(1, 2).to_string(), "1/2");
        assert_eq!(FieldElement::from_integer(-4).to_string(), "-4");
        assert_eq!(FieldElement::sqrt_d(2).to_string(), "sqrtd");
        assert_eq!(FieldElement::quadratic(q(0, 1), q(-3, 2), 2).to_string(), "-3/2*sqrtd");
        assert_eq!(FieldElement::quadratic(q(1, 1), q(-1, 1), 2).to_string(), "(1 - sqrtd)");
    }
}
