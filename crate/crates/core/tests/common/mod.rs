//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use tropdiff::{
    DerivativeKey, DiffMonomial, DiffPolynomial, Field, FieldElement, Point, PointSet, PowerSeries,
    SupportSet, TropMonomial, TropPolynomial, VertexSet,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn point(rng: &mut impl Rng, m: usize, max: u32) -> Point {
    Point::new((0..m).map(|_| rng.gen_range(0..=max)).collect::<Vec<u32>>())
}

pub fn point_set(rng: &mut impl Rng, m: usize, max: u32, max_len: usize) -> PointSet {
    let len = rng.gen_range(0..=max_len);
    PointSet::from_points(m, (0..len).map(|_| point(rng, m, max))).unwrap()
}

pub fn nonempty_point_set(rng: &mut impl Rng, m: usize, max: u32, max_len: usize) -> PointSet {
    let len = rng.gen_range(1..=max_len.max(1));
    PointSet::from_points(m, (0..len).map(|_| point(rng, m, max))).unwrap()
}

/// A staircase support: a few explicit points plus, half of the time, up
/// to two orthants.
pub fn support(rng: &mut impl Rng, m: usize, max: u32) -> SupportSet {
    let explicit = point_set(rng, m, max, 5);
    let cones = if rng.gen_bool(0.5) { point_set(rng, m, max, 2) } else { PointSet::new(m) };
    SupportSet::normalize(explicit, cones).unwrap()
}

pub fn finite_support(rng: &mut impl Rng, m: usize, max: u32, max_len: usize) -> SupportSet {
    SupportSet::finite(point_set(rng, m, max, max_len))
}

pub fn vertex_set(rng: &mut impl Rng, m: usize, max: u32) -> VertexSet {
    VertexSet::new(&point_set(rng, m, max, 5))
}

pub fn field(rng: &mut impl Rng) -> Field {
    if rng.gen_bool(0.5) {
        Field::Rationals
    } else {
        Field::Quadratic(2)
    }
}

fn small_rational(rng: &mut impl Rng) -> FieldElement {
    let num: i64 = rng.gen_range(-6..=6);
    let den: i64 = rng.gen_range(1..=4);
    FieldElement::from_ratio(num, den)
}

pub fn nonzero_element(rng: &mut impl Rng, field: Field) -> FieldElement {
    loop {
        let c = element(rng, field);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn element(rng: &mut impl Rng, field: Field) -> FieldElement {
    let a = small_rational(rng);
    match field {
        Field::Quadratic(d) if rng.gen_bool(0.4) => {
            let b = small_rational(rng);
            FieldElement::quadratic(a.rational_part().clone(), b.rational_part().clone(), d)
        }
        _ => a,
    }
}

/// An exact polynomial series with at most `max_terms` terms of degree
/// at most `max` in each variable.
pub fn series(rng: &mut impl Rng, m: usize, field: Field, max: u32, max_terms: usize) -> PowerSeries {
    let len = rng.gen_range(0..=max_terms);
    let terms: Vec<(Point, FieldElement)> =
        (0..len).map(|_| (point(rng, m, max), nonzero_element(rng, field))).collect();
    PowerSeries::from_terms(m, field, terms).unwrap()
}

pub fn nonzero_series(rng: &mut impl Rng, m: usize, field: Field, max: u32, max_terms: usize) -> PowerSeries {
    loop {
        let s = series(rng, m, field, max, max_terms.max(1));
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn derivative_key(rng: &mut impl Rng, m: usize, n: usize, max_order: u32) -> DerivativeKey {
    DerivativeKey::new(rng.gen_range(0..n), point(rng, m, max_order))
}

pub fn diff_monomial(rng: &mut impl Rng, m: usize, n: usize, max_order: u32, max_factors: usize) -> DiffMonomial {
    let factors = rng.gen_range(0..=max_factors);
    DiffMonomial::from_exponents(
        (0..factors).map(|_| (derivative_key(rng, m, n, max_order), rng.gen_range(1..=2))),
    )
}

pub fn diff_poly(rng: &mut impl Rng, m: usize, n: usize, field: Field) -> DiffPolynomial {
    let len = rng.gen_range(0..=4);
    let terms: Vec<(PowerSeries, DiffMonomial)> =
        (0..len).map(|_| (series(rng, m, field, 2, 3), diff_monomial(rng, m, n, 2, 3))).collect();
    DiffPolynomial::from_terms(m, n, field, terms).unwrap()
}

pub fn trop_monomial(rng: &mut impl Rng, m: usize, n: usize, max_order: u32) -> TropMonomial {
    let factors = rng.gen_range(0..=3);
    TropMonomial::from_exponents(
        (0..factors).map(|_| (derivative_key(rng, m, n, max_order), rng.gen_range(1..=3))),
    )
}

pub fn trop_poly(rng: &mut impl Rng, m: usize, n: usize) -> TropPolynomial {
    let len = rng.gen_range(0..=4);
    let terms: Vec<(VertexSet, TropMonomial)> =
        (0..len).map(|_| (vertex_set(rng, m, 3), trop_monomial(rng, m, n, 2))).collect();
    TropPolynomial::from_terms(m, n, terms).unwrap()
}

pub fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}

/// Membership in `explicit ∪ ⋃ (g + Z^m_{>=0})`, read off the representation.
pub fn denotes(s: &SupportSet, p: &Point) -> bool {
    s.explicit().contains(p) || s.cone_generators().iter().any(|g| p.coords().iter().zip(g.coords()).all(|(a, b)| a >= b))
}

/// Set equality of two staircase supports, decided on the box
/// `[0, M + 1]^m` where `M` bounds every coordinate in either
/// representation; beyond it membership no longer changes.
pub fn same_set(a: &SupportSet, b: &SupportSet) -> bool {
    let bound = a.max_coordinate().max(b.max_coordinate()) + 1;
    let corner = Point::new(vec![bound; a.arity()]);
    tropdiff::lattice::grid(&corner).iter().all(|p| denotes(a, p) == denotes(b, p))
}
