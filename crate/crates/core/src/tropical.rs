//! The idempotent semiring of vertex sets (tropical formal power series)
//! with `S ⊕ T = Vert(S ∪ T)` and `S ⊙ T = Vert(S + T)`.

use std::fmt;

use crate::error::{check_arity, Result};
use crate::lattice::{vertices_of_finite, Point, PointSet};
use crate::supports::SupportSet;

/// A finite antichain of lattice points that is its own vertex set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    points: PointSet,
}

impl VertexSet {
    /// `Vert(points)`. Any finite set is accepted and re-canonicalized.
    pub fn new(points: &PointSet) -> Self {
        VertexSet { points: vertices_of_finite(points) }
    }

    pub fn from_points(arity: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        Ok(Self::new(&PointSet::from_points(arity, points)?))
    }

    pub(crate) fn from_vertices_unchecked(points: PointSet) -> Self {
        debug_assert!(points.is_antichain());
        VertexSet { points }
    }

    /// The zero element `∅`.
    pub fn zero(arity: usize) -> Self {
        VertexSet { points: PointSet::new(arity) }
    }

    /// The unit element `{(0,...,0)}`.
    pub fn one(arity: usize) -> Self {
        VertexSet { points: PointSet::singleton(Point::origin(arity)) }
    }

    pub fn arity(&self) -> usize {
        self.points.arity()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> + '_ {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn to_support(&self) -> SupportSet {
        SupportSet::finite(self.points.clone())
    }

    pub fn oplus(&self, other: &VertexSet) -> Result<VertexSet> {
        check_arity(self.arity(), other.arity())?;
        Ok(VertexSet::new(&self.points.union(&other.points)?))
    }

    pub fn odot(&self, other: &VertexSet) -> Result<VertexSet> {
        check_arity(self.arity(), other.arity())?;
        let mut sum = PointSet::new(self.arity());
        for x in self.iter() {
            for y in other.iter() {
                sum.insert(x.add(y))?;
            }
        }
        Ok(VertexSet::new(&sum))
    }

    /// `S^{⊙n}`; the empty product is the unit.
    pub fn odot_power(&self, n: u32) -> VertexSet {
        let mut acc = VertexSet::one(self.arity());
        for _ in 0..n {
            acc = acc.odot(self).expect("arities agree");
        }
        acc
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.points)
    }
}
