//! Staircase subsets of `Z^m_{>=0}`: finitely many explicit points together
//! with finitely many translated orthants `g + Z^m_{>=0}`.
//!
//! This class is closed under union, Minkowski sum and the tropical
//! derivative, and it is enough to hold every support that shows up in
//! practice for polynomial data. Values are kept in a normal form, so
//! structural equality is equality of the denoted sets.

use std::fmt;

use crate::error::{check_arity, Result};
use crate::lattice::{in_newton_polygon, Point, PointSet};
use crate::tropical::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportSet {
    explicit: PointSet,
    cones: PointSet,
}

impl SupportSet {
    pub fn empty(arity: usize) -> Self {
        SupportSet { explicit: PointSet::new(arity), cones: PointSet::new(arity) }
    }

    /// `{(0,...,0)}`, the multiplicative identity.
    pub fn origin(arity: usize) -> Self {
        Self::finite(PointSet::singleton(Point::origin(arity)))
    }

    /// The set denoted by the explicit points alone.
    pub fn finite(points: PointSet) -> Self {
        let arity = points.arity();
        SupportSet { explicit: points, cones: PointSet::new(arity) }
    }

    /// The union of the orthants spanned by `generators`.
    pub fn cone(generators: PointSet) -> Self {
        let arity = generators.arity();
        Self::normalize(PointSet::new(arity), generators).expect("arities agree")
    }

    /// Builds the normal form of `explicit ∪ ⋃ (g + Z^m_{>=0})`.
    ///
    /// Generators dominated by another generator and explicit points that
    /// lie in some orthant are dropped.
    pub fn normalize(explicit: PointSet, cones: PointSet) -> Result<Self> {
        check_arity(explicit.arity(), cones.arity())?;
        let cones = cones.minimal_elements();
        let mut kept = PointSet::new(explicit.arity());
        for p in explicit.iter().filter(|p| !cones.iter().any(|g| p.dominates(g))) {
            kept.insert(p.clone())?;
        }
        Ok(SupportSet { explicit: kept, cones })
    }

    pub fn from_parts(
        arity: usize,
        explicit: impl IntoIterator<Item = Point>,
        cones: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        Self::normalize(PointSet::from_points(arity, explicit)?, PointSet::from_points(arity, cones)?)
    }

    pub fn arity(&self) -> usize {
        self.explicit.arity()
    }

    pub fn explicit(&self) -> &PointSet {
        &self.explicit
    }

    pub fn cone_generators(&self) -> &PointSet {
        &self.cones
    }

    pub fn is_empty(&self) -> bool {
        self.explicit.is_empty() && self.cones.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn member(&self, p: &Point) -> Result<bool> {
        check_arity(self.arity(), p.arity())?;
        Ok(self.explicit.contains(p) || self.cones.iter().any(|g| p.dominates(g)))
    }

    /// Explicit points and cone generators together.
    pub fn generating_points(&self) -> PointSet {
        self.explicit.union(&self.cones).expect("arities agree")
    }

    pub fn union(&self, other: &SupportSet) -> Result<SupportSet> {
        check_arity(self.arity(), other.arity())?;
        Self::normalize(self.explicit.union(&other.explicit)?, self.cones.union(&other.cones)?)
    }

    /// The Minkowski sum `{x + y}`.
    ///
    /// A block that involves an orthant on either side yields an orthant.
    pub fn minkowski(&self, other: &SupportSet) -> Result<SupportSet> {
        check_arity(self.arity(), other.arity())?;
        let arity = self.arity();
        let mut explicit = PointSet::new(arity);
        let mut cones = PointSet::new(arity);
        for x in self.explicit.iter() {
            for y in other.explicit.iter() {
                explicit.insert(x.add(y))?;
            }
        }
        let lhs = self.generating_points();
        let rhs = other.generating_points();
        for g in self.cones.iter() {
            for y in rhs.iter() {
                cones.insert(g.add(y))?;
            }
        }
        for g in other.cones.iter() {
            for x in lhs.iter() {
                cones.insert(x.add(g))?;
            }
        }
        Self::normalize(explicit, cones)
    }

    /// `nS`; `0S` is the singleton origin.
    pub fn n_fold(&self, n: u32) -> SupportSet {
        let mut acc = SupportSet::origin(self.arity());
        for _ in 0..n {
            acc = acc.minkowski(self).expect("arities agree");
        }
        acc
    }

    /// `Θ_trop(J)`: shift by `-J` and keep the part inside the lattice.
    pub fn trop_derivative(&self, j: &Point) -> Result<SupportSet> {
        check_arity(self.arity(), j.arity())?;
        let explicit =
            PointSet::from_points(self.arity(), self.explicit.iter().filter_map(|t| t.checked_sub(j)))?;
        let cones = PointSet::from_points(self.arity(), self.cones.iter().map(|g| g.saturating_sub(j)))?;
        Self::normalize(explicit, cones)
    }

    /// `Vert(S)` of the denoted, possibly infinite, set.
    ///
    /// The orthant of a generator `g` is replaced by the finite surrogate
    /// `{g + e_1, ..., g + e_m}`, which spans the same Newton polygon as
    /// `(g + Z^m_{>=0}) \ {g}`.
    pub fn vertices(&self) -> VertexSet {
        let arity = self.arity();
        let all = self.generating_points();
        let candidates = all.minimal_elements();
        let mut vertices = PointSet::new(arity);
        for x in candidates.iter() {
            let mut others: Vec<Point> = all.iter().filter(|y| *y != x).cloned().collect();
            if self.cones.contains(x) {
                others.extend((0..arity).map(|k| x.add(&Point::unit(arity, k))));
            }
            if !in_newton_polygon(x, others.iter()) {
                vertices.insert(x.clone()).expect("arities agree");
            }
        }
        VertexSet::from_vertices_unchecked(vertices)
    }

    /// `Val_J(S) = Vert(Θ_trop(J) S)`.
    pub fn val(&self, j: &Point) -> Result<VertexSet> {
        Ok(self.trop_derivative(j)?.vertices())
    }

    /// The largest coordinate mentioned by the representation.
    pub fn max_coordinate(&self) -> u32 {
        self.explicit.max_coordinate().max(self.cones.max_coordinate())
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.explicit.is_empty(), self.cones.is_empty()) {
            (_, true) => write!(f, "{}", self.explicit),
            (true, false) => write!(f, "cone{}", self.cones),
            (false, false) => write!(f, "{} + cone{}", self.explicit, self.cones),
        }
    }
}
