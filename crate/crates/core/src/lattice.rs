//! Points of the nonnegative integer lattice and Newton polygons of finite
//! point sets.
//!
//! The Newton polygon of a set `C` is the convex hull of `C + Z^m_{>=0}`.
//! A point `p` lies in it iff some convex combination of points of `C` is
//! componentwise below `p`; [`member_newton`] decides this with an exact
//! rational LP.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_arity, Error, Result};
use crate::lp;

/// A multi-index in `Z^m_{>=0}`.
///
/// The derived ordering is lexicographic, which is the canonical order used
/// for printing every point collection in the crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<u32>);

impl Point {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        Point(coords.into())
    }

    pub fn origin(arity: usize) -> Self {
        Point(vec![0; arity])
    }

    /// The unit vector along `axis` (0-based).
    pub fn unit(arity: usize, axis: usize) -> Self {
        let mut c = vec![0; arity];
        c[axis] = 1;
        Point(c)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self >= other` componentwise.
    pub fn dominates(&self, other: &Point) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.arity(), other.arity());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` if some coordinate would be negative.
    pub fn checked_sub(&self, other: &Point) -> Option<Point> {
        debug_assert_eq!(self.arity(), other.arity());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Point) -> Point {
        debug_assert_eq!(self.arity(), other.arity());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn scale(&self, n: u32) -> Point {
        Point(self.0.iter().map(|c| c * n).collect())
    }

    /// `||J||_1`
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// `||J||_inf`
    pub fn max_norm(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<u32>> for Point {
    fn from(v: Vec<u32>) -> Self {
        Point(v)
    }
}

impl<const N: usize> From<[u32; N]> for Point {
    fn from(v: [u32; N]) -> Self {
        Point(v.to_vec())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A finite, deduplicated set of lattice points of a fixed arity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet {
    arity: usize,
    points: BTreeSet<Point>,
}

impl PointSet {
    pub fn new(arity: usize) -> Self {
        PointSet { arity, points: BTreeSet::new() }
    }

    pub fn from_points(arity: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut set = PointSet::new(arity);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn singleton(p: Point) -> Self {
        let arity = p.arity();
        PointSet { arity, points: BTreeSet::from([p]) }
    }

    pub fn insert(&mut self, p: Point) -> Result<bool> {
        check_arity(self.arity, p.arity())?;
        Ok(self.points.insert(p))
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn iter(&self) -> impl Iterator<Item = &Point> + '_ {
        self.points.iter()
    }

    /// The union of two sets of the same arity.
    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        check_arity(self.arity, other.arity)?;
        let mut out = self.clone();
        out.points.extend(other.points.iter().cloned());
        Ok(out)
    }

    /// The elements of the set that dominate no other element.
    pub fn minimal_elements(&self) -> PointSet {
        let points = self
            .points
            .iter()
            .filter(|p| !self.points.iter().any(|q| q != *p && p.dominates(q)))
            .cloned()
            .collect();
        PointSet { arity: self.arity, points }
    }

    /// Largest coordinate appearing in the set (0 for the empty set).
    pub fn max_coordinate(&self) -> u32 {
        self.points.iter().map(Point::max_norm).max().unwrap_or(0)
    }

    pub fn is_antichain(&self) -> bool {
        self.points
            .iter()
            .all(|p| self.points.iter().all(|q| p == q || !p.dominates(q)))
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::collections::btree_set::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// All points of the box `[0, b_1] x ... x [0, b_m]` in lexicographic order.
pub fn grid(bounds: &Point) -> Vec<Point> {
    let mut out = vec![Vec::with_capacity(bounds.arity())];
    for &b in bounds.coords() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=b).map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Point).collect()
}

/// Decides whether `p` lies in the Newton polygon of `generators`.
///
/// No arity checks; callers guarantee that all points share `p`'s arity.
pub(crate) fn in_newton_polygon<'a, I>(p: &Point, generators: I) -> bool
where
    I: IntoIterator<Item = &'a Point>,
{
    let cands: Vec<&Point> = generators.into_iter().collect();
    if cands.iter().any(|c| p.dominates(c)) {
        return true;
    }
    if cands.is_empty() {
        return false;
    }

    let m = p.arity();
    let k = cands.len();
    // Variables: lambda_1..lambda_k, slack_1..slack_m.
    let one = BigRational::one();
    let zero = BigRational::zero();
    let mut rows = Vec::with_capacity(m + 1);
    let mut rhs = Vec::with_capacity(m + 1);

    let mut convex = vec![zero.clone(); k + m];
    for v in convex.iter_mut().take(k) {
        *v = one.clone();
    }
    rows.push(convex);
    rhs.push(one.clone());

    for axis in 0..m {
        let mut row = vec![zero.clone(); k + m];
        for (j, c) in cands.iter().enumerate() {
            row[j] = BigRational::from_integer(c.coords()[axis].into());
        }
        row[k + axis] = one.clone();
        rows.push(row);
        rhs.push(BigRational::from_integer(p.coords()[axis].into()));
    }

    lp::is_feasible(&rows, &rhs)
}

/// Returns true iff `p` lies in the Newton polygon `N(C)`.
///
/// The empty set has an empty Newton polygon.
pub fn member_newton(p: &Point, c: &PointSet) -> Result<bool> {
    check_arity(c.arity(), p.arity())?;
    Ok(in_newton_polygon(p, c.iter()))
}

/// The vertex set `Vert(C)`: points `x` of `C` outside `N(C \ {x})`.
///
/// Only minimal elements can be vertices, so the LP is run on those alone.
pub fn vertices_of_finite(c: &PointSet) -> PointSet {
    let minimal = c.minimal_elements();
    let points = minimal
        .iter()
        .filter(|x| !in_newton_polygon(x, minimal.iter().filter(|y| y != x)))
        .cloned()
        .collect();
    PointSet { arity: c.arity(), points }
}

/// Vertex set of a planar point set via a lower-left convex chain.
///
/// Independent of the LP path; used to cross-check [`vertices_of_finite`].
pub fn staircase_hull_2d(c: &PointSet) -> Result<PointSet> {
    if c.arity() != 2 {
        return Err(Error::InvalidInput(format!(
            "staircase hull needs arity 2, got {}",
            c.arity()
        )));
    }
    // Minimal elements have pairwise distinct first coordinates and, sorted
    // by it, strictly decreasing second coordinates.
    let minimal: Vec<(i64, i64)> = c
        .minimal_elements()
        .iter()
        .map(|p| (i64::from(p.coords()[0]), i64::from(p.coords()[1])))
        .collect();

    let mut chain: Vec<(i64, i64)> = Vec::with_capacity(minimal.len());
    for q in minimal {
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0);
            if cross > 0 {
                break;
            }
            chain.pop();
        }
        chain.push(q);
    }

    PointSet::from_points(
        2,
        chain.into_iter().map(|(x, y)| Point::new(vec![x as u32, y as u32])),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[&[u32]]) -> PointSet {
        let arity = points.first().map_or(2, |p| p.len());
        PointSet::from_points(arity, points.iter().map(|p| Point::new(p.to_vec()))).unwrap()
    }

    #[test]
    fn membership_examples() {
        let c = set(&[&[1, 4], &[4, 1]]);
        assert!(member_newton(&Point::from([2, 3]), &c).unwrap());
        assert!(member_newton(&Point::from([5, 2]), &c).unwrap());
        assert!(!member_newton(&Point::from([0, 0]), &set(&[&[1, 0]])).unwrap());
        assert!(!member_newton(&Point::from([2, 2]), &c).unwrap());
    }

    #[test]
    fn membership_certificate_for_segment_point() {
        // 2/3 * (1,4) + 1/3 * (4,1) = (2,3)
        let a = Point::from([1, 4]).scale(2);
        let b = Point::from([4, 1]);
        assert_eq!(a.add(&b), Point::from([2, 3]).scale(3));
    }

    #[test]
    fn membership_in_empty_set() {
        assert!(!member_newton(&Point::from([3, 3]), &PointSet::new(2)).unwrap());
    }

    #[test]
    fn membership_rejects_mixed_arity() {
        let c = set(&[&[1, 4]]);
        assert!(matches!(
            member_newton(&Point::from([1, 1, 1]), &c),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn vertices_examples() {
        let fig = set(&[&[1, 4], &[2, 3], &[3, 3], &[4, 1]]);
        assert_eq!(vertices_of_finite(&fig), set(&[&[1, 4], &[4, 1]]));
        assert_eq!(vertices_of_finite(&set(&[&[0, 0]])), set(&[&[0, 0]]));
        assert_eq!(
            vertices_of_finite(&set(&[&[2, 0], &[1, 1], &[0, 2]])),
            set(&[&[2, 0], &[0, 2]])
        );
        assert!(vertices_of_finite(&PointSet::new(3)).is_empty());
    }

    #[test]
    fn vertices_in_three_dimensions() {
        // (1,1,1) is the centroid of the unit-axis triple scaled by 3.
        let c = set(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1], &[2, 1, 1]]);
        assert_eq!(
            vertices_of_finite(&c),
            set(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])
        );
    }

    #[test]
    fn staircase_examples() {
        let fig = set(&[&[1, 4], &[2, 3], &[3, 3], &[4, 1]]);
        assert_eq!(staircase_hull_2d(&fig).unwrap(), set(&[&[1, 4], &[4, 1]]));
        let pair = set(&[&[0, 5], &[5, 0]]);
        assert_eq!(staircase_hull_2d(&pair).unwrap(), pair);
        let seg = set(&[&[1, 4], &[2, 3], &[4, 1]]);
        assert_eq!(staircase_hull_2d(&seg).unwrap(), set(&[&[1, 4], &[4, 1]]));
        assert!(staircase_hull_2d(&set(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn grid_is_lexicographic() {
        let g = grid(&Point::from([1, 2]));
        assert_eq!(g.len(), 6);
        assert_eq!(g[0], Point::from([0, 0]));
        assert_eq!(g[1], Point::from([0, 1]));
        assert_eq!(g[5], Point::from([1, 2]));
        assert_eq!(grid(&Point::new(Vec::new())), vec![Point::new(Vec::new())]);
    }

    #[test]
    fn point_display() {
        assert_eq!(Point::from([1, 4]).to_string(), "(1,4)");
        assert_eq!(set(&[&[4, 1], &[1, 4]]).to_string(), "{(1,4),(4,1)}");
    }
}
