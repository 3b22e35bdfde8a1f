use proptest::prelude::*;

use tropdiff::lattice::grid;
use tropdiff::{member_newton, staircase_hull_2d, vertices_of_finite, Point, PointSet};

fn arb_point(m: usize, max: u32) -> impl Strategy<Value = Point> {
    prop::collection::vec(0..=max, m).prop_map(Point::new)
}

fn arb_set(m: usize, max: u32, len: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(arb_point(m, max), 0..=len)
        .prop_map(move |pts| PointSet::from_points(m, pts).unwrap())
}

fn arb_dim_set() -> impl Strategy<Value = PointSet> {
    (1usize..=4).prop_flat_map(|m| arb_set(m, 5, 7))
}

/// `p ∈ N(C)` via the planar hull: a polygon is determined by its
/// vertices, so `p` lies in it exactly when adding `p` changes nothing.
fn planar_member(p: &Point, c: &PointSet) -> bool {
    if c.is_empty() {
        return false;
    }
    let mut with = c.clone();
    with.insert(p.clone()).unwrap();
    let before = staircase_hull_2d(c).unwrap();
    let after = staircase_hull_2d(&with).unwrap();
    before == after
}

proptest! {
    #[test]
    fn vertices_form_an_antichain_inside_the_set(x in arb_dim_set()) {
        let v = vertices_of_finite(&x);
        prop_assert!(v.is_antichain());
        prop_assert!(v.iter().all(|p| x.contains(p)));
        prop_assert_eq!(v.is_empty(), x.is_empty());
    }

    #[test]
    fn the_set_lies_in_the_polygon_of_its_vertices(x in arb_dim_set()) {
        let v = vertices_of_finite(&x);
        for p in x.iter() {
            prop_assert!(member_newton(p, &v).unwrap());
        }
    }

    #[test]
    fn no_vertex_lies_in_the_polygon_of_the_others(x in arb_dim_set()) {
        let v = vertices_of_finite(&x);
        for p in v.iter() {
            let others = PointSet::from_points(x.arity(), x.iter().filter(|q| *q != p).cloned()).unwrap();
            prop_assert!(!member_newton(p, &others).unwrap());
        }
    }

    #[test]
    fn vertices_are_idempotent(x in arb_dim_set()) {
        let v = vertices_of_finite(&x);
        prop_assert_eq!(vertices_of_finite(&v), v);
    }

    #[test]
    fn lp_agrees_with_planar_hull(x in arb_set(2, 10, 12)) {
        prop_assert_eq!(vertices_of_finite(&x), staircase_hull_2d(&x).unwrap());
    }

    #[test]
    fn planar_membership_agrees(c in arb_set(2, 6, 6), p in arb_point(2, 8)) {
        prop_assert_eq!(member_newton(&p, &c).unwrap(), planar_member(&p, &c));
    }

    #[test]
    fn membership_is_upward_closed(c in arb_set(3, 4, 5), p in arb_point(3, 5), axis in 0usize..3) {
        if member_newton(&p, &c).unwrap() {
            prop_assert!(member_newton(&p.add(&Point::unit(3, axis)), &c).unwrap());
        }
    }

    #[test]
    fn grid_enumerates_the_box(bounds in arb_point(3, 3)) {
        let cells = grid(&bounds);
        let expected: usize = bounds.coords().iter().map(|&b| b as usize + 1).product();
        prop_assert_eq!(cells.len(), expected);
        prop_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(cells.iter().all(|c| bounds.dominates(c)));
    }
}
