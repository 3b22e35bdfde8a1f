//! Vertex sets of finite and staircase supports.
//!
//! Run with `cargo run --example staircase_vertices`.

use tropdiff::{member_newton, staircase_hull_2d, vertices_of_finite, Point, PointSet, SupportSet};

fn main() -> tropdiff::Result<()> {
    let x = PointSet::from_points(2, [[1, 4], [2, 3], [3, 3], [4, 1]].map(Point::from))?;
    let v = vertices_of_finite(&x);
    println!("X       = {x}");
    println!("Vert(X) = {v}");
    println!("planar hull agrees: {}", staircase_hull_2d(&x)? == v);

    // (2,3) is not a vertex: it lies on the segment's upper side.
    let others = PointSet::from_points(2, x.iter().filter(|p| **p != Point::from([2, 3])).cloned())?;
    println!("(2,3) in N(X without it): {}", member_newton(&Point::from([2, 3]), &others)?);

    // Supports of series are often infinite; orthants keep them finite to write down.
    let s = SupportSet::from_parts(2, [Point::from([0, 3])], [Point::from([1, 1]), Point::from([2, 0])])?;
    println!("S = {s}, Vert(S) = {}", s.vertices());
    Ok(())
}
