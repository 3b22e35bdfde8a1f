//! The two semirings: supports under (∪, +) and vertex sets under (⊕, ⊙),
//! with `Vert` carrying one onto the other.

use tropdiff::{Point, SupportSet, VertexSet};

fn main() -> tropdiff::Result<()> {
    let a = SupportSet::from_parts(2, [[0, 2], [3, 0]].map(Point::from), [])?;
    let b = SupportSet::from_parts(2, [[1, 1]].map(Point::from), [Point::from([0, 4])])?;

    let union = a.union(&b)?;
    let sum = a.minkowski(&b)?;
    println!("A = {a}\nB = {b}");
    println!("A ∪ B = {union}");
    println!("A + B = {sum}");

    let (va, vb) = (a.vertices(), b.vertices());
    println!("Vert(A ∪ B) = {} = Vert A ⊕ Vert B = {}", union.vertices(), va.oplus(&vb)?);
    println!("Vert(A + B) = {} = Vert A ⊙ Vert B = {}", sum.vertices(), va.odot(&vb)?);
    println!("(Vert A)^⊙3 = {}", va.odot_power(3));

    // Tropical derivatives shift a support down and keep what stays nonnegative.
    let j = Point::from([1, 0]);
    println!("Θ_trop{j} B = {}, Val{j}(B) = {}", b.trop_derivative(&j)?, b.val(&j)?);
    println!("semiring units: 0 = {}, 1 = {}", VertexSet::zero(2), VertexSet::one(2));
    Ok(())
}
