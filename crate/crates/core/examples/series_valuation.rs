//! Exact power series and their tropical valuation `trop = Vert ∘ Supp`.

use tropdiff::textio::{parse_series, ParseContext};
use tropdiff::{Field, Point};

fn main() -> tropdiff::Result<()> {
    let ctx = ParseContext::new(2, 1, Field::Quadratic(3))?;
    let phi = parse_series("1 + sqrtd*t1 - t2^2", &ctx)?;
    let psi = parse_series("t1*t2 - 1/2*t1^2 + O(t^6)", &ctx)?;
    let psi_exact = parse_series("t1*t2 - 1/2*t1^2", &ctx)?;

    println!("φ = {phi}\nψ = {psi}");
    println!("φψ = {}", phi.mul(&psi)?);
    println!("∂φ/∂t1 = {}", phi.derive(0)?);
    println!("Θ(1,1)(φψ) = {}", phi.mul(&psi_exact)?.theta(&Point::from([1, 1]))?);

    let (tp, tq) = (phi.trop()?, psi_exact.trop()?);
    println!("trop φ = {tp}, trop ψ = {tq}");
    println!("trop(φψ) = {} = trop φ ⊙ trop ψ = {}", phi.mul(&psi_exact)?.trop()?, tp.odot(&tq)?);

    // Support and valuation need every coefficient, so a truncated series refuses.
    println!("Supp of a truncated series: {:?}", psi.support().map(|s| s.to_string()));
    Ok(())
}
