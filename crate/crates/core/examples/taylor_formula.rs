//! Taylor-coefficient polynomials: the coefficient of `t^I` in `P(φ)` is
//! `F_I(a) / I!`, where `F_I = (Θ(I)P)|_{t=0}` and `a` are the Taylor
//! coefficients of `φ`.

use tropdiff::diff_algebra::taylor_formula_coefficient;
use tropdiff::lattice::grid;
use tropdiff::textio::{self, ParseContext};
use tropdiff::{Field, Point};

fn main() -> tropdiff::Result<()> {
    let ctx = ParseContext::new(2, 1, Field::Rationals)?;
    let p = textio::parse_diff_poly("x1[1,0]^2 - 4*x1[0,0] + t2*x1[0,1]", &ctx)?;
    let phi = vec![textio::parse_series("t1^2 + t1*t2 - 3*t2^2 + 1", &ctx)?];
    let value = p.evaluate(&phi)?;
    println!("P = {p}\nφ = {}\nP(φ) = {value}", phi[0]);

    for order in grid(&Point::from([2, 2])) {
        let f = p.taylor_coeff_poly(&order)?;
        let via_formula = taylor_formula_coefficient(&p, &phi, &order)?;
        println!("I = {order}: F_I = {f}; F_I(a)/I! = {via_formula}; direct = {}", value.coefficient(&order)?);
    }
    Ok(())
}
