//! A polynomial solution of a PDE system and the tropical check on its
//! support, including the derivatives Θ(I)P of each equation.

use tropdiff::fixtures;
use tropdiff::is_solution_system;

fn main() -> tropdiff::Result<()> {
    let fx = fixtures::pde_system();
    for (i, p) in fx.system.polys().iter().enumerate() {
        println!("P{} = {p}", i + 1);
    }
    for (i, phi) in fx.phi.iter().enumerate() {
        println!("φ{} = {phi}", i + 1);
    }
    for (i, p) in fx.system.polys().iter().enumerate() {
        println!("P{}(φ) = {}", i + 1, p.evaluate(&fx.phi)?);
    }

    let supports = fx.supports()?;
    for (i, s) in supports.iter().enumerate() {
        println!("S{} = Supp φ{} = {s}", i + 1, i + 1);
    }

    let sample = fx.system.derivative_sample(1)?;
    let family: Vec<_> = sample.iter().map(|s| s.poly.tropicalize()).collect::<Result<_, _>>()?;
    let report = is_solution_system(&family, &supports)?;
    for ((s, trop), r) in sample.iter().zip(&family).zip(&report.reports) {
        println!("Θ{} P{}: {trop}\n    evaluation {} -> {}", s.order, s.generator + 1, r.evaluation, r.solution);
    }
    println!("(S1, S2) solves the sampled tropical system: {}", report.solution);
    Ok(())
}
