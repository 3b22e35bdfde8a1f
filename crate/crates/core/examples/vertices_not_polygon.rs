//! Why tropical vanishing is decided on vertices: the middle point
//! `e1 + e2` lies on the Newton polygon of `{2e1, 2e2}` but is not a vertex.

use tropdiff::fixtures;

fn main() -> tropdiff::Result<()> {
    let fx = fixtures::mixed_pde();
    let p = &fx.system.polys()[0];
    println!("P = {p}\nφ = {}", fx.phi[0]);
    println!("P(φ) = {}", p.evaluate(&fx.phi)?);

    let supports = fx.supports()?;
    let trop = p.tropicalize()?;
    println!("trop P = {trop}\nS = {}", supports[0]);

    let report = trop.is_solution(&supports)?;
    for (i, set) in report.term_sets.iter().enumerate() {
        println!("term {i}: {set}");
    }
    println!("p(S) = {}", report.evaluation);
    for (v, w) in &report.witnesses {
        println!("  vertex {v} attained by terms {w:?}");
    }
    println!("S is a tropical solution: {}", report.solution);
    Ok(())
}
