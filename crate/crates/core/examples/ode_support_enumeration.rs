//! Exhaustive search for supports solving the sampled tropical system of
//! `2t x' - x = 0`: only the empty support survives.

use tropdiff::diff_algebra::DiffSystem;
use tropdiff::{enumerate_solutions, fixtures, Point, SearchBox, SupportSet};

fn main() -> tropdiff::Result<()> {
    let (_, p) = fixtures::sqrt_ode();
    let system = DiffSystem::new(vec![p])?;
    for s in system.derivative_sample(5)? {
        println!("Θ{} P = {}   trop: {}", s.order, s.poly, s.poly.tropicalize()?);
    }

    let family = fixtures::tropical_sample(&system, 5)?;
    let search = SearchBox { bounds: Point::from([5]), nvars: 1, max_points: 6, max_candidates: 1 << 20 };
    let solutions = enumerate_solutions(&family, &search)?;
    println!("{} candidates, {} solutions:", search.candidate_count(), solutions.len());
    for tuple in &solutions {
        println!("  {}", tuple.iter().map(SupportSet::to_string).collect::<Vec<_>>().join(" ; "));
    }

    // The obstruction for S = {(k)} shows up in Θ(k)P.
    let k = 2;
    let s = SupportSet::finite(tropdiff::PointSet::from_points(1, [Point::from([k])])?);
    let report = family[k as usize].is_solution(std::slice::from_ref(&s))?;
    for (v, w) in report.unbalanced_vertices() {
        println!("S = {s}: vertex {v} of Θ({k}) P is attained only by term {w:?}");
    }
    Ok(())
}
