//! Worked examples with known answers, used by the `examples` command, the
//! runnable examples and the integration tests.

use crate::diff_algebra::{DiffPolynomial, DiffSystem};
use crate::error::Result;
use crate::field::Field;
use crate::lattice::{vertices_of_finite, Point, PointSet};
use crate::series::PowerSeries;
use crate::supports::SupportSet;
use crate::textio::{self, ParseContext};
use crate::trop_poly::{enumerate_solutions, is_solution_system, SearchBox, TropPolynomial};
use crate::tropical::VertexSet;

/// Four points in the plane of which only the two outer ones are vertices.
pub fn staircase_points() -> PointSet {
    PointSet::from_points(2, [[1, 4], [2, 3], [3, 3], [4, 1]].map(Point::from)).expect("arity 2")
}

/// Three PDEs in two unknowns over `Q(√2)`, one line per polynomial.
pub const PDE_SYSTEM: &str = "\
x1[1,0]^2 - 4*x1[0,0]
x1[1,1]*x2[0,1] - x1[0,0] + 1
x2[2,0] - x1[1,0]
";

/// A polynomial root of [`PDE_SYSTEM`] (the member of its one-parameter
/// family with `c0 = c2 = 0`, `c1 = 1`).
pub const PDE_SOLUTION: [&str; 2] = [
    "t1^2 + sqrtd*t1*t2 + 1/2*t2^2",
    "1 - 1/2*sqrtd*t2 + 1/3*t1^3 + 1/2*sqrtd*t1^2*t2 + 1/2*t1*t2^2 + 1/12*sqrtd*t2^3",
];

/// A system with its known series root.
#[derive(Clone, Debug)]
pub struct SolvedSystem {
    pub ctx: ParseContext,
    pub system: DiffSystem,
    pub phi: Vec<PowerSeries>,
}

impl SolvedSystem {
    pub fn supports(&self) -> Result<Vec<SupportSet>> {
        self.phi.iter().map(PowerSeries::support).collect()
    }

    /// Tropicalizations of `Θ(I) P` for every generator and `||I||_inf <= bound`.
    pub fn tropical_sample(&self, bound: u32) -> Result<Vec<TropPolynomial>> {
        tropical_sample(&self.system, bound)
    }
}

pub fn tropical_sample(system: &DiffSystem, bound: u32) -> Result<Vec<TropPolynomial>> {
    system.derivative_sample(bound)?.iter().map(|s| s.poly.tropicalize()).collect()
}

pub fn pde_system() -> SolvedSystem {
    let ctx = ParseContext::new(2, 2, Field::Quadratic(2)).expect("valid context");
    let system = textio::parse_system(PDE_SYSTEM, &ctx).expect("fixture parses");
    let phi = PDE_SOLUTION.iter().map(|s| textio::parse_series(s, &ctx).expect("fixture parses")).collect();
    SolvedSystem { ctx, system, phi }
}

/// A second-order PDE in four variables whose solution support has a
/// Newton polygon vertex set strictly smaller than its term supports.
pub const MIXED_PDE: &str = "x1[0,0,1,0]*x1[0,0,0,1] + (-t1^2 + t2^2)*x1[1,0,1,0]";
pub const MIXED_SOLUTION: &str = "t1*t3 + t2*t3 + t1*t4 - t2*t4";

pub fn mixed_pde() -> SolvedSystem {
    let ctx = ParseContext::new(4, 1, Field::Rationals).expect("valid context");
    let p = textio::parse_diff_poly(MIXED_PDE, &ctx).expect("fixture parses");
    let phi = vec![textio::parse_series(MIXED_SOLUTION, &ctx).expect("fixture parses")];
    SolvedSystem { ctx, system: DiffSystem::new(vec![p]).expect("single polynomial"), phi }
}

/// The ODE `2t x' - x = 0`, whose only formal power series solution is 0.
pub const SQRT_ODE: &str = "2*t*x[1] - x[0]";

pub fn sqrt_ode() -> (ParseContext, DiffPolynomial) {
    let ctx = ParseContext::new(1, 1, Field::Rationals).expect("valid context");
    (ctx, textio::parse_diff_poly(SQRT_ODE, &ctx).expect("fixture parses"))
}

/// Outcome of one replayed fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn replay_staircase() -> Result<Replay> {
    let v = vertices_of_finite(&staircase_points());
    let expected = PointSet::from_points(2, [Point::from([1, 4]), Point::from([4, 1])])?;
    Ok(Replay { name: "staircase-vertices", passed: v == expected, detail: format!("Vert = {v}") })
}

fn replay_pde_system() -> Result<Replay> {
    let fx = pde_system();
    let vanishes = fx.system.vanishes_at(&fx.phi)?;
    let supports = fx.supports()?;
    let report = is_solution_system(&fx.tropical_sample(1)?, &supports)?;
    Ok(Replay {
        name: "pde-system",
        passed: vanishes && report.solution,
        detail: format!(
            "P(phi) = 0: {vanishes}; supports {}; {} sampled polynomials, tropical solution: {}",
            supports.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ; "),
            report.reports.len(),
            report.solution
        ),
    })
}

fn replay_mixed_pde() -> Result<Replay> {
    let fx = mixed_pde();
    let supports = fx.supports()?;
    let trop = fx.system.polys()[0].tropicalize()?;
    let report = trop.is_solution(&supports)?;
    let e = |i: usize| {
        let mut c = vec![0; 4];
        c[i] = 2;
        Point::new(c)
    };
    let expected = VertexSet::from_points(4, [e(0), e(1)])?;
    let multiply = report.witnesses.values().all(|w| w.len() >= 2);
    Ok(Replay {
        name: "mixed-pde",
        passed: fx.system.vanishes_at(&fx.phi)? && report.evaluation == expected && multiply && report.solution,
        detail: format!(
            "evaluation {}; witnesses {}",
            report.evaluation,
            report.witnesses.iter().map(|(v, w)| format!("{v}: {w:?}")).collect::<Vec<_>>().join(", ")
        ),
    })
}

fn replay_sqrt_ode() -> Result<Replay> {
    let (_, p) = sqrt_ode();
    let system = DiffSystem::new(vec![p])?;
    let family = tropical_sample(&system, 5)?;
    let search = SearchBox { bounds: Point::from([5]), nvars: 1, max_points: 6, max_candidates: 64 };
    let sols = enumerate_solutions(&family, &search)?;
    let only_empty = sols.len() == 1 && sols[0].iter().all(SupportSet::is_empty);
    Ok(Replay {
        name: "sqrt-ode",
        passed: only_empty,
        detail: format!("{} of {} candidates are solutions", sols.len(), search.candidate_count()),
    })
}

/// Runs every fixture end to end.
pub fn replay() -> Vec<Replay> {
    type Run = fn() -> Result<Replay>;
    let runs: [(&'static str, Run); 4] = [
        ("staircase-vertices", replay_staircase),
        ("pde-system", replay_pde_system),
        ("mixed-pde", replay_mixed_pde),
        ("sqrt-ode", replay_sqrt_ode),
    ];
    runs.iter()
        .map(|(name, run)| {
            run().unwrap_or_else(|e| Replay { name, passed: false, detail: format!("error: {e}") })
        })
        .collect()
}
