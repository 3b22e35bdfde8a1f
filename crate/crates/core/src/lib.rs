//! Exact tropical differential algebra for systems of partial differential
//! equations.
//!
//! The crate connects three layers:
//!
//! * supports of formal power series in `t_1..t_m`, the semiring of supports
//!   ([`SupportSet`]) and the semiring of vertex sets ([`VertexSet`]) that
//!   `Vert` maps it onto;
//! * differential polynomials over power series coefficients
//!   ([`DiffPolynomial`]), with the derivations acting by the Leibniz rule;
//! * tropical differential polynomials ([`TropPolynomial`]) and the check that
//!   a tuple of supports is a tropical solution.
//!
//! All arithmetic is exact: coefficients live in `Q` or `Q(√d)` and Newton
//! polygon membership is decided with a rational simplex.
//!
//! ```
//! use tropdiff::{Field, ParseContext, textio};
//!
//! let ctx = ParseContext::new(2, 1, Field::Quadratic(2)).unwrap();
//! let p = textio::parse_diff_poly("x1[1,0]^2 - 4*x1[0,0]", &ctx).unwrap();
//! let phi = textio::parse_series("t1^2 + sqrtd*t1*t2 + 1/2*t2^2", &ctx).unwrap();
//!
//! assert!(p.evaluate(&[phi.clone()]).unwrap().is_zero());
//! let report = p.tropicalize().unwrap().is_solution(&[phi.support().unwrap()]).unwrap();
//! assert!(report.solution);
//! ```

pub mod cli;
pub mod diff_algebra;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod lattice;
mod lp;
pub mod series;
pub mod supports;
pub mod textio;
pub mod trop_poly;
pub mod tropical;

pub use diff_algebra::{DerivativeKey, DiffMonomial, DiffPolynomial, DiffSystem};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use lattice::{member_newton, staircase_hull_2d, vertices_of_finite, Point, PointSet};
pub use series::{PowerSeries, Precision};
pub use supports::SupportSet;
pub use textio::ParseContext;
pub use trop_poly::{
    enumerate_solutions, eval_monomial, is_solution_system, SearchBox, SolutionReport, SystemReport,
    TropMonomial, TropPolynomial,
};
pub use tropical::VertexSet;
