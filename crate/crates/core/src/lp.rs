//! Exact rational feasibility testing for `A x = b, x >= 0`.
//!
//! Phase one of the simplex method on a dense tableau with one artificial
//! variable per row. Pivoting follows Bland's rule, so the method terminates
//! without cycling. All arithmetic is over arbitrary precision rationals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns true iff there is an `x >= 0` with `A x = b`.
///
/// `rows` holds the rows of `A`; every row must have the same length.
pub(crate) fn is_feasible(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> bool {
    assert_eq!(rows.len(), rhs.len(), "row count and right-hand side differ");
    let nrows = rows.len();
    if nrows == 0 {
        return true;
    }
    let ncols = rows[0].len();
    let width = ncols + nrows + 1;
    let last = width - 1;

    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(nrows);
    for (i, (row, b)) in rows.iter().zip(rhs).enumerate() {
        assert_eq!(row.len(), ncols, "ragged constraint matrix");
        let flip = b.is_negative();
        let mut t = vec![BigRational::zero(); width];
        for (j, a) in row.iter().enumerate() {
            t[j] = if flip { -a.clone() } else { a.clone() };
        }
        t[ncols + i] = BigRational::from_integer(1.into());
        t[last] = if flip { -b.clone() } else { b.clone() };
        tableau.push(t);
    }
    let mut basis: Vec<usize> = (ncols..ncols + nrows).collect();

    // Reduced costs of the phase-one objective (sum of artificials). The last
    // entry holds the negated objective value.
    let mut cost = vec![BigRational::zero(); width];
    for t in &tableau {
        for j in 0..ncols {
            cost[j] -= &t[j];
        }
        cost[last] -= &t[last];
    }

    while let Some(entering) = (0..last).find(|&j| cost[j].is_negative()) {

        let mut leaving: Option<(usize, BigRational)> = None;
        for (i, t) in tableau.iter().enumerate() {
            if !t[entering].is_positive() {
                continue;
            }
            let ratio = &t[last] / &t[entering];
            let better = match &leaving {
                None => true,
                Some((r, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*r]),
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (pivot_row, _) = leaving.expect("phase-one objective cannot be unbounded");
        pivot(&mut tableau, &mut cost, pivot_row, entering);
        basis[pivot_row] = entering;
    }

    cost[last].is_zero()
}

fn pivot(tableau: &mut [Vec<BigRational>], cost: &mut [BigRational], row: usize, col: usize) {
    let p = tableau[row][col].clone();
    for v in tableau[row].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tableau[row].clone();
    for (i, t) in tableau.iter_mut().enumerate() {
        if i == row || t[col].is_zero() {
            continue;
        }
        let factor = t[col].clone();
        for (v, pv) in t.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
    if !cost[col].is_zero() {
        let factor = cost[col].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &factor * pv;
            }
        }
    }
}
