mod common;

use proptest::prelude::*;

use common::{field, rng, series};
use tropdiff::lattice::grid;
use tropdiff::{Point, PowerSeries};

fn pair() -> impl Strategy<Value = (PowerSeries, PowerSeries, PowerSeries)> {
    (any::<u64>(), 1usize..=3).prop_map(|(seed, m)| {
        let mut r = rng(seed);
        let f = field(&mut r);
        (series(&mut r, m, f, 3, 4), series(&mut r, m, f, 3, 4), series(&mut r, m, f, 3, 4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_form_a_commutative_ring((a, b, c) in pair()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&PowerSeries::one(a.arity(), a.field())).unwrap(), a.clone());
    }

    #[test]
    fn valuation_is_multiplicative_and_subadditive((a, b, _c) in pair()) {
        let (ta, tb) = (a.trop().unwrap(), b.trop().unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().trop().unwrap(), ta.odot(&tb).unwrap());
        let sum = a.add(&b).unwrap().trop().unwrap();
        let bound = ta.oplus(&tb).unwrap();
        prop_assert_eq!(sum.oplus(&bound).unwrap(), bound);
    }

    #[test]
    fn derivations_obey_leibniz_and_commute((a, b, _c) in pair(), i in 0usize..3, j in 0usize..3) {
        let m = a.arity();
        let (i, j) = (i % m, j % m);
        let lhs = a.mul(&b).unwrap().derive(i).unwrap();
        let rhs = a.derive(i).unwrap().mul(&b).unwrap().add(&a.mul(&b.derive(i).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.derive(i).unwrap().derive(j).unwrap(), a.derive(j).unwrap().derive(i).unwrap());
    }

    #[test]
    fn support_of_a_derivative_is_the_tropical_derivative((a, _b, _c) in pair(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let order = common::point(&mut r, a.arity(), 2);
        let lhs = a.theta(&order).unwrap().support().unwrap();
        let rhs = a.support().unwrap().trop_derivative(&order).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn taylor_coefficients_round_trip((a, _b, _c) in pair()) {
        let coeffs = a.taylor_coefficients();
        let back = PowerSeries::from_taylor_coefficients(a.arity(), a.field(), coeffs).unwrap();
        prop_assert_eq!(back, a.clone());
        for j in grid(&Point::new(vec![3; a.arity()])) {
            let direct = a.theta(&j).unwrap().constant_term().unwrap();
            prop_assert_eq!(a.taylor_coefficient(&j).unwrap(), direct);
        }
    }

    #[test]
    fn truncation_is_consistent((a, b, _c) in pair(), n in 0u32..8, k in 0u32..8) {
        let ta = a.truncate(n);
        let tb = b.truncate(k);
        let product = ta.mul(&tb).unwrap();
        let exact = a.mul(&b).unwrap();
        for (j, c) in product.terms() {
            prop_assert_eq!(exact.coefficient(j).unwrap(), c.clone());
        }
        for j in grid(&Point::new(vec![4; a.arity()])) {
            if let Ok(c) = product.coefficient(&j) {
                prop_assert_eq!(c, exact.coefficient(&j).unwrap());
            }
        }
    }
}
