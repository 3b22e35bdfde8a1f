mod common;

use proptest::prelude::*;
use rand::Rng;

use common::{diff_poly, field, rng, series, support, trop_poly, vertex_set};
use tropdiff::textio::{self, ParseContext};
use tropdiff::Error;

fn context(r: &mut impl Rng) -> ParseContext {
    let m = r.gen_range(1..=3);
    let n = r.gen_range(1..=2);
    ParseContext::new(m, n, field(r)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn every_kind_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context(&mut r);

        let s = support(&mut r, ctx.m, 5);
        prop_assert_eq!(textio::parse_support(&s.to_string(), &ctx).unwrap(), s);

        let v = vertex_set(&mut r, ctx.m, 5);
        prop_assert_eq!(textio::parse_vertex_set(&v.to_string(), &ctx).unwrap(), v);

        let mut phi = series(&mut r, ctx.m, ctx.field, 4, 5);
        if r.gen_bool(0.3) {
            phi = phi.truncate(r.gen_range(0..8));
        }
        prop_assert_eq!(textio::parse_series(&phi.to_string(), &ctx).unwrap(), phi);

        let p = diff_poly(&mut r, ctx.m, ctx.n, ctx.field);
        prop_assert_eq!(textio::parse_diff_poly(&p.to_string(), &ctx).unwrap(), p);

        let t = trop_poly(&mut r, ctx.m, ctx.n);
        prop_assert_eq!(textio::parse_trop_poly(&t.to_string(), &ctx).unwrap(), t);
    }

    #[test]
    fn printing_is_canonical(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context(&mut r);
        let p = diff_poly(&mut r, ctx.m, ctx.n, ctx.field);
        let q = diff_poly(&mut r, ctx.m, ctx.n, ctx.field);
        prop_assert_eq!(p.add(&q).unwrap().to_string(), q.add(&p).unwrap().to_string());
        let text = p.to_string();
        prop_assert_eq!(textio::parse_diff_poly(&text, &ctx).unwrap().to_string(), text);
    }

    #[test]
    fn whitespace_is_insignificant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context(&mut r);
        let p = diff_poly(&mut r, ctx.m, ctx.n, ctx.field);
        let spaced: String = p
            .to_string()
            .chars()
            .flat_map(|c| if "+-*/^()[]{},".contains(c) { vec![' ', c, '\n'] } else { vec![c] })
            .collect();
        let compact: String = p.to_string().chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(textio::parse_diff_poly(&compact, &ctx).unwrap(), p.clone());
        prop_assert_eq!(textio::parse_diff_poly(&spaced, &ctx).unwrap(), p);
    }

    #[test]
    fn json_mirrors_the_values(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context(&mut r);
        let s = support(&mut r, ctx.m, 5);
        let js = textio::support_json(&s);
        prop_assert_eq!(js["explicit"].as_array().unwrap().len(), s.explicit().len());
        prop_assert_eq!(js["cones"].as_array().unwrap().len(), s.cone_generators().len());
        let phi = series(&mut r, ctx.m, ctx.field, 4, 5);
        let jp = textio::series_json(&phi);
        prop_assert_eq!(jp["text"].as_str().unwrap(), phi.to_string());
        prop_assert_eq!(jp["terms"].as_array().unwrap().len(), phi.terms().len());
    }
}

#[test]
fn floats_are_rejected() {
    let ctx = ParseContext::new(1, 1, tropdiff::Field::Rationals).unwrap();
    assert!(matches!(textio::parse_series("0.5*t", &ctx), Err(Error::Parse { position: 1, .. })));
}
