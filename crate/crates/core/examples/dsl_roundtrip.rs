//! The text syntax: parse, print, re-parse, and the JSON renderings.

use tropdiff::textio::{self, ParseContext};
use tropdiff::Field;

fn main() -> tropdiff::Result<()> {
    let ctx = ParseContext::new(2, 2, Field::Quadratic(2))?;

    let p = textio::parse_diff_poly("x1[1,1]*x2[0,1] - x1[0,0] + (1 - sqrtd*t2)", &ctx)?;
    println!("polynomial  {p}");
    assert_eq!(textio::parse_diff_poly(&p.to_string(), &ctx)?, p);

    let s = textio::parse_support("{(3,0),(1,4)} + cone{(0,5),(2,2)}", &ctx)?;
    println!("support     {s}");
    let t = textio::parse_trop_poly("{(0,0)} + {(1,0)}*x1[0,1]^2", &ctx)?;
    println!("tropical    {t}");
    let phi = textio::parse_series("1/2*t1^2 - t2 + O(t^4)", &ctx)?;
    println!("series      {phi}");

    println!("{}", serde_json::to_string_pretty(&textio::series_json(&phi)).unwrap());
    println!("{}", textio::support_json(&s));

    let system = textio::parse_system("# two lines\nx1[1,0] - x2[0,0]\nx2[0,1]^2 # a square\n", &ctx)?;
    println!("system of {} polynomials", system.len());

    match textio::parse_diff_poly("x1[1,0]^2 - ", &ctx) {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
