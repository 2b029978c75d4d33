//! gcd of two members of the family, by the modular screen and by the pure
//! subresultant sequence, plus the resultant.
//!
//!     cargo run --example gcd_pair -- 3 5

use relprime::family::build_f;
use relprime::intpoly::{gcd_primitive, resultant, subresultant_gcd};
use relprime::irred::gcd_f_pair;

fn main() -> relprime::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n, ..] => (m, n),
        _ => (63, 70),
    };
    let report = gcd_f_pair(m, n)?;
    println!("gcd(f_{m}, f_{n}) = {}", report.gcd);
    println!("6 | mn: {}, trivial: {}, consistent: {}", report.expected_trivial, report.trivial, report.consistent);
    println!("{}", serde_json::to_string(&report).unwrap());

    let (fm, fn_) = (build_f(m)?, build_f(n)?);
    assert_eq!(gcd_primitive(&fm, &fn_)?, subresultant_gcd(&fm, &fn_)?);
    if m + n <= 40 {
        println!("Res(f_{m}, f_{n}) = {}", resultant(&fm, &fn_)?);
    }
    Ok(())
}
