//! Binomial divisibility lemmas, the congruence f_mp = f_m^p (mod p), and
//! divisibility of the reduced phi polynomials.

use relprime::family::{binom_valuation_checks, build_phi};
use relprime::verify::lemma_suite;

fn main() -> relprime::Result<()> {
    println!("{:?}", binom_valuation_checks(3, 2, 5)?);
    println!("phi_5 = {}", build_phi(5, 1)?);
    let r = lemma_suite(5, 500, 6)?;
    print!("{}", r.to_text());
    Ok(())
}
