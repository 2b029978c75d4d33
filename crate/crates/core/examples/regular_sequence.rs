//! Is (p_1, p_b, p_c) a regular sequence, p_k = X1^k + X2^k + X3^k?
//! Substituting X3 = -(X1 + X2) reduces the question to gcd(f_b, f_c).
//!
//!     cargo run --example regular_sequence -- 2 9

use relprime::family::build_f;
use relprime::intpoly::gcd_primitive;
use relprime::verify::{regseq_1bc, sweep_regseq};

fn main() -> relprime::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if let [b, c, ..] = args[..] {
        let g = gcd_primitive(&build_f(b)?, &build_f(c)?)?;
        println!("(p_1, p_{b}, p_{c}) regular: {}  (gcd = {g})", regseq_1bc(b, c)?);
        return Ok(());
    }
    for (b, c) in [(2, 3), (3, 5), (2, 4), (4, 9)] {
        println!("(1, {b}, {c}): {}", if regseq_1bc(b, c)? { "regular" } else { "not regular" });
    }
    print!("{}", sweep_regseq(24, 1)?.to_text());
    Ok(())
}
