//! The degree-profile certificate step by step: factor-degree profiles
//! modulo successive primes, and the lcm of their gcds.
//!
//!     cargo run --release --example irreducibility -- 88

use relprime::irred::{prop41_certificate, DEFAULT_BUDGET};
use relprime::verify::irred_target;

fn main() -> relprime::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let (target, name) = irred_target(n)?;
    println!("{name} = {target}");
    let cert = prop41_certificate(&target, &name, DEFAULT_BUDGET)?;
    let mut nu = 1;
    for w in &cert.used_primes {
        nu = num_integer::lcm(nu, w.np);
        println!("p = {:>3}  n_p = {:>2}  nu = {:>3}  {}", w.p, w.np, nu, w.profile);
    }
    println!("{}: {} (degree {}, {} primes scanned)", cert.target, cert.verdict.label(), cert.degree, cert.primes_scanned);
    Ok(())
}
