//! Irreducibility certificates for the cofactors of orders 7..=B.
//!
//!     cargo run --release --example appendix_sweep -- 60

use relprime::irred::DEFAULT_BUDGET;
use relprime::verify::{appendix_entries, resolve_jobs, DEFAULT_FALLBACK_BUDGET};

fn main() {
    let bound: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    let entries = appendix_entries(bound, DEFAULT_BUDGET, DEFAULT_FALLBACK_BUDGET, resolve_jobs(None));
    let mut ok = 0;
    for e in &entries {
        match (&e.certificate, &e.error) {
            (Some(c), _) => {
                ok += c.is_irreducible() as usize;
                println!("{:>4}  deg {:>3}  {:<13} primes {:>3}", e.n, c.degree, c.verdict.label(), c.used_primes.len());
            }
            (None, Some(err)) => println!("{:>4}  error: {err}", e.n),
            (None, None) => {
                ok += 1;
                println!("{:>4}  unit quotient", e.n)
            }
        }
    }
    println!("{ok} of {} orders certified", entries.len());
}
