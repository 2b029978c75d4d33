//! All pairs 2 <= m < n <= B: the gcd is trivial exactly when 6 | mn.
//!
//!     cargo run --release --example theorem_sweep -- 40

use relprime::verify::{resolve_jobs, sweep_theorem, theorem_pairs};

fn main() -> relprime::Result<()> {
    let bound: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let jobs = resolve_jobs(None);

    // a few of the common factors that appear when 6 does not divide mn
    for r in theorem_pairs(bound.min(12), jobs).into_iter().flatten().filter(|r| !r.trivial).take(8) {
        println!("gcd(f_{}, f_{}) = {}", r.m, r.n, r.gcd);
    }
    let report = sweep_theorem(bound, jobs)?;
    print!("{}", report.to_text());
    Ok(())
}
