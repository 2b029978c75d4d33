//! Polynomials over GF(p): squarefree part and distinct-degree factorization.
//!
//!     cargo run --example finite_field -- 10 7

use relprime::family::{build_f, known_cofactor};
use relprime::gfp::{distinct_degree_factorization, reduce_mod, squarefree_part};

fn main() -> relprime::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, p) = match args[..] {
        [n, p, ..] => (n as u32, p),
        _ => (9, 7),
    };
    let f = reduce_mod(&build_f(n)?, p)?;
    println!("f_{n} mod {p} = {f}");
    let s = squarefree_part(&f)?;
    println!("squarefree part: {s}");
    for (d, g) in distinct_degree_factorization(&s)? {
        println!("  degree-{d} factors ({}): {g}", g.degree().unwrap() / d);
    }
    if n >= 8 {
        let g = reduce_mod(&known_cofactor(n)?, p)?;
        if g.degree().unwrap_or(0) > 0 && g.is_squarefree() {
            println!("cofactor profile: {}", relprime::gfp::distinct_degree_profile(&g)?);
        }
    }
    Ok(())
}
