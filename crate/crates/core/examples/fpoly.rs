//! Build f_n, print it and its structural facts.
//!
//!     cargo run --example fpoly -- 10

use relprime::family::{build_f, known_cofactor, structural_facts};

fn main() -> relprime::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let f = build_f(n)?;
    println!("f_{n} = {f}");
    if n >= 2 {
        let s = structural_facts(n)?;
        println!("degree {}, leading coefficient {}, f(1) = {}", s.degree, s.leading, s.value_at_1);
        println!("X(X+1) | f: {}   X^2+X+1 | f: {}   palindromic: {}", s.divisible_by_x_x1, s.divisible_by_cyclo3, s.palindromic);
        let (content, prim) = f.content_and_primitive()?;
        println!("content {content}, primitive part {prim}");
    }
    if n >= 7 {
        println!("cofactor after removing the fixed divisor: {}", known_cofactor(n)?);
    }
    Ok(())
}
