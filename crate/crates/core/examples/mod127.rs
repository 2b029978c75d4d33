//! Arithmetic modulo 127 around f_6(3) = 4826 = 2 * 19 * 127.

use relprime::gfp::{int_order, mod_pow};
use relprime::verify::{check_mod127, mod127_facts};

fn main() -> relprime::Result<()> {
    let facts = mod127_facts()?;
    println!("f_6(3) = {} = {:?}", facts.f6_at_3, facts.factorization);
    println!("ord(2) = {}, ord(3) = {}", int_order(2, 127)?, int_order(3, 127)?);
    for e in [6, 7, 14, 21, 42, 63] {
        println!("3^{e} = {} (mod 127)", mod_pow(3, e, 127));
    }
    println!("S(k) = 4^k + 1:  {:?}", facts.s_values);
    println!("127 | 4^k + 3^k + 1 only for k = {:?} (mod 126)", facts.t_zero_residues);
    println!("s(j):  {:?}", facts.s_table);
    print!("{}", check_mod127()?.to_text());
    Ok(())
}
