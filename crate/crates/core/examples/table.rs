//! The closed-form factorizations of f_2, ..., f_10.

use relprime::family::{build_f, table_identities};

fn main() {
    for id in table_identities() {
        let mark = if id.holds { "ok " } else { "BAD" };
        println!("{mark} ({:<2}) f_{:<2} = {}", id.label, id.n, build_f(id.n).unwrap());
    }
}
