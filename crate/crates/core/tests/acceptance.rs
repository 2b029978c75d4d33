//! Acceptance gate: every criterion at its stated tolerance, one line each.

mod common;

use std::time::Instant;

use common::{int_poly, monic_q, rational_gcd, regular_by_resultant};
use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use relprime::family::{self, build_f, build_f_range, eisenstein_check, is_sum_of_two_3powers, phi_divisibility_check};
use relprime::gfp::{distinct_degree_factorization, distinct_degree_profile, reduce_mod, squarefree_part, GFpPoly};
use relprime::intpoly::subresultant_gcd;
use relprime::irred::{certify_with_fallback, DEFAULT_BUDGET};
use relprime::verify::{self, irred_target, resolve_jobs, DEFAULT_FALLBACK_BUDGET};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn theorem_sweep(jobs: usize) -> Outcome {
    let r = verify::sweep_theorem(100, jobs).map_err(|e| e.to_string())?;
    ensure(r.checked == 4851, format!("{} pairs checked, expected 4851", r.checked))?;
    ensure(r.pass, format!("{} inconsistent pairs, first {:?}", r.failures.len(), r.failures.first()))?;
    let nontrivial = r.data.as_ref().and_then(|d| d["nontrivial_pairs"].as_u64()).unwrap_or(0);
    Ok(format!("4851 pairs, {nontrivial} with a common factor, all with 6 ∤ mn"))
}

fn table() -> Outcome {
    let ids = family::table_identities();
    let labels: Vec<&str> = ids.iter().map(|i| i.label).collect();
    for l in ["a", "b", "c", "d", "e", "f", "g", "h", "i"] {
        ensure(labels.contains(&l), format!("identity ({l}) missing"))?;
    }
    let bad: Vec<&str> = ids.iter().filter(|i| !i.holds).map(|i| i.label).collect();
    ensure(bad.is_empty(), format!("identities {bad:?} fail"))?;
    ensure(verify::check_table().pass, "table report failed")?;
    Ok(format!("{} identities (a)-(i) hold exactly", ids.len()))
}

fn eisenstein() -> Outcome {
    let listed = [6u32, 12, 18, 30, 36, 54, 84, 90];
    for &m in &listed {
        let t = build_f(m).map_err(|e| e.to_string())?.shift(&BigInt::one());
        ensure(eisenstein_check(&t, 3), format!("f_{m}(X+1) not 3-Eisenstein"))?;
    }
    let sums: Vec<u32> = (1..=100).filter(|&m| is_sum_of_two_3powers(m as u64)).collect();
    ensure(sums == listed, format!("sums of two powers of 3: {sums:?}"))?;
    Ok(format!("{listed:?} Eisenstein at 3 and exactly the sums 3^k + 3^l"))
}

fn certificates() -> Outcome {
    let orders = [6u32, 12, 18, 30, 36, 42, 60, 66, 72, 78, 8, 9, 10, 88];
    let mut notes = Vec::new();
    for n in orders {
        let (target, name) = irred_target(n).map_err(|e| e.to_string())?;
        let cert = certify_with_fallback(&target, &name, DEFAULT_BUDGET, DEFAULT_FALLBACK_BUDGET).map_err(|e| e.to_string())?;
        ensure(cert.is_irreducible(), format!("{name}: {}", cert.verdict.label()))?;
        if n == 88 {
            ensure(cert.degree == 84, format!("cofactor(88) has degree {}", cert.degree))?;
        }
        if cert.used_primes.len() > DEFAULT_BUDGET {
            notes.push(format!("{name} needed {} primes", cert.used_primes.len()));
        }
    }
    let tail = if notes.is_empty() { "all within 50 kept primes".to_string() } else { format!("fallback: {}", notes.join(", ")) };
    Ok(format!("{} targets irreducible; {tail}", orders.len()))
}

fn appendix(jobs: usize) -> Outcome {
    let r = verify::sweep_appendix(120, DEFAULT_BUDGET, DEFAULT_FALLBACK_BUDGET, jobs).map_err(|e| e.to_string())?;
    ensure(r.pass, format!("failures: {:?}", r.failures))?;
    let entries = r.data.as_ref().and_then(|d| d.as_array()).cloned().unwrap_or_default();
    let retried = entries
        .iter()
        .filter(|e| e["certificate"]["primes"].as_array().is_some_and(|p| p.len() > DEFAULT_BUDGET))
        .count();
    Ok(format!("{} orders 7..=120 certified ({retried} via the 200-prime retry)", r.checked))
}

fn mod127() -> Outcome {
    let f = verify::mod127_facts().map_err(|e| e.to_string())?;
    ensure(f.f6_at_3 == BigInt::from(4826) && f.factorization == [2, 19, 127], "f_6(3)")?;
    ensure(f.order_of_2 == 7 && f.order_of_3 == 126, "orders")?;
    let s: Vec<u64> = f.s_values.iter().map(|x| x.1).collect();
    ensure(s == [2, 5, 17, 65, 3, 9, 33], format!("S values {s:?}"))?;
    ensure(f.t_zero_residues.iter().copied().collect::<Vec<_>>() == [6], "T zeros")?;
    let t: Vec<u64> = f.s_table.iter().map(|x| x.1).collect();
    ensure(t == [9, 24, 101, 118, 64, 65, 6], format!("s table {t:?}"))?;
    ensure(verify::check_mod127().map_err(|e| e.to_string())?.pass, "mod127 report")?;
    Ok("4826 = 2·19·127, ord(2) = 7, ord(3) = 126, S and s tables match".into())
}

fn lemmas() -> Outcome {
    let r = verify::lemma_suite(7, 3000, 10).map_err(|e| e.to_string())?;
    let binom: Vec<_> = r.lines.iter().filter(|l| l.id.starts_with("binomial(")).collect();
    // p^n <= 3000: 11 + 7 + 4 + 4 pairs (p, n)
    ensure(binom.len() == 26, format!("{} (p, n) cases, expected 26", binom.len()))?;
    let bad: Vec<&str> = binom.iter().filter(|l| !l.pass).map(|l| l.id.as_str()).collect();
    ensure(bad.is_empty(), format!("failing {bad:?}"))?;
    // spot check the standalone entry point
    for (p, n, s) in [(2u64, 3u32, 5u64), (3, 2, 7), (5, 2, 3), (7, 1, 10)] {
        ensure(family::binom_valuation_suite(p, n, s).map_err(|e| e.to_string())?, format!("suite({p},{n},{s})"))?;
    }
    Ok("26 (p, n) cases, s <= 10 with p ∤ s".into())
}

fn frobenius() -> Outcome {
    let fs = build_f_range(200);
    let mut count = 0;
    for p in [2u64, 3, 5, 7] {
        for m in 1..=(200 / p) {
            let lhs = reduce_mod(&fs[(m * p) as usize - 1], p).map_err(|e| e.to_string())?;
            let rhs = reduce_mod(&fs[m as usize - 1], p).map_err(|e| e.to_string())?.pow(p);
            ensure(lhs == rhs, format!("f_{} != f_{m}^{p} mod {p}", m * p))?;
            count += 1;
        }
    }
    Ok(format!("{count} congruences f_mp = f_m^p (mod p)"))
}

fn phi() -> Outcome {
    let mut count = 0;
    for p in [2u64, 3, 5, 7] {
        let mut k = 2;
        while p.pow(k) <= 700 {
            ensure(phi_divisibility_check(p, k).map_err(|e| e.to_string())?, format!("p={p}, k={k}"))?;
            count += 1;
            k += 1;
        }
    }
    Ok(format!("{count} pairs (p, k)"))
}

fn regseq(jobs: usize) -> Outcome {
    let r = verify::sweep_regseq(100, jobs).map_err(|e| e.to_string())?;
    ensure(r.pass && r.checked == 4851, format!("sweep: {} checked, {:?}", r.checked, r.failures.first()))?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut disagreements = Vec::new();
    for _ in 0..200 {
        let b = rng.gen_range(2..30u32);
        let c = rng.gen_range(b + 1..=30u32);
        let bridge = verify::regseq_1bc(b, c).map_err(|e| e.to_string())?;
        if bridge != regular_by_resultant(b as u64, c as u64) {
            disagreements.push((b, c));
        }
    }
    ensure(disagreements.is_empty(), format!("oracle disagrees on {disagreements:?}"))?;
    Ok("4851 triples match 6 | bc; 200 random pairs match the resultant oracle".into())
}

fn oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    let poly = |rng: &mut StdRng, deg: usize, bound: i64| -> Vec<i64> {
        let d = rng.gen_range(0..=deg);
        let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
        if c[d] == 0 {
            c[d] = 1;
        }
        c
    };
    for i in 0..1000 {
        let (a, b) = (int_poly(&poly(&mut rng, 12, 1000)), int_poly(&poly(&mut rng, 12, 1000)));
        // every third pair gets a planted common factor
        let (a, b) = if i % 3 == 0 {
            let c = int_poly(&poly(&mut rng, 4, 20));
            (&a * &c, &b * &c)
        } else {
            (a, b)
        };
        let g = subresultant_gcd(&a, &b).map_err(|e| e.to_string())?;
        ensure(monic_q(&g) == rational_gcd(&a, &b), format!("gcd mismatch on {a} and {b}"))?;
    }
    for _ in 0..300 {
        let p = [2u64, 3, 5, 7, 127][rng.gen_range(0..5)];
        let c: Vec<u64> = (0..rng.gen_range(2..=25)).map(|_| rng.gen_range(0..p)).collect();
        let f = GFpPoly::new(p, c).map_err(|e| e.to_string())?;
        if f.degree().unwrap_or(0) == 0 {
            continue;
        }
        let s = squarefree_part(&f).map_err(|e| e.to_string())?;
        if s.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut prod = GFpPoly::one(p);
        for (_, g) in distinct_degree_factorization(&s).map_err(|e| e.to_string())? {
            prod = prod.mul(&g).map_err(|e| e.to_string())?;
        }
        ensure(prod == s.monic(), format!("DDF of {s} does not reassemble"))?;
        let prof = distinct_degree_profile(&s).map_err(|e| e.to_string())?;
        ensure(prof.entries.iter().map(|&(d, k)| d * k).sum::<usize>() == prof.degree, "profile degree")?;
    }
    for _ in 0..1000 {
        let p = [2u64, 3, 5, 7, 127][rng.gen_range(0..5)];
        let (a, b) = (int_poly(&poly(&mut rng, 12, 1000)), int_poly(&poly(&mut rng, 12, 1000)));
        let (ra, rb) = (reduce_mod(&a, p).unwrap(), reduce_mod(&b, p).unwrap());
        ensure(reduce_mod(&(&a * &b), p).unwrap() == ra.mul(&rb).unwrap(), "reduce(ab)")?;
        ensure(reduce_mod(&(&a + &b), p).unwrap() == ra.add(&rb).unwrap(), "reduce(a+b)")?;
    }
    Ok("1000 gcd pairs, 300 DDF reassemblies, 1000 reduction cases".into())
}

fn main() {
    let jobs = resolve_jobs(None);
    let criteria: Vec<Criterion> = vec![
        ("1 theorem sweep m<n<=100", Box::new(move || theorem_sweep(jobs))),
        ("2 factorization table", Box::new(table)),
        ("3 Eisenstein orders", Box::new(eisenstein)),
        ("4 irreducibility certificates", Box::new(certificates)),
        ("5 appendix sweep to 120", Box::new(move || appendix(jobs))),
        ("6 arithmetic mod 127", Box::new(mod127)),
        ("7 binomial valuation lemmas", Box::new(lemmas)),
        ("8 Frobenius congruence", Box::new(frobenius)),
        ("9 phi divisibility", Box::new(phi)),
        ("10 regular-sequence bridge", Box::new(move || regseq(jobs))),
        ("11 oracle equivalence", Box::new(oracles)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{name}] {detail} ({t:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{name}] {why} ({t:.2?})");
            }
        }
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
