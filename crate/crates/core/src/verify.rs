//! Batch verification: the pairwise gcd sweep, the cofactor irreducibility
//! sweep, the arithmetic modulo 127, the binomial and reduction lemmas, the
//! power-sum regular-sequence bridge, and report assembly.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::{self, build_f_range, build_phi, known_cofactor, PascalRows};
use crate::gfp::{self, int_order, is_primitive_root, mod_pow, reduce_mod};
use crate::intpoly::{gcd_primitive, IntPoly};
use crate::irred::{self, GcdReport, IrreducibilityCertificate};

pub(crate) fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Orders start at 2: `f_1` vanishes identically.
pub const RANGE_NOTE: &str = "orders range over 2..=bound; f_1 is identically zero and is excluded";

pub const DEFAULT_SWEEP_BOUND: u32 = 100;
pub const DEFAULT_APPENDIX_BOUND: u32 = 120;
pub const FULL_APPENDIX_BOUND: u32 = 605;
pub const DEFAULT_FALLBACK_BUDGET: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReportKind {
    Theorem,
    Appendix,
    RegSeq,
    Mod127,
    Lemmas,
    Table23,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: String,
    pub expected: String,
    pub actual: String,
}

/// One line of text output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub pass: bool,
    pub id: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub kind: ReportKind,
    pub bound: u32,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Wall-clock time; left out of JSON so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    #[serde(skip)]
    pub lines: Vec<CheckLine>,
}

impl SweepReport {
    fn new(kind: ReportKind, bound: u32) -> Self {
        SweepReport {
            kind,
            bound,
            checked: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
            pass: true,
            note: None,
            data: None,
            lines: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, id: String, expected: impl Into<String>, actual: impl Into<String>, verbose: bool) {
        self.checked += 1;
        let (expected, actual) = (expected.into(), actual.into());
        if !ok {
            self.failures.push(Failure { id: id.clone(), expected: expected.clone(), actual: actual.clone() });
        }
        if verbose || !ok {
            let detail = if ok { actual } else { format!("expected {expected}, got {actual}") };
            self.lines.push(CheckLine { pass: ok, id, detail });
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.pass = self.failures.is_empty();
        self.elapsed = start.elapsed();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Line-oriented `PASS/FAIL <identifier>: detail`, ending with a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(note) = &self.note {
            let _ = writeln!(out, "# {note}");
        }
        for l in &self.lines {
            let _ = writeln!(out, "{} {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.detail);
        }
        let _ = writeln!(
            out,
            "{} {:?}(bound={}): {} checked, {} failed in {:.2?}",
            if self.pass { "PASS" } else { "FAIL" },
            self.kind,
            self.bound,
            self.checked,
            self.failures.len(),
            self.elapsed
        );
        out
    }
}

/// Resolves a worker count: explicit value, then `RELPRIME_JOBS`, then the
/// available parallelism.
pub fn resolve_jobs(jobs: Option<usize>) -> usize {
    jobs.filter(|&j| j > 0)
        .or_else(|| std::env::var("RELPRIME_JOBS").ok().and_then(|v| v.parse().ok()).filter(|&j| j > 0))
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
}

/// Maps `items` on a pool of `jobs` workers, preserving input order.
fn ordered_map<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    use rayon::prelude::*;
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().map(f).collect())
}

/// Gcd reports for all `2 <= m < n <= bound`, in lexicographic order.
pub fn theorem_pairs(bound: u32, jobs: usize) -> Vec<Result<GcdReport>> {
    let fs = build_f_range(bound);
    let pairs: Vec<(u32, u32)> = (2..=bound)
        .flat_map(|m| ((m + 1)..=bound).map(move |n| (m, n)))
        .collect();
    ordered_map(pairs, jobs, |&(m, n)| {
        irred::gcd_report(m, n, &fs[m as usize - 1], &fs[n as usize - 1])
    })
}

/// Checks `deg gcd(f_m, f_n) = 0  <=>  6 | mn` for all `2 <= m < n <= bound`.
pub fn sweep_theorem(bound: u32, jobs: usize) -> Result<SweepReport> {
    if bound < 3 {
        return Err(Error::Precondition(format!("sweep bound must be at least 3, got {bound}")));
    }
    let start = Instant::now();
    let mut report = SweepReport::new(ReportKind::Theorem, bound);
    report.note = Some(RANGE_NOTE.into());
    let mut nontrivial = 0usize;
    for r in theorem_pairs(bound, jobs) {
        match r {
            Ok(r) => {
                if !r.trivial {
                    nontrivial += 1;
                }
                let expected = if r.expected_trivial { "gcd 1" } else { "nontrivial gcd" };
                report.record(r.consistent, format!("gcd({},{})", r.m, r.n), expected, r.gcd.to_string(), false);
            }
            Err(e) => report.record(false, "gcd".into(), "a gcd", e.to_string(), false),
        }
    }
    report.data = Some(serde_json::json!({ "nontrivial_pairs": nontrivial }));
    Ok(report.finish(start))
}

/// Target polynomial and name for the irreducibility certificate of order `n`.
pub fn irred_target(n: u32) -> Result<(IntPoly, String)> {
    match n {
        0..=5 => Err(Error::Precondition(format!("no irreducibility target for order {n}"))),
        6 => Ok((family::build_f(6)?.primitive_part(), "f_6".into())),
        _ if n.is_multiple_of(6) => Ok((known_cofactor(n)?, format!("f_{n}"))),
        _ => Ok((known_cofactor(n)?, format!("cofactor({n})"))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixEntry {
    pub n: u32,
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<IrreducibilityCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Certifies the cofactor of every order `7..=bound`, retrying at
/// `fallback` primes when `budget` is not enough. The quotient for `n = 7`
/// is the unit 1 and is recorded without a certificate.
pub fn appendix_entries(bound: u32, budget: usize, fallback: usize, jobs: usize) -> Vec<AppendixEntry> {
    let orders: Vec<u32> = (7..=bound).collect();
    ordered_map(orders, jobs, |&n| match irred_target(n) {
        Err(e) => AppendixEntry { n, degree: None, certificate: None, error: Some(e.to_string()) },
        Ok((target, _)) if target.degree() == Some(0) => {
            AppendixEntry { n, degree: Some(0), certificate: None, error: None }
        }
        Ok((target, name)) => match irred::certify_with_fallback(&target, &name, budget, fallback) {
            Ok(cert) => AppendixEntry { n, degree: target.degree(), certificate: Some(cert), error: None },
            Err(e) => AppendixEntry { n, degree: target.degree(), certificate: None, error: Some(e.to_string()) },
        },
    })
}

pub fn sweep_appendix(bound: u32, budget: usize, fallback: usize, jobs: usize) -> Result<SweepReport> {
    if bound < 7 {
        return Err(Error::Precondition(format!("appendix bound must be at least 7, got {bound}")));
    }
    let start = Instant::now();
    let mut report = SweepReport::new(ReportKind::Appendix, bound);
    report.note = Some(format!(
        "cofactors of orders 7..={bound} on primitive parts; prime budget {budget} (retry at {fallback}); order 7 has unit quotient"
    ));
    let entries = appendix_entries(bound, budget, fallback, jobs);
    for e in &entries {
        let id = format!("cofactor({})", e.n);
        match (&e.certificate, &e.error) {
            (_, Some(err)) => report.record(false, id, "Irreducible", err.clone(), true),
            (Some(c), None) => report.record(
                c.is_irreducible(),
                id,
                "Irreducible",
                format!("{} degree={} nu={} primes={}", c.verdict.label(), c.degree, c.nu, c.used_primes.len()),
                true,
            ),
            (None, None) => report.record(true, id, "unit", "unit quotient", true),
        }
    }
    report.data = Some(serde_json::to_value(&entries).expect("entries serialize"));
    Ok(report.finish(start))
}

/// Modular facts about `f_6(3)`, powers of 2, 3, 4 modulo 127, and the
/// sequences `S(k) = 4^k + 1`, `T(k) = 4^k + 3^k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mod127Facts {
    #[serde(serialize_with = "ser_bigint")]
    pub f6_at_3: BigInt,
    pub factorization: Vec<u64>,
    pub order_of_2: u64,
    pub order_of_3: u64,
    pub three_is_primitive_root: bool,
    /// `(k, S(k) mod 127)` for `k = 0..=6`
    pub s_values: Vec<(u64, u64)>,
    /// residues `k mod 126` with `127 | T(k)`, from `k = 0..504`
    pub t_zero_residues: BTreeSet<u64>,
    /// `(j, s(j))` with `127 | S(j) + 3^s(j)`, `0 <= s(j) < 126`
    pub s_table: Vec<(u64, u64)>,
}

fn trial_factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn mod127_facts() -> Result<Mod127Facts> {
    const M: u64 = 127;
    let f6_at_3 = family::build_f(6)?.evaluate(&BigInt::from(3));
    let factorization = trial_factor(f6_at_3.to_u64().expect("small value"));
    let s = |k: u64| (mod_pow(4, k, M) + 1) % M;
    let t = |k: u64| (mod_pow(4, k, M) + mod_pow(3, k, M) + 1) % M;
    let s_values = (0..=6).map(|k| (k, s(k))).collect();
    let t_zero_residues = (0..504).filter(|&k| t(k) == 0).map(|k| k % 126).collect();
    let mut s_table = Vec::new();
    for j in 0..=6 {
        let hits: Vec<u64> = (0..126).filter(|&e| (s(j) + mod_pow(3, e, M)).is_multiple_of(M)).collect();
        if hits.len() != 1 {
            return Err(Error::Precondition(format!("S({j}) + 3^e has {} zeros modulo 127", hits.len())));
        }
        s_table.push((j, hits[0]));
    }
    Ok(Mod127Facts {
        f6_at_3,
        factorization,
        order_of_2: int_order(2, M)?,
        order_of_3: int_order(3, M)?,
        three_is_primitive_root: is_primitive_root(3, M)?,
        s_values,
        t_zero_residues,
        s_table,
    })
}

pub fn check_mod127() -> Result<SweepReport> {
    let start = Instant::now();
    let facts = mod127_facts()?;
    let mut r = SweepReport::new(ReportKind::Mod127, 127);
    let show = |v: &dyn std::fmt::Debug| format!("{v:?}");
    r.record(facts.f6_at_3 == BigInt::from(4826), "f6(3)".into(), "4826", facts.f6_at_3.to_string(), true);
    r.record(facts.factorization == [2, 19, 127], "factor(f6(3))".into(), "[2, 19, 127]", show(&facts.factorization), true);
    r.record(facts.order_of_2 == 7, "ord127(2)".into(), "7", facts.order_of_2.to_string(), true);
    r.record(facts.order_of_3 == 126, "ord127(3)".into(), "126", facts.order_of_3.to_string(), true);
    r.record(facts.three_is_primitive_root, "primroot127(3)".into(), "true", facts.three_is_primitive_root.to_string(), true);
    let s_vals: Vec<u64> = facts.s_values.iter().map(|&(_, v)| v).collect();
    r.record(s_vals == [2, 5, 17, 65, 3, 9, 33], "S(0..6)".into(), "[2, 5, 17, 65, 3, 9, 33]", show(&s_vals), true);
    let periodic = (0..70u64).all(|k| (mod_pow(4, k, 127) + 1) % 127 == s_vals[(k % 7) as usize]);
    r.record(periodic, "S period 7".into(), "true", periodic.to_string(), true);
    let t: Vec<u64> = facts.t_zero_residues.iter().copied().collect();
    r.record(t == [6], "T zeros mod 126".into(), "[6]", show(&t), true);
    let s_tab: Vec<u64> = facts.s_table.iter().map(|&(_, v)| v).collect();
    r.record(s_tab == [9, 24, 101, 118, 64, 65, 6], "s(0..6)".into(), "[9, 24, 101, 118, 64, 65, 6]", show(&s_tab), true);
    let only_six = facts.s_table.iter().all(|&(j, sj)| (sj == j) == (j == 6));
    r.record(only_six, "s(j) = j only at 6".into(), "true", only_six.to_string(), true);
    r.data = Some(serde_json::to_value(&facts).expect("facts serialize"));
    Ok(r.finish(start))
}

/// Regularity of `(p_1, p_b, p_c)`, `p_k = X1^k + X2^k + X3^k`, decided
/// through the substitution `X3 = -(X1 + X2)`: the sequence is regular
/// exactly when `f_b` and `f_c` share no root.
pub fn regseq_1bc(b: u32, c: u32) -> Result<bool> {
    if b <= 1 || c <= b {
        return Err(Error::Precondition(format!("regular-sequence bridge needs 1 < b < c, got ({b}, {c})")));
    }
    let fb = family::build_f(b)?;
    let fc = family::build_f(c)?;
    Ok(gcd_primitive(&fb, &fc)?.degree() == Some(0))
}

pub fn sweep_regseq(bound: u32, jobs: usize) -> Result<SweepReport> {
    if bound < 3 {
        return Err(Error::Precondition(format!("regseq bound must be at least 3, got {bound}")));
    }
    let start = Instant::now();
    let mut r = SweepReport::new(ReportKind::RegSeq, bound);
    r.note = Some("triples (1, b, c) with 2 <= b < c <= bound".into());
    for rep in theorem_pairs(bound, jobs) {
        match rep {
            Ok(g) => {
                let expected = (g.m as u64 * g.n as u64).is_multiple_of(6);
                let label = |reg: bool| if reg { "regular" } else { "not regular" };
                r.record(g.trivial == expected, format!("regseq(1,{},{})", g.m, g.n), label(expected), label(g.trivial), false);
            }
            Err(e) => r.record(false, "regseq".into(), "a decision", e.to_string(), false),
        }
    }
    Ok(r.finish(start))
}

pub const FROBENIUS_BOUND: u64 = 200;
pub const PHI_BOUND: u64 = 700;

/// Binomial lemmas for primes up to `pmax`, `p^n <= nmax`, `s <= smax`;
/// the reduction identity `f_{mp} = f_m^p (mod p)` for `mp <= 200`; and the
/// divisibility of `phi_{p^k}` for `p^k <= 700`.
pub fn lemma_suite(pmax: u64, nmax: u64, smax: u64) -> Result<SweepReport> {
    let start = Instant::now();
    let mut r = SweepReport::new(ReportKind::Lemmas, nmax as u32);
    let ps: Vec<u64> = gfp::primes().take_while(|&p| p <= pmax).collect();
    r.note = Some(format!("primes {ps:?}; p^n <= {nmax}; s <= {smax}; reductions for mp <= {FROBENIUS_BOUND}; phi for p^k <= {PHI_BOUND}"));

    // Pascal rows C(p^n, *) for every needed p^n, one pass
    let mut wanted: Vec<(u64, u32)> = Vec::new();
    for &p in &ps {
        let mut q = p;
        let mut n = 1;
        while q <= nmax {
            wanted.push((p, n));
            q *= p;
            n += 1;
        }
    }
    let mut by_row: Vec<(u64, usize)> = wanted.iter().enumerate().map(|(i, &(p, n))| (p.pow(n), i)).collect();
    by_row.sort();
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); wanted.len()];
    let mut pascal = PascalRows::new();
    for &(q, i) in &by_row {
        pascal.advance_to(q as usize);
        rows[i] = pascal.row().to_vec();
    }
    for (i, &(p, n)) in wanted.iter().enumerate() {
        let row_p = &rows[wanted.iter().position(|&w| w == (p, 1)).unwrap()];
        let mut all = true;
        let mut detail = String::new();
        for s in (1..=smax).filter(|s| s % p != 0) {
            let c = family::binomial_checks_with_row(p, n, s, &rows[i], row_p)?;
            if !c.all() {
                all = false;
                detail = format!("s={s}: {c:?}");
                break;
            }
        }
        r.record(all, format!("binomial(p={p},n={n})"), "all divisibility checks", if all { "ok".into() } else { detail }, true);
    }

    let fs = build_f_range(FROBENIUS_BOUND as u32);
    for &p in &ps {
        let mut ok = true;
        let mut bad = String::new();
        for m in 1..=(FROBENIUS_BOUND / p) {
            let lhs = reduce_mod(&fs[(m * p) as usize - 1], p)?;
            let rhs = reduce_mod(&fs[m as usize - 1], p)?.pow(p);
            if lhs != rhs {
                ok = false;
                bad = format!("m={m}");
                break;
            }
        }
        r.record(ok, format!("reduction(f_mp = f_m^p mod {p})"), "holds", if ok { "holds".into() } else { bad }, true);
    }

    for &p in &ps {
        let mut k = 2;
        while p.pow(k) <= PHI_BOUND {
            let ok = family::phi_divisibility_check(p, k)?;
            r.record(ok, format!("phi(p={p},k={k})"), "divides", if ok { "divides" } else { "does not divide" }, true);
            k += 1;
        }
    }
    // integrality of phi_p for the same primes
    for &p in &ps {
        let ok = build_phi(p, 1).is_ok();
        r.record(ok, format!("phi(p={p}) integral"), "true", ok.to_string(), true);
    }
    Ok(r.finish(start))
}

pub fn check_table() -> SweepReport {
    let start = Instant::now();
    let mut r = SweepReport::new(ReportKind::Table23, 10);
    for id in family::table_identities() {
        let lhs = family::build_f(id.n).map(|f| f.to_string()).unwrap_or_default();
        r.record(id.holds, format!("({}) f_{}", id.label, id.n), id.expected.to_string(), lhs, true);
    }
    r.finish(start)
}
