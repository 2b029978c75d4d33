//! Pairwise gcd reports, the factor-degree irreducibility certificate, and
//! the arithmetic filter for even orders.
//!
//! The certificate rests on this fact: for a prime `p` missing both the
//! leading coefficient and the discriminant of `f`, every rational
//! irreducible factor of `f` has a degree that is a sum of degrees of
//! irreducible factors of `f mod p`. So the gcd `n_p` of those degrees
//! divides the degree of every rational factor, and so does the lcm `nu` of
//! the `n_p` over several primes. When `nu` equals `deg f`, `f` is
//! irreducible.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::build_f;
use crate::gfp::{self, primes, DegreeProfile};
use crate::intpoly::{gcd_primitive, IntPoly};

pub const DEFAULT_BUDGET: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdReport {
    pub m: u32,
    pub n: u32,
    pub gcd: IntPoly,
    pub trivial: bool,
    pub expected_trivial: bool,
    pub consistent: bool,
}

// Field order is part of the CLI output.
impl Serialize for GcdReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GcdReport", 5)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("gcd", &self.gcd)?;
        st.serialize_field("trivial", &self.trivial)?;
        st.serialize_field("consistent", &self.consistent)?;
        st.end()
    }
}

pub fn gcd_report(m: u32, n: u32, fm: &IntPoly, fn_: &IntPoly) -> Result<GcdReport> {
    let gcd = gcd_primitive(fm, fn_)?;
    let trivial = gcd.degree() == Some(0);
    let expected_trivial = (m as u64 * n as u64).is_multiple_of(6);
    Ok(GcdReport {
        m,
        n,
        gcd,
        trivial,
        expected_trivial,
        consistent: trivial == expected_trivial,
    })
}

pub fn gcd_f_pair(m: u32, n: u32) -> Result<GcdReport> {
    if m < 2 || m >= n {
        return Err(Error::Precondition(format!("gcd pair needs 2 <= m < n, got ({m}, {n})")));
    }
    gcd_report(m, n, &build_f(m)?, &build_f(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible,
    /// Every rational irreducible factor has degree divisible by this.
    FactorDegreeMultiple(usize),
    Inconclusive,
}

impl Verdict {
    pub fn label(&self) -> String {
        match self {
            Verdict::Irreducible => "Irreducible".into(),
            Verdict::FactorDegreeMultiple(nu) => format!("FactorDegreeMultiple({nu})"),
            Verdict::Inconclusive => "Inconclusive".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub p: u64,
    pub profile: DegreeProfile,
    pub np: usize,
}

impl Serialize for PrimeWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PrimeWitness", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("profile", &self.profile.entries)?;
        st.serialize_field("np", &self.np)?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub target: String,
    pub degree: usize,
    pub used_primes: Vec<PrimeWitness>,
    pub nu: usize,
    pub verdict: Verdict,
    /// All primes examined, including the skipped ones.
    pub primes_scanned: usize,
}

impl IrreducibilityCertificate {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }
}

impl Serialize for IrreducibilityCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IrreducibilityCertificate", 7)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("primes", &self.used_primes)?;
        st.serialize_field("nu", &self.nu)?;
        st.serialize_field("verdict", &self.verdict.label())?;
        st.serialize_field("primes_scanned", &self.primes_scanned)?;
        // nu divides the degree of every rational irreducible factor
        st.serialize_field("criterion", "factor-degree-divisibility")?;
        st.end()
    }
}

/// Squarefree over the rationals, i.e. nonzero discriminant.
pub fn is_squarefree_over_q(f: &IntPoly) -> Result<bool> {
    match f.degree() {
        None => Ok(false),
        Some(0) => Ok(true),
        Some(_) => Ok(gcd_primitive(f, &f.derivative())?.degree() == Some(0)),
    }
}

/// Scans primes in ascending order, skipping those that divide the leading
/// coefficient or the discriminant, until `nu` reaches the degree or
/// `max_primes` primes have been used.
///
/// A prime misses the discriminant exactly when it misses the leading
/// coefficient and the reduction stays squarefree, which is what is tested.
pub fn prop41_certificate(target: &IntPoly, name: &str, max_primes: usize) -> Result<IrreducibilityCertificate> {
    let degree = match target.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Degenerate("certificate target must have degree >= 1")),
    };
    if !is_squarefree_over_q(target)? {
        return Err(Error::NotSquarefree);
    }
    let lead = target.leading().unwrap().clone();
    let mut cert = IrreducibilityCertificate {
        target: name.to_string(),
        degree,
        used_primes: Vec::new(),
        nu: 1,
        verdict: Verdict::Inconclusive,
        primes_scanned: 0,
    };
    if degree == 1 {
        cert.verdict = Verdict::Irreducible;
        cert.nu = 1;
        return Ok(cert);
    }
    for p in primes().take_while(|&p| p <= gfp::MAX_PRIME) {
        if cert.used_primes.len() >= max_primes || cert.nu == degree {
            break;
        }
        cert.primes_scanned += 1;
        if lead.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let reduced = gfp::reduce_mod(target, p)?;
        if !reduced.is_squarefree() {
            continue;
        }
        let profile = gfp::distinct_degree_profile(&reduced)?;
        let np = profile.gcd_of_degrees();
        cert.nu = cert.nu.lcm(&np);
        cert.used_primes.push(PrimeWitness { p, profile, np });
    }
    cert.verdict = if cert.used_primes.is_empty() {
        Verdict::Inconclusive
    } else if cert.nu == degree {
        Verdict::Irreducible
    } else {
        Verdict::FactorDegreeMultiple(cert.nu)
    };
    Ok(cert)
}

/// Certificate at `budget`, retried once at `fallback` when the first run
/// is not conclusive.
pub fn certify_with_fallback(target: &IntPoly, name: &str, budget: usize, fallback: usize) -> Result<IrreducibilityCertificate> {
    let cert = prop41_certificate(target, name, budget)?;
    if cert.is_irreducible() || fallback <= budget {
        return Ok(cert);
    }
    prop41_certificate(target, name, fallback)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterVerdict {
    pub m: u32,
    pub n: u32,
    /// `(m - 1) | (n - 1)`
    pub cond_a1: bool,
    /// `m = n mod 2^(k+1)` where `2^k` exactly divides `m`
    pub cond_a2: bool,
    /// when `4 | m`: `(m/2 - 1) | (n/2 - 1)`
    pub cond_b: bool,
    pub passes_all: bool,
}

/// Necessary conditions for `gcd(f_m, f_n) != 1` with `m < n` both even.
/// `passes_all == false` rules out a common factor whenever `f_m` is
/// irreducible or `m = 3 * 2^k`.
pub fn prop31_filter(m: u32, n: u32) -> Result<FilterVerdict> {
    if !m.is_multiple_of(2) || !n.is_multiple_of(2) || m == 0 || m >= n {
        return Err(Error::Precondition(format!("filter needs even 0 < m < n, got ({m}, {n})")));
    }
    let cond_a1 = (n - 1).is_multiple_of(m - 1);
    let k = m.trailing_zeros();
    let modulus = 1u64 << (k + 1);
    let cond_a2 = (m as u64) % modulus == (n as u64) % modulus;
    let cond_b = if m.is_multiple_of(4) {
        let d = m / 2 - 1;
        n.is_multiple_of(2) && (n / 2 - 1).is_multiple_of(d)
    } else {
        true
    };
    Ok(FilterVerdict {
        m,
        n,
        cond_a1,
        cond_a2,
        cond_b,
        passes_all: cond_a1 && cond_a2 && cond_b,
    })
}
