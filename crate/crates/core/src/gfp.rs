//! Polynomials over prime fields GF(p), squarefree parts, distinct-degree
//! factorization and multiplicative orders modulo an integer.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// Largest modulus accepted anywhere in the crate.
pub const MAX_PRIME: u64 = 1_000_000;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in ascending order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

fn check_prime(p: u64) -> Result<()> {
    if p > MAX_PRIME || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

/// Polynomial over GF(p) with residues in `[0, p)`, little-endian.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GFpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl GFpPoly {
    /// Reduces arbitrary residues into `[0, p)`. Fails when `p` is not a
    /// prime at most [`MAX_PRIME`].
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        check_prime(p)?;
        Ok(Self::from_reduced(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    fn from_reduced(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = GFpPoly { p, coeffs };
        f.normalize();
        f
    }

    pub fn zero(p: u64) -> Self {
        GFpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        GFpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        GFpPoly { p, coeffs: vec![0, 1] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    fn same_field(&self, other: &GFpPoly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &GFpPoly) -> Result<GFpPoly> {
        self.same_field(other)?;
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        Ok(Self::from_reduced(p, coeffs))
    }

    pub fn sub(&self, other: &GFpPoly) -> Result<GFpPoly> {
        self.same_field(other)?;
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + p - other.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        Ok(Self::from_reduced(p, coeffs))
    }

    pub fn mul(&self, other: &GFpPoly) -> Result<GFpPoly> {
        self.same_field(other)?;
        Ok(self.mul_raw(other))
    }

    fn mul_raw(&self, other: &GFpPoly) -> GFpPoly {
        let p = self.p;
        if self.is_zero() || other.is_zero() {
            return GFpPoly::zero(p);
        }
        // Products are below 2^40, so a few thousand can be summed in u64
        // before reducing.
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        let flush = (u64::MAX / ((p - 1) * (p - 1)) - 1).min(1 << 20) as usize;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
            if (i + 1) % flush == 0 {
                for c in acc.iter_mut() {
                    *c %= p;
                }
            }
        }
        Self::from_reduced(p, acc.into_iter().map(|c| c % p).collect())
    }

    pub fn scale(&self, c: u64) -> GFpPoly {
        let p = self.p;
        let c = c % p;
        Self::from_reduced(p, self.coeffs.iter().map(|&a| a * c % p).collect())
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> GFpPoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(l) => self.scale(mod_inv(l, self.p)),
        }
    }

    pub fn div_rem(&self, d: &GFpPoly) -> Result<(GFpPoly, GFpPoly)> {
        self.same_field(d)?;
        let dd = d.degree().ok_or(Error::Degenerate("division by zero polynomial"))?;
        let p = self.p;
        let Some(da) = self.degree() else {
            return Ok((GFpPoly::zero(p), GFpPoly::zero(p)));
        };
        if da < dd {
            return Ok((GFpPoly::zero(p), self.clone()));
        }
        let inv = mod_inv(d.leading().unwrap(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; da - dd + 1];
        for k in (0..=da - dd).rev() {
            let top = r[k + dd];
            if top == 0 {
                continue;
            }
            let qk = top * inv % p;
            q[k] = qk;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                r[k + i] = (r[k + i] + p - qk * dc % p) % p;
            }
        }
        r.truncate(dd);
        Ok((Self::from_reduced(p, q), Self::from_reduced(p, r)))
    }

    pub fn rem(&self, d: &GFpPoly) -> Result<GFpPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &GFpPoly) -> Result<GFpPoly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn derivative(&self) -> GFpPoly {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect();
        Self::from_reduced(p, coeffs)
    }

    pub fn pow(&self, e: u64) -> GFpPoly {
        let mut result = GFpPoly::one(self.p);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_raw(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_raw(&base);
            }
        }
        result
    }

    pub fn evaluate(&self, x: u64) -> u64 {
        let p = self.p;
        let x = x % p;
        self.coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }

    /// `h` with `h^p = self`, assuming the derivative vanishes (all
    /// exponents are multiples of p). Uses `a^p = a` on GF(p).
    fn pth_root(&self) -> GFpPoly {
        let p = self.p as usize;
        debug_assert!(self.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || i % p == 0));
        Self::from_reduced(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// True when the polynomial is nonzero and coprime to its derivative.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                !d.is_zero() && self.gcd(&d).map(|g| g.degree() == Some(0)).unwrap_or(false)
            }
        }
    }
}

/// Coefficientwise reduction of an integer polynomial into GF(p).
pub fn reduce_mod(a: &IntPoly, p: u64) -> Result<GFpPoly> {
    check_prime(p)?;
    let bp = BigInt::from(p);
    let coeffs = a
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&bp).to_u64().unwrap())
        .collect();
    Ok(GFpPoly::from_reduced(p, coeffs))
}

/// `base^e mod modulus` by square-and-multiply.
pub fn pow_mod_poly(base: &GFpPoly, e: &BigUint, modulus: &GFpPoly) -> Result<GFpPoly> {
    base.same_field(modulus)?;
    if modulus.degree().is_none_or(|d| d < 1) {
        return Err(Error::Degenerate("modulus must have degree >= 1"));
    }
    let b = base.rem(modulus)?;
    let mut result = GFpPoly::one(base.p);
    for i in (0..e.bits()).rev() {
        result = result.mul_raw(&result).rem(modulus)?;
        if e.bit(i) {
            result = result.mul_raw(&b).rem(modulus)?;
        }
    }
    Ok(result)
}

/// Monic product of the distinct irreducible factors of `f`.
pub fn squarefree_part(f: &GFpPoly) -> Result<GFpPoly> {
    if f.is_zero() {
        return Err(Error::Degenerate("squarefree part of zero"));
    }
    let f = f.monic();
    if f.degree() == Some(0) {
        return Ok(GFpPoly::one(f.p));
    }
    let d = f.derivative();
    if d.is_zero() {
        return squarefree_part(&f.pth_root());
    }
    let mut g = f.gcd(&d)?;
    // primes whose multiplicity in f is not a multiple of p
    let w = f.div_rem(&g)?.0;
    loop {
        let y = g.gcd(&w)?;
        if y.degree() == Some(0) {
            break;
        }
        g = g.div_rem(&y)?.0;
    }
    if g.degree() == Some(0) {
        return Ok(w);
    }
    // what is left of g is a p-th power
    let rest = squarefree_part(&g.pth_root())?;
    Ok(w.mul_raw(&rest))
}

/// Multiset of irreducible-factor degrees of a squarefree polynomial over
/// GF(p), as sorted `(degree, count)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub p: u64,
    pub entries: Vec<(usize, usize)>,
    pub degree: usize,
}

impl DegreeProfile {
    /// Gcd of the factor degrees (`n_p` in the irreducibility criterion).
    pub fn gcd_of_degrees(&self) -> usize {
        self.entries.iter().fold(0, |g, &(d, _)| g.gcd(&d))
    }

    pub fn factor_count(&self) -> usize {
        self.entries.iter().map(|&(_, c)| c).sum()
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} deg={} [", self.p, self.degree)?;
        for (i, (d, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}^{c}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for DegreeProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DegreeProfile", 3)?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("entries", &self.entries)?;
        st.serialize_field("degree", &self.degree)?;
        st.end()
    }
}

/// Frobenius map `h -> h^p mod f` as the matrix of `X^(ip) mod f`.
struct Frobenius {
    p: u64,
    rows: Vec<Vec<u64>>,
    n: usize,
}

impl Frobenius {
    fn new(f: &GFpPoly) -> Result<Self> {
        let p = f.p;
        let n = f.degree().unwrap();
        let xp = pow_mod_poly(&GFpPoly::x(p), &BigUint::from(p), f)?;
        let mut rows = Vec::with_capacity(n);
        let mut cur = GFpPoly::one(p);
        for _ in 0..n {
            let mut row = cur.coeffs.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = cur.mul_raw(&xp).rem(f)?;
        }
        Ok(Frobenius { p, rows, n })
    }

    fn apply(&self, h: &GFpPoly) -> GFpPoly {
        let p = self.p;
        let mut acc = vec![0u64; self.n];
        let flush = (u64::MAX / ((p - 1) * (p - 1)) - 1).min(1 << 20) as usize;
        let mut pending = 0;
        for (i, &c) in h.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(&self.rows[i]) {
                *a += c * r;
            }
            pending += 1;
            if pending == flush {
                for a in acc.iter_mut() {
                    *a %= p;
                }
                pending = 0;
            }
        }
        GFpPoly::from_reduced(p, acc.into_iter().map(|a| a % p).collect())
    }
}

/// Distinct-degree factorization of a squarefree polynomial: pairs
/// `(d, g_d)` where `g_d` is the monic product of all irreducible factors of
/// degree `d`.
pub fn distinct_degree_factorization(f: &GFpPoly) -> Result<Vec<(usize, GFpPoly)>> {
    let Some(n) = f.degree() else {
        return Err(Error::Degenerate("distinct-degree factorization of zero"));
    };
    if n == 0 {
        return Err(Error::Degenerate("distinct-degree factorization of a constant"));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let f = f.monic();
    let p = f.p;
    let frob = Frobenius::new(&f)?;
    let x = GFpPoly::x(p);
    let mut rest = f.clone();
    let mut h = x.rem(&f)?;
    let mut parts = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap() >= 2 * d {
        h = frob.apply(&h);
        let g = rest.gcd(&h.sub(&x)?.rem(&rest)?)?;
        if g.degree().unwrap() > 0 {
            rest = rest.div_rem(&g)?.0;
            parts.push((d, g));
        }
        d += 1;
    }
    if let Some(r) = rest.degree().filter(|&r| r > 0) {
        parts.push((r, rest));
    }
    Ok(parts)
}

pub fn distinct_degree_profile(f: &GFpPoly) -> Result<DegreeProfile> {
    let parts = distinct_degree_factorization(f)?;
    let entries = parts
        .iter()
        .map(|(d, g)| (*d, g.degree().unwrap() / d))
        .collect();
    Ok(DegreeProfile {
        p: f.p,
        entries,
        degree: f.degree().unwrap(),
    })
}

impl fmt::Display for GFpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lifted = IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        write!(f, "{lifted} (mod {})", self.p)
    }
}

pub fn mod_pow(base: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut r = 1u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    r as u64
}

/// Multiplicative order of `a` modulo `m`.
pub fn int_order(a: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Precondition(format!("modulus {m} must be at least 2")));
    }
    if a.gcd(&m) != 1 {
        return Err(Error::NotCoprime(a, m));
    }
    let mut k = 1;
    let mut x = a % m;
    while x != 1 {
        x = ((x as u128 * a as u128) % m as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// `a` generates the unit group modulo the prime `m`.
pub fn is_primitive_root(a: u64, m: u64) -> Result<bool> {
    Ok(int_order(a, m)? == m - 1 && is_prime(m))
}
