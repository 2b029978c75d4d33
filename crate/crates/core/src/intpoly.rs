//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored little-endian: `coeffs[i]` is the coefficient of
//! `X^i`. The zero polynomial is the empty vector and has no numeric degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gfp::{self, GFpPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from little-endian coefficients, stripping
    /// trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `X^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Returns `p(X + c)`.
    pub fn shift(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() || self.is_zero() {
            return self.clone();
        }
        // Horner with the linear polynomial X + c, done in place.
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        for (filled, a) in self.coeffs.iter().rev().enumerate() {
            // out <- out * (X + c) + a, where out currently has `filled` terms
            for i in (1..=filled).rev() {
                let low = &out[i - 1] * c;
                let prev = std::mem::take(&mut out[i - 1]);
                out[i] += prev;
                out[i - 1] = low;
            }
            out[0] += a;
        }
        IntPoly::new(out)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroContent);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    /// `(c, q)` with `self = c * q`, `c > 0` and `q` primitive. The sign of
    /// `self` stays on `q`.
    pub fn content_and_primitive(&self) -> Result<(BigInt, IntPoly)> {
        let c = self.content()?;
        let q = if c.is_one() {
            self.clone()
        } else {
            IntPoly {
                coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
            }
        };
        Ok((c, q))
    }

    /// Primitive part with positive leading coefficient; zero maps to zero.
    pub fn primitive_part(&self) -> IntPoly {
        match self.content_and_primitive() {
            Ok((_, q)) => q.with_positive_leading(),
            Err(_) => IntPoly::zero(),
        }
    }

    fn with_positive_leading(self) -> IntPoly {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self,
        }
    }

    /// Palindromic as a degree-`n` polynomial: `a_k = a_{n-k}` for `k` in
    /// `0..=n`, zero-padding above the actual degree.
    pub fn is_palindromic_in(&self, n: usize) -> bool {
        if self.degree().is_some_and(|d| d > n) {
            return false;
        }
        (0..=n).all(|k| self.coeff(k) == self.coeff(n - k))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-remainder by zero");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut steps = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let offset = top - db;
            for c in r.iter_mut() {
                *c *= lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[offset + i] -= &lr * bc;
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            steps -= 1;
        }
        let mut rem = IntPoly::new(r);
        if steps > 0 {
            rem = rem.scale(&lb.pow(steps as u32));
        }
        rem
    }

    /// Exact division by an integer constant; every coefficient must divide.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<IntPoly> {
        if c.is_zero() {
            return Err(Error::NotDivisible);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            out.push(q);
        }
        Ok(IntPoly { coeffs: out })
    }

    /// Quotient `q` with `self = b * q`, provided the quotient over the
    /// rationals exists and has integer coefficients.
    pub fn divide_exact(&self, b: &IntPoly) -> Result<IntPoly> {
        let db = b.degree().ok_or(Error::Degenerate("division by zero polynomial"))?;
        let Some(da) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if da < db {
            return Err(Error::NotDivisible);
        }
        let lb = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= &qk * bc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(q))
    }

    /// Remainder on division by a monic polynomial, exact over the integers.
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        assert!(m.leading().is_some_and(|l| l.is_one()), "divisor must be monic");
        self.pseudo_rem(m)
    }

    pub fn reduce_mod(&self, p: u64) -> Result<GFpPoly> {
        gfp::reduce_mod(self, p)
    }
}

/// Gcd over the rationals, returned as a primitive integer polynomial with
/// positive leading coefficient.
///
/// A single modular image is tried first: for a prime not dividing either
/// leading coefficient the modular gcd degree bounds the rational one, so a
/// coprime image settles the answer. Otherwise the subresultant PRS runs.
pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    if a.is_zero() || b.is_zero() {
        return subresultant_gcd(a, b);
    }
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return Ok(IntPoly::one());
    }
    if coprime_modular_image(a, b) {
        return Ok(IntPoly::one());
    }
    subresultant_gcd(a, b)
}

/// True when some screening prime yields a coprime modular image.
fn coprime_modular_image(a: &IntPoly, b: &IntPoly) -> bool {
    const SCREEN: [u64; 3] = [999_983, 999_979, 999_961];
    let la = a.leading().unwrap();
    let lb = b.leading().unwrap();
    for &p in &SCREEN {
        let bp = BigInt::from(p);
        if (la % &bp).is_zero() || (lb % &bp).is_zero() {
            continue;
        }
        let (Ok(ra), Ok(rb)) = (gfp::reduce_mod(a, p), gfp::reduce_mod(b, p)) else {
            continue;
        };
        if let Ok(g) = ra.gcd(&rb) {
            return g.degree() == Some(0);
        }
    }
    false
}

/// Gcd via the subresultant polynomial remainder sequence, exact over the
/// integers. Same normalization as [`gcd_primitive`].
pub fn subresultant_gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) => return Ok(b.primitive_part()),
        (false, true) => return Ok(a.primitive_part()),
        _ => {}
    }
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if b.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(b.primitive_part());
        }
        if r.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let divisor = &g * h.clone().pow(delta);
        a = b;
        b = r.div_scalar_exact(&divisor).expect("subresultant division is exact");
        g = a.leading().unwrap().clone();
        h = next_h(&h, &g, delta);
    }
}

// h^(1-delta) * g^delta, exact.
fn next_h(h: &BigInt, g: &BigInt, delta: u32) -> BigInt {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        _ => {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            debug_assert!((&num % &den).is_zero());
            num / den
        }
    }
}

/// Resultant via the subresultant algorithm.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("resultant of a zero polynomial"));
    }
    let (ca, mut a) = a.content_and_primitive()?;
    let (cb, mut b) = b.content_and_primitive()?;
    let mut da = a.degree().unwrap();
    let mut db = b.degree().unwrap();
    let t = ca.pow(db as u32) * cb.pow(da as u32);
    let mut s = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    if db == 0 {
        // Res(a, c) = c^deg(a) for a constant c.
        return Ok(s * t * Pow::pow(&b.coeffs[0], da as u32));
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g * Pow::pow(&h, delta);
        a = b;
        b = r.div_scalar_exact(&divisor).expect("subresultant division is exact");
        g = a.leading().unwrap().clone();
        h = next_h(&h, &g, delta);
        da = a.degree().unwrap();
        db = b.degree().unwrap();
        if db == 0 {
            let lb = b.coeffs[0].clone();
            let hh = if da == 0 {
                h.clone()
            } else {
                let num = lb.pow(da as u32);
                let den = Pow::pow(&h, da as u32 - 1);
                num / den
            };
            return Ok(s * t * hh);
        }
    }
}

/// `(-1)^(d(d-1)/2) * Res(p, p') / lc(p)`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt> {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::Degenerate("discriminant needs degree >= 1")),
    };
    if d == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(p, &p.derivative())?;
    let lc = p.leading().unwrap();
    let (q, r) = res.div_rem(lc);
    debug_assert!(r.is_zero());
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Descending powers, e.g. `2*x^6 + 6*x^5 + 15*x^4 + 20*x^3 + 15*x^2 + 6*x + 2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffsRepr {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CoeffsRepr {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CoeffsRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}
