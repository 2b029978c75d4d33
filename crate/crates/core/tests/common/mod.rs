//! Independent oracles shared by the integration tests. None of these call
//! into the library's gcd, resultant or factoring code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};
use relprime::IntPoly;

// ---- rational Euclid ----

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rem_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let q = r.last().unwrap() / lb;
        let shift = r.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &q * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd over Q by the plain Euclidean algorithm.
pub fn rational_gcd(a: &IntPoly, b: &IntPoly) -> Vec<BigRational> {
    let to_q = |p: &IntPoly| -> Vec<BigRational> { p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect() };
    let (mut x, mut y) = (to_q(a), to_q(b));
    while !y.is_empty() {
        let r = rem_q(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c = &*c / &l;
        }
    }
    x
}

/// Monic rational form of an integer polynomial.
pub fn monic_q(p: &IntPoly) -> Vec<BigRational> {
    let l = BigRational::from_integer(p.leading().cloned().unwrap_or_else(BigInt::one));
    p.coeffs().iter().map(|c| BigRational::from_integer(c.clone()) / &l).collect()
}

// ---- schoolbook arithmetic ----

pub fn mul_naive(a: &[i64], b: &[i64]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += BigInt::from(*x) * BigInt::from(*y);
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

pub fn binom(n: u64, k: u64) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

// ---- binary forms and resultants ----

/// Coefficients `a_i` of `X1^i X2^(k-i)` in `p_k(X1, X2, -(X1+X2))`,
/// expanded straight from `X1^k + X2^k + (-1)^k (X1+X2)^k`.
pub fn power_sum_form(k: u64) -> Vec<BigInt> {
    let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut a: Vec<BigInt> = (0..=k).map(|i| &sign * binom(k, i)).collect();
    a[0] += 1;
    a[k as usize] += 1;
    a
}

/// Determinant by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant of two binary forms of exact degrees `a.len()-1`, `b.len()-1`
/// (coefficient lists in one variable), through the Sylvester matrix.
/// It vanishes iff the forms share a projective zero.
pub fn form_resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (da, db) = (a.len() - 1, b.len() - 1);
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for r in 0..db {
        for (i, c) in a.iter().rev().enumerate() {
            m[r][r + i] = c.clone();
        }
    }
    for r in 0..da {
        for (i, c) in b.iter().rev().enumerate() {
            m[db + r][r + i] = c.clone();
        }
    }
    bareiss_det(m)
}

/// Regularity of `(p_1, p_b, p_c)` decided by the form resultant.
pub fn regular_by_resultant(b: u64, c: u64) -> bool {
    !form_resultant(&power_sum_form(b), &power_sum_form(c)).is_zero()
}

// ---- factor search (Kronecker) ----

type Q = Ratio<i128>;

fn divisors(v: i128) -> Vec<i128> {
    let v = v.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            if d * d != v {
                out.push(v / d);
            }
        }
        d += 1;
    }
    out
}

fn eval_i(f: &[i128], x: i128) -> i128 {
    f.iter().rev().fold(0, |acc, c| acc * x + c)
}

/// Lagrange interpolation through `(xs[i], ys[i])`; `None` unless every
/// coefficient is an integer.
fn interpolate(xs: &[i128], ys: &[i128]) -> Option<Vec<i128>> {
    let n = xs.len();
    let mut acc = vec![Q::zero(); n];
    for i in 0..n {
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += *c;
                next[k] -= *c * Q::from_integer(xs[j]);
            }
            basis = next;
            denom *= Q::from_integer(xs[i] - xs[j]);
        }
        let scale = Q::from_integer(ys[i]) / denom;
        for (k, c) in basis.iter().enumerate() {
            acc[k] += *c * scale;
        }
    }
    acc.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

fn divides_exactly(f: &[i128], g: &[i128]) -> bool {
    let dg = g.len() - 1;
    let lg = g[dg];
    let mut r = f.to_vec();
    while r.len() > dg {
        let top = *r.last().unwrap();
        if top % lg != 0 {
            return false;
        }
        let q = top / lg;
        let shift = r.len() - 1 - dg;
        for (i, c) in g.iter().enumerate() {
            r[shift + i] -= q * c;
        }
        r.pop();
    }
    r.iter().all(|c| *c == 0)
}

/// A factor of degree in `1..=deg/2`, searched by Kronecker's method, or
/// `None` when the primitive polynomial `f` is irreducible over Q.
/// Intended for small degree and small coefficients only.
pub fn kronecker_factor(f: &[i64]) -> Option<Vec<i128>> {
    let f: Vec<i128> = f.iter().map(|&c| c as i128).collect();
    let deg = f.len() - 1;
    let mut points: Vec<(i128, i128)> = Vec::new();
    for x in (0..=8).flat_map(|k: i128| [k, -k]).skip(1) {
        let v = eval_i(&f, x);
        if v == 0 {
            return Some(vec![-x, 1]);
        }
        if !points.iter().any(|&(px, _)| px == x) {
            points.push((x, v));
        }
    }
    points.sort_by_key(|&(_, v)| v.abs());
    for d in 1..=deg / 2 {
        let pts = &points[..=d];
        let xs: Vec<i128> = pts.iter().map(|&(x, _)| x).collect();
        let choices: Vec<Vec<i128>> = pts
            .iter()
            .enumerate()
            .map(|(i, &(_, v))| {
                let ds = divisors(v);
                // the sign of a factor is free, so fix it at the first point
                if i == 0 {
                    ds
                } else {
                    ds.iter().flat_map(|&d| [d, -d]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; d + 1];
        loop {
            let ys: Vec<i128> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if let Some(g) = interpolate(&xs, &ys) {
                let mut g = g;
                while g.last() == Some(&0) {
                    g.pop();
                }
                if g.len() == d + 1 && divides_exactly(&f, &g) {
                    return Some(g);
                }
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    None
}

pub fn int_poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn is_primitive(c: &[i64]) -> bool {
    c.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
}

pub fn to_i64s(p: &IntPoly) -> Vec<i64> {
    p.coeffs().iter().map(|c| i64::try_from(c.clone()).expect("small coefficient")).collect()
}

pub fn abs_max(p: &IntPoly) -> BigInt {
    p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default()
}
