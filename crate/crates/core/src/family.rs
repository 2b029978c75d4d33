//! The family `f_n(X) = (1 + X)^n + (-1)^n (X^n + 1)`, its distinguished
//! cofactors, and the binomial and Eisenstein facts used to study it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfp::{self, is_prime};
use crate::intpoly::IntPoly;

/// Rows of Pascal's triangle, built by the additive recurrence.
pub struct PascalRows {
    row: Vec<BigInt>,
}

impl PascalRows {
    pub fn new() -> Self {
        PascalRows { row: vec![BigInt::one()] }
    }

    /// Index of the current row.
    pub fn index(&self) -> usize {
        self.row.len() - 1
    }

    pub fn row(&self) -> &[BigInt] {
        &self.row
    }

    pub fn advance(&mut self) {
        let mut next = Vec::with_capacity(self.row.len() + 1);
        next.push(BigInt::one());
        for w in self.row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        self.row = next;
    }

    pub fn advance_to(&mut self, n: usize) {
        assert!(n >= self.index(), "Pascal rows only move forward");
        while self.index() < n {
            self.advance();
        }
    }
}

impl Default for PascalRows {
    fn default() -> Self {
        Self::new()
    }
}

/// `C(n, k)` for every `k` in `0..=n`.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut rows = PascalRows::new();
    rows.advance_to(n);
    rows.row
}

fn f_from_row(row: &[BigInt]) -> IntPoly {
    let n = row.len() - 1;
    let mut coeffs = row.to_vec();
    let sign = if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    coeffs[0] += &sign;
    coeffs[n] += &sign;
    IntPoly::new(coeffs)
}

pub fn build_f(n: u32) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::NonPositiveOrder);
    }
    Ok(f_from_row(&binomial_row(n as usize)))
}

/// `f_1, ..., f_max` sharing one pass over Pascal's triangle. Index `i`
/// holds `f_{i+1}`.
pub fn build_f_range(max: u32) -> Vec<IntPoly> {
    let mut rows = PascalRows::new();
    (1..=max as usize)
        .map(|n| {
            rows.advance_to(n);
            f_from_row(rows.row())
        })
        .collect()
}

pub fn cyclotomic3() -> IntPoly {
    IntPoly::from_i64s(&[1, 1, 1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFacts {
    pub n: u32,
    pub degree: usize,
    #[serde(serialize_with = "crate::verify::ser_bigint")]
    pub leading: BigInt,
    pub divisible_by_x_x1: bool,
    pub divisible_by_cyclo3: bool,
    #[serde(serialize_with = "crate::verify::ser_bigint")]
    pub value_at_1: BigInt,
    pub palindromic: bool,
}

pub fn structural_facts(n: u32) -> Result<StructuralFacts> {
    if n < 2 {
        return Err(Error::Precondition(format!("structural facts need n >= 2, got {n}")));
    }
    let f = build_f(n)?;
    Ok(facts_of(n, &f))
}

fn facts_of(n: u32, f: &IntPoly) -> StructuralFacts {
    let zero = BigInt::zero();
    let minus_one = -BigInt::one();
    StructuralFacts {
        n,
        degree: f.degree().expect("f_n is nonzero for n >= 2"),
        leading: f.leading().unwrap().clone(),
        divisible_by_x_x1: f.evaluate(&zero).is_zero() && f.evaluate(&minus_one).is_zero(),
        divisible_by_cyclo3: f.rem_monic(&cyclotomic3()).is_zero(),
        value_at_1: f.evaluate(&BigInt::one()),
        palindromic: f.is_palindromic_in(n as usize),
    }
}

/// Largest `k` with `m^k` dividing `f`, for a monic `m` of positive degree.
pub fn multiplicity(f: &IntPoly, m: &IntPoly) -> usize {
    let mut f = f.clone();
    let mut k = 0;
    while !f.is_zero() {
        match f.divide_exact(m) {
            Ok(q) => {
                f = q;
                k += 1;
            }
            Err(_) => break,
        }
    }
    k
}

/// The fixed divisor removed from `f_n` according to `n mod 6`.
pub fn cofactor_divisor(n: u32) -> Result<IntPoly> {
    Ok(match n % 6 {
        0 => IntPoly::one(),
        1 => build_f(7)?.primitive_part(),
        r => build_f(r)?.primitive_part(),
    })
}

/// `primpart(f_n) / divisor`, where the divisor is `primpart(f_7)` for
/// `n = 1 mod 6`, `primpart(f_r)` for `r = n mod 6` in `2..=5`, and 1 when
/// `6 | n`.
pub fn known_cofactor(n: u32) -> Result<IntPoly> {
    if n < 7 {
        return Err(Error::Precondition(format!("known cofactor needs n >= 7, got {n}")));
    }
    build_f(n)?.primitive_part().divide_exact(&cofactor_divisor(n)?)
}

/// `p`-Eisenstein test: `p` misses the leading coefficient, divides every
/// other coefficient, and `p^2` misses the constant term.
pub fn eisenstein_check(f: &IntPoly, p: u64) -> bool {
    let Some(d) = f.degree().filter(|&d| d >= 1) else {
        return false;
    };
    let p = BigInt::from(p);
    let divides = |c: &BigInt| c.is_multiple_of(&p);
    let coeffs = f.coeffs();
    !divides(&coeffs[d])
        && coeffs[..d].iter().all(divides)
        && !coeffs[0].is_multiple_of(&(&p * &p))
}

pub fn is_sum_of_two_3powers(m: u64) -> bool {
    let powers: Vec<u64> = std::iter::successors(Some(3u64), |&x| x.checked_mul(3))
        .take_while(|&x| x < m)
        .collect();
    powers
        .iter()
        .any(|&a| powers.iter().any(|&b| a <= b && a + b == m))
}

/// `f_{p^k} / p`, integral because every coefficient of `f_{p^k}` is a
/// multiple of `p`.
pub fn build_phi(p: u64, k: u32) -> Result<IntPoly> {
    if !is_prime(p) || k == 0 {
        return Err(Error::Precondition(format!("build_phi needs prime p and k >= 1, got ({p}, {k})")));
    }
    let n = p
        .checked_pow(k)
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::Precondition(format!("{p}^{k} too large")))?;
    let phi = build_f(n)?.div_scalar_exact(&BigInt::from(p));
    assert!(phi.is_ok(), "f_{{{p}^{k}}} has a coefficient prime to {p}");
    phi
}

/// Checks that `phi_{p^k}` mod p divides `(phi_p mod p)^(p^(k-1))` in GF(p)[X].
pub fn phi_divisibility_check(p: u64, k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::Precondition(format!("phi divisibility needs k >= 2, got {k}")));
    }
    let big = gfp::reduce_mod(&build_phi(p, k)?, p)?;
    let base = gfp::reduce_mod(&build_phi(p, 1)?, p)?;
    let power = base.pow(p.pow(k - 1));
    if big.is_zero() {
        return Ok(power.is_zero());
    }
    Ok(power.rem(&big)?.is_zero())
}

/// Binomial divisibility facts for `C(p^n, j)`; see [`binom_valuation_suite`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialChecks {
    pub p: u64,
    pub n: u32,
    pub s: u64,
    /// `p | C(p^n, j)` for `0 < j < p^n`, and `p` misses `C(p^n s, p^n)`.
    pub row_divisible: bool,
    /// `p^2 | C(p^n, j)` unless `j` is a multiple of `p^(n-1)` (vacuous for n = 1).
    pub square_divisible: bool,
    /// `C(p, j0)/p = C(p^n, p^(n-1) j0)/p (mod p)` for `0 < j0 < p` (vacuous for n = 1).
    pub reduced_congruent: bool,
}

impl BinomialChecks {
    pub fn all(&self) -> bool {
        self.row_divisible && self.square_divisible && self.reduced_congruent
    }
}

/// `C(n, k)` by the multiplicative recurrence `C(n, i+1) = C(n, i)(n-i)/(i+1)`;
/// every intermediate value is itself a binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Runs the three binomial checks against a precomputed row `C(p^n, *)`.
pub fn binomial_checks_with_row(p: u64, n: u32, s: u64, row: &[BigInt], row_p: &[BigInt]) -> Result<BinomialChecks> {
    if !is_prime(p) || n == 0 || s == 0 || s.is_multiple_of(p) {
        return Err(Error::Precondition(format!("binomial suite needs prime p, n >= 1, p not dividing s; got ({p}, {n}, {s})")));
    }
    let q = p.pow(n);
    if row.len() as u64 != q + 1 || row_p.len() as u64 != p + 1 {
        return Err(Error::Precondition("binomial rows have the wrong length".into()));
    }
    let bp = BigInt::from(p);
    let p2 = &bp * &bp;
    let row_divisible = row[1..q as usize].iter().all(|c| c.is_multiple_of(&bp))
        && !binomial(q * s, q).is_multiple_of(&bp);
    let (square_divisible, reduced_congruent) = if n >= 2 {
        let step = q / p;
        let sq = (1..q).filter(|j| j % step != 0).all(|j| row[j as usize].is_multiple_of(&p2));
        let cong = (1..p).all(|j0| {
            let small = &row_p[j0 as usize] / &bp;
            let large = &row[(step * j0) as usize] / &bp;
            (small - large).is_multiple_of(&bp)
        });
        (sq, cong)
    } else {
        (true, true)
    };
    Ok(BinomialChecks { p, n, s, row_divisible, square_divisible, reduced_congruent })
}

pub fn binom_valuation_checks(p: u64, n: u32, s: u64) -> Result<BinomialChecks> {
    if !is_prime(p) || n == 0 {
        return Err(Error::Precondition(format!("binomial suite needs prime p and n >= 1, got ({p}, {n})")));
    }
    let q = p.checked_pow(n).ok_or_else(|| Error::Precondition("p^n overflows".into()))?;
    binomial_checks_with_row(p, n, s, &binomial_row(q as usize), &binomial_row(p as usize))
}

pub fn binom_valuation_suite(p: u64, n: u32, s: u64) -> Result<bool> {
    Ok(binom_valuation_checks(p, n, s)?.all())
}

/// One line of the small-order factorization table.
#[derive(Clone, Debug, Serialize)]
pub struct TableIdentity {
    pub label: &'static str,
    pub n: u32,
    pub expected: IntPoly,
    pub holds: bool,
}

/// The nine closed-form factorizations of `f_2, ..., f_10`, each compared
/// with the binomial expansion.
pub fn table_identities() -> Vec<TableIdentity> {
    let p = IntPoly::from_i64s;
    let c = |k: i64| IntPoly::from_i64s(&[k]);
    let x = IntPoly::x();
    let x1 = p(&[1, 1]);
    let cyc = cyclotomic3();
    let g10 = p(&[2, 6, 27, 44, 27, 6, 2]);
    let g9 = p(&[3, 9, 19, 23, 19, 9, 3]);
    let g8 = p(&[1, 3, 10, 15, 10, 3, 1]);
    let rows: Vec<(&'static str, u32, IntPoly)> = vec![
        ("a", 10, &cyc.pow(2) * &g10),
        ("b", 9, &(&(&c(3) * &x) * &x1) * &g9),
        ("c", 8, &(&c(2) * &cyc) * &g8),
        ("d", 7, &(&(&c(7) * &x) * &x1) * &cyc.pow(2)),
        ("e", 6, p(&[2, 6, 15, 20, 15, 6, 2])),
        ("f", 5, &(&(&c(5) * &x) * &x1) * &cyc),
        ("g", 4, &c(2) * &p(&[1, 2, 3, 2, 1])),
        ("g'", 4, &c(2) * &cyc.pow(2)),
        ("h", 3, &(&c(3) * &x) * &x1),
        ("i", 2, &c(2) * &cyc),
    ];
    rows.into_iter()
        .map(|(label, n, expected)| {
            let holds = build_f(n).map(|f| f == expected).unwrap_or(false);
            TableIdentity { label, n, expected, holds }
        })
        .collect()
}
