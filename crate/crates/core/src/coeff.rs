//! Exact combinatorial primitives: restricted polynomial coefficients,
//! binomials, Eulerian numbers and dense integer polynomials.
//!
//! The restricted coefficient `<n choose b>_a` is the coefficient of `t^b` in
//! `(1 + t + ... + t^(a-1))^n`. For `a = 2` it is the ordinary binomial
//! coefficient. Everything here is exact; no floating point is used.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::CoeffError;

/// Coefficient vector of `(1 + t + ... + t^(a-1))^n`, index = exponent.
///
/// Returns an empty vector when `a <= 0` (the zero polynomial).
pub fn restricted_row(n: usize, a: i64) -> Vec<BigUint> {
    if a <= 0 {
        return Vec::new();
    }
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        row = convolve_window(&row, a as usize);
    }
    row
}

/// One step of the dynamic programme: multiply `row` by `1 + t + ... + t^(a-1)`
/// using a sliding window sum.
fn convolve_window(row: &[BigUint], a: usize) -> Vec<BigUint> {
    let len = row.len() + a - 1;
    let mut out = Vec::with_capacity(len);
    let mut window = BigUint::zero();
    for b in 0..len {
        if b < row.len() {
            window += &row[b];
        }
        if b >= a {
            window -= &row[b - a];
        }
        out.push(window.clone());
    }
    out
}

/// `<n choose b>_a`, with the conventions `0` for `a <= 0`, `b < 0` or
/// `b > n(a-1)`.
pub fn restricted_coeff(n: usize, b: i64, a: i64) -> BigUint {
    if a <= 0 || b < 0 {
        return BigUint::zero();
    }
    let b = b as usize;
    if b > n * (a as usize - 1) {
        return BigUint::zero();
    }
    restricted_row(n, a).swap_remove(b)
}

/// Rows `0..=max_n` of the restricted coefficients for a fixed part bound `a`.
///
/// Row `j` is built from row `j - 1`, so a sweep over all exponents costs one
/// pass of the dynamic programme.
#[derive(Clone, Debug)]
pub struct RestrictedRows {
    a: i64,
    rows: Vec<Vec<BigUint>>,
}

impl RestrictedRows {
    pub fn new(a: i64, max_n: usize) -> Self {
        let mut rows = Vec::with_capacity(max_n + 1);
        if a > 0 {
            let mut row = vec![BigUint::one()];
            for _ in 0..max_n {
                let next = convolve_window(&row, a as usize);
                rows.push(row);
                row = next;
            }
            rows.push(row);
        }
        RestrictedRows { a, rows }
    }

    pub fn part_bound(&self) -> i64 {
        self.a
    }

    pub fn max_n(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// `<n choose b>_a`; panics if `n` exceeds the precomputed range and
    /// `a > 0`.
    pub fn get(&self, n: usize, b: i64) -> BigUint {
        if self.a <= 0 || b < 0 {
            return BigUint::zero();
        }
        self.rows[n]
            .get(b as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}

/// Coefficient of `t^b` in `(1 - t^a)^n (1 - t)^(-n)` for any integer `n`.
///
/// For `n >= 0` this is [`restricted_coeff`]. Negative exponents give the
/// formal power series of `(1 + t + ... + t^(a-1))^n`, whose coefficients may
/// be negative. The Pascal-type recurrence
/// `<n choose b>_a = sum_{j<a} <n-1 choose b-j>_a` holds for all `n`.
pub fn generalized_restricted_coeff(n: i64, b: i64, a: i64) -> BigInt {
    if a <= 0 || b < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return BigInt::from(restricted_coeff(n as usize, b, a));
    }
    // (1-t)^p / (1-t^a)^p = (1-t)^p * sum_q C(p-1+q, q) t^(aq), p = -n.
    let p = n.unsigned_abs();
    let mut total = BigInt::zero();
    let mut q = 0u64;
    while (a as u64) * q <= b as u64 {
        let rest = b as u64 - (a as u64) * q;
        if rest <= p {
            let term = BigInt::from(binomial(p - 1 + q, q)) * BigInt::from(binomial(p, rest));
            if rest.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
        q += 1;
    }
    total
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Eulerian number: permutations of `{1..n}` with exactly `k - 1` descents.
///
/// Uses `A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1)`.
pub fn eulerian(k: u64, n: u64) -> Result<BigUint, CoeffError> {
    if k < 1 || k > n {
        return Err(CoeffError::EulerianDomain { k, n });
    }
    // row[j] = A(m, j + 1) for the current m
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        let mut next = Vec::with_capacity(m as usize);
        for j in 1..=m {
            let mut value = BigUint::zero();
            if let Some(same) = row.get(j as usize - 1) {
                value += same * j;
            }
            if j >= 2 {
                value += &row[j as usize - 2] * (m - j + 1);
            }
            next.push(value);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize - 1))
}

/// Dense polynomial with arbitrary-precision integer coefficients in `t`.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * t^degree`
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `(t - 1)^j`, expanded exactly.
    pub fn t_minus_one_pow(j: u64) -> Self {
        let coeffs = (0..=j)
            .map(|i| {
                let c = BigInt::from(binomial(j, i));
                if (j - i).is_multiple_of(2) {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^degree`; zero beyond the stored degree.
    pub fn coeff_of(&self, degree: usize) -> BigInt {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Drops every term of degree greater than `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::new(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficients `0..len`, zero-padded.
    pub fn to_padded(&self, len: usize) -> Vec<BigInt> {
        (0..len).map(|d| self.coeff_of(d)).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..len)
                .map(|d| self.coeff_of(d) + rhs.coeff_of(d))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..len)
                .map(|d| self.coeff_of(d) - rhs.coeff_of(d))
                .collect(),
        )
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPoly::new(out)
    }
}

pub fn poly_add(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p + q
}

pub fn poly_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p * q
}

pub fn poly_scale(p: &IntPoly, c: &BigInt) -> IntPoly {
    p.scale(c)
}

pub fn coeff_of(p: &IntPoly, degree: usize) -> BigInt {
    p.coeff_of(degree)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}
