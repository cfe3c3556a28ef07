//! Closed-form h*-vectors of `I^n_{r,k}`.
//!
//! [`series_numerator`] evaluates the Ehrhart series numerator
//! literally, with the inner `(t - 1)^j` sums expanded; [`hstar_closed_form`]
//! evaluates the collapsed alternating sum
//!
//! ```text
//! h*_d = sum_{i >= 0} (-1)^i C(n, i) <n choose (k - r i) d - i>_{k - r i}
//! ```
//!
//! Terms with `k - r i <= 0` vanish, which makes the sum finite.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::coeff::{
    binomial, generalized_restricted_coeff, restricted_coeff, IntPoly, RestrictedRows,
};
use crate::dosp::PolytopeSpec;
use crate::error::HStarError;

/// Entries `h*_0 .. h*_{n-1}` of a slice `I^n_{r,k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector {
    spec: PolytopeSpec,
    entries: Vec<BigInt>,
}

impl HStarVector {
    pub fn new(spec: PolytopeSpec, entries: Vec<BigInt>) -> Self {
        debug_assert_eq!(entries.len() as u64, spec.n());
        HStarVector { spec, entries }
    }

    pub fn spec(&self) -> &PolytopeSpec {
        &self.spec
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Normalized volume of the slice.
    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Same entries read back to front, ignoring trailing zeros.
    pub fn is_palindromic(&self) -> bool {
        let end = self
            .entries
            .iter()
            .rposition(|e| !e.is_zero())
            .map_or(0, |i| i + 1);
        let head = &self.entries[..end];
        head.iter().eq(head.iter().rev())
    }

    /// Entries as `i64`; panics on overflow. Intended for tests and small
    /// specs.
    pub fn to_i64s(&self) -> Vec<i64> {
        self.entries
            .iter()
            .map(|e| e.to_i64().expect("h* entry exceeds i64"))
            .collect()
    }

    pub fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.entries.clone())
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Number of alternating terms that survive: the least `i` with `k - r i <= 0`.
fn term_count(r: u64, k: u64) -> u64 {
    k.div_ceil(r)
}

/// One entry `h*_d` of the closed form.
pub fn hstar_entry(spec: &PolytopeSpec, d: u64) -> BigInt {
    let (r, k, n) = (spec.r(), spec.k(), spec.n());
    let mut total = BigInt::zero();
    for i in 0..term_count(r, k) {
        let a = (k - r * i) as i64;
        let b = a * d as i64 - i as i64;
        let term = BigInt::from(binomial(n, i)) * BigInt::from(restricted_coeff(n as usize, b, a));
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `h*(I^n_{r,k})` from the collapsed alternating sum.
pub fn hstar_closed_form(spec: &PolytopeSpec) -> HStarVector {
    let entries = (0..spec.n())
        .into_par_iter()
        .map(|d| hstar_entry(spec, d))
        .collect();
    HStarVector::new(*spec, entries)
}

/// The Ehrhart series numerator over `(1 - t)^n`, computed term by term:
///
/// ```text
/// sum_i (-1)^i C(n,i) sum_j C(i,j) (t-1)^j sum_{l=0}^{n} <n-j choose l(k-ri)>_{k-ri} t^l
/// ```
///
/// Every coefficient of degree `>= n` must cancel; a surviving one is
/// reported as [`HStarError::NumeratorDegree`].
pub fn series_numerator(spec: &PolytopeSpec) -> Result<IntPoly, HStarError> {
    let (r, k, n) = (spec.r(), spec.k(), spec.n());
    let mut numerator = IntPoly::zero();
    for i in 0..=n.min(term_count(r, k).saturating_sub(1)) {
        let a = (k - r * i) as i64;
        let rows = RestrictedRows::new(a, n as usize);
        let mut inner = IntPoly::zero();
        for j in 0..=i {
            let series = IntPoly::new(
                (0..=n)
                    .map(|l| BigInt::from(rows.get((n - j) as usize, l as i64 * a)))
                    .collect(),
            );
            let term = &IntPoly::t_minus_one_pow(j) * &series;
            inner = &inner + &term.scale(&BigInt::from(binomial(i, j)));
        }
        let mut weight = BigInt::from(binomial(n, i));
        if i % 2 == 1 {
            weight = -weight;
        }
        numerator = &numerator + &inner.scale(&weight);
    }
    if let Some(deg) = numerator.degree().filter(|&deg| deg as u64 >= n) {
        return Err(HStarError::NumeratorDegree {
            degree: deg,
            coeff: numerator.coeff_of(deg).to_string(),
        });
    }
    Ok(numerator)
}

/// `<n choose m>_a - <n choose m-1>_a == <n-1 choose m>_a - <n-1 choose m-a>_a`.
pub fn check_lemma1(n: usize, m: i64, a: i64) -> bool {
    if n == 0 {
        return false;
    }
    let lhs = BigInt::from(restricted_coeff(n, m, a)) - BigInt::from(restricted_coeff(n, m - 1, a));
    let rhs = BigInt::from(restricted_coeff(n - 1, m, a))
        - BigInt::from(restricted_coeff(n - 1, m - a, a));
    lhs == rhs
}

/// Compares, up to `t^max_degree`,
///
/// ```text
/// sum_j C(s,j) (t-1)^j sum_l <n-j choose la>_a t^l   and   sum_l <n choose la-s>_a t^l.
/// ```
///
/// When `j > n` the exponent `n - j` is negative and the restricted coefficient
/// is read from the power series of `(1 + ... + t^(a-1))^(n-j)`.
pub fn check_prop1(s: u64, a: i64, n: u64, max_degree: usize) -> bool {
    let lhs = prop1_lhs(s, a, n, max_degree);
    let rhs = IntPoly::new(
        (0..=max_degree)
            .map(|l| generalized_restricted_coeff(n as i64, l as i64 * a - s as i64, a))
            .collect(),
    );
    lhs == rhs
}

fn prop1_lhs(s: u64, a: i64, n: u64, max_degree: usize) -> IntPoly {
    let mut lhs = IntPoly::zero();
    for j in 0..=s {
        let exponent = n as i64 - j as i64;
        let series = IntPoly::new(
            (0..=max_degree)
                .map(|l| generalized_restricted_coeff(exponent, l as i64 * a, a))
                .collect(),
        );
        let term = (&IntPoly::t_minus_one_pow(j) * &series).scale(&BigInt::from(binomial(s, j)));
        lhs = &lhs + &term;
    }
    lhs.truncate(max_degree)
}
