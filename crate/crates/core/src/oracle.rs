//! Ehrhart ground truth for `I^n_{r,k}` straight from lattice-point counts.
//!
//! `L(t) = |t I^n_{r,k} ∩ Z^n|` counts integer vectors with `0 <= x_i <= r t`
//! and `sum x_i = k t`. The h*-vector is read off the Ehrhart series
//! `sum_t L(t) z^t = h*(z) / (1 - z)^n` by multiplying through by `(1 - z)^n`.
//! None of this goes through the alternating-sum formulas in [`crate::hstar`].

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::coeff::{binomial, restricted_coeff};
use crate::dosp::PolytopeSpec;
use crate::error::OracleError;
use crate::hstar::HStarVector;

/// Direct enumeration is only attempted while `t r n` stays at or below this.
pub const DIRECT_ENUMERATION_LIMIT: u64 = 24;

/// Counts lattice points of the `t`-th dilate by nested loops over the
/// coordinates, pruning on the remaining sum.
pub fn lattice_count_direct(spec: &PolytopeSpec, t: u64) -> u64 {
    fn walk(coords_left: u64, cap: u64, remaining: u64) -> u64 {
        if coords_left == 0 {
            return u64::from(remaining == 0);
        }
        if remaining > coords_left * cap {
            return 0;
        }
        (0..=cap.min(remaining))
            .map(|x| walk(coords_left - 1, cap, remaining - x))
            .sum()
    }
    walk(spec.n(), spec.r() * t, spec.k() * t)
}

/// `L(t)` via the coefficient of `z^{kt}` in `(1 + z + ... + z^{rt})^n`.
pub fn lattice_count_by_coefficient(spec: &PolytopeSpec, t: u64) -> BigUint {
    restricted_coeff(
        spec.n() as usize,
        (spec.k() * t) as i64,
        (spec.r() * t + 1) as i64,
    )
}

/// `L(t)`, cross-checked against direct enumeration whenever
/// `t r n <= DIRECT_ENUMERATION_LIMIT`.
pub fn lattice_count(spec: &PolytopeSpec, t: u64) -> Result<BigUint, OracleError> {
    let count = lattice_count_by_coefficient(spec, t);
    if t * spec.r() * spec.n() <= DIRECT_ENUMERATION_LIMIT {
        let direct = lattice_count_direct(spec, t);
        if count.to_u64() != Some(direct) {
            return Err(OracleError::Mismatch {
                t,
                formula: count.to_string(),
                direct,
            });
        }
    }
    Ok(count)
}

/// `h*_j = sum_{i=0}^{j} (-1)^i C(n, i) L(j - i)` for `j = 0..n-1`.
pub fn hstar_from_oracle(spec: &PolytopeSpec) -> Result<HStarVector, OracleError> {
    let counts = lattice_counts(spec, spec.n())?;
    Ok(hstar_from_counts(spec, &counts))
}

/// `L(0), ..., L(len - 1)`.
pub fn lattice_counts(spec: &PolytopeSpec, len: u64) -> Result<Vec<BigUint>, OracleError> {
    (0..len)
        .into_par_iter()
        .map(|t| lattice_count(spec, t))
        .collect()
}

/// Truncated product of the series `sum L(t) z^t` with `(1 - z)^n`.
pub fn hstar_from_counts(spec: &PolytopeSpec, counts: &[BigUint]) -> HStarVector {
    let n = spec.n();
    let entries = (0..n)
        .map(|j| {
            let mut acc = BigInt::default();
            for i in 0..=j {
                let term =
                    BigInt::from(binomial(n, i)) * BigInt::from(counts[(j - i) as usize].clone());
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect();
    HStarVector::new(*spec, entries)
}

/// Expands `h*(z) / (1 - z)^n` back into `L(0), ..., L(len - 1)`.
pub fn counts_from_hstar(hstar: &HStarVector, len: u64) -> Vec<BigInt> {
    let n = hstar.spec().n();
    (0..len)
        .map(|t| {
            hstar
                .entries()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j as u64 <= t)
                .map(|(j, h)| h * BigInt::from(binomial(t - j as u64 + n - 1, n - 1)))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hstar::hstar_closed_form;

    fn spec(r: u64, k: u64, n: u64) -> PolytopeSpec {
        PolytopeSpec::new(r, k, n).unwrap()
    }

    #[test]
    fn zero_dilate_is_a_point() {
        for s in PolytopeSpec::sweep(1..=3, 2..=6, 8) {
            assert_eq!(lattice_count(&s, 0).unwrap(), BigUint::from(1u32));
        }
    }

    #[test]
    fn delta_2_4_counts() {
        let s = spec(1, 2, 4);
        assert_eq!(lattice_count_direct(&s, 1), 6);
        assert_eq!(lattice_count_direct(&s, 2), 19);
        assert_eq!(lattice_count_direct(&s, 3), 44);
        let counts: Vec<u64> = lattice_counts(&s, 4)
            .unwrap()
            .iter()
            .map(|c| c.to_u64().unwrap())
            .collect();
        assert_eq!(counts, vec![1, 6, 19, 44]);
    }

    #[test]
    fn delta_2_4_hstar() {
        assert_eq!(
            hstar_from_oracle(&spec(1, 2, 4)).unwrap().to_i64s(),
            vec![1, 2, 1, 0]
        );
    }

    #[test]
    fn unit_simplex() {
        let s = spec(1, 1, 3);
        // L(t) = C(t + 2, 2)
        for t in 0..6 {
            assert_eq!(lattice_count(&s, t).unwrap(), binomial(t + 2, 2));
        }
        assert_eq!(hstar_from_oracle(&s).unwrap().to_i64s(), vec![1, 0, 0]);
    }

    #[test]
    fn coefficient_route_matches_direct() {
        for s in PolytopeSpec::sweep(1..=3, 2..=6, 10) {
            for t in 0..=4 {
                if t * s.r() * s.n() <= DIRECT_ENUMERATION_LIMIT {
                    assert_eq!(
                        lattice_count_by_coefficient(&s, t).to_u64(),
                        Some(lattice_count_direct(&s, t)),
                        "{s} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn agrees_with_closed_form() {
        for s in PolytopeSpec::sweep(1..=4, 2..=10, 40) {
            assert_eq!(hstar_from_oracle(&s).unwrap(), hstar_closed_form(&s), "{s}");
        }
    }

    #[test]
    fn counts_increase() {
        for s in PolytopeSpec::sweep(1..=3, 2..=6, 10) {
            let counts = lattice_counts(&s, 8).unwrap();
            assert!(counts[1..].windows(2).all(|w| w[0] < w[1]), "{s}");
        }
    }

    #[test]
    fn series_inversion_reproduces_counts() {
        for s in PolytopeSpec::sweep(1..=3, 2..=7, 12) {
            let h = hstar_from_oracle(&s).unwrap();
            let len = 2 * s.n() + 1;
            let expanded = counts_from_hstar(&h, len);
            let direct: Vec<BigInt> = lattice_counts(&s, len)
                .unwrap()
                .into_iter()
                .map(BigInt::from)
                .collect();
            assert_eq!(expanded, direct, "{s}");
        }
    }

    #[test]
    fn balanced_slices_palindromic_only_for_small_r() {
        for s in PolytopeSpec::sweep(1..=4, 2..=8, 16) {
            if 2 * s.k() == s.r() * s.n() {
                let h = hstar_from_oracle(&s).unwrap();
                assert_eq!(h.is_palindromic(), s.r() <= 2, "{s}: {h}");
            }
        }
    }

    #[test]
    fn centrally_symmetric_slice_need_not_be_palindromic() {
        // a lattice segment of length 3
        let h = hstar_from_oracle(&spec(3, 3, 2)).unwrap();
        assert_eq!(h.to_i64s(), vec![1, 2]);
        assert!(!h.is_palindromic());
    }
}
