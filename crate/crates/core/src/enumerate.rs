//! Streaming enumeration of decorated ordered set partitions through their
//! winding vectors, and the combinatorial h*-vector built from counts of
//! r-hypersimplicial ones.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::coeff::restricted_coeff;
use crate::dosp::{Dosp, PolytopeSpec, WindingVector};
use crate::hstar::HStarVector;

/// Integer vectors with `lo[i] <= v[i] <= hi[i]` and a fixed total, emitted
/// once each in lexicographic order.
#[derive(Clone, Debug)]
pub struct BoundedVectors {
    lo: Vec<usize>,
    hi: Vec<usize>,
    target: usize,
    suffix_min: Vec<usize>,
    suffix_max: Vec<usize>,
    current: Option<Vec<usize>>,
    started: bool,
}

impl BoundedVectors {
    pub fn new(lo: Vec<usize>, hi: Vec<usize>, target: usize) -> Self {
        assert_eq!(lo.len(), hi.len(), "bound vectors differ in length");
        let len = lo.len();
        let mut suffix_min = vec![0; len + 1];
        let mut suffix_max = vec![0; len + 1];
        for i in (0..len).rev() {
            suffix_min[i] = suffix_min[i + 1] + lo[i];
            suffix_max[i] = suffix_max[i + 1] + hi[i].max(lo[i]);
        }
        BoundedVectors {
            lo,
            hi,
            target,
            suffix_min,
            suffix_max,
            current: None,
            started: false,
        }
    }

    /// Smallest completion of `v[..from]` given `remaining` still to be
    /// distributed over positions `from..`.
    fn fill_min(&self, v: &mut [usize], from: usize, mut remaining: usize) -> bool {
        for (i, slot) in v.iter_mut().enumerate().skip(from) {
            let rest_max = self.suffix_max[i + 1];
            let value = self.lo[i].max(remaining.saturating_sub(rest_max));
            if value > self.hi[i] || value > remaining {
                return false;
            }
            *slot = value;
            remaining -= value;
        }
        remaining == 0
    }

    fn first(&self) -> Option<Vec<usize>> {
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return None;
        }
        let mut v = vec![0; self.lo.len()];
        self.fill_min(&mut v, 0, self.target).then_some(v)
    }

    fn advance(&self, v: &mut [usize]) -> bool {
        let len = v.len();
        if len < 2 {
            return false;
        }
        let mut prefix: usize = v[..len - 1].iter().sum();
        for i in (0..len - 1).rev() {
            prefix -= v[i];
            let bumped = v[i] + 1;
            if bumped <= self.hi[i] && prefix + bumped <= self.target {
                let remaining = self.target - prefix - bumped;
                if self.suffix_min[i + 1] <= remaining && remaining <= self.suffix_max[i + 1] {
                    v[i] = bumped;
                    return self.fill_min(v, i + 1, remaining);
                }
            }
        }
        false
    }
}

impl Iterator for BoundedVectors {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            self.current = self.first();
        } else if let Some(mut v) = self.current.take() {
            if self.advance(&mut v) {
                self.current = Some(v);
            }
        }
        self.current.clone()
    }
}

/// Every winding vector of type `(k, n)` and winding number `d`, i.e. every
/// `w` with `0 <= w_i <= k - 1` and `sum w_i = k d`, in lexicographic order.
pub fn enumerate_winding_vectors(
    k: usize,
    n: usize,
    d: usize,
) -> impl Iterator<Item = WindingVector> {
    assert!(k >= 1 && n >= 1, "need k >= 1 and n >= 1");
    BoundedVectors::new(vec![0; n], vec![k - 1; n], k * d)
        .map(move |w| WindingVector::new(w, k).expect("bounded vector is a winding vector"))
}

/// The dosps of type `(k, n)` with winding number `d`, ordered by winding
/// vector.
pub fn enumerate_dosps(k: usize, n: usize, d: usize) -> impl Iterator<Item = Dosp> {
    enumerate_winding_vectors(k, n, d).map(|w| Dosp::from_winding_vector(&w))
}

/// Number of dosps of type `(k, n)` with winding number `d`: `<n choose kd>_k`.
pub fn count_dosps(k: usize, n: usize, d: usize) -> BigUint {
    restricted_coeff(n, (k * d) as i64, k as i64)
}

/// Counts dosps of type `(k, n)`, winding number `d`, satisfying `keep`,
/// sequentially in stream order.
pub fn count_matching_sequential<F>(k: usize, n: usize, d: usize, keep: F) -> u64
where
    F: Fn(&Dosp) -> bool,
{
    enumerate_dosps(k, n, d).filter(|p| keep(p)).count() as u64
}

/// Same count as [`count_matching_sequential`], with the search space split
/// by the first winding-vector coordinate and the parts reduced in parallel.
pub fn count_matching<F>(k: usize, n: usize, d: usize, keep: F) -> u64
where
    F: Fn(&Dosp) -> bool + Sync,
{
    assert!(k >= 1 && n >= 1, "need k >= 1 and n >= 1");
    let target = k * d;
    (0..k)
        .into_par_iter()
        .filter(|&w1| w1 <= target)
        .map(|w1| {
            BoundedVectors::new(vec![0; n - 1], vec![k - 1; n - 1], target - w1)
                .filter(|tail| {
                    let mut w = Vec::with_capacity(n);
                    w.push(w1);
                    w.extend_from_slice(tail);
                    let w = WindingVector::new(w, k).expect("bounded vector is a winding vector");
                    keep(&Dosp::from_winding_vector(&w))
                })
                .count() as u64
        })
        .sum()
}

/// Number of r-hypersimplicial dosps of type `(k, n)` with winding number `d`.
pub fn count_r_hypersimplicial(k: usize, n: usize, r: usize, d: usize) -> BigUint {
    BigUint::from(count_matching(k, n, d, |p| p.is_r_hypersimplicial(r)))
}

/// `(count_r_hypersimplicial(k, n, r, d))_{d = 0..n-1}`.
pub fn hstar_combinatorial(spec: &PolytopeSpec) -> HStarVector {
    let (r, k, n) = (spec.r() as usize, spec.k() as usize, spec.n() as usize);
    let entries = (0..n)
        .into_par_iter()
        .map(|d| BigInt::from(count_r_hypersimplicial(k, n, r, d)))
        .collect();
    HStarVector::new(*spec, entries)
}
