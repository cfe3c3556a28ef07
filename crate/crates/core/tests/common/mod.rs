//! Brute-force generator of decorated ordered set partitions, built straight
//! from the definition and sharing no code with the winding-vector stream.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hstar_core::Dosp;
use itertools::Itertools;

/// Set partitions of `{1..n}`, blocks ascending.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for e in 1..=n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(e);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![e]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Compositions of `k` into `m` positive parts.
pub fn compositions(k: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    (1..k)
        .combinations(m - 1)
        .map(|cuts| {
            let mut bounds = vec![0];
            bounds.extend(cuts);
            bounds.push(k);
            bounds.windows(2).map(|w| w[1] - w[0]).collect()
        })
        .collect()
}

/// Every dosp of type `(k, n)`: an ordered set partition with the block
/// containing 1 first, decorated by a composition of `k`.
pub fn all_dosps(k: usize, n: usize) -> BTreeSet<Dosp> {
    let mut out = BTreeSet::new();
    for partition in set_partitions(n) {
        let m = partition.len();
        if m > k {
            continue;
        }
        // the block holding 1 is generated first
        let (first, rest) = partition.split_first().expect("n >= 1");
        for order in rest.iter().permutations(rest.len()) {
            let mut blocks = vec![first.clone()];
            blocks.extend(order.into_iter().cloned());
            for gaps in compositions(k, m) {
                let p = Dosp::new(blocks.clone(), gaps, k, n).expect("brute-force dosp is valid");
                out.insert(p);
            }
        }
    }
    out
}

/// Members of [`all_dosps`] with winding number `d`, computed from spot
/// positions rather than from the library's winding vector.
pub fn dosps_with_winding(k: usize, n: usize, d: usize) -> BTreeSet<Dosp> {
    all_dosps(k, n)
        .into_iter()
        .filter(|p| winding_by_positions(p) == d)
        .collect()
}

/// `sum_i ((pos(i+1) - pos(i)) mod k) / k`, with positions read off the gaps.
pub fn winding_by_positions(p: &Dosp) -> usize {
    let k = p.k();
    let mut pos = vec![0; p.n() + 1];
    let mut spot = 0;
    for (block, gap) in p.blocks().iter().zip(p.gaps()) {
        for &e in block {
            pos[e] = spot;
        }
        spot += gap;
    }
    let total: usize = (1..=p.n())
        .map(|i| {
            let next = if i == p.n() { 1 } else { i + 1 };
            (pos[next] + k - pos[i]) % k
        })
        .sum();
    total / k
}
