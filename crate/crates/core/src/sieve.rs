//! Inclusion–exclusion over set partitions for counting r-hypersimplicial
//! dosps, checked family by family.
//!
//! Everything here works inside one [`DospFamily`]: all dosps of type `(k, n)`
//! with a fixed winding number `d`. For `T ⊆ {1..n}` and a set partition `S`
//! of `T`, `K_r(S)` collects the members having every part of `S` as an r-bad
//! block, and `H_r(T) = sum_S (-1)^|S| |K_r(S)|`. Summing `H_r(T)` over all
//! `T` leaves exactly the r-hypersimplicial members.
//!
//! For `n ∉ T` the sum collapses: splitting merged r-bad blocks into runs of
//! singlets embeds each `K_r(S)` into `K_r(singletons of T)`, the signed
//! indicator sum vanishes unless a member has no increasing r-packed run of
//! length two or more, and the survivors are counted by second winding
//! vectors.

use std::collections::{HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::coeff::restricted_coeff;
use crate::dosp::{Dosp, SpotColor};
use crate::enumerate::{count_r_hypersimplicial, enumerate_dosps, BoundedVectors};
use crate::error::{SieveError, WindingError};

/// A subset `T` of `{1..n}`, stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSubset {
    elements: Vec<usize>,
    n: usize,
}

impl GroundSubset {
    pub fn new(mut elements: Vec<usize>, n: usize) -> Result<Self, SieveError> {
        elements.sort_unstable();
        if let Some(&element) = elements.iter().find(|&&e| e == 0 || e > n) {
            return Err(SieveError::ElementOutOfRange { element, n });
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(SieveError::DuplicateElement(w[0]));
        }
        Ok(GroundSubset { elements, n })
    }

    pub fn empty(n: usize) -> Self {
        GroundSubset {
            elements: Vec::new(),
            n,
        }
    }

    /// All `2^n` subsets, ordered by bitmask.
    pub fn all(n: usize) -> Vec<GroundSubset> {
        (0u64..1 << n)
            .map(|mask| GroundSubset {
                elements: (1..=n).filter(|e| mask >> (e - 1) & 1 == 1).collect(),
                n,
            })
            .collect()
    }

    /// Subsets of `{1..n-1}` with at most `max_size` elements.
    pub fn excluding_n(n: usize, max_size: usize) -> Vec<GroundSubset> {
        Self::all(n)
            .into_iter()
            .filter(|t| !t.contains_n() && t.len() <= max_size)
            .collect()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn contains_n(&self) -> bool {
        self.elements.last() == Some(&self.n)
    }

    pub fn is_full(&self) -> bool {
        self.elements.len() == self.n
    }

    /// Image under `e -> ((e - 1 + s) mod n) + 1`.
    pub fn shifted(&self, s: usize) -> GroundSubset {
        let n = self.n;
        let mut elements: Vec<usize> = self.elements.iter().map(|&e| (e - 1 + s) % n + 1).collect();
        elements.sort_unstable();
        GroundSubset { elements, n }
    }

    /// A shift moving `n` out of the subset: the largest element not in the
    /// subset is sent to `n`. `None` for the full set.
    pub fn shift_excluding_n(&self) -> Option<usize> {
        let y = (1..=self.n).rev().find(|&e| !self.contains(e))?;
        Some((self.n - y) % self.n)
    }

    fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n + 1];
        for &e in &self.elements {
            mask[e] = true;
        }
        mask
    }

    fn require_excludes_n(&self) -> Result<(), SieveError> {
        if self.contains_n() {
            Err(SieveError::ContainsN(self.n))
        } else {
            Ok(())
        }
    }
}

/// An unordered set partition; parts ascending internally and ordered by
/// their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        let mut parts: Vec<Vec<usize>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        parts.sort();
        SetPartition { parts }
    }

    /// Checks that the parts are nonempty, disjoint and cover `t` exactly.
    pub fn of(parts: Vec<Vec<usize>>, t: &GroundSubset) -> Result<Self, SieveError> {
        let p = Self::new(parts);
        let mut covered: Vec<usize> = p.parts.iter().flatten().copied().collect();
        covered.sort_unstable();
        if p.parts.iter().any(Vec::is_empty) || covered != t.elements() {
            return Err(SieveError::NotAPartition);
        }
        Ok(p)
    }

    /// `{{t_1}, ..., {t_m}}`
    pub fn singletons(t: &GroundSubset) -> Self {
        SetPartition {
            parts: t.elements().iter().map(|&e| vec![e]).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Number of parts `|S|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    fn sign(&self) -> i64 {
        if self.parts.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Every set partition of `t`, each once (Bell(|t|) of them), generated by
/// restricted growth strings.
pub fn unordered_partitions(t: &GroundSubset) -> Vec<SetPartition> {
    fn grow(elems: &[usize], idx: usize, parts: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if idx == elems.len() {
            out.push(SetPartition::new(parts.clone()));
            return;
        }
        for p in 0..parts.len() {
            parts[p].push(elems[idx]);
            grow(elems, idx + 1, parts, out);
            parts[p].pop();
        }
        parts.push(vec![elems[idx]]);
        grow(elems, idx + 1, parts, out);
        parts.pop();
    }
    let mut out = Vec::new();
    grow(t.elements(), 0, &mut Vec::new(), &mut out);
    out
}

/// `P ∈ K_r(S)`: every part of `S` is an r-bad block of `P`.
pub fn in_k_r(p: &Dosp, r: usize, s: &SetPartition) -> bool {
    let block_of = p.block_index();
    s.parts().iter().all(|part| {
        let b = block_of[part[0]];
        p.blocks()[b] == *part && p.gaps()[b] >= r * part.len()
    })
}

/// Maximal increasing r-packed runs of T-singlet blocks, as element lists in
/// clockwise order. Every T-singlet lies in exactly one run; runs of length
/// one are included.
///
/// Consecutive blocks `{a}`, `{b}` (block indices taken cyclically) are linked
/// when both are T-singlets, `a < b`, the gap after `{a}` is exactly `r` and
/// the gap after `{b}` is at least `r`.
pub fn increasing_r_packed_runs(p: &Dosp, r: usize, t: &GroundSubset) -> Vec<Vec<usize>> {
    let m = p.num_blocks();
    let in_t = t.mask();
    let singlet: Vec<Option<usize>> = p
        .blocks()
        .iter()
        .map(|b| match b.as_slice() {
            [e] if in_t.get(*e).copied().unwrap_or(false) => Some(*e),
            _ => None,
        })
        .collect();
    let linked = |i: usize| -> bool {
        if m < 2 {
            return false;
        }
        let j = (i + 1) % m;
        match (singlet[i], singlet[j]) {
            (Some(a), Some(b)) => a < b && p.gaps()[i] == r && p.gaps()[j] >= r,
            _ => false,
        }
    };
    let links: Vec<bool> = (0..m).map(linked).collect();
    let mut runs = Vec::new();
    for start in 0..m {
        if singlet[start].is_none() || links[(start + m - 1) % m] {
            continue;
        }
        let mut run = vec![singlet[start].unwrap()];
        let mut i = start;
        while links[i] {
            i = (i + 1) % m;
            run.push(singlet[i].unwrap());
        }
        runs.push(run);
    }
    runs
}

/// Whether `p` has an increasing r-packed run of at least two T-singlets.
pub fn has_increasing_r_packed_gt1(p: &Dosp, r: usize, t: &GroundSubset) -> bool {
    increasing_r_packed_runs(p, r, t)
        .iter()
        .any(|run| run.len() > 1)
}

/// Every part of `s` is a contiguous piece of one of `runs`.
pub fn refines_runs(s: &SetPartition, runs: &[Vec<usize>]) -> bool {
    s.parts().iter().all(|part| {
        runs.iter().any(|run| {
            run.iter()
                .position(|&e| e == part[0])
                .is_some_and(|start| run.get(start..start + part.len()) == Some(part.as_slice()))
        })
    })
}

/// Splits every r-bad block `M = {t_1 < ... < t_w}` with gap `l` that is a
/// part of `s` into `{t_1}_r, ..., {t_{w-1}}_r, {t_w}_{l - r(w-1)}`.
///
/// Fails with [`SieveError::NotInFamily`] unless `p ∈ K_r(s)`.
pub fn lemma3_embed(p: &Dosp, r: usize, s: &SetPartition) -> Result<Dosp, SieveError> {
    if !in_k_r(p, r, s) {
        return Err(SieveError::NotInFamily);
    }
    let split: HashSet<&[usize]> = s.parts().iter().map(Vec::as_slice).collect();
    let mut blocks = Vec::new();
    let mut gaps = Vec::new();
    for (block, &gap) in p.blocks().iter().zip(p.gaps()) {
        if split.contains(block.as_slice()) {
            let w = block.len();
            for (idx, &e) in block.iter().enumerate() {
                blocks.push(vec![e]);
                gaps.push(if idx + 1 < w { r } else { gap - r * (w - 1) });
            }
        } else {
            blocks.push(block.clone());
            gaps.push(gap);
        }
    }
    Ok(Dosp::new(blocks, gaps, p.k(), p.n())?)
}

/// Blue-spot counts along the walk `1 -> 2 -> ... -> n -> 1` relative to
/// `(T, r)`, with `B = k - r|T|` blue spots.
///
/// Invariants: `0 <= v_i <= B - 1` for `i ∉ T`, `1 <= v_i <= B` for `i ∈ T`,
/// and `B | sum v_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SecondWindingVector {
    entries: Vec<usize>,
    t: GroundSubset,
    r: usize,
    k: usize,
}

impl SecondWindingVector {
    pub fn new(
        entries: Vec<usize>,
        k: usize,
        r: usize,
        t: GroundSubset,
    ) -> Result<Self, SieveError> {
        if entries.len() != t.n() {
            return Err(SieveError::TypeMismatch {
                dk: k,
                dn: entries.len(),
                k,
                n: t.n(),
            });
        }
        let blue = blue_count(k, r, &t)?;
        for (idx, &value) in entries.iter().enumerate() {
            let (min, max) = if t.contains(idx + 1) {
                (1, blue)
            } else {
                (0, blue - 1)
            };
            if value < min || value > max {
                return Err(WindingError::BoundedEntryOutOfRange {
                    index: idx,
                    value,
                    min,
                    max,
                }
                .into());
            }
        }
        let sum: usize = entries.iter().sum();
        if !sum.is_multiple_of(blue) {
            return Err(WindingError::NotDivisible { sum, modulus: blue }.into());
        }
        Ok(SecondWindingVector { entries, t, r, k })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn subset(&self) -> &GroundSubset {
        &self.t
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `B = k - r|T|`.
    pub fn blue_spots(&self) -> usize {
        self.k - self.r * self.t.len()
    }

    /// `sum v_i / B`
    pub fn winding_number(&self) -> usize {
        self.entries.iter().sum::<usize>() / self.blue_spots()
    }
}

fn blue_count(k: usize, r: usize, t: &GroundSubset) -> Result<usize, SieveError> {
    let blue = k as i64 - (r * t.len()) as i64;
    if blue < 1 {
        return Err(SieveError::NoBlueSpots(blue));
    }
    Ok(blue as usize)
}

/// Second winding vector of `p ∈ hat-K_r(T)`.
pub fn second_winding_vector(
    p: &Dosp,
    r: usize,
    t: &GroundSubset,
) -> Result<SecondWindingVector, SieveError> {
    if t.n() != p.n() {
        return Err(SieveError::TypeMismatch {
            dk: p.k(),
            dn: p.n(),
            k: p.k(),
            n: t.n(),
        });
    }
    t.require_excludes_n()?;
    let diagram = p.spot_diagram();
    let colors = diagram.color(p, r, t.elements())?;
    if has_increasing_r_packed_gt1(p, r, t) {
        return Err(SieveError::NotInFamily);
    }
    let k = p.k();
    let n = p.n();
    let block_of = p.block_index();
    let spot = |e: usize| diagram.block_spot(block_of[e]);
    let entries = (1..=n)
        .map(|i| {
            let from = spot(i);
            let to = spot(if i == n { 1 } else { i + 1 });
            let dist = (to + k - from) % k;
            (1..=dist)
                .filter(|step| colors[(from + step) % k] == SpotColor::Blue)
                .count()
        })
        .collect();
    SecondWindingVector::new(entries, k, r, t.clone())
}

/// The member of `hat-K_r(T)` with second winding vector `v`.
///
/// Elements are first placed on a circle of `B` blue spots, element `i + 1`
/// sitting `v_i` spots after element `i`. Each spot then keeps its non-`T`
/// elements as a block (or stays an empty blue spot), followed by its
/// `T`-elements as singlets in decreasing order, each trailed by `r - 1`
/// empty red spots.
pub fn dosp_from_second_winding_vector(v: &SecondWindingVector) -> Dosp {
    let blue = v.blue_spots();
    let t = v.subset();
    let n = t.n();
    let mut placed: Vec<Vec<usize>> = vec![Vec::new(); blue];
    let mut pos = 0;
    for e in 1..=n {
        placed[pos].push(e);
        pos = (pos + v.entries()[e - 1]) % blue;
    }
    let mut spots: Vec<Vec<usize>> = Vec::with_capacity(v.k());
    for elems in placed {
        let (in_t, rest): (Vec<usize>, Vec<usize>) =
            elems.into_iter().partition(|&e| t.contains(e));
        spots.push(rest);
        for &e in in_t.iter().rev() {
            spots.push(vec![e]);
            spots.extend(std::iter::repeat_with(Vec::new).take(v.r() - 1));
        }
    }
    debug_assert_eq!(spots.len(), v.k());
    Dosp::from_spots(spots, v.k(), n)
}

/// All dosps of type `(k, n)` with winding number `d`, materialized once so
/// the sieve families can be filtered from it.
#[derive(Clone, Debug)]
pub struct DospFamily {
    k: usize,
    n: usize,
    d: usize,
    members: Vec<Dosp>,
}

impl DospFamily {
    pub fn new(k: usize, n: usize, d: usize) -> Self {
        DospFamily {
            k,
            n,
            d,
            members: enumerate_dosps(k, n, d).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn members(&self) -> &[Dosp] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `K_r(S)`
    pub fn k_r(&self, r: usize, s: &SetPartition) -> Vec<&Dosp> {
        self.members.iter().filter(|p| in_k_r(p, r, s)).collect()
    }

    /// `H_r(T) = sum_{S ∈ UP(T)} (-1)^|S| |K_r(S)|`, evaluated directly.
    pub fn h_r(&self, r: usize, t: &GroundSubset) -> BigInt {
        unordered_partitions(t)
            .iter()
            .map(|s| BigInt::from(s.sign()) * BigInt::from(self.k_r(r, s).len()))
            .sum()
    }

    /// `H_r(T)`, with subsets containing `n` first shifted cyclically so that
    /// they avoid `n`; the full set contributes its direct value.
    pub fn h_r_reduced(&self, r: usize, t: &GroundSubset) -> BigInt {
        if !t.contains_n() {
            return self.h_r(r, t);
        }
        match t.shift_excluding_n() {
            Some(s) => self.h_r(r, &t.shifted(s)),
            None => self.h_r(r, t),
        }
    }

    /// `hat-K_r(T)`: members of `K_r(singletons of T)` with no increasing
    /// r-packed run of length greater than one.
    pub fn hat_k_r(&self, r: usize, t: &GroundSubset) -> Result<Vec<&Dosp>, SieveError> {
        self.require_proper(t)?;
        let singles = SetPartition::singletons(t);
        Ok(self
            .members
            .iter()
            .filter(|p| in_k_r(p, r, &singles) && !has_increasing_r_packed_gt1(p, r, t))
            .collect())
    }

    fn require_proper(&self, t: &GroundSubset) -> Result<(), SieveError> {
        t.require_excludes_n()?;
        if t.n() != self.n {
            return Err(SieveError::TypeMismatch {
                dk: self.k,
                dn: t.n(),
                k: self.k,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Checks the collapse of the signed indicator sums for one `T` with
    /// `n ∉ T`; see [`Prop4Report`].
    pub fn prop4_report(&self, r: usize, t: &GroundSubset) -> Result<Prop4Report, SieveError> {
        self.require_proper(t)?;
        let partitions = unordered_partitions(t);
        let singles: HashSet<&Dosp> = self
            .k_r(r, &SetPartition::singletons(t))
            .into_iter()
            .collect();

        let mut report = Prop4Report {
            lemma3_ok: true,
            ..Prop4Report::default()
        };
        let mut images: Vec<HashSet<Dosp>> = Vec::with_capacity(partitions.len());
        for s in &partitions {
            let family = self.k_r(r, s);
            report.h_direct += BigInt::from(s.sign()) * BigInt::from(family.len());
            let mut image = HashSet::with_capacity(family.len());
            for p in family {
                let q = lemma3_embed(p, r, s)?;
                if q.winding_number() != self.d || !singles.contains(&q) {
                    report.lemma3_ok = false;
                }
                image.insert(q);
            }
            if image.len() != self.k_r(r, s).len() {
                report.lemma3_ok = false;
            }
            images.push(image);
        }

        let sign_t: i64 = if t.len().is_multiple_of(2) { 1 } else { -1 };
        report.collapse_ok = true;
        report.refinement_ok = true;
        for p in &singles {
            let runs = increasing_r_packed_runs(p, r, t);
            let mut sum = 0i64;
            for (s, image) in partitions.iter().zip(&images) {
                let chi = image.contains(*p);
                if chi != refines_runs(s, &runs) {
                    report.refinement_ok = false;
                }
                if chi {
                    sum += s.sign();
                }
            }
            let expected = if runs.iter().any(|run| run.len() > 1) {
                0
            } else {
                report.hat_size += 1;
                sign_t
            };
            if sum != expected {
                report.collapse_ok = false;
            }
            report.h_via_chi += sum;
        }
        Ok(report)
    }
}

/// Outcome of [`DospFamily::prop4_report`] for one `(r, T)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Prop4Report {
    /// `sum_S (-1)^|S| |K_r(S)|`
    pub h_direct: BigInt,
    /// `sum_{P ∈ K_r(singletons)} sum_S (-1)^|S| chi_S(P)`
    pub h_via_chi: i64,
    /// `|hat-K_r(T)|`
    pub hat_size: u64,
    /// each indicator sum equals `(-1)^|T|` on hat-K and 0 elsewhere
    pub collapse_ok: bool,
    /// `chi_S(P) = 1` exactly when `S` cuts the maximal runs of `P` into
    /// contiguous pieces
    pub refinement_ok: bool,
    /// the embedding is injective, preserves `d` and lands in
    /// `K_r(singletons)`
    pub lemma3_ok: bool,
}

impl Prop4Report {
    pub fn holds(&self) -> bool {
        self.collapse_ok
            && self.refinement_ok
            && self.lemma3_ok
            && self.h_direct == BigInt::from(self.h_via_chi)
    }
}

/// Lemma 3 image checks plus the per-member collapse, for `n ∉ T`.
pub fn check_prop4(k: usize, n: usize, d: usize, r: usize, t: &GroundSubset) -> bool {
    DospFamily::new(k, n, d)
        .prop4_report(r, t)
        .is_ok_and(|rep| rep.holds())
}

/// `sum_{T ⊆ {1..n}} H_r(T)` equals the number of r-hypersimplicial members.
pub fn check_prop3(k: usize, n: usize, r: usize, d: usize) -> bool {
    let family = DospFamily::new(k, n, d);
    let total: BigInt = GroundSubset::all(n)
        .iter()
        .map(|t| family.h_r_reduced(r, t))
        .sum();
    total == BigInt::from(count_r_hypersimplicial(k, n, r, d))
}

/// `(-1)^m <n choose (k - r m) d - m>_{k - r m}` for `|T| = m`.
pub fn h_r_formula(k: usize, n: usize, d: usize, r: usize, m: usize) -> BigInt {
    let count = BigInt::from(hat_k_r_formula(k, n, d, r, m));
    if m.is_multiple_of(2) {
        count
    } else {
        -count
    }
}

/// `<n choose (k - r m) d - m>_{k - r m}`
pub fn hat_k_r_formula(k: usize, n: usize, d: usize, r: usize, m: usize) -> BigUint {
    let a = k as i64 - (r * m) as i64;
    restricted_coeff(n, a * d as i64 - m as i64, a)
}

/// For `n ∉ T`: `|hat-K_r(T)|` and `H_r(T)` both match the restricted
/// coefficient formula.
pub fn check_eq6(family: &DospFamily, r: usize, t: &GroundSubset) -> bool {
    let Ok(hat) = family.hat_k_r(r, t) else {
        return false;
    };
    let m = t.len();
    let expected = hat_k_r_formula(family.k(), family.n(), family.d(), r, m);
    BigUint::from(hat.len()) == expected
        && family.h_r(r, t) == h_r_formula(family.k(), family.n(), family.d(), r, m)
}

/// Second winding vectors are a bijection between `hat-K_r(T)` and the box
/// of admissible vectors with sum `(k - r|T|) d`.
pub fn check_prop5(family: &DospFamily, r: usize, t: &GroundSubset) -> bool {
    let Ok(hat) = family.hat_k_r(r, t) else {
        return false;
    };
    let Ok(blue) = blue_count(family.k(), r, t) else {
        // no blue spots: hat-K must be empty
        return hat.is_empty();
    };
    let mut seen: HashMap<Vec<usize>, &Dosp> = HashMap::with_capacity(hat.len());
    for p in &hat {
        let Ok(v) = second_winding_vector(p, r, t) else {
            return false;
        };
        if v.winding_number() != family.d() || dosp_from_second_winding_vector(&v) != **p {
            return false;
        }
        if seen.insert(v.entries().to_vec(), p).is_some() {
            return false;
        }
    }
    let lo: Vec<usize> = (1..=t.n()).map(|i| usize::from(t.contains(i))).collect();
    let hi: Vec<usize> = (1..=t.n())
        .map(|i| if t.contains(i) { blue } else { blue - 1 })
        .collect();
    let mut box_size = 0usize;
    for entries in BoundedVectors::new(lo, hi, blue * family.d()) {
        box_size += 1;
        if !seen.contains_key(&entries) {
            return false;
        }
    }
    box_size == hat.len()
}

/// Winding numbers are invariant under every cyclic relabelling, and each
/// relabelling permutes the family.
pub fn check_lemma2(family: &DospFamily) -> bool {
    let members: HashSet<&Dosp> = family.members().iter().collect();
    (0..family.n()).all(|s| {
        family.members().iter().all(|p| {
            let q = p.cyclic_shift_elements(s);
            q.winding_number() == family.d() && members.contains(&q)
        })
    })
}

/// Sum of all `H_r(T)` for a fixed family, for reporting.
pub fn sieve_total(family: &DospFamily, r: usize) -> BigInt {
    GroundSubset::all(family.n())
        .iter()
        .map(|t| family.h_r_reduced(r, t))
        .fold(BigInt::zero(), |acc, h| acc + h)
}

/// `K_r(S)` among dosps of type `(k, n)` with winding number `d`.
pub fn k_r_of_s(k: usize, n: usize, d: usize, r: usize, s: &SetPartition) -> Vec<Dosp> {
    enumerate_dosps(k, n, d)
        .filter(|p| in_k_r(p, r, s))
        .collect()
}

/// `H_r(T)` among dosps of type `(k, n)` with winding number `d`.
pub fn h_r_of_t(k: usize, n: usize, d: usize, r: usize, t: &GroundSubset) -> BigInt {
    DospFamily::new(k, n, d).h_r(r, t)
}

/// `hat-K_r(T)` among dosps of type `(k, n)` with winding number `d`.
pub fn hat_k_r(
    k: usize,
    n: usize,
    d: usize,
    r: usize,
    t: &GroundSubset,
) -> Result<Vec<Dosp>, SieveError> {
    let family = DospFamily::new(k, n, d);
    Ok(family.hat_k_r(r, t)?.into_iter().cloned().collect())
}
