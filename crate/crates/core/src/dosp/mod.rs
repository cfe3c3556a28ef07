//! Decorated ordered set partitions.
//!
//! A decorated ordered set partition of type `(k, n)` is a cyclically ordered
//! list of blocks partitioning `{1..n}`, each block `L_i` carrying a positive
//! gap `l_i` (the clockwise distance to the next block) with `sum l_i = k`.
//! Blocks sit on a circle of `k` spots; rotations of the block list describe
//! the same object, and [`Dosp`] always stores the rotation whose first block
//! contains element 1.

mod diagram;
mod parse;

use std::fmt;

pub use diagram::{SpotColor, SpotDiagram};

use crate::error::{DospError, SpecError, WindingError};

/// The slice `I^n_{r,k} = { x in [0, r]^n : sum x_i = k }`; `r = 1` is the
/// hypersimplex `Delta_{k,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolytopeSpec {
    r: u64,
    k: u64,
    n: u64,
}

impl PolytopeSpec {
    /// Requires `r >= 1`, `n >= 2` and `0 < k < r n`, so the slice is a full
    /// `(n-1)`-dimensional polytope.
    pub fn new(r: u64, k: u64, n: u64) -> Result<Self, SpecError> {
        if r < 1 {
            return Err(SpecError::CapTooSmall(r));
        }
        if n < 2 {
            return Err(SpecError::DimensionTooSmall(n));
        }
        let rn = r.saturating_mul(n);
        if k == 0 || k >= rn {
            return Err(SpecError::LevelOutOfRange { k, rn });
        }
        Ok(PolytopeSpec { r, k, n })
    }

    pub fn hypersimplex(k: u64, n: u64) -> Result<Self, SpecError> {
        Self::new(1, k, n)
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Every valid spec with `r_range`, `n_range` and `k <= max_k`.
    pub fn sweep(
        r_range: std::ops::RangeInclusive<u64>,
        n_range: std::ops::RangeInclusive<u64>,
        max_k: u64,
    ) -> Vec<PolytopeSpec> {
        let mut out = Vec::new();
        for r in r_range {
            for n in n_range.clone() {
                for k in 1..=max_k {
                    if let Ok(spec) = PolytopeSpec::new(r, k, n) {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I^{}_{{{},{}}}", self.n, self.r, self.k)
    }
}

/// Rotates `(blocks, gaps)` so that the block containing element 1 comes first.
///
/// Inputs that do not contain element 1 are returned unchanged.
pub fn canonicalize(blocks: &[Vec<usize>], gaps: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let start = blocks.iter().position(|b| b.contains(&1)).unwrap_or(0);
    let mut b = blocks.to_vec();
    let mut g = gaps.to_vec();
    b.rotate_left(start);
    let shift = start.min(g.len());
    g.rotate_left(shift);
    (b, g)
}

/// A validated decorated ordered set partition in canonical rotation.
///
/// Elements inside each block are kept in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dosp {
    blocks: Vec<Vec<usize>>,
    gaps: Vec<usize>,
    k: usize,
    n: usize,
}

impl Dosp {
    /// Validates `(blocks, gaps)` as a dosp of type `(k, n)` given in any
    /// rotation and stores its canonical rotation.
    pub fn new(
        blocks: Vec<Vec<usize>>,
        gaps: Vec<usize>,
        k: usize,
        n: usize,
    ) -> Result<Self, DospError> {
        if n == 0 {
            return Err(DospError::EmptyGroundSet);
        }
        if blocks.is_empty() {
            return Err(DospError::NoBlocks);
        }
        if blocks.len() != gaps.len() {
            return Err(DospError::LengthMismatch {
                blocks: blocks.len(),
                gaps: gaps.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        let mut blocks = blocks;
        for (index, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(DospError::EmptyBlock { index });
            }
            for &e in block.iter() {
                if e == 0 || e > n {
                    return Err(DospError::ElementOutOfRange { element: e, n });
                }
                if seen[e] {
                    return Err(DospError::DuplicateElement(e));
                }
                seen[e] = true;
            }
            block.sort_unstable();
        }
        if let Some(missing) = (1..=n).find(|&e| !seen[e]) {
            return Err(DospError::MissingElement(missing));
        }
        if let Some(index) = gaps.iter().position(|&g| g == 0) {
            return Err(DospError::NonPositiveGap { index, gap: 0 });
        }
        let sum: u64 = gaps.iter().map(|&g| g as u64).sum();
        if sum != k as u64 {
            return Err(DospError::GapSumMismatch { sum, k });
        }
        let (blocks, gaps) = canonicalize(&blocks, &gaps);
        Ok(Dosp { blocks, gaps, k, n })
    }

    /// Parses the textual form `({1,2,7}_2,{3,5}_3,{4,6}_1)`.
    ///
    /// Whitespace is ignored. The result is canonical regardless of the
    /// rotation written.
    pub fn parse(text: &str, k: usize, n: usize) -> Result<Self, DospError> {
        let (blocks, gaps) = parse::parse_parts(text)?;
        Dosp::new(blocks, gaps, k, n)
    }

    /// The unique dosp whose winding vector is `w` (inverse of
    /// [`Dosp::winding_vector`]).
    ///
    /// Element 1 goes on spot 0 of a circle with `k` spots and each next
    /// element is placed `w_i` spots further clockwise; occupied spots become
    /// blocks.
    pub fn from_winding_vector(w: &WindingVector) -> Self {
        let k = w.k();
        let n = w.n();
        let mut spot_elems: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut pos = 0usize;
        for e in 1..=n {
            spot_elems[pos].push(e);
            pos = (pos + w.entries()[e - 1]) % k;
        }
        Self::from_spots(spot_elems, k, n)
    }

    /// Builds a dosp from a circle of spots listed clockwise, starting
    /// anywhere. Elements within a spot must already be ascending.
    pub(crate) fn from_spots(spots: Vec<Vec<usize>>, k: usize, n: usize) -> Self {
        let occupied: Vec<usize> = (0..spots.len()).filter(|&s| !spots[s].is_empty()).collect();
        let m = occupied.len();
        let gaps: Vec<usize> = (0..m)
            .map(|i| {
                let here = occupied[i];
                let next = occupied[(i + 1) % m];
                if m == 1 {
                    k
                } else {
                    (next + k - here) % k
                }
            })
            .collect();
        let mut spots = spots;
        let blocks: Vec<Vec<usize>> = occupied
            .iter()
            .map(|&s| std::mem::take(&mut spots[s]))
            .collect();
        let (blocks, gaps) = canonicalize(&blocks, &gaps);
        Dosp { blocks, gaps, k, n }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `block_of[e]` is the index of the block containing `e` (index 0 unused).
    pub fn block_index(&self) -> Vec<usize> {
        let mut block_of = vec![0; self.n + 1];
        for (i, block) in self.blocks.iter().enumerate() {
            for &e in block {
                block_of[e] = i;
            }
        }
        block_of
    }

    /// Spot (0-based, clockwise from the first block) of every block.
    pub fn block_spots(&self) -> Vec<usize> {
        let mut spots = Vec::with_capacity(self.gaps.len());
        let mut acc = 0;
        for &g in &self.gaps {
            spots.push(acc);
            acc += g;
        }
        spots
    }

    pub fn spot_diagram(&self) -> SpotDiagram {
        SpotDiagram::from_gaps(&self.gaps)
    }

    /// `w_i` is the clockwise distance from the block of `i` to the block of
    /// `i + 1` (indices mod `n`), zero when they share a block.
    pub fn winding_vector(&self) -> WindingVector {
        let block_of = self.block_index();
        let spots = self.block_spots();
        let pos = |e: usize| spots[block_of[e]];
        let entries = (1..=self.n)
            .map(|i| {
                let next = if i == self.n { 1 } else { i + 1 };
                (pos(next) + self.k - pos(i)) % self.k
            })
            .collect();
        WindingVector { entries, k: self.k }
    }

    /// `d` with `sum w_i = k d`.
    pub fn winding_number(&self) -> usize {
        self.winding_vector().winding_number()
    }

    /// Indices of the r-bad blocks, those with `l_i >= r |L_i|`.
    pub fn r_bad_indices(&self, r: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.gaps[i] >= r * self.blocks[i].len())
            .collect()
    }

    /// The set `I_r(P)` of r-bad blocks, in block order.
    pub fn r_bad_blocks(&self, r: usize) -> Vec<&[usize]> {
        self.r_bad_indices(r)
            .into_iter()
            .map(|i| self.blocks[i].as_slice())
            .collect()
    }

    /// `1 <= l_i <= r |L_i| - 1` for every block.
    pub fn is_r_hypersimplicial(&self, r: usize) -> bool {
        self.blocks
            .iter()
            .zip(&self.gaps)
            .all(|(b, &g)| g < r * b.len())
    }

    /// Relabels every element `e` as `((e - 1 + s) mod n) + 1`, keeping the
    /// block structure and gaps.
    pub fn cyclic_shift_elements(&self, s: usize) -> Dosp {
        let n = self.n;
        let s = s % n;
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut shifted: Vec<usize> = b.iter().map(|&e| (e - 1 + s) % n + 1).collect();
                shifted.sort_unstable();
                shifted
            })
            .collect();
        let (blocks, gaps) = canonicalize(&blocks, &self.gaps);
        Dosp {
            blocks,
            gaps,
            k: self.k,
            n,
        }
    }

    /// Every rotation of the block list, starting with the canonical one.
    pub fn rotations(&self) -> impl Iterator<Item = (Vec<Vec<usize>>, Vec<usize>)> + '_ {
        (0..self.blocks.len()).map(move |s| {
            let mut b = self.blocks.clone();
            let mut g = self.gaps.clone();
            b.rotate_left(s);
            g.rotate_left(s);
            (b, g)
        })
    }
}

/// Writes `(blocks, gaps)` in the textual grammar.
pub fn format_parts(blocks: &[Vec<usize>], gaps: &[usize]) -> String {
    let mut out = String::from("(");
    for (i, (block, gap)) in blocks.iter().zip(gaps).enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('{');
        for (j, e) in block.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&e.to_string());
        }
        out.push_str("}_");
        out.push_str(&gap.to_string());
    }
    out.push(')');
    out
}

impl fmt::Display for Dosp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.blocks, &self.gaps))
    }
}

/// A length-`n` vector with `0 <= w_i <= k - 1` and `k | sum w_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WindingVector {
    entries: Vec<usize>,
    k: usize,
}

impl WindingVector {
    pub fn new(entries: Vec<usize>, k: usize) -> Result<Self, WindingError> {
        if k == 0 {
            return Err(WindingError::ZeroCircumference);
        }
        if entries.is_empty() {
            return Err(WindingError::Empty);
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &w)| w >= k) {
            return Err(WindingError::EntryOutOfRange {
                index,
                value,
                max: k - 1,
            });
        }
        let sum: usize = entries.iter().sum();
        if !sum.is_multiple_of(k) {
            return Err(WindingError::NotDivisible { sum, modulus: k });
        }
        Ok(WindingVector { entries, k })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn winding_number(&self) -> usize {
        let sum: usize = self.entries.iter().sum();
        debug_assert_eq!(sum % self.k, 0, "winding vector sum not divisible by k");
        sum / self.k
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }
}
