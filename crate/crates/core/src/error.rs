use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("Eulerian number A({k}, {n}) requires 1 <= k <= n")]
    EulerianDomain { k: u64, n: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("r must be at least 1 (got {0})")]
    CapTooSmall(u64),
    #[error("n must be at least 2 (got {0})")]
    DimensionTooSmall(u64),
    #[error("k must satisfy 0 < k < r*n = {rn} (got k = {k})")]
    LevelOutOfRange { k: u64, rn: u64 },
}

/// Diagnostics for malformed or invalid decorated ordered set partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DospError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("integer literal at byte {pos} is out of range")]
    IntegerOverflow { pos: usize },
    #[error("a decorated ordered set partition needs at least one block")]
    NoBlocks,
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("element {0} appears more than once")]
    DuplicateElement(usize),
    #[error("element {0} is missing")]
    MissingElement(usize),
    #[error("element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("block {index} has nonpositive gap {gap}")]
    NonPositiveGap { index: usize, gap: i64 },
    #[error("gaps sum to {sum}, expected k = {k}")]
    GapSumMismatch { sum: u64, k: usize },
    #[error("{blocks} blocks but {gaps} gaps")]
    LengthMismatch { blocks: usize, gaps: usize },
    #[error("n must be at least 1")]
    EmptyGroundSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WindingError {
    #[error("circumference k must be at least 1")]
    ZeroCircumference,
    #[error("entry {index} is {value}, outside 0..={max}")]
    EntryOutOfRange {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("entry {index} is {value}, outside {min}..={max}")]
    BoundedEntryOutOfRange {
        index: usize,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("entries sum to {sum}, not a multiple of {modulus}")]
    NotDivisible { sum: usize, modulus: usize },
    #[error("vector is empty")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("subset element {element} is outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("subset contains {0} twice")]
    DuplicateElement(usize),
    #[error("subset must not contain n = {0}")]
    ContainsN(usize),
    #[error("subset must be a proper subset of 1..={0}")]
    NotProper(usize),
    #[error("partition does not cover the subset exactly")]
    NotAPartition,
    #[error("partition is not contained in the r-bad blocks of the given dosp")]
    NotInFamily,
    #[error("element {0} of T is not a singlet block")]
    NotSinglet(usize),
    #[error("T-singlet {{{element}}} has gap {gap}, needs at least r = {r}")]
    InsufficientGap {
        element: usize,
        gap: usize,
        r: usize,
    },
    #[error("k - r|T| = {0} leaves no blue spots")]
    NoBlueSpots(i64),
    #[error("dosp has type ({dk}, {dn}), expected ({k}, {n})")]
    TypeMismatch {
        dk: usize,
        dn: usize,
        k: usize,
        n: usize,
    },
    #[error(transparent)]
    Winding(#[from] WindingError),
    #[error(transparent)]
    Dosp(#[from] DospError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HStarError {
    #[error("numerator has nonzero coefficient {coeff} at degree {degree} >= n")]
    NumeratorDegree { degree: usize, coeff: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("lattice count mismatch at t = {t}: coefficient route {formula}, direct enumeration {direct}")]
    Mismatch {
        t: u64,
        formula: String,
        direct: u64,
    },
}
