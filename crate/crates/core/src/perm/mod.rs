//! Permutations in one-line notation: pattern containment (classical and
//! vincular), structural decompositions, and generators for avoidance
//! classes.
//!
//! Positions and values are 1-based throughout, matching one-line notation
//! `sigma(1) sigma(2) ... sigma(n)`.

mod generate;
mod pattern;

pub use generate::{
    avoiders_filter, avoiders_filter_bounded, avoiders_pruned, DEFAULT_ORACLE_BOUND,
};
pub use pattern::Pattern;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..=n: {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("value {value} is out of range for size {n}")]
    ValueOutOfRange { value: u32, n: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid left-to-right maxima: {0}")]
    InvalidMaxima(String),
    #[error("n = {n} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
}

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// The empty permutation (`n = 0`) is admitted as the two-sided identity of
/// [`direct_sum`](Permutation::direct_sum); class enumeration starts at
/// `n = 1`.
///
/// Text form: a plain digit string for `n <= 9` (`"24513"`), comma-separated
/// values for larger sizes (`"10,1,2,..."`). JSON form: an array of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    values: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = PermError;
    fn try_from(values: Vec<u32>) -> Result<Self, PermError> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.values
    }
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(PermError::NotAPermutation(values));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    /// Skips validation; callers must guarantee a rearrangement of `1..=n`.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// The increasing permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation `n (n-1) ... 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `sigma(pos)` for a 1-based position. Panics when out of range.
    pub fn value_at(&self, pos: usize) -> u32 {
        self.values[pos - 1]
    }

    /// The 1-based position `k` with `sigma(k) = value`.
    pub fn position_of(&self, value: u32) -> Result<usize, PermError> {
        if value == 0 || value as usize > self.len() {
            return Err(PermError::ValueOutOfRange {
                value,
                n: self.len(),
            });
        }
        Ok(self
            .values
            .iter()
            .position(|&v| v == value)
            .expect("permutation contains every value in 1..=n")
            + 1)
    }

    /// `self` followed by a copy of `other` shifted up by `self.len()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len() as u32;
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|&v| v + shift))
            .collect();
        Permutation { values }
    }

    /// A copy of `self` shifted up by `other.len()`, followed by `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len() as u32;
        let values = self
            .values
            .iter()
            .map(|&v| v + shift)
            .chain(other.values.iter().copied())
            .collect();
        Permutation { values }
    }

    /// Positions and values of the left-to-right maxima (entries larger than
    /// everything before them).
    pub fn ltr_maxima(&self) -> LtrMaxima {
        let mut positions = Vec::new();
        let mut values = Vec::new();
        let mut best = 0u32;
        for (idx, &v) in self.values.iter().enumerate() {
            if v > best {
                best = v;
                positions.push(idx + 1);
                values.push(v);
            }
        }
        LtrMaxima {
            positions,
            values,
            n: self.len(),
        }
    }

    /// The maximal strictly decreasing contiguous factors.
    pub fn descending_runs(&self) -> DescendingRuns {
        let mut runs: Vec<Vec<u32>> = Vec::new();
        for &v in &self.values {
            match runs.last_mut() {
                Some(run) if *run.last().unwrap() > v => run.push(v),
                _ => runs.push(vec![v]),
            }
        }
        DescendingRuns { runs }
    }

    /// True iff the permutation is not a direct sum of two nonempty
    /// permutations, i.e. no proper prefix uses exactly the values
    /// `{1, ..., m}`.
    pub fn is_indecomposable(&self) -> bool {
        let n = self.len();
        let mut prefix_max = 0u32;
        for (idx, &v) in self.values.iter().enumerate().take(n.saturating_sub(1)) {
            prefix_max = prefix_max.max(v);
            if prefix_max as usize == idx + 1 {
                return false;
            }
        }
        true
    }

    /// Splits into the (unique) maximal list of indecomposable summands, each
    /// reduced to its own ground set.
    pub fn direct_sum_components(&self) -> Vec<Permutation> {
        let mut components = Vec::new();
        let mut start = 0usize;
        let mut prefix_max = 0u32;
        for (idx, &v) in self.values.iter().enumerate() {
            prefix_max = prefix_max.max(v);
            if prefix_max as usize == idx + 1 {
                let shift = start as u32;
                let comp = self.values[start..=idx]
                    .iter()
                    .map(|&v| v - shift)
                    .collect();
                components.push(Permutation::from_vec_unchecked(comp));
                start = idx + 1;
            }
        }
        components
    }

    /// True iff some subsequence realizes `pat` under its adjacency
    /// constraints.
    pub fn contains(&self, pat: &Pattern) -> bool {
        pattern::occurrences(&self.values, pat, true, false) > 0
    }

    /// Number of index subsequences realizing `pat` under its adjacency
    /// constraints.
    pub fn count_occurrences(&self, pat: &Pattern) -> usize {
        pattern::occurrences(&self.values, pat, false, false)
    }

    pub fn avoids(&self, pat: &Pattern) -> bool {
        !self.contains(pat)
    }

    pub fn avoids_all(&self, pats: &[Pattern]) -> bool {
        pats.iter().all(|p| self.avoids(p))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let parse_err = || PermError::Parse {
            kind: "permutation",
            input: s.to_string(),
        };
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).filter(|&d| d > 0).ok_or_else(parse_err))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

/// The left-to-right maxima of a 321-avoiding permutation determine it
/// uniquely: maxima go to their positions and the remaining values fill the
/// remaining positions in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtrMaxima {
    positions: Vec<usize>,
    values: Vec<u32>,
    n: usize,
}

impl LtrMaxima {
    /// Checks the shape invariants: strictly increasing positions starting at
    /// 1, strictly increasing values ending at `n`, and `v_j >= i_j`.
    pub fn new(positions: Vec<usize>, values: Vec<u32>, n: usize) -> Result<Self, PermError> {
        let err = |msg: String| Err(PermError::InvalidMaxima(msg));
        if positions.len() != values.len() {
            return err("positions and values differ in length".into());
        }
        if n == 0 {
            if positions.is_empty() {
                return Ok(LtrMaxima {
                    positions,
                    values,
                    n,
                });
            }
            return err("nonempty maxima for an empty permutation".into());
        }
        if positions.is_empty() {
            return err("a nonempty permutation has at least one maximum".into());
        }
        if positions[0] != 1 {
            return err("first maximum must sit at position 1".into());
        }
        if *values.last().unwrap() as usize != n {
            return err(format!("last maximum value must be {n}"));
        }
        if !positions.windows(2).all(|w| w[0] < w[1]) || *positions.last().unwrap() > n {
            return err("positions must be strictly increasing and at most n".into());
        }
        if !values.windows(2).all(|w| w[0] < w[1]) {
            return err("values must be strictly increasing".into());
        }
        for (&i, &v) in positions.iter().zip(&values) {
            if (v as usize) < i {
                return err(format!("maximum {v} at position {i} is below its position"));
            }
        }
        Ok(LtrMaxima {
            positions,
            values,
            n,
        })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Rebuilds the unique 321-avoiding permutation with the given left-to-right
/// maxima.
///
/// Beyond the shape invariants of [`LtrMaxima`] this needs `v_j >= i_{j+1} - 1`
/// for every consecutive pair (with `i_{k+1} = n + 1`): the value at one
/// maximum must dominate every filler entry placed before the next maximum.
pub fn from_ltr_maxima(m: &LtrMaxima) -> Result<Permutation, PermError> {
    let n = m.n;
    let k = m.positions.len();
    for j in 0..k {
        let next_pos = if j + 1 < k { m.positions[j + 1] } else { n + 1 };
        if (m.values[j] as usize) < next_pos - 1 {
            return Err(PermError::InvalidMaxima(format!(
                "value {} at position {} cannot dominate the entries before position {}",
                m.values[j], m.positions[j], next_pos
            )));
        }
    }
    let mut out = vec![0u32; n];
    let mut is_max_value = vec![false; n + 1];
    for (&pos, &val) in m.positions.iter().zip(&m.values) {
        out[pos - 1] = val;
        is_max_value[val as usize] = true;
    }
    let mut fillers = (1..=n as u32).filter(|&v| !is_max_value[v as usize]);
    for slot in out.iter_mut() {
        if *slot == 0 {
            *slot = fillers.next().expect("as many fillers as free positions");
        }
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// Decomposition of a permutation into maximal strictly decreasing contiguous
/// factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescendingRuns {
    runs: Vec<Vec<u32>>,
}

impl DescendingRuns {
    pub fn runs(&self) -> &[Vec<u32>] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

/// Splits a strictly decreasing word into maximal factors of consecutive
/// integers, e.g. `9 8 1 -> [9 8][1]` and `7 3 2 -> [7][3 2]`.
pub fn consecutive_blocks(run: &[u32]) -> Vec<&[u32]> {
    let mut blocks = Vec::new();
    let mut start = 0usize;
    for i in 1..run.len() {
        if run[i - 1] != run[i] + 1 {
            blocks.push(&run[start..i]);
            start = i;
        }
    }
    if start < run.len() {
        blocks.push(&run[start..]);
    }
    blocks
}

/// The four avoidance classes counted by the odd-indexed Fibonacci numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermClass {
    /// Avoiders of 321 and 4123.
    Av321_4123,
    /// Avoiders of 321 and the vincular pattern `21-4-3` (the `21` must be
    /// adjacent in the host).
    Av321Vinc2143,
    /// Avoiders of 321 and 3412 (Boolean permutations).
    Av321_3412,
    /// Avoiders of 231 and 3124.
    Av231_3124,
}

impl PermClass {
    pub const ALL: [PermClass; 4] = [
        PermClass::Av321_4123,
        PermClass::Av321Vinc2143,
        PermClass::Av321_3412,
        PermClass::Av231_3124,
    ];

    pub fn patterns(self) -> Vec<Pattern> {
        let classical = |v: Vec<u32>| Pattern::classical(v).expect("static pattern");
        match self {
            PermClass::Av321_4123 => vec![classical(vec![3, 2, 1]), classical(vec![4, 1, 2, 3])],
            PermClass::Av321Vinc2143 => vec![
                classical(vec![3, 2, 1]),
                Pattern::vincular(vec![2, 1, 4, 3], [1]).expect("static pattern"),
            ],
            PermClass::Av321_3412 => vec![classical(vec![3, 2, 1]), classical(vec![3, 4, 1, 2])],
            PermClass::Av231_3124 => vec![classical(vec![2, 3, 1]), classical(vec![3, 1, 2, 4])],
        }
    }

    /// The fixed command-line selector for this class.
    pub fn selector(self) -> &'static str {
        match self {
            PermClass::Av321_4123 => "321-4123",
            PermClass::Av321Vinc2143 => "321-21_43",
            PermClass::Av321_3412 => "321-3412",
            PermClass::Av231_3124 => "231-3124",
        }
    }

    pub fn from_selector(s: &str) -> Option<PermClass> {
        PermClass::ALL.iter().copied().find(|c| c.selector() == s)
    }

    pub fn admits(self, p: &Permutation) -> bool {
        p.avoids_all(&self.patterns())
    }

    /// All members of size `n` in lexicographic order.
    pub fn enumerate(self, n: usize) -> Vec<Permutation> {
        avoiders_pruned(n, &self.patterns())
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.selector())
    }
}
