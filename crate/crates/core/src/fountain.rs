//! Block fountains of coins.
//!
//! The bottom row has `n` coins in one contiguous block; every higher row is
//! a single contiguous block in which each coin rests in a gap between two
//! adjacent coins of the row beneath, so it touches exactly two of them.
//! A row is encoded as `(start_gap, len)`: the 1-based gap of the row below
//! occupied by its leftmost coin, and its number of coins. Contiguity is
//! intrinsic to the encoding; validity is the pair of inequalities
//! `1 <= start_gap` and `start_gap + len - 1 <= below_len - 1`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FountainError {
    #[error("the bottom row must hold at least one coin")]
    EmptyBase,
    #[error("row {row} is empty")]
    EmptyRow { row: usize },
    #[error("row {row} is not supported by the row beneath it")]
    UnsupportedRow { row: usize },
    #[error("coin set does not form a block fountain: {0}")]
    NotABlockFountain(String),
    #[error("cannot parse block fountain from {input:?}")]
    Parse { input: String },
}

/// A coin identified by `(row, position)`: rows count from 1 at the bottom,
/// and a coin at `(row, position)` spans the bottom coins
/// `position ..= position + row - 1`. A coin at row `r + 1`, position `i`
/// rests on the coins `(r, i)` and `(r, i + 1)`.
pub type Coin = (usize, usize);

/// Serialized form: `{"base": n, "rows": [[start_gap, len], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FountainRepr", into = "FountainRepr")]
pub struct BlockFountain {
    base: usize,
    rows: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct FountainRepr {
    base: usize,
    rows: Vec<(usize, usize)>,
}

impl TryFrom<FountainRepr> for BlockFountain {
    type Error = FountainError;
    fn try_from(r: FountainRepr) -> Result<Self, FountainError> {
        BlockFountain::new(r.base, r.rows)
    }
}

impl From<BlockFountain> for FountainRepr {
    fn from(f: BlockFountain) -> FountainRepr {
        FountainRepr {
            base: f.base,
            rows: f.rows,
        }
    }
}

/// A coin not touched by any coin in a higher row. `row` counts from 1 at
/// the bottom; `offset` is the coin's 1-based index within its row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeakCoin {
    pub row: usize,
    pub offset: usize,
}

impl BlockFountain {
    /// `rows` lists the upper rows bottom-up as `(start_gap, len)` pairs.
    pub fn new(base: usize, rows: Vec<(usize, usize)>) -> Result<Self, FountainError> {
        if base == 0 {
            return Err(FountainError::EmptyBase);
        }
        let mut below_len = base;
        for (idx, &(gap, len)) in rows.iter().enumerate() {
            if len == 0 {
                return Err(FountainError::EmptyRow { row: idx + 2 });
            }
            if gap == 0 || gap + len > below_len {
                return Err(FountainError::UnsupportedRow { row: idx + 2 });
            }
            below_len = len;
        }
        Ok(BlockFountain { base, rows })
    }

    /// The fountain with only a bottom row.
    pub fn flat(base: usize) -> Self {
        BlockFountain::new(base, Vec::new()).expect("a bottom row alone is always valid")
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Upper rows bottom-up, as `(start_gap, len)` pairs.
    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn coin_count(&self) -> usize {
        self.base + self.rows.iter().map(|&(_, len)| len).sum::<usize>()
    }

    /// Absolute position of each row's leftmost coin, bottom row first.
    fn row_starts(&self) -> Vec<usize> {
        let mut starts = vec![1usize];
        for &(gap, _) in &self.rows {
            starts.push(starts.last().unwrap() + gap - 1);
        }
        starts
    }

    fn row_len(&self, row: usize) -> usize {
        if row == 1 {
            self.base
        } else {
            self.rows[row - 2].1
        }
    }

    /// All peaks, left to right. Uncovered bottom coins count as peaks.
    pub fn peaks(&self) -> Vec<PeakCoin> {
        let starts = self.row_starts();
        let row_count = 1 + self.rows.len();
        let mut peaks = Vec::new();
        for row in 1..=row_count {
            let start = starts[row - 1];
            for offset in 1..=self.row_len(row) {
                let position = start + offset - 1;
                let covered = row < row_count && {
                    let above_start = starts[row];
                    let above_len = self.row_len(row + 1);
                    // a coin at (row + 1, t) touches (row, t) and (row, t + 1)
                    position >= above_start && position <= above_start + above_len
                };
                if !covered {
                    peaks.push((position, PeakCoin { row, offset }));
                }
            }
        }
        peaks.sort_by_key(|&(position, _)| position);
        peaks.into_iter().map(|(_, p)| p).collect()
    }

    /// The interval of bottom coins spanned by the triangular stack under a
    /// peak.
    pub fn peak_span(&self, peak: &PeakCoin) -> (usize, usize) {
        let starts = self.row_starts();
        let lo = starts[peak.row - 1] + peak.offset - 1;
        (lo, lo + peak.row - 1)
    }

    /// Rebuilds a fountain from explicit coin cells. The bottom row
    /// `(1, 1)..(1, base)` must be present in full, every row must be
    /// contiguous, and every upper coin must rest on two coins beneath.
    pub fn from_coins(base: usize, coins: &BTreeSet<Coin>) -> Result<Self, FountainError> {
        let fail = |msg: String| Err(FountainError::NotABlockFountain(msg));
        if base == 0 {
            return Err(FountainError::EmptyBase);
        }
        let mut by_row: Vec<Vec<usize>> = Vec::new();
        for &(row, pos) in coins {
            if row == 0 || pos == 0 {
                return fail(format!("coin ({row}, {pos}) out of range"));
            }
            while by_row.len() < row {
                by_row.push(Vec::new());
            }
            by_row[row - 1].push(pos);
        }
        if by_row.is_empty() || by_row[0] != (1..=base).collect::<Vec<_>>() {
            return fail("bottom row must be exactly 1..=base".into());
        }
        let mut rows = Vec::new();
        let mut below_start = 1usize;
        for row in 2..=by_row.len() {
            let positions = &by_row[row - 1];
            if positions.is_empty() {
                return fail(format!("row {row} is empty below an occupied row"));
            }
            let start = positions[0];
            if *positions != (start..start + positions.len()).collect::<Vec<_>>() {
                return fail(format!("row {row} is not contiguous"));
            }
            let below = &by_row[row - 2];
            let supported =
                below.contains(&start) && below.contains(&(positions.last().unwrap() + 1));
            if !supported {
                return fail(format!("row {row} is not fully supported"));
            }
            rows.push((start - below_start + 1, positions.len()));
            below_start = start;
        }
        BlockFountain::new(base, rows)
    }
}

/// The coins of the maximal stack over the bottom interval `lo ..= hi`: a
/// triangle with `hi - lo + 1` coins in its bottom row and a single peak.
pub fn triangular_stack(lo: usize, hi: usize) -> Vec<Coin> {
    assert!(1 <= lo && lo <= hi, "interval must be nonempty");
    let h = hi - lo + 1;
    let mut coins = Vec::new();
    for row in 1..=h {
        for pos in lo..=hi + 1 - row {
            coins.push((row, pos));
        }
    }
    coins
}

/// All block fountains with `n` bottom coins, ordered lexicographically on
/// their row tuples.
pub fn enumerate_fountains(n: usize) -> Vec<BlockFountain> {
    assert!(n >= 1, "base must hold at least one coin");
    let mut out = Vec::new();
    let mut rows: Vec<(usize, usize)> = Vec::new();
    grow(n, n, &mut rows, &mut out);
    out
}

fn grow(
    base: usize,
    below_len: usize,
    rows: &mut Vec<(usize, usize)>,
    out: &mut Vec<BlockFountain>,
) {
    out.push(BlockFountain {
        base,
        rows: rows.clone(),
    });
    for gap in 1..below_len {
        for len in 1..=below_len.saturating_sub(gap) {
            rows.push((gap, len));
            grow(base, len, rows, out);
            rows.pop();
        }
    }
}

impl fmt::Display for BlockFountain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.rows.is_empty() {
            write!(f, " |")?;
            for &(gap, len) in &self.rows {
                write!(f, " ({gap},{len})")?;
            }
        }
        Ok(())
    }
}

impl FromStr for BlockFountain {
    type Err = FountainError;

    fn from_str(s: &str) -> Result<Self, FountainError> {
        let parse_err = || FountainError::Parse {
            input: s.to_string(),
        };
        let mut halves = s.splitn(2, '|');
        let base: usize = halves
            .next()
            .unwrap()
            .trim()
            .parse()
            .map_err(|_| parse_err())?;
        let mut rows = Vec::new();
        if let Some(tail) = halves.next() {
            for token in tail.split_whitespace() {
                let inner = token
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(parse_err)?;
                let mut nums = inner.splitn(2, ',');
                let gap: usize = nums
                    .next()
                    .and_then(|t| t.trim().parse().ok())
                    .ok_or_else(parse_err)?;
                let len: usize = nums
                    .next()
                    .and_then(|t| t.trim().parse().ok())
                    .ok_or_else(parse_err)?;
                rows.push((gap, len));
            }
        }
        BlockFountain::new(base, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The six-coin fountain with four second-row coins over gaps 1..=4 and
    /// two third-row coins over gaps 2..=3 of the second row.
    fn example6() -> BlockFountain {
        BlockFountain::new(6, vec![(1, 4), (2, 2)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(BlockFountain::new(6, vec![(1, 4), (2, 2)]).is_ok());
        assert!(BlockFountain::new(4, vec![]).is_ok());
        assert!(matches!(
            BlockFountain::new(5, vec![(1, 5)]),
            Err(FountainError::UnsupportedRow { row: 2 })
        ));
        assert!(matches!(
            BlockFountain::new(5, vec![(5, 1)]),
            Err(FountainError::UnsupportedRow { row: 2 })
        ));
        assert!(matches!(
            BlockFountain::new(3, vec![(1, 0)]),
            Err(FountainError::EmptyRow { row: 2 })
        ));
        assert!(matches!(
            BlockFountain::new(0, vec![]),
            Err(FountainError::EmptyBase)
        ));
    }

    #[test]
    fn peaks_of_example() {
        let f = example6();
        let peaks = f.peaks();
        assert_eq!(peaks.len(), 4);
        let spans: Vec<(usize, usize)> = peaks.iter().map(|p| f.peak_span(p)).collect();
        assert_eq!(spans, vec![(1, 2), (2, 4), (3, 5), (6, 6)]);
        // one elevated peak at row 2, two at row 3, and bottom coin 6
        let rows: Vec<usize> = peaks.iter().map(|p| p.row).collect();
        assert_eq!(rows, vec![2, 3, 3, 1]);
    }

    #[test]
    fn flat_and_triangular_peaks() {
        assert_eq!(BlockFountain::flat(5).peaks().len(), 5);
        let triangle = BlockFountain::new(4, vec![(1, 3), (1, 2), (1, 1)]).unwrap();
        let peaks = triangle.peaks();
        assert_eq!(peaks.len(), 1);
        assert_eq!(triangle.peak_span(&peaks[0]), (1, 4));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_fountains(1).len(), 1);
        assert_eq!(enumerate_fountains(4).len(), 13);
        assert_eq!(enumerate_fountains(6).len(), 89);
        // canonical row-tuple order
        let all = enumerate_fountains(5);
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| a.rows.cmp(&b.rows));
        assert_eq!(all, sorted);
        assert_eq!(
            all.iter().collect::<std::collections::BTreeSet<_>>().len(),
            all.len()
        );
    }

    #[test]
    fn stack_fragments() {
        assert_eq!(triangular_stack(1, 1), vec![(1, 1)]);
        assert_eq!(
            triangular_stack(1, 3),
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]
        );
    }

    #[test]
    fn union_of_stacks_rebuilds_example() {
        // stacks over the spans of the example's peaks
        let mut coins = BTreeSet::new();
        for (lo, hi) in [(1, 2), (2, 4), (3, 5), (6, 6)] {
            coins.extend(triangular_stack(lo, hi));
        }
        assert_eq!(BlockFountain::from_coins(6, &coins).unwrap(), example6());
    }

    #[test]
    fn from_coins_rejects_gaps() {
        // two separated blocks in the second row
        let mut coins: BTreeSet<Coin> = (1..=5).map(|i| (1, i)).collect();
        coins.insert((2, 1));
        coins.insert((2, 3));
        assert!(matches!(
            BlockFountain::from_coins(5, &coins),
            Err(FountainError::NotABlockFountain(_))
        ));
    }

    #[test]
    fn every_upper_coin_touches_two() {
        // structural recheck, independent of the encoding inequalities
        for f in enumerate_fountains(6) {
            let mut coins = BTreeSet::new();
            let starts = f.row_starts();
            for row in 1..=(1 + f.rows().len()) {
                for offset in 0..f.row_len(row) {
                    coins.insert((row, starts[row - 1] + offset));
                }
            }
            for &(row, pos) in &coins {
                if row > 1 {
                    assert!(coins.contains(&(row - 1, pos)) && coins.contains(&(row - 1, pos + 1)));
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let f = example6();
        assert_eq!(f.to_string(), "6 | (1,4) (2,2)");
        assert_eq!(f.to_string().parse::<BlockFountain>().unwrap(), f);
        assert_eq!(
            "4".parse::<BlockFountain>().unwrap(),
            BlockFountain::flat(4)
        );
        assert!("x | (1,2)".parse::<BlockFountain>().is_err());
        assert!("5 | (1 2)".parse::<BlockFountain>().is_err());
    }
}
