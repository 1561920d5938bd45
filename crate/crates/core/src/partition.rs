//! Set partitions of `{1, ..., n}`, their arc diagrams, and enumeration of
//! the noncrossing, nonnesting ones.
//!
//! The arc diagram joins each pair of integers that appear consecutively in
//! the same block. Two arcs `(i1, j1)`, `(i2, j2)` cross if
//! `i1 < i2 < j1 < j2` and nest if `i1 < i2 < j2 < j1`; a partition with
//! neither configuration has all its arcs pairwise non-overlapping except
//! possibly at shared endpoints.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("blocks do not partition 1..=n: {0}")]
    NotAPartition(String),
    #[error("cannot parse set partition from {input:?}")]
    Parse { input: String },
}

/// A partition of `{1, ..., n}` into disjoint nonempty blocks, kept in
/// canonical form: elements ascending within blocks, blocks ascending by
/// minimum.
///
/// Text form `"1,2,4/3/5"`; JSON form an array of arrays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for SetPartition {
    type Error = PartitionError;
    fn try_from(blocks: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        SetPartition::new(blocks)
    }
}

impl From<SetPartition> for Vec<Vec<u32>> {
    fn from(p: SetPartition) -> Vec<Vec<u32>> {
        p.blocks
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    arcs: Vec<(u32, u32)>,
}

impl ArcDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs sorted by left endpoint.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn crossings(&self) -> usize {
        self.pairs(|(i1, j1), (i2, j2)| i1 < i2 && i2 < j1 && j1 < j2)
    }

    pub fn nestings(&self) -> usize {
        self.pairs(|(i1, j1), (i2, j2)| i1 < i2 && i2 < j2 && j2 < j1)
    }

    fn pairs(&self, test: impl Fn((u32, u32), (u32, u32)) -> bool) -> usize {
        let mut count = 0;
        for (idx, &a) in self.arcs.iter().enumerate() {
            for &b in &self.arcs[idx + 1..] {
                if test(a, b) || test(b, a) {
                    count += 1;
                }
            }
        }
        count
    }
}

impl SetPartition {
    /// Validates that the blocks are disjoint, nonempty, and cover `1..=n`,
    /// then canonicalizes.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(PartitionError::NotAPartition("empty block".into()));
            }
            for &v in block {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return Err(PartitionError::NotAPartition(format!(
                        "element {v} missing, repeated, or out of range"
                    )));
                }
                seen[v as usize] = true;
            }
        }
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// The partition of `1..=n` into singletons.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            blocks: (1..=n as u32).map(|v| vec![v]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// One arc per pair of consecutive elements of a block, sorted by left
    /// endpoint.
    pub fn arcs(&self) -> ArcDiagram {
        let mut arcs = Vec::new();
        for block in &self.blocks {
            for w in block.windows(2) {
                arcs.push((w[0], w[1]));
            }
        }
        arcs.sort_unstable();
        ArcDiagram { n: self.n(), arcs }
    }

    /// Noncrossing and nonnesting.
    pub fn is_ncn(&self) -> bool {
        let d = self.arcs();
        d.crossings() == 0 && d.nestings() == 0
    }

    /// Minimum over the blocks of the block maximum.
    pub fn m_statistic(&self) -> u32 {
        self.blocks
            .iter()
            .map(|b| *b.last().unwrap())
            .min()
            .expect("partition of a nonempty set has a block")
    }

    /// Splits into indecomposable factors living on consecutive intervals,
    /// each relabeled to start at 1. A partition is indecomposable when no
    /// proper subset of its blocks partitions a prefix `1..=k`.
    pub fn indecomposable_components(&self) -> Vec<SetPartition> {
        let mut components = Vec::new();
        let mut group: Vec<Vec<u32>> = Vec::new();
        let mut reach = 0u32;
        let mut offset = 0u32;
        for block in &self.blocks {
            if !group.is_empty() && block[0] > reach {
                components.push(SetPartition {
                    blocks: std::mem::take(&mut group),
                });
                offset = block[0] - 1;
            }
            reach = reach.max(*block.last().unwrap());
            group.push(block.iter().map(|&v| v - offset).collect());
        }
        if !group.is_empty() {
            components.push(SetPartition { blocks: group });
        }
        components
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", parts.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, PartitionError> {
        let parse_err = || PartitionError::Parse {
            input: s.to_string(),
        };
        let blocks = s
            .trim()
            .split('/')
            .map(|b| {
                b.split(',')
                    .map(|v| v.trim().parse::<u32>().map_err(|_| parse_err()))
                    .collect::<Result<Vec<u32>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        SetPartition::new(blocks)
    }
}

/// All noncrossing, nonnesting partitions of `1..=n`, ordered by their
/// restricted growth strings.
///
/// Elements are assigned to blocks left to right. Appending element `i` to
/// the block whose last element is `p` adds the arc `(p, i)`, which stays
/// noncrossing and nonnesting exactly when `p` is at or beyond the rightmost
/// endpoint of the arcs placed so far; branches violating that are pruned.
pub fn enumerate_ncn(n: usize) -> Vec<SetPartition> {
    assert!(n >= 1, "partitions are enumerated for n >= 1");
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    assign(1, n as u32, 0, &mut blocks, &mut out);
    out
}

fn assign(
    next: u32,
    n: u32,
    rightmost: u32,
    blocks: &mut Vec<Vec<u32>>,
    out: &mut Vec<SetPartition>,
) {
    if next > n {
        out.push(SetPartition {
            blocks: blocks.clone(),
        });
        return;
    }
    for idx in 0..blocks.len() {
        let last = *blocks[idx].last().unwrap();
        if last >= rightmost {
            blocks[idx].push(next);
            assign(next + 1, n, next, blocks, out);
            blocks[idx].pop();
        }
    }
    blocks.push(vec![next]);
    assign(next + 1, n, rightmost, blocks, out);
    blocks.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_canonical_form() {
        let p = SetPartition::new(vec![vec![5, 7], vec![6], vec![2, 8, 4], vec![3, 1]]).unwrap();
        assert_eq!(p.to_string(), "1,3/2,4,8/5,7/6");
        assert!(SetPartition::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![]]).is_err());
        assert!(SetPartition::new(vec![vec![1, 3]]).is_err());
    }

    #[test]
    fn arcs_examples() {
        let d = sp("1,3/2,4,8/5,7/6").arcs();
        assert_eq!(d.arcs(), &[(1, 3), (2, 4), (4, 8), (5, 7)]);
        assert_eq!(d.crossings(), 1);
        assert_eq!(d.nestings(), 1);

        let d = sp("1,2,4,5,8/3/6/7").arcs();
        assert_eq!(d.arcs(), &[(1, 2), (2, 4), (4, 5), (5, 8)]);

        assert!(SetPartition::singletons(5).arcs().arcs().is_empty());

        let nested = SetPartition::new(vec![vec![1, 4], vec![2, 3]])
            .unwrap()
            .arcs();
        assert_eq!((nested.crossings(), nested.nestings()), (0, 1));
    }

    #[test]
    fn ncn_predicate() {
        assert!(sp("1,2,4,5,8/3/6/7").is_ncn());
        assert!(!sp("1,3/2,4,8/5,7/6").is_ncn());
        assert!(SetPartition::singletons(4).is_ncn());
    }

    #[test]
    fn component_split() {
        let p = sp("1,2,4/3/5/6,8/7");
        assert_eq!(
            p.indecomposable_components(),
            vec![sp("1,2,4/3"), sp("1"), sp("1,3/2")]
        );
        assert_eq!(sp("1,3/2").indecomposable_components(), vec![sp("1,3/2")]);
        assert_eq!(
            SetPartition::singletons(3).indecomposable_components(),
            vec![sp("1"), sp("1"), sp("1")]
        );
    }

    #[test]
    fn component_split_rejoins() {
        for p in enumerate_ncn(7) {
            let comps = p.indecomposable_components();
            let mut blocks = Vec::new();
            let mut offset = 0u32;
            for c in &comps {
                for b in c.blocks() {
                    blocks.push(b.iter().map(|&v| v + offset).collect());
                }
                offset += c.n() as u32;
            }
            assert_eq!(SetPartition::new(blocks).unwrap(), p);
            assert!(comps
                .iter()
                .all(|c| c.indecomposable_components().len() == 1));
        }
    }

    #[test]
    fn m_statistic_examples() {
        assert_eq!(sp("1,2,4,5,8/3/6/7").m_statistic(), 3);
        assert_eq!(
            SetPartition::new(vec![(1..=6).collect()])
                .unwrap()
                .m_statistic(),
            6
        );
        let count = enumerate_ncn(5)
            .into_iter()
            .filter(|p| p.m_statistic() == 1)
            .count();
        assert_eq!(count, 13);
    }

    #[test]
    fn ncn_counts() {
        assert_eq!(enumerate_ncn(1).len(), 1);
        assert_eq!(enumerate_ncn(7).len(), 233);
        let indecomposable: Vec<SetPartition> = enumerate_ncn(5)
            .into_iter()
            .filter(|p| p.indecomposable_components().len() == 1)
            .collect();
        assert_eq!(indecomposable.len(), 8);
    }

    /// Brute-force oracle: every partition of 1..=n by unpruned block
    /// assignment, filtered through the quadratic arc test.
    fn all_partitions(n: usize) -> Vec<SetPartition> {
        fn rec(next: u32, n: u32, blocks: &mut Vec<Vec<u32>>, out: &mut Vec<SetPartition>) {
            if next > n {
                out.push(SetPartition::new(blocks.clone()).unwrap());
                return;
            }
            for idx in 0..blocks.len() {
                blocks[idx].push(next);
                rec(next + 1, n, blocks, out);
                blocks[idx].pop();
            }
            blocks.push(vec![next]);
            rec(next + 1, n, blocks, out);
            blocks.pop();
        }
        let mut out = Vec::new();
        rec(1, n as u32, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn pruned_enumeration_matches_filter_oracle() {
        for n in 1..=8 {
            let mut filtered: Vec<SetPartition> = all_partitions(n)
                .into_iter()
                .filter(SetPartition::is_ncn)
                .collect();
            filtered.sort();
            let mut pruned = enumerate_ncn(n);
            pruned.sort();
            assert_eq!(pruned, filtered);
        }
        assert_eq!(all_partitions(7).len(), 877); // Bell number check on the oracle
    }

    fn growth_string(p: &SetPartition) -> Vec<usize> {
        let mut letters = vec![0usize; p.n()];
        for (idx, block) in p.blocks().iter().enumerate() {
            for &v in block {
                letters[v as usize - 1] = idx + 1;
            }
        }
        letters
    }

    #[test]
    fn enumeration_is_in_growth_string_order() {
        for n in 1..=6 {
            let strings: Vec<Vec<usize>> = enumerate_ncn(n).iter().map(growth_string).collect();
            assert!(strings.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn text_round_trip() {
        let p = sp("1,2,4,5,8/3/6/7");
        assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
        assert!("1,,2".parse::<SetPartition>().is_err());
        assert!("1/1".parse::<SetPartition>().is_err());
    }
}
