//! Patterns (classical and vincular) and the containment search.

use super::PermError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A pattern of length `k`: a permutation of `{1, ..., k}` plus a set of
/// glued junctions. Junction `i` (for `i` in `1..k`) means the occurrence
/// positions `i` and `i + 1` must be adjacent in the host. An empty glued
/// set is a classical pattern.
///
/// Text form: a dash-free digit string such as `"321"` is classical; a
/// string with dashes splits into groups whose inner junctions are glued,
/// so `"21-4-3"` glues only the leading `21` while `"21-43"` glues both
/// `21` and `43`. Patterns with every junction glued have no dashed text
/// form; use the JSON form `{"values": [...], "glued": [...]}` for those.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PatternRepr", into = "PatternRepr")]
pub struct Pattern {
    values: Vec<u32>,
    glued: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    values: Vec<u32>,
    glued: Vec<usize>,
}

impl TryFrom<PatternRepr> for Pattern {
    type Error = PermError;
    fn try_from(r: PatternRepr) -> Result<Self, PermError> {
        Pattern::vincular(r.values, r.glued)
    }
}

impl From<Pattern> for PatternRepr {
    fn from(p: Pattern) -> PatternRepr {
        PatternRepr {
            glued: p.glued.iter().copied().collect(),
            values: p.values,
        }
    }
}

impl Pattern {
    pub fn classical(values: Vec<u32>) -> Result<Self, PermError> {
        Pattern::vincular(values, [])
    }

    pub fn vincular(
        values: Vec<u32>,
        glued: impl IntoIterator<Item = usize>,
    ) -> Result<Self, PermError> {
        let k = values.len();
        if k == 0 {
            return Err(PermError::InvalidPattern("pattern must be nonempty".into()));
        }
        super::Permutation::new(values.clone())
            .map_err(|_| PermError::InvalidPattern(format!("{values:?} is not a permutation")))?;
        let glued: BTreeSet<usize> = glued.into_iter().collect();
        if let Some(&bad) = glued.iter().find(|&&j| j == 0 || j >= k) {
            return Err(PermError::InvalidPattern(format!(
                "glued junction {bad} outside 1..{k}"
            )));
        }
        Ok(Pattern { values, glued })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty() // never true: patterns are nonempty by construction
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn glued(&self) -> &BTreeSet<usize> {
        &self.glued
    }

    pub fn is_classical(&self) -> bool {
        self.glued.is_empty()
    }

    /// True iff occurrence positions `junction` and `junction + 1` (1-based)
    /// must be adjacent.
    pub fn is_glued_junction(&self, junction: usize) -> bool {
        self.glued.contains(&junction)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 && !self.glued.is_empty() && !self.is_glued_junction(idx) {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        let parse_err = || PermError::Parse {
            kind: "pattern",
            input: s.to_string(),
        };
        if s.is_empty() {
            return Err(parse_err());
        }
        let mut values = Vec::new();
        let mut glued = BTreeSet::new();
        let has_dashes = s.contains('-');
        for group in s.split('-') {
            if group.is_empty() {
                return Err(parse_err());
            }
            for (pos_in_group, c) in group.chars().enumerate() {
                let d = c.to_digit(10).filter(|&d| d > 0).ok_or_else(parse_err)?;
                values.push(d);
                if has_dashes && pos_in_group > 0 {
                    glued.insert(values.len() - 1);
                }
            }
        }
        Pattern::vincular(values, glued)
    }
}

/// Backtracking search for occurrences of `pat` in `word`, a sequence of
/// distinct integers (not necessarily a permutation of `1..=n`, so prefixes
/// work too).
///
/// With `stop_at_first` the return value is at most 1. With `anchor_last`
/// only occurrences whose final element is the last entry of `word` are
/// counted; that is what incremental generators need, because appending on
/// the right never invalidates an existing occurrence.
pub(crate) fn occurrences(
    word: &[u32],
    pat: &Pattern,
    stop_at_first: bool,
    anchor_last: bool,
) -> usize {
    let k = pat.len();
    if k > word.len() {
        return 0;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut count = 0usize;
    search(
        word,
        pat,
        stop_at_first,
        anchor_last,
        &mut chosen,
        &mut count,
    );
    count
}

/// Returns true when the search should stop.
fn search(
    word: &[u32],
    pat: &Pattern,
    stop_at_first: bool,
    anchor_last: bool,
    chosen: &mut Vec<usize>,
    count: &mut usize,
) -> bool {
    let k = pat.len();
    let slot = chosen.len();
    if slot == k {
        *count += 1;
        return stop_at_first;
    }
    let mut lo = chosen.last().map_or(0, |&p| p + 1);
    let mut hi = word.len() - (k - slot);
    if slot > 0 && pat.is_glued_junction(slot) {
        hi = hi.min(lo);
    }
    if anchor_last && slot == k - 1 {
        lo = lo.max(word.len() - 1);
    }
    for idx in lo..=hi {
        if order_compatible(word, pat, chosen, idx, slot) {
            chosen.push(idx);
            if search(word, pat, stop_at_first, anchor_last, chosen, count) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn order_compatible(
    word: &[u32],
    pat: &Pattern,
    chosen: &[usize],
    idx: usize,
    slot: usize,
) -> bool {
    let v = word[idx];
    let pv = pat.values()[slot];
    chosen
        .iter()
        .enumerate()
        .all(|(t, &c)| (v < word[c]) == (pv < pat.values()[t]))
}
