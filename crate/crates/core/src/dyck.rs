//! Dyck paths, their peak statistics, and enumeration under a height bound.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("unbalanced path: {ups} up-steps vs {downs} down-steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("path dips below the axis at step {step}")]
    NegativePrefix { step: usize },
    #[error("cannot parse Dyck path from {input:?}")]
    Parse { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path from `(0, 0)` to `(2n, 0)` with steps `(1, 1)` and
/// `(1, -1)` that never goes below the x-axis; `n` is the semilength.
///
/// Text form `"UUDD..."`; JSON form an array of `"U"` / `"D"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<char>", into = "Vec<char>")]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl TryFrom<Vec<char>> for DyckPath {
    type Error = DyckError;
    fn try_from(chars: Vec<char>) -> Result<Self, DyckError> {
        let steps = chars
            .iter()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                _ => Err(DyckError::Parse {
                    input: chars.iter().collect(),
                }),
            })
            .collect::<Result<_, _>>()?;
        DyckPath::new(steps)
    }
}

impl From<DyckPath> for Vec<char> {
    fn from(p: DyckPath) -> Vec<char> {
        p.steps
            .iter()
            .map(|s| match s {
                Step::Up => 'U',
                Step::Down => 'D',
            })
            .collect()
    }
}

/// A `UD` factor. `position` is the 1-based index of its up-step;
/// `altitude` is the height of the peak vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Peak {
    pub position: usize,
    pub altitude: u32,
}

/// The first maximal descent of length at least two. `ordinal` counts
/// maximal descents left to right (1-based); `start` is the 1-based index
/// of the descent's first down-step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LongDescent {
    pub ordinal: usize,
    pub start: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStats {
    pub height: u32,
    pub peaks: Vec<Peak>,
    pub first_long_descent: Option<LongDescent>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut altitude = 0i64;
        let mut ups = 0usize;
        for (idx, s) in steps.iter().enumerate() {
            match s {
                Step::Up => {
                    ups += 1;
                    altitude += 1;
                }
                Step::Down => {
                    altitude -= 1;
                    if altitude < 0 {
                        return Err(DyckError::NegativePrefix { step: idx + 1 });
                    }
                }
            }
        }
        if altitude != 0 {
            return Err(DyckError::Unbalanced {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// True iff the path begins with an up-step immediately followed by a
    /// down-step.
    pub fn starts_up_down(&self) -> bool {
        self.steps.len() >= 2 && self.steps[0] == Step::Up && self.steps[1] == Step::Down
    }

    pub fn stats(&self) -> PathStats {
        let mut altitude = 0u32;
        let mut height = 0u32;
        let mut peaks = Vec::new();
        let mut descents = 0usize;
        let mut first_long_descent = None;
        for (idx, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => {
                    altitude += 1;
                    height = height.max(altitude);
                }
                Step::Down => {
                    if self.steps[idx - 1] == Step::Up {
                        descents += 1;
                        peaks.push(Peak {
                            position: idx,
                            altitude,
                        });
                        let long = self.steps.get(idx + 1) == Some(&Step::Down);
                        if long && first_long_descent.is_none() {
                            first_long_descent = Some(LongDescent {
                                ordinal: descents,
                                start: idx + 1,
                            });
                        }
                    }
                    altitude -= 1;
                }
            }
        }
        PathStats {
            height,
            peaks,
            first_long_descent,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, DyckError> {
        DyckPath::try_from(s.trim().chars().collect::<Vec<char>>())
    }
}

/// All Dyck paths of semilength `n` with height at most `hmax`, in
/// lexicographic order with `U < D`.
///
/// Generated by an altitude-bounded walk; no path is ever built and thrown
/// away, since every prefix respecting the bound completes.
pub fn enumerate_bounded(n: usize, hmax: u32) -> Vec<DyckPath> {
    assert!(
        n >= 1 && hmax >= 1,
        "semilength and height bound must be positive"
    );
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    walk(n, hmax, 0, &mut steps, &mut out);
    out
}

fn walk(ups_left: usize, hmax: u32, altitude: u32, steps: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if ups_left == 0 && altitude == 0 {
        out.push(DyckPath {
            steps: steps.clone(),
        });
        return;
    }
    if ups_left > 0 && altitude < hmax {
        steps.push(Step::Up);
        walk(ups_left - 1, hmax, altitude + 1, steps, out);
        steps.pop();
    }
    if altitude > 0 {
        steps.push(Step::Down);
        walk(ups_left, hmax, altitude - 1, steps, out);
        steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(path("UUDUUDUDDD").semilength(), 5);
        assert_eq!(path("UD").stats().height, 1);
        assert!(matches!(
            "UDDU".parse::<DyckPath>(),
            Err(DyckError::NegativePrefix { step: 3 })
        ));
        assert!(matches!(
            "UUD".parse::<DyckPath>(),
            Err(DyckError::Unbalanced { ups: 2, downs: 1 })
        ));
        assert!("UXDD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn stats_examples() {
        let s = path("UUDUUDUDDD").stats();
        assert_eq!(s.height, 3);
        let alts: Vec<u32> = s.peaks.iter().map(|p| p.altitude).collect();
        assert_eq!(alts, vec![2, 3, 3]);

        // (UD)^n: n peaks of altitude 1, no long descent
        let zigzag: String = "UD".repeat(6);
        let s = path(&zigzag).stats();
        assert_eq!(s.height, 1);
        assert_eq!(s.peaks.len(), 6);
        assert!(s.first_long_descent.is_none());

        let s = path("UUUDDD").stats();
        assert_eq!(s.height, 3);
        let ld = s.first_long_descent.unwrap();
        assert_eq!(ld.start, 4);
        assert_eq!(ld.ordinal, 1);

        let s = path("UUDUDUDD").stats();
        assert_eq!(s.first_long_descent.unwrap().ordinal, 3);
    }

    #[test]
    fn peak_positions() {
        let s = path("UUDUUDUDDD").stats();
        let positions: Vec<usize> = s.peaks.iter().map(|p| p.position).collect();
        assert_eq!(positions, vec![2, 5, 7]);
    }

    #[test]
    fn height_from_peaks_matches_running_altitude() {
        for p in enumerate_bounded(6, 4) {
            let s = p.stats();
            let from_peaks = s.peaks.iter().map(|p| p.altitude).max().unwrap();
            assert_eq!(s.height, from_peaks);
        }
    }

    #[test]
    fn bounded_enumeration() {
        assert_eq!(enumerate_bounded(3, 3).len(), 5);
        assert_eq!(enumerate_bounded(1, 1), vec![path("UD")]);
        assert_eq!(enumerate_bounded(8, 3).len(), 610);
        // lexicographic with U < D
        let paths = enumerate_bounded(5, 3);
        let mut sorted = paths.clone();
        sorted.sort();
        assert_eq!(paths, sorted);
        // every enumerated path respects the bound; unbounded ones appear once
        // the bound is raised
        assert!(enumerate_bounded(4, 3)
            .iter()
            .all(|p| p.stats().height <= 3));
        assert_eq!(enumerate_bounded(4, 4).len(), 14); // all of semilength 4
    }
}
