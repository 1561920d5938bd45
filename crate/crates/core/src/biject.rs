//! The four bijections between the object families and their permutation
//! classes, the auxiliary maps used to prove the counting recurrences, and
//! an exhaustive round-trip verifier.
//!
//! Every geometric step of the constructions (coin diagonals, cell
//! labeling) is carried out arithmetically on the encodings. Maps reject
//! out-of-class inputs with typed errors.

use crate::dyck::{DyckPath, Step};
use crate::fountain::{triangular_stack, BlockFountain};
use crate::partition::SetPartition;
use crate::perm::{self, LtrMaxima, PermClass, Permutation};
use crate::polyomino::{Column, DccPolyomino};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectError {
    #[error("input is not in the class of {expected}")]
    OutOfClass { expected: &'static str },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// The four correspondences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Dyck,
    Fountain,
    Partition,
    Polyomino,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Dyck,
        Family::Fountain,
        Family::Partition,
        Family::Polyomino,
    ];

    pub fn selector(self) -> &'static str {
        match self {
            Family::Dyck => "dyck",
            Family::Fountain => "fountain",
            Family::Partition => "partition",
            Family::Polyomino => "polyomino",
        }
    }

    pub fn from_selector(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.selector() == s)
    }

    /// The permutation class this family is in bijection with.
    pub fn perm_class(self) -> PermClass {
        match self {
            Family::Dyck => PermClass::Av321_4123,
            Family::Fountain => PermClass::Av321Vinc2143,
            Family::Partition => PermClass::Av321_3412,
            Family::Polyomino => PermClass::Av231_3124,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.selector())
    }
}

fn require_class(
    p: &Permutation,
    class: PermClass,
    expected: &'static str,
) -> Result<(), BijectError> {
    if class.admits(p) {
        Ok(())
    } else {
        Err(BijectError::OutOfClass { expected })
    }
}

// ---------------------------------------------------------------------------
// Dyck paths
// ---------------------------------------------------------------------------

/// Maps a 321-avoiding permutation to the Dyck path that climbs to each
/// left-to-right maximum in turn: `v_1` up-steps, then `i_2 - i_1`
/// down-steps, then `v_2 - v_1` up-steps, and so on, with `i_{k+1} = n + 1`.
/// The j-th peak lands at altitude `v_j - i_j + 1`.
pub fn perm_to_dyck(p: &Permutation) -> Result<DyckPath, BijectError> {
    let pat321 = perm::Pattern::classical(vec![3, 2, 1]).expect("static pattern");
    if p.contains(&pat321) {
        return Err(BijectError::OutOfClass {
            expected: "permutations avoiding 321",
        });
    }
    let m = p.ltr_maxima();
    let (positions, values) = (m.positions(), m.values());
    let k = positions.len();
    let mut steps = Vec::with_capacity(2 * p.len());
    for j in 0..k {
        let ups = if j == 0 {
            values[0]
        } else {
            values[j] - values[j - 1]
        };
        let next_pos = if j + 1 < k {
            positions[j + 1]
        } else {
            p.len() + 1
        };
        steps.extend(std::iter::repeat_n(Step::Up, ups as usize));
        steps.extend(std::iter::repeat_n(Step::Down, next_pos - positions[j]));
    }
    Ok(DyckPath::new(steps).expect("maxima of a 321-avoider trace a balanced nonnegative path"))
}

/// Inverse of [`perm_to_dyck`], defined on every Dyck path: the j-th run of
/// up-steps raises the j-th maximum value, the j-th run of down-steps moves
/// the next maximum position.
pub fn dyck_to_perm(d: &DyckPath) -> Permutation {
    let mut positions = Vec::new();
    let mut values = Vec::new();
    let mut pos = 1usize;
    let mut val = 0u32;
    let steps = d.steps();
    let mut idx = 0usize;
    while idx < steps.len() {
        let mut ups = 0u32;
        while idx < steps.len() && steps[idx] == Step::Up {
            ups += 1;
            idx += 1;
        }
        let mut downs = 0usize;
        while idx < steps.len() && steps[idx] == Step::Down {
            downs += 1;
            idx += 1;
        }
        val += ups;
        positions.push(pos);
        values.push(val);
        pos += downs;
    }
    let n = d.semilength();
    let m = LtrMaxima::new(positions, values, n).expect("runs of a Dyck path give valid maxima");
    perm::from_ltr_maxima(&m).expect("nonnegative prefixes make the maxima realizable")
}

// ---------------------------------------------------------------------------
// Block fountains
// ---------------------------------------------------------------------------

/// Maps a block fountain with base `n` to a permutation of size `n`: a peak
/// whose triangular stack spans bottom coins `i ..= j` contributes the
/// left-to-right maximum `sigma(i) = j` (an uncovered bottom coin `i` is its
/// own peak, `sigma(i) = i`), and the remaining values fill in increasing
/// order. The image avoids 321 and the vincular `21-4-3`.
pub fn fountain_to_perm(f: &BlockFountain) -> Permutation {
    let peaks = f.peaks();
    let mut positions = Vec::with_capacity(peaks.len());
    let mut values = Vec::with_capacity(peaks.len());
    for peak in &peaks {
        let (lo, hi) = f.peak_span(peak);
        positions.push(lo);
        values.push(hi as u32);
    }
    let m = LtrMaxima::new(positions, values, f.base())
        .expect("fountain peaks are increasing in position and value");
    perm::from_ltr_maxima(&m).expect("fountain peaks leave no stranded filler")
}

/// Inverse of [`fountain_to_perm`]: superimposes the maximal triangular
/// stack over `i_j ..= sigma(i_j)` for every left-to-right maximum.
pub fn perm_to_fountain(p: &Permutation) -> Result<BlockFountain, BijectError> {
    require_class(
        p,
        PermClass::Av321Vinc2143,
        "permutations avoiding 321 and the vincular 21-4-3",
    )?;
    if p.is_empty() {
        return Err(BijectError::Precondition(
            "fountains need at least one coin".into(),
        ));
    }
    let m = p.ltr_maxima();
    let mut coins = BTreeSet::new();
    for (&pos, &val) in m.positions().iter().zip(m.values()) {
        coins.extend(triangular_stack(pos, val as usize));
    }
    Ok(BlockFountain::from_coins(p.len(), &coins)
        .expect("stacks over the maxima of an in-class permutation leave no row gap"))
}

/// The size-reducing map behind the counting recurrence: for an in-class
/// permutation with `sigma(1) != 1` and `sigma(n) != n`, keep the positions
/// of the left-to-right maxima and lower their values by one. Preserves the
/// position of the largest entry.
pub fn phi(p: &Permutation) -> Result<Permutation, BijectError> {
    require_class(
        p,
        PermClass::Av321Vinc2143,
        "permutations avoiding 321 and the vincular 21-4-3",
    )?;
    let n = p.len();
    if n < 2 {
        return Err(BijectError::Precondition(
            "phi needs size at least 2".into(),
        ));
    }
    if p.value_at(1) == 1 || p.value_at(n) as usize == n {
        return Err(BijectError::Precondition(
            "phi needs sigma(1) != 1 and sigma(n) != n".into(),
        ));
    }
    let m = p.ltr_maxima();
    let lowered: Vec<u32> = m.values().iter().map(|&v| v - 1).collect();
    let m = LtrMaxima::new(m.positions().to_vec(), lowered, n - 1)
        .expect("lowering the maxima of an endpoint-free member keeps the shape");
    Ok(perm::from_ltr_maxima(&m).expect("endpoint-free members stay realizable after lowering"))
}

/// Inverse of [`phi`], total on the class: raise the maxima values by one
/// and extend the size by one.
pub fn phi_inverse(p: &Permutation) -> Result<Permutation, BijectError> {
    require_class(
        p,
        PermClass::Av321Vinc2143,
        "permutations avoiding 321 and the vincular 21-4-3",
    )?;
    if p.is_empty() {
        return Err(BijectError::Precondition(
            "phi inverse needs size at least 1".into(),
        ));
    }
    let m = p.ltr_maxima();
    let raised: Vec<u32> = m.values().iter().map(|&v| v + 1).collect();
    let m = LtrMaxima::new(m.positions().to_vec(), raised, p.len() + 1)
        .expect("raising the maxima keeps the shape");
    Ok(perm::from_ltr_maxima(&m).expect("raised maxima dominate strictly more room"))
}

// ---------------------------------------------------------------------------
// Noncrossing, nonnesting partitions
// ---------------------------------------------------------------------------

/// Maps a noncrossing, nonnesting partition to a permutation avoiding
/// {321, 3412}, component by component. An indecomposable component has one
/// block `{u_0 = 1 < u_1 < ... < u_j = n}` plus singletons
/// `s_1 < ... < s_k`; its image is the single cycle sending
/// `1 -> u_1 -> ... -> u_j = n -> s_k -> ... -> s_1 -> 1`, written in
/// one-line notation. Components are then joined by direct sum.
pub fn partition_to_perm(p: &SetPartition) -> Result<Permutation, BijectError> {
    if !p.is_ncn() {
        return Err(BijectError::OutOfClass {
            expected: "noncrossing, nonnesting set partitions",
        });
    }
    Ok(p.indecomposable_components()
        .iter()
        .map(component_to_perm)
        .fold(Permutation::empty(), |acc, q| acc.direct_sum(&q)))
}

fn component_to_perm(c: &SetPartition) -> Permutation {
    let n = c.n();
    if n == 1 {
        return Permutation::identity(1);
    }
    if n == 2 {
        return Permutation::decreasing(2);
    }
    let big = c
        .blocks()
        .iter()
        .find(|b| b[0] == 1)
        .expect("canonical blocks start with the one containing 1");
    let mut out = vec![0u32; n];
    // chain the big block upward from position 1
    out[0] = big[1];
    for w in big[1..].windows(2) {
        out[w[0] as usize - 1] = w[1];
    }
    // chain the singletons downward, starting from 1, ending at position n
    let mut prev = 1u32;
    for b in c.blocks() {
        if b.len() == 1 {
            out[b[0] as usize - 1] = prev;
            prev = b[0];
        }
    }
    out[n - 1] = prev;
    Permutation::new(out).expect("cycle construction fills every position once")
}

/// Inverse of [`partition_to_perm`]: each indecomposable summand of an
/// in-class permutation contributes the block `{1} ∪ {left-to-right maxima}`
/// with the remaining elements as singletons.
pub fn perm_to_partition(p: &Permutation) -> Result<SetPartition, BijectError> {
    require_class(
        p,
        PermClass::Av321_3412,
        "permutations avoiding 321 and 3412",
    )?;
    if p.is_empty() {
        return Err(BijectError::Precondition(
            "partitions need at least one element".into(),
        ));
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut offset = 0u32;
    for comp in p.direct_sum_components() {
        let m = comp.len() as u32;
        if m == 1 {
            blocks.push(vec![offset + 1]);
        } else {
            let mut big = vec![offset + 1];
            let mut in_big = vec![false; m as usize + 1];
            in_big[1] = true;
            for &v in comp.ltr_maxima().values() {
                big.push(offset + v);
                in_big[v as usize] = true;
            }
            blocks.push(big);
            for v in 1..=m {
                if !in_big[v as usize] {
                    blocks.push(vec![offset + v]);
                }
            }
        }
        offset += m;
    }
    Ok(SetPartition::new(blocks).expect("component blocks cover 1..=n exactly once"))
}

// ---------------------------------------------------------------------------
// Directed column-convex polyominoes
// ---------------------------------------------------------------------------

/// Maps a polyomino of area `n` to a permutation of size `n` with one
/// descending run per column. In each column the cell level with the next
/// column's bottom is marked; a left-to-right pass labels each column from
/// the top down to its marked cell, a right-to-left pass labels the
/// remaining cells top down, and the permutation reads the columns left to
/// right, bottom to top.
pub fn polyomino_to_perm(p: &DccPolyomino) -> Permutation {
    let cols = p.columns();
    let k = cols.len();
    let mut labels: Vec<Vec<u32>> = cols.iter().map(|c| vec![0; c.height as usize]).collect();
    let mut next = 1u32;
    for j in 0..k.saturating_sub(1) {
        let top = cols[j].bottom + cols[j].height - 1;
        let marked = cols[j + 1].bottom;
        for alt in (marked..=top).rev() {
            labels[j][(alt - cols[j].bottom) as usize] = next;
            next += 1;
        }
    }
    for j in (0..k).rev() {
        for cell in labels[j].iter_mut().rev() {
            if *cell == 0 {
                *cell = next;
                next += 1;
            }
        }
    }
    let values: Vec<u32> = labels.into_iter().flatten().collect();
    Permutation::new(values).expect("each cell is labeled exactly once")
}

/// Inverse of [`polyomino_to_perm`]: the j-th descending run `w_j` becomes a
/// column of `|w_j|` cells. A run splits into at most two maximal blocks of
/// consecutive values, `w_j = u_j v_j` with `u_j` possibly empty; the next
/// column's bottom cell sits level with the `|v_j|`-th cell from the top.
pub fn perm_to_polyomino(p: &Permutation) -> Result<DccPolyomino, BijectError> {
    require_class(
        p,
        PermClass::Av231_3124,
        "permutations avoiding 231 and 3124",
    )?;
    if p.is_empty() {
        return Err(BijectError::Precondition(
            "polyominoes need at least one cell".into(),
        ));
    }
    let runs = p.descending_runs();
    let mut columns = Vec::with_capacity(runs.len());
    let mut bottom = 0u32;
    for (j, run) in runs.runs().iter().enumerate() {
        let height = run.len() as u32;
        columns.push(Column { bottom, height });
        if j + 1 < runs.len() {
            let blocks = perm::consecutive_blocks(run);
            let tail_len = match blocks.len() {
                1 => blocks[0].len(),
                2 => blocks[1].len(),
                more => {
                    return Err(BijectError::Precondition(format!(
                        "descending run {:?} splits into {more} blocks of consecutive values",
                        run
                    )))
                }
            };
            bottom = bottom + height - tail_len as u32;
        }
    }
    Ok(DccPolyomino::new(columns).expect("run lengths and attachments satisfy the window"))
}

/// Grows an in-class permutation by replacing its first entry `a` with the
/// descent `(a + 1, a)`: the new permutation starts `sigma'(1) + 1`,
/// `sigma'(1)`, and later entries shift up by one exactly when they exceed
/// the old first entry. Defined when the first entry is not the maximum.
pub fn inflate21(p: &Permutation) -> Result<Permutation, BijectError> {
    require_class(
        p,
        PermClass::Av231_3124,
        "permutations avoiding 231 and 3124",
    )?;
    let first = match p.values().first() {
        Some(&f) if (f as usize) < p.len() => f,
        Some(_) => {
            return Err(BijectError::Precondition(
                "first entry must not be the maximum".into(),
            ))
        }
        None => {
            return Err(BijectError::Precondition(
                "cannot inflate the empty permutation".into(),
            ))
        }
    };
    let mut values = Vec::with_capacity(p.len() + 1);
    values.push(first + 1);
    for &v in p.values() {
        values.push(if v <= first { v } else { v + 1 });
    }
    Ok(Permutation::new(values).expect("inflation keeps a bijection on 1..=n+1"))
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Outcome of an exhaustive check of one correspondence at one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub family: Family,
    pub n: usize,
    pub forward_ok: bool,
    pub inverse_ok: bool,
    pub mismatches: Vec<String>,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.forward_ok && self.inverse_ok
    }
}

/// Enumerates the family's objects and the permutation class at size `n`,
/// applies the forward map to every object and the inverse to every
/// permutation, and reports whether the forward image is exactly the class
/// and both round trips are identities. Failures are collected as
/// counterexample strings, never panics.
pub fn verify_family(family: Family, n: usize) -> BijectionReport {
    let class = family.perm_class().enumerate(n);
    match family {
        Family::Dyck => check(
            family,
            n,
            class,
            crate::dyck::enumerate_bounded(n, 3),
            |d| Ok(dyck_to_perm(d)),
            perm_to_dyck,
        ),
        Family::Fountain => check(
            family,
            n,
            class,
            crate::fountain::enumerate_fountains(n),
            |f| Ok(fountain_to_perm(f)),
            perm_to_fountain,
        ),
        Family::Partition => check(
            family,
            n,
            class,
            crate::partition::enumerate_ncn(n),
            partition_to_perm,
            perm_to_partition,
        ),
        Family::Polyomino => check(
            family,
            n,
            class,
            crate::polyomino::enumerate_dcc(n),
            |p| Ok(polyomino_to_perm(p)),
            perm_to_polyomino,
        ),
    }
}

fn check<O>(
    family: Family,
    n: usize,
    class: Vec<Permutation>,
    objects: Vec<O>,
    forward: impl Fn(&O) -> Result<Permutation, BijectError>,
    inverse: impl Fn(&Permutation) -> Result<O, BijectError>,
) -> BijectionReport
where
    O: PartialEq + fmt::Display,
{
    let mut mismatches = Vec::new();
    let mut images = Vec::with_capacity(objects.len());
    for obj in &objects {
        match forward(obj) {
            Ok(image) => images.push(image),
            Err(e) => mismatches.push(format!("forward failed on {obj}: {e}")),
        }
    }
    let mut sorted_images = images.clone();
    sorted_images.sort();
    sorted_images.dedup();
    let forward_ok = mismatches.is_empty() && sorted_images == class;
    if sorted_images != class {
        mismatches.push(format!(
            "image has {} distinct permutations, class has {}",
            sorted_images.len(),
            class.len()
        ));
    }

    let mut inverse_ok = true;
    for (obj, image) in objects.iter().zip(&images) {
        match inverse(image) {
            Ok(back) if &back == obj => {}
            Ok(back) => {
                inverse_ok = false;
                mismatches.push(format!("round trip moved {obj} to {back}"));
            }
            Err(e) => {
                inverse_ok = false;
                mismatches.push(format!("inverse failed on image {image}: {e}"));
            }
        }
    }
    for p in &class {
        match inverse(p).map(|o| forward(&o)) {
            Ok(Ok(back)) if &back == p => {}
            Ok(Ok(back)) => {
                inverse_ok = false;
                mismatches.push(format!("round trip moved {p} to {back}"));
            }
            Ok(Err(e)) | Err(e) => {
                inverse_ok = false;
                mismatches.push(format!("round trip failed on {p}: {e}"));
            }
        }
    }
    BijectionReport {
        family,
        n,
        forward_ok,
        inverse_ok,
        mismatches,
    }
}
