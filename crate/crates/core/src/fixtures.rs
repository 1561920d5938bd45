//! Reference data shipped with the crate: the first eight rows of each
//! positional triangle in CSV form, and the thirteen area-4 polyomino /
//! permutation pairs, used for byte-exact comparisons by the verification
//! suite.

use crate::perm::Permutation;
use crate::polyomino::DccPolyomino;
use crate::series::{BivariateTriangle, SeriesError};

/// Position-of-1 triangle for the class avoiding {321, 4123} (also the
/// position-of-1 triangle for {231, 3124}), rows 1..=8.
pub const TRIANGLE_321_4123_CSV: &str = include_str!("../fixtures/triangle_321_4123.csv");

/// Position-of-n triangle for the class avoiding 321 and the vincular
/// `21-4-3`, rows 1..=8.
pub const TRIANGLE_321_2143_CSV: &str = include_str!("../fixtures/triangle_321_21_43.csv");

/// Position-of-1 triangle for the class avoiding {321, 3412}, rows 1..=8.
pub const TRIANGLE_321_3412_CSV: &str = include_str!("../fixtures/triangle_321_3412.csv");

pub fn triangle_321_4123() -> Result<BivariateTriangle, SeriesError> {
    BivariateTriangle::from_csv(TRIANGLE_321_4123_CSV)
}

pub fn triangle_321_2143() -> Result<BivariateTriangle, SeriesError> {
    BivariateTriangle::from_csv(TRIANGLE_321_2143_CSV)
}

pub fn triangle_321_3412() -> Result<BivariateTriangle, SeriesError> {
    BivariateTriangle::from_csv(TRIANGLE_321_3412_CSV)
}

/// The thirteen directed column-convex polyominoes of area 4 paired with
/// their permutations under the column-labeling bijection.
pub const AREA4_PAIRS: &[(&str, &str)] = &[
    ("0:1,0:1,0:1,0:1", "1234"),
    ("0:1,0:1,0:2", "1243"),
    ("0:1,0:2,0:1", "1324"),
    ("0:1,0:2,1:1", "1423"),
    ("0:1,0:3", "1432"),
    ("0:2,0:1,0:1", "2134"),
    ("0:2,0:2", "2143"),
    ("0:3,0:1", "3214"),
    ("0:2,1:1,1:1", "4123"),
    ("0:2,1:2", "4132"),
    ("0:3,1:1", "4213"),
    ("0:3,2:1", "4312"),
    ("0:4", "4321"),
];

/// [`AREA4_PAIRS`] parsed into domain values.
pub fn area4_pairs() -> Vec<(DccPolyomino, Permutation)> {
    AREA4_PAIRS
        .iter()
        .map(|&(poly, perm)| {
            (
                poly.parse().expect("fixture polyomino parses"),
                perm.parse().expect("fixture permutation parses"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(triangle_321_4123().unwrap().size(), 8);
        assert_eq!(triangle_321_2143().unwrap().size(), 8);
        assert_eq!(triangle_321_3412().unwrap().size(), 8);
        let pairs = area4_pairs();
        assert_eq!(pairs.len(), 13);
        assert!(pairs.iter().all(|(p, s)| p.area() == 4 && s.len() == 4));
    }
}
