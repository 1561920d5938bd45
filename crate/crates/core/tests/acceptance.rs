//! Acceptance suite: one test per criterion, each exact with no tolerance.
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! pass/fail line per criterion.

use fibperm_core::biject::{self, Family};
use fibperm_core::dyck;
use fibperm_core::fixtures;
use fibperm_core::fountain;
use fibperm_core::partition;
use fibperm_core::perm::{self, Pattern, PermClass, Permutation};
use fibperm_core::polyomino;
use fibperm_core::series;

const FIB_ODD: [i64; 12] = [1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946, 28657];

fn passed(name: &str) {
    println!("PASS  {name}");
}

/// Criterion 1: each of the four classes has exactly F(2n-1) members for
/// n = 1..=9.
#[test]
fn acceptance_1_class_counts() {
    for class in PermClass::ALL {
        for n in 1..=9usize {
            assert_eq!(
                class.enumerate(n).len() as i64,
                FIB_ODD[n - 1],
                "{class} at n = {n}"
            );
        }
    }
    passed("1. class counts are 1, 2, 5, 13, 34, 89, 233, 610, 1597 (n <= 9)");
}

/// Criterion 2: the object families are counted by the same numbers:
/// height-bounded Dyck paths and block fountains to n = 12, noncrossing
/// nonnesting partitions and polyominoes by area to n = 10.
#[test]
fn acceptance_2_object_counts() {
    for n in 1..=12usize {
        assert_eq!(
            dyck::enumerate_bounded(n, 3).len() as i64,
            FIB_ODD[n - 1],
            "dyck n = {n}"
        );
        assert_eq!(
            fountain::enumerate_fountains(n).len() as i64,
            FIB_ODD[n - 1],
            "fountain n = {n}"
        );
    }
    for n in 1..=10usize {
        assert_eq!(
            partition::enumerate_ncn(n).len() as i64,
            FIB_ODD[n - 1],
            "partition n = {n}"
        );
        assert_eq!(
            polyomino::enumerate_dcc(n).len() as i64,
            FIB_ODD[n - 1],
            "polyomino n = {n}"
        );
    }
    passed("2. object family counts equal F(2n-1) (dyck/fountain n <= 12, partition/polyomino n <= 10)");
}

/// Criterion 3: the generated triangles reproduce the shipped reference
/// tables entry for entry (n <= 8), and the two position-of-1 triangles
/// coincide.
#[test]
fn acceptance_3_triangle_tables() {
    assert_eq!(
        series::triangle_321_4123(8),
        fixtures::triangle_321_4123().unwrap()
    );
    assert_eq!(
        series::triangle_321_2143(8),
        fixtures::triangle_321_2143().unwrap()
    );
    assert_eq!(
        series::triangle_321_3412(8),
        fixtures::triangle_321_3412().unwrap()
    );
    assert_eq!(
        series::triangle_231_3124(8),
        fixtures::triangle_321_4123().unwrap()
    );
    assert_eq!(series::triangle_231_3124(12), series::triangle_321_4123(12));
    // byte-exact CSV form
    assert_eq!(
        series::triangle_321_4123(8).to_csv(),
        fixtures::TRIANGLE_321_4123_CSV
    );
    assert_eq!(
        series::triangle_321_2143(8).to_csv(),
        fixtures::TRIANGLE_321_2143_CSV
    );
    assert_eq!(
        series::triangle_321_3412(8).to_csv(),
        fixtures::TRIANGLE_321_3412_CSV
    );
    passed("3. triangles reproduce the reference tables exactly (n <= 8)");
}

/// Criterion 4: the four rational generating functions expand to the
/// recurrence-built triangles (order 12), the counting series matches both
/// the counts and its linear recurrence, and the enumerated positional
/// statistics match for n <= 8.
#[test]
fn acceptance_4_generating_functions() {
    assert_eq!(
        series::gf_triangle_321_4123().expand_triangle(12).unwrap(),
        series::triangle_321_4123(12)
    );
    assert_eq!(
        series::gf_triangle_321_2143().expand_triangle(12).unwrap(),
        series::triangle_321_2143(12)
    );
    assert_eq!(
        series::gf_triangle_321_3412().expand_triangle(12).unwrap(),
        series::triangle_321_3412(12)
    );
    assert_eq!(
        series::gf_triangle_231_3124().expand_triangle(12).unwrap(),
        series::triangle_231_3124(12)
    );

    let counts = series::gf_class_counts().expand_series(12).unwrap();
    for n in 1..=12usize {
        assert_eq!(counts.coeffs()[n], FIB_ODD[n - 1]);
        assert_eq!(series::fib_odd(n), FIB_ODD[n - 1]);
    }
    assert_eq!(
        series::check_recurrence(counts.coeffs(), &[3, -1], 3),
        Ok(true)
    );
    assert_eq!(series::check_recurrence(&FIB_ODD, &[3, -1], 2), Ok(true));

    // the recurrence also holds for raw enumerated counts
    let enumerated: Vec<i64> = (1..=10)
        .map(|n| PermClass::Av321_3412.enumerate(n).len() as i64)
        .collect();
    assert_eq!(series::check_recurrence(&enumerated, &[3, -1], 2), Ok(true));

    // enumerated positional statistics: position of 1, or of n for the
    // vincular class
    for n in 1..=8usize {
        for class in PermClass::ALL {
            let mut histogram = vec![0i64; n];
            for p in class.enumerate(n) {
                let tracked = match class {
                    PermClass::Av321Vinc2143 => n as u32,
                    _ => 1u32,
                };
                histogram[p.position_of(tracked).unwrap() - 1] += 1;
            }
            let triangle = match class {
                PermClass::Av321_4123 => series::triangle_321_4123(n),
                PermClass::Av321Vinc2143 => series::triangle_321_2143(n),
                PermClass::Av321_3412 => series::triangle_321_3412(n),
                PermClass::Av231_3124 => series::triangle_231_3124(n),
            };
            assert_eq!(histogram, triangle.row(n), "{class} at n = {n}");
        }
    }
    passed(
        "4. generating functions match recurrences (N <= 12) and positional statistics (n <= 8)",
    );
}

/// Criterion 5: for every family and n <= 8 the forward map lands exactly
/// on the class and both round trips are identities; the area-4 pairing
/// matches the reference table.
#[test]
fn acceptance_5_bijections() {
    for family in Family::ALL {
        for n in 1..=8usize {
            let report = biject::verify_family(family, n);
            assert!(
                report.forward_ok && report.inverse_ok,
                "{family} at n = {n}: {:?}",
                report.mismatches
            );
            assert!(report.mismatches.is_empty());
        }
    }
    let mut expected = fixtures::area4_pairs();
    expected.sort();
    let mut actual: Vec<(polyomino::DccPolyomino, Permutation)> = polyomino::enumerate_dcc(4)
        .into_iter()
        .map(|p| {
            let s = biject::polyomino_to_perm(&p);
            (p, s)
        })
        .collect();
    actual.sort();
    assert_eq!(actual, expected);
    passed("5. bijections are exact with identity round trips (n <= 8); area-4 pairing matches");
}

/// Criterion 6: the structure theorems, exhaustively and exactly.
#[test]
fn acceptance_6_structure_properties() {
    // (a) a 321-avoider has path height <= 3 iff it also avoids 4123 (n <= 8)
    let pat321 = [Pattern::classical(vec![3, 2, 1]).unwrap()];
    let pat4123 = Pattern::classical(vec![4, 1, 2, 3]).unwrap();
    for n in 1..=8usize {
        for p in perm::avoiders_pruned(n, &pat321) {
            let height = biject::perm_to_dyck(&p).unwrap().stats().height;
            assert_eq!(height <= 3, p.avoids(&pat4123), "height criterion on {p}");
        }
    }

    for n in 1..=9usize {
        // (b) members of the 231/3124 class with an interior first entry
        // continue with its predecessor
        for p in PermClass::Av231_3124.enumerate(n) {
            let first = p.value_at(1);
            if 1 < first && (first as usize) < n {
                assert_eq!(p.value_at(2), first - 1, "on {p}");
            }
            // (c) descending runs have at most two blocks of consecutive values
            for run in p.descending_runs().runs() {
                assert!(perm::consecutive_blocks(run).len() <= 2, "on {p}");
            }
        }

        // (d) indecomposable ncn partitions have exactly one non-singleton
        // block, containing both 1 and n
        if n >= 2 {
            for q in partition::enumerate_ncn(n) {
                if q.indecomposable_components().len() != 1 {
                    continue;
                }
                let big: Vec<&Vec<u32>> = q.blocks().iter().filter(|b| b.len() > 1).collect();
                assert_eq!(big.len(), 1, "on {q}");
                assert_eq!(big[0][0], 1, "on {q}");
                assert_eq!(*big[0].last().unwrap() as usize, n, "on {q}");
            }
        }

        // (e) phi preserves the position of the largest entry, and its domain
        // (members fixing neither endpoint) has the next count down
        if n >= 2 {
            let mut domain_size = 0i64;
            for p in PermClass::Av321Vinc2143.enumerate(n) {
                if p.value_at(1) == 1 || p.value_at(n) as usize == n {
                    continue;
                }
                domain_size += 1;
                let image = biject::phi(&p).unwrap();
                assert_eq!(
                    p.position_of(n as u32).unwrap(),
                    image.position_of(n as u32 - 1).unwrap(),
                    "phi moved the maximum of {p}"
                );
            }
            assert_eq!(domain_size, FIB_ODD[n - 2], "phi domain size at n = {n}");
        }
    }
    passed("6. structure theorems hold exhaustively (n <= 8 / n <= 9 as stated)");
}

/// Criterion 7: statistic correspondences between object families and the
/// triangles (n <= 8).
#[test]
fn acceptance_7_statistic_correspondences() {
    for n in 1..=8usize {
        let table1 = series::triangle_321_4123(n);
        let table3 = series::triangle_321_3412(n);

        // first-column heights of area-n polyominoes fill the table1 row
        let mut histogram = vec![0i64; n];
        for p in polyomino::enumerate_dcc(n) {
            histogram[p.first_column_height() as usize - 1] += 1;
        }
        assert_eq!(histogram, table1.row(n), "polyomino heights at n = {n}");

        // the m statistic over ncn partitions fills the table3 row
        let mut histogram = vec![0i64; n];
        for q in partition::enumerate_ncn(n) {
            histogram[q.m_statistic() as usize - 1] += 1;
        }
        assert_eq!(histogram, table3.row(n), "m statistic at n = {n}");

        // paths starting up-down fill column 1 of table1; the rest are
        // counted by the ordinal of the first long descent, one column up
        let mut histogram = vec![0i64; n];
        for d in dyck::enumerate_bounded(n, 3) {
            let column = if d.starts_up_down() {
                1
            } else {
                d.stats()
                    .first_long_descent
                    .expect("a path not starting UD has a long descent")
                    .ordinal
                    + 1
            };
            histogram[column - 1] += 1;
        }
        assert_eq!(histogram, table1.row(n), "dyck statistics at n = {n}");
    }
    passed("7. object statistics reproduce the triangle rows (n <= 8)");
}

/// Criterion 8: the pruned generator and the brute-force filter agree as
/// ordered lists for every class (n <= 8), with a spot check at the oracle
/// bound of 9.
#[test]
fn acceptance_8_generator_equivalence() {
    for class in PermClass::ALL {
        let pats = class.patterns();
        for n in 0..=8usize {
            let pruned = perm::avoiders_pruned(n, &pats);
            let filtered = perm::avoiders_filter(n, &pats).unwrap();
            assert_eq!(pruned, filtered, "{class} at n = {n}");
        }
    }
    for class in PermClass::ALL {
        let pats = class.patterns();
        let pruned = perm::avoiders_pruned(9, &pats);
        assert_eq!(pruned.len(), 1597, "{class} at n = 9");
        let filtered = perm::avoiders_filter_bounded(9, &pats, 9).unwrap();
        assert_eq!(pruned, filtered, "{class} at n = 9");
    }
    passed("8. pruned generator equals the brute-force filter (n <= 8, spot checks at 9)");
}
