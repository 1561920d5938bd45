//! The full verification matrix: eight named checks covering counts,
//! object families, triangles, generating functions, bijections, structure
//! properties, statistic correspondences, and generator equivalence.
//!
//! Each check prints one PASS/FAIL line; any failure makes the run exit
//! nonzero. `--max-n` caps the sizes every check walks (the defaults are
//! the full documented bounds), and `--fixtures` points the triangle check
//! at on-disk CSV files instead of the embedded copies.

use crate::CliError;
use fibperm_core::biject::{self, Family};
use fibperm_core::dyck;
use fibperm_core::fixtures;
use fibperm_core::fountain;
use fibperm_core::partition;
use fibperm_core::perm::{self, PermClass};
use fibperm_core::polyomino;
use fibperm_core::series::{self, BivariateTriangle};
use std::path::Path;

struct CheckResult {
    name: &'static str,
    failures: Vec<String>,
}

pub fn run(max_n: usize, fixture_dir: Option<&Path>) -> Result<(), CliError> {
    if max_n == 0 {
        return Err(CliError::usage("--max-n must be at least 1"));
    }
    let fixtures = load_fixtures(fixture_dir)?;
    let oracle_bound = crate::oracle_bound()?;
    let checks = [
        class_counts(max_n),
        object_counts(max_n),
        triangle_tables(max_n, &fixtures),
        generating_functions(max_n),
        bijections(max_n),
        structure_properties(max_n),
        statistic_correspondences(max_n),
        generator_equivalence(max_n, oracle_bound),
    ];
    let mut failed = 0usize;
    for check in &checks {
        if check.failures.is_empty() {
            outln!("PASS  {}", check.name);
        } else {
            failed += 1;
            outln!("FAIL  {}", check.name);
            for f in &check.failures {
                outln!("      {f}");
            }
        }
    }
    outln!("{} passed, {} failed", checks.len() - failed, failed);
    if failed > 0 {
        return Err(CliError::new("verify", format!("{failed} check(s) failed")));
    }
    Ok(())
}

struct Fixtures {
    table_4123: BivariateTriangle,
    table_2143: BivariateTriangle,
    table_3412: BivariateTriangle,
}

fn load_fixtures(dir: Option<&Path>) -> Result<Fixtures, CliError> {
    let parse = |text: &str, name: &str| {
        BivariateTriangle::from_csv(text)
            .map_err(|e| CliError::new("fixture", format!("{name}: {e}")))
    };
    match dir {
        None => Ok(Fixtures {
            table_4123: parse(fixtures::TRIANGLE_321_4123_CSV, "triangle_321_4123")?,
            table_2143: parse(fixtures::TRIANGLE_321_2143_CSV, "triangle_321_21_43")?,
            table_3412: parse(fixtures::TRIANGLE_321_3412_CSV, "triangle_321_3412")?,
        }),
        Some(dir) => {
            let read = |name: &str| -> Result<BivariateTriangle, CliError> {
                let path = dir.join(name);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
                parse(&text, name)
            };
            Ok(Fixtures {
                table_4123: read("triangle_321_4123.csv")?,
                table_2143: read("triangle_321_21_43.csv")?,
                table_3412: read("triangle_321_3412.csv")?,
            })
        }
    }
}

/// Check 1: the four classes have F(2n-1) members for n = 1..=9.
fn class_counts(max_n: usize) -> CheckResult {
    let mut failures = Vec::new();
    for class in PermClass::ALL {
        for n in 1..=max_n.min(9) {
            let got = class.enumerate(n).len() as i64;
            let want = series::fib_odd(n);
            if got != want {
                failures.push(format!("{class} at n={n}: {got} members, expected {want}"));
            }
        }
    }
    CheckResult {
        name: "class counts equal the odd-indexed Fibonacci numbers (n <= 9)",
        failures,
    }
}

/// Check 2: height-bounded Dyck paths (n <= 12), block fountains (n <= 12),
/// noncrossing nonnesting partitions (n <= 10) and polyominoes by area
/// (n <= 10) all count F(2n-1).
fn object_counts(max_n: usize) -> CheckResult {
    let mut failures = Vec::new();
    let mut check = |name: &str, n: usize, got: usize| {
        let want = series::fib_odd(n) as usize;
        if got != want {
            failures.push(format!("{name} at n={n}: {got} objects, expected {want}"));
        }
    };
    for n in 1..=max_n.min(12) {
        check(
            "dyck paths of height <= 3",
            n,
            dyck::enumerate_bounded(n, 3).len(),
        );
        check("block fountains", n, fountain::enumerate_fountains(n).len());
    }
    for n in 1..=max_n.min(10) {
        check("ncn partitions", n, partition::enumerate_ncn(n).len());
        check("dcc polyominoes", n, polyomino::enumerate_dcc(n).len());
    }
    CheckResult {
        name: "object family counts equal the odd-indexed Fibonacci numbers",
        failures,
    }
}

/// Check 3: generated triangles reproduce the reference tables row for row,
/// and the two position-of-1 triangles coincide.
fn triangle_tables(max_n: usize, fixtures: &Fixtures) -> CheckResult {
    let mut failures = Vec::new();
    let n = max_n.min(8);
    let pairs = [
        (
            "321-4123",
            series::triangle_321_4123(n),
            fixtures.table_4123.truncated(n),
        ),
        (
            "321-21_43",
            series::triangle_321_2143(n),
            fixtures.table_2143.truncated(n),
        ),
        (
            "321-3412",
            series::triangle_321_3412(n),
            fixtures.table_3412.truncated(n),
        ),
        (
            "231-3124",
            series::triangle_231_3124(n),
            fixtures.table_4123.truncated(n),
        ),
    ];
    for (name, generated, reference) in &pairs {
        if generated != reference {
            failures.push(format!(
                "{name}: generated rows differ from the reference table"
            ));
        }
    }
    let order = max_n.min(12);
    if series::triangle_231_3124(order) != series::triangle_321_4123(order) {
        failures.push("the two position-of-1 triangles differ".into());
    }
    CheckResult {
        name: "triangles reproduce the reference tables (n <= 8)",
        failures,
    }
}

/// Check 4: generating function expansions agree with the triangle
/// recurrences (N <= 12), the counting series, and the enumerated
/// positional statistics (n <= 8).
fn generating_functions(max_n: usize) -> CheckResult {
    let mut failures = Vec::new();
    let order = max_n.min(12);
    let gf_pairs = [
        (
            "321-4123",
            series::gf_triangle_321_4123(),
            series::triangle_321_4123(order),
        ),
        (
            "321-21_43",
            series::gf_triangle_321_2143(),
            series::triangle_321_2143(order),
        ),
        (
            "321-3412",
            series::gf_triangle_321_3412(),
            series::triangle_321_3412(order),
        ),
        (
            "231-3124",
            series::gf_triangle_231_3124(),
            series::triangle_231_3124(order),
        ),
    ];
    for (name, gf, rule) in &gf_pairs {
        match gf.expand_triangle(order) {
            Ok(expanded) if &expanded == rule => {}
            Ok(_) => failures.push(format!(
                "{name}: expansion differs from the recurrence rows"
            )),
            Err(e) => failures.push(format!("{name}: expansion failed: {e}")),
        }
    }
    match series::gf_class_counts().expand_series(order) {
        Ok(s) => {
            for n in 1..=order {
                if s.coeffs()[n] != series::fib_odd(n) {
                    failures.push(format!(
                        "counting series coefficient {n} is {}",
                        s.coeffs()[n]
                    ));
                }
            }
            // the recurrence needs four terms to say anything
            if order >= 3 && series::check_recurrence(s.coeffs(), &[3, -1], 3) != Ok(true) {
                failures.push("counting series does not satisfy 3a - a".into());
            }
        }
        Err(e) => failures.push(format!("counting series expansion failed: {e}")),
    }
    for (class, n, hist) in positional_histograms(max_n.min(8)) {
        let triangle = match class {
            PermClass::Av321_4123 => series::triangle_321_4123(n),
            PermClass::Av321Vinc2143 => series::triangle_321_2143(n),
            PermClass::Av321_3412 => series::triangle_321_3412(n),
            PermClass::Av231_3124 => series::triangle_231_3124(n),
        };
        if hist != triangle.row(n) {
            failures.push(format!("{class} at n={n}: positional histogram {hist:?}"));
        }
    }
    CheckResult {
        name: "generating functions match recurrences and positional statistics",
        failures,
    }
}

/// Histogram of the tracked position (of the entry 1, or of the entry n for
/// the vincular class) over each class member of each size.
fn positional_histograms(max_n: usize) -> Vec<(PermClass, usize, Vec<i64>)> {
    let mut out = Vec::new();
    for class in PermClass::ALL {
        for n in 1..=max_n {
            let mut hist = vec![0i64; n];
            for p in class.enumerate(n) {
                let tracked = match class {
                    PermClass::Av321Vinc2143 => n as u32,
                    _ => 1,
                };
                let pos = p.position_of(tracked).expect("value in range");
                hist[pos - 1] += 1;
            }
            out.push((class, n, hist));
        }
    }
    out
}

/// Check 5: each family maps bijectively onto its class with identity round
/// trips (n <= 8), and the area-4 polyomino pairing matches the reference.
fn bijections(max_n: usize) -> CheckResult {
    let mut failures = Vec::new();
    for family in Family::ALL {
        for n in 1..=max_n.min(8) {
            let report = biject::verify_family(family, n);
            if !report.ok() {
                let detail = report.mismatches.first().cloned().unwrap_or_default();
                failures.push(format!("{family} at n={n}: {detail}"));
            }
        }
    }
    if max_n >= 4 {
        let mut expected = fixtures::area4_pairs();
        expected.sort();
        let mut actual: Vec<_> = polyomino::enumerate_dcc(4)
            .into_iter()
            .map(|p| {
                let s = biject::polyomino_to_perm(&p);
                (p, s)
            })
            .collect();
        actual.sort();
        if actual != expected {
            failures.push("area-4 polyomino pairing differs from the reference".into());
        }
    }
    CheckResult {
        name: "bijections are exact with identity round trips (n <= 8)",
        failures,
    }
}

/// Check 6: the structural facts behind the maps, exhaustively.
fn structure_properties(max_n: usize) -> CheckResult {
    let mut failures = Vec::new();

    // height criterion: a 321-avoider maps to height <= 3 iff it avoids 4123
    let pat4123 = perm::Pattern::classical(vec![4, 1, 2, 3]).expect("static pattern");
    for n in 1..=max_n.min(8) {
        for p in perm::avoiders_pruned(n, &[perm::Pattern::classical(vec![3, 2, 1]).unwrap()]) {
            let height = biject::perm_to_dyck(&p)
                .expect("321-avoider maps to a path")
                .stats()
                .height;
            if (height <= 3) != p.avoids(&pat4123) {
                failures.push(format!("height criterion fails on {p}"));
            }
        }
    }

    for n in 1..=max_n.min(9) {
        // second entry is one below the first for interior first entries
        for p in PermClass::Av231_3124.enumerate(n) {
            let first = p.value_at(1);
            if 1 < first && (first as usize) < n && p.value_at(2) != first - 1 {
                failures.push(format!("{p}: second entry is not one below the first"));
            }
            // descending runs split into at most two consecutive blocks
            for run in p.descending_runs().runs() {
                let blocks = perm::consecutive_blocks(run).len();
                if blocks > 2 {
                    failures.push(format!("{p}: run {run:?} has {blocks} blocks"));
                }
            }
        }
        // indecomposable ncn partitions: one non-singleton block holding 1 and n
        if n >= 2 {
            for q in partition::enumerate_ncn(n) {
                if q.indecomposable_components().len() != 1 {
                    continue;
                }
                let big: Vec<&Vec<u32>> = q.blocks().iter().filter(|b| b.len() > 1).collect();
                let ok = big.len() == 1 && big[0][0] == 1 && *big[0].last().unwrap() as usize == n;
                if !ok {
                    failures.push(format!("indecomposable {q} lacks the spanning block"));
                }
            }
        }
        // phi preserves the position of the largest entry
        if n >= 2 {
            for p in PermClass::Av321Vinc2143.enumerate(n) {
                if p.value_at(1) == 1 || p.value_at(n) as usize == n {
                    continue;
                }
                let image = biject::phi(&p).expect("member of the phi domain");
                let before = p.position_of(n as u32).expect("value in range");
                let after = image.position_of(n as u32 - 1).expect("value in range");
                if before != after {
                    failures.push(format!("phi moved the maximum of {p}"));
                }
            }
        }
    }
    CheckResult {
        name: "structure properties hold exhaustively (n <= 9)",
        failures,
    }
}

/// Check 7: the statistic correspondences on the object side (n <= 8).
fn statistic_correspondences(max_n: usize) -> CheckResult {
    let mut failures = Vec::new();
    for n in 1..=max_n.min(8) {
        let table1 = series::triangle_321_4123(n);
        let table3 = series::triangle_321_3412(n);

        // first-column heights of area-n polyominoes
        let mut hist = vec![0i64; n];
        for p in polyomino::enumerate_dcc(n) {
            hist[p.first_column_height() as usize - 1] += 1;
        }
        if hist != table1.row(n) {
            failures.push(format!(
                "polyomino first-column histogram at n={n}: {hist:?}"
            ));
        }

        // m-statistic over ncn partitions fills the columns of the 3412 table
        let mut hist = vec![0i64; n];
        for q in partition::enumerate_ncn(n) {
            hist[q.m_statistic() as usize - 1] += 1;
        }
        if hist != table3.row(n) {
            failures.push(format!(
                "partition m-statistic histogram at n={n}: {hist:?}"
            ));
        }

        // paths starting UD fill column 1; the others are counted by the
        // ordinal of their first long descent, shifted into columns k >= 2
        let mut hist = vec![0i64; n];
        for d in dyck::enumerate_bounded(n, 3) {
            let column = if d.starts_up_down() {
                1
            } else {
                d.stats()
                    .first_long_descent
                    .expect("paths not starting UD have a long descent")
                    .ordinal
                    + 1
            };
            hist[column - 1] += 1;
        }
        if hist != table1.row(n) {
            failures.push(format!("dyck long-descent histogram at n={n}: {hist:?}"));
        }
    }
    CheckResult {
        name: "object statistics reproduce the triangle rows (n <= 8)",
        failures,
    }
}

/// Check 8: the pruned generator and the brute-force filter return identical
/// ordered lists (n <= 8, one spot check at the oracle bound).
fn generator_equivalence(max_n: usize, oracle_bound: usize) -> CheckResult {
    let mut failures = Vec::new();
    for class in PermClass::ALL {
        for n in 1..=max_n.min(8).min(oracle_bound) {
            let pats = class.patterns();
            let pruned = perm::avoiders_pruned(n, &pats);
            match perm::avoiders_filter_bounded(n, &pats, oracle_bound) {
                Ok(filtered) if filtered == pruned => {}
                Ok(_) => failures.push(format!("{class} at n={n}: generators disagree")),
                Err(e) => failures.push(format!("{class} at n={n}: {e}")),
            }
        }
    }
    let spot = 9usize;
    if max_n >= spot && oracle_bound >= spot {
        let class = PermClass::Av231_3124;
        let pats = class.patterns();
        let pruned = perm::avoiders_pruned(spot, &pats);
        match perm::avoiders_filter_bounded(spot, &pats, oracle_bound) {
            Ok(filtered) if filtered == pruned => {}
            Ok(_) => failures.push(format!("{class} at n={spot}: generators disagree")),
            Err(e) => failures.push(format!("{class} at n={spot}: {e}")),
        }
    }
    CheckResult {
        name: "pruned generator equals the brute-force filter",
        failures,
    }
}
