//! Exact integer power-series tools: truncated expansion of rational
//! generating functions (univariate, and bivariate with a marker variable
//! `t`), the positional triangles of the four classes, and linear
//! recurrence checks.
//!
//! Everything is exact integer arithmetic with overflow asserted; the
//! class counts fit comfortably in `i64` up to order 30.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator constant term must be +1 or -1")]
    NonUnitConstantTerm,
    #[error("generating function involves the marker variable t")]
    NotUnivariate,
    #[error("expansion is not a lower-triangular array in (n, k)")]
    NotLowerTriangular,
    #[error("sequence too short: need at least {needed} terms, got {got}")]
    InsufficientLength { needed: usize, got: usize },
    #[error("cannot parse triangle CSV: {0}")]
    CsvParse(String),
}

fn add_i64(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("series coefficient overflow")
}

fn mul_i64(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("series coefficient overflow")
}

/// `F(2n-1)` via the recurrence `a(1) = 1`, `a(2) = 2`,
/// `a(n) = 3 a(n-1) - a(n-2)`.
pub fn fib_odd(n: usize) -> i64 {
    assert!(n >= 1, "fib_odd is defined for n >= 1");
    let (mut a, mut b) = (1i64, 2i64);
    if n == 1 {
        return a;
    }
    for _ in 3..=n {
        let c = mul_i64(3, b)
            .checked_sub(a)
            .expect("series coefficient overflow");
        a = b;
        b = c;
    }
    b
}

/// Coefficients `c_0 ..= c_order` of a univariate series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// Lower-triangular integer array: `entry(n, k)` for `1 <= k <= n`, the
/// coefficient of `t^k x^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BivariateTriangle {
    rows: Vec<Vec<i64>>,
}

impl BivariateTriangle {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        for (idx, row) in rows.iter().enumerate() {
            assert_eq!(
                row.len(),
                idx + 1,
                "row {} must have {} entries",
                idx + 1,
                idx + 1
            );
        }
        BivariateTriangle { rows }
    }

    /// Number of rows.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[i64] {
        &self.rows[n - 1]
    }

    /// Zero outside the stored triangle.
    pub fn entry(&self, n: usize, k: usize) -> i64 {
        if n == 0 || k == 0 || n > self.rows.len() || k > n {
            0
        } else {
            self.rows[n - 1][k - 1]
        }
    }

    /// Truncation to the first `n` rows.
    pub fn truncated(&self, n: usize) -> BivariateTriangle {
        BivariateTriangle {
            rows: self.rows[..n.min(self.rows.len())].to_vec(),
        }
    }

    /// One comma-separated row per line, row `n` on line `n`.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self, SeriesError> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<i64> = line
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| SeriesError::CsvParse(format!("bad entry {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            if row.len() != idx + 1 {
                return Err(SeriesError::CsvParse(format!(
                    "row {} has {} entries, expected {}",
                    idx + 1,
                    row.len(),
                    idx + 1
                )));
            }
            rows.push(row);
        }
        Ok(BivariateTriangle { rows })
    }
}

/// Polynomial in `x` whose coefficients are integer polynomials in `t`.
/// `coeffs[i][j]` is the coefficient of `x^i t^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfPoly {
    coeffs: Vec<Vec<i64>>,
}

impl GfPoly {
    /// Builds from `(coefficient, x degree, t degree)` terms.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        let mut coeffs: Vec<Vec<i64>> = Vec::new();
        for &(c, xd, td) in terms {
            while coeffs.len() <= xd {
                coeffs.push(Vec::new());
            }
            while coeffs[xd].len() <= td {
                coeffs[xd].push(0);
            }
            coeffs[xd][td] = add_i64(coeffs[xd][td], c);
        }
        GfPoly { coeffs }
    }

    pub fn one() -> Self {
        GfPoly::from_terms(&[(1, 0, 0)])
    }

    pub fn mul(&self, other: &GfPoly) -> GfPoly {
        let mut coeffs: Vec<Vec<i64>> =
            vec![Vec::new(); (self.coeffs.len() + other.coeffs.len()).saturating_sub(1)];
        for (xa, ta_poly) in self.coeffs.iter().enumerate() {
            for (xb, tb_poly) in other.coeffs.iter().enumerate() {
                for (ta, &ca) in ta_poly.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (tb, &cb) in tb_poly.iter().enumerate() {
                        if cb == 0 {
                            continue;
                        }
                        let slot = &mut coeffs[xa + xb];
                        while slot.len() <= ta + tb {
                            slot.push(0);
                        }
                        slot[ta + tb] = add_i64(slot[ta + tb], mul_i64(ca, cb));
                    }
                }
            }
        }
        GfPoly { coeffs }
    }

    pub fn add(&self, other: &GfPoly) -> GfPoly {
        let mut coeffs = self.coeffs.clone();
        for (xd, t_poly) in other.coeffs.iter().enumerate() {
            while coeffs.len() <= xd {
                coeffs.push(Vec::new());
            }
            for (td, &c) in t_poly.iter().enumerate() {
                while coeffs[xd].len() <= td {
                    coeffs[xd].push(0);
                }
                coeffs[xd][td] = add_i64(coeffs[xd][td], c);
            }
        }
        GfPoly { coeffs }
    }

    fn t_poly(&self, xd: usize) -> &[i64] {
        self.coeffs.get(xd).map_or(&[], Vec::as_slice)
    }

    fn x_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn is_t_free(&self) -> bool {
        self.coeffs
            .iter()
            .all(|tp| tp.iter().skip(1).all(|&c| c == 0))
    }
}

/// A ratio of integer polynomials. Expansion requires the denominator's
/// constant term to be +1 or -1, which keeps every series coefficient an
/// integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    pub numerator: GfPoly,
    pub denominator: GfPoly,
}

impl RationalGf {
    pub fn new(numerator: GfPoly, denominator: GfPoly) -> Self {
        RationalGf {
            numerator,
            denominator,
        }
    }

    fn unit(&self) -> Result<i64, SeriesError> {
        let c = self.denominator.t_poly(0);
        let constant = c.first().copied().unwrap_or(0);
        if (constant != 1 && constant != -1) || c.iter().skip(1).any(|&v| v != 0) {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        Ok(constant)
    }

    /// Maclaurin coefficients in `x` through `x^order`, as polynomials in
    /// `t`, by exact long division.
    fn expand_raw(&self, order: usize) -> Result<Vec<Vec<i64>>, SeriesError> {
        let unit = self.unit()?;
        let den_deg = self.denominator.x_degree();
        let mut out: Vec<Vec<i64>> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc: Vec<i64> = self.numerator.t_poly(n).to_vec();
            for i in 1..=den_deg.min(n) {
                let d = self.denominator.t_poly(i);
                let g = &out[n - i];
                for (td, &dc) in d.iter().enumerate() {
                    if dc == 0 {
                        continue;
                    }
                    for (tg, &gc) in g.iter().enumerate() {
                        if gc == 0 {
                            continue;
                        }
                        while acc.len() <= td + tg {
                            acc.push(0);
                        }
                        acc[td + tg] = acc[td + tg]
                            .checked_sub(mul_i64(dc, gc))
                            .expect("series coefficient overflow");
                    }
                }
            }
            if unit == -1 {
                for c in acc.iter_mut() {
                    *c = -*c;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Expansion of a `t`-free ratio through `x^order`.
    pub fn expand_series(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        if !self.numerator.is_t_free() || !self.denominator.is_t_free() {
            return Err(SeriesError::NotUnivariate);
        }
        let raw = self.expand_raw(order)?;
        Ok(TruncatedSeries::new(
            raw.iter()
                .map(|tp| tp.first().copied().unwrap_or(0))
                .collect(),
        ))
    }

    /// Expansion through `x^order` arranged as the triangle of coefficients
    /// of `t^k x^n` for `1 <= k <= n`.
    pub fn expand_triangle(&self, order: usize) -> Result<BivariateTriangle, SeriesError> {
        let raw = self.expand_raw(order)?;
        let mut rows = Vec::with_capacity(order);
        for (n, t_poly) in raw.iter().enumerate() {
            let shape_ok = t_poly
                .iter()
                .enumerate()
                .all(|(k, &c)| c == 0 || (k >= 1 && k <= n));
            if !shape_ok {
                return Err(SeriesError::NotLowerTriangular);
            }
            if n == 0 {
                continue;
            }
            let mut row = vec![0i64; n];
            for (k, &c) in t_poly.iter().enumerate().skip(1).take(n) {
                row[k - 1] = c;
            }
            rows.push(row);
        }
        Ok(BivariateTriangle { rows })
    }
}

/// `(x - x^2) / (1 - 3x + x^2)`: the class counting series, whose `x^n`
/// coefficient is `F(2n-1)` for `n >= 1`.
pub fn gf_class_counts() -> RationalGf {
    RationalGf::new(
        GfPoly::from_terms(&[(1, 1, 0), (-1, 2, 0)]),
        GfPoly::from_terms(&[(1, 0, 0), (-3, 1, 0), (1, 2, 0)]),
    )
}

/// Closed form for the position-of-1 triangle shared by the classes
/// avoiding {321, 4123} and {231, 3124}:
/// `tx/(1-tx) + tx/(1-tx)^2 * (x-x^2)/(1-3x+x^2)`.
pub fn gf_triangle_321_4123() -> RationalGf {
    let tx = GfPoly::from_terms(&[(1, 1, 1)]);
    let one_minus_tx = GfPoly::from_terms(&[(1, 0, 0), (-1, 1, 1)]);
    let counts = gf_class_counts();
    // common denominator (1 - tx)^2 (1 - 3x + x^2)
    let numerator = tx
        .mul(&one_minus_tx)
        .mul(&counts.denominator)
        .add(&tx.mul(&counts.numerator));
    let denominator = one_minus_tx.mul(&one_minus_tx).mul(&counts.denominator);
    RationalGf::new(numerator, denominator)
}

/// Same closed form as [`gf_triangle_321_4123`]; the class avoiding
/// {231, 3124} has the identical position-of-1 triangle.
pub fn gf_triangle_231_3124() -> RationalGf {
    gf_triangle_321_4123()
}

/// Closed form for the position-of-n triangle of the class avoiding 321 and
/// the vincular `21-4-3`:
/// `tx (1 - tx)(1 - 2tx) / ((1 - x - tx)(1 - 3tx + t^2 x^2))`.
pub fn gf_triangle_321_2143() -> RationalGf {
    let tx = GfPoly::from_terms(&[(1, 1, 1)]);
    let numerator = tx
        .mul(&GfPoly::from_terms(&[(1, 0, 0), (-1, 1, 1)]))
        .mul(&GfPoly::from_terms(&[(1, 0, 0), (-2, 1, 1)]));
    let denominator = GfPoly::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 1, 1)])
        .mul(&GfPoly::from_terms(&[(1, 0, 0), (-3, 1, 1), (1, 2, 2)]));
    RationalGf::new(numerator, denominator)
}

/// Closed form for the position-of-1 triangle of the class avoiding 321 and
/// 3412: `(tx - 2tx^2 + t^2 x^3) / ((1 - tx)(1 - 3x + x^2))`.
pub fn gf_triangle_321_3412() -> RationalGf {
    RationalGf::new(
        GfPoly::from_terms(&[(1, 1, 1), (-2, 2, 1), (1, 3, 2)]),
        GfPoly::from_terms(&[(1, 0, 0), (-1, 1, 1)]).mul(&GfPoly::from_terms(&[
            (1, 0, 0),
            (-3, 1, 0),
            (1, 2, 0),
        ])),
    )
}

/// Position-of-1 triangle for the class avoiding {321, 4123}, built from the
/// counting rule: `entry(n, k) = k * F(2(n-k)-1)` for `k < n`, and 1 on the
/// diagonal (the single member with its smallest entry last).
pub fn triangle_321_4123(order: usize) -> BivariateTriangle {
    assert!(order >= 1);
    let rows = (1..=order)
        .map(|n| {
            (1..=n)
                .map(|k| {
                    if k == n {
                        1
                    } else {
                        mul_i64(k as i64, fib_odd(n - k))
                    }
                })
                .collect()
        })
        .collect();
    BivariateTriangle::from_rows(rows)
}

/// Position-of-n triangle for the class avoiding 321 and the vincular
/// `21-4-3`, built from the recurrence
/// `a(n, k) = a(n-1, k-1) + a(n-1, k)` with `a(n, 1) = 1` and
/// `a(n, n) = F(2n-3)`.
pub fn triangle_321_2143(order: usize) -> BivariateTriangle {
    assert!(order >= 1);
    let mut rows: Vec<Vec<i64>> = vec![vec![1]];
    for n in 2..=order {
        let prev = &rows[n - 2];
        let row = (1..=n)
            .map(|k| {
                if k == 1 {
                    1
                } else if k == n {
                    fib_odd(n - 1)
                } else {
                    add_i64(prev[k - 2], prev[k - 1])
                }
            })
            .collect();
        rows.push(row);
    }
    BivariateTriangle::from_rows(rows)
}

/// Position-of-1 triangle for the class avoiding 321 and 3412: columns 1 and
/// 2 hold `F(2n-3)`, and each later column repeats the previous row shifted,
/// `entry(n, k) = entry(n-1, k-1)` for `k >= 3`.
pub fn triangle_321_3412(order: usize) -> BivariateTriangle {
    assert!(order >= 1);
    let mut rows: Vec<Vec<i64>> = vec![vec![1]];
    for n in 2..=order {
        let prev = rows[n - 2].clone();
        let row = (1..=n)
            .map(|k| match k {
                1 | 2 => fib_odd(n - 1),
                _ => prev[k - 2],
            })
            .collect();
        rows.push(row);
    }
    BivariateTriangle::from_rows(rows)
}

/// Position-of-1 triangle for the class avoiding {231, 3124}; identical to
/// [`triangle_321_4123`].
pub fn triangle_231_3124(order: usize) -> BivariateTriangle {
    triangle_321_4123(order)
}

/// True iff `seq[i] = sum_j coeffs[j] * seq[i - 1 - j]` for every `i >= from`
/// (0-based indices into `seq`).
pub fn check_recurrence(seq: &[i64], coeffs: &[i64], from: usize) -> Result<bool, SeriesError> {
    if from < coeffs.len() || seq.len() <= from {
        return Err(SeriesError::InsufficientLength {
            needed: from.max(coeffs.len()) + 1,
            got: seq.len(),
        });
    }
    for i in from..seq.len() {
        let predicted = coeffs.iter().enumerate().fold(0i64, |acc, (j, &c)| {
            add_i64(acc, mul_i64(c, seq[i - 1 - j]))
        });
        if seq[i] != predicted {
            return Ok(false);
        }
    }
    Ok(true)
}
