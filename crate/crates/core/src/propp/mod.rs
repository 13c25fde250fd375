//! Pillow tiling-count series and the square structure of their values.

mod factor;
mod squares;

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::reduced_det;
use crate::linalg::{BigInteger, Rational};
use crate::region::{build_digraph, q_pillow};

pub use factor::{factorize, is_probable_prime, square_split, DEFAULT_RHO_ITERATIONS, TRIAL_DIVISION_LIMIT};
pub use squares::{two_square_reps, TwoSquaresReport, TWO_SQUARES_LIMIT};

/// Shared denominator `1 - 2x - 2x^2 - 2x^3 + x^4` of both series.
pub const GF_DENOMINATOR: [i64; 5] = [1, -2, -2, -2, 1];
/// Numerator of the series giving `s_0, s_2, s_4, ...`.
pub const GF_EVEN_NUMERATOR: [i64; 4] = [1, 3, 1, -1];
/// Numerator of the series giving `s_1, s_3, s_5, ...`.
pub const GF_ODD_NUMERATOR: [i64; 4] = [2, 1, 2, -1];

pub const RATIO_DIGITS: usize = 10;

/// Number of tilings of the `q`-pillow of order `n`, via the reduced
/// determinant of its digraph.
pub fn pillow_count(q: i64, n: i64) -> Result<BigInteger> {
    let region = q_pillow(n, q)?;
    let det = reduced_det(&build_digraph(&region)?)?;
    if !det.is_integer() || det.is_negative() {
        return Err(Error::Invariant(format!(
            "pillow determinant {det} is not a nonnegative integer"
        )));
    }
    Ok(det.to_integer())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub q: i64,
    pub entries: Vec<(usize, BigInteger)>,
}

pub fn pillow_counts(q: i64, n_max: usize) -> Result<CountSeries> {
    let entries = (1..=n_max)
        .map(|n| Ok((n, pillow_count(q, n as i64)?)))
        .collect::<Result<_>>()?;
    Ok(CountSeries { q, entries })
}

/// First `len` coefficients of `numerator / GF_DENOMINATOR`, from the
/// recurrence `c_t = 2c_{t-1} + 2c_{t-2} + 2c_{t-3} - c_{t-4} + a_t`.
pub fn gf_coefficients(numerator: &[i64], len: usize) -> Vec<BigInteger> {
    let mut c: Vec<BigInteger> = Vec::with_capacity(len);
    for t in 0..len {
        let mut v = BigInteger::from(numerator.get(t).copied().unwrap_or(0));
        for (lag, &d) in GF_DENOMINATOR.iter().enumerate().skip(1) {
            if lag <= t {
                v -= &c[t - lag] * d;
            }
        }
        c.push(v);
    }
    c
}

/// `s_n` predicted by the generating functions: coefficient `n / 2` of the
/// even series for even `n`, of the odd series for odd `n`.
pub fn propp_gf_s(n: usize) -> BigInteger {
    let numerator = if n % 2 == 0 { &GF_EVEN_NUMERATOR } else { &GF_ODD_NUMERATOR };
    gf_coefficients(numerator, n / 2 + 1).pop().unwrap()
}

/// `s_0, ..., s_{n_max}`.
pub fn propp_gf_values(n_max: usize) -> Vec<BigInteger> {
    let half = n_max / 2 + 1;
    let even = gf_coefficients(&GF_EVEN_NUMERATOR, half);
    let odd = gf_coefficients(&GF_ODD_NUMERATOR, half);
    (0..=n_max)
        .map(|n| if n % 2 == 0 { even[n / 2].clone() } else { odd[n / 2].clone() })
        .collect()
}

fn exact_sqrt(n: &BigInteger) -> Option<BigInteger> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Outcome of testing `count = l^2 s` for a predicted `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProppVerdict {
    pub n: usize,
    pub count: BigInteger,
    pub s: BigInteger,
    /// `count / s` when `s` divides `count`.
    pub quotient: Option<BigInteger>,
    /// Square root of the quotient when it is a perfect square.
    pub l: Option<BigInteger>,
}

impl ProppVerdict {
    pub fn new(n: usize, count: BigInteger, s: BigInteger) -> Self {
        let quotient = if s.is_zero() {
            None
        } else {
            let (q, r) = count.div_rem(&s);
            r.is_zero().then_some(q)
        };
        let l = quotient.as_ref().and_then(exact_sqrt);
        ProppVerdict { n, count, s, quotient, l }
    }

    pub fn divides(&self) -> bool {
        self.quotient.is_some()
    }

    pub fn is_perfect_square(&self) -> bool {
        self.l.is_some()
    }

    pub fn holds(&self) -> bool {
        self.is_perfect_square()
    }
}

impl fmt::Display for ProppVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} count={} s={} ", self.n, self.count, self.s)?;
        match (&self.quotient, &self.l) {
            (None, _) => write!(f, "violation: s does not divide the count"),
            (Some(q), None) => write!(f, "violation: quotient {q} is not a perfect square"),
            (Some(_), Some(l)) => write!(f, "ok l={l}"),
        }
    }
}

/// Tests the 3-pillow of order `n` against the generating-function `s_n`.
pub fn check_propp(n: usize) -> Result<ProppVerdict> {
    Ok(ProppVerdict::new(n, pillow_count(3, n as i64)?, propp_gf_s(n)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecompositionMode {
    Squarefree,
    ConjectureGf,
    /// `#AD_n = 2^{n(n+1)/2}` split with `s_n = 2^{ceil(n/2)}`.
    DiamondFormula,
}

impl fmt::Display for DecompositionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionMode::Squarefree => "squarefree",
            DecompositionMode::ConjectureGf => "conjecture-gf",
            DecompositionMode::DiamondFormula => "diamond-formula",
        })
    }
}

/// `value = l^2 s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareDecomposition {
    pub value: BigInteger,
    pub l: BigInteger,
    pub s: BigInteger,
    pub mode: DecompositionMode,
}

impl SquareDecomposition {
    pub fn is_consistent(&self) -> bool {
        &self.l * &self.l * &self.s == self.value
    }
}

pub fn squarefree_decompose(n: &BigInteger) -> Result<SquareDecomposition> {
    squarefree_decompose_with(n, DEFAULT_RHO_ITERATIONS)
}

/// Maximal `l` with `l^2 | n`. A budget error means the number stayed unfactored.
pub fn squarefree_decompose_with(n: &BigInteger, max_rho_iterations: u64) -> Result<SquareDecomposition> {
    let Some(magnitude) = n.to_biguint().filter(|m| !m.is_zero()) else {
        return Err(Error::InvalidArgument(format!("cannot decompose {n}")));
    };
    let (l, s) = square_split(&magnitude, max_rho_iterations)?;
    let d = SquareDecomposition {
        value: n.clone(),
        l: l.into(),
        s: s.into(),
        mode: DecompositionMode::Squarefree,
    };
    debug_assert!(d.is_consistent());
    Ok(d)
}

fn diamond_decompose(n: usize, count: &BigInteger) -> Result<SquareDecomposition> {
    let total = n * (n + 1) / 2;
    if *count != BigInteger::one() << total {
        return Err(Error::Invariant(format!("diamond count {count} is not 2^{total}")));
    }
    let s_exp = n.div_ceil(2);
    Ok(SquareDecomposition {
        value: count.clone(),
        l: BigInteger::one() << ((total - s_exp) / 2),
        s: BigInteger::one() << s_exp,
        mode: DecompositionMode::DiamondFormula,
    })
}

/// The `(l, s)` split used in reports: the closed form for `q = 1`, the
/// generating function for `q = 3` (squarefree if that check fails),
/// squarefree otherwise.
pub fn decompose(q: i64, n: usize, count: &BigInteger) -> Result<SquareDecomposition> {
    match q {
        1 => diamond_decompose(n, count),
        3 => {
            let v = ProppVerdict::new(n, count.clone(), propp_gf_s(n));
            match v.l {
                Some(l) => Ok(SquareDecomposition {
                    value: count.clone(),
                    l,
                    s: v.s,
                    mode: DecompositionMode::ConjectureGf,
                }),
                None => squarefree_decompose(count),
            }
        }
        _ => squarefree_decompose(count),
    }
}

/// Positive rational to `digits` significant digits, rounded half up, in
/// plain positional notation.
pub fn decimal_digits(r: &Rational, digits: usize) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let r = r.abs();
    let ten = BigInt::from(10);
    // Exponent e with 10^e <= r < 10^(e+1).
    let mut e: i64 = r.numer().to_string().len() as i64 - r.denom().to_string().len() as i64;
    let pow = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(ten.pow(k as u32))
        } else {
            Rational::new(BigInt::one(), ten.pow((-k) as u32))
        }
    };
    while r < pow(e) {
        e -= 1;
    }
    while r >= pow(e + 1) {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &r * pow(shift);
    let mut m = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let mut shift = shift;
    if m.to_string().len() > digits {
        m /= 10;
        shift -= 1;
    }
    let s = m.to_string();
    let body = if shift <= 0 {
        format!("{s}{}", "0".repeat((-shift) as usize))
    } else if (shift as usize) < s.len() {
        let (a, b) = s.split_at(s.len() - shift as usize);
        format!("{a}.{b}")
    } else {
        format!("0.{}{s}", "0".repeat(shift as usize - s.len()))
    };
    format!("{sign}{body}")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioPoint {
    pub n: usize,
    pub exact: Rational,
    pub decimal: String,
}

impl RatioPoint {
    fn new(n: usize, num: &BigInteger, den: &BigInteger) -> Self {
        let exact = Rational::new(num.clone(), den.clone());
        let decimal = decimal_digits(&exact, RATIO_DIGITS);
        RatioPoint { n, exact, decimal }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoSeries {
    pub q: i64,
    pub mode: DecompositionMode,
    /// `s_n / s_{n-2}`.
    pub ratios: Vec<RatioPoint>,
    /// `s_n / s_{n-1}` for even `n`.
    pub consecutive_even: Vec<RatioPoint>,
    /// `s_n / s_{n-1}` for odd `n`.
    pub consecutive_odd: Vec<RatioPoint>,
}

impl RhoSeries {
    /// Ratios from `(n, s_n)` pairs; points whose neighbours are missing or zero are skipped.
    pub fn from_values(q: i64, mode: DecompositionMode, values: &[(usize, BigInteger)]) -> Self {
        let lookup = |n: usize| {
            values
                .iter()
                .find(|(m, s)| *m == n && !s.is_zero())
                .map(|(_, s)| s)
        };
        let mut series = RhoSeries {
            q,
            mode,
            ratios: Vec::new(),
            consecutive_even: Vec::new(),
            consecutive_odd: Vec::new(),
        };
        let mut ns: Vec<usize> = values.iter().map(|(n, _)| *n).collect();
        ns.sort_unstable();
        ns.dedup();
        for n in ns {
            let Some(s) = lookup(n) else { continue };
            if let Some(prev) = n.checked_sub(2).and_then(lookup) {
                series.ratios.push(RatioPoint::new(n, s, prev));
            }
            if let Some(prev) = n.checked_sub(1).and_then(lookup) {
                let p = RatioPoint::new(n, s, prev);
                if n % 2 == 0 {
                    series.consecutive_even.push(p);
                } else {
                    series.consecutive_odd.push(p);
                }
            }
        }
        series
    }

    /// CSV with columns `series,n,exact,decimal`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("series,n,exact,decimal\n");
        for (name, points) in [
            ("rho", &self.ratios),
            ("tau_even", &self.consecutive_even),
            ("tau_odd", &self.consecutive_odd),
        ] {
            for p in points {
                writeln!(out, "{name},{},{},{}", p.n, p.exact, p.decimal).unwrap();
            }
        }
        out
    }
}

/// Ratio series for `q`: generating-function values for `q = 3` (no
/// factorization), the closed form for `q = 1`, squarefree parts of the
/// computed counts otherwise (unfactored points are left out).
pub fn rho_series(q: i64, n_max: usize) -> Result<RhoSeries> {
    match q {
        3 => {
            let values: Vec<_> = propp_gf_values(n_max).into_iter().enumerate().collect();
            Ok(RhoSeries::from_values(q, DecompositionMode::ConjectureGf, &values))
        }
        1 => {
            let values: Vec<_> = (0..=n_max)
                .map(|n| (n, BigInteger::one() << n.div_ceil(2)))
                .collect();
            Ok(RhoSeries::from_values(q, DecompositionMode::DiamondFormula, &values))
        }
        _ => {
            let counts = pillow_counts(q, n_max)?;
            let mut values = Vec::new();
            for (n, count) in &counts.entries {
                match squarefree_decompose(count) {
                    Ok(d) => values.push((*n, d.s)),
                    Err(e) if e.is_budget() => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(RhoSeries::from_values(q, DecompositionMode::Squarefree, &values))
        }
    }
}

/// One row of an analysis report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub q: i64,
    pub n: usize,
    pub count: BigInteger,
    /// `None` when factorization ran out of budget.
    pub decomposition: Option<SquareDecomposition>,
    /// `s_n / s_{n-2}` to ten significant digits, when both rows have an `s`.
    pub ratio: Option<String>,
    /// `None` when the count is beyond the two-squares scan budget.
    pub two_squares: Option<TwoSquaresReport>,
    /// Generating-function check, for `q = 3` only.
    pub propp: Option<bool>,
}

/// Decompositions, ratios and two-squares data for a count series.
pub fn report_rows(series: &CountSeries) -> Result<Vec<ReportRow>> {
    let mut rows = Vec::with_capacity(series.entries.len());
    for (n, count) in &series.entries {
        let decomposition = match decompose(series.q, *n, count) {
            Ok(d) => Some(d),
            Err(e) if e.is_budget() => None,
            Err(e) => return Err(e),
        };
        let two_squares = match two_square_reps(count, decomposition.as_ref().map(|d| &d.l)) {
            Ok(r) => Some(r),
            Err(e) if e.is_budget() => None,
            Err(e) => return Err(e),
        };
        let propp = (series.q == 3)
            .then(|| ProppVerdict::new(*n, count.clone(), propp_gf_s(*n)).holds());
        rows.push(ReportRow {
            q: series.q,
            n: *n,
            count: count.clone(),
            decomposition,
            ratio: None,
            two_squares,
            propp,
        });
    }
    for i in 0..rows.len() {
        let (n, s) = match &rows[i].decomposition {
            Some(d) if !d.s.is_zero() => (rows[i].n, d.s.clone()),
            _ => continue,
        };
        let prev = rows.iter().find_map(|r| match &r.decomposition {
            Some(d) if n >= 2 && r.n == n - 2 && !d.s.is_zero() => Some(d.s.clone()),
            _ => None,
        });
        if let Some(prev) = prev {
            rows[i].ratio = Some(RatioPoint::new(n, &s, &prev).decimal);
        }
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Text,
}

pub const REPORT_COLUMNS: [&str; 9] = ["q", "n", "count", "l", "s", "mode", "ratio", "two_squares", "propp"];

fn row_fields(row: &ReportRow) -> [String; 9] {
    let (l, s, mode) = match &row.decomposition {
        Some(d) => (d.l.to_string(), d.s.to_string(), d.mode.to_string()),
        None => (String::new(), String::new(), "unfactored".to_string()),
    };
    [
        row.q.to_string(),
        row.n.to_string(),
        row.count.to_string(),
        l,
        s,
        mode,
        row.ratio.clone().unwrap_or_default(),
        row.two_squares
            .as_ref()
            .map_or_else(|| "over-budget".to_string(), TwoSquaresReport::summary),
        row.propp.map_or_else(String::new, |b| b.to_string()),
    ]
}

/// Rows sorted by `(q, n)`. CSV always has a header line; the text format
/// prints `key=value` pairs, one row per line.
pub fn render_report(rows: &[ReportRow], format: ReportFormat) -> String {
    let mut sorted: Vec<&ReportRow> = rows.iter().collect();
    sorted.sort_by_key(|r| (r.q, r.n));
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str(&REPORT_COLUMNS.join(","));
            out.push('\n');
            for r in sorted {
                out.push_str(&row_fields(r).join(","));
                out.push('\n');
            }
        }
        ReportFormat::Text => {
            for r in sorted {
                let fields = row_fields(r);
                let pairs: Vec<String> = REPORT_COLUMNS
                    .iter()
                    .zip(&fields)
                    .map(|(k, v)| format!("{k}={}", if v.is_empty() { "-" } else { v }))
                    .collect();
                out.push_str(&pairs.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

pub fn emit_report(rows: &[ReportRow], format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, render_report(rows, format))?;
    Ok(())
}
