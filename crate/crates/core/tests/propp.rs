use hamburger::linalg::{BigInteger, Rational};
use hamburger::propp::*;
use hamburger::region::q_pillow;
use hamburger::tiling::count_tilings;
use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn big(n: i64) -> BigInteger {
    BigInteger::from(n)
}

/// Truncated product of a polynomial with a power series.
fn times_denominator(series: &[BigInteger]) -> Vec<BigInteger> {
    (0..series.len())
        .map(|t| {
            GF_DENOMINATOR
                .iter()
                .enumerate()
                .filter(|(i, _)| *i <= t)
                .map(|(i, d)| big(*d) * &series[t - i])
                .sum()
        })
        .collect()
}

#[test]
fn gf_series_times_denominator_is_numerator() {
    for numerator in [GF_EVEN_NUMERATOR, GF_ODD_NUMERATOR] {
        let series = gf_coefficients(&numerator, 41);
        let product = times_denominator(&series);
        for (t, c) in product.iter().enumerate() {
            let expected = numerator.get(t).copied().unwrap_or(0);
            assert_eq!(*c, big(expected), "t={t}");
        }
    }
}

#[test]
fn gf_leading_values() {
    let even: Vec<i64> = gf_coefficients(&GF_EVEN_NUMERATOR, 4).iter().map(|v| v.to_i64().unwrap()).collect();
    let odd: Vec<i64> = gf_coefficients(&GF_ODD_NUMERATOR, 4).iter().map(|v| v.to_i64().unwrap()).collect();
    assert_eq!(even, [1, 5, 13, 37]);
    assert_eq!(odd, [2, 5, 16, 45]);
    let merged: Vec<i64> = propp_gf_values(7).iter().map(|v| v.to_i64().unwrap()).collect();
    assert_eq!(merged, [1, 2, 5, 5, 13, 16, 37, 45]);
}

#[test]
fn pillow_counts_match_transfer_matrix() {
    for q in [3, 5, 7] {
        for n in 1..=9 {
            let dp = count_tilings(&q_pillow(n, q).unwrap()).unwrap();
            assert_eq!(pillow_count(q, n).unwrap(), dp, "q={q} n={n}");
        }
    }
}

#[test]
fn conjecture_prefix_holds() {
    for n in 1..=16 {
        let v = check_propp(n).unwrap();
        assert!(v.divides() && v.is_perfect_square(), "{v}");
        let l = v.l.clone().unwrap();
        assert_eq!(&l * &l * &v.s, v.count);
    }
}

#[test]
fn small_pillow_decomposition() {
    let count = pillow_count(3, 4).unwrap();
    assert_eq!(count, big(117));
    let d = decompose(3, 4, &count).unwrap();
    assert_eq!((d.l.clone(), d.s.clone(), d.mode), (big(3), big(13), DecompositionMode::ConjectureGf));
    assert!(d.is_consistent());
}

#[test]
fn synthetic_violation_is_reported() {
    let v = ProppVerdict::new(3, big(12), big(5));
    assert!(!v.divides());
    assert!(!v.holds());
    assert!(v.to_string().contains("violation"));
    let v = ProppVerdict::new(3, big(10), big(5));
    assert!(v.divides() && !v.is_perfect_square() && !v.holds());
    let v = ProppVerdict::new(3, big(20), big(5));
    assert!(v.holds());
}

#[test]
fn rho_converges_for_three_pillows() {
    let series = rho_series(3, 40).unwrap();
    let last = series.ratios.iter().find(|p| p.n == 40).unwrap();
    let target = Rational::new(big(2890053636), big(1_000_000_000));
    let tol = Rational::new(big(1), big(10_000));
    assert!((&last.exact - &target).abs() <= tol, "{}", last.decimal);
    // Odd consecutive ratios approach tau, even ones 2 tau, so rho = 2 tau^2.
    let tau = &series.consecutive_odd.last().unwrap().exact;
    let two_tau = &series.consecutive_even.last().unwrap().exact;
    assert!((two_tau - tau * big(2)).abs() <= tol);
    assert!((tau * tau * big(2) - &target).abs() <= tol);
}

#[test]
fn diamond_ratios_are_exactly_two() {
    let series = rho_series(1, 12).unwrap();
    assert!(!series.ratios.is_empty());
    assert!(series.ratios.iter().all(|p| p.exact == Rational::from_integer(big(2))));
    assert!(series.ratios.iter().all(|p| p.decimal == "2.000000000"));
    for n in 1..=8 {
        let count = pillow_count(1, n).unwrap();
        let d = decompose(1, n as usize, &count).unwrap();
        assert!(d.is_consistent());
        assert_eq!(d.mode, DecompositionMode::DiamondFormula);
    }
}

#[test]
fn two_squares_exist_for_small_pillows() {
    for q in [3, 5] {
        for n in 1..=8 {
            let count = pillow_count(q, n).unwrap();
            let report = two_square_reps(&count, None).unwrap();
            assert!(!report.representations.is_empty(), "q={q} n={n} count={count}");
            for (a, b) in &report.representations {
                assert_eq!(big(*a as i64) * big(*a as i64) + big(*b as i64) * big(*b as i64), count);
            }
        }
    }
}

#[test]
fn two_squares_list_is_complete() {
    for n in 0u64..=2000 {
        let mut expected = Vec::new();
        for a in 0..=n.sqrt() {
            let rest = n - a * a;
            let b = rest.sqrt();
            if b * b == rest && a <= b {
                expected.push((a, b));
            }
        }
        let got = two_square_reps(&BigInteger::from(n), None).unwrap().representations;
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let a = pillow_counts(3, 8).unwrap();
    let b = pillow_counts(1, 5).unwrap();
    let mut rows = report_rows(&a).unwrap();
    rows.extend(report_rows(&b).unwrap());
    let csv = render_report(&rows, ReportFormat::Csv);
    rows.reverse();
    assert_eq!(render_report(&rows, ReportFormat::Csv), csv);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], REPORT_COLUMNS.join(","));
    assert!(lines[1].starts_with("1,1,"));
    assert_eq!(lines.len(), 1 + 8 + 5);
    assert!(lines.iter().any(|l| l.starts_with("3,4,117,3,13,conjecture-gf,")));
    assert_eq!(render_report(&[], ReportFormat::Csv), format!("{}\n", REPORT_COLUMNS.join(",")));

    let dir = tempdir();
    let path = dir.join("report.csv");
    emit_report(&rows, ReportFormat::Csv, &path).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), csv);
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("propp-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn decimal_rendering() {
    assert_eq!(decimal_digits(&Rational::new(big(2), big(3)), 10), "0.6666666667");
    assert_eq!(decimal_digits(&Rational::new(big(13), big(5)), 10), "2.600000000");
    assert_eq!(decimal_digits(&Rational::new(big(-1), big(8)), 3), "-0.125");
}

proptest! {
    #[test]
    fn squarefree_decomposition_recombines(n in 1u64..10_000_000_000) {
        let d = squarefree_decompose(&BigInteger::from(n)).unwrap();
        prop_assert!(d.is_consistent());
        prop_assert_eq!(&d.l * &d.l * &d.s, BigInteger::from(n));
        // s is squarefree.
        let s = d.s.to_u64().unwrap();
        let mut p = 2u64;
        while p * p <= s {
            prop_assert!(s % (p * p) != 0);
            p += 1;
        }
    }

    #[test]
    fn factorization_multiplies_back(a in 2u64..1_000_000_000, b in 2u64..1_000_000_000) {
        let n = BigUint::from(a) * BigUint::from(b);
        let f = factorize(&n, DEFAULT_RHO_ITERATIONS).unwrap();
        let mut product = BigUint::one();
        for (p, e) in &f {
            prop_assert!(is_probable_prime(p));
            product *= p.pow(*e);
        }
        prop_assert_eq!(product, n);
    }

    #[test]
    fn ratio_decimal_is_close(p in 1i64..1_000_000, q in 1i64..1_000_000) {
        let r = Rational::new(big(p), big(q));
        let text = decimal_digits(&r, RATIO_DIGITS);
        let approx: f64 = text.parse().unwrap();
        let exact = p as f64 / q as f64;
        prop_assert!(((approx - exact) / exact).abs() < 1e-9);
        prop_assert!(!text.contains('e'));
        prop_assert!(!r.is_zero());
    }
}
