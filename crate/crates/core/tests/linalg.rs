mod common;

use common::*;
use hamburger::linalg::{
    det, integer, invert_unitriangular, parse_rational, rational, schur_reduce, ExactMatrix, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn det_matches_cofactor_expansion_on_integer_corpus() {
    let mut r = rng(0x5eed);
    let mut checked = 0;
    for n in 0..=6 {
        for _ in 0..90 {
            let m = random_int_matrix(&mut r, n, -9, 9);
            assert_eq!(det(&m).unwrap(), cofactor_det(&rows_of(&m)), "{m}");
            checked += 1;
        }
    }
    assert!(checked >= 500);
}

#[test]
fn det_matches_cofactor_expansion_on_rational_and_sparse_inputs() {
    let mut r = rng(7);
    for _ in 0..300 {
        let n = r.gen_range(1..=5);
        let sparse = r.gen_bool(0.5);
        let m = ExactMatrix::from_fn(n, n, |_, _| {
            if sparse && r.gen_bool(0.6) {
                Rational::zero()
            } else {
                random_small_rational(&mut r)
            }
        });
        assert_eq!(det(&m).unwrap(), cofactor_det(&rows_of(&m)), "{m}");
    }
}

#[test]
fn huge_entries_survive() {
    let big: BigInt = BigInt::from(10).pow(120) + 7;
    let m = ExactMatrix::from_rows(&[vec![big.clone(), BigInt::from(1)], vec![BigInt::from(3), big.clone()]]).unwrap();
    let expected = Rational::from_integer(&big * &big - 3);
    assert_eq!(det(&m).unwrap(), expected);
    let text = m.to_text();
    assert_eq!(text.parse::<ExactMatrix>().unwrap(), m);
}

fn random_unitriangular(r: &mut TestRng, n: usize, upper: bool) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::one()
        } else if (i < j) == upper {
            integer(r.gen_range(-5..=5))
        } else {
            Rational::zero()
        }
    })
}

#[test]
fn unitriangular_inverse_is_integral_and_exact() {
    let mut r = rng(11);
    for _ in 0..100 {
        let n = r.gen_range(1..=7);
        let upper = r.gen_bool(0.5);
        let m = random_unitriangular(&mut r, n, upper);
        let inv = invert_unitriangular(&m).unwrap();
        assert!(inv.is_integer_valued());
        assert_eq!(m.matmul(&inv).unwrap(), ExactMatrix::identity(n));
        assert_eq!(inv.matmul(&m).unwrap(), ExactMatrix::identity(n));
    }
}

#[test]
fn schur_identity_on_random_blocks() {
    let mut r = rng(13);
    for _ in 0..200 {
        let k = r.gen_range(1..=5);
        let a = ExactMatrix::from_fn(k, k, |_, _| random_small_rational(&mut r));
        let b = random_unitriangular(&mut r, k, false);
        let d1 = ExactMatrix::diagonal((0..k).map(|_| random_small_rational(&mut r)).collect());
        let d2 = ExactMatrix::diagonal((0..k).map(|_| random_small_rational(&mut r)).collect());
        let full = ExactMatrix::block_assemble(&a, &d1, &d2.neg(), &b).unwrap();
        let reduced = schur_reduce(&a, &b, &d1, &d2).unwrap();
        assert_eq!(det(&full).unwrap(), det(&reduced).unwrap());
        assert_eq!(det(&full).unwrap(), cofactor_det(&rows_of(&full)));
    }
}

#[test]
fn exchange_conjugate_reverses_indices() {
    let mut r = rng(17);
    for n in 1..=6 {
        let m = random_int_matrix(&mut r, n, -20, 20);
        let c = m.exchange_conjugate().unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(c[(i, j)], m[(n - 1 - i, n - 1 - j)]);
            }
        }
        let j = ExactMatrix::exchange(n);
        assert_eq!(c, j.matmul(&m).unwrap().matmul(&j).unwrap());
        assert_eq!(c.exchange_conjugate().unwrap(), m);
    }
}

#[test]
fn smallest_hamburger_block() {
    let one = ExactMatrix::identity(1);
    let m = ExactMatrix::block_assemble(&one, &one, &one.neg(), &one).unwrap();
    assert_eq!(m, ExactMatrix::from_rows(&[vec![1, 1], vec![-1, 1]]).unwrap());
    assert_eq!(det(&m).unwrap(), integer(2));
    let i = ExactMatrix::identity(3);
    assert_eq!(schur_reduce(&i, &i, &i, &i).unwrap(), ExactMatrix::diagonal(vec![integer(2); 3]));
}

fn small_matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec((-6i64..=6, 1i64..=3), n * n).prop_map(move |v| {
            ExactMatrix::new(n, n, v.into_iter().map(|(p, q)| rational(p, q)).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn det_is_multiplicative(a in small_matrix(), seed in any::<u64>()) {
        let n = a.rows();
        let mut r = rng(seed);
        let b = ExactMatrix::from_fn(n, n, |_, _| integer(r.gen_range(-4..=4)));
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn det_is_transpose_invariant(a in small_matrix()) {
        prop_assert_eq!(det(&a).unwrap(), det(&a.transpose()).unwrap());
    }

    #[test]
    fn text_format_round_trips(a in small_matrix()) {
        prop_assert_eq!(a.to_text().parse::<ExactMatrix>().unwrap(), a);
    }

    #[test]
    fn rationals_parse_to_lowest_terms(p in -1000i64..1000, q in 1i64..1000) {
        let r = parse_rational(&format!("{p}/{q}")).unwrap();
        prop_assert_eq!(&r, &rational(p, q));
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
}
