//! Integer factorization for square decompositions: trial division, then
//! Miller-Rabin and Pollard-Brent with an iteration cap.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const TRIAL_DIVISION_LIMIT: u32 = 1_000_000;
pub const DEFAULT_RHO_ITERATIONS: u64 = 2_000_000;

const WITNESSES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

fn small_primes(limit: u32) -> Vec<u32> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = Vec::new();
    for p in 2..=limit as usize {
        if sieve[p] {
            out.push(p as u32);
            let mut m = p * p;
            while m <= limit as usize {
                sieve[m] = false;
                m += p;
            }
        }
    }
    out
}

/// Strong probable-prime test to the first twenty prime bases. Deterministic
/// below 3.3e24; beyond that a composite passing all bases is not known.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in &WITNESSES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'outer: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// One nontrivial factor of the odd composite `n`, or `None` when the
/// iteration budget runs out.
fn pollard_brent(n: &BigUint, max_iterations: u64) -> Option<BigUint> {
    let mut budget = max_iterations;
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut y, m) = (BigUint::from(2u32), 128u64);
        let (mut g, mut r, mut q) = (BigUint::one(), 1u64, BigUint::one());
        let (mut x, mut ys) = (BigUint::zero(), BigUint::zero());
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = m.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += steps;
                budget = budget.checked_sub(steps)?;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                budget = budget.checked_sub(1)?;
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
    }
    None
}

/// Prime factorization as a map prime -> exponent.
pub fn factorize(n: &BigUint, max_rho_iterations: u64) -> Result<BTreeMap<BigUint, u32>> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut out = BTreeMap::new();
    let mut rest = n.clone();
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    for &p in PRIMES.get_or_init(|| small_primes(TRIAL_DIVISION_LIMIT)) {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            *out.entry(rest.clone()).or_insert(0) += 1;
            rest = BigUint::one();
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            *out.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    let mut stack = vec![(rest, 1u32)];
    while let Some((m, mult)) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += mult;
            continue;
        }
        let root = m.sqrt();
        if &root * &root == m {
            stack.push((root, mult * 2));
            continue;
        }
        let d = pollard_brent(&m, max_rho_iterations).ok_or_else(|| Error::SizeBound {
            what: "Pollard-rho iterations",
            actual: max_rho_iterations as u128 + 1,
            limit: max_rho_iterations as u128,
        })?;
        let e = &m / &d;
        stack.push((d, mult));
        stack.push((e, mult));
    }
    Ok(out)
}

/// `(l, s)` with `n = l^2 s`, `s` squarefree.
pub fn square_split(n: &BigUint, max_rho_iterations: u64) -> Result<(BigUint, BigUint)> {
    let mut l = BigUint::one();
    let mut s = BigUint::one();
    for (p, e) in factorize(n, max_rho_iterations)? {
        l *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
    }
    Ok((l, s))
}
