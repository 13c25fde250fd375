//! Timing of the full `2n x 2n` hamburger determinant against the reduced
//! `n x n` one for pillows.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{build_matrix, HamburgerMatrix};
use crate::linalg::Rational;
use crate::region::{build_digraph, q_pillow};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchmarkRecord {
    pub task: String,
    pub order: usize,
    pub wall: Duration,
    /// SHA-256 of the decimal value.
    pub digest: String,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub q: i64,
    pub n: usize,
    pub full: BenchmarkRecord,
    pub reduced: BenchmarkRecord,
}

pub fn digest(value: &Rational) -> String {
    Sha256::digest(value.to_string().as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}

/// Runs `f` once to warm up, then times a second run.
fn timed(task: String, order: usize, f: impl Fn() -> Result<Rational>) -> Result<BenchmarkRecord> {
    f()?;
    let start = Instant::now();
    let value = f()?;
    let wall = start.elapsed();
    Ok(BenchmarkRecord {
        task,
        order,
        wall,
        digest: digest(&value),
        value,
    })
}

pub fn pillow_matrix(q: i64, n: usize) -> Result<HamburgerMatrix> {
    build_matrix(&build_digraph(&q_pillow(n as i64, q)?)?)
}

/// Both determinants of the `q`-pillow of order `n`; fails if they differ.
pub fn bench_pillow(q: i64, n: usize) -> Result<BenchRow> {
    let m = pillow_matrix(q, n)?;
    let full = timed(format!("AP{q}_{n} full"), 2 * m.k(), || m.det())?;
    let reduced = timed(format!("AP{q}_{n} reduced"), m.k(), || m.reduced_det())?;
    if full.digest != reduced.digest {
        return Err(Error::Invariant(format!(
            "full determinant {} differs from reduced {}",
            full.value, reduced.value
        )));
    }
    Ok(BenchRow { q, n, full, reduced })
}

/// Tab-separated table. With `timings = false` the wall-time columns are
/// left out so the output is reproducible.
pub fn bench_table(rows: &[BenchRow], timings: bool) -> String {
    let mut out = String::new();
    if timings {
        out.push_str("q\tn\tfull_order\tfull_ms\treduced_order\treduced_ms\tvalue\tdigest\n");
    } else {
        out.push_str("q\tn\tfull_order\treduced_order\tvalue\tdigest\n");
    }
    for r in rows {
        let ms = |d: Duration| format!("{:.3}", d.as_secs_f64() * 1e3);
        if timings {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.q,
                r.n,
                r.full.order,
                ms(r.full.wall),
                r.reduced.order,
                ms(r.reduced.wall),
                r.reduced.value,
                r.reduced.digest
            )
        } else {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.q, r.n, r.full.order, r.reduced.order, r.reduced.value, r.reduced.digest
            )
        }
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::integer;

    #[test]
    fn small_rows_agree() {
        let r = bench_pillow(3, 1).unwrap();
        assert_eq!(r.full.order, 2);
        assert_eq!(r.reduced.value, integer(2));
        let r = bench_pillow(3, 6).unwrap();
        assert_eq!(r.reduced.value, integer(13357));
        assert_eq!(r.full.digest, r.reduced.digest);
        let t = bench_table(&[r], false);
        assert_eq!(t.lines().nth(1).unwrap().split('\t').nth(4), Some("13357"));
    }

    #[test]
    fn digest_is_sha256_of_decimal() {
        assert_eq!(
            digest(&integer(17)),
            "4523540f1504cd17100c4835e85b7eefd49911580f8efff0599a8f283be6b9e3"
        );
    }
}
