//! Bounded search for integer solutions of `x^a + 2y^b + 4z^c = p`.
//!
//! One variable is solved for exactly: the first one with exponent 1 if
//! any, otherwise `z`. The other two range over `|v| <= B` (non-negative only
//! for even exponents) in the order `0, 1, -1, 2, -2, ...`, nested with the
//! earlier variable outermost. The first hit in that order is reported.
//! Exhaustion at `B` is not a proof of nonexistence.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, exact_root};
use crate::error::{Error, Result};

/// Largest accepted bound; keeps every intermediate within `i64`.
pub const MAX_BOUND: u64 = 1_000_000;

const COEFFS: [i64; 3] = [1, 2, 4];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Solution { x: i64, y: i64, z: i64 },
    Exhausted { bound: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub exponents: (u32, u32, u32),
    pub prime: u64,
    pub bound: u64,
    pub outcome: Outcome,
}

impl SearchReport {
    pub fn solution(&self) -> Option<(i64, i64, i64)> {
        match self.outcome {
            Outcome::Solution { x, y, z } => Some((x, y, z)),
            Outcome::Exhausted { .. } => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, Outcome::Exhausted { .. })
    }
}

/// Primes for which a triple's search was exhausted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub exponents: (u32, u32, u32),
    pub bound: u64,
    pub scanned: usize,
    pub exhausted: Vec<u64>,
}

/// `x^a + 2y^b + 4z^c` in `i128`.
pub fn evaluate(exponents: (u32, u32, u32), x: i64, y: i64, z: i64) -> i128 {
    let (a, b, c) = exponents;
    (x as i128).pow(a) + 2 * (y as i128).pow(b) + 4 * (z as i128).pow(c)
}

fn check_exponents(exponents: (u32, u32, u32)) -> Result<[u32; 3]> {
    let e = [exponents.0, exponents.1, exponents.2];
    if e.iter().any(|k| !(1..=3).contains(k)) {
        return Err(Error::Invalid(format!(
            "exponents must lie in {{1, 2, 3}}, got {exponents:?}"
        )));
    }
    Ok(e)
}

/// Candidate values for a bounded variable with exponent `e`.
fn candidates(e: u32, bound: u64) -> Vec<i64> {
    let b = bound as i64;
    if e % 2 == 0 {
        (0..=b).collect()
    } else {
        std::iter::once(0)
            .chain((1..=b).flat_map(|v| [v, -v]))
            .collect()
    }
}

/// Integer `v` with `v^e = target`, preferring the non-negative root.
fn solve_power(target: i64, e: u32) -> Option<i64> {
    match e {
        1 => Some(target),
        _ if target >= 0 => exact_root(target as u64, e).map(|v| v as i64),
        _ if e % 2 == 1 => exact_root(target.unsigned_abs(), e).map(|v| -(v as i64)),
        _ => None,
    }
}

pub fn search_triple(a: u32, b: u32, c: u32, p: u64, bound: u64) -> Result<SearchReport> {
    let exponents = (a, b, c);
    let e = check_exponents(exponents)?;
    if bound == 0 || bound > MAX_BOUND {
        return Err(Error::Invalid(format!("bound must lie in 1..={MAX_BOUND}, got {bound}")));
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let solved = e.iter().position(|&k| k == 1).unwrap_or(2);
    let free: Vec<usize> = (0..3).filter(|&i| i != solved).collect();
    let (i, j) = (free[0], free[1]);
    let outer = candidates(e[i], bound);
    let inner = candidates(e[j], bound);
    let term = |k: usize, v: i64| COEFFS[k] * v.pow(e[k]);

    for &u in &outer {
        let after_u = p as i64 - term(i, u);
        for &v in &inner {
            let rest = after_u - term(j, v);
            if rest % COEFFS[solved] != 0 {
                continue;
            }
            if let Some(w) = solve_power(rest / COEFFS[solved], e[solved]) {
                let mut xyz = [0i64; 3];
                xyz[i] = u;
                xyz[j] = v;
                xyz[solved] = w;
                debug_assert_eq!(evaluate(exponents, xyz[0], xyz[1], xyz[2]), p as i128);
                return Ok(SearchReport {
                    exponents,
                    prime: p,
                    bound,
                    outcome: Outcome::Solution { x: xyz[0], y: xyz[1], z: xyz[2] },
                });
            }
        }
    }
    Ok(SearchReport { exponents, prime: p, bound, outcome: Outcome::Exhausted { bound } })
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Searches every prime in `primes`, returning reports in input order.
/// `jobs = 0` uses the global rayon pool.
pub fn scan_reports(
    exponents: (u32, u32, u32),
    primes: &[u64],
    bound: u64,
    jobs: usize,
) -> Result<Vec<SearchReport>> {
    check_exponents(exponents)?;
    let (a, b, c) = exponents;
    with_pool(jobs, || {
        primes
            .par_iter()
            .map(|&p| search_triple(a, b, c, p, bound))
            .collect::<Result<Vec<_>>>()
    })?
}

/// Scans `primes` and lists the exhausted ones in ascending order.
pub fn scan_table(
    exponents: (u32, u32, u32),
    primes: &[u64],
    bound: u64,
    jobs: usize,
) -> Result<TableRow> {
    let reports = scan_reports(exponents, primes, bound, jobs)?;
    let mut exhausted: Vec<u64> = reports.iter().filter(|r| r.is_exhausted()).map(|r| r.prime).collect();
    exhausted.sort_unstable();
    Ok(TableRow { exponents, bound, scanned: reports.len(), exhausted })
}
