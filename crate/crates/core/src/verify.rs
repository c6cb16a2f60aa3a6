//! Named invariant suites, runnable from the command line.
//!
//! Each suite compares a fast routine against an independent route (brute
//! force, a second algorithm, or an algebraic identity) and records every
//! disagreement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, primes_up_to};
use crate::brute;
use crate::error::{Error, Result};
use crate::norm::{adjugate, build_matrix, det_norm, det_norm_mod_p, poly_mul_mod, MonicPoly, PolyMod, SquareMatrix};
use crate::orders::{order_bruteforce, order_composite, order_fast, order_prime_power, order_two_power, power_sum_mod};
use crate::quadratic::{build_l4q, half_order_subgroups_containing_minus1, legendre, legendre_general};
use crate::residues::{
    construct_norm_p, find_nontrivial_zero, has_nth_root, is_irreducible_fp, represent_binary, within_root_bound,
};
use crate::search::{evaluate, search_triple};

pub const SUITES: &[&str] = &[
    "modq",
    "uniqueness",
    "orders",
    "power-sum",
    "weaker-a",
    "weaker-c",
    "d2",
    "norm-algebra",
    "irreducibility",
    "search",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    checked: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(describe());
        }
    }

    fn finish(self, name: &str) -> SuiteResult {
        SuiteResult { name: name.to_string(), checked: self.checked, failures: self.failures }
    }
}

fn odd_primes(limit: u64) -> impl Iterator<Item = u64> {
    primes_up_to(limit).into_iter().filter(|&p| p > 2)
}

/// Runs the suite called `name`. `seed` drives the randomized suites.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new();
    match name {
        "modq" => {
            for q in primes_up_to(50) {
                let l = build_l4q(q)?;
                for p in odd_primes(10_000).filter(|&p| p != q) {
                    let lhs = legendre(q as i64, p)? == 1;
                    t.check(lhs == l.contains(p % (4 * q)), || format!("q={q} p={p}"));
                }
            }
        }
        "uniqueness" => {
            for q in primes_up_to(50) {
                let subs = half_order_subgroups_containing_minus1(4 * q)?;
                t.check(subs.len() == 1 && subs[0] == build_l4q(q)?, || format!("q={q}: {} subgroups", subs.len()));
            }
        }
        "orders" => {
            for m in 2..=2000u64 {
                let f = factorize(m)?;
                for r in 1..m as i64 {
                    if gcd(r as u64, m) != 1 {
                        continue;
                    }
                    let b = order_bruteforce(r, m)?;
                    t.check(order_fast(r, m)? == b, || format!("order_fast({r},{m})"));
                    t.check(order_composite(r, &f)? == b, || format!("order_composite({r},{m})"));
                }
            }
            for p in odd_primes(100) {
                for e in 1..=4u32 {
                    let pe = p.pow(e);
                    for r in 2..(p as i64).min(40) {
                        if r as u64 % p != 0 {
                            let b = order_bruteforce(r, pe)?;
                            t.check(order_prime_power(r, p, e)? == b, || format!("order_prime_power({r},{p},{e})"));
                        }
                    }
                }
            }
            for e in 2..=12u32 {
                for r in (3..200i64).step_by(2) {
                    let b = order_bruteforce(r, 1 << e)?;
                    t.check(order_two_power(r, e)? == b, || format!("order_two_power({r},{e})"));
                }
            }
        }
        "power-sum" => {
            for p in primes_up_to(100) {
                for n in 1..=300u64 {
                    let expected = if n % (p - 1) == 0 { p - 1 } else { 0 };
                    t.check(power_sum_mod(n, p)? == expected, || format!("n={n} p={p}"));
                }
            }
        }
        "weaker-a" => {
            for p in [3u64, 5, 7, 11, 13] {
                for n in [2usize, 3] {
                    for r in 1..p as i64 {
                        let irreducible = is_irreducible_fp(n as u64, r, p)?;
                        let zero = brute::nontrivial_zero_scan(n, r, p).is_some();
                        t.check(irreducible != zero, || format!("n={n} r={r} p={p}"));
                    }
                }
            }
        }
        "weaker-c" => {
            for p in primes_up_to(1000) {
                for n in [2usize, 3, 4] {
                    for r in [2i64, 3, 5, -1, -2] {
                        if r.unsigned_abs() % p == 0 || !has_nth_root(r, n as u64, p)? {
                            continue;
                        }
                        let ok = match find_nontrivial_zero(r, n, p)? {
                            Some(sol) => {
                                sol.xbar.iter().any(|&x| x != 0)
                                    && within_root_bound(&sol.xbar, p)
                                    && det_norm_mod_p(&sol.xbar, r, p)? == 0
                            }
                            None => false,
                        };
                        t.check(ok, || format!("n={n} r={r} p={p}"));
                    }
                }
            }
        }
        "d2" => {
            for p in odd_primes(10_000) {
                for r in [-2i64, -1, 2] {
                    if legendre_general(r, p)? == 1 {
                        let (x0, x1) = construct_norm_p(r, p)?;
                        t.check(x0 * x0 - r * x1 * x1 == p as i64, || format!("r={r} p={p}"));
                    } else {
                        t.check(represent_binary(r, p as i64, 100).is_none(), || format!("r={r} p={p} represented"));
                    }
                }
            }
        }
        "norm-algebra" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..500 {
                let n = rng.gen_range(1..=5usize);
                let r: i64 = rng.gen_range(-10..=10);
                let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-20..=20)).collect();
                let y: Vec<i64> = (0..n).map(|_| rng.gen_range(-20..=20)).collect();
                let q = MonicPoly::binomial(n, r)?;
                let (px, py) = (PolyMod::from_i64(q.clone(), &x), PolyMod::from_i64(q, &y));
                let prod = poly_mul_mod(&px, &py)?;
                let (mx, my) = (build_matrix(&x, r)?, build_matrix(&y, r)?);
                let mxy = mx.mul(&my)?;
                t.check(mxy == prod.matrix(), || format!("homomorphism x={x:?} y={y:?} r={r}"));
                t.check(
                    prod.norm() == det_norm(&x, r)? * det_norm(&y, r)?,
                    || format!("multiplicativity x={x:?} y={y:?} r={r}"),
                );
                let adj = adjugate(&mx);
                let scaled = SquareMatrix::scaled_identity(n, &mx.det());
                t.check(
                    adj.is_multiplication_matrix() && mx.matrix().mul(adj.matrix()) == scaled,
                    || format!("adjugate x={x:?} r={r}"),
                );
            }
        }
        "irreducibility" => {
            for p in primes_up_to(31) {
                for n in 1..=6usize {
                    for r in 0..p as i64 {
                        let expected = brute::fp_poly_is_irreducible(&brute::binomial_fp(n, r, p), p);
                        t.check(is_irreducible_fp(n as u64, r, p)? == expected, || format!("n={n} r={r} p={p}"));
                    }
                }
            }
            for p in [7u64, 17, 23, 31, 41, 47, 71] {
                t.check(
                    has_nth_root(2, 2, p)? && !has_nth_root(2, p - 1, p)? && !is_irreducible_fp(p - 1, 2, p)?,
                    || format!("p={p}"),
                );
            }
        }
        "search" => {
            for p in primes_up_to(1000) {
                for exps in [(2, 3, 3), (3, 2, 3), (3, 3, 2), (1, 2, 2)] {
                    let rep = search_triple(exps.0, exps.1, exps.2, p, 30)?;
                    t.check(rep == search_triple(exps.0, exps.1, exps.2, p, 30)?, || format!("{exps:?} p={p} nondeterministic"));
                    if let Some((x, y, z)) = rep.solution() {
                        t.check(evaluate(exps, x, y, z) == p as i128, || format!("{exps:?} p={p} bad solution"));
                    }
                }
            }
        }
        other => {
            return Err(Error::Invalid(format!("unknown suite {other:?}; known: {}", SUITES.join(", "))));
        }
    }
    Ok(t.finish(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for name in ["uniqueness", "power-sum", "weaker-a", "norm-algebra"] {
            let res = run_suite(name, 7).unwrap();
            assert!(res.passed(), "{name}: {:?}", res.failures);
            assert!(res.checked > 0);
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", 0).is_err());
    }
}
