//! `n`-th power residues modulo a prime and the norm forms `D^r_n`.
//!
//! The solvers here tie three things together: whether `x^n = r (mod p)` is
//! solvable (generalized Euler criterion), whether `x^n - r` is irreducible
//! over `F_p` or `Q`, and whether `D^r_n(x) = 0 (mod p)` has a nonzero,
//! coordinate-bounded solution.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{self, exact_root, factorize, gcd, integer_root, mul_mod, normalize, pow_mod};
use crate::brute;
use crate::error::{Error, Result};
use crate::norm::{det_norm, det_norm_mod_p};
use crate::orders::order_fast;
use crate::quadratic::legendre_general;

/// Largest `p^n` for which tuples of `F_p^n` are enumerated exhaustively.
pub const EXHAUSTIVE_TUPLE_LIMIT: u64 = 10_000_000;

/// A nonzero integer tuple with `D^r_n(xbar) = 0 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueSolution {
    pub xbar: Vec<i64>,
    pub p: u64,
    /// Every coordinate satisfies `|x_i| < p^{1/n}`.
    pub bound_ok: bool,
}

fn check_prime_not_dividing(r: i64, p: u64) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let r0 = normalize(r, p);
    if r0 == 0 {
        return Err(Error::NotCoprime { r, m: p });
    }
    Ok(r0)
}

/// `|x_i|^n < p` for every coordinate, i.e. `-p^{1/n} < x_i < p^{1/n}`,
/// decided in integers.
pub fn within_root_bound(xbar: &[i64], p: u64) -> bool {
    let n = xbar.len() as u32;
    xbar.iter()
        .all(|&x| x.unsigned_abs().checked_pow(n).is_some_and(|v| v < p))
}

/// Generalized Euler criterion: `x^n = r (mod p)` is solvable iff
/// `r^{(p-1)/gcd(p-1, n)} = 1 (mod p)`.
pub fn has_nth_root(r: i64, n: u64, p: u64) -> Result<bool> {
    let r0 = check_prime_not_dividing(r, p)?;
    if n == 0 {
        return Err(Error::Zero("root degree n"));
    }
    Ok(pow_mod(r0, (p - 1) / gcd(p - 1, n), p) == 1)
}

/// Smallest `t` in `[1, p)` with `t^n = r (mod p)`, by linear scan.
pub fn find_nth_root(r: i64, n: u64, p: u64) -> Result<Option<u64>> {
    if !has_nth_root(r, n, p)? {
        return Ok(None);
    }
    let r0 = normalize(r, p);
    Ok((1..p).find(|&t| pow_mod(t, n, p) == r0))
}

/// Full solution set of `x^n = r (mod p)`: one root times every `n`-th root
/// of unity. Sorted; when nonempty it has `gcd(n, p-1)` elements.
pub fn all_nth_roots(r: i64, n: u64, p: u64) -> Result<Vec<u64>> {
    let Some(t) = find_nth_root(r, n, p)? else {
        return Ok(Vec::new());
    };
    let mut roots: Vec<u64> = crate::orders::nth_roots_of_unity(n, p)?
        .into_iter()
        .map(|w| mul_mod(t, w, p))
        .collect();
    roots.sort_unstable();
    Ok(roots)
}

/// `n_p(r) = (p-1) / O_p(r)`: the largest `n | p-1` such that `r` is an
/// `n`-th power modulo `p`.
pub fn co_order(r: i64, p: u64) -> Result<u64> {
    check_prime_not_dividing(r, p)?;
    if p == 2 {
        return Ok(1);
    }
    Ok((p - 1) / order_fast(r, p)?)
}

/// Irreducibility of `x^n - r` in `F_p[x]`.
///
/// Reducible iff some prime `q | n` has `r` as a `q`-th power, or `4 | n` and
/// `4x^4 + r = 0` is solvable. The second condition can only matter when
/// `p = 3 (mod 4)`, and is then checked by scanning `F_p`.
pub fn is_irreducible_fp(n: u64, r: i64, p: u64) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::Zero("degree n"));
    }
    if n == 1 {
        return Ok(true);
    }
    let r0 = normalize(r, p);
    if r0 == 0 {
        return Ok(false);
    }
    for q in factorize(n)?.primes() {
        if has_nth_root(r0 as i64, q, p)? {
            return Ok(false);
        }
    }
    if n % 4 == 0 && p % 4 == 3 {
        let four_x4_plus_r = |x: u64| (mul_mod(4, pow_mod(x, 4, p), p) + r0) % p;
        if (0..p).any(|x| four_x4_plus_r(x) == 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer `q`-th root of a signed integer, if one exists.
fn integer_qth_root(r: i64, q: u32) -> Option<i64> {
    let root = exact_root(r.unsigned_abs(), q)? as i64;
    if r >= 0 {
        Some(root)
    } else if q % 2 == 1 {
        Some(-root)
    } else {
        None
    }
}

/// Irreducibility of `x^n - r` in `Q[x]` for a nonzero integer `r`.
///
/// Reducible iff some prime `q | n` makes `r` a perfect `q`-th power, or
/// `4 | n` and `-r/4` is a fourth power (for integer `r` a rational solution
/// of `4a^4 + r = 0` is necessarily integral).
pub fn is_irreducible_q(n: u64, r: i64) -> Result<bool> {
    if r == 0 {
        return Err(Error::Zero("r"));
    }
    if n == 0 {
        return Err(Error::Zero("degree n"));
    }
    for q in factorize(n)?.primes() {
        if q <= 64 && integer_qth_root(r, q as u32).is_some() {
            return Ok(false);
        }
        // |r| < 2^64 has no q-th root with q > 64 other than +-1.
        if q > 64 && (r == 1 || (r == -1 && q % 2 == 1)) {
            return Ok(false);
        }
    }
    if n % 4 == 0 && r < 0 {
        let m = r.unsigned_abs();
        if m % 4 == 0 && exact_root(m / 4, 4).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn centered(v: i64, p: u64) -> i64 {
    if v as u64 > p / 2 {
        v - p as i64
    } else {
        v
    }
}

/// Nonzero tuple with `D^r_n(x) = 0 (mod p)`.
///
/// When `x^n = r` has a root `t`, tuples of `{0, ..., floor(p^{1/n})}^n` are
/// enumerated lexicographically and hashed by `sum x_i t^i mod p`; there are
/// more than `p` of them, so a collision occurs and the difference of the
/// colliding pair is returned, with every `|x_i| < p^{1/n}`.
///
/// Without a root: if `x^n - r` is irreducible over `F_p` no nonzero zero
/// exists and `None` is returned. Otherwise the box `|x_i| <= p^{1/n}` is
/// scanned, then all of `F_p^n` when `p^n` is at most
/// [`EXHAUSTIVE_TUPLE_LIMIT`]; `None` if both come up empty.
pub fn find_nontrivial_zero(r: i64, n: usize, p: u64) -> Result<Option<ResidueSolution>> {
    check_prime_not_dividing(r, p)?;
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    let side = integer_root(p, n as u32) + 1;
    let Some(t) = find_nth_root(r, n as u64, p)? else {
        return Ok(fallback_zero(r, n, p, side - 1));
    };

    let powers: Vec<u64> = (0..n as u64).map(|i| pow_mod(t, i, p)).collect();
    let mut seen: HashMap<u64, Vec<i64>> = HashMap::with_capacity(p as usize + 1);
    let mut result = None;
    brute::for_each_tuple(n, side, |tuple| {
        let key = tuple
            .iter()
            .zip(&powers)
            .fold(0, |acc, (&x, &w)| (acc + mul_mod(x as u64, w, p)) % p);
        match seen.get(&key) {
            Some(prev) => {
                let diff: Vec<i64> = tuple.iter().zip(prev).map(|(a, b)| a - b).collect();
                result = Some(diff);
                true
            }
            None => {
                seen.insert(key, tuple.to_vec());
                false
            }
        }
    });
    let xbar = result.expect("more tuples than residues forces a collision");
    debug_assert_eq!(det_norm_mod_p(&xbar, r, p), Ok(0));
    let bound_ok = within_root_bound(&xbar, p);
    Ok(Some(ResidueSolution { xbar, p, bound_ok }))
}

fn fallback_zero(r: i64, n: usize, p: u64, b: u64) -> Option<ResidueSolution> {
    if is_irreducible_fp(n as u64, r, p).expect("arguments already validated") {
        return None;
    }
    let width = 2 * b + 1;
    let mut found = None;
    brute::for_each_tuple(n, width, |t| {
        let x: Vec<i64> = t.iter().map(|&v| v - b as i64).collect();
        if x.iter().any(|&v| v != 0) && det_norm_mod_p(&x, r, p) == Ok(0) {
            found = Some(x);
            true
        } else {
            false
        }
    });
    if found.is_none() && (p as u128).pow(n as u32) <= EXHAUSTIVE_TUPLE_LIMIT as u128 {
        found = brute::nontrivial_zero_scan(n, r, p)
            .map(|t| t.into_iter().map(|v| centered(v, p)).collect());
    }
    found.map(|xbar| ResidueSolution {
        bound_ok: within_root_bound(&xbar, p),
        xbar,
        p,
    })
}

/// For a prime exponent `q`, solvability of `x^q = r (mod p)` must agree with
/// existence of a nonzero zero of `D^r_q` modulo `p`. Both sides are
/// evaluated independently: the Euler criterion on the left, an exhaustive
/// tuple scan on the right when `p^q <= 10^7` (the collision solver
/// otherwise). Returns whether they agree.
pub fn check_prime_exponent_equivalence(q: u64, r: i64, p: u64) -> Result<bool> {
    if !arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let left = has_nth_root(r, q, p)?;
    let small = (p as u128)
        .checked_pow(q as u32)
        .is_some_and(|v| v <= EXHAUSTIVE_TUPLE_LIMIT as u128);
    let right = if small {
        brute::nontrivial_zero_scan(q as usize, r, p).is_some()
    } else {
        find_nontrivial_zero(r, q as usize, p)?.is_some()
    };
    Ok(left == right)
}

/// Whether `x^n - r` is irreducible over `F_p`, in which case
/// `D^r_n(x) = p` has no integer solution.
pub fn norm_equals_p_obstruction(n: u64, r: i64, p: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    is_irreducible_fp(n, r, p)
}

/// Integers `(x0, x1)` with `x0^2 - r x1^2 = p`, for `r` in `{-2, -1, 2}` and
/// an odd prime `p` modulo which `r` is a square.
///
/// A bounded zero `(a, b)` of `D^r_2` modulo `p` is sharpened into an exact
/// representation: for `r = 2`, `a^2 - 2b^2 = -p` and multiplying by the unit
/// `1 + u` gives `(a + 2b, a + b)`; for `r = -1`, `a^2 + b^2 = p` directly;
/// for `r = -2`, `a^2 + 2b^2` is `p` or `2p`, and in the latter case `a` is
/// even and `(b, a/2)` works.
pub fn construct_norm_p(r: i64, p: u64) -> Result<(i64, i64)> {
    if ![-2, -1, 2].contains(&r) {
        return Err(Error::Invalid(format!("r must be one of -2, -1, 2, got {r}")));
    }
    if legendre_general(r, p)? != 1 {
        return Err(Error::Invalid(format!("{r} is not a quadratic residue modulo {p}")));
    }
    let sol = find_nontrivial_zero(r, 2, p)?.expect("a square root of r exists");
    let (a, b) = (sol.xbar[0], sol.xbar[1]);
    let p_i = p as i64;
    let d = a * a - r * b * b;
    let (x0, x1) = match (r, d) {
        (2, d) if d == -p_i => (a + 2 * b, a + b),
        (_, d) if d == p_i => (a, b),
        (-2, d) if d == 2 * p_i && a % 2 == 0 => (b, a / 2),
        _ => {
            return Err(Error::Invalid(format!(
                "unexpected norm {d} for bounded zero ({a}, {b}) modulo {p}"
            )))
        }
    };
    let (x0, x1) = (x0.abs(), x1.abs());
    debug_assert_eq!(x0 * x0 - r * x1 * x1, p_i);
    Ok((x0, x1))
}

/// First `(x0, x1)` with `0 <= x0, x1 <= bound` and `x0^2 - r x1^2 = target`,
/// scanning `x1` upward.
pub fn represent_binary(r: i64, target: i64, bound: u64) -> Option<(i64, i64)> {
    (0..=bound as i64).find_map(|x1| {
        let v = target as i128 + r as i128 * (x1 as i128) * (x1 as i128);
        if v < 0 || v > u64::MAX as i128 {
            return None;
        }
        let x0 = exact_root(v as u64, 2)?;
        (x0 <= bound).then_some((x0 as i64, x1))
    })
}

/// First nonzero tuple in `[-bound, bound]^n` (lexicographic) with
/// `D^r_n(x) = target` exactly.
pub fn find_norm_value(n: usize, r: i64, target: i64, bound: u64) -> Option<Vec<i64>> {
    let target = BigInt::from(target);
    let width = 2 * bound + 1;
    let mut found = None;
    brute::for_each_tuple(n, width, |t| {
        let x: Vec<i64> = t.iter().map(|&v| v - bound as i64).collect();
        if x.iter().all(|&v| v == 0) {
            return false;
        }
        if det_norm(&x, r).expect("n >= 1") == target {
            found = Some(x);
            true
        } else {
            false
        }
    });
    found
}

/// Nonzero integer tuple with `D^r_n(x) = 0`, searched in `[-bound, bound]^n`.
pub fn find_integer_zero(n: usize, r: i64, bound: u64) -> Option<Vec<i64>> {
    find_norm_value(n, r, 0, bound)
}

/// One row of the `D^r_2(x, y) = p` survey.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormSurveyRow {
    pub p: u64,
    pub r: i64,
    pub residue: bool,
    pub p_mod_4: u64,
    pub representation: Option<(i64, i64)>,
}

/// Collects, for each odd prime `p` not dividing `r`, whether `r` is a square
/// modulo `p`, the class of `p` modulo 4, and a representation
/// `x^2 - r y^2 = p` with `0 <= x, y <= bound` if one was found. Nothing is
/// asserted about the pattern.
pub fn norm_survey(r: i64, primes: &[u64], bound: u64) -> Result<Vec<NormSurveyRow>> {
    primes
        .iter()
        .filter(|&&p| p > 2 && normalize(r, p) != 0)
        .map(|&p| {
            Ok(NormSurveyRow {
                p,
                r,
                residue: legendre_general(r, p)? == 1,
                p_mod_4: p % 4,
                representation: represent_binary(r, p as i64, bound),
            })
        })
        .collect()
}
