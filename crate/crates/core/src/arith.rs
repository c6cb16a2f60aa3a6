//! Exact 64-bit integer plumbing: primality, factorization, modular powers,
//! Euler's totient, primitive roots and the Chinese remainder theorem in both
//! the coprime and the general (compatibility-checked) form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    if (a | b) >> 32 == 0 {
        return (a * b) % m;
    }
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by square-and-multiply. `m` must be positive; `m = 1`
/// yields 0.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    assert!(m > 0, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Residue of a signed integer in `[0, m)`.
#[inline]
pub fn normalize(r: i64, m: u64) -> u64 {
    (r as i128).rem_euclid(m as i128) as u64
}

/// `base^exp mod m` for a signed base; the base is first normalized into `[0, m)`.
pub fn mod_pow(base: i64, exp: u64, m: u64) -> u64 {
    pow_mod(normalize(base, m), exp, m)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, or `None` on overflow.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

// Deterministic for every n < 3.3 * 10^24, which covers u64.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin primality test for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    // No prime factor up to 37.
    if n < 37 * 37 {
        return true;
    }
    // Bases 2, 3, 5, 7 are deterministic below 3 215 031 751.
    let bases: &[u64] = if n < 3_215_031_751 { &MR_BASES[..4] } else { &MR_BASES };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in bases {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime-power decomposition of a positive integer.
///
/// Factors are kept sorted by prime with positive exponents, so two
/// factorizations of the same value compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit prime powers, validating every
    /// invariant (primes strictly increasing, exponents positive, product fits).
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut value = 1u64;
        let mut last = 0u64;
        for &(p, e) in &factors {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if p <= last {
                return Err(Error::Invalid(format!(
                    "primes must be strictly increasing, got {p} after {last}"
                )));
            }
            if e == 0 {
                return Err(Error::Invalid(format!("exponent of {p} must be positive")));
            }
            let pe = p.checked_pow(e).ok_or(Error::Overflow("prime power"))?;
            value = value.checked_mul(pe).ok_or(Error::Overflow("factorization product"))?;
            last = p;
        }
        Ok(Self { value, factors })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Prime powers `p_i^{e_i}` in increasing prime order.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_square(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e % 2 == 0)
    }

    /// Euler's totient from the prime powers.
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

// 2*3*5 wheel: gaps between successive candidates coprime to 30, starting at 7.
const WHEEL_GAPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// Factorizes `n` by trial division on a 2-3-5 wheel. A large cofactor is
/// checked for primality after each division so large prime factors end the
/// loop early.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero("factorize input"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut take = |rest: &mut u64, d: u64| {
        let mut e = 0;
        while *rest % d == 0 {
            *rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
    };
    for d in [2, 3, 5] {
        take(&mut rest, d);
    }
    let mut d = 7u64;
    let mut gap = 0;
    // Below 2^20 plain trial division is cheaper than a primality test.
    let big_prime = |v: u64| v >= 1 << 20 && is_prime(v);
    let mut rest_is_prime = big_prime(rest);
    while rest > 1 && !rest_is_prime && d <= rest / d {
        let before = rest;
        take(&mut rest, d);
        if rest != before {
            rest_is_prime = big_prime(rest);
        }
        d += WHEEL_GAPS[gap];
        gap = (gap + 1) % WHEEL_GAPS.len();
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { value: n, factors })
}

/// Euler's totient `#{k in [1, n] : gcd(k, n) = 1}`.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.phi())
}

/// Floor of the real `k`-th root of `value`.
pub fn integer_root(value: u64, k: u32) -> u64 {
    assert!(k >= 1, "root index must be positive");
    if k == 1 || value < 2 {
        return value;
    }
    let mut guess = (value as f64).powf(1.0 / k as f64).round() as u64;
    // Float estimate is within one or two of the answer; settle it exactly.
    let pow_le = |x: u64| x.checked_pow(k).is_some_and(|v| v <= value);
    while guess > 0 && !pow_le(guess) {
        guess -= 1;
    }
    while pow_le(guess + 1) {
        guess += 1;
    }
    guess
}

/// Returns `Some(root)` when `value` is a perfect `k`-th power of a
/// non-negative integer.
pub fn exact_root(value: u64, k: u32) -> Option<u64> {
    let root = integer_root(value, k);
    (root.checked_pow(k) == Some(value)).then_some(root)
}

/// A system of congruences `x = a_i (mod n_i)` with residues normalized into
/// `[0, n_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    equations: Vec<(u64, u64)>,
}

impl CongruenceSystem {
    pub fn new<I>(equations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, u64)>,
    {
        let equations = equations
            .into_iter()
            .map(|(a, n)| {
                if n == 0 {
                    Err(Error::Zero("congruence modulus"))
                } else {
                    Ok((normalize(a, n), n))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { equations })
    }

    pub fn equations(&self) -> &[(u64, u64)] {
        &self.equations
    }
}

/// Merges `x = a1 (mod n1)` and `x = a2 (mod n2)` when compatible.
fn merge(a1: u64, n1: u64, a2: u64, n2: u64) -> Result<Option<(u64, u64)>> {
    let (g, s, _) = ext_gcd(n1 as i128, n2 as i128);
    let g = g as u64;
    let diff = a2 as i128 - a1 as i128;
    if diff % g as i128 != 0 {
        return Ok(None);
    }
    let lcm = lcm(n1, n2).ok_or(Error::Overflow("crt modulus"))?;
    // x = a1 + n1 * k with k = s * diff / g (mod n2 / g)
    let step = (n2 / g) as i128;
    let k = ((diff / g as i128).rem_euclid(step) as u128 * s.rem_euclid(step) as u128)
        % step as u128;
    let x = (a1 as u128 + n1 as u128 * k) % lcm as u128;
    Ok(Some((x as u64, lcm)))
}

/// Unique solution modulo the product of pairwise coprime moduli.
pub fn crt_coprime(system: &CongruenceSystem) -> Result<(u64, u64)> {
    let eqs = system.equations();
    for (i, &(_, a)) in eqs.iter().enumerate() {
        for &(_, b) in &eqs[i + 1..] {
            if gcd(a, b) != 1 {
                return Err(Error::NonCoprimeModuli { a, b });
            }
        }
    }
    let mut acc = (0u64, 1u64);
    for &(a, n) in eqs {
        acc = merge(acc.0, acc.1, a, n)?.expect("coprime moduli always merge");
    }
    Ok(acc)
}

/// Solution modulo the lcm of the moduli, or `None` when some pair violates
/// `a_i = a_j (mod gcd(n_i, n_j))`.
pub fn crt_general(system: &CongruenceSystem) -> Result<Option<(u64, u64)>> {
    let mut acc = (0u64, 1u64);
    for &(a, n) in system.equations() {
        match merge(acc.0, acc.1, a, n)? {
            Some(next) => acc = next,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// Smallest primitive root of the prime `p`. By convention `p = 2` returns 1,
/// the generator of the trivial group `U_2`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    let order = p - 1;
    let primes: Vec<u64> = factorize(order)?.primes().collect();
    let g = (2..p)
        .find(|&g| primes.iter().all(|&q| pow_mod(g, order / q, p) != 1))
        .expect("every prime has a primitive root");
    Ok(g)
}

/// All primes `<= limit`, by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut n = 2u64;
    while primes.len() < count {
        if is_prime(n) {
            primes.push(n);
        }
        n += 1;
    }
    primes
}
