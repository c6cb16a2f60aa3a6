//! Multiplicative orders `O_m(r)` and co-orders `n_m(r) = phi(m) / O_m(r)`.
//!
//! Orders modulo composites are assembled from prime-power orders, which in
//! turn lift from the order modulo `p` (or modulo 4 for `p = 2`): once the
//! power `r^{O_p(r)}` stops being `1` modulo `p^{e0+1}`, each extra factor of
//! `p` in the modulus multiplies the order by `p`.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::arith::{self, factorize, gcd, mod_pow, mul_mod, normalize, pow_mod, Factorization};
use crate::error::{Error, Result};

fn check_unit(r: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Invalid(format!("modulus must be at least 2, got {m}")));
    }
    let r0 = normalize(r, m);
    if gcd(r0, m) != 1 {
        return Err(Error::NotCoprime { r, m });
    }
    Ok(r0)
}

/// Least `n >= 1` with `r^n = 1 (mod m)`, by repeated multiplication.
pub fn order_bruteforce(r: i64, m: u64) -> Result<u64> {
    let r0 = check_unit(r, m)?;
    let mut x = r0;
    let mut n = 1;
    while x != 1 {
        x = mul_mod(x, r0, m);
        n += 1;
    }
    Ok(n)
}

/// Order of a unit `r0` modulo `m`, given the factorization of a multiple
/// `exponent` of that order.
fn strip_exponent(r0: u64, m: u64, exponent: u64, exponent_fact: &Factorization) -> u64 {
    let mut order = exponent;
    for &(q, e) in exponent_fact.factors() {
        for _ in 0..e {
            if pow_mod(r0, order / q, m) == 1 {
                order /= q;
            } else {
                break;
            }
        }
    }
    order
}

/// Order computed by factoring `phi(m)` and stripping each prime factor while
/// the power stays congruent to 1.
pub fn order_fast(r: i64, m: u64) -> Result<u64> {
    let r0 = check_unit(r, m)?;
    let phi = arith::euler_phi(m)?;
    Ok(strip_exponent(r0, m, phi, &factorize(phi)?))
}

/// `O_{p^e}(r)` for an odd prime `p` and `r != +-1`: equals `O_p(r)` up to
/// the largest `e0` with `O_{p^{e0}}(r) = O_p(r)`, and `p^{e - e0} O_p(r)`
/// beyond it. The search for `e0` never probes past `e`.
pub fn order_prime_power(r: i64, p: u64, e: u32) -> Result<u64> {
    if p == 2 {
        return Err(Error::Invalid(
            "p = 2 is handled by order_two_power".to_string(),
        ));
    }
    if !arith::is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if e == 0 {
        return Err(Error::Zero("exponent e"));
    }
    if r == 1 || r == -1 {
        return Err(Error::Invalid(format!("r = {r} is excluded; its order is trivial")));
    }
    check_unit(r, p)?;
    let pe = p.checked_pow(e).ok_or(Error::Overflow("p^e"))?;
    Ok(lift_order(r, p, e, order_fast(r, p)?, 1, pe))
}

/// Shared lifting step: `base_order` is the order modulo `p^{base_exp}`.
fn lift_order(r: i64, p: u64, e: u32, base_order: u64, base_exp: u32, pe: u64) -> u64 {
    let mut e0 = base_exp;
    let mut modulus = p.pow(base_exp);
    while e0 < e {
        modulus *= p;
        if mod_pow(r, base_order, modulus) != 1 {
            break;
        }
        e0 += 1;
    }
    debug_assert!(pe == p.pow(e));
    if e <= e0 {
        base_order
    } else {
        p.pow(e - e0) * base_order
    }
}

/// `O_{2^e}(r)` for odd `r != +-1` and `e >= 2`, anchored at `O_4(r)`.
pub fn order_two_power(r: i64, e: u32) -> Result<u64> {
    if r % 2 == 0 {
        return Err(Error::Invalid(format!("r = {r} must be odd")));
    }
    if r == 1 || r == -1 {
        return Err(Error::Invalid(format!("r = {r} is excluded; its order is trivial")));
    }
    if e < 2 {
        return Err(Error::Invalid(format!("exponent must be at least 2, got {e}")));
    }
    let pe = 2u64.checked_pow(e).ok_or(Error::Overflow("2^e"))?;
    let o4 = if normalize(r, 4) == 1 { 1 } else { 2 };
    Ok(lift_order(r, 2, e, o4, 2, pe))
}

/// Order modulo a single prime power, dispatching residues `+-1` directly and
/// everything else to the lifting theorems.
fn order_mod_prime_power(r: i64, p: u64, e: u32) -> Result<u64> {
    let pe = p.pow(e);
    let r0 = normalize(r, pe);
    if r0 == 1 || pe == 2 {
        return Ok(1);
    }
    if r0 == pe - 1 {
        return Ok(2);
    }
    // Reduce to a representative that is neither +1 nor -1 as an integer.
    let rep = r0 as i64;
    if p == 2 {
        order_two_power(rep, e)
    } else {
        order_prime_power(rep, p, e)
    }
}

/// `O_m(r)` as the lcm of the orders modulo each prime power of `m`.
pub fn order_composite(r: i64, m_fact: &Factorization) -> Result<u64> {
    let m = m_fact.value();
    check_unit(r, m)?;
    let mut order = 1u64;
    for &(p, e) in m_fact.factors() {
        let component = order_mod_prime_power(r, p, e)?;
        order = arith::lcm(order, component).ok_or(Error::Overflow("order lcm"))?;
    }
    Ok(order)
}

/// `c = phi(m) / gcd(phi(p_1^{e_1}), ..., phi(p_s^{e_s}))`; every unit `r`
/// modulo `m` satisfies `r^c = 1 (mod m)`.
pub fn phi_quotient_exponent(m_fact: &Factorization) -> Result<u64> {
    if m_fact.distinct_primes() < 2 {
        return Err(Error::Invalid(format!(
            "{} must have at least two distinct prime factors",
            m_fact.value()
        )));
    }
    let g = m_fact
        .factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .fold(0, gcd);
    Ok(m_fact.phi() / g)
}

/// All `n`-th roots of unity modulo `p`, as powers of a primitive root with
/// step `(p-1)/gcd(n, p-1)`. Sorted ascending; the set has exactly
/// `gcd(n, p-1)` elements.
pub fn nth_roots_of_unity(n: u64, p: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero("root degree n"));
    }
    let g = arith::primitive_root(p)?;
    let d = gcd(n, p - 1);
    let step = pow_mod(g, (p - 1) / d, p);
    let mut roots = Vec::with_capacity(d as usize);
    let mut x = 1u64;
    for _ in 0..d {
        roots.push(x);
        x = mul_mod(x, step, p);
    }
    roots.sort_unstable();
    Ok(roots)
}

/// `sum_{i=0}^{n-1} a^i mod p`.
pub fn geometric_sum_mod(a: u64, n: u64, p: u64) -> u64 {
    let mut term = 1 % p;
    let mut sum = 0;
    for _ in 0..n {
        sum = (sum + term) % p;
        term = mul_mod(term, a, p);
    }
    sum
}

/// `sum_{k=1}^{p-1} k^n mod p`. Equals `p - 1` when `(p - 1) | n` and 0
/// otherwise.
pub fn power_sum_mod(n: u64, p: u64) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok((1..p).fold(0, |acc, k| (acc + pow_mod(k, n, p)) % p))
}

/// Order and co-order of a unit modulo `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRecord {
    pub modulus: u64,
    pub base: i64,
    pub order: u64,
    pub co_order: u64,
}

impl OrderRecord {
    pub fn compute(r: i64, m: u64) -> Result<Self> {
        let order = order_fast(r, m)?;
        let phi = arith::euler_phi(m)?;
        Ok(Self {
            modulus: m,
            base: r,
            order,
            co_order: phi / order,
        })
    }
}

/// Thread-safe memo of `order_fast` results keyed by `(r mod m, m)`.
#[derive(Debug, Default)]
pub struct OrderCache {
    table: RwLock<HashMap<(u64, u64), u64>>,
}

impl OrderCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn order(&self, r: i64, m: u64) -> Result<u64> {
        let key = (check_unit(r, m)?, m);
        if let Some(&o) = self.table.read().expect("order cache poisoned").get(&key) {
            return Ok(o);
        }
        let o = order_fast(r, m)?;
        self.table
            .write()
            .expect("order cache poisoned")
            .insert(key, o);
        Ok(o)
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("order cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
