//! Quadratic residues and the residue-class groups that classify them.
//!
//! For a prime `q`, whether `q` is a square modulo an odd prime `p != q`
//! depends only on `p mod 4q`, and the good classes form `L_4q`: the unique
//! subgroup of `U_4q` of half order containing `-1`. For square-free `r` the
//! same construction, taken through the parity of "bad" components, gives a
//! half-order subgroup `L_4r` of `U_4r`, which need no longer be unique.
//!
//! Residues are always stored in `[0, m)`; `-1` is `m - 1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, crt_coprime, gcd, mul_mod, normalize, pow_mod, CongruenceSystem, Factorization};
use crate::error::{Error, Result};

/// Largest `phi(m)` accepted by [`half_order_subgroups_containing_minus1`].
pub const SUBGROUP_ENUMERATION_LIMIT: u64 = 1 << 16;

/// The unit group `U_m`, listed explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassGroup {
    modulus: u64,
    elements: Vec<u64>,
}

impl ResidueClassGroup {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Invalid(format!("modulus must be at least 2, got {m}")));
        }
        let elements = (1..m).filter(|&a| gcd(a, m) == 1).collect();
        Ok(Self { modulus: m, elements })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }

    pub fn inverse(&self, a: u64) -> Option<u64> {
        arith::mod_inverse(a, self.modulus)
    }
}

/// A subgroup of `U_m`, stored as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    modulus: u64,
    elements: Vec<u64>,
}

impl Subgroup {
    /// Validates that `elements` is a subgroup of `U_m`.
    pub fn from_elements(modulus: u64, elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let parent = ResidueClassGroup::new(modulus)?;
        let set: BTreeSet<u64> = elements.into_iter().map(|a| a % modulus).collect();
        let sg = Self {
            modulus,
            elements: set.into_iter().collect(),
        };
        if !sg.elements.iter().all(|&a| parent.contains(a)) {
            return Err(Error::Invalid("elements must be units".to_string()));
        }
        if !sg.contains(1 % modulus) || !sg.is_closed() {
            return Err(Error::Invalid("elements do not form a subgroup".to_string()));
        }
        Ok(sg)
    }

    fn from_sorted(modulus: u64, elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { modulus, elements }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&(a % self.modulus)).is_ok()
    }

    pub fn contains_minus_one(&self) -> bool {
        self.contains(self.modulus - 1)
    }

    /// Closure under multiplication; for a finite set this also gives inverses.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|&a| {
            self.elements
                .iter()
                .all(|&b| self.contains(mul_mod(a, b, self.modulus)))
        })
    }

    /// Renders as `{+-1,+-7,...}` when the set is closed under negation,
    /// listing each pair by its smaller representative.
    pub fn to_pm_string(&self) -> String {
        let m = self.modulus;
        if !self.elements.iter().all(|&a| self.contains(m - a)) {
            return self.to_string();
        }
        let reps: Vec<String> = self
            .elements
            .iter()
            .filter(|&&a| a <= m - a)
            .map(|a| format!("±{a}"))
            .collect();
        format!("{{{}}}", reps.join(","))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

/// Legendre symbol `(r/p)` by Euler's criterion `r^{(p-1)/2} mod p`.
pub fn legendre(r: i64, p: u64) -> Result<i32> {
    check_odd_prime(p)?;
    let r0 = normalize(r, p);
    if r0 == 0 {
        return Err(Error::NotCoprime { r, m: p });
    }
    Ok(if pow_mod(r0, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Jacobi symbol `(a/n)` for odd `n >= 1`, by quadratic reciprocity and the
/// supplementary laws. Returns 0 when `gcd(a, n) > 1`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = normalize(a, n);
    let mut n = n;
    let mut sign = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Legendre symbol through the reciprocity law, independent of Euler's
/// criterion.
pub fn legendre_reciprocity(r: i64, p: u64) -> Result<i32> {
    check_odd_prime(p)?;
    match jacobi(r, p) {
        0 => Err(Error::NotCoprime { r, m: p }),
        s => Ok(s),
    }
}

/// `L*_p`: the quadratic residues of `F_p^x`, a subgroup of order `(p-1)/2`.
pub fn build_lstar(p: u64) -> Result<Subgroup> {
    check_odd_prime(p)?;
    let squares: BTreeSet<u64> = (1..p).map(|x| mul_mod(x, x, p)).collect();
    Ok(Subgroup::from_sorted(p, squares.into_iter().collect()))
}

/// `L_4q` for a prime `q`.
///
/// For `q = 2` this is `{1, 7}` in `U_8`. For odd `q` the group is the CRT
/// preimage of the pairs `(e, a)` in `U_4 (+) U_q` with
/// - `q = 3 (mod 4)`: `e = 1` and `a` a residue, or `e = -1` and `a` a non-residue;
/// - `q = 1 (mod 4)`: any `e` and `a` a residue.
pub fn build_l4q(q: u64) -> Result<Subgroup> {
    if !arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q == 2 {
        return Ok(Subgroup::from_sorted(8, vec![1, 7]));
    }
    let lstar = build_lstar(q)?;
    let m = 4 * q;
    let mut elements = Vec::with_capacity(q as usize - 1);
    for e in [1i64, 3] {
        for a in 1..q {
            let residue = lstar.contains(a);
            let keep = if q % 4 == 3 {
                (e == 1) == residue
            } else {
                residue
            };
            if keep {
                let sys = CongruenceSystem::new([(e, 4), (a as i64, q)])?;
                elements.push(crt_coprime(&sys)?.0);
            }
        }
    }
    elements.sort_unstable();
    debug_assert_eq!(elements.len() as u64, q - 1);
    Ok(Subgroup::from_sorted(m, elements))
}

/// Decides `(q/p) = 1` by testing whether `p mod 4q` lies in `L_4q`.
pub fn classify_prime(q: u64, p: u64) -> Result<bool> {
    check_odd_prime(p)?;
    if p == q {
        return Err(Error::Invalid(format!("p and q must differ, both are {p}")));
    }
    Ok(build_l4q(q)?.contains(p))
}

/// Every subgroup `H` of `U_m` with `|H| = phi(m)/2` and `-1` in `H`, sorted.
///
/// Index-2 subgroups are kernels of nontrivial characters `U_m -> {+-1}`,
/// which factor through the elementary abelian quotient `U_m / U_m^2`. A
/// basis of that quotient is picked greedily and each nonzero character on
/// it yields one kernel.
pub fn half_order_subgroups_containing_minus1(m: u64) -> Result<Vec<Subgroup>> {
    let group = ResidueClassGroup::new(m)?;
    let phi = group.order() as u64;
    if phi % 2 == 1 {
        return Err(Error::Invalid(format!("phi({m}) = {phi} is odd")));
    }
    if phi > SUBGROUP_ENUMERATION_LIMIT {
        return Err(Error::Overflow("phi(m) exceeds the subgroup enumeration limit"));
    }

    const UNASSIGNED: u32 = u32::MAX;
    // class[a] = coordinates of a's coset in U_m / U_m^2, as a bitmask.
    let mut class = vec![UNASSIGNED; m as usize];
    for &a in group.elements() {
        class[mul_mod(a, a, m) as usize] = 0;
    }
    let mut rank = 0u32;
    for &g in group.elements() {
        if class[g as usize] != UNASSIGNED {
            continue;
        }
        let assigned: Vec<u64> = group
            .elements()
            .iter()
            .copied()
            .filter(|&v| class[v as usize] != UNASSIGNED)
            .collect();
        for v in assigned {
            let w = mul_mod(v, g, m);
            class[w as usize] = class[v as usize] | (1 << rank);
        }
        rank += 1;
    }

    let minus_one = m - 1;
    let mut found = Vec::new();
    for chi in 1u32..(1 << rank) {
        if (class[minus_one as usize] & chi).count_ones() % 2 == 1 {
            continue;
        }
        let kernel: Vec<u64> = group
            .elements()
            .iter()
            .copied()
            .filter(|&a| (class[a as usize] & chi).count_ones() % 2 == 0)
            .collect();
        found.push(Subgroup::from_sorted(m, kernel));
    }
    found.sort();
    Ok(found)
}

/// `L_4r` for square-free `r >= 2`: the classes `c` of `U_4r` for which an
/// even number of the components `c mod 4q_i` fall outside `L_4q_i`.
pub fn build_l4r_squarefree(r_fact: &Factorization) -> Result<Subgroup> {
    let r = r_fact.value();
    if r < 2 {
        return Err(Error::Invalid(format!("r must be at least 2, got {r}")));
    }
    if !r_fact.is_square_free() {
        return Err(Error::NotSquareFree(r));
    }
    let m = r.checked_mul(4).ok_or(Error::Overflow("4r"))?;
    let components = r_fact
        .primes()
        .map(build_l4q)
        .collect::<Result<Vec<_>>>()?;
    let elements = ResidueClassGroup::new(m)?
        .elements()
        .iter()
        .copied()
        .filter(|&c| components.iter().filter(|l| !l.contains(c)).count() % 2 == 0)
        .collect();
    Ok(Subgroup::from_sorted(m, elements))
}

/// `(r/p)` for any nonzero `r` coprime to the odd prime `p`, via the
/// `L_4q` classification: square factors are dropped, each remaining prime
/// contributes `-1` when `p mod 4q` is outside `L_4q`, and a negative sign
/// contributes `(-1/p) = (-1)^{(p-1)/2}`.
pub fn legendre_general(r: i64, p: u64) -> Result<i32> {
    if r == 0 {
        return Err(Error::Zero("r"));
    }
    check_odd_prime(p)?;
    if normalize(r, p) == 0 {
        return Err(Error::NotCoprime { r, m: p });
    }
    let fact = arith::factorize(r.unsigned_abs())?;
    let mut sign = 1;
    for &(q, e) in fact.factors() {
        if e % 2 == 1 && !classify_prime(q, p)? {
            sign = -sign;
        }
    }
    if r < 0 && p % 4 == 3 {
        sign = -sign;
    }
    Ok(sign)
}
