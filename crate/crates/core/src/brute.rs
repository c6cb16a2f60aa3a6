//! Exhaustive reference routines. Slow by construction; they share no code
//! path with the criteria they are used to check.

use crate::arith::{mul_mod, normalize};
use crate::norm::det_norm_mod_p;

/// All `x` in `[0, p)` with `x^n = r (mod p)`, by scanning.
pub fn nth_roots_scan(r: i64, n: u64, p: u64) -> Vec<u64> {
    let r0 = normalize(r, p);
    (0..p)
        .filter(|&x| {
            let mut v = 1 % p;
            for _ in 0..n {
                v = mul_mod(v, x, p);
            }
            v == r0
        })
        .collect()
}

/// `+1` if some `x` has `x^2 = r (mod p)`, `-1` otherwise.
pub fn legendre_by_squares(r: i64, p: u64) -> i32 {
    let r0 = normalize(r, p);
    if (1..p).any(|x| mul_mod(x, x, p) == r0) {
        1
    } else {
        -1
    }
}

/// Calls `visit` on every tuple in `[0, p)^n` in lexicographic order
/// (last coordinate fastest) until it returns `true`.
pub fn for_each_tuple(n: usize, p: u64, mut visit: impl FnMut(&[i64]) -> bool) -> bool {
    let mut tuple = vec![0i64; n];
    loop {
        if visit(&tuple) {
            return true;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            tuple[i] += 1;
            if (tuple[i] as u64) < p {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// First nonzero tuple of `F_p^n` (lexicographic) with `D^r_n = 0 (mod p)`.
///
/// `D^r_n` is homogeneous, so scaling a zero by a unit gives another zero and
/// the lexicographically first one has leading nonzero coordinate 1. Only
/// such tuples are visited, in lexicographic order: `(p^n - 1)/(p - 1)`
/// determinants instead of `p^n`.
pub fn nontrivial_zero_scan(n: usize, r: i64, p: u64) -> Option<Vec<i64>> {
    let mut found = None;
    for lead in (0..n).rev() {
        let tail = n - lead - 1;
        let mut x = vec![0i64; n];
        x[lead] = 1;
        let hit = for_each_tuple(tail, p, |t| {
            x[lead + 1..].copy_from_slice(t);
            det_norm_mod_p(&x, r, p).expect("p is prime") == 0
        });
        if hit {
            found = Some(x);
            break;
        }
    }
    found
}

/// Remainder of `f` by the monic `g` over `F_p`; both least-degree first.
fn rem_monic(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let top = r.pop().expect("nonempty");
        if top == 0 {
            continue;
        }
        let shift = r.len() - dg;
        for (i, &c) in g[..dg].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mul_mod(top, c, p)) % p;
        }
    }
    r
}

/// Irreducibility of a monic `f` (least-degree first, leading 1) over `F_p`
/// by trial division with every monic polynomial of degree `1..=deg/2`.
pub fn fp_poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        let divides = for_each_tuple(d, p, |low| {
            for (slot, &c) in g.iter_mut().zip(low) {
                *slot = c as u64;
            }
            rem_monic(f, &g, p).iter().all(|&c| c == 0)
        });
        if divides {
            return false;
        }
    }
    true
}

/// Coefficients of `x^n - r` over `F_p`.
pub fn binomial_fp(n: usize, r: i64, p: u64) -> Vec<u64> {
    let mut f = vec![0u64; n + 1];
    f[0] = normalize(-r, p);
    f[n] = 1 % p;
    f
}
