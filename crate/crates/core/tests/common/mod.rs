//! Reference computations for integration tests. Everything here is written
//! from first principles with plain integer loops and shares no code with
//! the library.

#![allow(dead_code)]

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn residue(r: i64, m: u64) -> u64 {
    r.rem_euclid(m as i64) as u64
}

/// `base^exp mod m` by repeated multiplication.
pub fn slow_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut v = 1 % m;
    for _ in 0..exp {
        v = v * (base % m) % m;
    }
    v
}

/// `+1` if `r` is a nonzero square mod `p`, else `-1`.
pub fn legendre_squares(r: i64, p: u64) -> i32 {
    let target = residue(r, p);
    if (1..p).any(|x| x * x % p == target) {
        1
    } else {
        -1
    }
}

/// Indicator of nonzero squares mod `p`.
pub fn square_table(p: u64) -> Vec<bool> {
    let mut sq = vec![false; p as usize];
    for x in 1..p {
        sq[(x * x % p) as usize] = true;
    }
    sq
}

pub fn phi_by_count(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

/// `ord[r]` for every unit `r` mod `m` (0 for non-units). Each cycle of
/// powers is walked once; the powers `r^j` on it get order `k / gcd(j, k)`.
pub fn order_table(m: u64) -> Vec<u64> {
    let mut ord = vec![0u64; m as usize];
    if m == 1 {
        return ord;
    }
    for r in 1..m {
        if ord[r as usize] != 0 || gcd(r, m) != 1 {
            continue;
        }
        let mut cycle = vec![r];
        let mut x = r;
        while x != 1 {
            x = x * r % m;
            cycle.push(x);
        }
        let k = cycle.len() as u64;
        for (j, &v) in cycle.iter().enumerate() {
            let j = j as u64 + 1;
            if ord[v as usize] == 0 {
                ord[v as usize] = k / gcd(j, k);
            }
        }
    }
    ord
}

/// Smallest `n >= 1` with `r^n = 1 (mod m)`.
pub fn order_walk(r: i64, m: u64) -> u64 {
    assert!(m < 1 << 32);
    let r0 = residue(r, m);
    let mut x = r0;
    let mut n = 1;
    while x != 1 {
        x = x * r0 % m;
        n += 1;
    }
    n
}

/// Printed closed forms of the norm for n = 2, 3, 4.
pub fn closed_d2(x: &[i128], r: i128) -> i128 {
    x[0] * x[0] - x[1] * x[1] * r
}

pub fn closed_d3(x: &[i128], r: i128) -> i128 {
    let (x0, x1, x2) = (x[0], x[1], x[2]);
    x0.pow(3) + x1.pow(3) * r + x2.pow(3) * r * r - 3 * x0 * x1 * x2 * r
}

pub fn closed_d4(x: &[i128], r: i128) -> i128 {
    let (x0, x1, x2, x3) = (x[0], x[1], x[2], x[3]);
    let r2 = r * r;
    x0.pow(4) - x1.pow(4) * r + 4 * x0 * x1 * x1 * x2 * r - 2 * x0 * x0 * x2 * x2 * r
        - 4 * x0 * x0 * x1 * x3 * r
        + x2.pow(4) * r2
        - 4 * x1 * x2 * x2 * x3 * r2
        + 2 * x1 * x1 * x3 * x3 * r2
        + 4 * x0 * x2 * x3 * x3 * r2
        - x3.pow(4) * r2 * r
}

pub fn closed_form(x: &[i128], r: i128) -> i128 {
    match x.len() {
        2 => closed_d2(x, r),
        3 => closed_d3(x, r),
        4 => closed_d4(x, r),
        n => panic!("no closed form for n = {n}"),
    }
}

/// Product in `Z[u]/(u^n - r)`: wrap-around convolution with weight `r`.
pub fn wrap_mul(a: &[i128], b: &[i128], r: i128) -> Vec<i128> {
    let n = a.len();
    let mut c = vec![0i128; n];
    for i in 0..n {
        for j in 0..n {
            let k = i + j;
            if k < n {
                c[k] += a[i] * b[j];
            } else {
                c[k - n] += r * a[i] * b[j];
            }
        }
    }
    c
}

/// Exact determinant of a small integer matrix by permutation expansion.
pub fn det_permutations(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<i128>], total: &mut i128) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let prod: i128 = (0..n).map(|i| m[i][perm[i]]).product();
        *total += if inversions % 2 == 0 { prod } else { -prod };
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// Polynomials over `F_p`, least-degree first.
pub fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let inv_lead = (1..p).find(|&v| v * g[dg] % p == 1).expect("nonzero leading coefficient");
    while r.len() > dg {
        let top = r.pop().unwrap();
        if top == 0 {
            continue;
        }
        let c = top * inv_lead % p;
        let shift = r.len() - dg;
        for i in 0..dg {
            r[shift + i] = (r[shift + i] + p * p - c * g[i] % p) % p;
        }
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    c
}

/// Irreducibility of `x^n - r` over `F_p` by dividing by every monic
/// polynomial of degree `1..=n/2`.
pub fn binomial_irreducible_trial(n: usize, r: i64, p: u64) -> bool {
    let mut f = vec![0u64; n + 1];
    f[0] = residue(-r, p);
    f[n] = 1;
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        let total = p.pow(d as u32);
        for code in 0..total {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Whether some nonzero `x` in `F_p^n` (n = 2, 3) has vanishing closed-form
/// norm modulo `p`.
pub fn zero_norm_exists(n: usize, r: i64, p: u64) -> bool {
    let total = p.pow(n as u32);
    (1..total).any(|code| {
        let mut x = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            x.push((c % p) as i128);
            c /= p;
        }
        closed_form(&x, r as i128).rem_euclid(p as i128) == 0
    })
}

/// Some `(x0, x1)` with `|x_i| <= bound` and `x0^2 - r x1^2 = target`.
pub fn represent_norm2(r: i64, target: i64, bound: i64) -> Option<(i64, i64)> {
    for x0 in -bound..=bound {
        for x1 in -bound..=bound {
            if x0 * x0 - r * x1 * x1 == target {
                return Some((x0, x1));
            }
        }
    }
    None
}

/// Whether `x^a + 2y^b + 4z^c = p` has a solution in the box `|x|, |y|, |z| <= bound`.
pub fn search_box(exps: (u32, u32, u32), p: i64, bound: i64) -> bool {
    let (a, b, c) = exps;
    for x in -bound..=bound {
        for y in -bound..=bound {
            let partial = x.pow(a) + 2 * y.pow(b);
            for z in -bound..=bound {
                if partial + 4 * z.pow(c) == p {
                    return true;
                }
            }
        }
    }
    false
}
