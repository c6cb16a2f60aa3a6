mod common;

use common::*;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use normres::arith::{crt_general, euler_phi, factorize, mod_pow, primitive_root, CongruenceSystem};
use normres::norm::{det_norm, det_norm_mod_p};
use normres::orders::{geometric_sum_mod, nth_roots_of_unity};
use normres::quadratic::{
    build_l4q, build_l4r_squarefree, classify_prime, legendre, legendre_general, legendre_reciprocity,
};
use normres::residues::{
    all_nth_roots, check_prime_exponent_equivalence, find_integer_zero, has_nth_root, is_irreducible_q,
};

#[test]
fn phi_and_factorization() {
    for n in 1..=10_000u64 {
        assert_eq!(euler_phi(n).unwrap(), phi_by_count(n), "n = {n}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20_000 {
        let n = rng.gen_range(1..=1_000_000u64);
        let f = factorize(n).unwrap();
        assert_eq!(f.factors().iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        assert!(f.primes().all(|p| p > 1 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)));
    }
}

#[test]
fn crt_general_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..300 {
        let k = rng.gen_range(1..=3);
        let eqs: Vec<(i64, u64)> = (0..k).map(|_| (rng.gen_range(-50..50), rng.gen_range(1..=60u64))).collect();
        let lcm = eqs.iter().fold(1u64, |l, &(_, m)| l / gcd(l, m) * m);
        let scan = (0..lcm).find(|&x| eqs.iter().all(|&(a, m)| x % m == residue(a, m)));
        let got = crt_general(&CongruenceSystem::new(eqs.clone()).unwrap()).unwrap();
        assert_eq!(got, scan.map(|x| (x, lcm)), "{eqs:?}");
    }
}

#[test]
fn primitive_roots_and_periods() {
    for p in sieve(1000).into_iter().skip(1) {
        let g = primitive_root(p).unwrap();
        assert_eq!(order_walk(g as i64, p), p - 1, "p = {p}");
        assert!((2..g).all(|h| order_walk(h as i64, p) < p - 1), "p = {p}: {g} is not the smallest");
        let ord = order_table(p);
        for a in [2u64, 3, p - 1].into_iter().filter(|&a| a < p) {
            let o = ord[a as usize];
            for k in 0..3 * o {
                assert_eq!(mod_pow(a as i64, k, p), mod_pow(a as i64, k + o, p));
            }
        }
    }
}

#[test]
fn roots_of_unity_and_geometric_sums() {
    for p in sieve(200) {
        for n in 1..=20u64 {
            let brute: Vec<u64> = (1..p).filter(|&a| slow_pow(a, n, p) == 1).collect();
            let got = nth_roots_of_unity(n, p).unwrap();
            assert_eq!(got, brute, "n={n} p={p}");
            assert_eq!(got.len() as u64, gcd(n, p - 1));
            for &a in &got {
                let expected = if a == 1 { n % p } else { 0 };
                assert_eq!(geometric_sum_mod(a, n, p), expected, "a={a} n={n} p={p}");
            }
        }
    }
}

#[test]
fn nth_roots_match_scan() {
    for p in sieve(200) {
        for r in 1..p as i64 {
            for n in 1..=12u64 {
                let scan: Vec<u64> = (1..p).filter(|&x| slow_pow(x, n, p) == r as u64).collect();
                assert_eq!(has_nth_root(r, n, p).unwrap(), !scan.is_empty(), "r={r} n={n} p={p}");
                let all = all_nth_roots(r, n, p).unwrap();
                assert_eq!(all, scan);
                if !scan.is_empty() {
                    assert_eq!(all.len() as u64, gcd(n, p - 1));
                }
            }
        }
    }
}

#[test]
fn prime_exponent_equivalence_grid() {
    for p in sieve(100) {
        for q in [2u64, 3] {
            for r in 1..p as i64 {
                assert!(check_prime_exponent_equivalence(q, r, p).unwrap(), "q={q} r={r} p={p}");
            }
        }
    }
}

fn reducible_over_q(n: u32, r: i64) -> bool {
    let power_of = |k: u32| (-20i64..=20).any(|a| a.pow(k) == r);
    match n {
        1 => false,
        2 => power_of(2),
        3 => power_of(3),
        4 => power_of(2) || (0..=3i64).any(|a| -4 * a.pow(4) == r),
        _ => unreachable!(),
    }
}

#[test]
fn reducible_binomials_have_integer_zeros() {
    let mut reducible = 0;
    for n in 1..=4u32 {
        for r in (-16i64..=16).filter(|&r| r != 0) {
            let expected = reducible_over_q(n, r);
            assert_eq!(is_irreducible_q(n as u64, r).unwrap(), !expected, "n={n} r={r}");
            if expected {
                reducible += 1;
                let x = find_integer_zero(n as usize, r, 8).unwrap_or_else(|| panic!("n={n} r={r}: none found"));
                assert!(x.iter().any(|&v| v != 0));
                let xi: Vec<i128> = x.iter().map(|&v| v as i128).collect();
                assert_eq!(closed_form(&xi, r as i128), 0, "n={n} r={r} x={x:?}");
            } else if n <= 3 && n >= 2 {
                assert_eq!(find_integer_zero(n as usize, r, 4), None, "n={n} r={r}");
            }
        }
    }
    assert!(reducible >= 10);
}

#[test]
fn l4q_structure() {
    for q in sieve(50) {
        let l = build_l4q(q).unwrap();
        let m = l.modulus();
        assert_eq!(l.order() as u64, phi_by_count(m) / 2);
        assert!(l.contains(m - 1));
        for &a in l.elements() {
            for &b in l.elements() {
                assert!(l.contains(a * b % m));
            }
        }
    }
}

#[test]
fn classify_prime_both_directions() {
    for q in sieve(50) {
        for p in sieve(10_000).into_iter().filter(|&p| p > 2 && p != q) {
            assert_eq!(classify_prime(q, p).unwrap(), legendre(q as i64, p).unwrap() == 1, "q={q} p={p}");
        }
    }
}

#[test]
fn l4r_classifies_squarefree_r() {
    let odd: Vec<(u64, Vec<bool>)> =
        sieve(10_000).into_iter().filter(|&p| p > 2).map(|p| (p, square_table(p))).collect();
    for r in 2..=100u64 {
        let f = factorize(r).unwrap();
        if !f.is_square_free() {
            continue;
        }
        let l = build_l4r_squarefree(&f).unwrap();
        for (p, squares) in odd.iter().filter(|(p, _)| r % p != 0) {
            let truth = squares[(r % p) as usize];
            assert_eq!(l.contains(p % (4 * r)), truth, "r={r} p={p}");
            assert_eq!(legendre_general(r as i64, *p).unwrap() == 1, truth, "r={r} p={p}");
        }
    }
}

#[test]
fn legendre_routes_agree() {
    for p in sieve(500).into_iter().skip(1) {
        for r in 1..p as i64 {
            let truth = legendre_squares(r, p);
            assert_eq!(legendre(r, p).unwrap(), truth);
            assert_eq!(legendre_reciprocity(r, p).unwrap(), truth);
            assert_eq!(legendre_general(r, p).unwrap(), truth);
            assert_eq!(legendre_general(-r, p).unwrap(), legendre_squares(-r, p));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let primes: Vec<u64> = sieve(5000).into_iter().skip(1).collect();
    for _ in 0..2000 {
        let p = primes[rng.gen_range(0..primes.len())];
        let (a, b) = (rng.gen_range(-5000i64..5000), rng.gen_range(-5000i64..5000));
        if residue(a, p) == 0 || residue(b, p) == 0 {
            continue;
        }
        let ab = legendre_general(a * b, p).unwrap();
        assert_eq!(ab, legendre_general(a, p).unwrap() * legendre_general(b, p).unwrap(), "a={a} b={b} p={p}");
    }
}

#[test]
fn closed_forms_and_mod_p() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let primes = sieve(1000);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=4usize);
        let r: i64 = rng.gen_range(-30..=30);
        let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-50..=50)).collect();
        let xi: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        let exact = det_norm(&x, r).unwrap();
        assert_eq!(exact, BigInt::from(closed_form(&xi, r as i128)), "x={x:?} r={r}");
        let p = primes[rng.gen_range(0..primes.len())];
        let expected = closed_form(&xi, r as i128).rem_euclid(p as i128) as u64;
        assert_eq!(det_norm_mod_p(&x, r, p).unwrap(), expected, "x={x:?} r={r} p={p}");
    }
}
