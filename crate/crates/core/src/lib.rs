//! Exact computational number theory around power residues.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: primality, factorization, modular powers, CRT, primitive roots.
//! - [`orders`]: multiplicative orders `O_m(r)`, co-orders, roots of unity
//!   and power sums.
//! - [`quadratic`]: Legendre symbols and the half-order subgroups of `U_4q`
//!   and `U_4r` that classify quadratic residues by congruence class.
//! - [`norm`]: multiplication matrices of `Z[x]/(q(x))`, exact norm
//!   determinants, adjugates.
//! - [`residues`]: `n`-th power residues, irreducibility of `x^n - r`,
//!   bounded zeros of norm forms modulo `p` and representations of primes
//!   as norms.
//! - [`search`]: bounded Diophantine search for `x^a + 2y^b + 4z^c = p`.
//! - [`verify`]: named invariant suites cross-checking the above.
//!
//! All results are exact; no floating point value ever reaches an output.

pub mod arith;
pub mod brute;
pub mod error;
pub mod norm;
pub mod orders;
pub mod quadratic;
pub mod residues;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
