//! Multiplication matrices of `Z[x]/(q(x))` for a monic `q`, and their
//! determinants (the norm forms).
//!
//! An element `z = x_0 + x_1 u + ... + x_{n-1} u^{n-1}` (with `u = x mod q`)
//! acts on the basis `1, u, ..., u^{n-1}` by multiplication; column `j` of its
//! matrix holds the coefficients of `z * u^j`. For `q = x^n - r` this is the
//! `r`-weighted circulant
//!
//! ```text
//! x_0      r x_{n-1}  ...  r x_1
//! x_1      x_0        ...  r x_2
//! ...
//! x_{n-1}  x_{n-2}    ...  x_0
//! ```
//!
//! and its determinant `D^r_n(x)` is multiplicative. All arithmetic is exact.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, mod_inverse, mul_mod, normalize};
use crate::error::{Error, Result};

/// Monic integer polynomial of degree `n >= 1`, coefficients least-degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonicPoly {
    coeffs: Vec<BigInt>,
}

impl MonicPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::Invalid("modulus must have degree at least 1".to_string())),
            Some(lead) if !lead.is_one() => Err(Error::NotMonic),
            Some(_) if coeffs.len() < 2 => {
                Err(Error::Invalid("modulus must have degree at least 1".to_string()))
            }
            Some(_) => Ok(Self { coeffs }),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - r`.
    pub fn binomial(n: usize, r: impl Into<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero("dimension n"));
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -r.into();
        coeffs[n] = BigInt::one();
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `Some(r)` when the polynomial is `x^n - r`.
    pub fn binomial_constant(&self) -> Option<BigInt> {
        let n = self.degree();
        self.coeffs[1..n]
            .iter()
            .all(Zero::is_zero)
            .then(|| -self.coeffs[0].clone())
    }

    /// Remainder of an arbitrary coefficient vector by the division algorithm;
    /// the result always has exactly `degree()` entries.
    pub fn reduce(&self, mut poly: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.degree();
        while poly.len() > n {
            let top = poly.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = poly.len() - n;
            for (i, c) in self.coeffs[..n].iter().enumerate() {
                poly[shift + i] -= &top * c;
            }
        }
        poly.resize(n, BigInt::zero());
        poly
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{mag}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// An element of `Z[x]/(q(x))`, stored as its coefficients on `1, u, ..., u^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMod {
    modulus: MonicPoly,
    coeffs: Vec<BigInt>,
}

impl PolyMod {
    /// Reduces `coeffs` (of any length) modulo `modulus`.
    pub fn new(modulus: MonicPoly, coeffs: Vec<BigInt>) -> Self {
        let coeffs = modulus.reduce(coeffs);
        Self { modulus, coeffs }
    }

    pub fn from_i64(modulus: MonicPoly, coeffs: &[i64]) -> Self {
        Self::new(modulus, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(modulus: MonicPoly) -> Self {
        Self::new(modulus, vec![BigInt::one()])
    }

    pub fn modulus(&self) -> &MonicPoly {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplication matrix of this element.
    pub fn matrix(&self) -> NormMatrix {
        multiplication_matrix(&self.coeffs, &self.modulus)
    }

    /// Norm `D_q(z)`.
    pub fn norm(&self) -> BigInt {
        self.matrix().det()
    }
}

/// Product in `Z[x]/(q(x))`, reduced by the division algorithm.
pub fn poly_mul_mod(a: &PolyMod, b: &PolyMod) -> Result<PolyMod> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch);
    }
    let n = a.coeffs.len();
    let mut prod = vec![BigInt::zero(); 2 * n - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    Ok(PolyMod::new(a.modulus.clone(), prod))
}

/// Dense square matrix of exact integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl SquareMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix must be square".to_string()));
        }
        Ok(Self::from_fn(n, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn scaled_identity(n: usize, c: &BigInt) -> Self {
        Self::from_fn(n, |i, j| if i == j { c.clone() } else { BigInt::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n).fold(BigInt::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.n, v.len(), "dimension mismatch");
        (0..self.n)
            .map(|i| (0..self.n).fold(BigInt::zero(), |acc, k| acc + self.get(i, k) * &v[k]))
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    /// Every intermediate division is exact.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Determinant by cofactor expansion along the first row. Exponential;
    /// intended as an independent check for small dimensions.
    pub fn det_laplace(&self) -> BigInt {
        fn expand(m: &[Vec<BigInt>]) -> BigInt {
            let n = m.len();
            match n {
                0 => BigInt::one(),
                1 => m[0][0].clone(),
                _ => {
                    let mut total = BigInt::zero();
                    for (j, pivot) in m[0].iter().enumerate() {
                        if pivot.is_zero() {
                            continue;
                        }
                        let minor: Vec<Vec<BigInt>> = m[1..]
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .enumerate()
                                    .filter(|&(c, _)| c != j)
                                    .map(|(_, v)| v.clone())
                                    .collect()
                            })
                            .collect();
                        let term = pivot * expand(&minor);
                        if j % 2 == 0 {
                            total += term;
                        } else {
                            total -= term;
                        }
                    }
                    total
                }
            }
        }
        let rows: Vec<Vec<BigInt>> = (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect();
        expand(&rows)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != skip_row) {
            for j in (0..n).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { n: n - 1, entries }
    }

    /// Classical adjugate: transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, |i, j| {
            let c = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Multiplication matrix of an element of `Z[x]/(q(x))` together with its modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormMatrix {
    modulus: MonicPoly,
    matrix: SquareMatrix,
}

impl NormMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn modulus(&self) -> &MonicPoly {
        &self.modulus
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det()
    }

    /// The element this matrix multiplies by: column 0 is `z * 1`.
    pub fn element(&self) -> PolyMod {
        PolyMod::new(self.modulus.clone(), self.matrix.column(0))
    }

    /// Whether the entries are exactly the multiplication matrix of the
    /// element read off column 0.
    pub fn is_multiplication_matrix(&self) -> bool {
        multiplication_matrix(&self.matrix.column(0), &self.modulus).matrix == self.matrix
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        Ok(Self {
            modulus: self.modulus.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }
}

impl fmt::Display for NormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

fn to_big<T: Into<BigInt> + Clone>(xbar: &[T]) -> Vec<BigInt> {
    xbar.iter().cloned().map(Into::into).collect()
}

/// Column `j` = coefficients of `z * u^j mod q`.
fn multiplication_matrix(xbar: &[BigInt], q: &MonicPoly) -> NormMatrix {
    let n = q.degree();
    let mut columns = Vec::with_capacity(n);
    let mut col = q.reduce(xbar.to_vec());
    for _ in 0..n {
        let mut shifted = Vec::with_capacity(n + 1);
        shifted.push(BigInt::zero());
        shifted.extend(col.iter().cloned());
        let next = q.reduce(shifted);
        columns.push(std::mem::replace(&mut col, next));
    }
    NormMatrix {
        modulus: q.clone(),
        matrix: SquareMatrix::from_fn(n, |i, j| columns[j][i].clone()),
    }
}

/// `M^r_n(x)`: row `i`, column `j` holds `x_{i-j}` on and below the diagonal
/// and `r x_{n+i-j}` above it.
pub fn build_matrix<T: Into<BigInt> + Clone>(xbar: &[T], r: impl Into<BigInt>) -> Result<NormMatrix> {
    let n = xbar.len();
    let r = r.into();
    let modulus = MonicPoly::binomial(n, r.clone())?;
    let x = to_big(xbar);
    let matrix = SquareMatrix::from_fn(n, |i, j| {
        if i >= j {
            x[i - j].clone()
        } else {
            &r * &x[n + i - j]
        }
    });
    Ok(NormMatrix { modulus, matrix })
}

/// `D^r_n(x) = det M^r_n(x)`, exact.
pub fn det_norm<T: Into<BigInt> + Clone>(xbar: &[T], r: impl Into<BigInt>) -> Result<BigInt> {
    Ok(build_matrix(xbar, r)?.det())
}

/// `D^r_n(x) mod p` by Gaussian elimination over `F_p`. A column with no
/// nonzero pivot means the determinant vanishes.
pub fn det_norm_mod_p(xbar: &[i64], r: i64, p: u64) -> Result<u64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = xbar.len();
    if n == 0 {
        return Err(Error::Zero("dimension n"));
    }
    let x: Vec<u64> = xbar.iter().map(|&v| normalize(v, p)).collect();
    let r0 = normalize(r, p);
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i >= j { x[i - j] } else { mul_mod(r0, x[n + i - j], p) })
                .collect()
        })
        .collect();
    Ok(det_mod_p_in_place(&mut a, p))
}

fn det_mod_p_in_place(a: &mut [Vec<u64>], p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if pivot_row != k {
            a.swap(k, pivot_row);
            det = (p - det) % p;
        }
        let pivot = a[k][k];
        det = mul_mod(det, pivot, p);
        let inv = mod_inverse(pivot, p).expect("nonzero residue is invertible mod a prime");
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let factor = mul_mod(a[i][k], inv, p);
            for j in k..n {
                let sub = mul_mod(factor, a[k][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
    }
    det
}

/// Adjugate of a norm matrix. The result lies in the same matrix algebra,
/// so it is returned as a [`NormMatrix`] over the same modulus.
pub fn adjugate(m: &NormMatrix) -> NormMatrix {
    NormMatrix {
        modulus: m.modulus.clone(),
        matrix: m.matrix.adjugate(),
    }
}

/// `M_q(x)` for an arbitrary monic `q` of degree `n = xbar.len()`.
pub fn build_matrix_general<T: Into<BigInt> + Clone>(xbar: &[T], q: &MonicPoly) -> Result<NormMatrix> {
    if xbar.len() != q.degree() {
        return Err(Error::Invalid(format!(
            "expected {} coefficients for a degree-{} modulus, got {}",
            q.degree(),
            q.degree(),
            xbar.len()
        )));
    }
    Ok(multiplication_matrix(&to_big(xbar), q))
}

/// `D_q(x) = det M_q(x)`.
pub fn det_norm_general<T: Into<BigInt> + Clone>(xbar: &[T], q: &MonicPoly) -> Result<BigInt> {
    Ok(build_matrix_general(xbar, q)?.det())
}

/// Small-integer evaluation of `D^r_n` for bounded searches; `None` if the
/// exact value does not fit in `i128`.
pub fn det_norm_i128(xbar: &[i64], r: i64) -> Option<i128> {
    det_norm(xbar, r).ok()?.to_i128()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn rows(m: &NormMatrix) -> Vec<Vec<i64>> {
        let n = m.dim();
        (0..n)
            .map(|i| (0..n).map(|j| m.matrix().get(i, j).to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn build_matrix_examples() {
        let m = build_matrix(&[5i64, 7], 3).unwrap();
        assert_eq!(rows(&m), vec![vec![5, 21], vec![7, 5]]);
        let e0 = build_matrix(&[1i64, 0, 0, 0], -6).unwrap();
        assert_eq!(e0.matrix(), &SquareMatrix::identity(4));
        let u = build_matrix(&[0i64, 1, 0], 2).unwrap();
        let cube = u.mul(&u).unwrap().mul(&u).unwrap();
        assert_eq!(cube.matrix(), &SquareMatrix::scaled_identity(3, &BigInt::from(2)));
        assert!(build_matrix::<i64>(&[], 2).is_err());
    }

    #[test]
    fn definition_matches_reduction_route() {
        let x = [3i64, -1, 4, 1, -5];
        for r in -3..=3 {
            for n in 1..=5 {
                let direct = build_matrix(&x[..n], r).unwrap();
                let general = build_matrix_general(&x[..n], &MonicPoly::binomial(n, r).unwrap()).unwrap();
                assert_eq!(direct, general, "n={n} r={r}");
                assert!(direct.is_multiplication_matrix());
            }
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_norm(&[1i64, 1], 2).unwrap(), BigInt::from(-1));
        assert_eq!(det_norm(&[1i64, 1, 1], 2).unwrap(), BigInt::from(1));
        assert_eq!(det_norm(&[7i64, 0, 0, 0, 0], 11).unwrap(), BigInt::from(7i64.pow(5)));
    }

    #[test]
    fn det_mod_p_examples() {
        assert_eq!(det_norm_mod_p(&[1, 1], 2, 7).unwrap(), 6);
        assert_eq!(det_norm_mod_p(&[0, 0, 0], 5, 7).unwrap(), 0);
        assert_eq!(det_norm_mod_p(&[3, 1], 2, 7).unwrap(), 0);
        assert!(det_norm_mod_p(&[3, 1], 2, 8).is_err());
    }

    #[test]
    fn adjugate_examples() {
        let id = build_matrix(&[1i64, 0, 0], 5).unwrap();
        assert_eq!(adjugate(&id), id);
        let m = build_matrix(&[1i64, 1], 2).unwrap();
        assert_eq!(adjugate(&m), build_matrix(&[1i64, -1], 2).unwrap());
        let m3 = build_matrix(&[1i64, 1, 1], 2).unwrap();
        let prod = adjugate(&m3).mul(&m3).unwrap();
        assert_eq!(prod.matrix(), &SquareMatrix::identity(3));
    }

    #[test]
    fn poly_mul_examples() {
        let q2 = MonicPoly::binomial(2, 2).unwrap();
        let b = PolyMod::from_i64(q2.clone(), &[4, -9]);
        assert_eq!(poly_mul_mod(&PolyMod::one(q2.clone()), &b).unwrap(), b);
        let prod = poly_mul_mod(
            &PolyMod::from_i64(q2.clone(), &[1, 1]),
            &PolyMod::from_i64(q2.clone(), &[1, -1]),
        )
        .unwrap();
        assert_eq!(prod.coeffs(), big(&[-1, 0]).as_slice());
        let q3 = MonicPoly::binomial(3, 2).unwrap();
        let u = PolyMod::from_i64(q3.clone(), &[0, 1, 0]);
        let u3 = poly_mul_mod(&poly_mul_mod(&u, &u).unwrap(), &u).unwrap();
        assert_eq!(u3.coeffs(), big(&[2, 0, 0]).as_slice());
        assert_eq!(
            poly_mul_mod(&u, &PolyMod::one(MonicPoly::binomial(3, 5).unwrap())),
            Err(Error::ModulusMismatch)
        );
    }

    #[test]
    fn general_modulus_examples() {
        let gauss = MonicPoly::from_i64(&[1, 0, 1]).unwrap();
        let m = build_matrix_general(&[2i64, 5], &gauss).unwrap();
        assert_eq!(rows(&m), vec![vec![2, -5], vec![5, 2]]);
        assert_eq!(det_norm_general(&[3i64, 4], &gauss).unwrap(), BigInt::from(25));

        let golden = MonicPoly::from_i64(&[-1, -1, 1]).unwrap();
        let m = build_matrix_general(&[0i64, 1], &golden).unwrap();
        assert_eq!(rows(&m), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(m.det(), BigInt::from(-1));

        let sqrt2 = MonicPoly::binomial(2, 2).unwrap();
        assert_eq!(det_norm_general(&[3i64, 2], &sqrt2).unwrap(), BigInt::one());
        assert_eq!(det_norm_general(&[1i64, 0, 0], &MonicPoly::from_i64(&[7, -2, 3, 1]).unwrap()).unwrap(), BigInt::one());

        assert_eq!(MonicPoly::from_i64(&[2, 1]).unwrap().degree(), 1);
        assert_eq!(MonicPoly::from_i64(&[1, 2, 3]), Err(Error::NotMonic));
        assert!(MonicPoly::from_i64(&[1]).is_err());
        assert!(build_matrix_general(&[1i64], &gauss).is_err());
    }

    #[test]
    fn bareiss_matches_laplace() {
        let m = SquareMatrix::from_rows(&[
            vec![0, 2, -1, 3],
            vec![0, 0, 4, 1],
            vec![5, -2, 0, 0],
            vec![1, 1, 1, 1],
        ])
        .unwrap();
        assert_eq!(m.det(), m.det_laplace());
        let singular = SquareMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.det().is_zero());
    }

    #[test]
    fn monic_display() {
        assert_eq!(MonicPoly::binomial(3, 2).unwrap().to_string(), "x^3 - 2");
        assert_eq!(MonicPoly::from_i64(&[-1, -1, 1]).unwrap().to_string(), "x^2 - x - 1");
        assert_eq!(MonicPoly::binomial(2, 2).unwrap().binomial_constant(), Some(BigInt::from(2)));
        assert_eq!(MonicPoly::from_i64(&[-1, -1, 1]).unwrap().binomial_constant(), None);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn element() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, i64)> {
        (1usize..=5).prop_flat_map(|n| {
            (
                prop::collection::vec(-20i64..=20, n),
                prop::collection::vec(-20i64..=20, n),
                -10i64..=10,
            )
        })
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative((a, b, r) in element()) {
            let q = MonicPoly::binomial(a.len(), r).unwrap();
            let za = PolyMod::from_i64(q.clone(), &a);
            let zb = PolyMod::from_i64(q.clone(), &b);
            let prod = poly_mul_mod(&za, &zb).unwrap();
            prop_assert_eq!(prod.norm(), za.norm() * zb.norm());
            prop_assert_eq!(za.matrix().mul(&zb.matrix()).unwrap(), prod.matrix());
            let coeffs = za.matrix().matrix().mul_vec(zb.coeffs());
            prop_assert_eq!(coeffs.as_slice(), prod.coeffs());
        }

        #[test]
        fn mod_p_matches_exact((a, _b, r) in element(), pi in 0usize..25) {
            let p = arith::primes_up_to(100)[pi];
            let exact = det_norm(&a, r).unwrap();
            let expected = exact.mod_floor_u64(p);
            prop_assert_eq!(det_norm_mod_p(&a, r, p).unwrap(), expected);
        }

        #[test]
        fn adjugate_stays_in_algebra((a, _b, r) in element()) {
            let m = build_matrix(&a, r).unwrap();
            let adj = adjugate(&m);
            prop_assert!(adj.is_multiplication_matrix());
            let n = m.dim();
            prop_assert_eq!(m.matrix().mul(adj.matrix()), SquareMatrix::scaled_identity(n, &m.det()));
        }
    }

    trait ModFloor {
        fn mod_floor_u64(&self, p: u64) -> u64;
    }

    impl ModFloor for BigInt {
        fn mod_floor_u64(&self, p: u64) -> u64 {
            use num_integer::Integer;
            self.mod_floor(&BigInt::from(p)).to_u64().unwrap()
        }
    }
}
