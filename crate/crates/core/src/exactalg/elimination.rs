//! Fraction-free elimination over the integers and plain elimination mod p.
//!
//! Integer routines run on `i128` with checked arithmetic and are rerun on
//! `BigInt` when an intermediate overflows, so results are always exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) trait ExactInt: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `a*b - c*d`, or `None` on overflow.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, d: &Self) -> Self;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert_eq!(self % d, 0);
        self / d
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

/// Bareiss rank; `None` on overflow.
pub(crate) fn bareiss_rank<T: ExactInt>(mut m: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = T::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = T::mul_sub(&m[rank][c], &m[i][j], &m[i][c], &m[rank][j])?;
                m[i][j] = v.div_exact(&prev);
            }
            m[i][c] = T::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank of an integer matrix over the rationals.
pub(crate) fn integer_rank_q(m: &[Vec<i128>], cols: usize) -> usize {
    match bareiss_rank(m.to_vec(), cols) {
        Some(r) => r,
        None => {
            let big: Vec<Vec<BigInt>> = m
                .iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_rank(big, cols).expect("BigInt elimination never overflows")
        }
    }
}

/// Rank over `GF(p)` of a matrix given by residues already reduced mod `p`.
pub(crate) fn rank_mod_p(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let rows = m.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_pow(m[rank][c], p - 2, p);
        for j in c..cols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        for i in rank + 1..rows {
            let f = m[i][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                m[i][j] = (m[i][j] + p - f * m[rank][j] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Solves a square system `[A | b]` (n rows, n+1 columns) by fraction-free
/// Gauss-Jordan elimination. Returns `(numerators, denominator)` with
/// `x_i = numerators[i] / denominator`. Outer `None` on overflow, inner `None`
/// when `A` is singular.
pub(crate) fn solve_fraction_free<T: ExactInt>(mut a: Vec<Vec<T>>) -> Option<Option<(Vec<T>, T)>> {
    let n = a.len();
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Some(None);
        };
        a.swap(k, p);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..=n {
                if j == k {
                    continue;
                }
                let v = T::mul_sub(&a[k][k], &a[i][j], &a[i][k], &a[k][j])?;
                a[i][j] = v.div_exact(&prev);
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let nums = a.iter().map(|row| row[n].clone()).collect();
    Some(Some((nums, prev)))
}
