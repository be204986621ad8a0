use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::elimination::{bareiss_rank, integer_rank_q, mod_pow, rank_mod_p};
use super::field::FieldSpec;
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `"3/2"`, `"-1/4"`, or `"2"` for integers.
pub fn fraction_string(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_fraction(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Invalid(format!("`{s}` is not a fraction")))
}

/// Dense row-major matrix with rational entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| rational_int(x))
            })
            .collect();
        ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect()
    }

    /// Exact rank over `field`. Over `GF(p)` every denominator must be a unit mod `p`.
    pub fn rank(&self, field: FieldSpec) -> Result<usize> {
        if field.is_rational() {
            let big = self.integer_rows();
            let small: Option<Vec<Vec<i128>>> = big
                .iter()
                .map(|row| row.iter().map(|x| x.to_i128()).collect())
                .collect();
            return Ok(match small {
                Some(m) => integer_rank_q(&m, self.cols),
                None => bareiss_rank(big, self.cols).expect("BigInt elimination never overflows"),
            });
        }
        let p = field.characteristic() as u64;
        let pb = BigInt::from(p);
        let residue = |x: &BigInt| -> u64 {
            let r = x.mod_floor(&pb);
            r.to_u64().expect("residue below p")
        };
        let mut m = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                let q = self.get(i, j);
                let d = residue(q.denom());
                if d == 0 {
                    return Err(Error::Invalid(format!(
                        "entry {q} is not defined over GF({p})"
                    )));
                }
                let n = residue(q.numer());
                row.push(n * mod_pow(d, p - 2, p) % p);
            }
            m.push(row);
        }
        Ok(rank_mod_p(m, self.cols, p))
    }
}

/// Integer matrix rank over `field`, the fast path used by the homology kernel.
pub(crate) fn integer_rank(m: &[Vec<i128>], cols: usize, field: FieldSpec) -> usize {
    if m.is_empty() || cols == 0 {
        return 0;
    }
    if field.is_rational() {
        return integer_rank_q(m, cols);
    }
    let p = field.characteristic() as i128;
    let reduced = m
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p) as u64).collect())
        .collect();
    rank_mod_p(reduced, cols, p as u64)
}
