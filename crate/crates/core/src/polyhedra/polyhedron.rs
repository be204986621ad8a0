use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::elimination::solve_fraction_free;
use crate::exactalg::{fraction_string, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    AtLeast,
    AtMost,
}

/// `coeffs · x (≥ | ≤) rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    /// `Σ_{i ∈ support} x_i (rel) rhs` with 1-based indices.
    pub fn sum_over(r: usize, support: impl IntoIterator<Item = usize>, relation: Relation, rhs: i64) -> Self {
        let mut coeffs = vec![Rational::zero(); r];
        for i in support {
            coeffs[i - 1] = Rational::one();
        }
        Constraint::new(coeffs, relation, Rational::from_integer(rhs.into()))
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum();
        match self.relation {
            Relation::AtLeast => lhs >= self.rhs,
            Relation::AtMost => lhs <= self.rhs,
        }
    }

    pub fn is_tight_at(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum();
        lhs == self.rhs
    }

    /// The same row scaled by the lcm of its denominators.
    fn integer_row(&self) -> (Vec<BigInt>, BigInt) {
        let l = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scale = |q: &Rational| (q * Rational::from_integer(l.clone())).to_integer();
        (self.coeffs.iter().map(scale).collect(), scale(&self.rhs))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if wrote { "+" } else { "" };
            let abs = c.abs();
            if wrote {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if abs.is_one() {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "{}*x{}", fraction_string(&abs), i + 1)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        let rel = match self.relation {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
        };
        write!(f, " {rel} {}", fraction_string(&self.rhs))
    }
}

/// An exact linear constraint system in `R^r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPolyhedron {
    dim: usize,
    constraints: Vec<Constraint>,
}

/// A constraint in integer form, kept both as `i128` (when it fits) and `BigInt`.
struct IntRow {
    small: Option<(Vec<i128>, i128)>,
    big: (Vec<BigInt>, BigInt),
    relation: Relation,
}

impl IntRow {
    fn admits_small(&self, nums: &[i128], den: i128) -> Option<bool> {
        let (coeffs, rhs) = self.small.as_ref()?;
        let mut lhs: i128 = 0;
        for (c, x) in coeffs.iter().zip(nums) {
            lhs = lhs.checked_add(c.checked_mul(*x)?)?;
        }
        let rhs = rhs.checked_mul(den)?;
        Some(match self.relation {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
        })
    }

    fn admits_big(&self, nums: &[BigInt], den: &BigInt) -> bool {
        let (coeffs, rhs) = &self.big;
        let lhs: BigInt = coeffs.iter().zip(nums).map(|(c, x)| c * x).sum();
        let rhs = rhs * den;
        match self.relation {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
        }
    }
}

impl RationalPolyhedron {
    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Result<Self> {
        if let Some(c) = constraints.iter().find(|c| c.coeffs.len() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: c.coeffs.len(),
            });
        }
        Ok(RationalPolyhedron { dim, constraints })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Appends `x_i ≥ 0` for every coordinate.
    pub fn with_nonnegativity(mut self) -> Self {
        for i in 1..=self.dim {
            self.constraints
                .push(Constraint::sum_over(self.dim, [i], Relation::AtLeast, 0));
        }
        self
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }

    fn integer_rows(&self) -> Vec<IntRow> {
        self.constraints
            .iter()
            .map(|c| {
                let big = c.integer_row();
                let small = big
                    .0
                    .iter()
                    .map(|v| v.to_i128())
                    .collect::<Option<Vec<_>>>()
                    .zip(big.1.to_i128());
                IntRow {
                    small,
                    big,
                    relation: c.relation,
                }
            })
            .collect()
    }

    /// All vertices, lexicographically sorted.
    ///
    /// Every `dim`-subset of constraints is solved as a system of equalities;
    /// nonsingular solutions satisfying every constraint are the vertices.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        let rows = self.integer_rows();
        let r = self.dim;
        let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
        for basis in (0..rows.len()).combinations(r) {
            if let Some(v) = solve_small(&rows, &basis, r) {
                if let Some(v) = v {
                    found.insert(v);
                }
                continue;
            }
            if let Some(v) = solve_big(&rows, &basis) {
                found.insert(v);
            }
        }
        found.into_iter().collect()
    }

    /// `max |v|` over the vertices, with the lexicographically first maximizer.
    pub fn max_vertex_sum(&self) -> Option<(Rational, Vec<Rational>)> {
        let mut best: Option<(Rational, Vec<Rational>)> = None;
        for v in self.vertices() {
            let s: Rational = v.iter().sum();
            if best.as_ref().map_or(true, |(b, _)| s > *b) {
                best = Some((s, v));
            }
        }
        best
    }

    /// The recession cone `{y : coeffs · y (≥ | ≤) 0}`.
    pub fn recession_cone(&self) -> RationalPolyhedron {
        RationalPolyhedron {
            dim: self.dim,
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint::new(c.coeffs.clone(), c.relation, Rational::zero()))
                .collect(),
        }
    }

    /// Whether the recession cone is `{0}`.
    ///
    /// For each sign pattern on the coordinates not already constrained to be
    /// nonnegative, the cone is cut by `Σ ±y_i = 1` inside the matching orthant;
    /// that slice is a bounded polyhedron, so it is nonempty exactly when it
    /// has a vertex.
    pub fn is_bounded(&self) -> bool {
        let r = self.dim;
        let cone = self.recession_cone();
        let free: Vec<usize> = (0..r)
            .filter(|&i| {
                !cone.constraints.iter().any(|c| {
                    c.relation == Relation::AtLeast
                        && c.coeffs[i].is_positive()
                        && c.coeffs.iter().enumerate().all(|(j, q)| j == i || q.is_zero())
                })
            })
            .collect();
        for pattern in 0u64..(1 << free.len()) {
            let mut sign = vec![Rational::one(); r];
            for (k, &i) in free.iter().enumerate() {
                if pattern >> k & 1 == 1 {
                    sign[i] = -Rational::one();
                }
            }
            let mut slice = cone.constraints.clone();
            for &i in &free {
                let mut e = vec![Rational::zero(); r];
                e[i] = sign[i].clone();
                slice.push(Constraint::new(e, Relation::AtLeast, Rational::zero()));
            }
            slice.push(Constraint::new(sign.clone(), Relation::AtLeast, Rational::one()));
            slice.push(Constraint::new(sign, Relation::AtMost, Rational::one()));
            let slice = RationalPolyhedron { dim: r, constraints: slice };
            if !slice.vertices().is_empty() {
                return false;
            }
        }
        true
    }

    /// `{m·x : x ∈ P}` as a constraint system (right-hand sides scaled by `m`).
    pub fn scaled(&self, m: &Rational) -> RationalPolyhedron {
        RationalPolyhedron {
            dim: self.dim,
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint::new(c.coeffs.clone(), c.relation, &c.rhs * m))
                .collect(),
        }
    }
}

impl fmt::Display for RationalPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.constraints.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// `None` means the `i128` path overflowed; `Some(None)` is a singular or infeasible basis.
fn solve_small(rows: &[IntRow], basis: &[usize], r: usize) -> Option<Option<Vec<Rational>>> {
    let mut a = Vec::with_capacity(r);
    for &b in basis {
        let (coeffs, rhs) = rows[b].small.as_ref()?;
        let mut row = coeffs.clone();
        row.push(*rhs);
        a.push(row);
    }
    let Some((mut nums, mut den)) = solve_fraction_free(a)? else {
        return Some(None);
    };
    if den < 0 {
        den = den.checked_neg()?;
        for x in nums.iter_mut() {
            *x = x.checked_neg()?;
        }
    }
    for row in rows {
        if !row.admits_small(&nums, den)? {
            return Some(None);
        }
    }
    let den = BigInt::from(den);
    Some(Some(
        nums.into_iter()
            .map(|x| Rational::new(BigInt::from(x), den.clone()))
            .collect(),
    ))
}

fn solve_big(rows: &[IntRow], basis: &[usize]) -> Option<Vec<Rational>> {
    let a = basis
        .iter()
        .map(|&b| {
            let (coeffs, rhs) = &rows[b].big;
            let mut row = coeffs.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let (mut nums, mut den) = solve_fraction_free::<BigInt>(a).expect("BigInt never overflows")?;
    if den.is_negative() {
        den = -den;
        for x in nums.iter_mut() {
            *x = -x.clone();
        }
    }
    if !rows.iter().all(|row| row.admits_big(&nums, &den)) {
        return None;
    }
    Some(nums.into_iter().map(|x| Rational::new(x, den.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rational, rational_int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational_int(x)).collect()
    }

    #[test]
    fn standard_simplex_vertices() {
        let p = RationalPolyhedron::new(2, vec![Constraint::sum_over(2, [1, 2], Relation::AtMost, 1)])
            .unwrap()
            .with_nonnegativity();
        assert_eq!(p.vertices(), vec![ints(&[0, 0]), ints(&[0, 1]), ints(&[1, 0])]);
        assert!(p.is_bounded());
    }

    #[test]
    fn fractional_vertex() {
        // 2x1 + x2 >= 1, x1 + 2x2 >= 1, x >= 0
        let c = |a: i64, b: i64| Constraint::new(ints(&[a, b]), Relation::AtLeast, rational_int(1));
        let p = RationalPolyhedron::new(2, vec![c(2, 1), c(1, 2)]).unwrap().with_nonnegativity();
        assert_eq!(
            p.vertices(),
            vec![ints(&[0, 1]), vec![rational(1, 3), rational(1, 3)], ints(&[1, 0])]
        );
        assert!(!p.is_bounded());
        assert_eq!(p.max_vertex_sum().unwrap().0, rational_int(1));
    }

    #[test]
    fn free_coordinates_boundedness() {
        // -1 <= x1 <= 1 with no sign constraint
        let p = RationalPolyhedron::new(
            1,
            vec![
                Constraint::new(ints(&[1]), Relation::AtMost, rational_int(1)),
                Constraint::new(ints(&[1]), Relation::AtLeast, rational_int(-1)),
            ],
        )
        .unwrap();
        assert!(p.is_bounded());
        assert_eq!(p.vertices(), vec![ints(&[-1]), ints(&[1])]);
        let half_line =
            RationalPolyhedron::new(1, vec![Constraint::new(ints(&[1]), Relation::AtMost, rational_int(1))])
                .unwrap();
        assert!(!half_line.is_bounded());
        assert_eq!(half_line.vertices(), vec![ints(&[1])]);
    }

    #[test]
    fn empty_polyhedron_has_no_vertices() {
        let p = RationalPolyhedron::new(
            1,
            vec![
                Constraint::new(ints(&[1]), Relation::AtLeast, rational_int(2)),
                Constraint::new(ints(&[1]), Relation::AtMost, rational_int(1)),
            ],
        )
        .unwrap();
        assert!(p.vertices().is_empty());
    }

    #[test]
    fn rational_coefficients_are_scaled() {
        let p = RationalPolyhedron::new(
            1,
            vec![Constraint::new(vec![rational(2, 3)], Relation::AtMost, rational(1, 2))],
        )
        .unwrap()
        .with_nonnegativity();
        assert_eq!(p.vertices(), vec![vec![rational(0, 1)], vec![rational(3, 4)]]);
    }

    #[test]
    fn display_is_readable() {
        let c = Constraint::sum_over(3, [1, 3], Relation::AtLeast, 1);
        assert_eq!(c.to_string(), "x1 + x3 >= 1");
    }
}
