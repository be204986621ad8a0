use serde::Serialize;

use super::degree::DegreeVector;
use crate::combinatorics::{SimplicialComplex, VertexSet};
use crate::exactalg::{FieldSpec, HomologyCache};
use crate::error::{Error, Result};
use crate::extended::ExtInt;

/// `a_i(R / I_Δ^(n))` for `i = 0..=r`, each with a maximizing degree when finite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AInvariantProfile {
    values: Vec<ExtInt>,
    witnesses: Vec<Option<DegreeVector>>,
}

/// A pair `(i, α)` realizing `reg(R / I^(n)) = |α| + i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RegWitness {
    pub i: usize,
    pub alpha: DegreeVector,
}

impl AInvariantProfile {
    fn empty(r: usize) -> Self {
        AInvariantProfile {
            values: vec![ExtInt::NegInfinity; r + 1],
            witnesses: vec![None; r + 1],
        }
    }

    fn record(&mut self, i: usize, alpha: &DegreeVector) {
        let d = ExtInt::Finite(alpha.degree());
        if d > self.values[i] {
            self.values[i] = d;
            self.witnesses[i] = Some(alpha.clone());
        }
    }

    /// The profile of a list of nonvanishing degrees over `[r]`; earlier entries win ties.
    pub fn from_degrees(r: usize, degrees: &[(usize, DegreeVector)]) -> Self {
        let mut p = Self::empty(r);
        for (i, alpha) in degrees {
            p.record(*i, alpha);
        }
        p
    }

    pub fn a(&self, i: usize) -> ExtInt {
        self.values[i]
    }

    pub fn values(&self) -> &[ExtInt] {
        &self.values
    }

    pub fn witness(&self, i: usize) -> Option<&DegreeVector> {
        self.witnesses[i].as_ref()
    }

    /// `reg(R/I) = max_i (a_i + i)`.
    pub fn quotient_regularity(&self) -> ExtInt {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &a)| a + i as i64)
            .max()
            .unwrap_or(ExtInt::NegInfinity)
    }

    /// The smallest `i` attaining the regularity, with its witness.
    pub fn regularity_witness(&self) -> Option<RegWitness> {
        let target = self.quotient_regularity();
        if !target.is_finite() {
            return None;
        }
        (0..self.values.len())
            .find(|&i| self.values[i] + i as i64 == target)
            .map(|i| RegWitness {
                i,
                alpha: self.witnesses[i].clone().expect("finite a_i has a witness"),
            })
    }
}

/// Calls `visit(i, α)` for every `(i, α)` in the search box with `H^i_m(R/I_Δ^(n))_α ≠ 0`.
///
/// Faces `G` are visited in canonical order, and for each the nonnegative
/// coordinates run through `{0..n-1}` in odometer order (first coordinate fastest).
fn scan_nonvanishing(
    complex: &SimplicialComplex,
    n: u32,
    cache: &mut HomologyCache,
    mut visit: impl FnMut(usize, &DegreeVector),
) {
    let r = complex.r();
    for g in complex.faces() {
        let link = complex.link(g);
        let free: Vec<usize> = g.complement(r).iter().collect();
        // For each link facet F: the free coordinates outside F (those that are summed).
        let outside: Vec<Vec<usize>> = link
            .facets()
            .iter()
            .map(|f| {
                free.iter()
                    .enumerate()
                    .filter(|(_, &v)| !f.contains(v))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        let mut values = vec![0u32; free.len()];
        let mut qualifying: Vec<VertexSet> = Vec::with_capacity(link.facets().len());
        loop {
            qualifying.clear();
            for (f, cols) in link.facets().iter().zip(&outside) {
                let s: u32 = cols.iter().map(|&k| values[k]).sum();
                if s < n {
                    qualifying.push(*f);
                }
            }
            if !qualifying.is_empty() {
                let betti = cache.betti(&qualifying).to_vec();
                if betti.iter().any(|&b| b > 0) {
                    let mut alpha = vec![-1i64; r];
                    for (k, &v) in free.iter().enumerate() {
                        alpha[v - 1] = values[k] as i64;
                    }
                    let alpha = DegreeVector::new(alpha);
                    for (k, &b) in betti.iter().enumerate() {
                        if b > 0 {
                            visit(k + g.len(), &alpha);
                        }
                    }
                }
            }
            if n <= 1 || !crate::ideals::advance(&mut values, n - 1) {
                break;
            }
        }
    }
}

/// All `(i, α)` with nonvanishing local cohomology inside the finite search box.
pub fn nonvanishing_degrees(
    complex: &SimplicialComplex,
    n: u32,
    field: FieldSpec,
) -> Result<Vec<(usize, DegreeVector)>> {
    nonvanishing_degrees_with(complex, n, &mut HomologyCache::new(field))
}

pub fn nonvanishing_degrees_with(
    complex: &SimplicialComplex,
    n: u32,
    cache: &mut HomologyCache,
) -> Result<Vec<(usize, DegreeVector)>> {
    check_input(complex, n)?;
    let mut out = Vec::new();
    scan_nonvanishing(complex, n, cache, |i, a| out.push((i, a.clone())));
    Ok(out)
}

fn check_input(complex: &SimplicialComplex, n: u32) -> Result<()> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if n == 0 {
        return Err(Error::Invalid("symbolic powers need n >= 1".into()));
    }
    Ok(())
}

pub fn a_invariants(complex: &SimplicialComplex, n: u32, field: FieldSpec) -> Result<AInvariantProfile> {
    a_invariants_with(complex, n, &mut HomologyCache::new(field))
}

pub fn a_invariants_with(
    complex: &SimplicialComplex,
    n: u32,
    cache: &mut HomologyCache,
) -> Result<AInvariantProfile> {
    check_input(complex, n)?;
    let mut profile = AInvariantProfile::empty(complex.r());
    scan_nonvanishing(complex, n, cache, |i, alpha| profile.record(i, alpha));
    Ok(profile)
}

/// `reg(I_Δ^(n)) = reg(R / I_Δ^(n)) + 1`; `-∞` for the zero ideal (Δ the full simplex).
pub fn reg_symbolic(complex: &SimplicialComplex, n: u32, field: FieldSpec) -> Result<ExtInt> {
    reg_symbolic_with(complex, n, &mut HomologyCache::new(field))
}

pub fn reg_symbolic_with(
    complex: &SimplicialComplex,
    n: u32,
    cache: &mut HomologyCache,
) -> Result<ExtInt> {
    Ok(reg_symbolic_with_witness(complex, n, cache)?.0)
}

pub fn reg_symbolic_with_witness(
    complex: &SimplicialComplex,
    n: u32,
    cache: &mut HomologyCache,
) -> Result<(ExtInt, Option<RegWitness>)> {
    check_input(complex, n)?;
    if complex.is_full_simplex() {
        return Ok((ExtInt::NegInfinity, None));
    }
    let profile = a_invariants_with(complex, n, cache)?;
    Ok((profile.quotient_regularity() + 1, profile.regularity_witness()))
}

/// `max{d : H̃_{d-1}(lk_Δ σ; K) ≠ 0 for some σ ∈ Δ}`, which is `reg(R / I_Δ)`.
pub fn reg_links(complex: &SimplicialComplex, field: FieldSpec) -> Result<i64> {
    reg_links_with(complex, &mut HomologyCache::new(field))
}

pub fn reg_links_with(complex: &SimplicialComplex, cache: &mut HomologyCache) -> Result<i64> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if complex.is_full_simplex() {
        return Err(Error::FullSimplex);
    }
    let mut best: Option<i64> = None;
    for sigma in complex.faces() {
        let link = complex.link(sigma);
        let betti = cache.betti(link.facets());
        if let Some(k) = betti.iter().rposition(|&b| b > 0) {
            best = Some(best.map_or(k as i64, |b: i64| b.max(k as i64)));
        }
    }
    best.ok_or_else(|| Error::Invalid("no link has nonvanishing homology".into()))
}
