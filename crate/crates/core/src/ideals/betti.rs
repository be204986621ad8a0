//! Multigraded Betti numbers of monomial ideals via upper Koszul simplicial complexes:
//! `β_{i,a}(I) = dim_K H̃_{i-1}(K^a(I); K)` with
//! `K^a(I) = {τ ⊆ supp(a) square-free : x^{a-τ} ∈ I}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::monomial::{divides, support, total_degree, MonomialIdeal};
use super::symbolic::advance;
use crate::combinatorics::{maximal_sets, VertexSet};
use crate::exactalg::{FieldSpec, HomologyCache};
use crate::error::{Error, Result};

/// Nonzero entries `β_{i,a}` of the `N^r`-graded Betti table of an ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    r: usize,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Vec<u32>), usize> {
        &self.entries
    }

    pub fn get(&self, i: usize, a: &[u32]) -> usize {
        self.entries.get(&(i, a.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, b)| b)
            .sum()
    }

    /// `reg(I) = max{|a| - i : β_{i,a} ≠ 0}`.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, a)| total_degree(a) as i64 - *i as i64)
            .max()
            .expect("nonzero proper ideal has a nonempty Betti table")
    }

    /// `pd(I)`, the largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries
            .keys()
            .map(|(i, _)| *i)
            .max()
            .expect("nonzero proper ideal has a nonempty Betti table")
    }

    /// `pd(R/I) = pd(I) + 1`.
    pub fn pd_quotient(&self) -> usize {
        self.projective_dimension() + 1
    }

    /// CSV with header `i,a_1,...,a_r,beta`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i");
        for k in 1..=self.r {
            let _ = write!(out, ",a_{k}");
        }
        out.push_str(",beta\n");
        for ((i, a), b) in &self.entries {
            let _ = write!(out, "{i}");
            for x in a {
                let _ = write!(out, ",{x}");
            }
            let _ = writeln!(out, ",{b}");
        }
        out
    }
}

/// Facets of the upper Koszul complex `K^a(I)`; `None` when `x^a ∉ I` (void).
pub fn upper_koszul_facets(ideal: &MonomialIdeal, a: &[u32]) -> Option<Vec<VertexSet>> {
    if !ideal.contains(a) {
        return None;
    }
    let mut shifted = a.to_vec();
    let faces: Vec<VertexSet> = support(a)
        .subsets()
        .filter(|t| {
            for (k, x) in shifted.iter_mut().enumerate() {
                *x = a[k] - u32::from(t.contains(k + 1));
            }
            ideal.generators().iter().any(|g| divides(g, &shifted))
        })
        .collect();
    Some(maximal_sets(faces))
}

/// The full Betti table, scanning every multidegree below the join of the generators.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    let mut cache = HomologyCache::new(field);
    betti_table_with(ideal, &mut cache)
}

pub fn betti_table_with(ideal: &MonomialIdeal, cache: &mut HomologyCache) -> Result<BettiTable> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::TrivialIdeal);
    }
    let r = ideal.r();
    let join = ideal.join();
    let mut entries = BTreeMap::new();
    let mut offset = vec![0u32; r];
    let span = *join.iter().max().unwrap_or(&0);
    loop {
        if offset.iter().zip(&join).all(|(o, j)| o <= j) {
            if let Some(facets) = upper_koszul_facets(ideal, &offset) {
                for (k, &b) in cache.betti(&facets).iter().enumerate() {
                    // H̃_{k-1} contributes to homological index k
                    if b > 0 {
                        entries.insert((k, offset.clone()), b);
                    }
                }
            }
        }
        if !advance(&mut offset, span) {
            break;
        }
    }
    Ok(BettiTable { r, entries })
}

pub fn reg_via_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<i64> {
    Ok(betti_table(ideal, field)?.regularity())
}

pub fn pd_quotient_via_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.pd_quotient())
}
