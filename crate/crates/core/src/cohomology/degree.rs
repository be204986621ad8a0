use serde::Serialize;

use crate::combinatorics::{SimplicialComplex, VertexSet};
use crate::exactalg::{FieldSpec, HomologyCache};
use crate::ideals::MonomialIdeal;

/// A multidegree `α ∈ Z^r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(alpha: Vec<i64>) -> Self {
        DegreeVector(alpha)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `G_α = {j : α_j < 0}`.
    pub fn negative_support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x < 0)
            .fold(VertexSet::EMPTY, |acc, (j, _)| acc.with(j + 1))
    }

    /// `|α|`.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

/// Indices (into `lk_Δ(G_α)`'s facet list) and facets of `Δ_α(I_Δ^(n))`.
fn qualifying_link_facets(
    complex: &SimplicialComplex,
    n: u32,
    alpha: &DegreeVector,
) -> Vec<VertexSet> {
    let g = alpha.negative_support();
    let link = complex.link(g);
    link.facets()
        .iter()
        .filter(|f| {
            let outside = f.union(g);
            let s: i64 = alpha
                .coords()
                .iter()
                .enumerate()
                .filter(|(j, _)| !outside.contains(j + 1))
                .map(|(_, &x)| x)
                .sum();
            s <= n as i64 - 1
        })
        .copied()
        .collect()
}

/// `Δ_α(I_Δ^(n))`: the facets `F` of `lk_Δ(G_α)` with `Σ_{i ∉ F ∪ G_α} α_i ≤ n - 1`.
/// Void when `G_α ∉ Δ` or no facet qualifies.
pub fn degree_complex(complex: &SimplicialComplex, n: u32, alpha: &DegreeVector) -> SimplicialComplex {
    assert_eq!(alpha.len(), complex.r(), "degree vector length must equal r");
    SimplicialComplex::generated_by(complex.r(), qualifying_link_facets(complex, n, alpha))
}

/// `Δ_α(I) = {F ⊆ [r] \ G_α : x^α ∉ I R_F}` for an arbitrary monomial ideal, read off
/// directly from the generators: `x^α ∈ I R_F` iff some generator `x^b` has
/// `b_i ≤ α_i` for every `i ∉ F ∪ G_α`.
pub fn degree_complex_direct(ideal: &MonomialIdeal, alpha: &DegreeVector) -> SimplicialComplex {
    let r = ideal.r();
    assert_eq!(alpha.len(), r, "degree vector length must equal r");
    let g = alpha.negative_support();
    let in_localization = |f: VertexSet| {
        let inverted = f.union(g);
        ideal.generators().iter().any(|b| {
            (1..=r)
                .filter(|&i| !inverted.contains(i))
                .all(|i| b[i - 1] as i64 <= alpha.coords()[i - 1])
        })
    };
    let faces: Vec<VertexSet> = g
        .complement(r)
        .subsets()
        .filter(|&f| !in_localization(f))
        .collect();
    SimplicialComplex::generated_by(r, faces)
}

/// `dim_K H^i_m(R / I_Δ^(n))_α`.
pub fn local_coh_dim(
    complex: &SimplicialComplex,
    n: u32,
    alpha: &DegreeVector,
    i: i64,
    field: FieldSpec,
) -> usize {
    let facets = qualifying_link_facets(complex, n, alpha);
    let g = alpha.negative_support().len() as i64;
    HomologyCache::new(field).dim(&facets, i - g - 1)
}
