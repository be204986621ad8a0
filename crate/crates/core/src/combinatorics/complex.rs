//! Simplicial complexes stored by their facets.

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use super::set::{antichain_violation, maximal_sets, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simplicial complex on the ground set `[r]`, represented by its facet antichain.
///
/// The void complex has no facets; `{∅}` has the single facet `∅`. Ground-set
/// elements that lie in no facet are allowed and are kept through every operation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "crate::io::ComplexJson", into = "crate::io::ComplexJson")]
pub struct SimplicialComplex {
    r: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Validates that `facets` is an antichain inside `[r]` and stores it canonically.
    pub fn new(r: usize, mut facets: Vec<VertexSet>) -> Result<Self> {
        if r > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { r, max: MAX_VERTICES });
        }
        let full = VertexSet::full(r);
        for f in &facets {
            if let Some(v) = f.difference(full).iter().next() {
                return Err(Error::VertexOutOfRange { vertex: v, r });
            }
        }
        facets.sort();
        facets.dedup();
        if let Some((a, b)) = antichain_violation(&facets) {
            return Err(Error::NotAntichain {
                smaller: a.to_vec(),
                larger: b.to_vec(),
            });
        }
        Ok(SimplicialComplex { r, facets })
    }

    pub fn from_lists(r: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let sets = facets
            .iter()
            .map(|f| VertexSet::try_from_vertices(f, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, sets)
    }

    /// The complex generated by `sets` (their inclusion-maximal members become facets).
    pub fn generated_by(r: usize, sets: Vec<VertexSet>) -> Self {
        debug_assert!(sets.iter().all(|s| s.is_subset(VertexSet::full(r))));
        SimplicialComplex {
            r,
            facets: maximal_sets(sets),
        }
    }

    pub fn void(r: usize) -> Self {
        SimplicialComplex { r, facets: vec![] }
    }

    /// `{∅}`.
    pub fn empty_face(r: usize) -> Self {
        SimplicialComplex {
            r,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `[r]`.
    pub fn simplex(r: usize) -> Self {
        SimplicialComplex {
            r,
            facets: vec![VertexSet::full(r)],
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == VertexSet::full(self.r)
    }

    /// A single facet, i.e. every subset of its vertex set is a face.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `dim Δ = max |F| - 1`; `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    /// `V(Δ)`, the union of the facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn contains_face(&self, sigma: VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// All faces, canonically sorted.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort();
        faces
    }

    /// `lk_Δ(σ)` on the same ground set; void when `σ ∉ Δ`.
    pub fn link(&self, sigma: VertexSet) -> SimplicialComplex {
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        // {F \ σ : σ ⊆ F} is already an antichain.
        let mut facets = facets;
        facets.sort();
        SimplicialComplex { r: self.r, facets }
    }

    /// `Δ[σ] = {τ ∈ Δ : τ ⊆ σ}`, keeping the ground set `[r]`.
    pub fn restriction(&self, sigma: VertexSet) -> SimplicialComplex {
        SimplicialComplex::generated_by(
            self.r,
            self.facets.iter().map(|f| f.intersection(sigma)).collect(),
        )
    }

    /// The subcomplex generated by the facets whose indices are set in `mask`.
    pub fn facet_subcomplex(&self, mask: u64) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, f)| *f)
            .collect();
        SimplicialComplex { r: self.r, facets }
    }

    pub fn is_cone_over(&self, v: usize) -> bool {
        !self.facets.is_empty() && self.facets.iter().all(|f| f.contains(v))
    }

    /// Cone over some vertex of Δ.
    pub fn is_cone(&self) -> bool {
        self.vertex_set().iter().any(|v| self.is_cone_over(v))
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Every restriction `Δ[σ]`, `σ ⊆ V(Δ)`, is pure.
    pub fn is_matroid(&self) -> bool {
        self.vertex_set()
            .subsets()
            .all(|sigma| self.restriction(sigma).is_pure())
    }

    /// Minimal subsets of `[r]` that are not faces, canonically sorted.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.r);
        let nonfaces: Vec<VertexSet> = full
            .subsets()
            .filter(|&t| !self.contains_face(t))
            .filter(|&t| t.iter().all(|v| self.contains_face(t.without(v))))
            .collect();
        let mut out = nonfaces;
        out.sort();
        out
    }

    /// `Δ* = {[r] \ τ : τ ∉ Δ}`. The dual of the full simplex is void.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|t| t.complement(self.r))
            .collect();
        Ok(SimplicialComplex::generated_by(self.r, facets))
    }

    /// `⟨F ∪ {v} : F ∈ F(Δ)⟩`.
    pub fn cone_with(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex::generated_by(self.r, self.facets.iter().map(|f| f.with(v)).collect())
    }

    /// Relabels vertices by a 0-based permutation of `[r]`.
    pub fn permute(&self, perm: &[usize]) -> SimplicialComplex {
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|f| f.permute(perm)).collect();
        facets.sort();
        SimplicialComplex { r: self.r, facets }
    }

    /// Lexicographically least facet list over all relabelings of `[r]`.
    pub fn canonical_form(&self) -> SimplicialComplex {
        super::iso::minimize_over_permutations(self.r, |p| self.permute(p), |c| c.facets.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(r: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(r, &f.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[2, 3], &[1, 3]])
    }

    #[test]
    fn rejects_non_antichain_and_names_pair() {
        let err = SimplicialComplex::from_lists(3, &[vec![1, 2], vec![1]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAntichain {
                smaller: vec![1],
                larger: vec![1, 2]
            }
        );
    }

    #[test]
    fn link_examples() {
        assert_eq!(hollow_triangle().link(VertexSet::of(&[1])), cx(3, &[&[2], &[3]]));
        let edge = cx(2, &[&[1, 2]]);
        assert_eq!(edge.link(VertexSet::EMPTY), edge);
        let two_points = cx(2, &[&[1], &[2]]);
        assert!(two_points.link(VertexSet::of(&[1, 2])).is_void());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(
            cx(3, &[&[1, 2], &[3]]).restriction(VertexSet::of(&[1, 3])),
            cx(3, &[&[1], &[3]])
        );
        let edge = cx(2, &[&[1, 2]]);
        assert_eq!(edge.restriction(VertexSet::of(&[1, 2])), edge);
        assert_eq!(
            cx(3, &[&[1, 2], &[2, 3]]).restriction(VertexSet::of(&[1, 3])),
            cx(3, &[&[1], &[3]])
        );
    }

    #[test]
    fn cone_examples() {
        assert!(cx(3, &[&[1, 2], &[1, 3]]).is_cone_over(1));
        let t = hollow_triangle();
        assert!((1..=3).all(|v| !t.is_cone_over(v)));
        assert!(!t.is_cone());
        assert!(cx(1, &[&[1]]).is_cone_over(1));
        assert!(!SimplicialComplex::empty_face(2).is_cone());
    }

    #[test]
    fn matroid_examples() {
        assert!(hollow_triangle().is_matroid());
        assert!(!cx(3, &[&[1, 2], &[3]]).is_matroid());
        assert!(cx(3, &[&[1, 2], &[2, 3]]).is_matroid());
        // path 1-2-3-4 as a 1-dimensional complex: restriction to {1,4} is two points,
        // to {1,2,4} is an edge plus a point
        assert!(!cx(4, &[&[1, 2], &[2, 3], &[3, 4]]).is_matroid());
    }

    #[test]
    fn alexander_dual_examples() {
        assert_eq!(
            cx(2, &[&[1], &[2]]).alexander_dual().unwrap(),
            SimplicialComplex::empty_face(2)
        );
        assert_eq!(
            hollow_triangle().alexander_dual().unwrap(),
            SimplicialComplex::empty_face(3)
        );
        let d = cx(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(d.alexander_dual().unwrap().alexander_dual().unwrap(), d);
        assert!(SimplicialComplex::simplex(3).alexander_dual().unwrap().is_void());
        assert_eq!(SimplicialComplex::void(2).alexander_dual(), Err(Error::VoidComplex));
    }

    #[test]
    fn minimal_nonfaces_of_path_complex() {
        let d = cx(3, &[&[1, 3], &[2]]);
        assert_eq!(d.minimal_nonfaces(), vec![VertexSet::of(&[1, 2]), VertexSet::of(&[2, 3])]);
    }

    #[test]
    fn faces_of_hollow_triangle() {
        assert_eq!(hollow_triangle().faces().len(), 7);
        assert_eq!(SimplicialComplex::empty_face(3).faces(), vec![VertexSet::EMPTY]);
        assert!(SimplicialComplex::void(3).faces().is_empty());
    }
}
