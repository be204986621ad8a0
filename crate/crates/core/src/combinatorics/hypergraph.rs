//! Simple hypergraphs (edge antichains) and their duals.

use serde::{Deserialize, Serialize};
use super::set::{antichain_violation, minimal_sets, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple hypergraph on the vertex set `[r]`. Trivial (singleton) edges are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "crate::io::EdgesJson", into = "crate::io::EdgesJson")]
pub struct Hypergraph {
    r: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(r: usize, mut edges: Vec<VertexSet>) -> Result<Self> {
        if r > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { r, max: MAX_VERTICES });
        }
        let full = VertexSet::full(r);
        for e in &edges {
            if e.is_empty() {
                return Err(Error::EmptyHyperedge);
            }
            if let Some(v) = e.difference(full).iter().next() {
                return Err(Error::VertexOutOfRange { vertex: v, r });
            }
        }
        edges.sort();
        edges.dedup();
        if let Some((a, b)) = antichain_violation(&edges) {
            return Err(Error::NotAntichain {
                smaller: a.to_vec(),
                larger: b.to_vec(),
            });
        }
        Ok(Hypergraph { r, edges })
    }

    pub fn from_lists(r: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let sets = edges
            .iter()
            .map(|e| VertexSet::try_from_vertices(e, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, sets)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    /// `|V(H)|`: the declared vertex set `[r]`, isolated vertices included.
    pub fn vertex_count(&self) -> usize {
        self.r
    }

    /// Vertices lying in at least one edge.
    pub fn covered_vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    /// Vertices lying in a singleton edge.
    pub fn trivial_edge_vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| e.len() == 1)
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    /// Distinct vertices sharing an edge with `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
            .without(v)
    }

    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_disjoint(c))
    }

    /// `H*`, whose edges are the minimal vertex covers of `H`.
    pub fn dual(&self) -> Result<Hypergraph> {
        if self.edges.is_empty() {
            return Err(Error::Edgeless);
        }
        let covers: Vec<VertexSet> = VertexSet::full(self.r)
            .subsets()
            .filter(|&c| self.is_vertex_cover(c))
            .collect();
        Ok(Hypergraph {
            r: self.r,
            edges: minimal_sets(covers),
        })
    }

    pub fn permute(&self, perm: &[usize]) -> Hypergraph {
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.permute(perm)).collect();
        edges.sort();
        Hypergraph { r: self.r, edges }
    }

    pub fn canonical_form(&self) -> Hypergraph {
        super::iso::minimize_over_permutations(self.r, |p| self.permute(p), |h| h.edges.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, e: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(r, &e.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(hg(2, &[&[1, 2]]).dual().unwrap(), hg(2, &[&[1], &[2]]));
        assert_eq!(hg(3, &[&[1, 2], &[2, 3]]).dual().unwrap(), hg(3, &[&[2], &[1, 3]]));
        assert_eq!(
            hg(3, &[&[1, 2], &[2, 3], &[1, 3]]).dual().unwrap(),
            hg(3, &[&[1, 2], &[1, 3], &[2, 3]])
        );
        assert_eq!(hg(3, &[]).dual(), Err(Error::Edgeless));
    }

    #[test]
    fn rejects_empty_edge_and_containment() {
        assert_eq!(Hypergraph::from_lists(2, &[vec![]]), Err(Error::EmptyHyperedge));
        assert!(matches!(
            Hypergraph::from_lists(3, &[vec![1], vec![1, 3]]),
            Err(Error::NotAntichain { .. })
        ));
    }

    #[test]
    fn neighbors_exclude_self() {
        let h = hg(4, &[&[1, 2, 3], &[4]]);
        assert_eq!(h.neighbors(1), VertexSet::of(&[2, 3]));
        assert_eq!(h.neighbors(4), VertexSet::EMPTY);
        assert_eq!(h.trivial_edge_vertices(), VertexSet::of(&[4]));
    }
}
