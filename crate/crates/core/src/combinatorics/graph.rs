//! Simple graphs on `[r]` and their independence complexes.

use serde::{Deserialize, Serialize};
use super::complex::SimplicialComplex;
use super::hypergraph::Hypergraph;
use super::set::{maximal_sets, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "crate::io::EdgesJson", into = "crate::io::EdgesJson")]
pub struct Graph {
    r: usize,
    edges: Vec<VertexSet>,
}

impl Graph {
    pub fn new(r: usize, mut edges: Vec<VertexSet>) -> Result<Self> {
        if r > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { r, max: MAX_VERTICES });
        }
        let full = VertexSet::full(r);
        for e in &edges {
            if e.len() != 2 {
                return Err(Error::BadGraphEdge(e.to_vec()));
            }
            if let Some(v) = e.difference(full).iter().next() {
                return Err(Error::VertexOutOfRange { vertex: v, r });
            }
        }
        edges.sort();
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::Invalid("duplicate edge in graph".into()));
        }
        Ok(Graph { r, edges })
    }

    pub fn from_lists(r: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            if e.len() != 2 || e[0] == e[1] {
                return Err(Error::BadGraphEdge(e.clone()));
            }
            sets.push(VertexSet::try_from_vertices(e, r)?);
        }
        Self::new(r, sets)
    }

    pub fn edgeless(r: usize) -> Self {
        Graph { r, edges: vec![] }
    }

    /// Path `1 - 2 - ... - r`.
    pub fn path(r: usize) -> Self {
        let edges = (1..r).map(|v| VertexSet::of(&[v, v + 1])).collect();
        Graph::new(r, edges).expect("path is a valid graph")
    }

    /// Cycle `1 - 2 - ... - r - 1`, `r >= 3`.
    pub fn cycle(r: usize) -> Self {
        assert!(r >= 3);
        let mut edges: Vec<VertexSet> = (1..r).map(|v| VertexSet::of(&[v, v + 1])).collect();
        edges.push(VertexSet::of(&[1, r]));
        Graph::new(r, edges).expect("cycle is a valid graph")
    }

    pub fn complete(r: usize) -> Self {
        let mut edges = vec![];
        for u in 1..=r {
            for v in u + 1..=r {
                edges.push(VertexSet::of(&[u, v]));
            }
        }
        Graph::new(r, edges).expect("complete graph is valid")
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

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = VertexSet::of(&[u, v]);
        self.edges.binary_search(&e).is_ok()
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .fold(VertexSet::EMPTY, |acc, e| acc.union(e.without(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_subset(s))
    }

    /// `Δ(G)`: facets are the maximal independent sets.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let independent: Vec<VertexSet> = VertexSet::full(self.r)
            .subsets()
            .filter(|&s| self.is_independent(s))
            .collect();
        SimplicialComplex::generated_by(self.r, maximal_sets(independent))
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.r, self.edges.clone()).expect("graph edges form an antichain")
    }

    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.permute(perm)).collect();
        edges.sort();
        Graph { r: self.r, edges }
    }

    pub fn canonical_form(&self) -> Graph {
        super::iso::minimize_over_permutations(self.r, |p| self.permute(p), |g| g.edges.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_complex_examples() {
        let edge = Graph::from_lists(2, &[vec![1, 2]]).unwrap();
        assert_eq!(
            edge.independence_complex(),
            SimplicialComplex::from_lists(2, &[vec![1], vec![2]]).unwrap()
        );
        assert_eq!(
            Graph::path(3).independence_complex(),
            SimplicialComplex::from_lists(3, &[vec![1, 3], vec![2]]).unwrap()
        );
        assert_eq!(
            Graph::edgeless(3).independence_complex(),
            SimplicialComplex::simplex(3)
        );
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_lists(3, &[vec![2, 2]]),
            Err(Error::BadGraphEdge(_))
        ));
        assert!(Graph::from_lists(3, &[vec![1, 2], vec![2, 1]]).is_err());
        assert!(Graph::from_lists(3, &[vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn canonical_form_identifies_relabelled_paths() {
        let a = Graph::from_lists(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let b = Graph::from_lists(3, &[vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), Graph::complete(3).canonical_form());
    }
}
