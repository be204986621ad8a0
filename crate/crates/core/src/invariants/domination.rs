use itertools::Itertools;
use serde::Serialize;

use crate::combinatorics::{Hypergraph, VertexSet};
use crate::error::{Error, Result};

/// `ε(H)` with a smallest edgewise dominant edge set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Epsilon {
    pub value: usize,
    pub witness: Vec<VertexSet>,
}

impl Serialize for Epsilon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Epsilon", 2)?;
        st.serialize_field("value", &self.value)?;
        let w: Vec<Vec<usize>> = self.witness.iter().map(|e| e.to_vec()).collect();
        st.serialize_field("witness", &w)?;
        st.end()
    }
}

/// Whether `edges` is edgewise dominant in `h`.
///
/// A non-isolated vertex is exempt when it lies in `⋃ edges` or in a trivial
/// (single-vertex) edge of `h`; every other non-isolated vertex needs a
/// neighbor in `⋃ edges`.
pub fn is_edgewise_dominant(h: &Hypergraph, edges: &[VertexSet]) -> bool {
    let union = edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
    let exempt = union.union(h.trivial_edge_vertices());
    h.covered_vertices()
        .difference(exempt)
        .iter()
        .all(|v| !h.neighbors(v).is_disjoint(union))
}

/// `ε(H) = min{|S| : S ⊆ E(H) edgewise dominant}`, searching by increasing `|S|`.
pub fn epsilon(h: &Hypergraph) -> Result<Epsilon> {
    if h.edges().is_empty() {
        return Err(Error::Edgeless);
    }
    for k in 0..=h.edges().len() {
        if let Some(s) = h
            .edges()
            .iter()
            .copied()
            .combinations(k)
            .find(|s| is_edgewise_dominant(h, s))
        {
            return Ok(Epsilon { value: k, witness: s });
        }
    }
    unreachable!("the full edge set covers every non-isolated vertex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, e: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(r, &e.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(epsilon(&hg(2, &[&[1, 2]])).unwrap().value, 1);
        let dual_path = hg(3, &[&[2], &[1, 3]]);
        let e = epsilon(&dual_path).unwrap();
        assert_eq!(e.value, 1);
        assert_eq!(e.witness, vec![VertexSet::of(&[1, 3])]);
        let path = hg(3, &[&[1, 2], &[2, 3]]);
        let e = epsilon(&path).unwrap();
        assert_eq!((e.value, e.witness.clone()), (1, vec![VertexSet::of(&[1, 2])]));
        assert_eq!(epsilon(&Hypergraph::new(3, vec![]).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn trivial_edges_alone_need_nothing() {
        assert_eq!(epsilon(&hg(2, &[&[1], &[2]])).unwrap().value, 0);
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        assert_eq!(epsilon(&hg(5, &[&[1, 2]])).unwrap().value, 1);
    }

    #[test]
    fn two_disjoint_edges_need_both() {
        assert_eq!(epsilon(&hg(4, &[&[1, 2], &[3, 4]])).unwrap().value, 2);
    }
}
