use serde::Serialize;

use crate::combinatorics::{Graph, VertexSet};

/// Matching numbers of a graph, each with a matching attaining it.
///
/// `ordered_witness` lists the pairs `(u_i, v_i)` in their admissible order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MatchingNumbers {
    #[serde(rename = "match")]
    pub matching: usize,
    pub induced: usize,
    #[serde(rename = "ordmatch")]
    pub ordered: usize,
    pub matching_witness: Vec<[usize; 2]>,
    pub induced_witness: Vec<[usize; 2]>,
    pub ordered_witness: Vec<[usize; 2]>,
}

/// Every matching of `g` (including the empty one), as lists of edges.
fn all_matchings(g: &Graph) -> Vec<Vec<VertexSet>> {
    fn extend(edges: &[VertexSet], start: usize, used: VertexSet, cur: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        out.push(cur.clone());
        for k in start..edges.len() {
            if edges[k].is_disjoint(used) {
                cur.push(edges[k]);
                extend(edges, k + 1, used.union(edges[k]), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g.edges(), 0, VertexSet::EMPTY, &mut Vec::new(), &mut out);
    out
}

fn covered(m: &[VertexSet]) -> VertexSet {
    m.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
}

/// The edges of `g` inside `vertices` are exactly `m`.
fn is_induced(g: &Graph, m: &[VertexSet]) -> bool {
    let vs = covered(m);
    g.edges().iter().filter(|e| e.is_subset(vs)).count() == m.len()
}

/// Searches for an order and orientation `(u_1, v_1), ..., (u_s, v_s)` of `m`
/// with `{u_i}` independent and no edge `{u_i, v_j}` for `j < i`.
fn ordering(g: &Graph, m: &[VertexSet]) -> Option<Vec<[usize; 2]>> {
    fn place(g: &Graph, m: &[VertexSet], used: &mut Vec<bool>, us: VertexSet, vs: VertexSet, acc: &mut Vec<[usize; 2]>) -> bool {
        if acc.len() == m.len() {
            return true;
        }
        for k in 0..m.len() {
            if used[k] {
                continue;
            }
            let ends = m[k].to_vec();
            for (u, v) in [(ends[0], ends[1]), (ends[1], ends[0])] {
                let nu = g.neighbors(u);
                if !nu.is_disjoint(us) || !nu.is_disjoint(vs) {
                    continue;
                }
                used[k] = true;
                acc.push([u, v]);
                if place(g, m, used, us.with(u), vs.with(v), acc) {
                    return true;
                }
                acc.pop();
                used[k] = false;
            }
        }
        false
    }
    let mut acc = Vec::with_capacity(m.len());
    place(g, m, &mut vec![false; m.len()], VertexSet::EMPTY, VertexSet::EMPTY, &mut acc).then_some(acc)
}

fn pairs(m: &[VertexSet]) -> Vec<[usize; 2]> {
    m.iter()
        .map(|e| {
            let v = e.to_vec();
            [v[0], v[1]]
        })
        .collect()
}

/// `match(G)`, `ν(G)` and `ordmatch(G)` by exhaustive search over all matchings.
pub fn matching_numbers(g: &Graph) -> MatchingNumbers {
    let mut matchings = all_matchings(g);
    // Largest first; ties keep enumeration order.
    matchings.sort_by(|a, b| b.len().cmp(&a.len()));
    let best = &matchings[0];
    let induced = matchings
        .iter()
        .find(|m| is_induced(g, m))
        .expect("the empty matching is induced");
    let (ordered_witness, ordered_len) = matchings
        .iter()
        .find_map(|m| ordering(g, m).map(|o| (o, m.len())))
        .expect("the empty matching is ordered");
    MatchingNumbers {
        matching: best.len(),
        induced: induced.len(),
        ordered: ordered_len,
        matching_witness: pairs(best),
        induced_witness: pairs(induced),
        ordered_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(g: &Graph) -> (usize, usize, usize) {
        let m = matching_numbers(g);
        (m.matching, m.induced, m.ordered)
    }

    #[test]
    fn small_graphs() {
        assert_eq!(triple(&Graph::path(2)), (1, 1, 1));
        assert_eq!(triple(&Graph::path(4)), (2, 1, 2));
        assert_eq!(triple(&Graph::cycle(5)), (2, 1, 2));
        assert_eq!(triple(&Graph::edgeless(3)), (0, 0, 0));
        assert_eq!(triple(&Graph::complete(4)), (2, 1, 1));
    }

    #[test]
    fn path_ordered_witness_is_admissible() {
        let g = Graph::path(4);
        let m = matching_numbers(&g);
        let w = &m.ordered_witness;
        assert_eq!(w.len(), 2);
        assert!(!g.has_edge(w[0][0], w[1][0]));
        assert!(!g.has_edge(w[1][0], w[0][1]));
    }

    #[test]
    fn disjoint_edges_are_induced() {
        let g = Graph::from_lists(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(triple(&g), (2, 2, 2));
    }
}
