//! Verification instances and their generators.
//!
//! Random instances use `ChaCha8Rng::seed_from_u64(seed)` from `rand_chacha`,
//! whose output stream is fixed across platforms:
//!
//! * graphs: each pair `{i, j}`, `i < j` in lexicographic order, is an edge
//!   when the next `gen_bool(0.5)` is true;
//! * complexes: `k = gen_range(1..=2r)` random subsets of `[r]` (each the low
//!   `r` bits of a `u32` draw), reduced to their maximal members;
//! * hypergraphs: the same with nonempty subsets (zero draws are redrawn),
//!   reduced to their minimal members.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::iso::MAX_ISO_VERTICES;
use crate::combinatorics::{maximal_sets, minimal_sets, Graph, Hypergraph, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::ideals::{stanley_reisner, MonomialIdeal};

pub const MAX_GRAPH_VERTICES: usize = 7;
pub const MAX_FAMILY_VERTICES: usize = 5;
pub const MAX_RANDOM_VERTICES: usize = 12;
pub const MAX_MATROID_GROUND_SET: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InstanceKind {
    Complex,
    Graph,
    Hypergraph,
    /// Matroid complexes from the dedicated generator.
    Matroid,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Complex => "complex",
            InstanceKind::Graph => "graph",
            InstanceKind::Hypergraph => "hypergraph",
            InstanceKind::Matroid => "matroid",
        }
    }
}

impl FromStr for InstanceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "complex" => Ok(InstanceKind::Complex),
            "graph" => Ok(InstanceKind::Graph),
            "hypergraph" => Ok(InstanceKind::Hypergraph),
            "matroid" => Ok(InstanceKind::Matroid),
            _ => Err(Error::Invalid(format!(
                "unknown kind `{s}` (expected complex, graph, hypergraph or matroid)"
            ))),
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Complex(SimplicialComplex),
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Instance {
    pub fn r(&self) -> usize {
        match self {
            Instance::Complex(c) => c.r(),
            Instance::Graph(g) => g.r(),
            Instance::Hypergraph(h) => h.r(),
        }
    }

    /// The simplicial complex whose Stanley-Reisner ideal is the instance's ideal.
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            Instance::Complex(c) => c.clone(),
            Instance::Graph(g) => g.independence_complex(),
            Instance::Hypergraph(h) => MonomialIdeal::edge_ideal(h).complex_of(),
        }
    }

    /// `I_Δ`, `I(G)` or `I(H)`.
    pub fn ideal(&self) -> MonomialIdeal {
        match self {
            Instance::Complex(c) => stanley_reisner(c).expect("instances are never void"),
            Instance::Graph(g) => MonomialIdeal::edge_ideal(&g.to_hypergraph()),
            Instance::Hypergraph(h) => MonomialIdeal::edge_ideal(h),
        }
    }

    /// The underlying hypergraph of graph and hypergraph instances.
    pub fn hypergraph(&self) -> Option<Hypergraph> {
        match self {
            Instance::Complex(_) => None,
            Instance::Graph(g) => Some(g.to_hypergraph()),
            Instance::Hypergraph(h) => Some(h.clone()),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Instance::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn canonical_form(&self) -> Instance {
        match self {
            Instance::Complex(c) => Instance::Complex(c.canonical_form()),
            Instance::Graph(g) => Instance::Graph(g.canonical_form()),
            Instance::Hypergraph(h) => Instance::Hypergraph(h.canonical_form()),
        }
    }
}

fn guard(kind: &'static str, limit: usize, r: usize) -> Result<()> {
    if r > limit {
        return Err(Error::GuardRail { kind, limit, r });
    }
    Ok(())
}

/// All antichains in `universe` (taken in the given order), by include/exclude recursion.
fn antichains(universe: &[VertexSet], out: &mut Vec<Vec<VertexSet>>) {
    fn rec(universe: &[VertexSet], k: usize, chosen: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        if k == universe.len() {
            out.push(chosen.clone());
            return;
        }
        let s = universe[k];
        if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
            chosen.push(s);
            rec(universe, k + 1, chosen, out);
            chosen.pop();
        }
        rec(universe, k + 1, chosen, out);
    }
    rec(universe, 0, &mut Vec::new(), out);
}

fn sorted_subsets(r: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = VertexSet::full(r).subsets().collect();
    all.sort();
    all
}

/// Every instance of `kind` on exactly `r` vertices, in a fixed order.
///
/// Complexes are all non-void facet antichains; graphs all edge subsets;
/// hypergraphs all antichains of nonempty edges (the edgeless one included).
pub fn enumerate_instances(kind: InstanceKind, r: usize, up_to_iso: bool) -> Result<Vec<Instance>> {
    let mut out: Vec<Instance> = match kind {
        InstanceKind::Graph => {
            guard("graph", MAX_GRAPH_VERTICES, r)?;
            let pairs: Vec<VertexSet> = (1..=r)
                .tuple_combinations()
                .map(|(i, j)| VertexSet::of(&[i, j]))
                .collect();
            (0u64..1 << pairs.len())
                .map(|mask| {
                    let edges = (0..pairs.len())
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| pairs[k])
                        .collect();
                    Instance::Graph(Graph::new(r, edges).expect("pairs are valid edges"))
                })
                .collect()
        }
        InstanceKind::Complex => {
            guard("complex", MAX_FAMILY_VERTICES, r)?;
            let mut fams = Vec::new();
            antichains(&sorted_subsets(r), &mut fams);
            fams.into_iter()
                .filter(|f| !f.is_empty())
                .map(|f| Instance::Complex(SimplicialComplex::new(r, f).expect("antichain")))
                .collect()
        }
        InstanceKind::Hypergraph => {
            guard("hypergraph", MAX_FAMILY_VERTICES, r)?;
            let universe: Vec<VertexSet> = sorted_subsets(r).into_iter().filter(|s| !s.is_empty()).collect();
            let mut fams = Vec::new();
            antichains(&universe, &mut fams);
            fams.into_iter()
                .map(|f| Instance::Hypergraph(Hypergraph::new(r, f).expect("antichain")))
                .collect()
        }
        InstanceKind::Matroid => {
            guard("matroid", MAX_MATROID_GROUND_SET, r)?;
            matroid_complexes(r).into_iter().map(Instance::Complex).collect()
        }
    };
    if up_to_iso {
        guard("isomorphism-reduced", MAX_ISO_VERTICES, r)?;
        let mut seen = HashSet::new();
        out = out
            .into_iter()
            .map(|i| i.canonical_form())
            .filter(|c| seen.insert(c.clone()))
            .collect();
    }
    Ok(out)
}

/// A deterministic pseudo-random instance; see the module documentation.
pub fn random_instance(kind: InstanceKind, r: usize, seed: u64) -> Result<Instance> {
    guard("random", MAX_RANDOM_VERTICES, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = VertexSet::full(r).bits();
    Ok(match kind {
        InstanceKind::Graph => {
            let edges = (1..=r)
                .tuple_combinations()
                .filter(|_| rng.gen_bool(0.5))
                .map(|(i, j)| VertexSet::of(&[i, j]))
                .collect();
            Instance::Graph(Graph::new(r, edges)?)
        }
        InstanceKind::Complex => {
            let k = rng.gen_range(1..=2 * r.max(1));
            let sets = (0..k)
                .map(|_| VertexSet::from_bits(rng.gen::<u32>() & full))
                .collect();
            Instance::Complex(SimplicialComplex::new(r, maximal_sets(sets))?)
        }
        InstanceKind::Hypergraph => {
            if r == 0 {
                return Ok(Instance::Hypergraph(Hypergraph::new(0, vec![])?));
            }
            let k = rng.gen_range(1..=2 * r);
            let sets = (0..k)
                .map(|_| loop {
                    let b = rng.gen::<u32>() & full;
                    if b != 0 {
                        break VertexSet::from_bits(b);
                    }
                })
                .collect();
            Instance::Hypergraph(Hypergraph::new(r, minimal_sets(sets))?)
        }
        InstanceKind::Matroid => {
            return Err(Error::Invalid(
                "matroid instances come from the exhaustive generator only".into(),
            ))
        }
    })
}

/// `U_{k,m}`: facets are all `k`-subsets of `[m]`.
pub fn uniform_matroid(k: usize, m: usize) -> SimplicialComplex {
    let facets = (1..=m).combinations(k).map(|f| VertexSet::of(&f)).collect();
    SimplicialComplex::new(m, facets).expect("k-subsets form an antichain")
}

/// The partition matroid on consecutive blocks of the given sizes, choosing
/// `capacities[j]` elements from block `j`.
pub fn partition_matroid(block_sizes: &[usize], capacities: &[usize]) -> Result<SimplicialComplex> {
    if block_sizes.len() != capacities.len() || block_sizes.iter().zip(capacities).any(|(b, c)| c > b) {
        return Err(Error::Invalid("each capacity must not exceed its block size".into()));
    }
    let m: usize = block_sizes.iter().sum();
    let mut start = 1;
    let mut per_block: Vec<Vec<VertexSet>> = Vec::new();
    for (&b, &c) in block_sizes.iter().zip(capacities) {
        per_block.push(
            (start..start + b)
                .combinations(c)
                .map(|f| VertexSet::of(&f))
                .collect(),
        );
        start += b;
    }
    let facets = per_block
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| parts.into_iter().fold(VertexSet::EMPTY, |a, s| a.union(s)))
        .collect();
    SimplicialComplex::new(m, facets)
}

/// Uniform matroids `U_{k,m}` (`1 ≤ k < m`) and partition matroids with at
/// least two blocks and every capacity below its block size, all on ground set `[m]`.
pub fn matroid_complexes(m: usize) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = (1..m).map(|k| uniform_matroid(k, m)).collect();
    for sizes in compositions(m).into_iter().filter(|s| s.len() >= 2) {
        // Blocks in nonincreasing order up to relabeling.
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        for caps in sizes.iter().map(|&b| 1..b).multi_cartesian_product() {
            out.push(partition_matroid(&sizes, &caps).expect("capacities fit"));
        }
    }
    out
}

fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for mut rest in compositions(m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_instances(InstanceKind::Graph, 2, false).unwrap().len(), 2);
        assert_eq!(enumerate_instances(InstanceKind::Complex, 2, false).unwrap().len(), 5);
        assert_eq!(enumerate_instances(InstanceKind::Complex, 3, false).unwrap().len(), 19);
        assert_eq!(enumerate_instances(InstanceKind::Complex, 4, false).unwrap().len(), 167);
        // antichains of nonempty subsets of [3]: 19 without {∅} and the void family, plus edgeless
        assert_eq!(enumerate_instances(InstanceKind::Hypergraph, 3, false).unwrap().len(), 19);
        assert_eq!(enumerate_instances(InstanceKind::Graph, 4, true).unwrap().len(), 11);
    }

    #[test]
    fn guard_rails_name_their_limit() {
        let err = enumerate_instances(InstanceKind::Complex, 6, false).unwrap_err();
        assert_eq!(err, Error::GuardRail { kind: "complex", limit: 5, r: 6 });
        assert!(err.to_string().contains("r <= 5"));
        assert!(random_instance(InstanceKind::Graph, 13, 0).is_err());
    }

    #[test]
    fn random_instances_are_reproducible() {
        for kind in [InstanceKind::Graph, InstanceKind::Complex, InstanceKind::Hypergraph] {
            for seed in [1, 7, 12345] {
                assert_eq!(random_instance(kind, 5, seed).unwrap(), random_instance(kind, 5, seed).unwrap());
            }
        }
    }

    #[test]
    fn distinct_seeds_rarely_collide() {
        let graphs: HashSet<Instance> = (0..1000)
            .map(|s| random_instance(InstanceKind::Graph, 7, s).unwrap())
            .collect();
        assert!(graphs.len() >= 990, "{} distinct", graphs.len());
    }

    #[test]
    fn matroid_generator_produces_matroids() {
        for m in 2..=5 {
            for c in matroid_complexes(m) {
                assert!(c.is_matroid(), "{c:?}");
                assert!(!c.is_cone(), "{c:?}");
            }
        }
        assert_eq!(uniform_matroid(2, 4).facets().len(), 6);
        let p = partition_matroid(&[2, 2], &[1, 1]).unwrap();
        assert_eq!(p.facet_lists(), vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
    }

    #[test]
    fn instance_json_is_tagged() {
        let i = Instance::Graph(Graph::path(3));
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"kind":"graph","r":3,"edges":[[1,2],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<Instance>(&s).unwrap(), i);
    }
}
