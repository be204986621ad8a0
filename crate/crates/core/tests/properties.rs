//! Randomized structural properties over small instances.

use num_rational::BigRational;
use proptest::prelude::*;

use symreg::cohomology::reg_symbolic;
use symreg::combinatorics::{Graph, Hypergraph, SimplicialComplex};
use symreg::exactalg::{reduced_homology_dims, FieldSpec};
use symreg::ideals::{stanley_reisner, symbolic_contains, symbolic_power, MonomialIdeal};
use symreg::invariants::{b_invariant, epsilon, matching_numbers};
use symreg::polyhedra::{chamber_polytope, delta_invariant, symbolic_polyhedron};
use symreg::verify::{random_instance, Instance, InstanceKind};
use symreg::ExtInt;

fn complex(r: usize, seed: u64) -> SimplicialComplex {
    random_instance(InstanceKind::Complex, r, seed).unwrap().complex()
}

fn graph(r: usize, seed: u64) -> Graph {
    match random_instance(InstanceKind::Graph, r, seed).unwrap() {
        Instance::Graph(g) => g,
        other => panic!("expected a graph, got {other:?}"),
    }
}

fn hypergraph(r: usize, seed: u64) -> Hypergraph {
    random_instance(InstanceKind::Hypergraph, r, seed).unwrap().hypergraph().unwrap()
}

fn q(v: u32) -> BigRational {
    BigRational::from_integer(v.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn matching_chain(r in 1usize..=7, seed: u64) {
        let m = matching_numbers(&graph(r, seed));
        prop_assert!(m.induced <= m.ordered && m.ordered <= m.matching);
        prop_assert_eq!(m.matching_witness.len(), m.matching);
        prop_assert_eq!(m.induced_witness.len(), m.induced);
        prop_assert_eq!(m.ordered_witness.len(), m.ordered);
    }

    #[test]
    fn epsilon_bounded_by_edge_count(r in 1usize..=5, seed: u64) {
        let h = hypergraph(r, seed);
        let e = epsilon(&h).unwrap();
        prop_assert!(e.value <= h.edges().len());
        prop_assert_eq!(e.witness.len(), e.value);
    }

    #[test]
    fn generator_degree_grows_linearly(r in 2usize..=5, seed: u64, n in 1u32..=3) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let d1 = stanley_reisner(&c).unwrap().max_gen_degree().unwrap();
        let dn = symbolic_power(&c, n).unwrap().max_gen_degree().unwrap();
        prop_assert!(d1 * n as u64 <= dn);
    }

    #[test]
    fn symbolic_generators_respect_exponent_cap(r in 1usize..=5, seed: u64, n in 1u32..=3) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let ideal = symbolic_power(&c, n).unwrap();
        for g in ideal.generators() {
            prop_assert!(g.iter().all(|&e| e <= n));
            prop_assert!(g.iter().sum::<u32>() >= n);
            prop_assert!(symbolic_contains(&c, n, g));
        }
    }

    #[test]
    fn membership_agrees_with_generators(r in 1usize..=4, seed: u64, n in 1u32..=3, pt in prop::collection::vec(0u32..=4, 4)) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let ideal = symbolic_power(&c, n).unwrap();
        let a: Vec<u32> = pt[..r].iter().map(|&x| x.min(n + 1)).collect();
        prop_assert_eq!(symbolic_contains(&c, n, &a), ideal.contains(&a));
    }

    #[test]
    fn delta_is_positive_and_witnessed(r in 1usize..=5, seed: u64) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let d = delta_invariant(&c).unwrap();
        prop_assert!(d.delta > q(0));
        let p = symbolic_polyhedron(&c).unwrap();
        prop_assert!(p.contains(&d.witness_vertex));
        let sum: BigRational = d.witness_vertex.iter().sum();
        prop_assert_eq!(sum, d.delta);
    }

    #[test]
    fn vertices_satisfy_every_constraint(r in 1usize..=5, seed: u64) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let p = symbolic_polyhedron(&c).unwrap();
        for v in p.vertices() {
            for k in p.constraints() {
                prop_assert!(k.is_satisfied_by(&v), "{} fails at {:?}", k, v);
            }
            let tight = p.constraints().iter().filter(|k| k.is_tight_at(&v)).count();
            prop_assert!(tight >= r);
        }
    }

    #[test]
    fn chambers_scale_with_m(r in 2usize..=4, seed: u64, m in 2u32..=3) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let f = c.facets().len();
        for mask in 1u64..1 << f {
            let selected: Vec<usize> = (0..f).filter(|j| mask >> j & 1 == 1).collect();
            let c1 = chamber_polytope(&c, &selected, 1).unwrap();
            let cm = chamber_polytope(&c, &selected, m).unwrap();
            if !(c1.is_bounded() && cm.is_bounded()) {
                continue;
            }
            let mut want: Vec<Vec<BigRational>> = c1
                .vertices()
                .into_iter()
                .map(|v| v.into_iter().map(|x| x * q(m)).collect())
                .collect();
            want.sort();
            let mut got = cm.vertices();
            got.sort();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn b_invariant_bounded_by_dimension(r in 2usize..=5, seed: u64) {
        let c = complex(r, seed);
        prop_assume!(!c.is_full_simplex());
        let b = b_invariant(&c, FieldSpec::rationals()).unwrap();
        prop_assert!(b.value <= c.dim().unwrap() + 2);
        let reg1 = reg_symbolic(&c, 1, FieldSpec::rationals()).unwrap();
        prop_assert!(ExtInt::Finite(b.value) >= reg1);
    }

    #[test]
    fn b_invariant_of_graph_at_most_ordmatch_plus_one(r in 2usize..=6, seed: u64) {
        let g = graph(r, seed);
        prop_assume!(!g.edges().is_empty());
        let b = b_invariant(&g.independence_complex(), FieldSpec::rationals()).unwrap();
        prop_assert!(b.value <= matching_numbers(&g).ordered as i64 + 1);
    }

    #[test]
    fn alexander_dual_is_an_involution(r in 1usize..=5, seed: u64) {
        let c = complex(r, seed);
        let dual = c.alexander_dual().unwrap();
        prop_assume!(!dual.is_void());
        prop_assert_eq!(dual.alexander_dual().unwrap(), c.clone());
        let complements: Vec<_> = c.facets().iter().map(|f| f.complement(r)).collect();
        prop_assume!(!c.is_full_simplex());
        prop_assert_eq!(stanley_reisner(&dual).unwrap(), MonomialIdeal::squarefree(r, &complements));
    }

    #[test]
    fn hypergraph_dual_is_an_involution(r in 1usize..=5, seed: u64) {
        let h = hypergraph(r, seed);
        prop_assert_eq!(h.dual().unwrap().dual().unwrap(), h);
    }

    #[test]
    fn cones_are_acyclic(r in 1usize..=5, seed: u64) {
        let c = complex(r, seed);
        prop_assume!(c.is_cone());
        let h = reduced_homology_dims(&c, FieldSpec::rationals()).unwrap();
        prop_assert!(h.values().all(|&d| d == 0));
    }

    #[test]
    fn links_compose(r in 1usize..=4, seed: u64, s in 0u32..16, t in 0u32..16) {
        use symreg::combinatorics::VertexSet;
        let c = complex(r, seed);
        let full = VertexSet::full(r).bits();
        let sigma = VertexSet::from_bits(s & full);
        let tau = VertexSet::from_bits(t & full & !(s & full));
        prop_assume!(c.contains_face(sigma.union(tau)));
        prop_assert_eq!(c.link(sigma).link(tau), c.link(sigma.union(tau)));
    }
}
