use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::combinatorics::{Hypergraph, SimplicialComplex, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A monomial ideal in `K[x_1, ..., x_r]` held by its minimal generators.
///
/// Generators are exponent vectors, kept as an antichain under divisibility and
/// sorted by total degree, then lexicographically. The zero ideal has no
/// generators; the unit ideal has the single all-zero vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "crate::io::IdealJson", into = "crate::io::IdealJson")]
pub struct MonomialIdeal {
    r: usize,
    generators: Vec<Vec<u32>>,
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn total_degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

fn canonical_cmp(a: &Vec<u32>, b: &Vec<u32>) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b))
}

impl MonomialIdeal {
    /// The ideal generated by `generators`; redundant generators are dropped.
    pub fn new(r: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        if r > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge { r, max: MAX_VERTICES });
        }
        for g in &generators {
            if g.len() != r {
                return Err(Error::LengthMismatch {
                    expected: r,
                    got: g.len(),
                });
            }
        }
        Ok(Self::from_minimalized(r, generators))
    }

    pub(crate) fn from_minimalized(r: usize, mut gens: Vec<Vec<u32>>) -> Self {
        gens.sort_by(canonical_cmp);
        gens.dedup();
        let mut minimal: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
        // Canonical order puts every proper divisor before its multiples.
        for g in gens {
            if !minimal.iter().any(|m| divides(m, &g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            r,
            generators: minimal,
        }
    }

    /// Square-free ideal `(x^τ : τ ∈ sets)`.
    pub fn squarefree(r: usize, sets: &[VertexSet]) -> Self {
        let gens = sets.iter().map(|s| indicator(r, *s)).collect();
        Self::from_minimalized(r, gens)
    }

    pub fn zero(r: usize) -> Self {
        MonomialIdeal {
            r,
            generators: vec![],
        }
    }

    pub fn unit(r: usize) -> Self {
        MonomialIdeal {
            r,
            generators: vec![vec![0; r]],
        }
    }

    /// Edge ideal `I(H) = (x^e : e ∈ E(H))`.
    pub fn edge_ideal(h: &Hypergraph) -> Self {
        Self::squarefree(h.r(), h.edges())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// `x^a ∈ I`.
    pub fn contains(&self, a: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, a))
    }

    /// `d(I)`, the largest degree of a minimal generator.
    pub fn max_gen_degree(&self) -> Result<u64> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::TrivialIdeal);
        }
        Ok(self.generators.iter().map(|g| total_degree(g)).max().unwrap_or(0))
    }

    /// Componentwise maximum of the generators (the lcm of all of them).
    pub fn join(&self) -> Vec<u32> {
        let mut out = vec![0; self.r];
        for g in &self.generators {
            for (o, &e) in out.iter_mut().zip(g) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn supports(&self) -> Vec<VertexSet> {
        self.generators.iter().map(|g| support(g)).collect()
    }

    /// `Δ(I) = Δ(√I)`: the sets `τ` with `x^τ ∉ √I`.
    pub fn complex_of(&self) -> SimplicialComplex {
        let supports = self.supports();
        let faces: Vec<VertexSet> = VertexSet::full(self.r)
            .subsets()
            .filter(|&t| !supports.iter().any(|s| s.is_subset(t)))
            .collect();
        SimplicialComplex::generated_by(self.r, faces)
    }
}

pub(crate) fn indicator(r: usize, s: VertexSet) -> Vec<u32> {
    (1..=r).map(|v| u32::from(s.contains(v))).collect()
}

pub(crate) fn support(a: &[u32]) -> VertexSet {
    a.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(VertexSet::EMPTY, |acc, (i, _)| acc.with(i + 1))
}

/// `I_Δ`, minimally generated by the minimal non-faces of Δ.
pub fn stanley_reisner(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(MonomialIdeal::squarefree(complex.r(), &complex.minimal_nonfaces()))
}

/// The result of inverting `x_i, i ∈ σ` and intersecting back with the polynomial
/// ring in the remaining variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Contraction {
    /// Ideal in `r - |σ|` variables.
    pub ideal: MonomialIdeal,
    /// `index_map[k]` is the original vertex carried by new variable `k + 1`.
    pub index_map: Vec<usize>,
}

impl Contraction {
    /// Original vertex for a new (1-based) variable index.
    pub fn original_vertex(&self, new_vertex: usize) -> usize {
        self.index_map[new_vertex - 1]
    }
}

/// Sets `x_i := 1` for `i ∈ σ` and re-minimalizes, re-indexing the survivors.
pub fn contraction(ideal: &MonomialIdeal, sigma: VertexSet) -> Result<Contraction> {
    let r = ideal.r();
    if sigma.complement(r).is_empty() {
        return Err(Error::FullContraction);
    }
    let index_map: Vec<usize> = (1..=r).filter(|v| !sigma.contains(*v)).collect();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| index_map.iter().map(|&v| g[v - 1]).collect())
        .collect();
    Ok(Contraction {
        ideal: MonomialIdeal::from_minimalized(index_map.len(), gens),
        index_map,
    })
}
