use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::polyhedron::{Constraint, RationalPolyhedron, Relation};
use crate::cohomology::DegreeVector;
use crate::combinatorics::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::exactalg::{fraction_string, Rational};

/// `δ = max |v|` over the vertices of a polyhedron, with a vertex attaining it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaResult {
    pub delta: Rational,
    pub witness_vertex: Vec<Rational>,
}

impl Serialize for DeltaResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DeltaResult", 2)?;
        st.serialize_field("delta", &fraction_string(&self.delta))?;
        let w: Vec<String> = self.witness_vertex.iter().map(fraction_string).collect();
        st.serialize_field("witness", &w)?;
        st.end()
    }
}

fn facet_sum(r: usize, facet: VertexSet, relation: Relation, rhs: i64) -> Constraint {
    Constraint::sum_over(r, facet.complement(r).iter(), relation, rhs)
}

fn check_complex(complex: &SimplicialComplex) -> Result<()> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if complex.is_full_simplex() {
        return Err(Error::FullSimplex);
    }
    Ok(())
}

/// `SP(I_Δ) = {x ≥ 0 : Σ_{i∉F} x_i ≥ 1 for every facet F}`.
pub fn symbolic_polyhedron(complex: &SimplicialComplex) -> Result<RationalPolyhedron> {
    check_complex(complex)?;
    let r = complex.r();
    let rows = complex
        .facets()
        .iter()
        .map(|&f| facet_sum(r, f, Relation::AtLeast, 1))
        .collect();
    Ok(RationalPolyhedron::new(r, rows)?.with_nonnegativity())
}

/// `max |v|` over vertices of `P`; `None` when `P` has no vertex.
pub fn delta_of(p: &RationalPolyhedron) -> Option<DeltaResult> {
    p.max_vertex_sum().map(|(delta, witness_vertex)| DeltaResult {
        delta,
        witness_vertex,
    })
}

/// `δ(I_Δ)`, the largest coordinate sum of a vertex of the symbolic polyhedron.
pub fn delta_invariant(complex: &SimplicialComplex) -> Result<DeltaResult> {
    let sp = symbolic_polyhedron(complex)?;
    Ok(delta_of(&sp).expect("the symbolic polyhedron is pointed and nonempty"))
}

fn chamber_rows(
    complex: &SimplicialComplex,
    selected: &[usize],
    below: i64,
    above: i64,
) -> Result<RationalPolyhedron> {
    let facets = complex.facets();
    if selected.is_empty() {
        return Err(Error::Invalid("a chamber needs at least one selected facet".into()));
    }
    if let Some(&j) = selected.iter().find(|&&j| j >= facets.len()) {
        return Err(Error::Invalid(format!(
            "facet index {j} out of range (the complex has {} facets)",
            facets.len()
        )));
    }
    let r = complex.r();
    let rows = facets
        .iter()
        .enumerate()
        .map(|(j, &f)| {
            if selected.contains(&j) {
                facet_sum(r, f, Relation::AtMost, below)
            } else {
                facet_sum(r, f, Relation::AtLeast, above)
            }
        })
        .collect();
    Ok(RationalPolyhedron::new(r, rows)?.with_nonnegativity())
}

/// `C_m`: `Σ_{i∉F_j} x_i ≤ m` for selected facets `j`, `≥ m` for the rest, `x ≥ 0`.
///
/// Facet indices are 0-based positions in `complex.facets()`.
pub fn chamber_polytope(complex: &SimplicialComplex, selected: &[usize], m: u32) -> Result<RationalPolyhedron> {
    chamber_rows(complex, selected, m as i64, m as i64)
}

/// `P_m`: as [`chamber_polytope`] but with `≤ m - 1` on the selected facets.
pub fn p_polyhedron(complex: &SimplicialComplex, selected: &[usize], m: u32) -> Result<RationalPolyhedron> {
    chamber_rows(complex, selected, m as i64 - 1, m as i64)
}

/// The chamber attached to a degree `α` of `R / I_Δ^(n)`.
///
/// Coordinates in `G_α` are contracted away (setting those variables to 1), so the
/// result lives over `[r - |G_α|]` on the complex `lk_Δ(G_α)` with its vertices
/// renumbered in order. The selected facets are those with `Σ_{i∉F} α_i ≤ n - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessChamber {
    pub complex: SimplicialComplex,
    pub selected: Vec<usize>,
    pub kept_vertices: Vec<usize>,
}

pub fn witness_chamber(complex: &SimplicialComplex, n: u32, alpha: &DegreeVector) -> Result<WitnessChamber> {
    let r = complex.r();
    if alpha.len() != r {
        return Err(Error::LengthMismatch {
            expected: r,
            got: alpha.len(),
        });
    }
    let g = alpha.negative_support();
    let kept_vertices: Vec<usize> = g.complement(r).iter().collect();
    let relabel = |f: VertexSet| {
        VertexSet::of(
            &kept_vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| f.contains(v))
                .map(|(k, _)| k + 1)
                .collect::<Vec<_>>(),
        )
    };
    let link = complex.link(g);
    if link.is_void() {
        return Err(Error::Invalid(format!("{:?} is not a face", g)));
    }
    let contracted = SimplicialComplex::new(
        kept_vertices.len(),
        link.facets().iter().map(|&f| relabel(f)).collect(),
    )?;
    let coords = alpha.coords();
    let selected = contracted
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| {
            let s: i64 = kept_vertices
                .iter()
                .enumerate()
                .filter(|(k, _)| !f.contains(k + 1))
                .map(|(_, &v)| coords[v - 1])
                .sum();
            s < n as i64
        })
        .map(|(j, _)| j)
        .collect();
    Ok(WitnessChamber {
        complex: contracted,
        selected,
        kept_vertices,
    })
}
