//! Reduced simplicial homology dimensions from boundary-matrix ranks.
//!
//! Faces of each dimension are indexed in canonical (lexicographic) order and
//! the boundary sign of a removed vertex is `(-1)^position`. The augmentation
//! `C_0 -> C_{-1} = K` is included, so `{∅}` has `H̃_{-1} = K`.

use std::collections::{BTreeMap, HashMap};

use super::field::FieldSpec;
use super::matrix::integer_rank;
use crate::combinatorics::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// `dim_K H̃_i(Δ; K)` for `i = -1, ..., dim Δ`.
pub fn reduced_homology_dims(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<BTreeMap<i64, usize>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let betti = reduced_betti(complex.facets(), field);
    Ok(betti
        .into_iter()
        .enumerate()
        .map(|(k, b)| (k as i64 - 1, b))
        .collect())
}

/// Reduced Betti numbers indexed by `i + 1`, for a nonempty facet list.
pub(crate) fn reduced_betti(facets: &[VertexSet], field: FieldSpec) -> Vec<usize> {
    debug_assert!(!facets.is_empty());
    let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
    // faces_by_size[s] holds the faces of cardinality s, sorted.
    let mut faces_by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
    let mut seen = std::collections::HashSet::new();
    for f in facets {
        for s in f.subsets() {
            if seen.insert(s) {
                faces_by_size[s.len()].push(s);
            }
        }
    }
    for layer in &mut faces_by_size {
        layer.sort();
    }
    // ranks[s] = rank of the boundary C_{s-1} -> C_{s-2}, i.e. from size-s faces.
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        ranks[s] = boundary_rank(&faces_by_size[s - 1], &faces_by_size[s], field);
    }
    (0..=top)
        .map(|s| faces_by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

fn boundary_rank(lower: &[VertexSet], upper: &[VertexSet], field: FieldSpec) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    let index: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    // Rows are the upper faces; the rank of the transpose is the same.
    let rows: Vec<Vec<i128>> = upper
        .iter()
        .map(|face| {
            let mut row = vec![0i128; lower.len()];
            for (pos, v) in face.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                row[index[&face.without(v)]] = sign;
            }
            row
        })
        .collect();
    integer_rank(&rows, lower.len(), field)
}

/// `Σ_i (-1)^i f_i` with `f_{-1} = 1`.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .faces()
        .iter()
        .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

/// Memoizes reduced Betti numbers by facet list for one coefficient field.
///
/// Cones are answered without building boundary matrices.
pub struct HomologyCache {
    field: FieldSpec,
    table: HashMap<Vec<VertexSet>, Vec<usize>>,
}

impl HomologyCache {
    pub fn new(field: FieldSpec) -> Self {
        HomologyCache {
            field,
            table: HashMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Reduced Betti numbers indexed by `i + 1`; empty for the void family.
    pub fn betti(&mut self, facets: &[VertexSet]) -> &[usize] {
        if !self.table.contains_key(facets) {
            let value = if facets.is_empty() {
                Vec::new()
            } else if is_cone(facets) {
                let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
                vec![0; top + 1]
            } else {
                reduced_betti(facets, self.field)
            };
            self.table.insert(facets.to_vec(), value);
        }
        &self.table[facets]
    }

    /// `dim H̃_i`, zero outside the computed range and for the void family.
    pub fn dim(&mut self, facets: &[VertexSet], i: i64) -> usize {
        let b = self.betti(facets);
        if i < -1 {
            return 0;
        }
        b.get((i + 1) as usize).copied().unwrap_or(0)
    }
}

fn is_cone(facets: &[VertexSet]) -> bool {
    let common = facets
        .iter()
        .fold(facets[0], |acc, f| acc.intersection(*f));
    !common.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(r: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(r, &f.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn dims(c: &SimplicialComplex) -> Vec<(i64, usize)> {
        reduced_homology_dims(c, FieldSpec::rationals())
            .unwrap()
            .into_iter()
            .collect()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let t = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(dims(&t), vec![(-1, 0), (0, 0), (1, 1)]);
    }

    #[test]
    fn two_points() {
        assert_eq!(dims(&cx(2, &[&[1], &[2]])), vec![(-1, 0), (0, 1)]);
    }

    #[test]
    fn simplex_is_acyclic() {
        assert!(dims(&cx(3, &[&[1, 2, 3]])).iter().all(|&(_, d)| d == 0));
    }

    #[test]
    fn empty_face_complex() {
        assert_eq!(dims(&SimplicialComplex::empty_face(3)), vec![(-1, 1)]);
    }

    #[test]
    fn void_rejected() {
        assert_eq!(
            reduced_homology_dims(&SimplicialComplex::void(2), FieldSpec::rationals()),
            Err(Error::VoidComplex)
        );
    }

    #[test]
    fn boundary_of_tetrahedron_is_a_sphere() {
        let s2 = cx(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(dims(&s2), vec![(-1, 0), (0, 0), (1, 0), (2, 1)]);
    }

    #[test]
    fn projective_plane_sees_characteristic_two() {
        // six-vertex triangulation of RP^2
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
            ],
        );
        assert_eq!(dims(&rp2), vec![(-1, 0), (0, 0), (1, 0), (2, 0)]);
        let gf2 = FieldSpec::with_characteristic(2).unwrap();
        let d2: Vec<_> = reduced_homology_dims(&rp2, gf2).unwrap().into_iter().collect();
        assert_eq!(d2, vec![(-1, 0), (0, 0), (1, 1), (2, 1)]);
    }

    #[test]
    fn cache_matches_direct() {
        let mut cache = HomologyCache::new(FieldSpec::rationals());
        let t = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(cache.dim(t.facets(), 1), 1);
        assert_eq!(cache.dim(t.facets(), 0), 0);
        assert_eq!(cache.dim(&[], 0), 0);
        let cone = cx(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(cache.betti(cone.facets()), &[0, 0, 0]);
    }
}
