use serde::Serialize;

use crate::cohomology::reg_links_with;
use crate::combinatorics::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exactalg::{FieldSpec, HomologyCache};

/// `b = max reg(I_Γ)` over subcomplexes generated by nonempty sets of facets.
///
/// `witness` holds the 0-based facet indices of a maximizing `Γ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BInvariant {
    pub value: i64,
    pub witness: Vec<usize>,
}

/// Facet subsets are scanned in increasing bitmask order; `reg(I_Γ)` is
/// `reg_links(Γ) + 1` with `Γ` kept on the ground set `[r]`.
pub fn b_invariant(complex: &SimplicialComplex, field: FieldSpec) -> Result<BInvariant> {
    b_invariant_with(complex, &mut HomologyCache::new(field))
}

pub fn b_invariant_with(complex: &SimplicialComplex, cache: &mut HomologyCache) -> Result<BInvariant> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if complex.is_full_simplex() {
        return Err(Error::FullSimplex);
    }
    let t = complex.facets().len();
    if t > 20 {
        return Err(Error::Invalid(format!("{t} facets is too many for the b-invariant search")));
    }
    let mut best: Option<(i64, u64)> = None;
    for mask in 1u64..(1 << t) {
        let reg = reg_links_with(&complex.facet_subcomplex(mask), cache)? + 1;
        if best.map_or(true, |(b, _)| reg > b) {
            best = Some((reg, mask));
        }
    }
    let (value, mask) = best.expect("at least one facet");
    Ok(BInvariant {
        value,
        witness: (0..t).filter(|j| mask >> j & 1 == 1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(r: usize, f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(r, &f.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    const Q: FieldSpec = FieldSpec::RATIONALS;

    #[test]
    fn examples() {
        let b = b_invariant(&cx(3, &[&[1, 3], &[2]]), Q).unwrap();
        assert_eq!(b, BInvariant { value: 2, witness: vec![0, 1] });
        assert_eq!(b_invariant(&cx(2, &[&[1], &[2]]), Q).unwrap().value, 2);
        assert_eq!(b_invariant(&SimplicialComplex::simplex(2), Q), Err(Error::FullSimplex));
    }

    #[test]
    fn bounded_by_dimension() {
        let t = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let b = b_invariant(&t, Q).unwrap();
        assert_eq!(b.value, 3);
        assert!(b.value <= t.dim().unwrap() + 2);
    }
}
