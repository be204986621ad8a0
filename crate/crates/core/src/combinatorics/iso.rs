//! Isomorphism reduction by brute-force minimization over all vertex relabelings.

use itertools::Itertools;

use super::set::VertexSet;

/// Ground sets larger than this are not reduced up to isomorphism.
pub const MAX_ISO_VERTICES: usize = 7;

/// Applies every permutation of `[r]` and keeps the image with the least key.
pub(crate) fn minimize_over_permutations<T, F, K>(r: usize, apply: F, key: K) -> T
where
    F: Fn(&[usize]) -> T,
    K: Fn(&T) -> Vec<VertexSet>,
{
    assert!(r <= MAX_ISO_VERTICES, "isomorphism reduction limited to r <= {MAX_ISO_VERTICES}");
    let identity: Vec<usize> = (0..r).collect();
    let mut best = apply(&identity);
    let mut best_key = key(&best);
    for perm in (0..r).permutations(r) {
        let cand = apply(&perm);
        let k = key(&cand);
        if k < best_key {
            best = cand;
            best_key = k;
        }
    }
    best
}
