//! Symbolic powers `I_Δ^(n) = ⋂_{F ∈ F(Δ)} (x_i : i ∉ F)^n`.

use super::monomial::MonomialIdeal;
use crate::combinatorics::SimplicialComplex;
use crate::error::{Error, Result};

/// `x^a ∈ I_Δ^(n)`: every facet `F` has `Σ_{i ∉ F} a_i ≥ n`.
pub fn symbolic_contains(complex: &SimplicialComplex, n: u32, a: &[u32]) -> bool {
    let r = complex.r();
    complex.facets().iter().all(|f| {
        let outside: u64 = (1..=r)
            .filter(|&i| !f.contains(i))
            .map(|i| a[i - 1] as u64)
            .sum();
        outside >= n as u64
    })
}

/// Minimal generators of `I_Δ^(n)`.
///
/// Every defining inequality has 0/1 coefficients, so a minimal generator never
/// has an exponent above `n`; the search runs over the box `{0..n}^r`.
pub fn symbolic_power(complex: &SimplicialComplex, n: u32) -> Result<MonomialIdeal> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if n == 0 {
        return Err(Error::Invalid("symbolic powers need n >= 1".into()));
    }
    let r = complex.r();
    let mut gens = Vec::new();
    let mut a = vec![0u32; r];
    loop {
        if symbolic_contains(complex, n, &a) {
            let minimal = (0..r).all(|i| {
                if a[i] == 0 {
                    return true;
                }
                a[i] -= 1;
                let inside = symbolic_contains(complex, n, &a);
                a[i] += 1;
                !inside
            });
            if minimal {
                gens.push(a.clone());
            }
        }
        if !advance(&mut a, n) {
            break;
        }
    }
    Ok(MonomialIdeal::from_minimalized(r, gens))
}

/// Odometer step through `{0..=cap}^r`; false once it wraps.
pub(crate) fn advance(a: &mut [u32], cap: u32) -> bool {
    for x in a.iter_mut() {
        if *x < cap {
            *x += 1;
            return true;
        }
        *x = 0;
    }
    false
}
