//! Chamber polyhedra C_m and P_m, and the chamber singled out by a regularity witness.

use symreg::cohomology::reg_symbolic_with_witness;
use symreg::combinatorics::SimplicialComplex;
use symreg::exactalg::{fraction_string, FieldSpec, HomologyCache};
use symreg::polyhedra::{chamber_polytope, delta_invariant, delta_of, p_polyhedron, witness_chamber};

fn main() -> symreg::Result<()> {
    let c = SimplicialComplex::from_lists(4, &[vec![1, 3], vec![2, 4], vec![1, 4]])?;
    println!("facets (by index): {:?}", c.facet_lists());

    for selected in [vec![0], vec![1], vec![0, 2], vec![0, 1, 2]] {
        for m in 1..=2 {
            let cm = chamber_polytope(&c, &selected, m)?;
            let delta = delta_of(&cm).map(|d| fraction_string(&d.delta));
            println!(
                "C_{m}{selected:?}: bounded = {}, vertices = {}, delta = {}",
                cm.is_bounded(),
                cm.vertices().len(),
                delta.unwrap_or_else(|| "none".into())
            );
        }
        let p = p_polyhedron(&c, &selected, 2)?;
        println!("P_2{selected:?}: {} vertices", p.vertices().len());
    }

    let n = 3;
    let (reg, witness) = reg_symbolic_with_witness(&c, n, &mut HomologyCache::new(FieldSpec::rationals()))?;
    println!("\nreg(I^({n})) = {reg}, delta(I) = {}", fraction_string(&delta_invariant(&c)?.delta));
    if let Some(w) = witness {
        let chamber = witness_chamber(&c, n, &w.alpha)?;
        println!(
            "alpha = {:?}: contracted complex {:?} on vertices {:?}, selected facets {:?}",
            w.alpha.coords(),
            chamber.complex.facet_lists(),
            chamber.kept_vertices,
            chamber.selected
        );
        if !chamber.selected.is_empty() {
            let c1 = chamber_polytope(&chamber.complex, &chamber.selected, 1)?;
            let d = delta_of(&c1).map(|d| fraction_string(&d.delta));
            println!("its C_1 is bounded: {}, delta = {:?}", c1.is_bounded(), d);
        }
    }
    Ok(())
}
