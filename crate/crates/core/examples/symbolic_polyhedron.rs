//! The symbolic polyhedron, its vertices, and δ.

use symreg::combinatorics::SimplicialComplex;
use symreg::exactalg::fraction_string;
use symreg::polyhedra::{delta_invariant, symbolic_polyhedron};

fn main() -> symreg::Result<()> {
    let complexes = [
        SimplicialComplex::from_lists(2, &[vec![1], vec![2]])?,
        SimplicialComplex::from_lists(3, &[vec![1, 3], vec![2]])?,
        SimplicialComplex::from_lists(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?,
        SimplicialComplex::from_lists(4, &[vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]])?,
    ];
    for c in &complexes {
        let p = symbolic_polyhedron(c)?;
        println!("{:?}", c.facet_lists());
        println!("{p}");
        for v in p.vertices() {
            let v: Vec<String> = v.iter().map(fraction_string).collect();
            println!("  vertex ({})", v.join(", "));
        }
        let d = delta_invariant(c)?;
        let w: Vec<String> = d.witness_vertex.iter().map(fraction_string).collect();
        println!("  delta = {} at ({})\n", fraction_string(&d.delta), w.join(", "));
    }
    Ok(())
}
