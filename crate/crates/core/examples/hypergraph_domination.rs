//! Hypergraph duals, edgewise domination ε, and the resulting regularity bound.

use symreg::cohomology::reg_symbolic;
use symreg::combinatorics::Hypergraph;
use symreg::exactalg::{fraction_string, FieldSpec};
use symreg::ideals::{pd_quotient_via_betti, MonomialIdeal};
use symreg::invariants::epsilon;
use symreg::polyhedra::delta_invariant;

fn main() -> symreg::Result<()> {
    let field = FieldSpec::rationals();
    let hypergraphs = [
        Hypergraph::from_lists(3, &[vec![1, 2], vec![2, 3]])?,
        Hypergraph::from_lists(4, &[vec![1, 2, 3], vec![3, 4]])?,
        Hypergraph::from_lists(3, &[vec![2], vec![1, 3]])?,
        Hypergraph::from_lists(5, &[vec![1, 2], vec![2, 3, 4], vec![4, 5], vec![1, 5]])?,
    ];
    for h in &hypergraphs {
        let dual = h.dual()?;
        let eps = epsilon(&dual)?;
        let ideal = MonomialIdeal::edge_ideal(h);
        let complex = ideal.complex_of();
        let delta = delta_invariant(&complex)?.delta;
        println!(
            "H = {:?}, H* = {:?}, eps(H*) = {} via {:?}",
            h.edge_lists(),
            dual.edge_lists(),
            eps.value,
            eps.witness
        );
        println!(
            "  pd(R/I(H)) = {}, delta = {}",
            pd_quotient_via_betti(&ideal, field)?,
            fraction_string(&delta)
        );
        for n in 1..=3u32 {
            let reg = reg_symbolic(&complex, n, field)?;
            let bound = &delta * symreg::exactalg::rational_int(n as i64 - 1)
                + symreg::exactalg::rational_int((h.r() - eps.value) as i64);
            println!("  n = {n}: reg = {reg} <= {}", fraction_string(&bound));
        }
    }
    Ok(())
}
