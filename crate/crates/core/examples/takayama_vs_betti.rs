//! reg(I^(n)) by local cohomology and again by multigraded Betti numbers.

use symreg::cohomology::{a_invariants, reg_symbolic_with_witness};
use symreg::combinatorics::SimplicialComplex;
use symreg::exactalg::{FieldSpec, HomologyCache};
use symreg::ideals::{betti_table, reg_via_betti, symbolic_power};

fn main() -> symreg::Result<()> {
    let field = FieldSpec::rationals();
    let pentagon = SimplicialComplex::from_lists(
        5,
        &[vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]],
    )?;

    for n in 1..=3 {
        let profile = a_invariants(&pentagon, n, field)?;
        let values: Vec<String> = profile.values().iter().map(|v| v.to_string()).collect();
        let (reg, witness) = reg_symbolic_with_witness(&pentagon, n, &mut HomologyCache::new(field))?;
        let ideal = symbolic_power(&pentagon, n)?;
        let betti = reg_via_betti(&ideal, field)?;
        println!("n = {n}: a-invariants [{}], reg = {reg}, via Betti = {betti}", values.join(", "));
        if let Some(w) = witness {
            println!("  attained at i = {} by alpha = {:?}", w.i, w.alpha.coords());
        }
    }

    let table = betti_table(&symbolic_power(&pentagon, 1)?, field)?;
    println!("Betti table of I (i, a, beta):\n{}", table.to_csv());
    Ok(())
}
