//! Symbolic powers of the Stanley-Reisner ideal of a path's independence complex, and contraction.

use symreg::combinatorics::{Graph, VertexSet};
use symreg::ideals::{contraction, stanley_reisner, symbolic_contains, symbolic_power};

fn main() -> symreg::Result<()> {
    let path = Graph::path(3).independence_complex();
    println!("complex: {:?}", path.facet_lists());
    println!("I = {:?}", stanley_reisner(&path)?.generators());

    for n in 1..=3 {
        let power = symbolic_power(&path, n)?;
        println!(
            "I^({n}): {} generators, d = {}: {:?}",
            power.generators().len(),
            power.max_gen_degree()?,
            power.generators()
        );
    }

    let a = [1, 2, 1];
    println!("x^{a:?} in I^(2): {}", symbolic_contains(&path, 2, &a));
    println!("x^{a:?} in I^(3): {}", symbolic_contains(&path, 3, &a));

    let j = contraction(&symbolic_power(&path, 2)?, VertexSet::of(&[3]))?;
    println!("I^(2) with x3 = 1: {:?} over variables {:?}", j.ideal.generators(), j.index_map);
    Ok(())
}
