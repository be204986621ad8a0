//! Matching numbers of small graphs against reg(I(G)^(n)) and the b-invariant.

use symreg::cohomology::reg_symbolic;
use symreg::combinatorics::Graph;
use symreg::exactalg::FieldSpec;
use symreg::invariants::{b_invariant, matching_numbers};

fn main() -> symreg::Result<()> {
    let field = FieldSpec::rationals();
    let graphs = [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("K4", Graph::complete(4)),
        ("bull", Graph::from_lists(5, &[vec![1, 2], vec![2, 3], vec![1, 3], vec![1, 4], vec![2, 5]])?),
    ];
    for (name, g) in &graphs {
        let m = matching_numbers(g);
        let complex = g.independence_complex();
        let b = b_invariant(&complex, field)?;
        println!(
            "{name}: match = {}, nu = {}, ordmatch = {} {:?}, b = {}",
            m.matching, m.induced, m.ordered, m.ordered_witness, b.value
        );
        for n in 1..=3u32 {
            let reg = reg_symbolic(&complex, n, field)?;
            let lower = 2 * n as usize + m.induced - 1;
            let upper = 2 * n as usize + m.ordered - 1;
            println!("  n = {n}: {lower} <= reg = {reg} <= {upper}");
        }
    }
    Ok(())
}
